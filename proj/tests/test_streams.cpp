/* Copyright 2026 The costrength-lab Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "costrength/costrength.hpp"
#include "costrength/errors.hpp"
#include "costrength/streams.hpp"
#include "oracle.hpp"

using namespace costrength;

namespace {

const FinSet AB({"a", "b"});
const Universe U012 = Universe::of_sizes({0, 1, 2});

/// Letters prefix . cycle^omega, first n of them.
std::vector<std::size_t> unroll(const std::vector<std::size_t>& prefix,
                                const std::vector<std::size_t>& cycle,
                                std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i < prefix.size() ? prefix[i]
                                    : cycle[(i - prefix.size()) % cycle.size()]);
  }
  return out;
}

/// Outputs along the orbit, by direct iteration.
std::vector<std::size_t> run(const StreamAutomaton& a, std::size_t s,
                             std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(a.out(s));
    s = a.next(s);
  }
  return out;
}

StreamAutomaton random_automaton(oracle::Gen& gen, std::size_t states,
                                 const FinSet& alphabet) {
  const FinSet q(states);
  return StreamAutomaton(q, alphabet, gen.function(q, alphabet),
                         gen.function(q, q));
}

StreamAutomaton flip_flop() {
  const FinSet q({"p", "q"});
  return StreamAutomaton(q, AB, FinFun(q, AB, Table{0, 1}),
                         FinFun(q, q, Table{1, 0}));
}

Copoint extended(const Functor& f, std::size_t i) {
  return extend_by_naturality(enumerate_nat(f, Functor::id(), U012).at(i));
}

}  // namespace

TEST_CASE("flip-flop behaves like (ab)^omega") {
  const StreamAutomaton a = flip_flop();
  const Lasso l = behavior_lasso(a, 0);
  CHECK(l.prefix.empty());
  CHECK(l.cycle == std::vector<std::size_t>{0, 1});
  CHECK(l.to_string(AB) == "| a b");
  CHECK(behavior_lasso(a, 1).cycle == std::vector<std::size_t>{1, 0});
}

TEST_CASE("property: lassos are canonical") {
  oracle::Gen gen(4242);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = gen.word(gen.between(0, 4), 2);
    const auto c = gen.word(gen.between(1, 4), 2);
    const Lasso l = Lasso::make(p, c);
    CHECK(l.expand(40) == unroll(p, c, 40));
    // Other presentations of the same stream.
    auto p2 = p;
    p2.insert(p2.end(), c.begin(), c.end());
    CHECK(Lasso::make(p2, c) == l);
    auto c2 = c;
    c2.insert(c2.end(), c.begin(), c.end());
    CHECK(Lasso::make(p, c2) == l);
    auto p3 = p;
    p3.push_back(c[0]);
    std::vector<std::size_t> c3(c.begin() + 1, c.end());
    c3.push_back(c[0]);
    CHECK(Lasso::make(p3, c3) == l);
    // Minimal: the cycle is not a power of a shorter word.
    for (std::size_t d = 1; d < l.cycle.size(); ++d) {
      if (l.cycle.size() % d) continue;
      bool periodic = true;
      for (std::size_t i = d; i < l.cycle.size(); ++i) {
        periodic &= l.cycle[i] == l.cycle[i - d];
      }
      CHECK_FALSE(periodic);
    }
    CHECK(l.tail().cons(l.head()) == l);
    const auto longer = unroll(p, c, 21);
    CHECK(l.tail().expand(20) ==
          std::vector<std::size_t>(longer.begin() + 1, longer.end()));
  }
}

TEST_CASE("property: behaviour agrees with direct iteration") {
  oracle::Gen gen(77);
  for (int trial = 0; trial < 200; ++trial) {
    const StreamAutomaton a = random_automaton(gen, gen.between(1, 5), AB);
    for (std::size_t s = 0; s < a.states.size(); ++s) {
      CHECK(behavior(a, s, 30) == run(a, s, 30));
      CHECK(behavior_lasso(a, s).expand(30) == run(a, s, 30));
    }
  }
}

TEST_CASE("lifting along the Writer costrength") {
  const FinSet s({"s0", "s1"});
  const StreamAutomaton a = flip_flop();
  const Costrength c = writer_costrength(s, U012, Universe({AB}));
  const StreamAutomaton l = lift(a, c);
  for (const auto& sl : s.labels()) {
    for (const auto& q : a.states.labels()) {
      const std::string st = "(" + sl + "," + q + ")";
      CHECK(oracle::apply(l.out, st) == oracle::apply(a.out, q));
      CHECK(oracle::apply(l.next, st) ==
            "(" + sl + "," + oracle::apply(a.next, q) + ")");
      CHECK(behavior_lasso(l, oracle::at(l.states, st)) ==
            behavior_lasso(a, oracle::at(a.states, q)));
    }
  }
}

TEST_CASE("property: extraction semantics for Writer and Costate lifts") {
  oracle::Gen gen(1234);
  const std::vector<Functor> fs = {writer(FinSet(2)), costate(FinSet(2))};
  for (const auto& f : fs) {
    const std::size_t copoints =
        enumerate_nat(f, Functor::id(), U012).size();
    for (std::size_t i = 0; i < copoints; ++i) {
      const Costrength c = psi(extended(f, i), U012, Universe({AB}));
      for (int trial = 0; trial < 40; ++trial) {
        const StreamAutomaton a = random_automaton(gen, gen.between(1, 4), AB);
        const LawReport r = extraction_semantics_report(a, c);
        INFO(f.to_string() << " copoint " << i << "\n" << r.to_text());
        CHECK(r.passed());
        // Oracle: the lifted state w behaves like eps(w).
        const StreamAutomaton l = lift(a, c);
        const FinFun eps = extended(f, i).at(a.states);
        for (std::size_t w = 0; w < l.states.size(); ++w) {
          CHECK(run(l, w, 25) == run(a, eps(w), 25));
        }
      }
    }
  }
}

TEST_CASE("lift rejects broken costrengths and other actions") {
  const StreamAutomaton a = flip_flop();
  const Costrength c = writer_costrength(FinSet(2), U012, Universe({AB}));
  const Costrength bad = c.with_cell(0, 2, mutate_entry(c.cell(0, 2), 0));
  CHECK_THROWS_AS(lift(a, bad), PreconditionError);
  const Costrength cocart =
      writer_cocart_costrength(FinSet(2), U012, Universe({AB}));
  CHECK_THROWS_AS(lift(a, cocart), PreconditionError);
}

TEST_CASE("minimisation and morphism preservation") {
  // Four states unrolling the flip-flop twice.
  const FinSet q(4);
  const StreamAutomaton a(q, AB, FinFun(q, AB, Table{0, 1, 0, 1}),
                          FinFun(q, q, Table{1, 2, 3, 0}));
  const auto [m, h] = minimize(a);
  CHECK(m.states.size() == 2);
  CHECK_FALSE(coalgebra_morphism_failure(a, m, h).has_value());
  for (std::size_t s = 0; s < 4; ++s) {
    CHECK(behavior_lasso(a, s) == behavior_lasso(m, h(s)));
  }
  const Costrength c = writer_costrength(FinSet(2), Universe::of_sizes({0, 1, 2, 4}),
                                         Universe({AB}));
  CHECK(morphism_preservation_report(a, m, h, c).passed());

  const FinFun not_morphism(q, m.states, Table{0, 0, 0, 0});
  CHECK(coalgebra_morphism_failure(a, m, not_morphism).has_value());
  CHECK_THROWS_AS(morphism_preservation_report(a, m, not_morphism, c),
                  PreconditionError);
}

namespace {

/// x0 -> (a, (x0, x1)), x1 -> (b, (x1, x0)) for F = X x X.
UpToSystem pair_system(const Copoint& eps) {
  const Functor f = Functor::prod(Functor::id(), Functor::id());
  const FinSet x({"x0", "x1"});
  const FinSet cod = product(AB, f(x));
  const FinFun phi(x, cod, Table{oracle::at(cod, "(a,(x0,x1))"),
                                 oracle::at(cod, "(b,(x1,x0))")});
  return UpToSystem{x, AB, f, eps, phi};
}

Copoint projection(bool first) {
  const Functor f = Functor::prod(Functor::id(), Functor::id());
  const FinSet two(2);
  for (const auto& c : enumerate_nat(f, Functor::id(), U012)) {
    const FinFun want = first ? proj1(two, two) : proj2(two, two);
    if (c.component(2) == want) return extend_by_naturality(c);
  }
  FAIL("projection not enumerated");
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("up-to solutions depend on the copoint") {
  const UpToSystem s1 = pair_system(projection(true));
  const UpToSystem s2 = pair_system(projection(false));
  const StreamAutomaton a1 = solve_up_to(s1);
  const StreamAutomaton a2 = solve_up_to(s2);
  // Oracle: follow phi and the chosen projection by hand.
  CHECK(behavior(a1, 0, 6) == std::vector<std::size_t>{0, 0, 0, 0, 0, 0});
  CHECK(behavior(a2, 0, 6) == std::vector<std::size_t>{0, 1, 0, 1, 0, 1});
  CHECK(behavior_lasso(a1, 0) != behavior_lasso(a2, 0));

  for (const UpToSystem* s : {&s1, &s2}) {
    const StreamAutomaton sol = solve_up_to(*s);
    std::vector<Lasso> b;
    for (std::size_t x = 0; x < 2; ++x) b.push_back(behavior_lasso(sol, x));
    CHECK(bartels_report(*s, b).passed());
    std::swap(b[0], b[1]);
    CHECK(bartels_report(*s, b).failed());
    const LawReport u = up_to_uniqueness_report(*s);
    CHECK(u.passed());
    // |M|^|X| * |X|^|X| candidate automata.
    CHECK(u.count_of("automata_searched") == 4 * 4);
  }
}

TEST_CASE("up-to uniqueness respects its cap") {
  CHECK_THROWS_AS(up_to_uniqueness_report(pair_system(projection(true)), 10),
                  ResourceError);
}
