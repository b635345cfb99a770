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
#include "oracle.hpp"

using namespace costrength;

namespace {

const FinSet S({"s0", "s1"});
const FinSet M({"m0", "m1"});
const FinSet X({"x", "y"});
const Universe U012 = Universe::of_sizes({0, 1, 2});
const Universe U0123 = Universe::of_sizes({0, 1, 2, 3});

/// The first cell whose codomain has at least two elements, corrupted.
template <class Family>
Family corrupt(const Family& f) {
  for (std::size_t g = 0; g < f.grades().size(); ++g) {
    for (std::size_t x = 0; x < f.objects().size(); ++x) {
      const FinFun& c = f.cell(g, x);
      if (c.dom().size() > 0 && c.cod().size() >= 2) {
        return f.with_cell(g, x, mutate_entry(c, 0));
      }
    }
  }
  FAIL("no cell to corrupt");
  return f;
}

}  // namespace

TEST_CASE("Writer costrength is the symmetry") {
  const Costrength c = writer_costrength(S, U012, U012);
  const FinFun cell = c.at(M, X);
  for (const auto& s : S.labels()) {
    for (const auto& m : M.labels()) {
      for (const auto& x : X.labels()) {
        CHECK(oracle::apply(cell, "(" + s + ",(" + m + "," + x + "))") ==
              "(" + m + ",(" + s + "," + x + "))");
      }
    }
  }
  CHECK(check_costrength(c).passed());
}

TEST_CASE("mutation: psi of a non-natural copoint is not a costrength") {
  // Sizes up to 4 cover every M x X and M x N the checker touches below.
  const Universe u = Universe::of_sizes({0, 1, 2, 4});
  std::vector<FinFun> comps;
  for (const auto& x : u.objects()) comps.push_back(proj2(S, x));
  comps[2] = mutate_entry(comps[2], 0);
  const NatFamily broken(writer(S), Functor::id(), u, comps);
  CHECK(check_natural(broken).failed());
  CHECK(check_costrength(psi(broken, Universe::of_sizes({0, 1}), U012)).failed());
}

TEST_CASE("property: the canonical strength is lawful and load-bearing") {
  oracle::Gen gen(31337);
  const Universe u = Universe::of_sizes({0, 1, 2});
  for (int trial = 0; trial < 12; ++trial) {
    const Functor f = gen.functor(1);
    INFO(f.to_string());
    const Strength st = canonical_strength(f, u, u);
    CHECK(check_strength(st).passed());
    bool corruptible = false;
    for (const auto& c : st.cells()) {
      corruptible |= c.dom().size() > 0 && c.cod().size() >= 2;
    }
    if (corruptible) CHECK(check_strength(corrupt(st)).failed());
  }
}

TEST_CASE("canonical strength of Maybe and Pow") {
  const Strength sm = canonical_strength(maybe(), U012, U012);
  const FinFun m = sm.at(M, X);
  CHECK(oracle::apply(m, "(m1,inl e0)") == "inl e0");
  CHECK(oracle::apply(m, "(m1,inr y)") == "inr (m1,y)");
  const Strength sp = canonical_strength(Functor::pow(Functor::id()), U012, U012);
  CHECK(oracle::apply(sp.at(M, X), "(m0,{x,y})") == "{(m0,x),(m0,y)}");
  CHECK(oracle::apply(sp.at(M, X), "(m0,{})") == "{}");
}

TEST_CASE("phi of the Writer costrength is the second projection") {
  const Copoint eps = phi(writer_costrength(S, U012, U012));
  for (std::size_t i = 0; i < U012.size(); ++i) {
    CHECK(eps.component(i) == proj2(S, U012[i]));
  }
}

TEST_CASE("psi of the second projection is the Writer costrength") {
  const auto eps = enumerate_nat(writer(S), Functor::id(), U012);
  REQUIRE(eps.size() == 1);
  CHECK(psi(eps[0], U012, U012).same_cells(writer_costrength(S, U012, U012)));
}

TEST_CASE("psi of evaluation at s0 for Reader") {
  const Universe u({initial(), terminal(), FinSet(2), S});
  const auto eps = enumerate_nat(reader(S), Functor::id(), u);
  REQUIRE(eps.size() == 2);
  for (const auto& e : eps) {
    const Costrength c = psi(extend_by_naturality(e), u, u);
    CHECK(check_costrength(c).passed());
    CHECK(phi(c).same_components(e));
    // [S, M x X] -> M x [S, X]: first coordinate read at the chosen point.
    const std::size_t point = e.component(3)(oracle::at(reader(S)(S), "fun{s0->s0,s1->s1}"));
    const FinFun cell = c.at(M, X);
    const std::string t = "fun{s0->(m0,x),s1->(m1,y)}";
    const std::string m = point == 0 ? "m0" : "m1";
    CHECK(oracle::apply(cell, t) == "(" + m + ",fun{s0->x,s1->y})");
  }
}

TEST_CASE("counts of cartesian costrengths") {
  const ActionModel cart = cartesian_action();
  const Universe ur({initial(), terminal(), FinSet(2), FinSet(3)});
  CHECK(enumerate_costrengths(reader(FinSet(2)), cart, ur, ur).size() == 2);
  CHECK(enumerate_costrengths(writer(FinSet(2)), cart, ur, ur).size() == 1);
  CHECK(enumerate_costrengths(maybe(), cart, ur, ur).empty());
  const auto cs = enumerate_costrengths(costate(FinSet(2)), cart, ur, ur);
  MESSAGE("Costate(2) has " << cs.size() << " cartesian costrengths");
  CHECK(cs.size() >= 2);
}

TEST_CASE("costrength counts match brute-force copoint counts") {
  const std::vector<Functor> fs = {Functor::id(), writer(FinSet(2)),
                                   reader(FinSet(2)), costate(FinSet(2)),
                                   Functor::prod(Functor::id(), maybe()),
                                   maybe()};
  for (const auto& f : fs) {
    INFO(f.to_string());
    const auto cs = enumerate_costrengths(f, cartesian_action(), U012, U012);
    CHECK(cs.size() == oracle::count_natural(f, Functor::id(), U012.objects()));
    for (const auto& c : cs) {
      // pi_2 . cst == F(pi_2), by table lookup.
      for (const auto& m : U012.objects()) {
        for (const auto& x : U012.objects()) {
          CHECK(oracle::after(proj2(m, f(x)), c.at(m, x)) == f(proj2(m, x)));
        }
      }
      CHECK(psi(phi(c), U012, U012).same_cells(c));
    }
  }
}

TEST_CASE("Const(1) over coproducts: only the right injection") {
  const Functor one = Functor::constant(terminal());
  const auto cs = enumerate_costrengths(one, cocartesian_action(), U012, U012);
  // Oracle: components 1 -> M + 1 natural in M.
  std::size_t count = 0;
  for (std::size_t c1 = 0; c1 < 2; ++c1) {
    for (std::size_t c2 = 0; c2 < 3; ++c2) {
      const std::vector<std::size_t> pick = {0, c1, c2};
      bool ok = true;
      for (std::size_t a = 0; a <= 2 && ok; ++a) {
        for (std::size_t b = 0; b <= 2 && ok; ++b) {
          for (const Table& g : oracle::all_tables(a, b)) {
            // (g + id) . c_a == c_b
            const std::size_t v = pick[a];
            const std::size_t moved = v < a ? g[v] : b;
            if (moved != pick[b]) ok = false;
          }
        }
      }
      count += ok;
    }
  }
  CHECK(count == 1);
  CHECK(cs.size() == count);
}

TEST_CASE("powerset over coproducts keeps the right part") {
  const Costrength c = powerset_cocart_costrength(U012, U012);
  const FinSet a({"a"}), x({"x"});
  const FinFun cell = c.at(a, x);
  CHECK(oracle::apply(cell, "{inl a,inr x}") == "inr {x}");
  CHECK(oracle::apply(cell, "{inl a}") == "inr {}");
  const FinFun big = c.at(M, X);
  CHECK(oracle::apply(big, "{inl m0,inl m1,inr x,inr y}") == "inr {x,y}");
  CHECK(check_costrength(c).passed());
  CHECK(check_costrength(corrupt(c)).failed());
}

TEST_CASE("filtrable costrengths") {
  const Costrength viaf = filtrable_costrength(
      Functor::pow(Functor::id()), powerset_filter(U012), U012, U012);
  CHECK(viaf.same_cells(powerset_cocart_costrength(U012, U012)));
  const Costrength mc = filtrable_costrength(maybe(), maybe_filter(U012), U012, U012);
  CHECK(check_costrength(mc).passed());
  const NatFamily bad = maybe_filter(U012).with_component(
      2, mutate_entry(maybe_filter(U012).component(2), 1));
  CHECK_THROWS_AS(filtrable_costrength(maybe(), bad, U012, U012),
                  PreconditionError);
}

TEST_CASE("Writer over coproducts projects onto the second component") {
  const Costrength c = writer_cocart_costrength(S, U012, U012);
  const FinFun cell = c.at(M, X);
  CHECK(oracle::apply(cell, "(s0,inl m1)") == "inl m1");
  CHECK(oracle::apply(cell, "(s1,inr x)") == "inr (s1,x)");
  CHECK(check_costrength(c).passed());
}

TEST_CASE("op-exponential costrength evaluates pointwise") {
  const FinSet s({"s"});
  const Costrength c = op_exponential_costrength(writer(s), U012, U012);
  CHECK(oracle::apply(c.at(M, X), "(s,fun{m0->x,m1->y})") ==
        "fun{m0->(s,x),m1->(s,y)}");
  const Costrength p =
      op_exponential_costrength(Functor::pow(Functor::id()), U012, U012);
  CHECK(oracle::apply(p.at(M, X), "{fun{m0->x,m1->y},fun{m0->y,m1->y}}") ==
        "fun{m0->{x,y},m1->{y}}");
  CHECK(check_costrength(c).passed());
  CHECK(check_costrength(corrupt(c)).failed());
  CHECK(op_exponential_mate_report(maybe(), U012, U012).passed());
}

TEST_CASE("copower family") {
  const NatFamily cm = copower_costrength(S, maybe(), U012);
  const FinSet x({"x"});
  CHECK(oracle::apply(cm.at(x), "(s0,inl e0)") == "inl e0");
  CHECK(oracle::apply(cm.at(x), "(s1,inr x)") == "inr (s1,x)");
  const NatFamily cp = copower_costrength(S, Functor::pow(Functor::id()), U012);
  CHECK(oracle::apply(cp.at(X), "(s0,{x,y})") == "{(s0,x),(s0,y)}");
  CHECK(copower_report(S, {Functor::id(), maybe(), Functor::pow(Functor::id())},
                       U012)
            .passed());
}

TEST_CASE("doctrinal mates of the Reader strength") {
  for (std::size_t n = 1; n <= 2; ++n) {
    const FinSet s(n);
    const AdjunctionModel adj = product_exponential_adjunction(s, U012);
    CHECK(check_adjunction(adj).passed());
    const Strength st = canonical_strength(reader(s), U012, U012);
    const Costrength left = mate_left(adj, st);
    CHECK(left.same_cells(writer_costrength(s, U012, U012)));
    CHECK(mate_right(adj, left).same_cells(st));
  }
}

TEST_CASE("uniqueness square is insensitive to corruption") {
  const Costrength c = writer_costrength(S, U012, U012);
  CHECK(check_uniqueness_squares(c).passed());
  // Both legs end in the terminal set, so any corruption still commutes.
  CHECK(check_uniqueness_squares(corrupt(c)).passed());
}

TEST_CASE("coproducts of costrong functors") {
  const Costrength w = writer_costrength(S, U012, U012);
  const Costrength sum = coproduct_costrong(w, w);
  CHECK(check_costrength(sum).passed());
  const auto [i1, i2] = coproduct_injections(writer(S), writer(S), U012);
  CHECK(check_costrong_nat(i1, w, sum).passed());
  CHECK(check_costrong_nat(i2, w, sum).passed());
  CHECK_THROWS_AS(coproduct_costrong(corrupt(w), w), PreconditionError);
}

TEST_CASE("costrong natural transformations") {
  const Costrength w = writer_costrength(S, U012, U012);
  const Costrength id = identity_costrength(cartesian_action(), U012, U012);
  const auto eps = enumerate_nat(writer(S), Functor::id(), U012);
  REQUIRE(eps.size() == 1);
  CHECK(check_costrong_nat(eps[0], w, id).passed());
  const NatFamily bad = eps[0].with_component(2, mutate_entry(eps[0].component(2), 0));
  CHECK(check_costrong_nat(bad, w, id).failed());
}

TEST_CASE("cofree copointed functors are costrong") {
  const auto [fm, em] = cofree_copointed(maybe(), U012);
  CHECK(fm == Functor::prod(Functor::id(), maybe()));
  CHECK(check_costrength(psi(em, U012, U012)).passed());
  const auto [fp, ep] = cofree_copointed(Functor::pow(Functor::id()), U012);
  CHECK(check_costrength(psi(ep, U012, U012)).passed());
}

TEST_CASE("comonads give costrong counits") {
  CHECK(check_comonad(writer_comonad(S), U012).passed());
  CHECK(comonad_costrength_report(writer_comonad(S), U012, U012).passed());
  CHECK(comonad_costrength_report(costate_comonad(FinSet(2)), U012, U012)
            .passed());
}

TEST_CASE("hom-set bijection") {
  const std::vector<Functor> fs = {writer(FinSet(2)), reader(FinSet(2))};
  for (const auto& f : fs) {
    for (std::size_t n = 0; n <= 2; ++n) {
      INFO(f.to_string() << " M0=" << n);
      const LawReport r = hom_bijection_report(FinSet(n), f, U0123, U0123);
      CHECK(r.passed());
    }
  }
  const LawReport w = hom_bijection_report(terminal(), writer(FinSet(2)), U0123, U0123);
  MESSAGE(w.to_text());
}

TEST_CASE("full round trip report for the catalogue functors") {
  const Universe ur({initial(), terminal(), FinSet(2), FinSet(3)});
  const LawReport r = roundtrip_report(writer(FinSet(2)), ur, ur);
  CHECK(r.passed());
  CHECK(r.count_of("copoints") == 1);
  CHECK(r.count_of("costrengths") == 1);
}
