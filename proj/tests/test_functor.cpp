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

#include "costrength/errors.hpp"
#include "costrength/functor.hpp"
#include "costrength/io.hpp"
#include "oracle.hpp"

using namespace costrength;

namespace {

const FinSet S({"s0", "s1"});

/// Evaluation at s0 as a family Reader(S) => Id; `point` picks the
/// evaluation point per object.
NatFamily evaluation_family(const Universe& u,
                            const std::function<std::size_t(std::size_t)>& point) {
  std::vector<FinFun> comps;
  for (std::size_t i = 0; i < u.size(); ++i) {
    comps.push_back(eval_at(S, u[i], point(i)));
  }
  return NatFamily(reader(S), Functor::id(), u, comps);
}

}  // namespace

TEST_CASE("object action of the named functors") {
  CHECK(maybe()(initial()).size() == 1);
  CHECK(writer(S)(FinSet({"x"})).size() == 2);
  CHECK(reader(S)(FinSet(3)).size() == 9);
  CHECK(costate(S)(FinSet(2)).size() == 8);
  CHECK(Functor::pow(Functor::id())(FinSet(3)).size() == 8);
  CHECK(Functor::constant(FinSet(5))(FinSet(0)).size() == 5);
}

TEST_CASE("Reader acts on maps by post-composition") {
  const FinSet x(2);
  const FinFun f(x, x, Table{1, 1});
  const FinFun rf = reader(S)(f);
  const auto tables = oracle::all_tables(S.size(), x.size());
  REQUIRE(rf.dom().size() == tables.size());
  for (std::size_t i = 0; i < tables.size(); ++i) {
    Table expected;
    for (std::size_t v : tables[i]) expected.push_back(f(v));
    CHECK(tables[rf(i)] == expected);
  }
}

TEST_CASE("property: functor laws for random expressions") {
  oracle::Gen gen(2026);
  const Universe u = Universe::of_sizes({0, 1, 2});
  for (int trial = 0; trial < 40; ++trial) {
    const Functor f = gen.functor(2);
    INFO(f.to_string());
    CHECK(check_functor_laws(f, u).passed());
    // Independent spot check of composition preservation.
    const FinSet a = gen.set(2), b = gen.nonempty_set(2), c = gen.nonempty_set(2);
    const FinFun g = gen.function(a, b), h = gen.function(b, c);
    CHECK(f(oracle::after(h, g)) == oracle::after(f(h), f(g)));
  }
}

TEST_CASE("property: printed expressions parse back") {
  oracle::Gen gen(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Functor f = gen.functor(3);
    CHECK(parse_functor(f.to_string()) == f);
  }
  CHECK(parse_functor("Writer(2)") == writer(FinSet(2)));
  CHECK(parse_functor("Prod(Id,Maybe)") ==
        Functor::prod(Functor::id(), maybe()));
}

TEST_CASE("evaluation at a fixed point is natural") {
  const Universe u({initial(), terminal(), FinSet({"x", "y"}), S});
  const LawReport r = check_natural(evaluation_family(u, [](std::size_t) {
    return std::size_t{0};
  }));
  CHECK(r.passed());
}

TEST_CASE("evaluation at varying points is not natural") {
  const Universe u({FinSet({"x", "y"}), S});
  const NatFamily fam =
      evaluation_family(u, [](std::size_t i) { return i == 0 ? 0U : 1U; });
  const LawReport r = check_natural(fam);
  CHECK(r.failed());
  REQUIRE(r.first_failure() != nullptr);
  CHECK_FALSE(r.first_failure()->counterexample.empty());
  CHECK_FALSE(oracle::natural(reader(S), Functor::id(), u.objects(),
                              fam.components()));
}

TEST_CASE("copoints of Writer: only the second projection") {
  const Universe u({initial(), terminal(), FinSet({"x", "y"})});
  const auto fams = enumerate_nat(writer(S), Functor::id(), u);
  REQUIRE(fams.size() == 1);
  for (std::size_t i = 0; i < u.size(); ++i) {
    CHECK(fams[0].component(i) == proj2(S, u[i]));
  }
}

TEST_CASE("Maybe has no copoint once the empty set is an object") {
  CHECK(enumerate_nat(maybe(), Functor::id(), Universe::of_sizes({0, 1, 2}))
            .empty());
  // Over a single one-element object "nothing" may go to the point.
  CHECK(enumerate_nat(maybe(), Functor::id(), Universe::of_sizes({1})).size() ==
        1);
}

TEST_CASE("copoints of Reader(S) with S in the universe") {
  const Universe u({initial(), terminal(), FinSet({"x", "y"}), S});
  CHECK(enumerate_nat(reader(S), Functor::id(), u).size() == 2);
}

TEST_CASE("enumerate_nat agrees with brute force") {
  const std::vector<std::pair<Functor, Functor>> cases = {
      {writer(FinSet(2)), Functor::id()},
      {reader(FinSet(2)), Functor::id()},
      {costate(FinSet(2)), Functor::id()},
      {maybe(), Functor::id()},
      {Functor::id(), maybe()},
      {Functor::prod(Functor::id(), Functor::id()), Functor::id()},
      {Functor::id(), Functor::prod(Functor::id(), Functor::id())},
      {maybe(), maybe()},
  };
  const Universe u = Universe::of_sizes({0, 1, 2});
  for (const auto& [src, tgt] : cases) {
    INFO(src.to_string() << " => " << tgt.to_string());
    const auto fams = enumerate_nat(src, tgt, u);
    CHECK(fams.size() == oracle::count_natural(src, tgt, u.objects()));
    for (const auto& f : fams) {
      CHECK(oracle::natural(src, tgt, u.objects(), f.components()));
    }
  }
}

TEST_CASE("search budget is enforced") {
  CHECK_THROWS_AS(enumerate_nat(costate(FinSet(2)), Functor::id(),
                                Universe::of_sizes({0, 1, 2, 3}),
                                SearchBudget{3}),
                  ResourceError);
}

TEST_CASE("extension by naturality reaches objects outside the universe") {
  const Universe u = Universe::of_sizes({0, 1, 2});
  const auto fams = enumerate_nat(writer(S), Functor::id(), u);
  REQUIRE(fams.size() == 1);
  const NatFamily ext = extend_by_naturality(fams[0]);
  const FinSet big({"p", "q", "r", "t"});
  CHECK(ext.at(big) == proj2(S, big));
}

TEST_CASE("extension detects families with no natural extension") {
  const Universe u = Universe::of_sizes({0, 1, 2});
  const NatFamily broken(writer(S), Functor::id(), u,
                         {proj2(S, u[0]), proj2(S, u[1]),
                          mutate_entry(proj2(S, u[2]), 0)});
  CHECK_FALSE(oracle::natural(writer(S), Functor::id(), u.objects(),
                              broken.components()));
  CHECK_THROWS_AS(extend_by_naturality(broken).at(FinSet(3)), StructuralError);
}
