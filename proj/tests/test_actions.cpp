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

#include "costrength/actions.hpp"
#include "costrength/errors.hpp"
#include "oracle.hpp"

using namespace costrength;

namespace {

bool has_failed_part(const LawReport& r, const std::string& needle) {
  if (r.failed() && r.law.find(needle) != std::string::npos) return true;
  for (const auto& p : r.parts) {
    if (has_failed_part(p, needle)) return true;
  }
  return false;
}

constexpr std::size_t kF = 0, kS = 1, kM = 2;

}  // namespace

TEST_CASE("acted sets have the expected sizes") {
  const ActionModel cart = cartesian_action();
  const ActionModel cocart = cocartesian_action();
  const ActionModel opexp = op_exponential_action();
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t x = 0; x <= 3; ++x) {
      CHECK(cart.act(FinSet(m), FinSet(x)).size() == m * x);
      CHECK(cocart.act(FinSet(m), FinSet(x)).size() == m + x);
      CHECK(opexp.act(FinSet(m), FinSet(x)).size() == oracle::power(x, m));
    }
  }
  CHECK(cart.unit.size() == 1);
  CHECK(cocart.unit.size() == 0);
  CHECK(opexp.unit.size() == 1);
}

TEST_CASE("lookup by name") {
  CHECK(action_by_name("cart").name == "cart");
  CHECK(action_by_name("op-exp").variance == Variance::kContravariant);
  CHECK_THROWS_AS(action_by_name("tensor"), StructuralError);
}

TEST_CASE("the three actions are coherent") {
  const Universe u = Universe::of_sizes({0, 1, 2});
  CHECK(check_action_coherence(cartesian_action(), u, u).passed());
  CHECK(check_action_coherence(cocartesian_action(), u, u).passed());
  CHECK(check_action_coherence(op_exponential_action(), u,
                               Universe::of_sizes({0, 1, 2}))
            .passed());
}

TEST_CASE("cartesian unitor drops the unit coordinate") {
  const ActionModel a = cartesian_action();
  const FinSet x({"x", "y"});
  const FinFun l = a.unitor(x);
  CHECK(oracle::apply(l, "(e0,y)") == "y");
}

TEST_CASE("mutation: a corrupted associator breaks the pentagon") {
  ActionModel a = cartesian_action();
  const auto original = a.associator;
  a.associator = [original](const FinSet& m, const FinSet& n, const FinSet& x) {
    FinFun f = original(m, n, x);
    if (m.size() == 2 && n.size() == 2 && x.size() == 2) {
      Table t = f.table();
      std::swap(t[0], t[1]);
      f = FinFun(f.dom(), f.cod(), t);
    }
    return f;
  };
  const Universe u = Universe::of_sizes({1, 2});
  const LawReport r = check_action_coherence(a, u, u);
  CHECK(r.failed());
  CHECK(has_failed_part(r, "pentagon"));
}

TEST_CASE("graded Maybe multiplication table") {
  const GradedMonad g = maybe_graded_monad();
  REQUIRE(g.grades.elements == std::vector<std::string>{"f", "s", "m"});
  CHECK(g.grades.mult[kM][kF] == kF);
  CHECK(g.grades.unit == kS);
  for (std::size_t x = 0; x < 3; ++x) {
    CHECK(g.grades.mult[kS][x] == x);
    CHECK(g.grades.mult[x][kS] == x);
  }
  CHECK(g.grades.check().passed());
}

TEST_CASE("graded Maybe comparison at (m, f) is not invertible") {
  const GradedMonad g = maybe_graded_monad();
  const FinFun c = g.mult(kM, kF, FinSet({"x"}));
  // Maybe(1) has two elements and T(f) X has one.
  CHECK(c.dom().size() == 2);
  CHECK(c.cod().size() == 1);
  CHECK_FALSE(c.is_bijective());
  CHECK_FALSE(mult_is_iso(g, kM, kF, Universe::of_sizes({0, 1, 2})));
  CHECK(mult_is_iso(g, kS, kM, Universe::of_sizes({0, 1, 2})));
}

TEST_CASE("graded Maybe is lax monoidal") {
  const LawReport r = check_graded_laws(maybe_graded_monad(),
                                        Universe::of_sizes({0, 1, 2}));
  CHECK(r.passed());
  CHECK(check_graded_laws(identity_graded_monad(), Universe::of_sizes({0, 1, 2}))
            .passed());
}

TEST_CASE("mutation: a corrupted unit fails the graded laws") {
  GradedMonad g = maybe_graded_monad();
  g.unit = [](const FinSet& x) {
    return x.size() == 2 ? FinFun(x, x, Table{1, 0}) : identity(x);
  };
  CHECK(check_graded_laws(g, Universe::of_sizes({0, 1, 2})).failed());
}

TEST_CASE("grade arrows respect variance") {
  const ActionModel cart = cartesian_action();
  const ActionModel opexp = op_exponential_action();
  CHECK(cart.grade_arrows(FinSet(2), FinSet(3)).size() == 9);
  CHECK(opexp.grade_arrows(FinSet(2), FinSet(3)).size() == 8);
}
