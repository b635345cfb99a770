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
#include "costrength/io.hpp"
#include "costrength/optics.hpp"
#include "costrength/streams.hpp"
#include "oracle.hpp"

using namespace costrength;

TEST_CASE("functor grammar") {
  CHECK(parse_functor("Id") == Functor::id());
  CHECK(parse_functor(" Comp( Maybe , Pow(Id) ) ") ==
        Functor::comp(maybe(), Functor::pow(Functor::id())));
  CHECK(parse_functor("Exp({a,b},Const(3))") ==
        Functor::exp(FinSet({"a", "b"}), Functor::constant(FinSet(3))));
  CHECK(parse_functor("Costate(2)") == costate(FinSet(2)));
  CHECK(parse_set("{(a,b),c}").size() == 2);
  CHECK(parse_set("0").size() == 0);
}

TEST_CASE("functor parse errors carry positions") {
  try {
    parse_functor("Prod(Id,\n  Mabye)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_functor("Prod(Id)"), ParseError);
  CHECK_THROWS_AS(parse_functor("Id junk"), ParseError);
  CHECK_THROWS_AS(parse_universe("0,x"), ParseError);
}

TEST_CASE("JSON syntax errors carry positions") {
  try {
    parse_json("{\n  \"a\": [1, 2,\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("sets and functions round trip") {
  CHECK(set_from_json(Json(3)) == FinSet(3));
  CHECK(set_from_json(Json::array({"a", "b"})) == FinSet({"a", "b"}));
  CHECK(set_to_json(FinSet(2)) == Json(2));
  const FinFun f(FinSet({"a", "b"}), FinSet({"x", "y", "z"}), Table{2, 0});
  CHECK(function_from_json(function_to_json(f)) == f);
  const Json by_label = {{"dom", {"a", "b"}}, {"cod", {"x", "y", "z"}},
                         {"table", {"z", "x"}}};
  CHECK(function_from_json(by_label) == f);
  const Json bad = {{"dom", 2}, {"cod", 2}, {"table", {0, 5}}};
  CHECK_THROWS(function_from_json(bad));
}

TEST_CASE("automata and optics round trip") {
  const FinSet q(3), ab({"a", "b"});
  const StreamAutomaton a(q, ab, FinFun(q, ab, Table{0, 1, 1}),
                          FinFun(q, q, Table{1, 2, 0}));
  const StreamAutomaton back = automaton_from_json(automaton_to_json(a));
  CHECK(back.out == a.out);
  CHECK(back.next == a.next);

  const OpticRep o = lens_optic(FinFun(FinSet(2), FinSet(2), Table{1, 0}),
                                proj1(FinSet(2), FinSet(2)), FinSet(2));
  const OpticRep ob = optic_from_json(optic_to_json(o));
  CHECK(ob.fwd == o.fwd);
  CHECK(ob.bwd == o.bwd);
  CHECK(ob.action.name == "cart");
}

TEST_CASE("families round trip") {
  const Universe u = Universe::of_sizes({0, 1, 2});
  const Costrength c = writer_costrength(FinSet(2), u, u);
  const Json j = family_to_json(c);
  CHECK(j["direction"] == "costrength");
  const Costrength back = costrength_from_json(j);
  CHECK(back.same_cells(c));
  CHECK(check_costrength(back).passed());
  const Strength st = canonical_strength(maybe(), u, u);
  CHECK(strength_from_json(family_to_json(st)).same_cells(st));
}

TEST_CASE("up-to systems from JSON") {
  const Json j = {{"carrier", {"x0", "x1"}},
                  {"alphabet", {"a", "b"}},
                  {"functor", "Prod(Id,Id)"},
                  {"copoint", 0},
                  {"phi", {"(a,(x0,x1))", "(b,(x1,x0))"}}};
  const UpToSystem s = upto_from_json(j, Universe::of_sizes({0, 1, 2}));
  CHECK(s.carrier.size() == 2);
  const StreamAutomaton sol = solve_up_to(s);
  CHECK(sol.states.size() == 2);
  Json bad = j;
  bad["copoint"] = 7;
  CHECK_THROWS(upto_from_json(bad, Universe::of_sizes({0, 1, 2})));
}

TEST_CASE("reports serialise to JSON") {
  LawReport r = LawReport::pass("outer");
  r.add(LawReport::fail("inner", {{"x", "1"}}));
  r.count("n", 3);
  const Json j = r.to_json();
  CHECK(j["status"] == "fail");
  CHECK(j["parts"][0]["counterexample"]["x"] == "1");
  CHECK(j["counts"]["n"] == 3);
  CHECK(r.first_failure()->law == "inner");
}
