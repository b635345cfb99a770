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

#include <set>

#include "costrength/errors.hpp"
#include "costrength/finset.hpp"
#include "oracle.hpp"

using namespace costrength;

namespace {
const FinSet ab({"a", "b"});
const FinSet xy({"x", "y"});
const FinSet xyz({"x", "y", "z"});
}  // namespace

TEST_CASE("product enumerates pairs first-component-major") {
  const FinSet p = product(ab, xy);
  CHECK(p.size() == 4);
  CHECK(proj2(ab, xy).table() == Table{0, 1, 0, 1});
  CHECK(proj1(ab, xy).table() == Table{0, 0, 1, 1});
  CHECK(p.label(1) == "(a,y)");
}

TEST_CASE("coproduct places the right summand after the left") {
  const FinSet c = coproduct(ab, FinSet({"x"}));
  CHECK(c.size() == 3);
  CHECK(inr(ab, FinSet({"x"})).table() == Table{2});
  CHECK(inl(ab, FinSet({"x"})).table() == Table{0, 1});
}

TEST_CASE("evaluation at a point of an exponential") {
  CHECK(eval_at(ab, FinSet(2), 0).table() == Table{0, 0, 1, 1});
  CHECK(eval_at(ab, FinSet(2), 1).table() == Table{0, 1, 0, 1});
  CHECK(exponential(FinSet(0), FinSet(0)).size() == 1);
  CHECK(exponential(FinSet(2), FinSet(0)).size() == 0);
}

TEST_CASE("powerset is bitmask ordered") {
  const FinSet p = powerset(ab);
  REQUIRE(p.size() == 4);
  CHECK(p.label(0) == "{}");
  CHECK(p.label(3) == "{a,b}");
  CHECK(subset_contains(2, 1));
  CHECK_FALSE(subset_contains(2, 0));
}

TEST_CASE("all_functions counts |B|^|A|") {
  CHECK(all_functions(ab, xyz).size() == 9);
  std::set<Table> seen;
  for (const FinFun& f : all_functions(ab, xyz)) seen.insert(f.table());
  CHECK(seen.size() == 9);
  CHECK(all_functions(FinSet(0), FinSet(0)).size() == 1);
  CHECK(all_functions(FinSet(1), FinSet(0)).size() == 0);
  for (std::size_t a = 0; a <= 3; ++a) {
    for (std::size_t b = 0; b <= 3; ++b) {
      CHECK(function_count(FinSet(a), FinSet(b)) == oracle::power(b, a));
    }
  }
}

TEST_CASE("function_at agrees with decode_function") {
  for (std::size_t i = 0; i < 9; ++i) {
    const FinFun f = function_at(ab, xyz, i);
    CHECK(f.table() == decode_function(i, 2, 3));
    CHECK(encode_function(f.table(), 3) == i);
  }
}

TEST_CASE("labels compare sets") {
  CHECK(FinSet(2) == FinSet(std::vector<std::string>{"e0", "e1"}));
  CHECK_FALSE(ab == xy);
  CHECK(ab.index_of("b") == 1U);
  CHECK_FALSE(ab.index_of("c").has_value());
}

TEST_CASE("FinFun rejects ill-typed tables") {
  CHECK_THROWS_AS(FinFun(ab, xy, Table{0}), StructuralError);
  CHECK_THROWS_AS(FinFun(ab, xy, Table{0, 2}), StructuralError);
  CHECK_THROWS_AS(compose(identity(ab), identity(xy)), StructuralError);
}

TEST_CASE("size cap raises ResourceError") {
  ScopedSizeCap cap(10);
  CHECK_THROWS_AS(product(FinSet(4), FinSet(4)), ResourceError);
  CHECK(product(FinSet(2), FinSet(5)).size() == 10);
}

TEST_CASE("property: composition is associative and unital") {
  oracle::Gen gen(0xC0FFEE);
  for (int trial = 0; trial < 300; ++trial) {
    const FinSet a = gen.set(4), b = gen.nonempty_set(4),
                 c = gen.nonempty_set(4), d = gen.nonempty_set(4);
    const FinFun f = gen.function(a, b), g = gen.function(b, c),
                 h = gen.function(c, d);
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    CHECK(compose(f, identity(a)) == f);
    CHECK(compose(identity(b), f) == f);
    CHECK(compose(g, f) == oracle::after(g, f));
  }
}

TEST_CASE("property: universal properties of products and coproducts") {
  oracle::Gen gen(17);
  for (int trial = 0; trial < 200; ++trial) {
    const FinSet z = gen.set(3), a = gen.nonempty_set(3),
                 b = gen.nonempty_set(3);
    const FinFun f = gen.function(z, a), g = gen.function(z, b);
    const FinFun p = pair(f, g);
    CHECK(compose(proj1(a, b), p) == f);
    CHECK(compose(proj2(a, b), p) == g);

    const FinSet c = gen.nonempty_set(3);
    const FinFun h = gen.function(a, c), k = gen.function(b, c);
    const FinFun cp = copair(h, k);
    CHECK(compose(cp, inl(a, b)) == h);
    CHECK(compose(cp, inr(a, b)) == k);

    // Mediators are unique: rebuilding from projections gives the same map.
    const FinFun w = gen.function(z, product(a, b));
    CHECK(pair(compose(proj1(a, b), w), compose(proj2(a, b), w)) == w);
  }
}

TEST_CASE("property: functoriality of the set constructions") {
  oracle::Gen gen(99);
  for (int trial = 0; trial < 200; ++trial) {
    const FinSet a = gen.set(3), b = gen.nonempty_set(3),
                 c = gen.nonempty_set(3), s = gen.set(2);
    const FinFun f = gen.function(a, b), g = gen.function(b, c);
    CHECK(powerset_map(compose(g, f)) ==
          compose(powerset_map(g), powerset_map(f)));
    CHECK(powerset_map(identity(a)) == identity(powerset(a)));
    CHECK(exponential_map(s, compose(g, f)) ==
          compose(exponential_map(s, g), exponential_map(s, f)));
    CHECK(product_map(g, f) ==
          pair(compose(g, proj1(b, a)), compose(f, proj2(b, a))));
  }
}

TEST_CASE("property: structural isomorphisms are bijections") {
  for (std::size_t a = 0; a <= 2; ++a) {
    for (std::size_t b = 0; b <= 2; ++b) {
      for (std::size_t c = 0; c <= 2; ++c) {
        const FinSet A(a), B(b), C(c);
        CHECK(product_associator(A, B, C).is_bijective());
        CHECK(coproduct_associator(A, B, C).is_bijective());
        CHECK(curry_iso(A, B, C).is_bijective());
      }
      const FinFun sym = product_symmetry(FinSet(a), FinSet(b));
      CHECK(compose(product_symmetry(FinSet(b), FinSet(a)), sym) ==
            identity(product(FinSet(a), FinSet(b))));
    }
  }
}

TEST_CASE("inverse and mutate_entry") {
  const FinFun swap(ab, ab, Table{1, 0});
  CHECK(compose(swap.inverse(), swap) == identity(ab));
  CHECK_THROWS(FinFun(ab, xyz, Table{0, 0}).inverse());
  const FinFun f(ab, xyz, Table{0, 2});
  const FinFun m = mutate_entry(f, 1);
  CHECK(m != f);
  CHECK(first_difference(f, m) == 1U);
  CHECK_FALSE(first_difference(f, f).has_value());
}
