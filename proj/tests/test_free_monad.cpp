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
#include "costrength/free_monad.hpp"
#include "oracle.hpp"

using namespace costrength;

namespace {

const FinSet Sone({"s"});
const Universe U012 = Universe::of_sizes({0, 1, 2});

/// Replaces every Var(v) in a term label by the label subst(v).
std::string substitute(const std::string& term,
                       const std::function<std::string(const std::string&)>& subst) {
  std::string out;
  std::size_t i = 0;
  while (i < term.size()) {
    if (term.compare(i, 4, "Var(") == 0) {
      std::size_t depth = 1, j = i + 4;
      while (depth > 0) {
        depth += term[j] == '(' ? 1 : term[j] == ')' ? -1 : 0;
        ++j;
      }
      out += subst(term.substr(i + 4, j - i - 5));
      i = j;
    } else {
      out += term[i++];
    }
  }
  return out;
}

/// |T_d X| = |X| + |F(T_{d-1} X)| with |T_0 X| = |X|.
std::size_t term_count(const Functor& f, std::size_t x, std::size_t d) {
  std::size_t n = x;
  for (std::size_t i = 1; i <= d; ++i) n = x + f(FinSet(n)).size();
  return n;
}

}  // namespace

TEST_CASE("terms of Writer over one variable") {
  const TermMonad t(writer(Sone), 3);
  const FinSet t1 = t.build_terms(FinSet({"x"}), 1);
  CHECK(t1.labels() == std::vector<std::string>{"Var(x)", "Op((s,Var(x)))"});
  CHECK(t.build_terms(FinSet({"x"}), 0).labels() ==
        std::vector<std::string>{"x"});
}

TEST_CASE("term counts follow the size recursion") {
  const TermMonad t(maybe(), 3);
  // 1 variable, one constant, and Just of every depth-1 term.
  CHECK(t.build_terms(FinSet({"x"}), 2).size() == 5);
  CHECK(term_count(maybe(), 1, 2) == 5);
  oracle::Gen gen(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Functor f = gen.functor(1);
    const TermMonad tm(f, 2);
    for (std::size_t x = 0; x <= 2; ++x) {
      for (std::size_t d = 0; d <= 2; ++d) {
        try {
          CHECK(tm.terms(d)(FinSet(x)).size() == term_count(f, x, d));
        } catch (const ResourceError&) {
          // Sizes past the cap are not part of this check.
        }
      }
    }
  }
  CHECK_THROWS_AS(t.terms(4), PreconditionError);
}

TEST_CASE("cst^T pulls the grade out through every layer") {
  const TermMonad t(writer(Sone), 3);
  const Costrength c = writer_costrength(Sone, U012, U012);
  const FinSet m({"m0", "m1"}), x({"x", "y"});
  for (std::size_t d = 1; d <= 2; ++d) {
    const FinFun raw = free_costrength_component(t, c, m, x, d);
    const FinFun cst(t.build_terms(product(m, x), d),
                     product(m, t.build_terms(x, d)), raw.table());
    CHECK(oracle::apply(cst, "Op((s,Var((m1,y))))") == "(m1,Op((s,Var(y))))");
    CHECK(oracle::apply(cst, "Var((m0,x))") == "(m0,Var(x))");
    if (d == 2) {
      CHECK(oracle::apply(cst, "Op((s,Op((s,Var((m1,x))))))") ==
            "(m1,Op((s,Op((s,Var(x))))))");
    }
  }
}

TEST_CASE("constant functors have no cartesian costrength") {
  CHECK(enumerate_costrengths(Functor::constant(FinSet({"a"})),
                              cartesian_action(), U012, U012)
            .empty());
}

TEST_CASE("property: grafting substitutes variables") {
  const TermMonad t(writer(FinSet(2)), 3);
  oracle::Gen gen(55);
  for (int trial = 0; trial < 60; ++trial) {
    const FinSet x = gen.nonempty_set(2);
    const FinSet y({"p", "q"});
    const std::size_t d = gen.between(0, 2), e = gen.between(1, 3 - d);
    const FinSet tx = t.build_terms(x, d), ty = t.build_terms(y, e);
    const FinFun sigma = gen.function(x, t.terms(e)(y));
    const FinFun named(x, ty, sigma.table());
    const FinFun g(tx, t.build_terms(y, d + e), t.graft(sigma, y, e, d).table());
    for (const auto& term : tx.labels()) {
      const std::string lhs = d == 0 ? "Var(" + term + ")" : term;
      const std::string expected = substitute(
          lhs, [&](const std::string& v) { return oracle::apply(named, v); });
      CHECK(oracle::apply(g, term) == expected);
    }
  }
}

TEST_CASE("property: monad unit laws and inclusions") {
  for (const Functor& f : {writer(FinSet(1)), writer(FinSet(2)), maybe()}) {
    const TermMonad t(f, 3);
    for (std::size_t n = 0; n <= 2; ++n) {
      const FinSet x(n);
      for (std::size_t d = 0; d <= 3; ++d) {
        const FinSet td = t.terms(d)(x);
        // mult . unit_{T_d X} = id and mult . T_d(unit_X) = id.
        CHECK(compose(t.mult(x, 0, d), t.unit(td)) == identity(td));
        CHECK(compose(t.mult(x, d, 0), t.terms(d)(t.unit(x))) == identity(td));
        if (d < 3) {
          const FinFun inc = t.step_inclusion(x, d + 1);
          CHECK(inc.is_injective());
          const FinSet a = t.build_terms(x, d), b = t.build_terms(x, d + 1);
          for (std::size_t i = 0; i < a.size() && d > 0; ++i) {
            CHECK(b.label(inc(i)) == a.label(i));
          }
        }
      }
    }
  }
}

TEST_CASE("leaf extractor reads the variable under Writer layers") {
  const TermMonad t(writer(Sone), 3);
  const auto eps = enumerate_nat(writer(Sone), Functor::id(), U012);
  REQUIRE(eps.size() == 1);
  const Copoint e = extend_by_naturality(eps[0]);
  const FinSet x({"x", "y"});
  const FinFun leaf = leaf_extractor(t, e, x, 3);
  const FinSet terms = t.build_terms(x, 3);
  CHECK(leaf(*terms.index_of("Op((s,Op((s,Var(y)))))")) == 1U);
  CHECK(leaf(*terms.index_of("Var(x)")) == 0U);
}

TEST_CASE("free monad laws for Writer") {
  for (std::size_t n = 1; n <= 2; ++n) {
    const Costrength c = writer_costrength(FinSet(n), U012, U012);
    const LawReport r = free_monad_law_report(c, 2, U012, U012);
    INFO(r.to_text());
    CHECK(r.passed());
  }
  const LawReport deep = free_monad_law_report(
      writer_costrength(Sone, U012, U012), 3, U012, U012);
  CHECK(deep.passed());
  // Only grafts past the depth cap are skipped.
  CHECK(deep.count_of("out_of_depth_skipped") > 0);
}

TEST_CASE("mutation: a broken costrength fails at depth two") {
  const Costrength good = writer_costrength(Sone, U012, U012);
  // Corrupts cst_{M, T_1 X} only; T_1 X is recognised by its term labels.
  const Costrength bad = Costrength::tabulate(
      writer(Sone), cartesian_action(), U012, U012,
      [good](const FinSet& m, const FinSet& x) {
        FinFun k = good.at(m, x);
        const bool terms = x.size() > 0 && x.label(0).rfind("inl", 0) == 0;
        return m.size() == 2 && terms ? mutate_entry(k, 0) : k;
      });
  CHECK(check_costrength(bad).passed());
  CHECK(free_monad_law_report(bad, 1, U012, U012).passed());
  CHECK(free_monad_law_report(bad, 2, U012, U012).failed());
}
