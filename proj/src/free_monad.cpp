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


#include "costrength/free_monad.hpp"

#include <string>
#include <utility>

#include "costrength/errors.hpp"

namespace costrength {

TermMonad::TermMonad(Functor f, std::size_t max_depth)
    : f_(std::move(f)), max_depth_(max_depth) {
  levels_.push_back(Functor::id());
  for (std::size_t d = 1; d <= max_depth_; ++d) {
    levels_.push_back(
        Functor::coprod(Functor::id(), Functor::comp(f_, levels_.back())));
  }
}

const Functor& TermMonad::terms(std::size_t d) const {
  if (d > max_depth_) {
    throw PreconditionError("term depth " + std::to_string(d) +
                            " exceeds the cap " + std::to_string(max_depth_));
  }
  return levels_[d];
}

FinSet TermMonad::build_terms(const FinSet& x, std::size_t d) const {
  terms(d);
  if (d == 0) return x;
  std::vector<std::string> vars;
  for (const auto& l : x.labels()) vars.push_back("Var(" + l + ")");
  FinSet level(vars);
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<std::string> labels = vars;
    for (const auto& l : f_(level).labels()) labels.push_back("Op(" + l + ")");
    level = FinSet(std::move(labels));
  }
  return level;
}

FinFun TermMonad::unit(const FinSet& x) const { return identity(x); }

FinFun TermMonad::step_inclusion(const FinSet& x, std::size_t d) const {
  if (d == 0 || d > max_depth_) {
    throw PreconditionError("no inclusion into depth " + std::to_string(d));
  }
  if (d == 1) return inl(x, f_(x));
  return coproduct_map(identity(x), f_(step_inclusion(x, d - 1)));
}

FinFun TermMonad::inclusion(const FinSet& x, std::size_t from,
                            std::size_t to) const {
  if (from > to) throw PreconditionError("inclusion must not lower depth");
  FinFun i = identity(terms(from)(x));
  for (std::size_t d = from + 1; d <= to; ++d) {
    i = compose(step_inclusion(x, d), i);
  }
  return i;
}

FinFun TermMonad::graft(const FinFun& sigma, const FinSet& y, std::size_t e,
                        std::size_t d) const {
  if (d + e > max_depth_) {
    throw PreconditionError("grafting depth " + std::to_string(e) +
                            " terms into depth " + std::to_string(d) +
                            " terms exceeds the cap " +
                            std::to_string(max_depth_));
  }
  if (sigma.cod() != terms(e)(y)) {
    throw StructuralError("substitution must land in T_" + std::to_string(e) +
                          "(Y)");
  }
  if (d == 0) return sigma;
  const FinSet below = terms(d + e - 1)(y);
  return copair(compose(inclusion(y, e, d + e), sigma),
                compose(inr(y, f_(below)), f_(graft(sigma, y, e, d - 1))));
}

FinFun TermMonad::mult(const FinSet& x, std::size_t d, std::size_t e) const {
  return graft(identity(terms(e)(x)), x, e, d);
}

// ---------------------------------------------------------------------------

FinFun free_costrength_component(const TermMonad& t, const Costrength& c,
                                 const FinSet& m, const FinSet& x,
                                 std::size_t d) {
  if (c.action().name != "cart") {
    throw PreconditionError("free costrength needs a cartesian costrength");
  }
  if (!(c.functor() == t.base())) {
    throw PreconditionError("costrength is for " + c.functor().to_string() +
                            ", terms are over " + t.base().to_string());
  }
  const FinSet mx = product(m, x);
  if (d == 0) return identity(mx);
  const Functor& f = t.base();
  const FinSet below = t.terms(d - 1)(x);
  const FinSet ops = f(below);
  const FinFun var = product_map(identity(m), inl(x, ops));
  const FinFun op = compose(
      product_map(identity(m), inr(x, ops)),
      compose(c.at(m, below),
              f(free_costrength_component(t, c, m, x, d - 1))));
  return copair(var, op);
}

Costrength free_costrength(const TermMonad& t, const Costrength& c,
                           std::size_t d, const Universe& objects,
                           const Universe& grades) {
  t.terms(d);
  return Costrength::tabulate(
      t.terms(d), cartesian_action(), objects, grades,
      [t, c, d](const FinSet& m, const FinSet& x) {
        return free_costrength_component(t, c, m, x, d);
      });
}

FinFun leaf_extractor(const TermMonad& t, const Copoint& eps, const FinSet& x,
                      std::size_t d) {
  if (d == 0) return identity(x);
  return copair(identity(x),
                compose(eps.at(x), t.base()(leaf_extractor(t, eps, x, d - 1))));
}

// ---------------------------------------------------------------------------

namespace {

std::string depths(std::size_t a, std::size_t b) {
  return std::to_string(a) + "," + std::to_string(b);
}

std::string depths(std::size_t a, std::size_t b, std::size_t c) {
  return depths(a, b) + "," + std::to_string(c);
}

}  // namespace

LawReport free_monad_law_report(const Costrength& c, std::size_t max_depth,
                                const Universe& objects,
                                const Universe& grades) {
  const TermMonad t(c.functor(), max_depth);
  LawReport r = LawReport::pass("free monad on " + c.functor().to_string() +
                                " up to depth " + std::to_string(max_depth));
  std::int64_t skipped = 0;

  LawReport units = LawReport::pass("unit laws");
  for (std::size_t d = 0; d <= max_depth; ++d) {
    for (const auto& x : objects.objects()) {
      const FinSet tx = t.terms(d)(x);
      expect_equal(units, compose(t.mult(x, 0, d), t.unit(tx)), identity(tx),
                   {{"law", "mu . eta_T"}, {"depth", std::to_string(d)},
                    {"X", x.to_string()}});
      expect_equal(units, compose(t.mult(x, d, 0), t.terms(d)(t.unit(x))),
                   identity(tx),
                   {{"law", "mu . T(eta)"}, {"depth", std::to_string(d)},
                    {"X", x.to_string()}});
    }
  }
  r.add(std::move(units));

  LawReport assoc = LawReport::pass("associativity of grafting");
  for (std::size_t a = 0; a <= max_depth; ++a) {
    for (std::size_t b = 0; b <= max_depth; ++b) {
      for (std::size_t e = 0; e <= max_depth; ++e) {
        if (a + b + e > max_depth) {
          ++skipped;
          assoc.note("out of depth: T_" + std::to_string(a) + " T_" +
                     std::to_string(b) + " T_" + std::to_string(e));
          continue;
        }
        for (const auto& x : objects.objects()) {
          const FinSet tex = t.terms(e)(x);
          const FinFun lhs = compose(t.mult(x, a, b + e),
                                     t.terms(a)(t.mult(x, b, e)));
          const FinFun rhs = compose(t.mult(x, a + b, e), t.mult(tex, a, b));
          expect_equal(assoc, lhs, rhs,
                       {{"depths", depths(a, b, e)}, {"X", x.to_string()}});
        }
      }
    }
  }
  assoc.count("out_of_depth", skipped);
  r.add(std::move(assoc));

  std::vector<Costrength> levels;
  for (std::size_t d = 0; d <= max_depth; ++d) {
    levels.push_back(free_costrength(t, c, d, objects, grades));
  }

  for (std::size_t d = 0; d <= max_depth; ++d) {
    LawReport laws = check_costrength(levels[d]);
    laws.law = "costrength laws at depth " + std::to_string(d);
    r.add(std::move(laws));
    LawReport lemma = check_projection_lemma(levels[d]);
    lemma.law = "projection lemma at depth " + std::to_string(d);
    r.add(std::move(lemma));
  }

  const Costrength id_cst = identity_costrength(c.action(), objects, grades);
  for (std::size_t d = 0; d <= max_depth; ++d) {
    const NatFamily eta = NatFamily::tabulate(
        Functor::id(), t.terms(d), objects,
        [t, d](const FinSet& x) { return t.inclusion(x, 0, d); });
    LawReport u = check_costrong_nat(eta, id_cst, levels[d]);
    u.law = "unit is costrong at depth " + std::to_string(d);
    r.add(std::move(u));
  }
  for (std::size_t a = 0; a <= max_depth; ++a) {
    for (std::size_t b = 0; a + b <= max_depth; ++b) {
      const NatFamily mu = NatFamily::tabulate(
          Functor::comp(t.terms(a), t.terms(b)), t.terms(a + b), objects,
          [t, a, b](const FinSet& x) { return t.mult(x, a, b); });
      LawReport m = check_costrong_nat(
          mu, compose_costrengths(levels[a], levels[b]), levels[a + b]);
      m.law = "multiplication is costrong at depths " + depths(a, b);
      r.add(std::move(m));
    }
  }

  LawReport compat = LawReport::pass("consecutive depths agree");
  for (std::size_t d = 1; d <= max_depth; ++d) {
    for (const auto& m : grades.objects()) {
      for (const auto& x : objects.objects()) {
        const FinSet mx = product(m, x);
        expect_equal(compat,
                     compose(levels[d].at(m, x), t.step_inclusion(mx, d)),
                     compose(product_map(identity(m), t.step_inclusion(x, d)),
                             levels[d - 1].at(m, x)),
                     {{"depth", std::to_string(d)},
                      {"M", m.to_string()},
                      {"X", x.to_string()}});
      }
    }
  }
  r.add(std::move(compat));

  LawReport leaves = LawReport::pass("phi of the free costrength reads leaves");
  const Copoint eps = phi(c);
  for (std::size_t d = 0; d <= max_depth; ++d) {
    const Copoint lifted = phi(levels[d]);
    for (const auto& m : grades.objects()) {
      expect_equal(leaves, lifted.at(m), leaf_extractor(t, eps, m, d),
                   {{"depth", std::to_string(d)}, {"M", m.to_string()}});
    }
  }
  r.add(std::move(leaves));
  r.count("out_of_depth_skipped", skipped);
  return r;
}

}  // namespace costrength
