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


#include "costrength/costrength.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "costrength/errors.hpp"
#include "costrength/nat_search.hpp"

namespace costrength {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<FinSet, FinSet>& p) const {
    return p.first.hash() * 1000003u ^ p.second.hash();
  }
};

/// Formula results are cached; copies of a family share the cache.
std::function<FinFun(const FinSet&, const FinSet&)> memoized(
    std::function<FinFun(const FinSet&, const FinSet&)> formula) {
  if (!formula) return formula;
  struct Cache {
    std::mutex mu;
    std::unordered_map<std::pair<FinSet, FinSet>, FinFun, PairHash> done;
  };
  auto cache = std::make_shared<Cache>();
  return [formula = std::move(formula), cache](const FinSet& m,
                                               const FinSet& x) {
    {
      std::lock_guard lock(cache->mu);
      if (auto it = cache->done.find({m, x}); it != cache->done.end()) {
        return it->second;
      }
    }
    FinFun c = formula(m, x);
    std::lock_guard lock(cache->mu);
    cache->done.emplace(std::make_pair(m, x), c);
    return c;
  };
}

}  // namespace

template <Direction D>
ActionFamily<D>::ActionFamily(Functor functor, ActionModel action,
                              Universe objects, Universe grades,
                              std::vector<FinFun> cells, Formula formula)
    : functor_(std::move(functor)),
      action_(std::move(action)),
      objects_(std::move(objects)),
      grades_(std::move(grades)),
      cells_(std::move(cells)),
      formula_(memoized(std::move(formula))) {
  if (cells_.size() != grades_.size() * objects_.size()) {
    throw StructuralError(describe() + " needs " +
                          std::to_string(grades_.size() * objects_.size()) +
                          " cells, got " + std::to_string(cells_.size()));
  }
  for (std::size_t g = 0; g < grades_.size(); ++g) {
    for (std::size_t x = 0; x < objects_.size(); ++x) {
      const FinFun& c = cells_[g * objects_.size() + x];
      if (c.dom() != domain(grades_[g], objects_[x]) ||
          c.cod() != codomain(grades_[g], objects_[x])) {
        throw StructuralError(describe() + ": cell at M=" +
                              grades_[g].to_string() + ", X=" +
                              objects_[x].to_string() +
                              " has the wrong type");
      }
    }
  }
}

template <Direction D>
ActionFamily<D> ActionFamily<D>::tabulate(Functor functor, ActionModel action,
                                          Universe objects, Universe grades,
                                          Formula formula) {
  std::vector<FinFun> cells;
  cells.reserve(grades.size() * objects.size());
  for (const auto& m : grades.objects()) {
    for (const auto& x : objects.objects()) cells.push_back(formula(m, x));
  }
  return ActionFamily(std::move(functor), std::move(action),
                      std::move(objects), std::move(grades), std::move(cells),
                      std::move(formula));
}

template <Direction D>
FinSet ActionFamily<D>::domain(const FinSet& m, const FinSet& x) const {
  if constexpr (D == Direction::kCostrength) {
    return functor_(action_.act(m, x));
  } else {
    return action_.act(m, functor_(x));
  }
}

template <Direction D>
FinSet ActionFamily<D>::codomain(const FinSet& m, const FinSet& x) const {
  if constexpr (D == Direction::kCostrength) {
    return action_.act(m, functor_(x));
  } else {
    return functor_(action_.act(m, x));
  }
}

template <Direction D>
bool ActionFamily<D>::available(const FinSet& m, const FinSet& x) const {
  if (formula_) return true;
  return grades_.find_size(m.size()) && objects_.find_size(x.size());
}

template <Direction D>
FinFun ActionFamily<D>::at(const FinSet& m, const FinSet& x) const {
  const auto gi = grades_.find(m);
  const auto xi = objects_.find(x);
  if (gi && xi) return cell(*gi, *xi);
  if (formula_) {
    FinFun c = formula_(m, x);
    if (c.dom() != domain(m, x) || c.cod() != codomain(m, x)) {
      throw StructuralError(describe() + ": formula gave a component of the "
                                         "wrong type at M=" +
                            m.to_string() + ", X=" + x.to_string());
    }
    return c;
  }
  const auto gs = grades_.find_size(m.size());
  const auto xs = objects_.find_size(x.size());
  if (gs && xs) return transport(m, x, *gs, *xs);
  throw StructuralError(describe() + " has no component at M=" +
                        m.to_string() + ", X=" + x.to_string() +
                        ": grades " + grades_.name() + ", objects " +
                        objects_.name());
}

template <Direction D>
FinFun ActionFamily<D>::transport(const FinSet& m, const FinSet& x,
                                  std::size_t gi, std::size_t xi) const {
  const FinSet& m0 = grades_[gi];
  const FinSet& x0 = objects_[xi];
  const FinFun bm = positional_bijection(m, m0);
  const FinFun bx = positional_bijection(x, x0);
  const bool cov = action_.variance == Variance::kCovariant;
  const FinFun to = cov ? bm : bm.inverse();    // grade arrow m -> m0
  const FinFun back = cov ? bm.inverse() : bm;  // grade arrow m0 -> m
  const FinFun& c0 = cell(gi, xi);
  if constexpr (D == Direction::kCostrength) {
    return compose(action_.act_mor(back, functor_(bx.inverse())),
                   compose(c0, functor_(action_.act_mor(to, bx))));
  } else {
    return compose(functor_(action_.act_mor(back, bx.inverse())),
                   compose(c0, action_.act_mor(to, functor_(bx))));
  }
}

template <Direction D>
ActionFamily<D> ActionFamily<D>::with_cell(std::size_t grade,
                                           std::size_t object,
                                           FinFun component) const {
  auto cells = cells_;
  cells.at(grade * objects_.size() + object) = std::move(component);
  return ActionFamily(functor_, action_, objects_, grades_, std::move(cells));
}

template <Direction D>
std::string ActionFamily<D>::describe() const {
  return std::string(D == Direction::kCostrength ? "costrength" : "strength") +
         " of " + functor_.to_string() + " over " + action_.name;
}

template class ActionFamily<Direction::kStrength>;
template class ActionFamily<Direction::kCostrength>;

// ---------------------------------------------------------------------------

namespace {

std::string s(const FinSet& x) { return x.to_string(); }

/// Both law checkers: naturality in each argument, unit, associativity.
template <Direction D>
LawReport check_family(const ActionFamily<D>& c) {
  const ActionModel& a = c.action();
  const Functor& F = c.functor();
  const auto& gs = c.grades().objects();
  const auto& xs = c.objects().objects();
  LawReport report = LawReport::pass(c.describe());
  report.note("objects " + c.objects().name() + ", grades " +
              c.grades().name());

  LawReport nat_x = LawReport::pass("naturality in X");
  std::int64_t n = 0;
  for (const auto& m : gs) {
    for (const auto& x : xs) {
      const FinFun cx = c.at(m, x);
      for (const auto& y : xs) {
        const FinFun cy = c.at(m, y);
        for (const FinFun& f : all_functions(x, y)) {
          ++n;
          bool ok;
          if constexpr (D == Direction::kCostrength) {
            ok = expect_equal(nat_x, compose(a.act_on(m, F(f)), cx),
                              compose(cy, F(a.act_on(m, f))),
                              {{"M", s(m)}, {"f", f.to_string()}});
          } else {
            ok = expect_equal(nat_x, compose(F(a.act_on(m, f)), cx),
                              compose(cy, a.act_on(m, F(f))),
                              {{"M", s(m)}, {"f", f.to_string()}});
          }
          if (!ok) goto nat_x_done;
        }
      }
    }
  }
nat_x_done:
  nat_x.count("squares_checked", n);
  report.add(std::move(nat_x));

  {
    LawReport nat_m = LawReport::pass("naturality in M");
    n = 0;
    for (const auto& m : gs) {
      for (const auto& m2 : gs) {
        for (const FinFun& g : a.grade_arrows(m, m2)) {
          for (const auto& x : xs) {
            ++n;
            bool ok;
            if constexpr (D == Direction::kCostrength) {
              ok = expect_equal(
                  nat_m, compose(a.act_grade(g, F(x)), c.at(m, x)),
                  compose(c.at(m2, x), F(a.act_grade(g, x))),
                  {{"g", g.to_string()}, {"X", s(x)}});
            } else {
              ok = expect_equal(
                  nat_m, compose(F(a.act_grade(g, x)), c.at(m, x)),
                  compose(c.at(m2, x), a.act_grade(g, F(x))),
                  {{"g", g.to_string()}, {"X", s(x)}});
            }
            if (!ok) goto nat_m_done;
          }
        }
      }
    }
  nat_m_done:
    nat_m.count("squares_checked", n);
    report.add(std::move(nat_m));
  }

  {
    LawReport unit = LawReport::pass("unit triangle");
    if (!c.available(a.unit, xs.front())) {
      unit = LawReport::skipped(unit.law, "no component at the unit grade");
    } else {
      for (const auto& x : xs) {
        bool ok;
        if constexpr (D == Direction::kCostrength) {
          ok = expect_equal(unit, compose(a.unitor(F(x)), c.at(a.unit, x)),
                            F(a.unitor(x)), {{"X", s(x)}});
        } else {
          ok = expect_equal(unit, compose(F(a.unitor(x)), c.at(a.unit, x)),
                            a.unitor(F(x)), {{"X", s(x)}});
        }
        if (!ok) break;
      }
    }
    report.add(std::move(unit));
  }

  {
    LawReport assoc = LawReport::pass("associativity");
    std::int64_t checked = 0, skipped = 0, too_big = 0;
    for (const auto& m : gs) {
      for (const auto& nn : gs) {
        const FinSet mn = a.tensor(m, nn);
        for (const auto& x : xs) {
          if (assoc.failed()) break;
          const FinSet nx = a.act(nn, x);
          if (!c.available(mn, x) || !c.available(m, nx)) {
            ++skipped;
            continue;
          }
          const Counterexample where = {{"M", s(m)}, {"N", s(nn)}, {"X", s(x)}};
          try {
          if constexpr (D == Direction::kCostrength) {
            expect_equal(assoc,
                         compose(a.associator(m, nn, F(x)), c.at(mn, x)),
                         compose(a.act_on(m, c.at(nn, x)),
                                 compose(c.at(m, nx),
                                         F(a.associator(m, nn, x)))),
                         where);
          } else {
            expect_equal(assoc,
                         compose(F(a.associator(m, nn, x)), c.at(mn, x)),
                         compose(c.at(m, nx),
                                 compose(a.act_on(m, c.at(nn, x)),
                                         a.associator(m, nn, F(x)))),
                         where);
          }
          ++checked;
          } catch (const ResourceError&) {
            ++too_big;
          }
        }
      }
    }
    assoc.count("cells_checked", checked);
    if (skipped > 0) {
      assoc.count("cells_skipped", skipped);
      assoc.note("cells needing a component at a size absent from the "
                 "universes are skipped");
    }
    if (too_big > 0) {
      assoc.count("cells_over_size_cap", too_big);
      assoc.note("cells whose sets exceed the size cap are skipped");
    }
    report.add(std::move(assoc));
  }
  return report;
}

}  // namespace

LawReport check_costrength(const Costrength& c) { return check_family(c); }
LawReport check_strength(const Strength& st) { return check_family(st); }

namespace {

void note_skipped(LawReport& r, std::int64_t skipped) {
  if (skipped == 0) return;
  r.count("cells_skipped", skipped);
  r.note("cells where the transformation has no component (no formula and "
         "no universe object of that size) are skipped");
}

}  // namespace

LawReport check_costrong_nat(const NatFamily& alpha, const Costrength& src,
                             const Costrength& tgt) {
  if (!(alpha.source() == src.functor()) ||
      !(alpha.target() == tgt.functor())) {
    throw StructuralError("transformation " + alpha.source().to_string() +
                          " => " + alpha.target().to_string() +
                          " does not connect " + src.describe() + " and " +
                          tgt.describe());
  }
  const ActionModel& a = src.action();
  LawReport r = LawReport::pass("costrong transformation " +
                                alpha.source().to_string() + " => " +
                                alpha.target().to_string());
  std::int64_t skipped = 0;
  for (const auto& m : src.grades().objects()) {
    for (const auto& x : src.objects().objects()) {
      if (!alpha.available(a.act(m, x))) {
        ++skipped;
        continue;
      }
      if (!expect_equal(r, compose(a.act_on(m, alpha.at(x)), src.at(m, x)),
                        compose(tgt.at(m, x), alpha.at(a.act(m, x))),
                        {{"M", s(m)}, {"X", s(x)}})) {
        return r;
      }
    }
  }
  note_skipped(r, skipped);
  return r;
}

LawReport check_strong_nat(const NatFamily& alpha, const Strength& src,
                           const Strength& tgt) {
  if (!(alpha.source() == src.functor()) ||
      !(alpha.target() == tgt.functor())) {
    throw StructuralError("transformation " + alpha.source().to_string() +
                          " => " + alpha.target().to_string() +
                          " does not connect " + src.describe() + " and " +
                          tgt.describe());
  }
  const ActionModel& a = src.action();
  LawReport r = LawReport::pass("strong transformation " +
                                alpha.source().to_string() + " => " +
                                alpha.target().to_string());
  std::int64_t skipped = 0;
  for (const auto& m : src.grades().objects()) {
    for (const auto& x : src.objects().objects()) {
      if (!alpha.available(a.act(m, x))) {
        ++skipped;
        continue;
      }
      if (!expect_equal(r, compose(alpha.at(a.act(m, x)), src.at(m, x)),
                        compose(tgt.at(m, x), a.act_on(m, alpha.at(x))),
                        {{"M", s(m)}, {"X", s(x)}})) {
        return r;
      }
    }
  }
  note_skipped(r, skipped);
  return r;
}

LawReport check_uniqueness_square(const Costrength& c, const FinFun& f,
                                  const FinFun& g) {
  const ActionModel& a = c.action();
  const Functor& F = c.functor();
  if (a.variance != Variance::kCovariant) {
    throw PreconditionError("the uniqueness square needs a regular action");
  }
  const FinSet& x = f.dom();
  if (f.cod() != a.unit || g.cod() != a.unit) {
    throw StructuralError("uniqueness square needs maps into the unit");
  }
  // Recover Y from F(Y) = dom g by searching the object universe.
  std::optional<FinSet> found;
  for (const auto& obj : c.objects().objects()) {
    if (F(obj) == g.dom()) {
      found = obj;
      break;
    }
  }
  if (!found) {
    throw StructuralError("dom g is not F(Y) for any universe object Y");
  }
  const FinSet& yy = *found;
  LawReport r = LawReport::pass("uniqueness square");
  const FinFun lhs = compose(a.act_mor(f, g), c.at(x, yy));
  const FinFun rhs =
      compose(a.unitor(a.unit).inverse(),
              compose(g, compose(F(a.unitor(yy)), F(a.act_grade(f, yy)))));
  expect_equal(r, lhs, rhs,
               {{"f", f.to_string()}, {"g", g.to_string()}, {"Y", s(yy)}});
  return r;
}

LawReport check_uniqueness_squares(const Costrength& c) {
  const ActionModel& a = c.action();
  const Functor& F = c.functor();
  LawReport r = LawReport::pass("uniqueness squares for " + c.describe());
  std::int64_t n = 0;
  for (const auto& x : c.grades().objects()) {
    for (const FinFun& f : all_functions(x, a.unit)) {
      for (const auto& y : c.objects().objects()) {
        for (const FinFun& g : all_functions(F(y), a.unit)) {
          ++n;
          LawReport one = check_uniqueness_square(c, f, g);
          if (one.failed()) {
            r.status = Status::kFail;
            r.counterexample = one.counterexample;
            r.count("squares_checked", n);
            return r;
          }
        }
      }
    }
  }
  r.count("squares_checked", n);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

template <Direction D>
std::vector<ActionFamily<D>> enumerate_families(const Functor& F,
                                                const ActionModel& a,
                                                const Universe& objects,
                                                const Universe& grades,
                                                SearchBudget budget,
                                                EnumerationStats* stats) {
  const std::size_t nx = objects.size();
  const std::size_t ng = grades.size();
  auto dom = [&](const FinSet& m, const FinSet& x) {
    return D == Direction::kCostrength ? F(a.act(m, x)) : a.act(m, F(x));
  };
  auto cod = [&](const FinSet& m, const FinSet& x) {
    return D == Direction::kCostrength ? a.act(m, F(x)) : F(a.act(m, x));
  };
  search::Problem problem;
  problem.fixed.resize(ng * nx);
  for (std::size_t g = 0; g < ng; ++g) {
    for (std::size_t x = 0; x < nx; ++x) {
      const FinSet& M = grades[g];
      const FinSet& X = objects[x];
      problem.cells.push_back({dom(M, X).size(), cod(M, X).size()});
      if (M == a.unit) {
        // The unit triangle determines these cells outright.
        const FinFun fixed =
            D == Direction::kCostrength
                ? compose(a.unitor(F(X)).inverse(), F(a.unitor(X)))
                : compose(F(a.unitor(X)).inverse(), a.unitor(F(X)));
        problem.fixed[g * nx + x] = fixed.table();
      }
    }
  }
  for (std::size_t g = 0; g < ng; ++g) {
    const FinSet& M = grades[g];
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < nx; ++y) {
        for (const FinFun& f : all_functions(objects[x], objects[y])) {
          const FinFun fm = a.act_on(M, f);
          const FinFun ff = a.act_on(M, F(f));
          if (D == Direction::kCostrength) {
            problem.links.push_back(
                {g * nx + x, g * nx + y, F(fm).table(), ff.table()});
          } else {
            problem.links.push_back(
                {g * nx + x, g * nx + y, ff.table(), F(fm).table()});
          }
        }
      }
    }
  }
  for (std::size_t g = 0; g < ng; ++g) {
    for (std::size_t h = 0; h < ng; ++h) {
      for (const FinFun& k : a.grade_arrows(grades[g], grades[h])) {
        for (std::size_t x = 0; x < nx; ++x) {
          const FinSet& X = objects[x];
          const FinFun kx = a.act_grade(k, X);
          const FinFun kf = a.act_grade(k, F(X));
          if (D == Direction::kCostrength) {
            problem.links.push_back(
                {g * nx + x, h * nx + x, F(kx).table(), kf.table()});
          } else {
            problem.links.push_back(
                {g * nx + x, h * nx + x, kf.table(), F(kx).table()});
          }
        }
      }
    }
  }
  search::Stats search_stats;
  auto solutions = search::solve(problem, budget.max_nodes, &search_stats);
  std::vector<ActionFamily<D>> out;
  for (auto& sol : solutions) {
    std::vector<FinFun> cells;
    cells.reserve(sol.size());
    for (std::size_t g = 0; g < ng; ++g) {
      for (std::size_t x = 0; x < nx; ++x) {
        cells.emplace_back(dom(grades[g], objects[x]),
                           cod(grades[g], objects[x]),
                           std::move(sol[g * nx + x]));
      }
    }
    ActionFamily<D> family(F, a, objects, grades, std::move(cells));
    if (check_family(family).passed()) out.push_back(std::move(family));
  }
  if (stats) {
    stats->natural_candidates = solutions.size();
    stats->lawful = out.size();
    stats->search_nodes = search_stats.nodes;
  }
  return out;
}

}  // namespace

std::vector<Costrength> enumerate_costrengths(const Functor& f,
                                              const ActionModel& a,
                                              const Universe& objects,
                                              const Universe& grades,
                                              SearchBudget budget,
                                              EnumerationStats* stats) {
  return enumerate_families<Direction::kCostrength>(f, a, objects, grades,
                                                    budget, stats);
}

std::vector<Strength> enumerate_strengths(const Functor& f,
                                          const ActionModel& a,
                                          const Universe& objects,
                                          const Universe& grades,
                                          SearchBudget budget,
                                          EnumerationStats* stats) {
  return enumerate_families<Direction::kStrength>(f, a, objects, grades,
                                                  budget, stats);
}

// ---------------------------------------------------------------------------

Costrength identity_costrength(const ActionModel& a, const Universe& objects,
                               const Universe& grades) {
  return Costrength::tabulate(
      Functor::id(), a, objects, grades,
      [a](const FinSet& m, const FinSet& x) { return identity(a.act(m, x)); });
}

Strength identity_strength(const ActionModel& a, const Universe& objects,
                           const Universe& grades) {
  return Strength::tabulate(
      Functor::id(), a, objects, grades,
      [a](const FinSet& m, const FinSet& x) { return identity(a.act(m, x)); });
}

Strength canonical_strength(const Functor& f, const Universe& objects,
                            const Universe& grades) {
  return Strength::tabulate(
      f, cartesian_action(), objects, grades,
      [f](const FinSet& m, const FinSet& x) {
        const FinSet fx = f(x);
        const FinSet mx = product(m, x);
        Table t(m.size() * fx.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
          // x |-> (m_i, x)
          const FinFun section =
              pair(constant(x, m, i), identity(x));
          const FinFun image = f(section);
          for (std::size_t w = 0; w < fx.size(); ++w) {
            t[i * fx.size() + w] = image(w);
          }
        }
        return FinFun(product(m, fx), f(mx), std::move(t));
      });
}

Costrength compose_costrengths(const Costrength& outer,
                               const Costrength& inner) {
  if (outer.action().name != inner.action().name) {
    throw StructuralError("cannot compose costrengths over different actions");
  }
  const Functor G = outer.functor();
  const Functor H = inner.functor();
  return Costrength::tabulate(
      Functor::comp(G, H), inner.action(), inner.objects(), inner.grades(),
      [outer, inner, G, H](const FinSet& m, const FinSet& x) {
        return compose(outer.at(m, H(x)), G(inner.at(m, x)));
      });
}

}  // namespace costrength
