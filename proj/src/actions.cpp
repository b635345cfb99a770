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


#include "costrength/actions.hpp"

#include <string>
#include <utility>

#include "costrength/errors.hpp"

namespace costrength {

std::vector<FinFun> ActionModel::grade_arrows(const FinSet& m,
                                              const FinSet& m2) const {
  std::vector<FinFun> out;
  const FinSet& from = variance == Variance::kCovariant ? m : m2;
  const FinSet& to = variance == Variance::kCovariant ? m2 : m;
  for (const FinFun& g : all_functions(from, to)) out.push_back(g);
  return out;
}

ActionModel cartesian_action() {
  ActionModel a;
  a.name = "cart";
  a.unit = terminal();
  a.tensor = [](const FinSet& m, const FinSet& n) { return product(m, n); };
  a.tensor_mor = [](const FinFun& g, const FinFun& h) {
    return product_map(g, h);
  };
  a.act = a.tensor;
  a.act_mor = a.tensor_mor;
  a.associator = product_associator;
  a.unitor = [](const FinSet& x) { return proj2(terminal(), x); };
  a.grade_associator = product_associator;
  a.grade_left_unitor = a.unitor;
  a.grade_right_unitor = [](const FinSet& m) { return proj1(m, terminal()); };
  return a;
}

ActionModel cocartesian_action() {
  ActionModel a;
  a.name = "cocart";
  a.unit = initial();
  a.tensor = [](const FinSet& m, const FinSet& n) { return coproduct(m, n); };
  a.tensor_mor = [](const FinFun& g, const FinFun& h) {
    return coproduct_map(g, h);
  };
  a.act = a.tensor;
  a.act_mor = a.tensor_mor;
  a.associator = coproduct_associator;
  a.unitor = [](const FinSet& x) {
    return copair(initial_arrow(x), identity(x));
  };
  a.grade_associator = coproduct_associator;
  a.grade_left_unitor = a.unitor;
  a.grade_right_unitor = [](const FinSet& m) {
    return copair(identity(m), initial_arrow(m));
  };
  return a;
}

ActionModel op_exponential_action() {
  ActionModel a;
  a.name = "op-exp";
  a.variance = Variance::kContravariant;
  a.unit = terminal();
  a.tensor = [](const FinSet& m, const FinSet& n) { return product(m, n); };
  a.tensor_mor = [](const FinFun& g, const FinFun& h) {
    return product_map(g, h);
  };
  a.act = [](const FinSet& m, const FinSet& x) { return exponential(m, x); };
  // g is the Set function M' -> M underlying a grade arrow M -> M'.
  a.act_mor = [](const FinFun& g, const FinFun& f) {
    return compose(exponential_precompose(g, f.cod()),
                   exponential_map(g.cod(), f));
  };
  a.associator = curry_iso;
  a.unitor = [](const FinSet& x) { return eval_at(terminal(), x, 0); };
  a.grade_associator = [](const FinSet& m, const FinSet& n, const FinSet& p) {
    return product_associator(m, n, p).inverse();
  };
  a.grade_left_unitor = [](const FinSet& m) {
    return pair(bang(m), identity(m));
  };
  a.grade_right_unitor = [](const FinSet& m) {
    return pair(identity(m), bang(m));
  };
  return a;
}

ActionModel action_by_name(const std::string& name) {
  if (name == "cart") return cartesian_action();
  if (name == "cocart") return cocartesian_action();
  if (name == "op-exp") return op_exponential_action();
  throw StructuralError("unknown action '" + name +
                        "' (expected cart, cocart or op-exp)");
}

namespace {

std::string s(const FinSet& x) { return x.to_string(); }

}  // namespace

LawReport check_action_coherence(const ActionModel& a, const Universe& u,
                                 const Universe& grades) {
  LawReport report = LawReport::pass("action coherence " + a.name);
  report.note("objects " + u.name() + ", grades " + grades.name());
  const auto& gs = grades.objects();
  const auto& xs = u.objects();

  LawReport iso = LawReport::pass("associator and unitor invertible");
  for (const auto& x : xs) {
    if (!a.unitor(x).is_bijective()) {
      iso = LawReport::fail(iso.law, {{"unitor at", s(x)}});
    }
    for (const auto& m : gs) {
      for (const auto& n : gs) {
        if (!iso.failed() && !a.associator(m, n, x).is_bijective()) {
          iso = LawReport::fail(
              iso.law, {{"associator at M", s(m)}, {"N", s(n)}, {"X", s(x)}});
        }
      }
    }
  }
  report.add(std::move(iso));

  LawReport pentagon = LawReport::pass("pentagon");
  std::int64_t cells = 0;
  for (const auto& m : gs) {
    for (const auto& n : gs) {
      for (const auto& p : gs) {
        const FinFun alpha = a.grade_associator(m, n, p);
        for (const auto& x : xs) {
          if (pentagon.failed()) break;
          ++cells;
          const FinSet px = a.act(p, x);
          const FinFun lhs = compose(a.associator(m, n, px),
                                     a.associator(a.tensor(m, n), p, x));
          const FinFun rhs =
              compose(a.act_on(m, a.associator(n, p, x)),
                      compose(a.associator(m, a.tensor(n, p), x),
                              a.act_grade(alpha, x)));
          expect_equal(pentagon, lhs, rhs,
                       {{"M", s(m)}, {"N", s(n)}, {"P", s(p)}, {"X", s(x)}});
        }
      }
    }
  }
  pentagon.count("cells_checked", cells);
  report.add(std::move(pentagon));

  LawReport triangles = LawReport::pass("triangles");
  for (const auto& m : gs) {
    for (const auto& x : xs) {
      const FinFun right =
          compose(a.act_on(m, a.unitor(x)), a.associator(m, a.unit, x));
      if (!expect_equal(triangles, right,
                        a.act_grade(a.grade_right_unitor(m), x),
                        {{"triangle", "M.(I.X)"}, {"M", s(m)}, {"X", s(x)}})) {
        break;
      }
      const FinFun left =
          compose(a.unitor(a.act(m, x)), a.associator(a.unit, m, x));
      if (!expect_equal(triangles, left,
                        a.act_grade(a.grade_left_unitor(m), x),
                        {{"triangle", "I.(M.X)"}, {"M", s(m)}, {"X", s(x)}})) {
        break;
      }
    }
    if (triangles.failed()) break;
  }
  report.add(std::move(triangles));

  LawReport nat_x = LawReport::pass("associator and unitor natural in X");
  std::int64_t squares = 0;
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      for (const FinFun& f : all_functions(x, y)) {
        if (nat_x.failed()) break;
        ++squares;
        expect_equal(nat_x, compose(f, a.unitor(x)),
                     compose(a.unitor(y), a.act_on(a.unit, f)),
                     {{"map", "unitor"}, {"f", f.to_string()}});
        for (const auto& m : gs) {
          for (const auto& n : gs) {
            if (nat_x.failed()) break;
            expect_equal(
                nat_x,
                compose(a.act_on(m, a.act_on(n, f)), a.associator(m, n, x)),
                compose(a.associator(m, n, y),
                        a.act_on(a.tensor(m, n), f)),
                {{"map", "associator"},
                 {"M", s(m)},
                 {"N", s(n)},
                 {"f", f.to_string()}});
          }
        }
      }
    }
  }
  nat_x.count("squares_checked", squares);
  report.add(std::move(nat_x));

  LawReport nat_g = LawReport::pass("associator natural in grades");
  squares = 0;
  for (const auto& m : gs) {
    for (const auto& m2 : gs) {
      for (const FinFun& g : a.grade_arrows(m, m2)) {
        for (const auto& n : gs) {
          for (const auto& x : xs) {
            if (nat_g.failed()) break;
            ++squares;
            const FinSet nx = a.act(n, x);
            // First grade.
            expect_equal(
                nat_g,
                compose(a.act_grade(g, nx), a.associator(m, n, x)),
                compose(a.associator(m2, n, x),
                        a.act_grade(a.tensor_mor(g, identity(n)), x)),
                {{"position", "first"},
                 {"g", g.to_string()},
                 {"N", s(n)},
                 {"X", s(x)}});
            if (nat_g.failed()) break;
            // Second grade, reusing g as an arrow N -> N'.
            expect_equal(
                nat_g,
                compose(a.act_on(n, a.act_grade(g, x)),
                        a.associator(n, m, x)),
                compose(a.associator(n, m2, x),
                        a.act_grade(a.tensor_mor(identity(n), g), x)),
                {{"position", "second"},
                 {"g", g.to_string()},
                 {"M", s(n)},
                 {"X", s(x)}});
          }
        }
      }
    }
  }
  nat_g.count("squares_checked", squares);
  report.add(std::move(nat_g));
  return report;
}

// ---------------------------------------------------------------------------

LawReport PreorderedMonoid::check() const {
  LawReport r = LawReport::pass("preordered monoid");
  const std::size_t n = size();
  auto el = [&](std::size_t i) { return elements[i]; };
  for (std::size_t x = 0; x < n && !r.failed(); ++x) {
    if (mult[unit][x] != x || mult[x][unit] != x) {
      r = LawReport::fail(r.law, {{"unit law at", el(x)}});
    }
    if (!leq[x][x]) r = LawReport::fail(r.law, {{"not reflexive at", el(x)}});
    for (std::size_t y = 0; y < n && !r.failed(); ++y) {
      for (std::size_t z = 0; z < n && !r.failed(); ++z) {
        if (mult[mult[x][y]][z] != mult[x][mult[y][z]]) {
          r = LawReport::fail(r.law, {{"associativity at", el(x) + "," +
                                                               el(y) + "," +
                                                               el(z)}});
        } else if (leq[x][y] && leq[y][z] && !leq[x][z]) {
          r = LawReport::fail(r.law, {{"transitivity at", el(x) + "," +
                                                              el(y) + "," +
                                                              el(z)}});
        } else if (leq[x][y] &&
                   (!leq[mult[x][z]][mult[y][z]] ||
                    !leq[mult[z][x]][mult[z][y]])) {
          r = LawReport::fail(r.law, {{"monotonicity at", el(x) + "<=" +
                                                              el(y) + ", " +
                                                              el(z)}});
        }
      }
    }
  }
  return r;
}

GradedMonad maybe_graded_monad() {
  GradedMonad g;
  g.name = "graded Maybe";
  constexpr std::size_t f = 0, s = 1, m = 2;
  g.grades.elements = {"f", "s", "m"};
  g.grades.leq = {{true, false, true}, {false, true, true},
                  {false, false, true}};
  g.grades.mult = {{f, f, f}, {f, s, m}, {f, m, m}};
  g.grades.unit = s;
  g.functors = {Functor::constant(terminal()), Functor::id(), maybe()};
  const auto functors = g.functors;
  g.on_leq = [functors](std::size_t x, std::size_t y, const FinSet& X) {
    if (x == y) return identity(functors[x](X));
    if (x == f && y == m) return inl(terminal(), X);
    if (x == s && y == m) return inr(terminal(), X);
    throw StructuralError("graded Maybe has no arrow between these grades");
  };
  g.unit = [](const FinSet& X) { return identity(X); };
  g.mult = [functors](std::size_t x, std::size_t y, const FinSet& X) {
    const FinSet inner = functors[y](X);
    if (x == f) return identity(terminal());
    if (x == s) return identity(inner);
    // x == m: Maybe(T y X) -> T(m * y) X
    if (y == f) return bang(maybe()(inner));
    if (y == s) return identity(maybe()(X));
    // join : 1 + (1 + X) -> 1 + X
    const FinFun nothing = inl(terminal(), X);
    return copair(nothing, identity(maybe()(X)));
  };
  return g;
}

GradedMonad identity_graded_monad() {
  GradedMonad g;
  g.name = "identity graded monad";
  g.grades.elements = {"e"};
  g.grades.leq = {{true}};
  g.grades.mult = {{0}};
  g.grades.unit = 0;
  g.functors = {Functor::id()};
  g.on_leq = [](std::size_t, std::size_t, const FinSet& X) {
    return identity(X);
  };
  g.unit = [](const FinSet& X) { return identity(X); };
  g.mult = [](std::size_t, std::size_t, const FinSet& X) {
    return identity(X);
  };
  return g;
}

namespace {

/// alpha * beta at X for alpha : T x => T x', beta : T y => T y'.
FinFun horizontal(const GradedMonad& g, std::size_t x, std::size_t x2,
                  std::size_t y, std::size_t y2, const FinSet& X) {
  return compose(g.on_leq(x, x2, g.functors[y2](X)),
                 g.functors[x](g.on_leq(y, y2, X)));
}

}  // namespace

bool mult_is_iso(const GradedMonad& g, std::size_t x, std::size_t y,
                 const Universe& u) {
  for (const auto& X : u.objects()) {
    if (!g.mult(x, y, X).is_bijective()) return false;
  }
  return true;
}

LawReport check_graded_laws(const GradedMonad& g, const Universe& u) {
  LawReport report = LawReport::pass("graded monad laws " + g.name);
  report.note("objects " + u.name());
  const PreorderedMonoid& pm = g.grades;
  const std::size_t n = pm.size();
  const std::size_t e = pm.unit;
  const auto el = [&](std::size_t i) { return pm.elements[i]; };
  report.add(pm.check());

  LawReport nat = LawReport::pass("comparison families natural");
  auto check_family = [&](NatFamily family, const std::string& what) {
    LawReport r = check_natural(family);
    if (r.failed() && !nat.failed()) {
      nat.status = Status::kFail;
      nat.counterexample = r.counterexample;
      nat.counterexample.insert(nat.counterexample.begin(), {"family", what});
    }
  };
  check_family(NatFamily::tabulate(Functor::id(), g.functors[e], u, g.unit),
               "unit");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (pm.leq[x][y]) {
        check_family(
            NatFamily::tabulate(
                g.functors[x], g.functors[y], u,
                [&g, x, y](const FinSet& X) { return g.on_leq(x, y, X); }),
            el(x) + "<=" + el(y));
      }
      check_family(
          NatFamily::tabulate(
              g.composite(x, y), g.functors[pm.mult[x][y]], u,
              [&g, x, y](const FinSet& X) { return g.mult(x, y, X); }),
          "mult(" + el(x) + "," + el(y) + ")");
    }
  }
  report.add(std::move(nat));

  LawReport func = LawReport::pass("order action functorial");
  for (const auto& X : u.objects()) {
    for (std::size_t x = 0; x < n; ++x) {
      expect_equal(func, g.on_leq(x, x, X), identity(g.functors[x](X)),
                   {{"reflexivity at", el(x)}, {"X", X.to_string()}});
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (pm.leq[x][y] && pm.leq[y][z]) {
            expect_equal(func,
                         compose(g.on_leq(y, z, X), g.on_leq(x, y, X)),
                         g.on_leq(x, z, X),
                         {{"chain", el(x) + "<=" + el(y) + "<=" + el(z)},
                          {"X", X.to_string()}});
          }
        }
      }
    }
  }
  report.add(std::move(func));

  LawReport grade_nat = LawReport::pass("multiplication natural in grades");
  for (const auto& X : u.objects()) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t x2 = 0; x2 < n; ++x2)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t y2 = 0; y2 < n; ++y2) {
            if (!pm.leq[x][x2] || !pm.leq[y][y2]) continue;
            const std::size_t xy = pm.mult[x][y], xy2 = pm.mult[x2][y2];
            expect_equal(grade_nat,
                         compose(g.on_leq(xy, xy2, X), g.mult(x, y, X)),
                         compose(g.mult(x2, y2, X),
                                 horizontal(g, x, x2, y, y2, X)),
                         {{"x", el(x) + "<=" + el(x2)},
                          {"y", el(y) + "<=" + el(y2)},
                          {"X", X.to_string()}});
          }
  }
  report.add(std::move(grade_nat));

  LawReport assoc = LawReport::pass("associativity");
  LawReport unit = LawReport::pass("unit laws");
  for (const auto& X : u.objects()) {
    for (std::size_t x = 0; x < n; ++x) {
      const FinFun left_unit =
          compose(g.mult(e, x, X), g.unit(g.functors[x](X)));
      expect_equal(unit, left_unit, identity(g.functors[x](X)),
                   {{"law", "mult(e,x) . unit T x"},
                    {"x", el(x)},
                    {"X", X.to_string()}});
      const FinFun right_unit =
          compose(g.mult(x, e, X), g.functors[x](g.unit(X)));
      expect_equal(unit, right_unit, identity(g.functors[x](X)),
                   {{"law", "mult(x,e) . T x unit"},
                    {"x", el(x)},
                    {"X", X.to_string()}});
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          const FinSet tz = g.functors[z](X);
          const FinFun lhs = compose(g.mult(pm.mult[x][y], z, X),
                                     g.mult(x, y, tz));
          const FinFun rhs = compose(g.mult(x, pm.mult[y][z], X),
                                     g.functors[x](g.mult(y, z, X)));
          expect_equal(assoc, lhs, rhs,
                       {{"x", el(x)},
                        {"y", el(y)},
                        {"z", el(z)},
                        {"X", X.to_string()}});
        }
      }
    }
  }
  report.add(std::move(assoc));
  report.add(std::move(unit));

  LawReport isos = LawReport::pass("comparison isomorphisms");
  std::int64_t iso_count = 0, non_iso = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (mult_is_iso(g, x, y, u)) {
        ++iso_count;
      } else {
        ++non_iso;
        isos.note("mult(" + el(x) + "," + el(y) + ") is not an isomorphism");
      }
    }
  }
  isos.count("iso_pairs", iso_count);
  isos.count("non_iso_pairs", non_iso);
  report.add(std::move(isos));
  return report;
}

}  // namespace costrength
