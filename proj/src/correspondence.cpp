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


// The correspondence between cartesian costrengths and copoints, and the
// results built on it.

#include <string>
#include <utility>

#include "costrength/costrength.hpp"
#include "costrength/errors.hpp"

namespace costrength {

namespace {

void require_cartesian(const ActionModel& a, const std::string& what) {
  if (a.name != "cart") {
    throw PreconditionError(what + " needs the cartesian action, got " +
                            a.name);
  }
}

/// m |-> (m, *) : M -> M x 1
FinFun right_unit_section(const FinSet& m) {
  return pair(identity(m), bang(m));
}

}  // namespace

Copoint phi(const Costrength& c) {
  require_cartesian(c.action(), "phi");
  const Functor F = c.functor();
  return NatFamily::tabulate(F, Functor::id(), c.grades(),
                             [c, F](const FinSet& m) {
                               const FinSet one = terminal();
                               return compose(proj1(m, F(one)),
                                              compose(c.at(m, one),
                                                      F(right_unit_section(m))));
                             });
}

Costrength psi(const Copoint& p, const Universe& objects,
               const Universe& grades) {
  if (!(p.target() == Functor::id())) {
    throw StructuralError("psi needs a copoint F => Id, got target " +
                          p.target().to_string());
  }
  const Functor F = p.source();
  return Costrength::tabulate(
      F, cartesian_action(), objects, grades,
      [p, F](const FinSet& m, const FinSet& x) {
        const FinFun split = pair(F(proj1(m, x)), F(proj2(m, x)));
        return compose(product_map(p.at(m), identity(F(x))), split);
      });
}

LawReport check_projection_lemma(const Costrength& c) {
  require_cartesian(c.action(), "the projection lemma");
  const Functor& F = c.functor();
  LawReport r = LawReport::pass("pi_2 . cst = F(pi_2) for " + c.describe());
  for (const auto& m : c.grades().objects()) {
    for (const auto& x : c.objects().objects()) {
      if (!expect_equal(r, compose(proj2(m, F(x)), c.at(m, x)),
                        F(proj2(m, x)),
                        {{"M", m.to_string()}, {"X", x.to_string()}})) {
        return r;
      }
    }
  }
  return r;
}

LawReport roundtrip_report(const Functor& f, const Universe& objects,
                           const Universe& grades, SearchBudget budget) {
  LawReport report =
      LawReport::pass("costrengths and copoints of " + f.to_string());
  report.note("objects " + objects.name() + ", grades " + grades.name());
  const auto copoints = enumerate_nat(f, Functor::id(), grades, budget);
  EnumerationStats stats;
  const auto costrengths = enumerate_costrengths(f, cartesian_action(),
                                                 objects, grades, budget,
                                                 &stats);
  report.count("copoints", static_cast<std::int64_t>(copoints.size()));
  report.count("costrengths", static_cast<std::int64_t>(costrengths.size()));
  report.count("natural_candidates",
               static_cast<std::int64_t>(stats.natural_candidates));

  LawReport psi_phi = LawReport::pass("phi(psi(eps)) = eps");
  LawReport onto = LawReport::pass("psi(eps) is an enumerated costrength");
  for (std::size_t i = 0; i < copoints.size(); ++i) {
    const Costrength c = psi(copoints[i], objects, grades);
    const Copoint back = phi(c);
    for (std::size_t k = 0; k < grades.size(); ++k) {
      if (!expect_equal(psi_phi, back.component(k),
                        copoints[i].component(k),
                        {{"copoint", std::to_string(i)},
                         {"M", grades[k].to_string()}})) {
        break;
      }
    }
    bool hit = false;
    for (const auto& e : costrengths) hit = hit || e.same_cells(c);
    if (!hit && !onto.failed()) {
      const LawReport why = check_costrength(c);
      onto = LawReport::fail(onto.law, {{"copoint", std::to_string(i)}});
      if (const LawReport* bad = why.first_failure()) {
        onto.counterexample.emplace_back("failing law", bad->law);
      }
    }
  }
  report.add(std::move(psi_phi));
  report.add(std::move(onto));

  LawReport phi_psi = LawReport::pass("psi(phi(cst)) = cst");
  LawReport lemma = LawReport::pass("pi_2 . cst = F(pi_2)");
  for (std::size_t i = 0; i < costrengths.size(); ++i) {
    const Costrength back = psi(phi(costrengths[i]), objects, grades);
    for (std::size_t k = 0; k < back.cells().size(); ++k) {
      if (!expect_equal(phi_psi, back.cells()[k], costrengths[i].cells()[k],
                        {{"costrength", std::to_string(i)},
                         {"cell", std::to_string(k)}})) {
        break;
      }
    }
    const LawReport l = check_projection_lemma(costrengths[i]);
    if (l.failed() && !lemma.failed()) {
      lemma = LawReport::fail(lemma.law, l.counterexample);
    }
  }
  lemma.count("costrengths_checked",
              static_cast<std::int64_t>(costrengths.size()));
  report.add(std::move(phi_psi));
  report.add(std::move(lemma));
  return report;
}

std::pair<Functor, Copoint> cofree_copointed(const Functor& f,
                                             const Universe& u) {
  const Functor g = Functor::prod(Functor::id(), f);
  Copoint eps = NatFamily::tabulate(
      g, Functor::id(), u,
      [f](const FinSet& x) { return proj1(x, f(x)); });
  return {g, std::move(eps)};
}

// ---------------------------------------------------------------------------

Comonad writer_comonad(const FinSet& s) {
  Comonad w{writer(s), {}, {}};
  w.counit = [s](const FinSet& x) { return proj2(s, x); };
  // (s, x) |-> (s, (s, x))
  w.comult = [s](const FinSet& x) {
    return pair(proj1(s, x), identity(product(s, x)));
  };
  return w;
}

Comonad costate_comonad(const FinSet& s) {
  Comonad w{costate(s), {}, {}};
  // (s, t) |-> t(s)
  w.counit = [s](const FinSet& x) {
    return compose(eval(s, x), product_symmetry(s, exponential(s, x)));
  };
  // (s, t) |-> (s, s' |-> (s', t))
  w.comult = [s](const FinSet& x) {
    const FinSet wx = product(s, exponential(s, x));
    const FinSet inner = exponential(s, wx);
    Table t(wx.size());
    const std::size_t nt = exponential(s, x).size();
    for (std::size_t i = 0; i < wx.size(); ++i) {
      const std::size_t point = i / nt;
      const std::size_t fn = i % nt;
      Table values(s.size());
      for (std::size_t k = 0; k < s.size(); ++k) values[k] = k * nt + fn;
      t[i] = point * inner.size() + encode_function(values, wx.size());
    }
    return FinFun(wx, product(s, inner), std::move(t));
  };
  return w;
}

LawReport check_comonad(const Comonad& w, const Universe& u) {
  const Functor& W = w.functor;
  const Functor WW = Functor::comp(W, W);
  LawReport r = LawReport::pass("comonad laws " + W.to_string());
  r.add(check_natural(NatFamily::tabulate(W, Functor::id(), u, w.counit)));
  r.add(check_natural(NatFamily::tabulate(W, WW, u, w.comult)));
  LawReport laws = LawReport::pass("counit and coassociativity");
  std::int64_t skipped = 0;
  for (const auto& x : u.objects()) {
    const FinFun d = w.comult(x);
    const Counterexample at = {{"X", x.to_string()}};
    expect_equal(laws, compose(w.counit(W(x)), d), identity(W(x)), at);
    expect_equal(laws, compose(W(w.counit(x)), d), identity(W(x)), at);
    try {
      expect_equal(laws, compose(w.comult(W(x)), d), compose(W(d), d), at);
    } catch (const ResourceError&) {
      ++skipped;
    }
  }
  if (skipped > 0) {
    laws.count("coassociativity_skipped", skipped);
    laws.note("coassociativity skipped where W(W(W(X))) exceeds the size cap");
  }
  r.add(std::move(laws));
  return r;
}

LawReport comonad_costrength_report(const Comonad& w, const Universe& objects,
                                    const Universe& grades) {
  LawReport r = LawReport::pass("comonad " + w.functor.to_string() +
                                " is costrong");
  const Copoint eps =
      NatFamily::tabulate(w.functor, Functor::id(), grades, w.counit);
  const Costrength c = psi(eps, objects, grades);
  r.add(check_costrength(c));
  const Costrength id = identity_costrength(cartesian_action(), objects,
                                            grades);
  r.add(check_costrong_nat(
      NatFamily::tabulate(w.functor, Functor::id(), objects, w.counit), c,
      id));
  r.add(check_costrong_nat(
      NatFamily::tabulate(w.functor, Functor::comp(w.functor, w.functor),
                          objects, w.comult),
      c, compose_costrengths(c, c)));
  return r;
}

// ---------------------------------------------------------------------------

LawReport hom_bijection_report(const FinSet& m0, const Functor& f,
                               const Universe& objects,
                               const Universe& grades, SearchBudget budget) {
  LawReport report = LawReport::pass("costrong maps (" + m0.to_string() +
                                     " x -) => " + f.to_string() +
                                     " against " + m0.to_string() +
                                     " -> F(1)");
  report.note("objects " + objects.name() + ", grades " + grades.name());
  const Functor W = writer(m0);
  const Costrength cw = writer_costrength(m0, objects, grades);
  const auto costrengths = enumerate_costrengths(f, cartesian_action(),
                                                 objects, grades, budget);
  const auto naturals = enumerate_nat(W, f, objects, budget);
  const FinSet one = terminal();
  const FinSet f1 = f(one);
  const std::size_t functions = function_count(m0, f1);
  report.count("costrengths", static_cast<std::int64_t>(costrengths.size()));
  report.count("natural_maps", static_cast<std::int64_t>(naturals.size()));
  report.count("functions", static_cast<std::int64_t>(functions));
  if (costrengths.empty()) {
    report.note(f.to_string() + " has no costrength over these universes");
  }

  auto transpose = [&](const NatFamily& alpha) {
    return compose(alpha.at(one), right_unit_section(m0));
  };
  auto untranspose = [&](const FinFun& h) {
    return NatFamily::tabulate(W, f, objects, [f, h, m0](const FinSet& x) {
      const FinSet fx = f(x);
      Table t(m0.size() * x.size());
      for (std::size_t m = 0; m < m0.size(); ++m) {
        for (std::size_t e = 0; e < x.size(); ++e) {
          t[m * x.size() + e] = f(constant(terminal(), x, e))(h(m));
        }
      }
      return FinFun(product(m0, x), fx, std::move(t));
    });
  };

  for (std::size_t ci = 0; ci < costrengths.size(); ++ci) {
    const Costrength& c = costrengths[ci];
    LawReport part = LawReport::pass("against costrength " +
                                     std::to_string(ci));
    std::vector<const NatFamily*> costrong;
    for (const auto& alpha : naturals) {
      if (check_costrong_nat(alpha, cw, c).passed()) costrong.push_back(&alpha);
    }
    part.count("costrong_maps", static_cast<std::int64_t>(costrong.size()));
    part.count("functions", static_cast<std::int64_t>(functions));
    if (costrong.size() != functions) {
      part = LawReport::fail(
          part.law, {{"costrong_maps", std::to_string(costrong.size())},
                     {"functions", std::to_string(functions)}});
    }
    for (const NatFamily* alpha : costrong) {
      const FinFun h = transpose(*alpha);
      if (!untranspose(h).same_components(*alpha) && !part.failed()) {
        part = LawReport::fail(part.law,
                               {{"round trip from map", h.to_string()}});
      }
    }
    for (const FinFun& h : all_functions(m0, f1)) {
      const NatFamily alpha = untranspose(h);
      if (part.failed()) break;
      if (!check_natural(alpha).passed() ||
          !check_costrong_nat(alpha, cw, c).passed()) {
        part = LawReport::fail(part.law,
                               {{"function not costrong", h.to_string()}});
      } else if (transpose(alpha) != h) {
        part = LawReport::fail(part.law,
                               {{"round trip from function", h.to_string()}});
      }
    }
    report.add(std::move(part));
  }
  return report;
}

}  // namespace costrength
