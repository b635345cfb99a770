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


#include "costrength/suites.hpp"

#include <fnmatch.h>

#include <atomic>
#include <chrono>
#include <random>
#include <thread>
#include <utility>

#include "costrength/actions.hpp"
#include "costrength/costrength.hpp"
#include "costrength/errors.hpp"
#include "costrength/free_monad.hpp"
#include "costrength/optics.hpp"
#include "costrength/streams.hpp"

namespace costrength {

namespace {

Universe small_universe() { return Universe::of_sizes({0, 1, 2}); }

LawReport expect_count(const std::string& law, std::int64_t actual,
                       std::int64_t expected) {
  LawReport r = LawReport::pass(law);
  if (actual != expected) {
    r = LawReport::fail(law, {{"expected", std::to_string(expected)},
                              {"actual", std::to_string(actual)}});
  }
  r.count("value", actual);
  return r;
}

LawReport expect_true(const std::string& law, bool holds) {
  return holds ? LawReport::pass(law)
               : LawReport::fail(law, {{"holds", "false"}});
}

/// Passes iff the deliberately broken input fails its check.
LawReport mutation_witness(const std::string& what, const LawReport& mutated) {
  LawReport r = LawReport::pass("mutation witness: " + what);
  if (const LawReport* hit = mutated.first_failure()) {
    r.note("caught by " + hit->law);
  } else {
    r = LawReport::fail(r.law, {{"problem", "the mutated input passed"}});
  }
  return r;
}

/// Moves entry 0 of the first cell with a nonempty grade, a domain and at
/// least two possible values.
template <Direction D>
ActionFamily<D> mutate(const ActionFamily<D>& c) {
  for (std::size_t g = 0; g < c.grades().size(); ++g) {
    if (c.grades()[g].empty()) continue;
    for (std::size_t x = 0; x < c.objects().size(); ++x) {
      const FinFun& cell = c.cell(g, x);
      if (!cell.dom().empty() && cell.cod().size() >= 2) {
        return c.with_cell(g, x, mutate_entry(cell, 0));
      }
    }
  }
  throw StructuralError("no cell of " + c.describe() + " can be mutated");
}

/// Like mutate, but components outside the universes still come from the
/// original family.
Costrength mutate_keeping_formula(const Costrength& c) {
  const Costrength stored = mutate(c);
  return Costrength::tabulate(
      c.functor(), c.action(), c.objects(), c.grades(),
      [c, stored](const FinSet& m, const FinSet& x) {
        const auto g = c.grades().find(m);
        const auto o = c.objects().find(x);
        return g && o ? stored.cell(*g, *o) : c.at(m, x);
      });
}

NatFamily mutate(const NatFamily& n) {
  for (std::size_t i = 0; i < n.universe().size(); ++i) {
    const FinFun& c = n.component(i);
    if (!c.dom().empty() && c.cod().size() >= 2) {
      return n.with_component(i, mutate_entry(c, 0));
    }
  }
  throw StructuralError("no component can be mutated");
}

std::vector<Functor> roundtrip_functors() {
  const FinSet two(2);
  return {Functor::id(), writer(two), reader(two), costate(two),
          Functor::prod(Functor::id(), maybe()), maybe()};
}

// ---------------------------------------------------------------------------

LawReport actegory(const SuiteConfig& cfg) {
  LawReport r = LawReport::pass("actions are coherent");
  r.add(check_action_coherence(cartesian_action(), cfg.universe, cfg.universe));
  r.add(check_action_coherence(cocartesian_action(), cfg.universe,
                               cfg.universe));
  r.add(check_action_coherence(op_exponential_action(), small_universe(),
                               small_universe()));
  ActionModel broken = cartesian_action();
  broken.associator = [orig = broken.associator](
                          const FinSet& m, const FinSet& n, const FinSet& x) {
    FinFun f = orig(m, n, x);
    return f.dom().size() >= 2 ? mutate_entry(f, 0) : f;
  };
  r.add(mutation_witness("corrupted associator",
                         check_action_coherence(broken, cfg.universe,
                                                cfg.universe)));
  return r;
}

LawReport graded_maybe(const SuiteConfig&) {
  const Universe u = small_universe();
  const GradedMonad g = maybe_graded_monad();
  LawReport r = LawReport::pass("graded Maybe is lax monoidal");
  r.add(check_graded_laws(g, u));
  const std::size_t f = 0, s = 1, m = 2;
  r.add(expect_true("comparison at (m,f) is not an isomorphism",
                    !mult_is_iso(g, m, f, u)));
  r.add(expect_true("comparison at (s,s) is an isomorphism",
                    mult_is_iso(g, s, s, u)));
  r.add(check_graded_laws(identity_graded_monad(), u));
  return r;
}

LawReport strength_uniqueness(const SuiteConfig& cfg) {
  const Universe u = small_universe();
  LawReport r = LawReport::pass("every functor has exactly one strength");
  r.note("universe " + u.name());
  std::vector<Functor> fs = roundtrip_functors();
  fs.push_back(Functor::pow(Functor::id()));
  for (const auto& f : fs) {
    const auto all = enumerate_strengths(f, cartesian_action(), u, u, cfg.budget);
    r.add(expect_count("strengths of " + f.to_string(),
                       static_cast<std::int64_t>(all.size()), 1));
    if (all.size() == 1) {
      r.add(expect_true("the strength of " + f.to_string() + " is canonical",
                        all[0].same_cells(canonical_strength(f, u, u))));
    }
    r.add(check_strength(canonical_strength(f, u, u)));
  }
  r.add(mutation_witness(
      "corrupted canonical strength",
      check_strength(mutate(canonical_strength(reader(FinSet(2)), u, u)))));
  return r;
}

LawReport writer_comonad_suite(const SuiteConfig& cfg) {
  const FinSet two(2);
  const Universe& u = cfg.universe;
  const Costrength c = writer_costrength(two, u, u);
  LawReport r = LawReport::pass("Writer comonad costrength by symmetry");
  r.add(check_costrength(c));
  r.add(check_comonad(writer_comonad(two), u));
  r.add(comonad_costrength_report(writer_comonad(two), u, u));
  const auto all = enumerate_costrengths(writer(two), cartesian_action(), u, u,
                                         cfg.budget);
  r.add(expect_count("costrengths of Writer(2)",
                     static_cast<std::int64_t>(all.size()), 1));
  if (all.size() == 1) {
    r.add(expect_true("the enumerated costrength is the symmetry",
                      all[0].same_cells(c)));
  }
  r.add(mutation_witness("corrupted Writer costrength",
                         check_costrength(mutate(c))));
  return r;
}

LawReport reader_count(const SuiteConfig& cfg) {
  const FinSet s(2);
  const Functor f = reader(s);
  const Universe& u = cfg.universe;
  EnumerationStats stats;
  const auto all =
      enumerate_costrengths(f, cartesian_action(), u, u, cfg.budget, &stats);
  LawReport r = LawReport::pass("Reader costrengths correspond to elements");
  r.add(expect_count("costrengths of Reader(2)",
                     static_cast<std::int64_t>(all.size()),
                     static_cast<std::int64_t>(s.size())));
  std::int64_t matched = 0;
  for (std::size_t e = 0; e < s.size(); ++e) {
    const NatFamily at_e = NatFamily::tabulate(
        f, Functor::id(), u,
        [s, e](const FinSet& x) { return eval_at(s, x, e); });
    const Costrength c = psi(at_e, u, u);
    for (const auto& found : all) matched += found.same_cells(c);
  }
  r.add(expect_count("enumerated costrengths matching evaluation at a point",
                     matched, static_cast<std::int64_t>(s.size())));
  r.count("natural_candidates", static_cast<std::int64_t>(stats.natural_candidates));
  return r;
}

LawReport costate_count(const SuiteConfig& cfg) {
  const Functor f = costate(FinSet(2));
  const Universe& u = cfg.universe;
  EnumerationStats stats;
  const auto all =
      enumerate_costrengths(f, cartesian_action(), u, u, cfg.budget, &stats);
  LawReport r = LawReport::pass("Costate costrengths are not unique");
  r.add(expect_true("at least two costrengths of Costate(2)", all.size() >= 2));
  for (const auto& c : all) r.add(check_costrength(c));
  r.count("costrengths", static_cast<std::int64_t>(all.size()));
  r.count("natural_candidates", static_cast<std::int64_t>(stats.natural_candidates));
  return r;
}

LawReport maybe_impossible(const SuiteConfig& cfg) {
  const Universe& u = cfg.universe;
  LawReport r = LawReport::pass("Maybe has no cartesian costrength");
  const auto cst = enumerate_costrengths(maybe(), cartesian_action(), u, u,
                                         cfg.budget);
  r.add(expect_count("costrengths of Maybe", static_cast<std::int64_t>(cst.size()), 0));
  r.add(expect_count("copoints of Maybe",
                     static_cast<std::int64_t>(
                         enumerate_nat(maybe(), Functor::id(), u, cfg.budget).size()),
                     0));
  const Functor point = Functor::constant(FinSet(1));
  r.add(expect_count("costrengths of Const(1)",
                     static_cast<std::int64_t>(
                         enumerate_costrengths(point, cartesian_action(), u, u,
                                               cfg.budget)
                             .size()),
                     0));
  r.count("costrengths", static_cast<std::int64_t>(cst.size()));
  return r;
}

LawReport powerset_cocart(const SuiteConfig& cfg) {
  const Costrength c = powerset_cocart_costrength(cfg.universe, cfg.universe);
  LawReport r = LawReport::pass("powerset is costrong over +");
  r.add(check_costrength(c));
  r.add(mutation_witness("corrupted powerset costrength",
                         check_costrength(mutate(c))));
  return r;
}

LawReport filtrable(const SuiteConfig& cfg) {
  const Universe& u = cfg.universe;
  const Functor pow = Functor::pow(Functor::id());
  LawReport r = LawReport::pass("filtrable functors are costrong over +");
  const Costrength p = filtrable_costrength(pow, powerset_filter(u), u, u);
  const Costrength m = filtrable_costrength(maybe(), maybe_filter(u), u, u);
  r.add(check_costrength(p));
  r.add(check_costrength(m));
  r.add(expect_true("the powerset filter gives the powerset costrength",
                    p.same_cells(powerset_cocart_costrength(u, u))));
  bool rejected = false;
  try {
    filtrable_costrength(pow, mutate(powerset_filter(u)), u, u);
  } catch (const PreconditionError&) {
    rejected = true;
  }
  r.add(expect_true("a non-natural filter is rejected", rejected));
  r.add(mutation_witness("corrupted Maybe costrength",
                         check_costrength(mutate(m))));
  return r;
}

LawReport writer_cocart(const SuiteConfig& cfg) {
  const Costrength c =
      writer_cocart_costrength(FinSet(2), cfg.universe, cfg.universe);
  LawReport r = LawReport::pass("Writer is costrong over +");
  r.add(check_costrength(c));
  r.add(mutation_witness("corrupted Writer costrength over +",
                         check_costrength(mutate(c))));
  return r;
}

LawReport op_exponential(const SuiteConfig& cfg) {
  // The hexagon needs [M (x) N, X], which is 3^9 for grades of size three,
  // so grades stop at two. Objects stay at the configured universe except
  // for Reader and Pow, whose values at [4, 3] overflow the size cap.
  const Universe& u = cfg.universe;
  const Universe grades = with_sizes(u, {0, 1, 2});
  const Universe small = small_universe();
  LawReport r = LawReport::pass("every functor is costrong over the op-exponential action");
  r.note("objects " + u.name() + ", grades " + grades.name() +
         "; Reader and Pow on " + small.name());
  for (const Functor& f : {writer(FinSet(2)), maybe()}) {
    r.add(check_costrength(op_exponential_costrength(f, u, grades)));
    r.add(op_exponential_mate_report(f, u, grades));
  }
  for (const Functor& f : {reader(FinSet(2)), Functor::pow(Functor::id())}) {
    r.add(check_costrength(op_exponential_costrength(f, small, small)));
    r.add(op_exponential_mate_report(f, small, small));
  }
  r.add(mutation_witness(
      "corrupted op-exponential costrength",
      check_costrength(mutate(op_exponential_costrength(maybe(), u, grades)))));
  return r;
}

LawReport copower(const SuiteConfig& cfg) {
  const Universe& u = cfg.universe;
  const FinSet s(2);
  LawReport r = LawReport::pass("copowers distribute over every functor");
  r.note("universe " + u.name());
  r.add(copower_report(s,
                       {Functor::id(), maybe(), Functor::pow(Functor::id()),
                        reader(s), writer(s)},
                       u));
  const NatFamily broken = mutate(copower_costrength(s, maybe(), u));
  r.add(mutation_witness("corrupted copower component", check_natural(broken)));
  return r;
}

LawReport uniqueness_prop(const SuiteConfig& cfg) {
  const Universe& u = cfg.universe;
  LawReport r = LawReport::pass("costrengths satisfy the uniqueness square");
  r.add(check_uniqueness_squares(writer_costrength(FinSet(2), u, u)));
  r.add(check_uniqueness_squares(identity_costrength(cartesian_action(), u, u)));
  for (const auto& c : enumerate_costrengths(reader(FinSet(2)),
                                             cartesian_action(), u, u,
                                             cfg.budget)) {
    r.add(check_uniqueness_squares(c));
  }
  // Every map into the terminal unit is the same, so the square cannot
  // tell costrengths apart; the corrupted family passes too.
  LawReport blind = check_uniqueness_squares(
      mutate(writer_costrength(FinSet(2), u, u)));
  r.add(expect_true("a corrupted costrength also satisfies the square",
                    blind.passed()));
  return r;
}

LawReport projection_lemma(const SuiteConfig& cfg) {
  const Universe& u = cfg.universe;
  LawReport r = LawReport::pass("pi_2 . cst = F(pi_2) for every costrength");
  std::int64_t checked = 0;
  for (const auto& f : roundtrip_functors()) {
    for (const auto& c : enumerate_costrengths(f, cartesian_action(), u, u,
                                               cfg.budget)) {
      r.add(check_projection_lemma(c));
      ++checked;
    }
  }
  r.count("costrengths", checked);
  r.add(mutation_witness(
      "corrupted Writer costrength",
      check_projection_lemma(mutate(writer_costrength(FinSet(2), u, u)))));
  return r;
}

LawReport correspondence(const SuiteConfig& cfg) {
  LawReport r = LawReport::pass("costrengths correspond to copoints");
  for (const auto& f : roundtrip_functors()) {
    r.add(roundtrip_report(f, cfg.universe, cfg.universe, cfg.budget));
  }
  return r;
}

LawReport comonads(const SuiteConfig& cfg) {
  const Universe& u = cfg.universe;
  const Universe small = small_universe();
  LawReport r = LawReport::pass("comonads are costrong");
  for (std::size_t s : {1, 2}) {
    r.add(check_comonad(writer_comonad(FinSet(s)), u));
    r.add(comonad_costrength_report(writer_comonad(FinSet(s)), u, u));
  }
  r.add(check_comonad(costate_comonad(FinSet(2)), small));
  r.add(comonad_costrength_report(costate_comonad(FinSet(2)), small, small));
  return r;
}

LawReport cofree(const SuiteConfig& cfg) {
  const Universe& u = cfg.universe;
  LawReport r = LawReport::pass("cofree copointed functors are costrong");
  for (const Functor& f : {maybe(), reader(FinSet(2))}) {
    const auto [g, eps] = cofree_copointed(f, u);
    r.add(check_natural(eps));
    r.add(check_costrength(psi(eps, u, u)));
  }
  const Universe small = small_universe();
  const auto [gp, epsp] = cofree_copointed(Functor::pow(Functor::id()), small);
  r.add(check_natural(epsp));
  r.add(check_costrength(psi(epsp, small, small)));
  const auto [g, eps] = cofree_copointed(maybe(), u);
  r.add(mutation_witness("corrupted cofree costrength",
                         check_costrength(mutate(psi(eps, u, u)))));
  return r;
}

LawReport optics(const SuiteConfig&) {
  const Universe u = Universe::of_sizes({0, 1, 2, 3});
  LawReport r = LawReport::pass("optics");
  r.add(slide_completeness_report(cartesian_action(), 2, 3));
  r.add(slide_completeness_report(cocartesian_action(), 2, 3));
  const Costrength cst = writer_costrength(FinSet(2), u, u);
  const Strength st = canonical_strength(writer(FinSet(2)), u, u);
  const TransformerWorkload w = lens_workload(3, 3, 2, 20261017);
  r.add(transformer_functoriality_report(cst, st, w));
  r.add(transformer_functoriality_report(
      identity_costrength(cartesian_action(), u, u),
      identity_strength(cartesian_action(), u, u), w));
  r.add(mutation_witness("corrupted Writer strength",
                         transformer_functoriality_report(cst, mutate(st), w)));
  return r;
}

LawReport streams_lift(const SuiteConfig& cfg) {
  const Universe& u = cfg.universe;
  const FinSet m(2);
  LawReport r = LawReport::pass("lifted automata are extracted by the copoint");
  std::int64_t automata = 0, costrengths = 0;
  for (const Functor& f : {writer(FinSet(2)), costate(FinSet(2))}) {
    for (const auto& eps : enumerate_nat(f, Functor::id(), u, cfg.budget)) {
      const Costrength c = psi(extend_by_naturality(eps), u, Universe({m}));
      ++costrengths;
      LawReport each = LawReport::pass("extraction for " + f.to_string() +
                                       " copoint " +
                                       std::to_string(costrengths));
      for (std::size_t k = 1; k <= 4 && !each.failed(); ++k) {
        const FinSet states(k);
        for (const FinFun& out : all_functions(states, m)) {
          for (const FinFun& next : all_functions(states, states)) {
            const StreamAutomaton a(states, m, out, next);
            ++automata;
            const LawReport one = extraction_semantics_report(a, c);
            if (one.failed()) {
              each = one;
              break;
            }
            if (k == 4) continue;
            const auto [q, h] = minimize(a);
            const LawReport pres = morphism_preservation_report(a, q, h, c);
            if (pres.failed()) {
              each = pres;
              break;
            }
          }
          if (each.failed()) break;
        }
      }
      r.add(std::move(each));
    }
  }
  r.count("costrengths", costrengths);
  r.count("automata", automata);
  // Extraction by a copoint that is not natural breaks lifting.
  const auto eps = enumerate_nat(writer(FinSet(2)), Functor::id(), u, cfg.budget);
  const Costrength broken = psi(mutate(eps.at(0)), u, Universe({m}));
  const FinSet two(2);
  const StreamAutomaton flip(two, m, identity(two),
                             FinFun(two, two, {1, 0}));
  r.add(mutation_witness("costrength from a corrupted copoint",
                         extraction_semantics_report(flip, broken)));
  return r;
}

LawReport streams_upto(const SuiteConfig& cfg) {
  const Universe& u = cfg.universe;
  const FinSet m(2);
  const Functor f = Functor::prod(Functor::id(), Functor::id());
  LawReport r = LawReport::pass("coinduction up to Id x Id");
  std::mt19937_64 rng(20261017);
  std::int64_t systems = 0;
  for (int which = 0; which < 2; ++which) {
    const NatFamily eps = NatFamily::tabulate(
        f, Functor::id(), u, [which](const FinSet& x) {
          return which == 0 ? proj1(x, x) : proj2(x, x);
        });
    for (std::size_t k = 1; k <= 3; ++k) {
      const FinSet x(k);
      const FinSet target = product(m, f(x));
      const std::size_t total = function_count(x, target);
      const std::size_t take = std::min<std::size_t>(total, 24);
      std::uniform_int_distribution<std::size_t> pick(0, total - 1);
      LawReport part = LawReport::pass(
          std::string("solutions for ") + (which == 0 ? "pi_1" : "pi_2") +
          " on " + std::to_string(k) + " elements");
      for (std::size_t i = 0; i < take && !part.failed(); ++i) {
        const FinFun phi =
            function_at(x, target, take == total ? i : pick(rng));
        const UpToSystem s{x, m, f, eps, phi};
        const StreamAutomaton sol = solve_up_to(s);
        std::vector<Lasso> b;
        for (std::size_t e = 0; e < k; ++e) b.push_back(behavior_lasso(sol, e));
        const LawReport diagram = bartels_report(s, b);
        if (diagram.failed()) part = diagram;
        const LawReport unique = up_to_uniqueness_report(s);
        if (unique.failed()) part = unique;
        ++systems;
      }
      r.add(std::move(part));
    }
  }
  r.count("systems", systems);
  return r;
}

LawReport hom_bijection(const SuiteConfig& cfg) {
  LawReport r = LawReport::pass("costrong maps out of M0 x - are points of F(1)");
  for (std::size_t m0 : {0, 1, 2}) {
    for (const Functor& f : {writer(FinSet(2)), reader(FinSet(2))}) {
      r.add(hom_bijection_report(FinSet(m0), f, cfg.universe, cfg.universe,
                                 cfg.budget));
    }
  }
  return r;
}

LawReport doctrinal(const SuiteConfig&) {
  const Universe u = small_universe();
  LawReport r = LawReport::pass("mates of the Reader strength");
  r.note("universe " + u.name());
  for (std::size_t s : {1, 2}) {
    const FinSet set(s);
    const AdjunctionModel adj = product_exponential_adjunction(set, u);
    r.add(check_adjunction(adj));
    const Strength st = canonical_strength(reader(set), u, u);
    const Costrength left = mate_left(adj, st);
    r.add(check_costrength(left));
    r.add(expect_true("mate of Reader(" + std::to_string(s) +
                          ") strength is the Writer costrength",
                      left.same_cells(writer_costrength(set, u, u))));
    r.add(expect_true("mating back gives the strength",
                      mate_right(adj, left).same_cells(st)));
  }
  bool rejected = false;
  const AdjunctionModel adj = product_exponential_adjunction(FinSet(2), u);
  try {
    mate_left(adj, mutate(canonical_strength(reader(FinSet(2)), u, u)));
  } catch (const PreconditionError&) {
    rejected = true;
  }
  r.add(expect_true("a corrupted strength has no mate", rejected));
  return r;
}

LawReport coproducts(const SuiteConfig& cfg) {
  const Universe& u = cfg.universe;
  LawReport r = LawReport::pass("coproducts of costrong functors");
  const Costrength w = writer_costrength(FinSet(2), u, u);
  const Costrength id = identity_costrength(cartesian_action(), u, u);
  for (const auto& [c1, c2] :
       std::vector<std::pair<Costrength, Costrength>>{{w, w}, {w, id}, {id, id}}) {
    const Costrength sum = coproduct_costrong(c1, c2);
    r.add(check_costrength(sum));
    const auto [i1, i2] = coproduct_injections(c1.functor(), c2.functor(), u);
    r.add(check_costrong_nat(i1, c1, sum));
    r.add(check_costrong_nat(i2, c2, sum));
  }
  const Costrength cocart =
      coproduct_costrong(writer_cocart_costrength(FinSet(2), u, u),
                         powerset_cocart_costrength(u, u));
  r.add(check_costrength(cocart));
  r.add(mutation_witness("corrupted coproduct costrength",
                         check_costrength(mutate(coproduct_costrong(w, id)))));
  return r;
}

LawReport free_monad(const SuiteConfig&) {
  const Universe u = small_universe();
  LawReport r = LawReport::pass("free monads of costrong functors are costrong");
  for (std::size_t s : {1, 2}) {
    r.add(free_monad_law_report(writer_costrength(FinSet(s), u, u), 3, u, u));
  }
  r.add(free_monad_law_report(identity_costrength(cartesian_action(), u, u), 3,
                              u, u));
  const Costrength broken =
      mutate_keeping_formula(writer_costrength(FinSet(2), u, u));
  const TermMonad t(writer(FinSet(2)), 2);
  r.add(mutation_witness("free costrength of a corrupted costrength",
                         check_costrength(free_costrength(t, broken, 2, u, u))));
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> suites = {
      {"actegory", "actions of finite sets are coherent", actegory},
      {"graded-maybe", "graded Maybe is lax, not strong, monoidal", graded_maybe},
      {"ex-2.6", "every functor has a unique cartesian strength",
       strength_uniqueness},
      {"ex-2.7", "the Writer comonad is costrong via the symmetry",
       writer_comonad_suite},
      {"ex-2.8-1a", "Reader(S) costrengths are the elements of S", reader_count},
      {"ex-2.8-1b", "Costate(S) costrengths are not unique", costate_count},
      {"ex-2.8-1c", "Maybe has no cartesian costrength", maybe_impossible},
      {"ex-2.8-2a", "powerset is costrong over coproducts", powerset_cocart},
      {"ex-2.8-2b", "filtrable functors are costrong over coproducts", filtrable},
      {"ex-2.8-2c", "Writer is costrong over coproducts", writer_cocart},
      {"ex-2.8-3", "functors are costrong over the op-exponential action",
       op_exponential},
      {"ex-2.8-4", "copowers distribute over every functor", copower},
      {"prop-uniqueness", "costrengths satisfy the uniqueness square",
       uniqueness_prop},
      {"lemma-3", "pi_2 . cst = F(pi_2)", projection_lemma},
      {"thm-3", "cartesian costrengths correspond to copoints", correspondence},
      {"cor-comonad", "comonads on sets are costrong", comonads},
      {"cor-cofree", "cofree copointed functors are costrong", cofree},
      {"optics", "optics, normal forms and the transformer", optics},
      {"streams-lift", "costrengths lift automata to F-wrapped states",
       streams_lift},
      {"streams-upto", "coinduction up to a copointed functor", streams_upto},
      {"app-adjunction", "costrong maps out of M0 x - are points of F(1)",
       hom_bijection},
      {"app-doctrinal", "mates carry strengths to costrengths", doctrinal},
      {"app-coproducts", "coproducts of costrong functors are costrong",
       coproducts},
      {"app-free-monad", "free monads of costrong functors are costrong",
       free_monad},
  };
  return suites;
}

const SuiteInfo& find_suite(const std::string& id) {
  for (const auto& s : suite_registry()) {
    if (s.id == id) return s;
  }
  throw StructuralError("unknown suite " + id);
}

SuiteResult run_suite(const SuiteInfo& suite, const SuiteConfig& config) {
  SuiteResult out;
  out.id = suite.id;
  out.statement = suite.statement;
  const auto start = std::chrono::steady_clock::now();
  try {
    out.report = suite.run(config);
    out.status = out.report.status;
  } catch (const ResourceError& e) {
    out.status = Status::kSkipped;
    out.skip_reason = e.what();
    out.report = LawReport::skipped(suite.statement, e.what());
  }
  out.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return out;
}

std::vector<SuiteResult> run_suites(const std::string& glob,
                                    const SuiteConfig& config,
                                    std::size_t jobs) {
  std::vector<const SuiteInfo*> chosen;
  for (const auto& s : suite_registry()) {
    if (fnmatch(glob.c_str(), s.id.c_str(), 0) == 0) chosen.push_back(&s);
  }
  std::vector<SuiteResult> results(chosen.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < chosen.size(); i = next++) {
      results[i] = run_suite(*chosen[i], config);
    }
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(jobs, chosen.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

Json SuiteResult::to_json(bool with_timing) const {
  Json j;
  j["suite"] = id;
  j["statement"] = statement;
  j["status"] = costrength::to_string(status);
  if (!skip_reason.empty()) j["skip_reason"] = skip_reason;
  j["report"] = report.to_json();
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string SuiteResult::to_text(bool with_timing) const {
  std::string s = "== " + id + ": " + statement + " [" +
                  costrength::to_string(status) + "]";
  if (with_timing) s += " (" + std::to_string(static_cast<long long>(elapsed_ms)) + " ms)";
  s += "\n";
  if (!skip_reason.empty()) s += "skipped: " + skip_reason + "\n";
  s += report.to_text();
  return s;
}

}  // namespace costrength
