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


// Strengths M.F(X) -> F(M.X) and costrengths F(M.X) -> M.F(X) over a
// monoidal action, their law checkers and enumerators, the correspondence
// between cartesian costrengths and copoints, mates along adjunctions, and a
// catalogue of concrete costrengths.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "costrength/actions.hpp"
#include "costrength/finset.hpp"
#include "costrength/functor.hpp"
#include "costrength/law_report.hpp"

namespace costrength {

enum class Direction { kStrength, kCostrength };

/// Components indexed by a grade M and an object X: M.F(X) -> F(M.X) for a
/// strength, F(M.X) -> M.F(X) for a costrength. Cells are stored for every
/// (grade, object) pair of the two universes, grade-major. Components at
/// other pairs come from the formula if there is one, otherwise by transport
/// along positional bijections from an equinumerous stored cell.
template <Direction D>
class ActionFamily {
 public:
  using Formula = std::function<FinFun(const FinSet& m, const FinSet& x)>;

  ActionFamily(Functor functor, ActionModel action, Universe objects,
               Universe grades, std::vector<FinFun> cells,
               Formula formula = {});
  static ActionFamily tabulate(Functor functor, ActionModel action,
                               Universe objects, Universe grades,
                               Formula formula);

  const Functor& functor() const { return functor_; }
  const ActionModel& action() const { return action_; }
  const Universe& objects() const { return objects_; }
  const Universe& grades() const { return grades_; }
  const std::vector<FinFun>& cells() const { return cells_; }
  const FinFun& cell(std::size_t grade, std::size_t object) const {
    return cells_.at(grade * objects_.size() + object);
  }
  bool has_formula() const { return static_cast<bool>(formula_); }

  FinSet domain(const FinSet& m, const FinSet& x) const;
  FinSet codomain(const FinSet& m, const FinSet& x) const;

  /// Component at (M, X). Throws StructuralError if it cannot be obtained.
  FinFun at(const FinSet& m, const FinSet& x) const;
  /// Whether at(m, x) would succeed.
  bool available(const FinSet& m, const FinSet& x) const;

  /// Copy with one cell replaced; the formula is dropped.
  ActionFamily with_cell(std::size_t grade, std::size_t object,
                         FinFun component) const;
  bool same_cells(const ActionFamily& other) const {
    return cells_ == other.cells_;
  }

  /// "costrength of Writer(2) over cart"
  std::string describe() const;

 private:
  FinFun transport(const FinSet& m, const FinSet& x, std::size_t gi,
                   std::size_t xi) const;

  Functor functor_;
  ActionModel action_;
  Universe objects_;
  Universe grades_;
  std::vector<FinFun> cells_;
  Formula formula_;
};

using Strength = ActionFamily<Direction::kStrength>;
using Costrength = ActionFamily<Direction::kCostrength>;

extern template class ActionFamily<Direction::kStrength>;
extern template class ActionFamily<Direction::kCostrength>;

/// A copoint F => Id.
using Copoint = NatFamily;

// ---------------------------------------------------------------------------
// Law checkers.

/// Naturality in X and in M, the unit triangle and the associativity
/// hexagon. Hexagon cells whose components are unavailable (no formula and
/// no equinumerous stored cell) are counted as skipped and noted.
LawReport check_costrength(const Costrength& c);
LawReport check_strength(const Strength& s);

/// (id . alpha_X) . cst_{M,X} == cst'_{M,X} . alpha_{M.X}
LawReport check_costrong_nat(const NatFamily& alpha, const Costrength& src,
                             const Costrength& tgt);
/// alpha_{M.X} . st_{M,X} == st'_{M,X} . (id . alpha_X)
LawReport check_strong_nat(const NatFamily& alpha, const Strength& src,
                           const Strength& tgt);

/// For a regular action (objects act on themselves), f : X -> I and
/// g : F(Y) -> I: (f (x) g) . cst_{X,Y} == l^-1 . g . F(l_Y) . F(f (x) id).
LawReport check_uniqueness_square(const Costrength& c, const FinFun& f,
                                  const FinFun& g);
/// The square for every f : X -> I and g : F(Y) -> I with X a grade and Y
/// an object of the family's universes.
LawReport check_uniqueness_squares(const Costrength& c);

// ---------------------------------------------------------------------------
// Enumeration.

struct EnumerationStats {
  /// Families natural in both arguments with the unit cells fixed.
  std::size_t natural_candidates = 0;
  /// Candidates passing every law.
  std::size_t lawful = 0;
  std::uint64_t search_nodes = 0;
};

/// Every costrength over the universes: natural families with the unit
/// cells fixed, found by exact search, then filtered by check_costrength.
/// Canonical order, duplicate-free.
std::vector<Costrength> enumerate_costrengths(const Functor& f,
                                              const ActionModel& a,
                                              const Universe& objects,
                                              const Universe& grades,
                                              SearchBudget budget = {},
                                              EnumerationStats* stats = nullptr);
std::vector<Strength> enumerate_strengths(const Functor& f,
                                          const ActionModel& a,
                                          const Universe& objects,
                                          const Universe& grades,
                                          SearchBudget budget = {},
                                          EnumerationStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Basic constructions.

/// Id with identity components.
Costrength identity_costrength(const ActionModel& a, const Universe& objects,
                               const Universe& grades);
Strength identity_strength(const ActionModel& a, const Universe& objects,
                           const Universe& grades);

/// Cartesian st(m, w) = F(x |-> (m, x))(w), the only cartesian strength.
Strength canonical_strength(const Functor& f, const Universe& objects,
                            const Universe& grades);

/// Costrength of outer . inner: cst_{M, inner X} . outer(cst'_{M,X}).
Costrength compose_costrengths(const Costrength& outer,
                               const Costrength& inner);

// ---------------------------------------------------------------------------
// Costrengths and copoints (cartesian action).

/// eps_M = pi_1 . cst_{M,1} . F(m |-> (m, *)), over the grade universe.
Copoint phi(const Costrength& c);
/// cst_{M,X} = (eps_M x id) . <F pi_1, F pi_2>.
Costrength psi(const Copoint& p, const Universe& objects,
               const Universe& grades);

/// pi_2 . cst_{M,X} == F(pi_2) at every cell.
LawReport check_projection_lemma(const Costrength& c);

/// Enumerates copoints and costrengths of F, checks both round trips as
/// exact table equality, the projection lemma for every costrength, and
/// that psi hits every enumerated costrength. Counts "copoints" and
/// "costrengths".
LawReport roundtrip_report(const Functor& f, const Universe& objects,
                           const Universe& grades, SearchBudget budget = {});

/// id x F with eps = pi_1.
std::pair<Functor, Copoint> cofree_copointed(const Functor& f,
                                             const Universe& u);

/// Comonad structure (counit, comultiplication) for Writer(S) and
/// Costate(S).
struct Comonad {
  Functor functor;
  ComponentFormula counit;
  ComponentFormula comult;
};
Comonad writer_comonad(const FinSet& s);
Comonad costate_comonad(const FinSet& s);
/// Counit and coassociativity laws over the universe.
LawReport check_comonad(const Comonad& w, const Universe& u);
/// psi of the counit passes check_costrength, and counit and
/// comultiplication are costrong for it.
LawReport comonad_costrength_report(const Comonad& w, const Universe& objects,
                                    const Universe& grades);

// ---------------------------------------------------------------------------
// Catalogue.

/// Writer(S) over x: (s, (m, x)) |-> (m, (s, x)), induced by the symmetry.
Costrength writer_costrength(const FinSet& s, const Universe& objects,
                             const Universe& grades);

/// Pow over +: U |-> inr {x | inr x in U}.
Costrength powerset_cocart_costrength(const Universe& objects,
                                      const Universe& grades);
/// F(M+X) -> F(1+X) -> F(X) -> M + F(X) through the filter
/// F . Maybe => F. Throws PreconditionError unless the filter is natural.
Costrength filtrable_costrength(const Functor& f, const NatFamily& filter,
                                const Universe& objects,
                                const Universe& grades);
/// Filter Pow . Maybe => Pow, U |-> {x | just x in U}.
NatFamily powerset_filter(const Universe& u);
/// Filter Maybe . Maybe => Maybe collapsing both kinds of nothing.
NatFamily maybe_filter(const Universe& u);
/// Writer(S) over +: (s, inl m) |-> inl m, (s, inr x) |-> inr (s, x).
Costrength writer_cocart_costrength(const FinSet& s, const Universe& objects,
                                    const Universe& grades);
/// Over the op-exponential action: cst(t)(m) = F(ev_m)(t).
Costrength op_exponential_costrength(const Functor& f,
                                     const Universe& objects,
                                     const Universe& grades);
/// The transpose F([M,X]) -> [M,F X] of F(ev) . st_{M,[M,X]} along
/// M x - -| [M,-], for a cartesian strength.
FinFun exponential_mate(const Strength& st, const FinSet& m,
                        const FinSet& x);
/// op_exponential_costrength agrees with exponential_mate of the canonical
/// strength at every cell.
LawReport op_exponential_mate_report(const Functor& f, const Universe& objects,
                                     const Universe& grades);

/// S x G(X) -> G(S x X), (s, w) |-> G(x |-> (s, x))(w).
NatFamily copower_costrength(const FinSet& s, const Functor& g,
                             const Universe& u);
/// Naturality for each listed functor, the unit law (identity for Id) and
/// the composition law cst_{G.H} = G(cst_H) . cst_G for each ordered pair.
LawReport copower_report(const FinSet& s, const std::vector<Functor>& gs,
                         const Universe& u);

/// Costrength of F + G: [act(id, inl) . c1, act(id, inr) . c2]. Throws
/// PreconditionError unless both inputs pass check_costrength over the same
/// action and universes.
Costrength coproduct_costrong(const Costrength& c1, const Costrength& c2);
/// The injections F => F + G and G => F + G as natural families.
std::pair<NatFamily, NatFamily> coproduct_injections(const Functor& f,
                                                     const Functor& g,
                                                     const Universe& u);

// ---------------------------------------------------------------------------
// Adjunctions and mates.

struct AdjunctionModel {
  Functor left;
  Functor right;
  /// Id => right . left
  NatFamily unit;
  /// left . right => Id
  NatFamily counit;
};

/// S x - -| [S, -]
AdjunctionModel product_exponential_adjunction(const FinSet& s,
                                               const Universe& u);
AdjunctionModel identity_adjunction(const Universe& u);
LawReport check_adjunction(const AdjunctionModel& adj);

/// cst_{M,X} = counit_{M.LX} . L(st_{M,LX}) . L(id . unit_X). Throws
/// PreconditionError if the adjunction or the strength fails its laws.
Costrength mate_left(const AdjunctionModel& adj, const Strength& st);
/// st_{M,Y} = R(id . counit_Y) . R(cst_{M,RY}) . unit_{M.RY}.
Strength mate_right(const AdjunctionModel& adj, const Costrength& cst);

// ---------------------------------------------------------------------------

/// Costrong natural transformations (M0 x -, symmetry) => (F, c) against
/// functions M0 -> F(1), for each enumerated cartesian costrength c of F.
/// Checks that transposition alpha |-> alpha_1 . (m |-> (m, *)) and its
/// inverse h |-> (m, x) |-> F(x)(h(m)) are mutually inverse.
LawReport hom_bijection_report(const FinSet& m0, const Functor& f,
                               const Universe& objects,
                               const Universe& grades,
                               SearchBudget budget = {});

}  // namespace costrength
