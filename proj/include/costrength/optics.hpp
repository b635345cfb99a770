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


// Mixed optics over a single action: representatives (M, fwd, bwd),
// composition, normal forms for lenses and prisms, slide closures and the
// transformer induced by a costrong/strong functor pair.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "costrength/actions.hpp"
#include "costrength/costrength.hpp"
#include "costrength/finset.hpp"
#include "costrength/law_report.hpp"

namespace costrength {

/// Representative of an optic (X', Y') -> (X, Y) with residual M:
/// fwd : X' -> M.X and bwd : M.Y -> Y'.
struct OpticRep {
  OpticRep(ActionModel action, FinSet residual, FinSet focus_in,
           FinSet focus_out, FinFun fwd, FinFun bwd);

  ActionModel action;
  FinSet residual;
  FinSet focus_in;   // X
  FinSet focus_out;  // Y
  FinFun fwd;
  FinFun bwd;

  const FinSet& outer_in() const { return fwd.dom(); }    // X'
  const FinSet& outer_out() const { return bwd.cod(); }   // Y'
};

/// Residual I, fwd = unitor^-1, bwd = unitor.
OpticRep identity_optic(const ActionModel& a, const FinSet& x,
                        const FinSet& y);

/// Outer optic o2 followed by inner optic o1: o2's focus is o1's outer
/// boundary, so the composite runs from o2's outer boundary to o1's focus. The residual is M2 (x) M1
/// and the action associator mediates both legs.
OpticRep compose_optics(const OpticRep& o2, const OpticRep& o1);

/// Slides along a grade arrow r : M -> N. Given fwd : X' -> M.X and
/// bwd : N.Y -> Y', returns the two related representatives
/// (N, (r.X) fwd, bwd) and (M, fwd, bwd (r.Y)).
std::pair<OpticRep, OpticRep> slide_pair(const ActionModel& a, const FinFun& r,
                                         const FinSet& focus_in,
                                         const FinSet& focus_out,
                                         const FinFun& fwd, const FinFun& bwd);

struct LensNF {
  FinFun get;  // X' -> X
  FinFun put;  // X' x Y -> Y'
  friend bool operator==(const LensNF&, const LensNF&) = default;
};

struct PrismNF {
  FinFun match;  // X' -> Y' + X
  FinFun build;  // Y -> Y'
  friend bool operator==(const PrismNF&, const PrismNF&) = default;
};

/// Requires the cartesian action.
LensNF lens_nf(const OpticRep& o);
/// Requires the cocartesian action.
PrismNF prism_nf(const OpticRep& o);

/// Residual X', fwd = <id, get>, bwd = put.
OpticRep lens_optic(const FinFun& get, const FinFun& put, const FinSet& y);
/// Residual Y', fwd = match, bwd = [id, build].
OpticRep prism_optic(const FinFun& match, const FinFun& build,
                     const FinSet& x);

/// Whether the action has a normal form deciding optic equivalence.
bool has_normal_form(const ActionModel& a);
/// Equivalence by normal form. Throws PreconditionError for actions without
/// one, or when the two optics do not share a boundary.
bool nf_equal(const OpticRep& a, const OpticRep& b);
/// The normal form flattened to a table of numbers.
std::vector<std::size_t> nf_key(const OpticRep& o);

/// Every representative of one boundary with residual from `residuals`,
/// partitioned by the equivalence generated by all slides between them.
/// Being in the same class proves equivalence; different classes prove
/// nothing beyond the residuals searched.
class SlideClosure {
 public:
  SlideClosure(ActionModel a, FinSet outer_in, FinSet focus_in,
               FinSet focus_out, FinSet outer_out,
               std::vector<FinSet> residuals,
               std::uint64_t max_representatives = 5'000'000);

  std::size_t representatives() const { return parent_.size(); }
  std::size_t classes() const;
  std::uint64_t slides() const { return slides_; }
  /// Throws StructuralError if either optic is outside the searched range.
  bool related(const OpticRep& a, const OpticRep& b) const;
  /// Decodes representative i.
  OpticRep representative(std::size_t i) const;
  std::size_t class_of(std::size_t i) const;

 private:
  std::size_t index(std::size_t residual, std::size_t fwd,
                    std::size_t bwd) const;
  std::size_t find(std::size_t i) const;
  void unite(std::size_t i, std::size_t j);
  std::size_t index_of(const OpticRep& o) const;

  ActionModel action_;
  FinSet outer_in_, focus_in_, focus_out_, outer_out_;
  std::vector<FinSet> residuals_;
  std::vector<std::size_t> offset_, fwd_count_, bwd_count_;
  mutable std::vector<std::size_t> parent_;
  std::uint64_t slides_ = 0;
};

/// For every boundary with sets of size <= max_boundary: normal-form
/// equality coincides with slide reachability over residuals of size
/// <= max_residual. Requires an action with a normal form.
LawReport slide_completeness_report(const ActionModel& a,
                                    std::size_t max_boundary,
                                    std::size_t max_residual);

/// fwd' = cst . F(fwd), bwd' = G(bwd) . st. Checks both families' laws first
/// and throws PreconditionError if either fails.
OpticRep transform_optic(const Costrength& cst, const Strength& st,
                         const OpticRep& o);
OpticRep transform_optic_unchecked(const Costrength& cst, const Strength& st,
                                   const OpticRep& o);

/// Inputs for the transformer functoriality checks.
struct TransformerWorkload {
  /// Boundaries (X, Y) of identity optics.
  std::vector<std::pair<FinSet, FinSet>> identities;
  /// (o2, o1) with o2 composable after o1.
  std::vector<std::pair<OpticRep, OpticRep>> composable;
  /// Pairs of equivalent optics.
  std::vector<std::pair<OpticRep, OpticRep>> equivalent;
};

/// Seeded lens workload over every boundary with sets of size <=
/// max_boundary: identity optics, `samples` random composable pairs and
/// `samples` random slide pairs per boundary, plus each sampled optic
/// paired with its canonical lens. Residuals have size <= max_residual.
TransformerWorkload lens_workload(std::size_t max_boundary,
                                  std::size_t max_residual,
                                  std::size_t samples, std::uint64_t seed);

/// (i) identities go to identities, (ii) composites go to composites,
/// (iii) equivalent inputs give equivalent outputs. Equivalence is decided
/// by normal form.
LawReport transformer_functoriality_report(const Costrength& cst,
                                           const Strength& st,
                                           const TransformerWorkload& w);

}  // namespace costrength
