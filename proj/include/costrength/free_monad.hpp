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


// Depth-truncated free monads T_d X = X + F(T_{d-1} X), grafting, and the
// costrength induced on them by a costrength of F.

#pragma once

#include <cstddef>

#include "costrength/costrength.hpp"
#include "costrength/finset.hpp"
#include "costrength/functor.hpp"
#include "costrength/law_report.hpp"

namespace costrength {

/// Terms of F up to a depth cap. T_0 = Id and T_d = Id + F . T_{d-1} as
/// functor expressions, so T_d(f) is available for every f. In T_d(X) the
/// first |X| positions are the variables; the rest are operations Op(w)
/// with w in F(T_{d-1} X).
class TermMonad {
 public:
  explicit TermMonad(Functor f, std::size_t max_depth = 3);

  const Functor& base() const { return f_; }
  std::size_t max_depth() const { return max_depth_; }

  /// T_d. Throws PreconditionError beyond the depth cap.
  const Functor& terms(std::size_t d) const;
  /// T_d(X) relabelled as Var(x) and Op(...) terms; positions agree with
  /// terms(d)(x). T_0(X) is X itself.
  FinSet build_terms(const FinSet& x, std::size_t d) const;

  /// X -> T_0 X.
  FinFun unit(const FinSet& x) const;
  /// T_{d-1} X -> T_d X.
  FinFun step_inclusion(const FinSet& x, std::size_t d) const;
  /// T_from X -> T_to X for from <= to.
  FinFun inclusion(const FinSet& x, std::size_t from, std::size_t to) const;
  /// For sigma : X -> T_e Y, the substitution T_d X -> T_{d+e} Y.
  FinFun graft(const FinFun& sigma, const FinSet& y, std::size_t e,
               std::size_t d) const;
  /// T_d(T_e X) -> T_{d+e} X.
  FinFun mult(const FinSet& x, std::size_t d, std::size_t e) const;

 private:
  Functor f_;
  std::size_t max_depth_;
  std::vector<Functor> levels_;
};

/// cst^T at depth d: T_d(M x X) -> M x T_d(X), with cst^T_0 the identity and
///   Var(m, x) |-> (m, Var x)
///   Op(w)     |-> (m, Op u)  where (m, u) = cst_{M, T_{d-1} X}(F(cst^T_{d-1})(w)).
/// Cartesian action only.
FinFun free_costrength_component(const TermMonad& t, const Costrength& c,
                                 const FinSet& m, const FinSet& x,
                                 std::size_t d);
/// The same as a costrength of T_d (formula-backed).
Costrength free_costrength(const TermMonad& t, const Costrength& c,
                           std::size_t d, const Universe& objects,
                           const Universe& grades);

/// Reads the leaf of a term through a copoint of F:
/// Var(x) |-> x, Op(w) |-> eps(F(leaf)(w)).
FinFun leaf_extractor(const TermMonad& t, const Copoint& eps, const FinSet& x,
                      std::size_t d);

/// Monad unit and associativity laws where grafting stays within the depth
/// cap (other instances are listed as skipped), costrength laws and the
/// projection lemma for every cst^T_d, costrong-ness of the unit and of the
/// multiplication, compatibility of consecutive depths, and agreement of
/// phi(cst^T_d) with the leaf extractor. Requires c to be cartesian.
LawReport free_monad_law_report(const Costrength& c, std::size_t max_depth,
                                const Universe& objects,
                                const Universe& grades);

}  // namespace costrength
