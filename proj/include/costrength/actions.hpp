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


// Monoidal actions of finite grade sets on finite sets, and graded monads
// over preordered monoids.

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "costrength/finset.hpp"
#include "costrength/functor.hpp"
#include "costrength/law_report.hpp"

namespace costrength {

enum class Variance { kCovariant, kContravariant };

/// An action (M, X) |-> M.X of a monoidal category of finite grade sets.
///
/// Grade arrows are passed as Set functions. For covariant actions a grade
/// arrow M -> M' is a function M -> M'; for contravariant ones (the grade
/// category is Set^op) it is the underlying function M' -> M.
struct ActionModel {
  std::string name;
  Variance variance = Variance::kCovariant;
  FinSet unit;
  std::function<FinSet(const FinSet&, const FinSet&)> tensor;
  /// g (x) h on grade arrows.
  std::function<FinFun(const FinFun&, const FinFun&)> tensor_mor;
  std::function<FinSet(const FinSet&, const FinSet&)> act;
  /// g . f : M.X -> M'.Y for a grade arrow g : M -> M' and f : X -> Y.
  std::function<FinFun(const FinFun&, const FinFun&)> act_mor;
  /// (M (x) N).X -> M.(N.X)
  std::function<FinFun(const FinSet&, const FinSet&, const FinSet&)>
      associator;
  /// I.X -> X
  std::function<FinFun(const FinSet&)> unitor;
  /// Grade arrows (M (x) N) (x) P -> M (x) (N (x) P), I (x) M -> M and
  /// M (x) I -> M.
  std::function<FinFun(const FinSet&, const FinSet&, const FinSet&)>
      grade_associator;
  std::function<FinFun(const FinSet&)> grade_left_unitor;
  std::function<FinFun(const FinSet&)> grade_right_unitor;

  /// Source and target grades of a grade arrow.
  const FinSet& grade_source(const FinFun& g) const {
    return variance == Variance::kCovariant ? g.dom() : g.cod();
  }
  const FinSet& grade_target(const FinFun& g) const {
    return variance == Variance::kCovariant ? g.cod() : g.dom();
  }
  /// Every grade arrow M -> M'.
  std::vector<FinFun> grade_arrows(const FinSet& m, const FinSet& m2) const;

  /// id_M . f
  FinFun act_on(const FinSet& m, const FinFun& f) const {
    return act_mor(identity(m), f);
  }
  /// g . id_X
  FinFun act_grade(const FinFun& g, const FinSet& x) const {
    return act_mor(g, identity(x));
  }
};

/// M.X = M x X, I = 1.
ActionModel cartesian_action();
/// M.X = M + X, I = 0.
ActionModel cocartesian_action();
/// M.X = [M, X] with Set^op acting, tensor x, I = 1.
ActionModel op_exponential_action();

/// Looks up `cart`, `cocart` or `op-exp`. Throws StructuralError otherwise.
ActionModel action_by_name(const std::string& name);

/// Naturality and invertibility of associator and unitor, pentagon and both
/// triangles, over all grades in `grades` and objects in `u`. Every part is
/// checked; each reports its own first counterexample.
LawReport check_action_coherence(const ActionModel& a, const Universe& u,
                                 const Universe& grades);

// ---------------------------------------------------------------------------

/// ((M, <=), *, e) with elements 0..n-1.
struct PreorderedMonoid {
  std::vector<std::string> elements;
  /// leq[x][y] iff x <= y
  std::vector<std::vector<bool>> leq;
  /// mult[x][y] = x * y
  std::vector<std::vector<std::size_t>> mult;
  std::size_t unit = 0;

  std::size_t size() const { return elements.size(); }
  /// Monoid laws, reflexivity, transitivity and monotonicity of *.
  LawReport check() const;
};

/// A lax monoidal functor from a preordered monoid to endofunctors:
/// functors T x, maps T x => T y for x <= y, a unit Id => T e and a
/// multiplication T x . T y => T (x * y).
struct GradedMonad {
  std::string name;
  PreorderedMonoid grades;
  std::vector<Functor> functors;
  std::function<FinFun(std::size_t, std::size_t, const FinSet&)> on_leq;
  std::function<FinFun(const FinSet&)> unit;
  std::function<FinFun(std::size_t, std::size_t, const FinSet&)> mult;

  Functor composite(std::size_t x, std::size_t y) const {
    return Functor::comp(functors[x], functors[y]);
  }
};

/// Grades f <= m, s <= m with unit s; T f = 1, T s = Id, T m = Maybe.
GradedMonad maybe_graded_monad();
/// One grade acting by the identity functor.
GradedMonad identity_graded_monad();

/// Preorder and monoid laws, on_leq functoriality, naturality of every
/// comparison family, grade-naturality of the multiplication, associativity
/// and unit laws. Adds a part "comparison isomorphisms" recording, for each
/// pair (x, y), whether mult(x, y) is invertible at every universe object.
LawReport check_graded_laws(const GradedMonad& g, const Universe& u);

/// Whether mult(x, y) is a bijection at every object of the universe.
bool mult_is_iso(const GradedMonad& g, std::size_t x, std::size_t y,
                 const Universe& u);

}  // namespace costrength
