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


// Syntactic endofunctors on finite sets and natural transformations between
// them, quantified over a finite test universe.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "costrength/finset.hpp"
#include "costrength/law_report.hpp"

namespace costrength {

class Functor {
 public:
  enum class Kind { kConst, kId, kProd, kCoprod, kExp, kPow, kComp };

  static Functor constant(FinSet a);
  static Functor id();
  static Functor prod(Functor f, Functor g);
  static Functor coprod(Functor f, Functor g);
  /// X |-> [S, F(X)]
  static Functor exp(FinSet s, Functor f);
  static Functor pow(Functor f);
  /// X |-> F(G(X))
  static Functor comp(Functor f, Functor g);

  Kind kind() const;
  /// The set carried by Const and Exp nodes.
  const FinSet& set() const;
  /// Children: Prod/Coprod/Comp have two, Exp/Pow one.
  const Functor& first() const;
  const Functor& second() const;

  FinSet operator()(const FinSet& x) const;
  FinFun operator()(const FinFun& f) const;

  /// Expression syntax accepted by the parser; recognises the named sugar.
  std::string to_string() const;

  friend bool operator==(const Functor& a, const Functor& b);

 private:
  struct Node;
  explicit Functor(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// S x -
Functor writer(FinSet s);
/// [S, -]
Functor reader(FinSet s);
/// 1 + -
Functor maybe();
/// S x [S, -]
Functor costate(FinSet s);

/// Finite stand-in for "all objects". Never empty.
class Universe {
 public:
  explicit Universe(std::vector<FinSet> objects);
  static Universe of_sizes(const std::vector<std::size_t>& sizes);

  const std::vector<FinSet>& objects() const { return objects_; }
  std::size_t size() const { return objects_.size(); }
  const FinSet& operator[](std::size_t i) const { return objects_[i]; }

  std::optional<std::size_t> find(const FinSet& x) const;
  std::optional<std::size_t> find_size(std::size_t n) const;
  /// `{0,1,2,3}` for canonical sets, labels otherwise.
  std::string name() const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.objects_ == b.objects_;
  }

 private:
  std::vector<FinSet> objects_;
};

/// Objects `a` with |a| in `sizes`, reusing `base` objects where possible.
Universe with_sizes(const Universe& base, const std::vector<std::size_t>& sizes);

using ComponentFormula = std::function<FinFun(const FinSet&)>;

/// Components of a transformation source => target, one per universe object.
/// An optional formula supplies components at objects outside the universe;
/// without one, such components are transported along a positional bijection
/// from an equinumerous universe object.
class NatFamily {
 public:
  NatFamily(Functor source, Functor target, Universe universe,
            std::vector<FinFun> components, ComponentFormula formula = {});
  /// Components computed by `formula` at every universe object.
  static NatFamily tabulate(Functor source, Functor target, Universe universe,
                            ComponentFormula formula);

  const Functor& source() const { return source_; }
  const Functor& target() const { return target_; }
  const Universe& universe() const { return universe_; }
  const std::vector<FinFun>& components() const { return components_; }
  const FinFun& component(std::size_t i) const { return components_.at(i); }
  bool has_formula() const { return static_cast<bool>(formula_); }

  /// Component at any object reachable from the universe.
  FinFun at(const FinSet& x) const;
  /// Whether at(x) would succeed.
  bool available(const FinSet& x) const {
    return formula_ || universe_.find_size(x.size()).has_value();
  }

  /// Copy with one component replaced; the formula is dropped.
  NatFamily with_component(std::size_t i, FinFun component) const;

  /// Same components over the same universe.
  bool same_components(const NatFamily& other) const {
    return components_ == other.components_;
  }

 private:
  Functor source_;
  Functor target_;
  Universe universe_;
  std::vector<FinFun> components_;
  ComponentFormula formula_;
};

/// Same components, plus a formula reaching objects outside the universe:
/// every element of source(X) of the form source(g)(w) with g : U -> X and U
/// in the universe is sent to target(g)(c_U(w)). at() throws StructuralError
/// when some element has no such presentation or two presentations disagree,
/// which witnesses that the family has no natural extension to X.
NatFamily extend_by_naturality(const NatFamily& family);

/// target(f) . c_A == c_B . source(f) for every f : A -> B in the universe.
LawReport check_natural(const NatFamily& family);

/// Identity and composition preservation, exhaustively over the universe.
LawReport check_functor_laws(const Functor& f, const Universe& u);

struct SearchBudget {
  /// Search nodes before giving up with ResourceError.
  std::uint64_t max_nodes = 10'000'000;
};

/// Every natural family source => target over the universe, duplicate-free,
/// in canonical (lexicographic component table) order.
std::vector<NatFamily> enumerate_nat(const Functor& source,
                                     const Functor& target, const Universe& u,
                                     SearchBudget budget = {});

}  // namespace costrength
