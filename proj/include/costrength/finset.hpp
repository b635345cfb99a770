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


// Exact finite-set category: objects are labelled finite sets, morphisms are
// total functions stored as index tables. Element identity is positional;
// labels are presentation only. Every constructed set (product, coproduct,
// exponential, powerset) has a fixed canonical order so that independently
// built objects compare equal without isomorphism search.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace costrength {

/// Largest set any construction may produce. Exceeding it raises ResourceError.
std::size_t size_cap();
void set_size_cap(std::size_t cap);

class ScopedSizeCap {
 public:
  explicit ScopedSizeCap(std::size_t cap) : saved_(size_cap()) {
    set_size_cap(cap);
  }
  ~ScopedSizeCap() { set_size_cap(saved_); }
  ScopedSizeCap(const ScopedSizeCap&) = delete;
  ScopedSizeCap& operator=(const ScopedSizeCap&) = delete;

 private:
  std::size_t saved_;
};

class FinSet {
 public:
  /// The empty set.
  FinSet();
  /// Canonical n-element set e0..e(n-1).
  explicit FinSet(std::size_t n);
  /// Labels must be pairwise distinct.
  explicit FinSet(std::vector<std::string> labels);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  const std::string& label(std::size_t i) const;
  const std::vector<std::string>& labels() const;
  std::optional<std::size_t> index_of(std::string_view label) const;
  std::size_t hash() const;
  /// `{a,b,c}`
  std::string to_string() const;

  friend bool operator==(const FinSet& a, const FinSet& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

struct FinSetHash {
  std::size_t operator()(const FinSet& s) const { return s.hash(); }
};

using Table = std::vector<std::size_t>;

class FinFun {
 public:
  FinFun(FinSet dom, FinSet cod, Table table);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const Table& table() const { return table_; }
  std::size_t operator()(std::size_t i) const { return table_[i]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  /// Throws StructuralError unless bijective.
  FinFun inverse() const;

  /// `{a->x, b->y}`
  std::string to_string() const;

  friend bool operator==(const FinFun& a, const FinFun& b) {
    return a.table_ == b.table_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
  }

 private:
  FinSet dom_;
  FinSet cod_;
  Table table_;
};

/// First index where two parallel functions differ, if any.
std::optional<std::size_t> first_difference(const FinFun& a, const FinFun& b);

// ---------------------------------------------------------------------------
// Universal constructions.

FinSet initial();
FinSet terminal();

/// A-major order: (a, b) sits at a * |B| + b.
FinSet product(const FinSet& a, const FinSet& b);
FinFun proj1(const FinSet& a, const FinSet& b);
FinFun proj2(const FinSet& a, const FinSet& b);

/// A-elements first: inl a = a, inr b = |A| + b.
FinSet coproduct(const FinSet& a, const FinSet& b);
FinFun inl(const FinSet& a, const FinSet& b);
FinFun inr(const FinSet& a, const FinSet& b);

/// All functions S -> B, lexicographic in (f(s0), f(s1), ...): the value at
/// the first position is the most significant digit.
FinSet exponential(const FinSet& s, const FinSet& b);
/// [S,B] x S -> B
FinFun eval(const FinSet& s, const FinSet& b);
/// [S,B] -> B, f |-> f(m)
FinFun eval_at(const FinSet& s, const FinSet& b, std::size_t m);

/// Index of the function with the given value sequence in exponential order.
std::size_t encode_function(std::span<const std::size_t> values,
                            std::size_t base);
Table decode_function(std::size_t index, std::size_t length, std::size_t base);

/// Bitmask order, empty set first: subset U sits at sum of 2^i, i in U.
FinSet powerset(const FinSet& a);
inline bool subset_contains(std::size_t subset, std::size_t element) {
  return ((subset >> element) & 1U) != 0;
}

FinFun identity(const FinSet& a);
/// g . f; requires f.cod == g.dom.
FinFun compose(const FinFun& g, const FinFun& f);
/// <f, g> : Z -> A x B
FinFun pair(const FinFun& f, const FinFun& g);
/// [f, g] : A + B -> Z
FinFun copair(const FinFun& f, const FinFun& g);
FinFun bang(const FinSet& a);
FinFun initial_arrow(const FinSet& a);
FinFun constant(const FinSet& dom, const FinSet& cod, std::size_t value);

/// f x g
FinFun product_map(const FinFun& f, const FinFun& g);
/// f + g
FinFun coproduct_map(const FinFun& f, const FinFun& g);
/// [S, f] : [S,A] -> [S,B], post-composition.
FinFun exponential_map(const FinSet& s, const FinFun& f);
/// [h, B] : [S,B] -> [S',B] for h : S' -> S, pre-composition.
FinFun exponential_precompose(const FinFun& h, const FinSet& b);
/// Direct image.
FinFun powerset_map(const FinFun& f);

/// (A x B) x C -> A x (B x C)
FinFun product_associator(const FinSet& a, const FinSet& b, const FinSet& c);
/// (A + B) + C -> A + (B + C)
FinFun coproduct_associator(const FinSet& a, const FinSet& b,
                            const FinSet& c);
/// A x B -> B x A
FinFun product_symmetry(const FinSet& a, const FinSet& b);
/// [A x B, C] -> [A, [B, C]]
FinFun curry_iso(const FinSet& a, const FinSet& b, const FinSet& c);

/// Order-preserving bijection between equinumerous sets.
FinFun positional_bijection(const FinSet& a, const FinSet& b);

/// Copy of f with entry i moved to the next codomain element (cyclically).
/// Used to build mutation witnesses; requires |cod| >= 2.
FinFun mutate_entry(const FinFun& f, std::size_t i);

// ---------------------------------------------------------------------------
// Exhaustive quantifier over Hom(A, B).

std::size_t function_count(const FinSet& a, const FinSet& b);

/// The i-th function A -> B in exponential order.
FinFun function_at(const FinSet& a, const FinSet& b, std::size_t index);

/// Lazy range over all |B|^|A| functions in canonical order. Iterators are
/// independent; callers may stop early.
class AllFunctions {
 public:
  AllFunctions(FinSet a, FinSet b);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FinFun;
    using difference_type = std::ptrdiff_t;
    using pointer = const FinFun*;
    using reference = const FinFun&;

    iterator() = default;
    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_;
    }

   private:
    friend class AllFunctions;
    std::optional<FinFun> current_;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return iterator{}; }
  std::size_t size() const;

 private:
  FinSet a_;
  FinSet b_;
};

inline AllFunctions all_functions(FinSet a, FinSet b) {
  return AllFunctions(std::move(a), std::move(b));
}

}  // namespace costrength
