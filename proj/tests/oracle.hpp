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


// Independent reference computations used by the tests. Nothing here calls
// the library's enumerators or law checkers; it only evaluates functors and
// reads tables.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "costrength/finset.hpp"
#include "costrength/functor.hpp"

namespace oracle {

using costrength::FinFun;
using costrength::FinSet;
using costrength::Functor;
using costrength::Table;

/// Index of a label, failing loudly when absent.
inline std::size_t at(const FinSet& s, const std::string& label) {
  const auto i = s.index_of(label);
  if (!i) throw std::out_of_range("no element " + label + " in " + s.to_string());
  return *i;
}

/// Applies f to the element with the given label and returns the label.
inline std::string apply(const FinFun& f, const std::string& label) {
  return f.cod().label(f(at(f.dom(), label)));
}

/// |B|^|A| by repeated multiplication.
inline std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Every table A -> B, odometer order with the last position fastest.
inline std::vector<Table> all_tables(std::size_t a, std::size_t b) {
  std::vector<Table> out;
  if (b == 0) {
    if (a == 0) out.push_back({});
    return out;
  }
  Table t(a, 0);
  while (true) {
    out.push_back(t);
    std::size_t i = a;
    while (i > 0 && ++t[i - 1] == b) t[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

/// g . f by table lookup.
inline FinFun after(const FinFun& g, const FinFun& f) {
  Table t(f.dom().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(i));
  return FinFun(f.dom(), g.cod(), t);
}

/// Naturality of components (indexed like `objects`) between two functors,
/// by checking every square for every map between the objects.
inline bool natural(const Functor& src, const Functor& tgt,
                    const std::vector<FinSet>& objects,
                    const std::vector<FinFun>& comps) {
  for (std::size_t a = 0; a < objects.size(); ++a) {
    for (std::size_t b = 0; b < objects.size(); ++b) {
      for (const Table& t : all_tables(objects[a].size(), objects[b].size())) {
        const FinFun f(objects[a], objects[b], t);
        if (after(tgt(f), comps[a]) != after(comps[b], src(f))) return false;
      }
    }
  }
  return true;
}

/// Number of natural families src => tgt over the objects, by trying every
/// tuple of component tables.
inline std::size_t count_natural(const Functor& src, const Functor& tgt,
                                 const std::vector<FinSet>& objects) {
  std::vector<std::vector<Table>> choices;
  std::vector<FinSet> doms, cods;
  for (const auto& x : objects) {
    doms.push_back(src(x));
    cods.push_back(tgt(x));
    choices.push_back(all_tables(doms.back().size(), cods.back().size()));
    if (choices.back().empty()) return 0;
  }
  std::size_t count = 0;
  std::vector<std::size_t> pick(objects.size(), 0);
  while (true) {
    std::vector<FinFun> comps;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      comps.emplace_back(doms[i], cods[i], choices[i][pick[i]]);
    }
    if (natural(src, tgt, objects, comps)) ++count;
    std::size_t i = objects.size();
    while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return count;
}

/// Seeded generator of small random data.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  std::size_t between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  FinSet set(std::size_t max_size) { return FinSet(between(0, max_size)); }
  FinSet nonempty_set(std::size_t max_size) {
    return FinSet(between(1, max_size));
  }
  /// A function a -> b; b must be nonempty unless a is empty.
  FinFun function(const FinSet& a, const FinSet& b) {
    Table t(a.size());
    for (auto& v : t) v = below(b.size());
    return FinFun(a, b, t);
  }
  std::vector<std::size_t> word(std::size_t len, std::size_t letters) {
    std::vector<std::size_t> w(len);
    for (auto& v : w) v = below(letters);
    return w;
  }
  /// Small functor expressions that stay cheap to evaluate on sets of size
  /// at most three.
  Functor functor(int depth) {
    const std::size_t pick = depth <= 0 ? below(3) : below(7);
    switch (pick) {
      case 0:
        return Functor::id();
      case 1:
        return Functor::constant(FinSet(between(0, 2)));
      case 2:
        return costrength::maybe();
      case 3:
        return Functor::prod(functor(depth - 1), functor(0));
      case 4:
        return Functor::coprod(functor(depth - 1), functor(depth - 1));
      case 5:
        return Functor::exp(FinSet(between(0, 2)), functor(0));
      default:
        return Functor::comp(functor(0), functor(depth - 1));
    }
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
