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


#include "costrength/finset.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "costrength/errors.hpp"

namespace costrength {

namespace {

std::atomic<std::size_t> g_size_cap{4096};

std::size_t checked_size(std::size_t n, const char* what) {
  if (n > size_cap()) {
    throw ResourceError(std::string(what) + " would have " +
                        std::to_string(n) + " elements, over the size cap " +
                        std::to_string(size_cap()));
  }
  return n;
}

std::size_t checked_mul(std::size_t a, std::size_t b, const char* what) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    throw ResourceError(std::string(what) + " overflows");
  }
  return checked_size(a * b, what);
}

std::size_t checked_pow(std::size_t base, std::size_t exp, const char* what) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base == 0) return 0;
    if (result > size_cap() / base) {
      throw ResourceError(std::string(what) + " of " + std::to_string(base) +
                          "^" + std::to_string(exp) +
                          " elements exceeds the size cap " +
                          std::to_string(size_cap()));
    }
    result *= base;
  }
  return result;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw StructuralError(message);
}

std::string describe(const FinSet& s) {
  constexpr std::size_t kShown = 6;
  std::string out = "{";
  for (std::size_t i = 0; i < s.size() && i < kShown; ++i) {
    if (i) out += ",";
    out += s.label(i);
  }
  if (s.size() > kShown) out += ",...(" + std::to_string(s.size()) + ")";
  return out + "}";
}

// Memo for constructed objects. Keys hold their operands, so equality is
// exact and entries never alias.
enum class Op { kProduct, kCoproduct, kExponential, kPowerset };

struct Key {
  Op op;
  FinSet a;
  FinSet b;
  friend bool operator==(const Key& x, const Key& y) {
    return x.op == y.op && x.a == y.a && x.b == y.b;
  }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = static_cast<std::size_t>(k.op);
    h = h * 1000003u ^ k.a.hash();
    h = h * 1000003u ^ k.b.hash();
    return h;
  }
};

template <class Build>
FinSet memoized(Op op, const FinSet& a, const FinSet& b, Build build) {
  static std::mutex mutex;
  static std::unordered_map<Key, FinSet, KeyHash> cache;
  Key key{op, a, b};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  FinSet built = build();
  std::lock_guard lock(mutex);
  return cache.emplace(std::move(key), std::move(built)).first->second;
}

}  // namespace

std::size_t size_cap() { return g_size_cap.load(); }
void set_size_cap(std::size_t cap) { g_size_cap.store(cap); }

// ---------------------------------------------------------------------------

struct FinSet::Data {
  std::vector<std::string> labels;
  std::size_t hash = 0;
};

FinSet::FinSet() : FinSet(std::size_t{0}) {}

FinSet::FinSet(std::size_t n) {
  static std::mutex mutex;
  static std::vector<std::shared_ptr<const Data>> canonical;
  std::lock_guard lock(mutex);
  if (n < canonical.size() && canonical[n]) {
    data_ = canonical[n];
    return;
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  auto data = std::make_shared<Data>();
  data->labels = std::move(labels);
  std::size_t h = data->labels.size();
  for (const auto& l : data->labels) h = h * 31 + std::hash<std::string>{}(l);
  data->hash = h;
  if (n < 64) {
    if (canonical.size() <= n) canonical.resize(n + 1);
    canonical[n] = data;
  }
  data_ = std::move(data);
}

FinSet::FinSet(std::vector<std::string> labels) {
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw StructuralError("duplicate label '" + l + "' in finite set");
    }
  }
  auto data = std::make_shared<Data>();
  data->labels = std::move(labels);
  std::size_t h = data->labels.size();
  for (const auto& l : data->labels) h = h * 31 + std::hash<std::string>{}(l);
  data->hash = h;
  data_ = std::move(data);
}

std::size_t FinSet::size() const { return data_->labels.size(); }
const std::string& FinSet::label(std::size_t i) const {
  return data_->labels.at(i);
}
const std::vector<std::string>& FinSet::labels() const {
  return data_->labels;
}
std::size_t FinSet::hash() const { return data_->hash; }

std::optional<std::size_t> FinSet::index_of(std::string_view label) const {
  const auto& ls = data_->labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ls.begin());
}

std::string FinSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += label(i);
  }
  return out + "}";
}

bool operator==(const FinSet& a, const FinSet& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->hash == b.data_->hash &&
         a.data_->labels == b.data_->labels;
}

// ---------------------------------------------------------------------------

FinFun::FinFun(FinSet dom, FinSet cod, Table table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  require(table_.size() == dom_.size(),
          "function table has " + std::to_string(table_.size()) +
              " entries but its domain " + describe(dom_) + " has " +
              std::to_string(dom_.size()) + " elements");
  for (std::size_t i = 0; i < table_.size(); ++i) {
    require(table_[i] < cod_.size(),
            "function table entry " + std::to_string(i) + " = " +
                std::to_string(table_[i]) + " is outside codomain " +
                describe(cod_));
  }
}

bool FinFun::is_injective() const {
  std::vector<bool> hit(cod_.size(), false);
  for (auto v : table_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool FinFun::is_surjective() const {
  std::vector<bool> hit(cod_.size(), false);
  for (auto v : table_) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

FinFun FinFun::inverse() const {
  require(is_bijective(), "inverse of a non-bijective function " +
                              describe(dom_) + " -> " + describe(cod_));
  Table inv(cod_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) inv[table_[i]] = i;
  return FinFun(cod_, dom_, std::move(inv));
}

std::string FinFun::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (i) out += ", ";
    out += dom_.label(i) + "->" + cod_.label(table_[i]);
  }
  return out + "}";
}

std::optional<std::size_t> first_difference(const FinFun& a,
                                            const FinFun& b) {
  for (std::size_t i = 0; i < a.table().size() && i < b.table().size(); ++i) {
    if (a(i) != b(i)) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

FinSet initial() { return FinSet(std::size_t{0}); }
FinSet terminal() { return FinSet(std::size_t{1}); }

FinSet product(const FinSet& a, const FinSet& b) {
  return memoized(Op::kProduct, a, b, [&] {
    checked_mul(a.size(), b.size(), "product");
    std::vector<std::string> labels;
    labels.reserve(a.size() * b.size());
    for (const auto& x : a.labels()) {
      for (const auto& y : b.labels()) labels.push_back("(" + x + "," + y + ")");
    }
    return FinSet(std::move(labels));
  });
}

FinFun proj1(const FinSet& a, const FinSet& b) {
  Table t(a.size() * b.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i / b.size();
  return FinFun(product(a, b), a, std::move(t));
}

FinFun proj2(const FinSet& a, const FinSet& b) {
  Table t(a.size() * b.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i % b.size();
  return FinFun(product(a, b), b, std::move(t));
}

FinSet coproduct(const FinSet& a, const FinSet& b) {
  return memoized(Op::kCoproduct, a, b, [&] {
    checked_size(a.size() + b.size(), "coproduct");
    std::vector<std::string> labels;
    labels.reserve(a.size() + b.size());
    for (const auto& x : a.labels()) labels.push_back("inl " + x);
    for (const auto& y : b.labels()) labels.push_back("inr " + y);
    return FinSet(std::move(labels));
  });
}

FinFun inl(const FinSet& a, const FinSet& b) {
  Table t(a.size());
  std::iota(t.begin(), t.end(), std::size_t{0});
  return FinFun(a, coproduct(a, b), std::move(t));
}

FinFun inr(const FinSet& a, const FinSet& b) {
  Table t(b.size());
  std::iota(t.begin(), t.end(), a.size());
  return FinFun(b, coproduct(a, b), std::move(t));
}

std::size_t encode_function(std::span<const std::size_t> values,
                            std::size_t base) {
  std::size_t index = 0;
  for (auto v : values) index = index * base + v;
  return index;
}

Table decode_function(std::size_t index, std::size_t length,
                      std::size_t base) {
  Table values(length);
  for (std::size_t i = length; i-- > 0;) {
    values[i] = index % base;
    index /= base;
  }
  return values;
}

FinSet exponential(const FinSet& s, const FinSet& b) {
  return memoized(Op::kExponential, s, b, [&] {
    const std::size_t n = checked_pow(b.size(), s.size(), "exponential");
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto values = decode_function(i, s.size(), b.size());
      std::string l = "fun{";
      for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) l += ",";
        l += s.label(k) + "->" + b.label(values[k]);
      }
      labels.push_back(l + "}");
    }
    return FinSet(std::move(labels));
  });
}

FinFun eval(const FinSet& s, const FinSet& b) {
  const FinSet fs = exponential(s, b);
  Table t(fs.size() * s.size());
  for (std::size_t f = 0; f < fs.size(); ++f) {
    auto values = decode_function(f, s.size(), b.size());
    for (std::size_t m = 0; m < s.size(); ++m) t[f * s.size() + m] = values[m];
  }
  return FinFun(product(fs, s), b, std::move(t));
}

FinFun eval_at(const FinSet& s, const FinSet& b, std::size_t m) {
  require(m < s.size(), "evaluation point outside " + describe(s));
  const FinSet fs = exponential(s, b);
  Table t(fs.size());
  for (std::size_t f = 0; f < fs.size(); ++f) {
    t[f] = decode_function(f, s.size(), b.size())[m];
  }
  return FinFun(fs, b, std::move(t));
}

FinSet powerset(const FinSet& a) {
  return memoized(Op::kPowerset, a, a, [&] {
    if (a.size() >= 63) throw ResourceError("powerset of a 63+ element set");
    const std::size_t n = checked_pow(2, a.size(), "powerset");
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t mask = 0; mask < n; ++mask) {
      std::string l = "{";
      bool first = true;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!subset_contains(mask, i)) continue;
        if (!first) l += ",";
        l += a.label(i);
        first = false;
      }
      labels.push_back(l + "}");
    }
    return FinSet(std::move(labels));
  });
}

// ---------------------------------------------------------------------------

FinFun identity(const FinSet& a) {
  Table t(a.size());
  std::iota(t.begin(), t.end(), std::size_t{0});
  return FinFun(a, a, std::move(t));
}

FinFun compose(const FinFun& g, const FinFun& f) {
  require(f.cod() == g.dom(), "cannot compose: codomain " +
                                  describe(f.cod()) + " vs domain " +
                                  describe(g.dom()));
  Table t(f.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(i));
  return FinFun(f.dom(), g.cod(), std::move(t));
}

FinFun pair(const FinFun& f, const FinFun& g) {
  require(f.dom() == g.dom(), "cannot pair: domains " + describe(f.dom()) +
                                  " and " + describe(g.dom()) + " differ");
  const std::size_t nb = g.cod().size();
  Table t(f.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = f(i) * nb + g(i);
  return FinFun(f.dom(), product(f.cod(), g.cod()), std::move(t));
}

FinFun copair(const FinFun& f, const FinFun& g) {
  require(f.cod() == g.cod(), "cannot copair: codomains " +
                                  describe(f.cod()) + " and " +
                                  describe(g.cod()) + " differ");
  Table t(f.table());
  t.insert(t.end(), g.table().begin(), g.table().end());
  return FinFun(coproduct(f.dom(), g.dom()), f.cod(), std::move(t));
}

FinFun bang(const FinSet& a) {
  return FinFun(a, terminal(), Table(a.size(), 0));
}

FinFun initial_arrow(const FinSet& a) { return FinFun(initial(), a, {}); }

FinFun constant(const FinSet& dom, const FinSet& cod, std::size_t value) {
  return FinFun(dom, cod, Table(dom.size(), value));
}

FinFun product_map(const FinFun& f, const FinFun& g) {
  const std::size_t nb = g.dom().size();
  const std::size_t nb2 = g.cod().size();
  Table t(f.dom().size() * nb);
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = f(i / nb) * nb2 + g(i % nb);
  }
  return FinFun(product(f.dom(), g.dom()), product(f.cod(), g.cod()),
                std::move(t));
}

FinFun coproduct_map(const FinFun& f, const FinFun& g) {
  Table t(f.table());
  for (auto v : g.table()) t.push_back(f.cod().size() + v);
  return FinFun(coproduct(f.dom(), g.dom()), coproduct(f.cod(), g.cod()),
                std::move(t));
}

FinFun exponential_map(const FinSet& s, const FinFun& f) {
  const FinSet dom = exponential(s, f.dom());
  const FinSet cod = exponential(s, f.cod());
  Table t(dom.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto values = decode_function(i, s.size(), f.dom().size());
    for (auto& v : values) v = f(v);
    t[i] = encode_function(values, f.cod().size());
  }
  return FinFun(dom, cod, std::move(t));
}

FinFun exponential_precompose(const FinFun& h, const FinSet& b) {
  const FinSet dom = exponential(h.cod(), b);
  const FinSet cod = exponential(h.dom(), b);
  Table t(dom.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto values = decode_function(i, h.cod().size(), b.size());
    Table out(h.dom().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = values[h(k)];
    t[i] = encode_function(out, b.size());
  }
  return FinFun(dom, cod, std::move(t));
}

FinFun powerset_map(const FinFun& f) {
  const FinSet dom = powerset(f.dom());
  const FinSet cod = powerset(f.cod());
  Table t(dom.size());
  for (std::size_t mask = 0; mask < t.size(); ++mask) {
    std::size_t image = 0;
    for (std::size_t i = 0; i < f.dom().size(); ++i) {
      if (subset_contains(mask, i)) image |= std::size_t{1} << f(i);
    }
    t[mask] = image;
  }
  return FinFun(dom, cod, std::move(t));
}

FinFun product_associator(const FinSet& a, const FinSet& b,
                          const FinSet& c) {
  const std::size_t nb = b.size(), nc = c.size();
  Table t(a.size() * nb * nc);
  // ((x, y), z) and (x, (y, z)) share the flat index x*nb*nc + y*nc + z.
  std::iota(t.begin(), t.end(), std::size_t{0});
  return FinFun(product(product(a, b), c), product(a, product(b, c)),
                std::move(t));
}

FinFun coproduct_associator(const FinSet& a, const FinSet& b,
                            const FinSet& c) {
  Table t(a.size() + b.size() + c.size());
  std::iota(t.begin(), t.end(), std::size_t{0});
  return FinFun(coproduct(coproduct(a, b), c), coproduct(a, coproduct(b, c)),
                std::move(t));
}

FinFun product_symmetry(const FinSet& a, const FinSet& b) {
  Table t(a.size() * b.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) {
      t[x * b.size() + y] = y * a.size() + x;
    }
  }
  return FinFun(product(a, b), product(b, a), std::move(t));
}

FinFun curry_iso(const FinSet& a, const FinSet& b, const FinSet& c) {
  const FinSet dom = exponential(product(a, b), c);
  const FinSet inner = exponential(b, c);
  const FinSet cod = exponential(a, inner);
  Table t(dom.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto values = decode_function(i, a.size() * b.size(), c.size());
    Table outer(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      std::span<const std::size_t> row(values.data() + x * b.size(), b.size());
      outer[x] = encode_function(row, c.size());
    }
    t[i] = encode_function(outer, inner.size());
  }
  return FinFun(dom, cod, std::move(t));
}

FinFun positional_bijection(const FinSet& a, const FinSet& b) {
  require(a.size() == b.size(), "no bijection between " + describe(a) +
                                    " and " + describe(b));
  Table t(a.size());
  std::iota(t.begin(), t.end(), std::size_t{0});
  return FinFun(a, b, std::move(t));
}

FinFun mutate_entry(const FinFun& f, std::size_t i) {
  require(i < f.dom().size() && f.cod().size() >= 2,
          "cannot mutate entry " + std::to_string(i) + " of " +
              f.to_string());
  Table t = f.table();
  t[i] = (t[i] + 1) % f.cod().size();
  return FinFun(f.dom(), f.cod(), std::move(t));
}

// ---------------------------------------------------------------------------

std::size_t function_count(const FinSet& a, const FinSet& b) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b.size() != 0 && n > std::numeric_limits<std::size_t>::max() / b.size()) {
      throw ResourceError("function count overflows");
    }
    n *= b.size();
  }
  return n;
}

FinFun function_at(const FinSet& a, const FinSet& b, std::size_t index) {
  return FinFun(a, b, decode_function(index, a.size(), b.size()));
}

AllFunctions::AllFunctions(FinSet a, FinSet b)
    : a_(std::move(a)), b_(std::move(b)) {}

std::size_t AllFunctions::size() const { return function_count(a_, b_); }

AllFunctions::iterator AllFunctions::begin() const {
  iterator it;
  if (a_.size() > 0 && b_.size() == 0) return it;
  it.current_.emplace(a_, b_, Table(a_.size(), 0));
  it.done_ = false;
  return it;
}

AllFunctions::iterator& AllFunctions::iterator::operator++() {
  Table t = current_->table();
  const std::size_t base = current_->cod().size();
  std::size_t i = t.size();
  while (i > 0) {
    --i;
    if (++t[i] < base) {
      current_.emplace(current_->dom(), current_->cod(), std::move(t));
      return *this;
    }
    t[i] = 0;
  }
  current_.reset();
  done_ = true;
  return *this;
}

}  // namespace costrength
