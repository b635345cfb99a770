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


#include "costrength/functor.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

#include "costrength/errors.hpp"
#include "costrength/nat_search.hpp"

namespace costrength {

struct Functor::Node {
  Kind kind;
  FinSet set;
  std::optional<Functor> first;
  std::optional<Functor> second;
  mutable std::mutex mutex;
  mutable std::unordered_map<FinSet, FinSet, FinSetHash> objects;
};

namespace {

bool is_canonical(const FinSet& s) { return s == FinSet(s.size()); }

std::string set_syntax(const FinSet& s) {
  if (is_canonical(s)) return std::to_string(s.size());
  return s.to_string();
}

}  // namespace

Functor::Functor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Functor Functor::constant(FinSet a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConst;
  n->set = std::move(a);
  return Functor(std::move(n));
}

Functor Functor::id() {
  static const Functor identity([] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::kId;
    return n;
  }());
  return identity;
}

Functor Functor::prod(Functor f, Functor g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kProd;
  n->first = std::move(f);
  n->second = std::move(g);
  return Functor(std::move(n));
}

Functor Functor::coprod(Functor f, Functor g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kCoprod;
  n->first = std::move(f);
  n->second = std::move(g);
  return Functor(std::move(n));
}

Functor Functor::exp(FinSet s, Functor f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kExp;
  n->set = std::move(s);
  n->first = std::move(f);
  return Functor(std::move(n));
}

Functor Functor::pow(Functor f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kPow;
  n->first = std::move(f);
  return Functor(std::move(n));
}

Functor Functor::comp(Functor f, Functor g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kComp;
  n->first = std::move(f);
  n->second = std::move(g);
  return Functor(std::move(n));
}

Functor::Kind Functor::kind() const { return node_->kind; }

const FinSet& Functor::set() const {
  if (node_->kind != Kind::kConst && node_->kind != Kind::kExp) {
    throw StructuralError("functor node " + to_string() + " carries no set");
  }
  return node_->set;
}

const Functor& Functor::first() const {
  if (!node_->first) {
    throw StructuralError("functor node " + to_string() + " has no children");
  }
  return *node_->first;
}

const Functor& Functor::second() const {
  if (!node_->second) {
    throw StructuralError("functor node " + to_string() +
                          " has no second child");
  }
  return *node_->second;
}

FinSet Functor::operator()(const FinSet& x) const {
  const Node& n = *node_;
  if (n.kind == Kind::kId) return x;
  if (n.kind == Kind::kConst) return n.set;
  {
    std::lock_guard lock(n.mutex);
    if (auto it = n.objects.find(x); it != n.objects.end()) return it->second;
  }
  FinSet result;
  switch (n.kind) {
    case Kind::kProd:
      result = product(first()(x), second()(x));
      break;
    case Kind::kCoprod:
      result = coproduct(first()(x), second()(x));
      break;
    case Kind::kExp:
      result = exponential(n.set, first()(x));
      break;
    case Kind::kPow:
      result = powerset(first()(x));
      break;
    case Kind::kComp:
      result = first()(second()(x));
      break;
    case Kind::kConst:
    case Kind::kId:
      break;
  }
  std::lock_guard lock(n.mutex);
  return n.objects.emplace(x, std::move(result)).first->second;
}

FinFun Functor::operator()(const FinFun& f) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kConst:
      return identity(n.set);
    case Kind::kId:
      return f;
    case Kind::kProd:
      return product_map(first()(f), second()(f));
    case Kind::kCoprod:
      return coproduct_map(first()(f), second()(f));
    case Kind::kExp:
      return exponential_map(n.set, first()(f));
    case Kind::kPow:
      return powerset_map(first()(f));
    case Kind::kComp:
      return first()(second()(f));
  }
  throw StructuralError("unknown functor node");
}

std::string Functor::to_string() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kConst:
      return "Const(" + set_syntax(n.set) + ")";
    case Kind::kId:
      return "Id";
    case Kind::kProd: {
      const Functor& l = first();
      const Functor& r = second();
      if (l.kind() == Kind::kConst && r.kind() == Kind::kId) {
        return "Writer(" + set_syntax(l.set()) + ")";
      }
      if (l.kind() == Kind::kConst && r.kind() == Kind::kExp &&
          r.first().kind() == Kind::kId && r.set() == l.set()) {
        return "Costate(" + set_syntax(l.set()) + ")";
      }
      return "Prod(" + l.to_string() + "," + r.to_string() + ")";
    }
    case Kind::kCoprod: {
      const Functor& l = first();
      const Functor& r = second();
      if (l.kind() == Kind::kConst && l.set() == terminal() &&
          r.kind() == Kind::kId) {
        return "Maybe";
      }
      return "Coprod(" + l.to_string() + "," + r.to_string() + ")";
    }
    case Kind::kExp:
      if (first().kind() == Kind::kId) {
        return "Reader(" + set_syntax(n.set) + ")";
      }
      return "Exp(" + set_syntax(n.set) + "," + first().to_string() + ")";
    case Kind::kPow:
      return "Pow(" + first().to_string() + ")";
    case Kind::kComp:
      return "Comp(" + first().to_string() + "," + second().to_string() + ")";
  }
  return "?";
}

bool operator==(const Functor& a, const Functor& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Functor::Kind::kId:
      return true;
    case Functor::Kind::kConst:
      return x.set == y.set;
    case Functor::Kind::kExp:
      return x.set == y.set && a.first() == b.first();
    case Functor::Kind::kPow:
      return a.first() == b.first();
    case Functor::Kind::kProd:
    case Functor::Kind::kCoprod:
    case Functor::Kind::kComp:
      return a.first() == b.first() && a.second() == b.second();
  }
  return false;
}

Functor writer(FinSet s) {
  return Functor::prod(Functor::constant(std::move(s)), Functor::id());
}
Functor reader(FinSet s) { return Functor::exp(std::move(s), Functor::id()); }
Functor maybe() {
  return Functor::coprod(Functor::constant(terminal()), Functor::id());
}
Functor costate(FinSet s) {
  FinSet copy = s;
  return Functor::prod(Functor::constant(std::move(s)), reader(std::move(copy)));
}

// ---------------------------------------------------------------------------

Universe::Universe(std::vector<FinSet> objects) : objects_(std::move(objects)) {
  if (objects_.empty()) throw StructuralError("a universe must be nonempty");
}

Universe Universe::of_sizes(const std::vector<std::size_t>& sizes) {
  std::vector<FinSet> objects;
  objects.reserve(sizes.size());
  for (auto n : sizes) objects.emplace_back(n);
  return Universe(std::move(objects));
}

std::optional<std::size_t> Universe::find(const FinSet& x) const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i] == x) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Universe::find_size(std::size_t n) const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i].size() == n) return i;
  }
  return std::nullopt;
}

std::string Universe::name() const {
  std::string out = "{";
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (i) out += ",";
    out += set_syntax(objects_[i]);
  }
  return out + "}";
}

Universe with_sizes(const Universe& base,
                    const std::vector<std::size_t>& sizes) {
  std::vector<FinSet> objects;
  for (auto n : sizes) {
    if (auto i = base.find_size(n)) {
      objects.push_back(base[*i]);
    } else {
      objects.emplace_back(n);
    }
  }
  return Universe(std::move(objects));
}

// ---------------------------------------------------------------------------

namespace {

void check_component(const Functor& source, const Functor& target,
                     const FinSet& x, const FinFun& c) {
  if (c.dom() != source(x) || c.cod() != target(x)) {
    throw StructuralError("component at " + x.to_string() +
                          " is not a map " + source.to_string() + " => " +
                          target.to_string());
  }
}

}  // namespace

NatFamily::NatFamily(Functor source, Functor target, Universe universe,
                     std::vector<FinFun> components, ComponentFormula formula)
    : source_(std::move(source)),
      target_(std::move(target)),
      universe_(std::move(universe)),
      components_(std::move(components)),
      formula_(std::move(formula)) {
  if (components_.size() != universe_.size()) {
    throw StructuralError("natural family has " +
                          std::to_string(components_.size()) +
                          " components for a universe of " +
                          std::to_string(universe_.size()) + " objects");
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    check_component(source_, target_, universe_[i], components_[i]);
  }
}

NatFamily NatFamily::tabulate(Functor source, Functor target,
                              Universe universe, ComponentFormula formula) {
  std::vector<FinFun> components;
  components.reserve(universe.size());
  for (const auto& x : universe.objects()) components.push_back(formula(x));
  return NatFamily(std::move(source), std::move(target), std::move(universe),
                   std::move(components), std::move(formula));
}

FinFun NatFamily::at(const FinSet& x) const {
  if (auto i = universe_.find(x)) return components_[*i];
  if (formula_) {
    FinFun c = formula_(x);
    check_component(source_, target_, x, c);
    return c;
  }
  if (auto i = universe_.find_size(x.size())) {
    const FinFun beta = positional_bijection(x, universe_[*i]);
    return compose(target_(beta.inverse()),
                   compose(components_[*i], source_(beta)));
  }
  throw StructuralError("no component of " + source_.to_string() + " => " +
                        target_.to_string() + " at " + x.to_string() +
                        ": no object of that size in universe " +
                        universe_.name());
}

NatFamily NatFamily::with_component(std::size_t i, FinFun component) const {
  auto components = components_;
  components.at(i) = std::move(component);
  return NatFamily(source_, target_, universe_, std::move(components));
}

NatFamily extend_by_naturality(const NatFamily& n) {
  struct Cache {
    std::mutex mu;
    std::unordered_map<FinSet, FinFun, FinSetHash> done;
  };
  auto cache = std::make_shared<Cache>();
  auto formula = [n, cache](const FinSet& x) -> FinFun {
    {
      std::lock_guard lock(cache->mu);
      if (auto it = cache->done.find(x); it != cache->done.end()) {
        return it->second;
      }
    }
    const FinSet sx = n.source()(x);
    const FinSet tx = n.target()(x);
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    Table values(sx.size(), kUnset);
    const Universe& u = n.universe();
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (const FinFun& g : all_functions(u[i], x)) {
        const FinFun sg = n.source()(g);
        const FinFun tg_c = compose(n.target()(g), n.component(i));
        for (std::size_t w = 0; w < sg.dom().size(); ++w) {
          std::size_t& slot = values[sg(w)];
          const std::size_t v = tg_c(w);
          if (slot == kUnset) {
            slot = v;
          } else if (slot != v) {
            throw StructuralError(
                "no natural extension of " + n.source().to_string() +
                " => " + n.target().to_string() + " to " + x.to_string() +
                ": presentations of " + sx.label(sg(w)) + " disagree");
          }
        }
      }
    }
    for (std::size_t w = 0; w < values.size(); ++w) {
      if (values[w] == kUnset) {
        throw StructuralError("no natural extension of " +
                              n.source().to_string() + " to " + x.to_string() +
                              ": " + sx.label(w) +
                              " is not reached from the universe");
      }
    }
    FinFun c(sx, tx, std::move(values));
    std::lock_guard lock(cache->mu);
    cache->done.emplace(x, c);
    return c;
  };
  std::vector<FinFun> components;
  for (std::size_t i = 0; i < n.universe().size(); ++i) {
    components.push_back(n.component(i));
  }
  return NatFamily(n.source(), n.target(), n.universe(), std::move(components),
                   std::move(formula));
}

LawReport check_natural(const NatFamily& n) {
  const Universe& u = n.universe();
  LawReport report = LawReport::pass("naturality " + n.source().to_string() +
                                     " => " + n.target().to_string());
  std::int64_t squares = 0;
  for (std::size_t a = 0; a < u.size(); ++a) {
    for (std::size_t b = 0; b < u.size(); ++b) {
      for (const FinFun& f : all_functions(u[a], u[b])) {
        ++squares;
        const FinFun lhs = compose(n.target()(f), n.component(a));
        const FinFun rhs = compose(n.component(b), n.source()(f));
        if (auto w = first_difference(lhs, rhs)) {
          LawReport r = LawReport::fail(
              report.law, {{"from", u[a].to_string()},
                           {"to", u[b].to_string()},
                           {"morphism", f.to_string()},
                           {"element", n.source()(u[a]).label(*w)},
                           {"target_then_component", lhs.cod().label(lhs(*w))},
                           {"component_then_source", rhs.cod().label(rhs(*w))}});
          r.count("squares_checked", squares);
          return r;
        }
      }
    }
  }
  report.count("squares_checked", squares);
  report.note("quantified over all functions in universe " + u.name());
  return report;
}

LawReport check_functor_laws(const Functor& f, const Universe& u) {
  LawReport report = LawReport::pass("functor laws " + f.to_string());
  LawReport ident = LawReport::pass("identity preservation");
  for (const auto& a : u.objects()) {
    if (f(identity(a)) != identity(f(a))) {
      ident = LawReport::fail(ident.law, {{"object", a.to_string()}});
      break;
    }
  }
  report.add(std::move(ident));
  LawReport comp = LawReport::pass("composition preservation");
  std::int64_t pairs = 0;
  for (const auto& a : u.objects()) {
    for (const auto& b : u.objects()) {
      for (const FinFun& g1 : all_functions(a, b)) {
        const FinFun fg1 = f(g1);
        for (const auto& c : u.objects()) {
          for (const FinFun& g2 : all_functions(b, c)) {
            ++pairs;
            if (f(compose(g2, g1)) != compose(f(g2), fg1)) {
              comp = LawReport::fail(comp.law, {{"first", g1.to_string()},
                                                {"second", g2.to_string()}});
              report.add(std::move(comp));
              return report;
            }
          }
        }
      }
    }
  }
  comp.count("pairs_checked", pairs);
  report.add(std::move(comp));
  return report;
}

std::vector<NatFamily> enumerate_nat(const Functor& source,
                                     const Functor& target, const Universe& u,
                                     SearchBudget budget) {
  search::Problem problem;
  for (const auto& x : u.objects()) {
    problem.cells.push_back({source(x).size(), target(x).size()});
  }
  for (std::size_t a = 0; a < u.size(); ++a) {
    for (std::size_t b = 0; b < u.size(); ++b) {
      for (const FinFun& f : all_functions(u[a], u[b])) {
        problem.links.push_back({a, b, source(f).table(), target(f).table()});
      }
    }
  }
  std::vector<NatFamily> out;
  for (auto& sol : search::solve(problem, budget.max_nodes)) {
    std::vector<FinFun> components;
    for (std::size_t i = 0; i < u.size(); ++i) {
      components.emplace_back(source(u[i]), target(u[i]), std::move(sol[i]));
    }
    out.emplace_back(source, target, u, std::move(components));
  }
  return out;
}

}  // namespace costrength
