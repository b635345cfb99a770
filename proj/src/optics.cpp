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


#include "costrength/optics.hpp"

#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "costrength/errors.hpp"

namespace costrength {

OpticRep::OpticRep(ActionModel action_, FinSet residual_, FinSet focus_in_,
                   FinSet focus_out_, FinFun fwd_, FinFun bwd_)
    : action(std::move(action_)),
      residual(std::move(residual_)),
      focus_in(std::move(focus_in_)),
      focus_out(std::move(focus_out_)),
      fwd(std::move(fwd_)),
      bwd(std::move(bwd_)) {
  if (fwd.cod() != action.act(residual, focus_in)) {
    throw StructuralError("optic fwd must land in M.X = " +
                          action.act(residual, focus_in).to_string());
  }
  if (bwd.dom() != action.act(residual, focus_out)) {
    throw StructuralError("optic bwd must start at M.Y = " +
                          action.act(residual, focus_out).to_string());
  }
}

OpticRep identity_optic(const ActionModel& a, const FinSet& x,
                        const FinSet& y) {
  return OpticRep(a, a.unit, x, y, a.unitor(x).inverse(), a.unitor(y));
}

OpticRep compose_optics(const OpticRep& o2, const OpticRep& o1) {
  if (o2.action.name != o1.action.name) {
    throw StructuralError("cannot compose optics over different actions");
  }
  if (o2.focus_in != o1.outer_in() || o2.focus_out != o1.outer_out()) {
    throw StructuralError("optic boundaries do not match for composition");
  }
  const ActionModel& a = o2.action;
  const FinSet& m2 = o2.residual;
  const FinSet& m1 = o1.residual;
  FinFun fwd = compose(a.associator(m2, m1, o1.focus_in).inverse(),
                       compose(a.act_on(m2, o1.fwd), o2.fwd));
  FinFun bwd = compose(o2.bwd, compose(a.act_on(m2, o1.bwd),
                                       a.associator(m2, m1, o1.focus_out)));
  return OpticRep(a, a.tensor(m2, m1), o1.focus_in, o1.focus_out,
                  std::move(fwd), std::move(bwd));
}

std::pair<OpticRep, OpticRep> slide_pair(const ActionModel& a, const FinFun& r,
                                         const FinSet& focus_in,
                                         const FinSet& focus_out,
                                         const FinFun& fwd, const FinFun& bwd) {
  const FinSet& m = a.grade_source(r);
  const FinSet& n = a.grade_target(r);
  return {OpticRep(a, n, focus_in, focus_out,
                   compose(a.act_grade(r, focus_in), fwd), bwd),
          OpticRep(a, m, focus_in, focus_out, fwd,
                   compose(bwd, a.act_grade(r, focus_out)))};
}

// ---------------------------------------------------------------------------

LensNF lens_nf(const OpticRep& o) {
  if (o.action.name != "cart") {
    throw PreconditionError("lens normal form needs the cartesian action");
  }
  const FinFun get = compose(proj2(o.residual, o.focus_in), o.fwd);
  const FinFun put = compose(
      o.bwd, product_map(compose(proj1(o.residual, o.focus_in), o.fwd),
                         identity(o.focus_out)));
  return {get, put};
}

PrismNF prism_nf(const OpticRep& o) {
  if (o.action.name != "cocart") {
    throw PreconditionError("prism normal form needs the cocartesian action");
  }
  const FinSet& m = o.residual;
  const FinSet& yp = o.outer_out();
  const FinSet& x = o.focus_in;
  const FinFun match =
      compose(copair(compose(inl(yp, x), compose(o.bwd, inl(m, o.focus_out))),
                     inr(yp, x)),
              o.fwd);
  return {match, compose(o.bwd, inr(m, o.focus_out))};
}

OpticRep lens_optic(const FinFun& get, const FinFun& put, const FinSet& y) {
  const FinSet& xp = get.dom();
  return OpticRep(cartesian_action(), xp, get.cod(), y,
                  pair(identity(xp), get), put);
}

OpticRep prism_optic(const FinFun& match, const FinFun& build,
                     const FinSet& x) {
  const FinSet& yp = build.cod();
  return OpticRep(cocartesian_action(), yp, x, build.dom(), match,
                  copair(identity(yp), build));
}

bool has_normal_form(const ActionModel& a) {
  return a.name == "cart" || a.name == "cocart";
}

std::vector<std::size_t> nf_key(const OpticRep& o) {
  std::vector<std::size_t> key;
  auto append = [&key](const FinFun& f) {
    key.insert(key.end(), f.table().begin(), f.table().end());
  };
  if (o.action.name == "cart") {
    const LensNF nf = lens_nf(o);
    append(nf.get);
    append(nf.put);
  } else if (o.action.name == "cocart") {
    const PrismNF nf = prism_nf(o);
    append(nf.match);
    append(nf.build);
  } else {
    throw PreconditionError("action " + o.action.name +
                            " has no optic normal form");
  }
  return key;
}

bool nf_equal(const OpticRep& a, const OpticRep& b) {
  if (a.action.name != b.action.name || a.outer_in() != b.outer_in() ||
      a.focus_in != b.focus_in || a.focus_out != b.focus_out ||
      a.outer_out() != b.outer_out()) {
    throw PreconditionError("optics do not share action and boundary");
  }
  return nf_key(a) == nf_key(b);
}

// ---------------------------------------------------------------------------

SlideClosure::SlideClosure(ActionModel a, FinSet outer_in, FinSet focus_in,
                           FinSet focus_out, FinSet outer_out,
                           std::vector<FinSet> residuals,
                           std::uint64_t max_representatives)
    : action_(std::move(a)),
      outer_in_(std::move(outer_in)),
      focus_in_(std::move(focus_in)),
      focus_out_(std::move(focus_out)),
      outer_out_(std::move(outer_out)),
      residuals_(std::move(residuals)) {
  std::uint64_t total = 0;
  for (const auto& m : residuals_) {
    offset_.push_back(total);
    fwd_count_.push_back(
        function_count(outer_in_, action_.act(m, focus_in_)));
    bwd_count_.push_back(
        function_count(action_.act(m, focus_out_), outer_out_));
    total += std::uint64_t{fwd_count_.back()} * bwd_count_.back();
    if (total > max_representatives) {
      throw ResourceError("slide closure needs more than " +
                          std::to_string(max_representatives) +
                          " representatives");
    }
  }
  parent_.resize(total);
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});

  for (std::size_t i = 0; i < residuals_.size(); ++i) {
    const FinSet mx = action_.act(residuals_[i], focus_in_);
    const FinSet my = action_.act(residuals_[i], focus_out_);
    for (std::size_t j = 0; j < residuals_.size(); ++j) {
      const FinSet nx = action_.act(residuals_[j], focus_in_);
      const FinSet ny = action_.act(residuals_[j], focus_out_);
      for (const FinFun& r : action_.grade_arrows(residuals_[i], residuals_[j])) {
        const FinFun rx = action_.act_grade(r, focus_in_);
        const FinFun ry = action_.act_grade(r, focus_out_);
        // fwd f at M becomes (r.X) f at N; bwd b at N becomes b (r.Y) at M.
        std::vector<std::size_t> pushed(fwd_count_[i]);
        for (std::size_t f = 0; f < fwd_count_[i]; ++f) {
          Table t = decode_function(f, outer_in_.size(), mx.size());
          for (auto& v : t) v = rx(v);
          pushed[f] = encode_function(t, nx.size());
        }
        std::vector<std::size_t> pulled(bwd_count_[j]);
        for (std::size_t b = 0; b < bwd_count_[j]; ++b) {
          const Table t = decode_function(b, ny.size(), outer_out_.size());
          Table u(my.size());
          for (std::size_t k = 0; k < u.size(); ++k) u[k] = t[ry(k)];
          pulled[b] = encode_function(u, outer_out_.size());
        }
        for (std::size_t f = 0; f < fwd_count_[i]; ++f) {
          for (std::size_t b = 0; b < bwd_count_[j]; ++b) {
            unite(index(j, pushed[f], b), index(i, f, pulled[b]));
            ++slides_;
          }
        }
      }
    }
  }
}

std::size_t SlideClosure::index(std::size_t residual, std::size_t fwd,
                                std::size_t bwd) const {
  return offset_[residual] + fwd * bwd_count_[residual] + bwd;
}

std::size_t SlideClosure::find(std::size_t i) const {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

void SlideClosure::unite(std::size_t i, std::size_t j) {
  i = find(i);
  j = find(j);
  if (i == j) return;
  if (i < j) std::swap(i, j);
  parent_[i] = j;
}

std::size_t SlideClosure::classes() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < parent_.size(); ++i) n += find(i) == i;
  return n;
}

std::size_t SlideClosure::class_of(std::size_t i) const { return find(i); }

std::size_t SlideClosure::index_of(const OpticRep& o) const {
  if (o.action.name != action_.name || o.outer_in() != outer_in_ ||
      o.focus_in != focus_in_ || o.focus_out != focus_out_ ||
      o.outer_out() != outer_out_) {
    throw StructuralError("optic outside the slide closure's boundary");
  }
  for (std::size_t i = 0; i < residuals_.size(); ++i) {
    if (residuals_[i] == o.residual) {
      return index(i, encode_function(o.fwd.table(), o.fwd.cod().size()),
                   encode_function(o.bwd.table(), o.bwd.cod().size()));
    }
  }
  throw StructuralError("residual " + o.residual.to_string() +
                        " is not searched by the slide closure");
}

bool SlideClosure::related(const OpticRep& a, const OpticRep& b) const {
  return find(index_of(a)) == find(index_of(b));
}

OpticRep SlideClosure::representative(std::size_t idx) const {
  std::size_t i = 0;
  while (i + 1 < residuals_.size() && offset_[i + 1] <= idx) ++i;
  const std::size_t local = idx - offset_[i];
  const FinSet& m = residuals_[i];
  return OpticRep(action_, m, focus_in_, focus_out_,
                  function_at(outer_in_, action_.act(m, focus_in_),
                              local / bwd_count_[i]),
                  function_at(action_.act(m, focus_out_), outer_out_,
                              local % bwd_count_[i]));
}

LawReport slide_completeness_report(const ActionModel& a,
                                    std::size_t max_boundary,
                                    std::size_t max_residual) {
  LawReport r = LawReport::pass("normal form decides slide equivalence (" +
                                a.name + ")");
  std::vector<FinSet> residuals;
  for (std::size_t k = 0; k <= max_residual; ++k) residuals.emplace_back(k);
  std::int64_t boundaries = 0, reps = 0, classes = 0, slides = 0;
  const std::size_t n = max_boundary + 1;
  for (std::size_t code = 0; code < n * n * n * n && !r.failed(); ++code) {
    const FinSet xp(code / (n * n * n)), x(code / (n * n) % n),
        y(code / n % n), yp(code % n);
    const SlideClosure closure(a, xp, x, y, yp, residuals);
    ++boundaries;
    reps += static_cast<std::int64_t>(closure.representatives());
    classes += static_cast<std::int64_t>(closure.classes());
    slides += static_cast<std::int64_t>(closure.slides());
    std::map<std::size_t, std::pair<std::vector<std::size_t>, std::size_t>>
        key_of_class;
    std::map<std::vector<std::size_t>, std::size_t> class_of_key;
    for (std::size_t i = 0; i < closure.representatives(); ++i) {
      const OpticRep o = closure.representative(i);
      const std::vector<std::size_t> key = nf_key(o);
      const std::size_t c = closure.class_of(i);
      auto [kc, fresh_c] = key_of_class.emplace(c, std::make_pair(key, i));
      if (!fresh_c && kc->second.first != key) {
        const OpticRep other = closure.representative(kc->second.second);
        r = LawReport::fail(r.law, {{"problem", "slides change the normal form"},
                                    {"first fwd", other.fwd.to_string()},
                                    {"first bwd", other.bwd.to_string()},
                                    {"second fwd", o.fwd.to_string()},
                                    {"second bwd", o.bwd.to_string()}});
        break;
      }
      auto [ck, fresh_k] = class_of_key.emplace(key, c);
      if (!fresh_k && ck->second != c) {
        r = LawReport::fail(
            r.law, {{"problem", "equal normal forms not related by slides"},
                    {"boundary", xp.to_string() + " " + x.to_string() + " " +
                                     y.to_string() + " " + yp.to_string()},
                    {"fwd", o.fwd.to_string()},
                    {"bwd", o.bwd.to_string()}});
        break;
      }
    }
  }
  r.count("boundaries", boundaries);
  r.count("representatives", reps);
  r.count("slides", slides);
  r.count("classes", classes);
  return r;
}

// ---------------------------------------------------------------------------

OpticRep transform_optic_unchecked(const Costrength& cst, const Strength& st,
                                   const OpticRep& o) {
  if (cst.action().name != o.action.name || st.action().name != o.action.name) {
    throw PreconditionError("transformer and optic use different actions");
  }
  const Functor& f = cst.functor();
  const Functor& g = st.functor();
  const FinSet& m = o.residual;
  return OpticRep(o.action, m, f(o.focus_in), g(o.focus_out),
                  compose(cst.at(m, o.focus_in), f(o.fwd)),
                  compose(g(o.bwd), st.at(m, o.focus_out)));
}

OpticRep transform_optic(const Costrength& cst, const Strength& st,
                         const OpticRep& o) {
  const LawReport c = check_costrength(cst);
  if (c.failed()) {
    throw PreconditionError(cst.describe() + " fails " +
                            c.first_failure()->law);
  }
  const LawReport s = check_strength(st);
  if (s.failed()) {
    throw PreconditionError(st.describe() + " fails " +
                            s.first_failure()->law);
  }
  return transform_optic_unchecked(cst, st, o);
}

namespace {

std::optional<FinFun> random_function(const FinSet& a, const FinSet& b,
                                      std::mt19937_64& rng) {
  if (!a.empty() && b.empty()) return std::nullopt;
  Table t(a.size());
  if (!b.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    for (auto& v : t) v = pick(rng);
  }
  return FinFun(a, b, std::move(t));
}

std::optional<OpticRep> random_lens(const FinSet& xp, const FinSet& x,
                                    const FinSet& y, const FinSet& yp,
                                    std::size_t max_residual,
                                    std::mt19937_64& rng) {
  const ActionModel a = cartesian_action();
  std::uniform_int_distribution<std::size_t> size(0, max_residual);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const FinSet m(size(rng));
    auto f = random_function(xp, a.act(m, x), rng);
    auto b = random_function(a.act(m, y), yp, rng);
    if (f && b) return OpticRep(a, m, x, y, *f, *b);
  }
  return std::nullopt;
}

}  // namespace

TransformerWorkload lens_workload(std::size_t max_boundary,
                                  std::size_t max_residual,
                                  std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ActionModel a = cartesian_action();
  const std::size_t n = max_boundary + 1;
  std::uniform_int_distribution<std::size_t> bsize(0, max_boundary);
  std::uniform_int_distribution<std::size_t> rsize(0, max_residual);
  TransformerWorkload w;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      w.identities.emplace_back(FinSet(i), FinSet(j));
    }
  }
  for (std::size_t code = 0; code < n * n * n * n; ++code) {
    const FinSet xp(code / (n * n * n)), x(code / (n * n) % n),
        y(code / n % n), yp(code % n);
    for (std::size_t s = 0; s < samples; ++s) {
      auto o1 = random_lens(xp, x, y, yp, max_residual, rng);
      if (!o1) continue;
      const FinSet zp(bsize(rng)), zq(bsize(rng));
      if (auto o2 = random_lens(zp, xp, yp, zq, max_residual, rng)) {
        w.composable.emplace_back(*o2, *o1);
      }
      const LensNF nf = lens_nf(*o1);
      w.equivalent.emplace_back(*o1, lens_optic(nf.get, nf.put, y));

      const FinSet m(rsize(rng)), k(rsize(rng));
      const auto arrows = a.grade_arrows(m, k);
      if (arrows.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, arrows.size() - 1);
      auto f = random_function(xp, a.act(m, x), rng);
      auto b = random_function(a.act(k, y), yp, rng);
      if (!f || !b) continue;
      w.equivalent.push_back(
          slide_pair(a, arrows[pick(rng)], x, y, *f, *b));
    }
  }
  return w;
}

LawReport transformer_functoriality_report(const Costrength& cst,
                                           const Strength& st,
                                           const TransformerWorkload& w) {
  LawReport r = LawReport::pass("optic transformer (" +
                                cst.functor().to_string() + ", " +
                                st.functor().to_string() + ") is functorial");
  const ActionModel& a = cst.action();
  // Instances needing a component the families cannot supply are skipped
  // and counted, never treated as passes.
  std::int64_t skipped = 0;
  auto attempt = [&skipped](auto&& make) -> std::optional<OpticRep> {
    try {
      return make();
    } catch (const StructuralError&) {
      ++skipped;
      return std::nullopt;
    }
  };

  LawReport ids = LawReport::pass("identities are preserved");
  for (const auto& [x, y] : w.identities) {
    const auto t = attempt([&] {
      return transform_optic_unchecked(cst, st, identity_optic(a, x, y));
    });
    if (!t) continue;
    if (!nf_equal(*t, identity_optic(a, cst.functor()(x), st.functor()(y)))) {
      ids = LawReport::fail(ids.law, {{"X", x.to_string()}, {"Y", y.to_string()}});
      break;
    }
  }
  ids.count("checked", static_cast<std::int64_t>(w.identities.size()));
  r.add(std::move(ids));

  LawReport comp = LawReport::pass("composites are preserved");
  for (const auto& [o2, o1] : w.composable) {
    const auto lhs = attempt([&] {
      return transform_optic_unchecked(cst, st, compose_optics(o2, o1));
    });
    const auto rhs = attempt([&] {
      return compose_optics(transform_optic_unchecked(cst, st, o2),
                            transform_optic_unchecked(cst, st, o1));
    });
    if (!lhs || !rhs) continue;
    if (!nf_equal(*lhs, *rhs)) {
      comp = LawReport::fail(comp.law,
                             {{"outer fwd", o2.fwd.to_string()},
                              {"outer bwd", o2.bwd.to_string()},
                              {"inner fwd", o1.fwd.to_string()},
                              {"inner bwd", o1.bwd.to_string()}});
      break;
    }
  }
  comp.count("checked", static_cast<std::int64_t>(w.composable.size()));
  r.add(std::move(comp));

  LawReport eq = LawReport::pass("equivalent optics stay equivalent");
  for (const auto& [p, q] : w.equivalent) {
    if (!nf_equal(p, q)) {
      throw PreconditionError("workload pair is not equivalent");
    }
    const auto tp = attempt([&] { return transform_optic_unchecked(cst, st, p); });
    const auto tq = attempt([&] { return transform_optic_unchecked(cst, st, q); });
    if (!tp || !tq) continue;
    if (!nf_equal(*tp, *tq)) {
      eq = LawReport::fail(eq.law, {{"first residual", p.residual.to_string()},
                                    {"first fwd", p.fwd.to_string()},
                                    {"first bwd", p.bwd.to_string()},
                                    {"second residual", q.residual.to_string()},
                                    {"second fwd", q.fwd.to_string()},
                                    {"second bwd", q.bwd.to_string()}});
      break;
    }
  }
  eq.count("checked", static_cast<std::int64_t>(w.equivalent.size()));
  r.add(std::move(eq));
  r.count("instances_skipped", skipped);
  return r;
}

}  // namespace costrength
