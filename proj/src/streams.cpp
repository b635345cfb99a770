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


#include "costrength/streams.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "costrength/errors.hpp"

namespace costrength {

StreamAutomaton::StreamAutomaton(FinSet states_, FinSet alphabet_,
                                 FinFun out_, FinFun next_)
    : states(std::move(states_)),
      alphabet(std::move(alphabet_)),
      out(std::move(out_)),
      next(std::move(next_)) {
  if (out.dom() != states || out.cod() != alphabet) {
    throw StructuralError("automaton output must be a map states -> alphabet");
  }
  if (next.dom() != states || next.cod() != states) {
    throw StructuralError("automaton transition must be a map states -> states");
  }
}

// ---------------------------------------------------------------------------

Lasso Lasso::make(std::vector<std::size_t> prefix,
                  std::vector<std::size_t> cycle) {
  if (cycle.empty()) throw StructuralError("a lasso needs a nonempty cycle");
  const std::size_t n = cycle.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) {
      periodic = cycle[i] == cycle[i - p];
    }
    if (periodic) {
      cycle.resize(p);
      break;
    }
  }
  while (!prefix.empty() && prefix.back() == cycle.back()) {
    prefix.pop_back();
    std::rotate(cycle.begin(), cycle.end() - 1, cycle.end());
  }
  return Lasso{std::move(prefix), std::move(cycle)};
}

std::size_t Lasso::head() const {
  return prefix.empty() ? cycle.front() : prefix.front();
}

Lasso Lasso::tail() const {
  if (!prefix.empty()) {
    return make({prefix.begin() + 1, prefix.end()}, cycle);
  }
  std::vector<std::size_t> c = cycle;
  std::rotate(c.begin(), c.begin() + 1, c.end());
  return make({}, std::move(c));
}

Lasso Lasso::cons(std::size_t m) const {
  std::vector<std::size_t> p;
  p.reserve(prefix.size() + 1);
  p.push_back(m);
  p.insert(p.end(), prefix.begin(), prefix.end());
  return make(std::move(p), cycle);
}

std::vector<std::size_t> Lasso::expand(std::size_t n) const {
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i < prefix.size()
                      ? prefix[i]
                      : cycle[(i - prefix.size()) % cycle.size()]);
  }
  return out;
}

std::string Lasso::to_string(const FinSet& alphabet) const {
  std::string s;
  for (auto m : prefix) s += alphabet.label(m) + " ";
  s += "|";
  for (auto m : cycle) s += " " + alphabet.label(m);
  return s;
}

std::vector<std::size_t> behavior(const StreamAutomaton& a, std::size_t state,
                                  std::size_t n) {
  if (state >= a.states.size()) {
    throw StructuralError("state " + std::to_string(state) +
                          " is not a state of the automaton");
  }
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(a.out(state));
    state = a.next(state);
  }
  return out;
}

Lasso behavior_lasso(const StreamAutomaton& a, std::size_t state) {
  if (state >= a.states.size()) {
    throw StructuralError("state " + std::to_string(state) +
                          " is not a state of the automaton");
  }
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> seen(a.states.size(), kUnseen);
  std::vector<std::size_t> outs;
  while (seen[state] == kUnseen) {
    seen[state] = outs.size();
    outs.push_back(a.out(state));
    state = a.next(state);
  }
  const std::size_t j = seen[state];
  return Lasso::make({outs.begin(), outs.begin() + j},
                     {outs.begin() + j, outs.end()});
}

std::optional<std::size_t> coalgebra_morphism_failure(
    const StreamAutomaton& a, const StreamAutomaton& b, const FinFun& h) {
  if (h.dom() != a.states || h.cod() != b.states || a.alphabet != b.alphabet) {
    throw StructuralError("h is not a map between the two state sets");
  }
  for (std::size_t x = 0; x < a.states.size(); ++x) {
    if (b.out(h(x)) != a.out(x) || b.next(h(x)) != h(a.next(x))) return x;
  }
  return std::nullopt;
}

std::pair<StreamAutomaton, FinFun> minimize(const StreamAutomaton& a) {
  std::map<Lasso, std::size_t> classes;
  std::vector<std::size_t> cls(a.states.size());
  std::vector<std::size_t> rep;
  for (std::size_t x = 0; x < a.states.size(); ++x) {
    auto [it, fresh] = classes.emplace(behavior_lasso(a, x), rep.size());
    if (fresh) rep.push_back(x);
    cls[x] = it->second;
  }
  const FinSet q(rep.size());
  Table out(rep.size()), next(rep.size());
  for (std::size_t k = 0; k < rep.size(); ++k) {
    out[k] = a.out(rep[k]);
    next[k] = cls[a.next(rep[k])];
  }
  return {StreamAutomaton(q, a.alphabet, FinFun(q, a.alphabet, out),
                          FinFun(q, q, next)),
          FinFun(a.states, q, cls)};
}

// ---------------------------------------------------------------------------

StreamAutomaton lift_unchecked(const StreamAutomaton& a, const Costrength& c) {
  const Functor& F = c.functor();
  const FinSet& m = a.alphabet;
  const FinSet fc = F(a.states);
  const FinFun step = compose(c.at(m, a.states), F(pair(a.out, a.next)));
  return StreamAutomaton(fc, m, compose(proj1(m, fc), step),
                         compose(proj2(m, fc), step));
}

StreamAutomaton lift(const StreamAutomaton& a, const Costrength& c) {
  if (c.action().name != "cart") {
    throw PreconditionError("lifting needs a cartesian costrength");
  }
  const LawReport laws = check_costrength(c);
  if (laws.failed()) {
    throw PreconditionError(c.describe() + " fails " +
                            laws.first_failure()->law);
  }
  StreamAutomaton lifted = lift_unchecked(a, c);
  if (lifted.next != c.functor()(a.next)) {
    throw StructuralError("lifted transition differs from F(next)");
  }
  return lifted;
}

LawReport extraction_semantics_report(const StreamAutomaton& a,
                                      const Costrength& c) {
  LawReport r = LawReport::pass("extraction semantics of " + c.describe());
  const StreamAutomaton lifted = lift_unchecked(a, c);
  LawReport next = LawReport::pass("lifted transition is F(next)");
  expect_equal(next, lifted.next, c.functor()(a.next), {});
  r.add(std::move(next));

  LawReport same = LawReport::pass("F-wrapped states behave like eps(w)");
  const FinFun eps = phi(c).at(a.states);
  for (std::size_t w = 0; w < lifted.states.size(); ++w) {
    const Lasso lw = behavior_lasso(lifted, w);
    const Lasso le = behavior_lasso(a, eps(w));
    if (lw != le) {
      same = LawReport::fail(same.law,
                             {{"wrapped state", lifted.states.label(w)},
                              {"lifted behaviour", lw.to_string(a.alphabet)},
                              {"extracted state", a.states.label(eps(w))},
                              {"behaviour", le.to_string(a.alphabet)}});
      break;
    }
  }
  same.count("states_checked", static_cast<std::int64_t>(lifted.states.size()));
  r.add(std::move(same));
  return r;
}

LawReport morphism_preservation_report(const StreamAutomaton& a,
                                       const StreamAutomaton& b,
                                       const FinFun& h, const Costrength& c) {
  if (auto bad = coalgebra_morphism_failure(a, b, h)) {
    throw PreconditionError("h is not a coalgebra morphism at state " +
                            a.states.label(*bad));
  }
  LawReport r = LawReport::pass("F(h) is a morphism of lifted automata");
  const StreamAutomaton la = lift_unchecked(a, c);
  const StreamAutomaton lb = lift_unchecked(b, c);
  const FinFun fh = c.functor()(h);
  if (auto bad = coalgebra_morphism_failure(la, lb, fh)) {
    r = LawReport::fail(r.law, {{"state", la.states.label(*bad)}});
  }
  return r;
}

// ---------------------------------------------------------------------------

StreamAutomaton solve_up_to(const UpToSystem& s) {
  const Functor& F = s.functor;
  if (!(s.copoint.source() == F) || !(s.copoint.target() == Functor::id())) {
    throw PreconditionError("the copoint must be a map " + F.to_string() +
                            " => Id");
  }
  if (s.phi.dom() != s.carrier ||
      s.phi.cod() != product(s.alphabet, F(s.carrier))) {
    throw PreconditionError("phi must be a map X -> M x F(X)");
  }
  const LawReport nat = check_natural(s.copoint);
  if (nat.failed()) {
    throw PreconditionError("the copoint is not natural");
  }
  const FinSet fx = F(s.carrier);
  return StreamAutomaton(
      s.carrier, s.alphabet, compose(proj1(s.alphabet, fx), s.phi),
      compose(s.copoint.at(s.carrier),
              compose(proj2(s.alphabet, fx), s.phi)));
}

LawReport bartels_report(const UpToSystem& s, const std::vector<Lasso>& b) {
  LawReport r = LawReport::pass("coinduction up to " + s.functor.to_string());
  const FinSet& X = s.carrier;
  const FinSet& M = s.alphabet;
  const Functor& F = s.functor;
  if (b.size() != X.size()) {
    throw StructuralError("behaviour map must have one lasso per element");
  }
  // Streams reachable from the image of b, closed under tails.
  std::map<Lasso, std::size_t> index;
  std::vector<Lasso> streams;
  auto visit = [&](const Lasso& l) {
    std::vector<Lasso> todo{l};
    while (!todo.empty()) {
      Lasso cur = std::move(todo.back());
      todo.pop_back();
      if (index.count(cur)) continue;
      index.emplace(cur, streams.size());
      streams.push_back(cur);
      todo.push_back(cur.tail());
    }
  };
  for (const auto& l : b) visit(l);
  std::vector<std::string> labels;
  for (const auto& l : streams) labels.push_back(l.to_string(M));
  const FinSet L(labels);
  Table out(streams.size()), next(streams.size()), bt(X.size());
  for (std::size_t i = 0; i < streams.size(); ++i) {
    out[i] = streams[i].head();
    next[i] = index.at(streams[i].tail());
  }
  for (std::size_t x = 0; x < X.size(); ++x) bt[x] = index.at(b[x]);
  const StreamAutomaton tails(L, M, FinFun(L, M, out), FinFun(L, L, next));
  const FinFun bmap(X, L, bt);

  const Costrength cst = psi(s.copoint, Universe({L}), Universe({M}));
  const StreamAutomaton algebra = lift_unchecked(tails, cst);
  const FinSet fx = F(X);
  const FinFun fb = F(bmap);

  LawReport diagram = LawReport::pass("behaviour satisfies the diagram");
  for (std::size_t x = 0; x < X.size(); ++x) {
    const std::size_t p = s.phi(x);
    const std::size_t head = p / fx.size();
    const std::size_t w = p % fx.size();
    const Lasso expected = behavior_lasso(algebra, fb(w)).cons(head);
    if (expected != b[x]) {
      diagram = LawReport::fail(diagram.law,
                                {{"x", X.label(x)},
                                 {"behaviour", b[x].to_string(M)},
                                 {"diagram", expected.to_string(M)}});
      break;
    }
  }
  diagram.count("streams", static_cast<std::int64_t>(streams.size()));
  r.add(std::move(diagram));

  LawReport extract = LawReport::pass("algebra agrees with extraction by eps");
  try {
    const FinFun eps = s.copoint.at(L);
    for (std::size_t w = 0; w < algebra.states.size(); ++w) {
      if (behavior_lasso(algebra, w) != streams[eps(w)]) {
        extract = LawReport::fail(extract.law,
                                  {{"element", algebra.states.label(w)}});
        break;
      }
    }
  } catch (const StructuralError& e) {
    extract = LawReport::skipped(extract.law, e.what());
  }
  r.add(std::move(extract));
  return r;
}

LawReport up_to_uniqueness_report(const UpToSystem& s,
                                  std::size_t max_automata) {
  const FinSet& X = s.carrier;
  const FinSet& M = s.alphabet;
  const std::size_t total = function_count(X, M) * function_count(X, X);
  if (total > max_automata) {
    throw ResourceError("uniqueness search over " + std::to_string(total) +
                        " automata exceeds the limit of " +
                        std::to_string(max_automata));
  }
  const StreamAutomaton sol = solve_up_to(s);
  std::vector<Lasso> expected;
  for (std::size_t x = 0; x < X.size(); ++x) {
    expected.push_back(behavior_lasso(sol, x));
  }
  LawReport r = LawReport::pass("uniqueness of the up-to solution");
  std::int64_t searched = 0, solutions = 0;
  for (const FinFun& out : all_functions(X, M)) {
    for (const FinFun& next : all_functions(X, X)) {
      ++searched;
      const StreamAutomaton cand(X, M, out, next);
      std::vector<Lasso> b;
      for (std::size_t x = 0; x < X.size(); ++x) {
        b.push_back(behavior_lasso(cand, x));
      }
      const LawReport diagram = bartels_report(s, b);
      if (diagram.parts.front().failed()) continue;
      ++solutions;
      if (b != expected && !r.failed()) {
        r = LawReport::fail(r.law, {{"second solution out", out.to_string()},
                                    {"next", next.to_string()}});
      }
    }
  }
  r.count("automata_searched", searched);
  r.count("diagram_solutions", solutions);
  if (solutions == 0) {
    r = LawReport::fail(r.law, {{"reason", "the solution itself fails"}});
  }
  return r;
}

}  // namespace costrength
