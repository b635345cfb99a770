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


// Concrete costrengths, adjunctions and mates.

#include <string>
#include <utility>

#include "costrength/costrength.hpp"
#include "costrength/errors.hpp"

namespace costrength {

namespace {

void require_lawful(const LawReport& r, const std::string& what) {
  if (r.failed()) {
    const LawReport* bad = r.first_failure();
    throw PreconditionError(what + " fails " +
                            (bad ? bad->law : std::string("its laws")));
  }
}

/// x |-> (s, x) : X -> S x X
FinFun section_at(const FinSet& s, std::size_t point, const FinSet& x) {
  return pair(constant(x, s, point), identity(x));
}

}  // namespace

Costrength writer_costrength(const FinSet& s, const Universe& objects,
                             const Universe& grades) {
  return Costrength::tabulate(
      writer(s), cartesian_action(), objects, grades,
      [s](const FinSet& m, const FinSet& x) {
        // (s, (m, x)) |-> (m, (s, x))
        const FinSet mx = product(m, x);
        const FinSet sx = product(s, x);
        Table t(s.size() * mx.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
          const std::size_t si = i / mx.size();
          const std::size_t mi = (i % mx.size()) / x.size();
          const std::size_t xi = i % x.size();
          t[i] = mi * sx.size() + si * x.size() + xi;
        }
        return FinFun(product(s, mx), product(m, sx), std::move(t));
      });
}

Costrength powerset_cocart_costrength(const Universe& objects,
                                      const Universe& grades) {
  const Functor P = Functor::pow(Functor::id());
  return Costrength::tabulate(
      P, cocartesian_action(), objects, grades,
      [P](const FinSet& m, const FinSet& x) {
        const FinSet dom = P(coproduct(m, x));
        Table t(dom.size());
        // Bits m.. of U are the inr elements.
        for (std::size_t u = 0; u < t.size(); ++u) t[u] = m.size() + (u >> m.size());
        return FinFun(dom, coproduct(m, P(x)), std::move(t));
      });
}

Costrength filtrable_costrength(const Functor& f, const NatFamily& filter,
                                const Universe& objects,
                                const Universe& grades) {
  if (!(filter.source() == Functor::comp(f, maybe())) ||
      !(filter.target() == f)) {
    throw PreconditionError("a filter for " + f.to_string() +
                            " must be a map F . Maybe => F");
  }
  require_lawful(check_natural(filter), "filter");
  return Costrength::tabulate(
      f, cocartesian_action(), objects, grades,
      [f, filter](const FinSet& m, const FinSet& x) {
        const FinFun collapse = coproduct_map(bang(m), identity(x));
        return compose(inr(m, f(x)), compose(filter.at(x), f(collapse)));
      });
}

NatFamily powerset_filter(const Universe& u) {
  const Functor P = Functor::pow(Functor::id());
  return NatFamily::tabulate(
      Functor::comp(P, maybe()), P, u, [P](const FinSet& x) {
        const FinSet dom = P(maybe()(x));
        Table t(dom.size());
        // Bit 0 is "nothing"; the remaining bits are the just elements.
        for (std::size_t v = 0; v < t.size(); ++v) t[v] = v >> 1;
        return FinFun(dom, P(x), std::move(t));
      });
}

NatFamily maybe_filter(const Universe& u) {
  return NatFamily::tabulate(Functor::comp(maybe(), maybe()), maybe(), u,
                             [](const FinSet& x) {
                               return copair(inl(terminal(), x),
                                             identity(maybe()(x)));
                             });
}

Costrength writer_cocart_costrength(const FinSet& s, const Universe& objects,
                                    const Universe& grades) {
  return Costrength::tabulate(
      writer(s), cocartesian_action(), objects, grades,
      [s](const FinSet& m, const FinSet& x) {
        const FinSet mx = coproduct(m, x);
        Table t(s.size() * mx.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
          const std::size_t si = i / mx.size();
          const std::size_t e = i % mx.size();
          t[i] = e < m.size() ? e
                              : m.size() + si * x.size() + (e - m.size());
        }
        return FinFun(product(s, mx), coproduct(m, product(s, x)),
                      std::move(t));
      });
}

Costrength op_exponential_costrength(const Functor& f,
                                     const Universe& objects,
                                     const Universe& grades) {
  return Costrength::tabulate(
      f, op_exponential_action(), objects, grades,
      [f](const FinSet& m, const FinSet& x) {
        const FinSet dom = f(exponential(m, x));
        const FinSet fx = f(x);
        std::vector<FinFun> evals;
        for (std::size_t k = 0; k < m.size(); ++k) {
          evals.push_back(f(eval_at(m, x, k)));
        }
        Table t(dom.size());
        Table values(m.size());
        for (std::size_t w = 0; w < dom.size(); ++w) {
          for (std::size_t k = 0; k < m.size(); ++k) values[k] = evals[k](w);
          t[w] = encode_function(values, fx.size());
        }
        return FinFun(dom, exponential(m, fx), std::move(t));
      });
}

FinFun exponential_mate(const Strength& st, const FinSet& m,
                        const FinSet& x) {
  const Functor& F = st.functor();
  const FinSet mx = exponential(m, x);
  // ev' : M x [M,X] -> X
  const FinFun ev = compose(eval(m, x), product_symmetry(m, mx));
  const FinFun lifted = compose(F(ev), st.at(m, mx));
  const FinSet dom = F(mx);
  const FinSet fx = F(x);
  Table t(dom.size());
  Table values(m.size());
  for (std::size_t w = 0; w < dom.size(); ++w) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      values[k] = lifted(k * dom.size() + w);
    }
    t[w] = encode_function(values, fx.size());
  }
  return FinFun(dom, exponential(m, fx), std::move(t));
}

LawReport op_exponential_mate_report(const Functor& f, const Universe& objects,
                                     const Universe& grades) {
  const Costrength c = op_exponential_costrength(f, objects, grades);
  const Strength st = canonical_strength(f, objects, grades);
  LawReport r = LawReport::pass("op-exponential costrength of " +
                                f.to_string() + " is the mate of its strength");
  for (const auto& m : grades.objects()) {
    for (const auto& x : objects.objects()) {
      if (!expect_equal(r, c.at(m, x), exponential_mate(st, m, x),
                        {{"M", m.to_string()}, {"X", x.to_string()}})) {
        return r;
      }
    }
  }
  return r;
}

NatFamily copower_costrength(const FinSet& s, const Functor& g,
                             const Universe& u) {
  return NatFamily::tabulate(
      Functor::prod(Functor::constant(s), g), Functor::comp(g, writer(s)), u,
      [s, g](const FinSet& x) {
        const FinSet gx = g(x);
        Table t(s.size() * gx.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
          const FinFun image = g(section_at(s, i, x));
          for (std::size_t w = 0; w < gx.size(); ++w) {
            t[i * gx.size() + w] = image(w);
          }
        }
        return FinFun(product(s, gx), g(product(s, x)), std::move(t));
      });
}

LawReport copower_report(const FinSet& s, const std::vector<Functor>& gs,
                         const Universe& u) {
  std::string names;
  for (const auto& g : gs) names += (names.empty() ? "" : ", ") + g.to_string();
  LawReport r = LawReport::pass("copower distributive law of " +
                                s.to_string() + " x -");
  r.note("functors " + names + "; objects " + u.name());
  for (const auto& g : gs) r.add(check_natural(copower_costrength(s, g, u)));

  LawReport unit = LawReport::pass("identity functor gives the identity");
  const NatFamily id = copower_costrength(s, Functor::id(), u);
  for (const auto& x : u.objects()) {
    expect_equal(unit, id.at(x), identity(product(s, x)),
                 {{"X", x.to_string()}});
  }
  r.add(std::move(unit));

  LawReport comp = LawReport::pass("composition law");
  std::int64_t checked = 0, skipped = 0;
  for (const auto& g : gs) {
    for (const auto& h : gs) {
      const NatFamily cg = copower_costrength(s, g, u);
      const NatFamily ch = copower_costrength(s, h, u);
      const Functor gh = Functor::comp(g, h);
      for (const auto& x : u.objects()) {
        if (comp.failed()) break;
        try {
          const FinFun lhs = copower_costrength(s, gh, Universe({x})).at(x);
          expect_equal(comp, lhs, compose(g(ch.at(x)), cg.at(h(x))),
                       {{"G", g.to_string()},
                        {"H", h.to_string()},
                        {"X", x.to_string()}});
          ++checked;
        } catch (const ResourceError&) {
          ++skipped;
        }
      }
    }
  }
  comp.count("cells_checked", checked);
  if (skipped > 0) {
    comp.count("cells_skipped", skipped);
    comp.note("cells whose sets exceed the size cap are skipped");
  }
  r.add(std::move(comp));
  return r;
}

Costrength coproduct_costrong(const Costrength& c1, const Costrength& c2) {
  if (c1.action().name != c2.action().name ||
      !(c1.objects() == c2.objects()) || !(c1.grades() == c2.grades())) {
    throw PreconditionError(
        "coproduct of costrengths needs one action and one pair of universes");
  }
  require_lawful(check_costrength(c1), c1.describe());
  require_lawful(check_costrength(c2), c2.describe());
  const Functor F = c1.functor();
  const Functor G = c2.functor();
  const ActionModel a = c1.action();
  return Costrength::tabulate(
      Functor::coprod(F, G), a, c1.objects(), c1.grades(),
      [c1, c2, F, G, a](const FinSet& m, const FinSet& x) {
        const FinSet fx = F(x);
        const FinSet gx = G(x);
        return copair(compose(a.act_on(m, inl(fx, gx)), c1.at(m, x)),
                      compose(a.act_on(m, inr(fx, gx)), c2.at(m, x)));
      });
}

std::pair<NatFamily, NatFamily> coproduct_injections(const Functor& f,
                                                     const Functor& g,
                                                     const Universe& u) {
  const Functor sum = Functor::coprod(f, g);
  return {NatFamily::tabulate(f, sum, u,
                              [f, g](const FinSet& x) {
                                return inl(f(x), g(x));
                              }),
          NatFamily::tabulate(g, sum, u, [f, g](const FinSet& x) {
            return inr(f(x), g(x));
          })};
}

// ---------------------------------------------------------------------------

AdjunctionModel product_exponential_adjunction(const FinSet& s,
                                               const Universe& u) {
  const Functor L = writer(s);
  const Functor R = reader(s);
  NatFamily unit = NatFamily::tabulate(
      Functor::id(), Functor::comp(R, L), u, [s](const FinSet& x) {
        // x |-> (s' |-> (s', x))
        const FinSet sx = product(s, x);
        Table t(x.size());
        Table values(s.size());
        for (std::size_t e = 0; e < x.size(); ++e) {
          for (std::size_t k = 0; k < s.size(); ++k) {
            values[k] = k * x.size() + e;
          }
          t[e] = encode_function(values, sx.size());
        }
        return FinFun(x, exponential(s, sx), std::move(t));
      });
  NatFamily counit = NatFamily::tabulate(
      Functor::comp(L, R), Functor::id(), u, [s](const FinSet& y) {
        return compose(eval(s, y), product_symmetry(s, exponential(s, y)));
      });
  return {L, R, std::move(unit), std::move(counit)};
}

AdjunctionModel identity_adjunction(const Universe& u) {
  const Functor id = Functor::id();
  const Functor idid = Functor::comp(id, id);
  auto ident = [](const FinSet& x) { return identity(x); };
  return {id, id, NatFamily::tabulate(id, idid, u, ident),
          NatFamily::tabulate(idid, id, u, ident)};
}

LawReport check_adjunction(const AdjunctionModel& adj) {
  LawReport r = LawReport::pass("adjunction " + adj.left.to_string() +
                                " -| " + adj.right.to_string());
  r.add(check_natural(adj.unit));
  r.add(check_natural(adj.counit));
  LawReport tri = LawReport::pass("triangle identities");
  for (const auto& x : adj.unit.universe().objects()) {
    const FinSet lx = adj.left(x);
    const FinSet rx = adj.right(x);
    expect_equal(tri,
                 compose(adj.counit.at(lx), adj.left(adj.unit.at(x))),
                 identity(lx), {{"triangle", "left"}, {"X", x.to_string()}});
    expect_equal(tri,
                 compose(adj.right(adj.counit.at(x)), adj.unit.at(rx)),
                 identity(rx), {{"triangle", "right"}, {"X", x.to_string()}});
  }
  r.add(std::move(tri));
  return r;
}

Costrength mate_left(const AdjunctionModel& adj, const Strength& st) {
  if (!(st.functor() == adj.right)) {
    throw PreconditionError("mate_left needs a strength on " +
                            adj.right.to_string());
  }
  require_lawful(check_adjunction(adj), "adjunction");
  require_lawful(check_strength(st), st.describe());
  const ActionModel a = st.action();
  return Costrength::tabulate(
      adj.left, a, st.objects(), st.grades(),
      [adj, st, a](const FinSet& m, const FinSet& x) {
        const Functor& L = adj.left;
        const FinSet lx = L(x);
        return compose(adj.counit.at(a.act(m, lx)),
                       compose(L(st.at(m, lx)),
                               L(a.act_on(m, adj.unit.at(x)))));
      });
}

Strength mate_right(const AdjunctionModel& adj, const Costrength& cst) {
  if (!(cst.functor() == adj.left)) {
    throw PreconditionError("mate_right needs a costrength on " +
                            adj.left.to_string());
  }
  require_lawful(check_adjunction(adj), "adjunction");
  require_lawful(check_costrength(cst), cst.describe());
  const ActionModel a = cst.action();
  return Strength::tabulate(
      adj.right, a, cst.objects(), cst.grades(),
      [adj, cst, a](const FinSet& m, const FinSet& y) {
        const Functor& R = adj.right;
        const FinSet ry = R(y);
        return compose(R(a.act_on(m, adj.counit.at(y))),
                       compose(R(cst.at(m, ry)),
                               adj.unit.at(a.act(m, ry))));
      });
}

}  // namespace costrength
