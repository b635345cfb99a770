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


#include "costrength/nat_search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <string>

#include "costrength/errors.hpp"

namespace costrength::search {

namespace {

struct Edge {
  std::uint32_t var;
  std::uint32_t link;
};

// Compressed adjacency: edges of variable v live in [start[v], start[v+1]).
struct Adjacency {
  std::vector<std::size_t> start;
  std::vector<Edge> edges;
};

struct State {
  std::vector<std::int32_t> value;  // -1 when unassigned
  std::vector<std::uint64_t> domain;
  std::vector<std::uint32_t> domain_size;
};

class Solver {
 public:
  Solver(const Problem& problem, std::uint64_t max_nodes)
      : problem_(problem), max_nodes_(max_nodes) {
    offset_.resize(problem.cells.size() + 1, 0);
    for (std::size_t c = 0; c < problem.cells.size(); ++c) {
      offset_[c + 1] = offset_[c] + problem.cells[c].dom_size;
    }
    const std::size_t n = offset_.back();
    cell_of_.resize(n);
    word_offset_.resize(n + 1, 0);
    for (std::size_t c = 0; c < problem.cells.size(); ++c) {
      for (std::size_t v = offset_[c]; v < offset_[c + 1]; ++v) {
        cell_of_[v] = c;
        word_offset_[v + 1] =
            word_offset_[v] + (problem.cells[c].cod_size + 63) / 64;
      }
    }
    build_adjacency();
  }

  std::vector<Solution> run(Stats* stats) {
    State s;
    const std::size_t n = offset_.back();
    s.value.assign(n, -1);
    s.domain.assign(word_offset_.back(), 0);
    s.domain_size.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t cod = problem_.cells[cell_of_[v]].cod_size;
      for (std::size_t b = 0; b < cod; ++b) set_bit(s, v, b);
      s.domain_size[v] = static_cast<std::uint32_t>(cod);
      if (cod == 0) return finish(stats);
    }
    std::vector<std::uint32_t> queue;
    bool ok = true;
    for (std::size_t c = 0; c < problem_.fixed.size() && ok; ++c) {
      if (!problem_.fixed[c]) continue;
      const Table& t = *problem_.fixed[c];
      if (t.size() != problem_.cells[c].dom_size) {
        throw StructuralError("prescribed cell table has the wrong length");
      }
      for (std::size_t w = 0; w < t.size() && ok; ++w) {
        ok = assign(s, static_cast<std::uint32_t>(offset_[c] + w), t[w],
                    queue);
      }
    }
    if (ok && propagate(s, queue)) search(s);
    return finish(stats);
  }

 private:
  void build_adjacency() {
    const std::size_t n = offset_.back();
    std::vector<std::size_t> fwd_count(n + 1, 0), bwd_count(n + 1, 0);
    for (const Link& l : problem_.links) {
      for (std::size_t w = 0; w < l.src.size(); ++w) {
        ++fwd_count[offset_[l.from] + w];
        ++bwd_count[offset_[l.to] + l.src[w]];
      }
    }
    auto prefix = [n](std::vector<std::size_t>& counts, Adjacency& adj) {
      adj.start.assign(n + 1, 0);
      for (std::size_t v = 0; v < n; ++v) {
        adj.start[v + 1] = adj.start[v] + counts[v];
      }
      adj.edges.resize(adj.start[n]);
      std::fill(counts.begin(), counts.end(), 0);
    };
    prefix(fwd_count, forward_);
    prefix(bwd_count, backward_);
    for (std::uint32_t li = 0; li < problem_.links.size(); ++li) {
      const Link& l = problem_.links[li];
      for (std::size_t w = 0; w < l.src.size(); ++w) {
        const std::size_t from_var = offset_[l.from] + w;
        const std::size_t to_var = offset_[l.to] + l.src[w];
        forward_.edges[forward_.start[from_var] + fwd_count[from_var]++] = {
            static_cast<std::uint32_t>(to_var), li};
        backward_.edges[backward_.start[to_var] + bwd_count[to_var]++] = {
            static_cast<std::uint32_t>(from_var), li};
      }
    }
  }

  bool test_bit(const State& s, std::size_t v, std::size_t b) const {
    return (s.domain[word_offset_[v] + b / 64] >> (b % 64)) & 1U;
  }
  void set_bit(State& s, std::size_t v, std::size_t b) const {
    s.domain[word_offset_[v] + b / 64] |= std::uint64_t{1} << (b % 64);
  }

  bool assign(State& s, std::uint32_t v, std::size_t b,
              std::vector<std::uint32_t>& queue) const {
    if (s.value[v] >= 0) return static_cast<std::size_t>(s.value[v]) == b;
    if (!test_bit(s, v, b)) return false;
    s.value[v] = static_cast<std::int32_t>(b);
    for (std::size_t k = word_offset_[v]; k < word_offset_[v + 1]; ++k) {
      s.domain[k] = 0;
    }
    set_bit(s, v, b);
    s.domain_size[v] = 1;
    queue.push_back(v);
    return true;
  }

  bool propagate(State& s, std::vector<std::uint32_t>& queue) const {
    while (!queue.empty()) {
      const std::uint32_t v = queue.back();
      queue.pop_back();
      const std::size_t a = static_cast<std::size_t>(s.value[v]);
      for (std::size_t e = forward_.start[v]; e < forward_.start[v + 1]; ++e) {
        const Edge& edge = forward_.edges[e];
        if (!assign(s, edge.var, problem_.links[edge.link].tgt[a], queue)) {
          return false;
        }
      }
      for (std::size_t e = backward_.start[v]; e < backward_.start[v + 1];
           ++e) {
        const Edge& edge = backward_.edges[e];
        const Table& tgt = problem_.links[edge.link].tgt;
        const std::uint32_t u = edge.var;
        if (s.value[u] >= 0) {
          if (tgt[static_cast<std::size_t>(s.value[u])] != a) return false;
          continue;
        }
        std::uint32_t remaining = 0;
        std::size_t last = 0;
        for (std::size_t k = word_offset_[u]; k < word_offset_[u + 1]; ++k) {
          std::uint64_t word = s.domain[k];
          std::uint64_t kept = word;
          while (word) {
            const int bit = std::countr_zero(word);
            word &= word - 1;
            const std::size_t b = (k - word_offset_[u]) * 64 + bit;
            if (tgt[b] != a) {
              kept &= ~(std::uint64_t{1} << bit);
            } else {
              ++remaining;
              last = b;
            }
          }
          s.domain[k] = kept;
        }
        s.domain_size[u] = remaining;
        if (remaining == 0) return false;
        if (remaining == 1 && !assign(s, u, last, queue)) return false;
      }
    }
    return true;
  }

  void search(const State& s) {
    std::size_t best = s.value.size();
    std::uint32_t best_size = 0;
    for (std::size_t v = 0; v < s.value.size(); ++v) {
      if (s.value[v] >= 0) continue;
      if (best == s.value.size() || s.domain_size[v] < best_size) {
        best = v;
        best_size = s.domain_size[v];
        if (best_size <= 1) break;
      }
    }
    if (best == s.value.size()) {
      record(s);
      return;
    }
    const std::size_t cod = problem_.cells[cell_of_[best]].cod_size;
    for (std::size_t b = 0; b < cod; ++b) {
      if (!test_bit(s, best, b)) continue;
      if (++nodes_ > max_nodes_) {
        std::ostringstream msg;
        msg << "search budget of " << max_nodes_
            << " nodes exhausted; naive candidate count is about 10^"
            << static_cast<long long>(naive_log10_candidates(problem_))
            << " over cells with (domain, codomain) sizes";
        for (const Cell& c : problem_.cells) {
          msg << " (" << c.dom_size << "," << c.cod_size << ")";
        }
        throw ResourceError(msg.str());
      }
      State next = s;
      std::vector<std::uint32_t> queue;
      if (assign(next, static_cast<std::uint32_t>(best), b, queue) &&
          propagate(next, queue)) {
        search(next);
      }
    }
  }

  void record(const State& s) {
    Solution sol(problem_.cells.size());
    for (std::size_t c = 0; c < problem_.cells.size(); ++c) {
      sol[c].resize(problem_.cells[c].dom_size);
      for (std::size_t w = 0; w < sol[c].size(); ++w) {
        sol[c][w] = static_cast<std::size_t>(s.value[offset_[c] + w]);
      }
    }
    solutions_.push_back(std::move(sol));
  }

  std::vector<Solution> finish(Stats* stats) {
    std::sort(solutions_.begin(), solutions_.end());
    solutions_.erase(std::unique(solutions_.begin(), solutions_.end()),
                     solutions_.end());
    if (stats) {
      stats->nodes = nodes_;
      stats->variables = offset_.back();
    }
    return std::move(solutions_);
  }

  const Problem& problem_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> cell_of_;
  std::vector<std::size_t> word_offset_;
  Adjacency forward_;
  Adjacency backward_;
  std::vector<Solution> solutions_;
};

}  // namespace

std::vector<Solution> solve(const Problem& problem, std::uint64_t max_nodes,
                            Stats* stats) {
  if (!problem.fixed.empty() && problem.fixed.size() != problem.cells.size()) {
    throw StructuralError("prescribed cells do not match the cell count");
  }
  for (const Link& l : problem.links) {
    if (l.from >= problem.cells.size() || l.to >= problem.cells.size() ||
        l.src.size() != problem.cells[l.from].dom_size ||
        l.tgt.size() != problem.cells[l.from].cod_size) {
      throw StructuralError("search link does not match its cells");
    }
  }
  Solver solver(problem, max_nodes);
  return solver.run(stats);
}

double naive_log10_candidates(const Problem& problem) {
  double total = 0;
  for (const Cell& c : problem.cells) {
    if (c.cod_size > 0) {
      total += static_cast<double>(c.dom_size) *
               std::log10(static_cast<double>(c.cod_size));
    }
  }
  return total;
}

}  // namespace costrength::search
