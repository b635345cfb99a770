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


// Exact enumeration of natural families by backtracking search with
// constraint propagation. A problem is a diagram of cells (one unknown
// function per cell) and links (commuting-square constraints between cells).

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "costrength/finset.hpp"

namespace costrength::search {

struct Cell {
  std::size_t dom_size = 0;
  std::size_t cod_size = 0;
};

/// Square  c_to . src == tgt . c_from  where src : dom(from) -> dom(to) and
/// tgt : cod(from) -> cod(to).
struct Link {
  std::size_t from = 0;
  std::size_t to = 0;
  Table src;
  Table tgt;
};

struct Problem {
  std::vector<Cell> cells;
  std::vector<Link> links;
  /// Cells whose table is prescribed. Either empty or one entry per cell.
  std::vector<std::optional<Table>> fixed;
};

using Solution = std::vector<Table>;

struct Stats {
  std::uint64_t nodes = 0;
  std::size_t variables = 0;
};

/// All solutions, sorted lexicographically by cell tables. Throws
/// ResourceError once more than `max_nodes` branches have been tried.
std::vector<Solution> solve(const Problem& problem, std::uint64_t max_nodes,
                            Stats* stats = nullptr);

/// log10 of the naive candidate count, prod |cod|^|dom| over cells.
double naive_log10_candidates(const Problem& problem);

}  // namespace costrength::search
