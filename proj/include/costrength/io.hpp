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


// Text and JSON formats: functor expressions, sets, functions, automata,
// optics, up-to systems and tabulated (co)strengths.

#pragma once

#include <string>
#include <string_view>

#include "costrength/costrength.hpp"
#include "costrength/finset.hpp"
#include "costrength/functor.hpp"
#include "costrength/optics.hpp"
#include "costrength/streams.hpp"
#include "json.hpp"

namespace costrength {

using Json = nlohmann::ordered_json;

/// Functor expressions:
///   F ::= Id | Maybe | Const(S) | Prod(F,F) | Coprod(F,F) | Exp(S,F)
///       | Pow(F) | Comp(F,F) | Writer(S) | Reader(S) | Costate(S)
///   S ::= n | {label, ...}
/// where n is the canonical n-element set. Throws ParseError.
Functor parse_functor(std::string_view text);
/// The S production alone.
FinSet parse_set(std::string_view text);
/// Comma-separated sizes, e.g. "0,1,2,3".
Universe parse_universe(std::string_view text);

/// JSON text with syntax errors reported as ParseError(line, column).
Json parse_json(std::string_view text);
/// Reads a whole file; throws StructuralError if it cannot be opened.
std::string read_file(const std::string& path);

/// A set is an array of labels, or a number for the canonical set.
FinSet set_from_json(const Json& j);
Json set_to_json(const FinSet& s);
/// Table entries are codomain indices or labels.
Table table_from_json(const Json& j, const FinSet& dom, const FinSet& cod);
/// {"dom": set, "cod": set, "table": [...]}
FinFun function_from_json(const Json& j);
Json function_to_json(const FinFun& f);

/// {"states": set, "alphabet": set, "out": [...], "next": [...]}
StreamAutomaton automaton_from_json(const Json& j);
Json automaton_to_json(const StreamAutomaton& a);

/// {"action": "cart", "residual": set, "outer_in": set, "focus_in": set,
///  "focus_out": set, "outer_out": set, "fwd": [...], "bwd": [...]}
OpticRep optic_from_json(const Json& j);
Json optic_to_json(const OpticRep& o);

/// {"carrier": set, "alphabet": set, "functor": "...", "copoint": i,
///  "phi": [...]} where copoint i indexes the natural copoints of the
/// functor over `u` in canonical order and phi maps into M x F(X).
UpToSystem upto_from_json(const Json& j, const Universe& u);

/// {"functor": "...", "action": "cart", "direction": "costrength",
///  "objects": [sizes], "grades": [sizes], "cells": [[...], ...]}
/// with cells grade-major.
Costrength costrength_from_json(const Json& j);
Strength strength_from_json(const Json& j);
Json family_to_json(const Costrength& c);
Json family_to_json(const Strength& s);
Json copoint_to_json(const NatFamily& n);

}  // namespace costrength
