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


// Stream automata C -> M x C, their behaviours as exact eventually periodic
// streams, lifting along a costrength, and coinduction up to a copointed
// functor.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "costrength/costrength.hpp"
#include "costrength/finset.hpp"
#include "costrength/functor.hpp"
#include "costrength/law_report.hpp"

namespace costrength {

struct StreamAutomaton {
  StreamAutomaton(FinSet states, FinSet alphabet, FinFun out, FinFun next);

  FinSet states;
  FinSet alphabet;
  FinFun out;   // states -> alphabet
  FinFun next;  // states -> states
};

/// The stream prefix . cycle^omega in canonical form: the cycle has minimal
/// period and the prefix is as short as possible, so equal streams have
/// equal lassos.
struct Lasso {
  std::vector<std::size_t> prefix;
  std::vector<std::size_t> cycle;

  /// Canonical lasso of prefix . cycle^omega; cycle must be nonempty.
  static Lasso make(std::vector<std::size_t> prefix,
                    std::vector<std::size_t> cycle);

  std::size_t head() const;
  Lasso tail() const;
  Lasso cons(std::size_t m) const;
  /// First n letters.
  std::vector<std::size_t> expand(std::size_t n) const;
  /// `a b | c d` with alphabet labels.
  std::string to_string(const FinSet& alphabet) const;

  friend bool operator==(const Lasso&, const Lasso&) = default;
  friend auto operator<=>(const Lasso&, const Lasso&) = default;
};

/// out(c), out(next c), ... truncated to n letters.
std::vector<std::size_t> behavior(const StreamAutomaton& a, std::size_t state,
                                  std::size_t n);
Lasso behavior_lasso(const StreamAutomaton& a, std::size_t state);

/// Whether (id x h) . <out, next> == <out', next'> . h; on failure returns
/// the first offending state.
std::optional<std::size_t> coalgebra_morphism_failure(
    const StreamAutomaton& a, const StreamAutomaton& b, const FinFun& h);

/// Quotient by behaviour, with the quotient map.
std::pair<StreamAutomaton, FinFun> minimize(const StreamAutomaton& a);

/// <out', next'> = cst_{M,C} . F(<out, next>) on F(C). Checks the
/// costrength first (PreconditionError) and that next' == F(next)
/// afterwards (StructuralError).
StreamAutomaton lift(const StreamAutomaton& a, const Costrength& c);
/// Same composite without any checks, for mutation experiments.
StreamAutomaton lift_unchecked(const StreamAutomaton& a, const Costrength& c);

/// Every F-wrapped state w behaves like eps_C(w) with eps = phi(c), compared
/// as lassos (hence at every prefix length).
LawReport extraction_semantics_report(const StreamAutomaton& a,
                                      const Costrength& c);

/// F(h) is a coalgebra morphism between the lifted automata. Throws
/// PreconditionError naming the failing state if h is not a morphism.
LawReport morphism_preservation_report(const StreamAutomaton& a,
                                       const StreamAutomaton& b,
                                       const FinFun& h, const Costrength& c);

/// phi : X -> M x F(X) together with a copoint eps of F.
struct UpToSystem {
  FinSet carrier;
  FinSet alphabet;
  Functor functor;
  Copoint copoint;
  FinFun phi;
};

/// out = pi_1 . phi, next = eps_X . pi_2 . phi. Throws PreconditionError if
/// the copoint is not natural or phi has the wrong type.
StreamAutomaton solve_up_to(const UpToSystem& s);

/// Whether the behaviour map b : X -> streams satisfies
/// b(x) = pi_1 phi(x) : [[F(b)(pi_2 phi(x))]], with the algebra [[-]]
/// computed by lifting the tail automaton on the image of b along
/// psi(eps). Also checks that this algebra agrees with extraction by eps.
LawReport bartels_report(const UpToSystem& s, const std::vector<Lasso>& b);

/// Every automaton on X whose behaviour map satisfies the diagram has the
/// same behaviour as the solution. Exhaustive over |M|^|X| |X|^|X|
/// automata; ResourceError past `max_automata`.
LawReport up_to_uniqueness_report(const UpToSystem& s,
                                  std::size_t max_automata = 100000);

}  // namespace costrength
