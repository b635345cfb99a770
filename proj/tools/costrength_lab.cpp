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


// costrength-lab: command-line front end to the law checkers.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "costrength/actions.hpp"
#include "costrength/costrength.hpp"
#include "costrength/errors.hpp"
#include "costrength/free_monad.hpp"
#include "costrength/io.hpp"
#include "costrength/optics.hpp"
#include "costrength/streams.hpp"
#include "costrength/suites.hpp"

namespace {

using namespace costrength;

constexpr int kOk = 0;
constexpr int kLawFailure = 1;
constexpr int kUsage = 2;

struct Options {
  bool json = false;
  bool timing = false;
  std::uint64_t budget = SearchBudget{}.max_nodes;
  std::size_t max_size = size_cap();
  std::string universe = "0,1,2,3";
  std::size_t jobs = 1;
  bool universe_given = false;
};

Options opts;

SearchBudget budget() { return SearchBudget{opts.budget}; }
Universe universe() { return parse_universe(opts.universe); }

int emit(const LawReport& r) {
  if (opts.json) {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    std::cout << r.to_text();
  }
  return r.failed() ? kLawFailure : kOk;
}

void emit(const Json& j, const std::string& text) {
  if (opts.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

Json load(const std::string& path) { return parse_json(read_file(path)); }

Costrength pick_costrength(const Functor& f, const ActionModel& a,
                           std::size_t index) {
  const Universe u = universe();
  const auto all = enumerate_costrengths(f, a, u, u, budget());
  if (index >= all.size()) {
    throw PreconditionError(f.to_string() + " has " +
                            std::to_string(all.size()) + " costrengths over " +
                            a.name + "; index " + std::to_string(index) +
                            " is out of range");
  }
  return all[index];
}

NatFamily pick_copoint(const Functor& f, std::size_t index) {
  const auto all = enumerate_nat(f, Functor::id(), universe(), budget());
  if (index >= all.size()) {
    throw PreconditionError(f.to_string() + " has " +
                            std::to_string(all.size()) +
                            " copoints; index " + std::to_string(index) +
                            " is out of range");
  }
  return extend_by_naturality(all[index]);
}

std::string tokens(const std::vector<std::size_t>& values, const FinSet& s) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += " ";
    out += s.label(values[i]);
  }
  return out;
}

Json behaviours(const StreamAutomaton& a, std::size_t prefix,
                std::string& text) {
  Json j = Json::array();
  for (std::size_t s = 0; s < a.states.size(); ++s) {
    const std::string p = tokens(behavior(a, s, prefix), a.alphabet);
    const std::string l = behavior_lasso(a, s).to_string(a.alphabet);
    text += a.states.label(s) + ": " + p + "\n  lasso: " + l + "\n";
    j.push_back({{"state", a.states.label(s)}, {"prefix", p}, {"lasso", l}});
  }
  return j;
}

// ---------------------------------------------------------------------------

int cmd_check(const std::string& file, const std::string& functor) {
  if (!file.empty()) {
    const Json j = load(file);
    if (j.value("direction", std::string("costrength")) == "strength") {
      return emit(check_strength(strength_from_json(j)));
    }
    return emit(check_costrength(costrength_from_json(j)));
  }
  if (functor.empty()) throw CLI::ValidationError("check needs a file or --functor");
  return emit(check_functor_laws(parse_functor(functor), universe()));
}

int cmd_enumerate(const std::string& functor, const std::string& action,
                  bool strengths, bool copoints) {
  const Functor f = parse_functor(functor);
  const Universe u = universe();
  Json j;
  j["functor"] = f.to_string();
  j["universe"] = u.name();
  std::string text;
  if (copoints) {
    const auto all = enumerate_nat(f, Functor::id(), u, budget());
    j["copoints"] = all.size();
    Json list = Json::array();
    for (const auto& c : all) list.push_back(copoint_to_json(c));
    j["families"] = std::move(list);
    text = f.to_string() + ": " + std::to_string(all.size()) +
           " copoints over " + u.name() + "\n";
  } else {
    const ActionModel a = action_by_name(action);
    EnumerationStats stats;
    Json list = Json::array();
    std::size_t n = 0;
    if (strengths) {
      const auto all = enumerate_strengths(f, a, u, u, budget(), &stats);
      for (const auto& s : all) list.push_back(family_to_json(s));
      n = all.size();
    } else {
      const auto all = enumerate_costrengths(f, a, u, u, budget(), &stats);
      for (const auto& c : all) list.push_back(family_to_json(c));
      n = all.size();
    }
    const std::string kind = strengths ? "strengths" : "costrengths";
    j["action"] = a.name;
    j[kind] = n;
    j["natural_candidates"] = stats.natural_candidates;
    j["search_nodes"] = stats.search_nodes;
    j["families"] = std::move(list);
    text = f.to_string() + " over " + a.name + ": " + std::to_string(n) + " " +
           kind + " (" + std::to_string(stats.natural_candidates) +
           " natural candidates) over " + u.name() + "\n";
  }
  emit(j, text);
  return kOk;
}

int cmd_phi(const std::string& functor, std::size_t index) {
  const Costrength c =
      pick_costrength(parse_functor(functor), cartesian_action(), index);
  const Copoint eps = phi(c);
  LawReport r = check_natural(eps);
  if (opts.json) {
    Json j = copoint_to_json(eps);
    j["report"] = r.to_json();
    std::cout << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < eps.universe().size(); ++i) {
      std::cout << "eps at " << eps.universe()[i].to_string() << ": "
                << eps.component(i).to_string() << "\n";
    }
    std::cout << r.to_text();
  }
  return r.failed() ? kLawFailure : kOk;
}

int cmd_psi(const std::string& functor, std::size_t index) {
  const Universe u = universe();
  const Costrength c = psi(pick_copoint(parse_functor(functor), index), u, u);
  const LawReport r = check_costrength(c);
  if (opts.json) {
    Json j = family_to_json(c);
    j["report"] = r.to_json();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << c.describe() << "\n" << r.to_text();
  }
  return r.failed() ? kLawFailure : kOk;
}

int cmd_mate(const std::string& set) {
  const FinSet s = parse_set(set);
  // The exponentials outgrow the size cap on {0,1,2,3}.
  const Universe u =
      opts.universe_given ? universe() : parse_universe("0,1,2");
  const AdjunctionModel adj = product_exponential_adjunction(s, u);
  const Strength st = canonical_strength(reader(s), u, u);
  const Costrength left = mate_left(adj, st);
  LawReport r = LawReport::pass("mates of the Reader(" + s.to_string() +
                                ") strength");
  r.add(check_costrength(left));
  LawReport w = LawReport::pass("mate is the Writer costrength");
  if (!left.same_cells(writer_costrength(s, u, u))) {
    w = LawReport::fail(w.law, {{"cells", "differ"}});
  }
  r.add(std::move(w));
  LawReport back = LawReport::pass("mating back gives the strength");
  if (!mate_right(adj, left).same_cells(st)) {
    back = LawReport::fail(back.law, {{"cells", "differ"}});
  }
  r.add(std::move(back));
  return emit(r);
}

int cmd_stream_behave(const std::string& file, std::size_t prefix) {
  const StreamAutomaton a = automaton_from_json(load(file));
  std::string text;
  const Json j = behaviours(a, prefix, text);
  emit(j, text);
  return kOk;
}

int cmd_stream_lift(const std::string& file, const std::string& functor,
                    std::size_t index, std::size_t prefix) {
  const StreamAutomaton a = automaton_from_json(load(file));
  const Functor f = parse_functor(functor);
  const Universe u = universe();
  const Costrength c = psi(pick_copoint(f, index), u, Universe({a.alphabet}));
  const StreamAutomaton lifted = lift(a, c);
  const LawReport r = extraction_semantics_report(a, c);
  std::string text = "lifted automaton on " +
                     std::to_string(lifted.states.size()) + " states\n";
  Json j;
  j["automaton"] = automaton_to_json(lifted);
  j["behaviours"] = behaviours(lifted, prefix, text);
  j["report"] = r.to_json();
  emit(j, text + r.to_text());
  return r.failed() ? kLawFailure : kOk;
}

int cmd_stream_upto(const std::string& file, std::size_t prefix) {
  const UpToSystem s = upto_from_json(load(file), universe());
  const StreamAutomaton sol = solve_up_to(s);
  std::vector<Lasso> b;
  for (std::size_t x = 0; x < s.carrier.size(); ++x) {
    b.push_back(behavior_lasso(sol, x));
  }
  LawReport r = LawReport::pass("up-to solution");
  r.add(bartels_report(s, b));
  try {
    r.add(up_to_uniqueness_report(s));
  } catch (const ResourceError& e) {
    r.add(LawReport::skipped("uniqueness of the up-to solution", e.what()));
  }
  std::string text;
  Json j;
  j["behaviours"] = behaviours(sol, prefix, text);
  j["report"] = r.to_json();
  emit(j, text + r.to_text());
  return r.failed() ? kLawFailure : kOk;
}

Json nf_json(const OpticRep& o, std::string& text) {
  Json j;
  if (o.action.name == "cart") {
    const LensNF nf = lens_nf(o);
    j["get"] = function_to_json(nf.get);
    j["put"] = function_to_json(nf.put);
    text += "get: " + nf.get.to_string() + "\nput: " + nf.put.to_string() + "\n";
  } else if (o.action.name == "cocart") {
    const PrismNF nf = prism_nf(o);
    j["match"] = function_to_json(nf.match);
    j["build"] = function_to_json(nf.build);
    text += "match: " + nf.match.to_string() + "\nbuild: " +
            nf.build.to_string() + "\n";
  } else {
    text += "no normal form for " + o.action.name +
            "; equivalence is decided only by slide search (sound, not "
            "complete)\n";
    j["normal_form"] = nullptr;
  }
  return j;
}

int cmd_optic_nf(const std::string& file) {
  const OpticRep o = optic_from_json(load(file));
  std::string text;
  emit(nf_json(o, text), text);
  return kOk;
}

int cmd_optic_compose(const std::string& outer, const std::string& inner) {
  const OpticRep o = compose_optics(optic_from_json(load(outer)),
                                    optic_from_json(load(inner)));
  std::string text = "residual " + o.residual.to_string() + "\nfwd: " +
                     o.fwd.to_string() + "\nbwd: " + o.bwd.to_string() + "\n";
  Json j;
  j["optic"] = optic_to_json(o);
  j["normal_form"] = nf_json(o, text);
  emit(j, text);
  return kOk;
}

int cmd_optic_transform(const std::string& file, const std::string& costrong,
                        std::size_t index, const std::string& strong) {
  const OpticRep o = optic_from_json(load(file));
  const Universe u = universe();
  const Functor f = parse_functor(costrong);
  const Functor g = parse_functor(strong);
  const Costrength cst = o.action.name == "cart"
                             ? psi(pick_copoint(f, index), u, u)
                             : pick_costrength(f, o.action, index);
  Strength st = canonical_strength(g, u, u);
  if (o.action.name != "cart") {
    const auto all = enumerate_strengths(g, o.action, u, u, budget());
    if (all.empty()) {
      throw PreconditionError(g.to_string() + " has no strength over " +
                              o.action.name);
    }
    st = all.front();
  }
  const OpticRep t = transform_optic(cst, st, o);
  std::string text = "residual " + t.residual.to_string() + "\nfwd: " +
                     t.fwd.to_string() + "\nbwd: " + t.bwd.to_string() + "\n";
  Json j;
  j["optic"] = optic_to_json(t);
  j["normal_form"] = nf_json(t, text);
  emit(j, text);
  return kOk;
}

int cmd_free_build(const std::string& functor, const std::string& set,
                   std::size_t depth) {
  const TermMonad t(parse_functor(functor), depth);
  const FinSet terms = t.build_terms(parse_set(set), depth);
  Json j;
  j["size"] = terms.size();
  j["terms"] = terms.labels();
  std::string text = std::to_string(terms.size()) + " terms\n";
  for (const auto& l : terms.labels()) text += "  " + l + "\n";
  emit(j, text);
  return kOk;
}

int cmd_free_cst(const std::string& functor, const std::string& grades,
                 const std::string& set, std::size_t depth, std::size_t index) {
  const Functor f = parse_functor(functor);
  const Universe u = universe();
  const Costrength c = psi(pick_copoint(f, index), u, u);
  const TermMonad t(f, depth);
  const FinSet m = parse_set(grades), x = parse_set(set);
  const FinFun raw = free_costrength_component(t, c, m, x, depth);
  // Same positions, printed as terms.
  const FinFun cst(t.build_terms(product(m, x), depth),
                   product(m, t.build_terms(x, depth)), raw.table());
  std::string text;
  for (std::size_t i = 0; i < cst.dom().size(); ++i) {
    text += cst.dom().label(i) + " -> " + cst.cod().label(cst(i)) + "\n";
  }
  emit(function_to_json(cst), text);
  return kOk;
}

int cmd_free_laws(const std::string& functor, std::size_t depth,
                  std::size_t index) {
  const Functor f = parse_functor(functor);
  const Universe u = universe();
  return emit(free_monad_law_report(psi(pick_copoint(f, index), u, u), depth,
                                    u, u));
}

int cmd_graded(const std::string& which) {
  const Universe u = universe();
  if (which == "maybe") return emit(check_graded_laws(maybe_graded_monad(), u));
  if (which == "identity") {
    return emit(check_graded_laws(identity_graded_monad(), u));
  }
  throw CLI::ValidationError("unknown graded monad " + which);
}

SuiteConfig suite_config() {
  SuiteConfig cfg;
  cfg.universe = universe();
  cfg.budget = budget();
  return cfg;
}

int emit_suites(const std::vector<SuiteResult>& results) {
  bool failed = false;
  std::size_t passed = 0, skipped = 0;
  Json arr = Json::array();
  std::string text;
  for (const auto& r : results) {
    failed |= r.status == Status::kFail;
    passed += r.status == Status::kPass;
    skipped += r.status == Status::kSkipped;
    arr.push_back(r.to_json(opts.timing));
    text += r.to_text(opts.timing);
  }
  Json j;
  j["status"] = failed ? "fail" : "pass";
  j["suites"] = std::move(arr);
  text += std::to_string(results.size()) + " suites: " +
          std::to_string(passed) + " passed, " +
          std::to_string(results.size() - passed - skipped) + " failed, " +
          std::to_string(skipped) + " skipped\n";
  emit(j, text);
  return failed ? kLawFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Law checker for strong and costrong functors on finite sets"};
  app.name("costrength-lab");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opts.json, "Machine-readable output");
  app.add_flag("--timing", opts.timing, "Include timings in suite reports");
  app.add_option("--budget", opts.budget, "Search node budget")
      ->envname("COSTRENGTH_BUDGET");
  app.add_option("--max-size", opts.max_size, "Largest set built");
  auto* universe_opt =
      app.add_option("--universe", opts.universe,
                     "Comma-separated sizes of universe objects");
  app.add_option("--jobs", opts.jobs, "Suites run in parallel");

  std::string file, functor, action = "cart", set = "2", grades = "2";
  std::string outer, inner, strong, which, id, glob = "*";
  std::size_t index = 0, prefix = 8, depth = 3;
  bool strengths = false, copoints = false;
  std::optional<std::size_t> state;
  int code = kOk;

  auto* check = app.add_subcommand("check", "Check laws of a family or functor");
  check->add_option("file", file, "Costrength or strength JSON");
  check->add_option("--functor", functor, "Check functor laws instead");
  check->callback([&] { code = cmd_check(file, functor); });

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate families");
  enumerate->add_option("functor", functor)->required();
  enumerate->add_option("--action", action, "cart, cocart or op-exp");
  enumerate->add_flag("--strengths", strengths, "Strengths, not costrengths");
  enumerate->add_flag("--copoints", copoints, "Natural copoints F => Id");
  enumerate->callback(
      [&] { code = cmd_enumerate(functor, action, strengths, copoints); });

  auto* phi_cmd = app.add_subcommand("phi", "Copoint of a cartesian costrength");
  phi_cmd->add_option("functor", functor)->required();
  phi_cmd->add_option("--index", index, "Which enumerated costrength");
  phi_cmd->callback([&] { code = cmd_phi(functor, index); });

  auto* psi_cmd = app.add_subcommand("psi", "Costrength of a copoint");
  psi_cmd->add_option("functor", functor)->required();
  psi_cmd->add_option("--index", index, "Which enumerated copoint");
  psi_cmd->callback([&] { code = cmd_psi(functor, index); });

  auto* mate = app.add_subcommand("mate", "Mate the Reader strength");
  mate->add_option("--set", set, "The exponent S");
  mate->callback([&] { code = cmd_mate(set); });

  auto* stream = app.add_subcommand("stream", "Stream automata");
  stream->require_subcommand(1);
  auto* behave = stream->add_subcommand("behave", "Behaviour of every state");
  behave->add_option("file", file)->required();
  behave->add_option("--prefix", prefix, "Prefix length");
  behave->callback([&] { code = cmd_stream_behave(file, prefix); });
  auto* lift_cmd = stream->add_subcommand("lift", "Lift along a costrength");
  lift_cmd->add_option("file", file)->required();
  lift_cmd->add_option("--functor", functor)->required();
  lift_cmd->add_option("--index", index, "Which enumerated copoint");
  lift_cmd->add_option("--prefix", prefix, "Prefix length");
  lift_cmd->callback(
      [&] { code = cmd_stream_lift(file, functor, index, prefix); });
  auto* upto = stream->add_subcommand("upto", "Solve an up-to system");
  upto->add_option("file", file)->required();
  upto->add_option("--prefix", prefix, "Prefix length");
  upto->callback([&] { code = cmd_stream_upto(file, prefix); });

  auto* optic = app.add_subcommand("optic", "Mixed optics");
  optic->require_subcommand(1);
  auto* nf = optic->add_subcommand("nf", "Normal form");
  nf->add_option("file", file)->required();
  nf->callback([&] { code = cmd_optic_nf(file); });
  auto* compose_cmd = optic->add_subcommand("compose", "outer after inner");
  compose_cmd->add_option("outer", outer)->required();
  compose_cmd->add_option("inner", inner)->required();
  compose_cmd->callback([&] { code = cmd_optic_compose(outer, inner); });
  auto* transform = optic->add_subcommand("transform", "Apply (F, G)");
  transform->add_option("file", file)->required();
  transform->add_option("--costrong", functor, "F")->required();
  transform->add_option("--strong", strong, "G")->required();
  transform->add_option("--index", index, "Which costrength of F");
  transform->callback(
      [&] { code = cmd_optic_transform(file, functor, index, strong); });

  auto* free_cmd = app.add_subcommand("free", "Truncated free monads");
  free_cmd->require_subcommand(1);
  auto* build = free_cmd->add_subcommand("build", "Terms up to a depth");
  build->add_option("functor", functor)->required();
  build->add_option("--set", set, "Variables X");
  build->add_option("--depth", depth, "Depth");
  build->callback([&] { code = cmd_free_build(functor, set, depth); });
  auto* cst_cmd = free_cmd->add_subcommand("cst", "Free costrength table");
  cst_cmd->add_option("functor", functor)->required();
  cst_cmd->add_option("--grades", grades, "Grade M");
  cst_cmd->add_option("--set", set, "Variables X");
  cst_cmd->add_option("--depth", depth, "Depth");
  cst_cmd->add_option("--index", index, "Which copoint of F");
  cst_cmd->callback(
      [&] { code = cmd_free_cst(functor, grades, set, depth, index); });
  auto* laws = free_cmd->add_subcommand("laws", "Monad and costrength laws");
  laws->add_option("functor", functor)->required();
  laws->add_option("--depth", depth, "Depth cap");
  laws->add_option("--index", index, "Which copoint of F");
  laws->callback([&] { code = cmd_free_laws(functor, depth, index); });

  auto* graded = app.add_subcommand("graded", "Graded monad laws");
  graded->add_option("which", which, "maybe or identity")->required();
  graded->callback([&] { code = cmd_graded(which); });

  auto* suite = app.add_subcommand("suite", "Named law suites");
  suite->require_subcommand(1);
  auto* list = suite->add_subcommand("list", "List suites");
  list->callback([&] {
    Json j = Json::array();
    std::string text;
    for (const auto& s : suite_registry()) {
      j.push_back({{"id", s.id}, {"statement", s.statement}});
      text += s.id + "  " + s.statement + "\n";
    }
    emit(j, text);
  });
  auto* run = suite->add_subcommand("run", "Run one suite");
  run->add_option("id", id)->required();
  run->callback([&] {
    code = emit_suites({run_suite(find_suite(id), suite_config())});
  });
  auto* all = suite->add_subcommand("all", "Run every suite");
  all->add_option("--filter", glob, "Shell glob on suite ids");
  all->callback([&] {
    code = emit_suites(run_suites(glob, suite_config(), opts.jobs));
  });

  app.parse_complete_callback([&] {
    set_size_cap(opts.max_size);
    opts.universe_given = universe_opt->count() > 0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    // A budget or size cap hit is a skip, not a failure.
    emit(Json{{"status", "skipped"}, {"reason", e.what()}},
         std::string("[skipped] ") + e.what() + "\n");
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
