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


#include "costrength/io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "costrength/errors.hpp"

namespace costrength {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Functor functor_only() {
    Functor f = functor();
    expect_end();
    return f;
  }

  FinSet set_only() {
    FinSet s = set();
    expect_end();
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a functor name");
    return std::string(text_.substr(start, pos_ - start));
  }

  FinSet set() {
    skip_space();
    if (pos_ < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t n = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + static_cast<std::size_t>(text_[pos_] - '0');
        if (n > size_cap()) fail("set size exceeds the cap");
        ++pos_;
      }
      return FinSet(n);
    }
    expect('{');
    std::vector<std::string> labels;
    if (peek('}')) {
      ++pos_;
      return FinSet(std::move(labels));
    }
    while (true) {
      skip_space();
      const std::size_t start = pos_;
      int depth = 0;
      while (pos_ < text_.size()) {
        const char c = text_[pos_];
        if (depth == 0 && (c == ',' || c == '}')) break;
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') --depth;
        ++pos_;
      }
      std::string label(text_.substr(start, pos_ - start));
      while (!label.empty() &&
             std::isspace(static_cast<unsigned char>(label.back()))) {
        label.pop_back();
      }
      if (label.empty()) fail("empty element label");
      labels.push_back(std::move(label));
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect('}');
      break;
    }
    try {
      return FinSet(std::move(labels));
    } catch (const StructuralError& e) {
      fail(e.what());
    }
  }

  Functor functor() {
    const std::size_t at = (skip_space(), pos_);
    const std::string name = word();
    if (name == "Id") return Functor::id();
    if (name == "Maybe") return maybe();
    static const std::set<std::string> kWithArguments = {
        "Const", "Prod",   "Coprod", "Exp",    "Pow",
        "Comp",  "Writer", "Reader", "Costate"};
    if (!kWithArguments.contains(name)) {
      pos_ = at;
      fail("unknown functor '" + name + "'");
    }
    expect('(');
    Functor result = Functor::id();
    if (name == "Const") {
      result = Functor::constant(set());
    } else if (name == "Writer") {
      result = writer(set());
    } else if (name == "Reader") {
      result = reader(set());
    } else if (name == "Costate") {
      result = costate(set());
    } else if (name == "Pow") {
      result = Functor::pow(functor());
    } else if (name == "Exp") {
      FinSet s = set();
      expect(',');
      result = Functor::exp(std::move(s), functor());
    } else if (name == "Prod" || name == "Coprod" || name == "Comp") {
      Functor a = functor();
      expect(',');
      Functor b = functor();
      result = name == "Prod"     ? Functor::prod(a, b)
               : name == "Coprod" ? Functor::coprod(a, b)
                                  : Functor::comp(a, b);
    } else {
      pos_ = at;
      fail("unknown functor '" + name + "'");
    }
    expect(')');
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void bad(const std::string& what) {
  throw StructuralError(what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    bad(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<FinSet> sets_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of sets");
  std::vector<FinSet> out;
  for (const auto& e : j) out.push_back(set_from_json(e));
  return out;
}

Json sets_to_json(const Universe& u) {
  Json j = Json::array();
  for (const auto& s : u.objects()) j.push_back(set_to_json(s));
  return j;
}

template <Direction D>
ActionFamily<D> family_from_json(const Json& j, const char* direction) {
  if (j.contains("direction") && j.at("direction") != direction) {
    bad(std::string("expected a ") + direction + " file");
  }
  const Functor f = parse_functor(field(j, "functor").get<std::string>());
  const ActionModel a =
      action_by_name(j.value("action", std::string("cart")));
  const Universe objects(sets_from_json(field(j, "objects")));
  const Universe grades(sets_from_json(field(j, "grades")));
  const Json& cells = field(j, "cells");
  if (!cells.is_array() || cells.size() != objects.size() * grades.size()) {
    bad("expected one cell per (grade, object) pair");
  }
  std::vector<FinFun> out;
  std::size_t k = 0;
  for (const auto& m : grades.objects()) {
    for (const auto& x : objects.objects()) {
      const FinSet dom = D == Direction::kCostrength ? f(a.act(m, x))
                                                     : a.act(m, f(x));
      const FinSet cod = D == Direction::kCostrength ? a.act(m, f(x))
                                                     : f(a.act(m, x));
      out.emplace_back(dom, cod, table_from_json(cells[k++], dom, cod));
    }
  }
  return ActionFamily<D>(f, a, objects, grades, std::move(out));
}

template <Direction D>
Json family_json(const ActionFamily<D>& c, const char* direction) {
  Json j;
  j["functor"] = c.functor().to_string();
  j["action"] = c.action().name;
  j["direction"] = direction;
  j["objects"] = sets_to_json(c.objects());
  j["grades"] = sets_to_json(c.grades());
  Json cells = Json::array();
  for (const auto& cell : c.cells()) cells.push_back(cell.table());
  j["cells"] = std::move(cells);
  return j;
}

}  // namespace

Functor parse_functor(std::string_view text) {
  return ExprParser(text).functor_only();
}

FinSet parse_set(std::string_view text) { return ExprParser(text).set_only(); }

Universe parse_universe(std::string_view text) {
  std::vector<std::size_t> sizes;
  std::size_t column = 1;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    std::size_t n = 0;
    try {
      n = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw ParseError("expected a set size", 1, column);
    }
    if (used != item.size()) throw ParseError("expected a set size", 1, column);
    sizes.push_back(n);
    column += item.size() + 1;
  }
  if (sizes.empty()) throw ParseError("empty universe", 1, 1);
  return Universe::of_sizes(sizes);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = e.byte == 0 ? 0 : e.byte - 1;
    for (std::size_t i = 0; i < end && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

FinSet set_from_json(const Json& j) {
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return FinSet(j.get<std::size_t>());
  }
  if (!j.is_array()) bad("a set is an array of labels or a size");
  std::vector<std::string> labels;
  for (const auto& e : j) {
    if (!e.is_string()) bad("set labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  return FinSet(std::move(labels));
}

Json set_to_json(const FinSet& s) {
  if (s == FinSet(s.size())) return s.size();
  return s.labels();
}

Table table_from_json(const Json& j, const FinSet& dom, const FinSet& cod) {
  if (!j.is_array() || j.size() != dom.size()) {
    bad("expected a table of " + std::to_string(dom.size()) + " entries");
  }
  Table t;
  for (const auto& e : j) {
    if (e.is_number_integer() && e.get<std::int64_t>() >= 0) {
      t.push_back(e.get<std::size_t>());
    } else if (e.is_string()) {
      const auto i = cod.index_of(e.get<std::string>());
      if (!i) bad("\"" + e.get<std::string>() + "\" is not in " + cod.to_string());
      t.push_back(*i);
    } else {
      bad("table entries are indices or labels");
    }
  }
  return t;
}

FinFun function_from_json(const Json& j) {
  const FinSet dom = set_from_json(field(j, "dom"));
  const FinSet cod = set_from_json(field(j, "cod"));
  return FinFun(dom, cod, table_from_json(field(j, "table"), dom, cod));
}

Json function_to_json(const FinFun& f) {
  Json j;
  j["dom"] = set_to_json(f.dom());
  j["cod"] = set_to_json(f.cod());
  j["table"] = f.table();
  return j;
}

StreamAutomaton automaton_from_json(const Json& j) {
  const FinSet states = set_from_json(field(j, "states"));
  const FinSet alphabet = set_from_json(field(j, "alphabet"));
  return StreamAutomaton(
      states, alphabet,
      FinFun(states, alphabet, table_from_json(field(j, "out"), states, alphabet)),
      FinFun(states, states, table_from_json(field(j, "next"), states, states)));
}

Json automaton_to_json(const StreamAutomaton& a) {
  Json j;
  j["states"] = set_to_json(a.states);
  j["alphabet"] = set_to_json(a.alphabet);
  j["out"] = a.out.table();
  j["next"] = a.next.table();
  return j;
}

OpticRep optic_from_json(const Json& j) {
  const ActionModel a = action_by_name(field(j, "action").get<std::string>());
  const FinSet m = set_from_json(field(j, "residual"));
  const FinSet xp = set_from_json(field(j, "outer_in"));
  const FinSet x = set_from_json(field(j, "focus_in"));
  const FinSet y = set_from_json(field(j, "focus_out"));
  const FinSet yp = set_from_json(field(j, "outer_out"));
  const FinSet mx = a.act(m, x);
  const FinSet my = a.act(m, y);
  return OpticRep(a, m, x, y, FinFun(xp, mx, table_from_json(field(j, "fwd"), xp, mx)),
                  FinFun(my, yp, table_from_json(field(j, "bwd"), my, yp)));
}

Json optic_to_json(const OpticRep& o) {
  Json j;
  j["action"] = o.action.name;
  j["residual"] = set_to_json(o.residual);
  j["outer_in"] = set_to_json(o.outer_in());
  j["focus_in"] = set_to_json(o.focus_in);
  j["focus_out"] = set_to_json(o.focus_out);
  j["outer_out"] = set_to_json(o.outer_out());
  j["fwd"] = o.fwd.table();
  j["bwd"] = o.bwd.table();
  return j;
}

UpToSystem upto_from_json(const Json& j, const Universe& u) {
  const FinSet x = set_from_json(field(j, "carrier"));
  const FinSet m = set_from_json(field(j, "alphabet"));
  const Functor f = parse_functor(field(j, "functor").get<std::string>());
  const std::size_t which = j.value("copoint", std::size_t{0});
  const auto copoints = enumerate_nat(f, Functor::id(), u);
  if (which >= copoints.size()) {
    bad(f.to_string() + " has " + std::to_string(copoints.size()) +
        " copoints over " + u.name() + "; index " + std::to_string(which) +
        " is out of range");
  }
  const FinSet target = product(m, f(x));
  return UpToSystem{
      x, m, f, extend_by_naturality(copoints[which]),
      FinFun(x, target, table_from_json(field(j, "phi"), x, target))};
}

Costrength costrength_from_json(const Json& j) {
  return family_from_json<Direction::kCostrength>(j, "costrength");
}

Strength strength_from_json(const Json& j) {
  return family_from_json<Direction::kStrength>(j, "strength");
}

Json family_to_json(const Costrength& c) {
  return family_json(c, "costrength");
}

Json family_to_json(const Strength& s) { return family_json(s, "strength"); }

Json copoint_to_json(const NatFamily& n) {
  Json j;
  j["source"] = n.source().to_string();
  j["target"] = n.target().to_string();
  j["objects"] = sets_to_json(n.universe());
  Json comps = Json::array();
  for (std::size_t i = 0; i < n.universe().size(); ++i) {
    comps.push_back(n.component(i).table());
  }
  j["components"] = std::move(comps);
  return j;
}

}  // namespace costrength
