/* Copyright 2026 The dmc-workbench Authors. All Rights Reserved.

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

#include "dmc/instances.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace dmc {

const IdAssignment* InstanceBundle::id_structure() const {
  if (fida) return &fida->base();
  if (ida) return &*ida;
  return nullptr;
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '#') break;
    if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r' && s[i] != '#')
      ++i;
    out.push_back({std::string(s.substr(start, i - start)), start + 1});
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opts) : opts_(opts) {
    std::size_t n = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(pos, end - pos);
      ++n;
      const std::size_t first = raw.find_first_not_of(" \t");
      if (first != std::string_view::npos && raw.substr(first).rfind("# note:", 0) == 0) {
        std::string note(raw.substr(first + 7));
        const std::size_t b = note.find_first_not_of(' ');
        const std::size_t e = note.find_last_not_of(" \r");
        notes_.push_back(b == std::string::npos ? "" : note.substr(b, e - b + 1));
      }
      auto toks = tokenize(raw);
      if (!toks.empty()) lines_.push_back({n, std::move(toks)});
      if (end == text.size()) break;
      pos = end + 1;
    }
  }

  InstanceBundle run();

 private:
  [[noreturn]] void fail(const Line& l, std::size_t col, const std::string& what) const {
    throw ParseError(what, l.number, col);
  }
  [[noreturn]] void fail(const Line& l, const Token& t, const std::string& what) const {
    fail(l, t.column, what);
  }
  void expect_count(const Line& l, std::size_t n) const {
    if (l.tokens.size() != n)
      fail(l, l.tokens.back().column,
           "'" + l.tokens[0].text + "' expects " + std::to_string(n - 1) + " fields");
  }
  void expect_word(const Line& l, std::size_t i, const char* w) const {
    if (l.tokens[i].text != w)
      fail(l, l.tokens[i], std::string("expected '") + w + "'");
  }
  ObjRef object(const Line& l, const Token& t) const {
    auto o = built_ ? built_->find_object(t.text) : builder_->find_object(t.text);
    if (!o) fail(l, t, "unknown object '" + t.text + "'");
    return *o;
  }
  MorRef morphism(const Line& l, const Token& t) const {
    auto m = built_ ? built_->find_morphism(t.text) : builder_->find_morphism(t.text);
    if (!m) fail(l, t, "unknown morphism '" + t.text + "'");
    return *m;
  }
  // key=value token
  const Token& keyed(const Line& l, std::size_t i, const char* key, Token& out) const {
    const Token& t = l.tokens[i];
    const std::string prefix = std::string(key) + "=";
    if (t.text.rfind(prefix, 0) != 0) fail(l, t, "expected '" + prefix + "...'");
    out = {t.text.substr(prefix.size()), t.column + prefix.size()};
    return t;
  }

  ParseOptions opts_;
  std::vector<Line> lines_;
  std::vector<std::string> notes_;
  std::optional<CatBuilder> builder_;
  const FinCat* built_ = nullptr;
};

InstanceBundle Parser::run() {
  std::string name;
  const Line* name_line = nullptr;
  for (const Line& l : lines_) {
    if (l.tokens[0].text != "category") continue;
    expect_count(l, 2);
    if (name_line) fail(l, l.tokens[0], "duplicate 'category' line");
    name = l.tokens[1].text;
    name_line = &l;
  }
  if (!name_line) throw ParseError("missing 'category' line", 1, 1);
  builder_.emplace(name, opts_.limits);

  static const char* kKnown[] = {"category", "object", "mor", "id", "comp",
                                 "display", "idstruct", "idaction", "pi"};
  std::map<std::uint32_t, const Line*> object_line;
  for (const Line& l : lines_) {
    const std::string& kw = l.tokens[0].text;
    if (std::find(std::begin(kKnown), std::end(kKnown), kw) == std::end(kKnown))
      fail(l, l.tokens[0], "unknown declaration '" + kw + "'");
    if (kw != "object") continue;
    expect_count(l, 2);
    try {
      object_line[builder_->add_object(l.tokens[1].text).index] = &l;
    } catch (const Error& e) {
      fail(l, l.tokens[1], e.what());
    }
  }
  for (const Line& l : lines_) {
    if (l.tokens[0].text != "mor") continue;
    expect_count(l, 6);
    expect_word(l, 2, ":");
    expect_word(l, 4, "->");
    const ObjRef a = object(l, l.tokens[3]);
    const ObjRef b = object(l, l.tokens[5]);
    try {
      builder_->add_morphism(l.tokens[1].text, a, b);
    } catch (const Error& e) {
      fail(l, l.tokens[1], e.what());
    }
  }
  std::vector<bool> has_id(builder_->num_objects(), false);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> comps;
  for (const Line& l : lines_) {
    const std::string& kw = l.tokens[0].text;
    if (kw == "id") {
      expect_count(l, 4);
      expect_word(l, 2, "=");
      const ObjRef x = object(l, l.tokens[1]);
      const MorRef m = morphism(l, l.tokens[3]);
      if (has_id[x.index]) fail(l, l.tokens[1], "duplicate identity for '" + l.tokens[1].text + "'");
      if (builder_->src(m) != x || builder_->dst(m) != x)
        fail(l, l.tokens[3], "identity must be an endomorphism of '" + l.tokens[1].text + "'");
      builder_->set_identity(x, m);
      has_id[x.index] = true;
    } else if (kw == "comp") {
      expect_count(l, 6);
      expect_word(l, 2, ".");
      expect_word(l, 4, "=");
      const MorRef g = morphism(l, l.tokens[1]);
      const MorRef f = morphism(l, l.tokens[3]);
      const MorRef h = morphism(l, l.tokens[5]);
      if (builder_->dst(f) != builder_->src(g))
        fail(l, l.tokens[1], "comp entry " + l.tokens[1].text + " . " + l.tokens[3].text +
                                 " is not composable");
      if (!comps.emplace(std::make_pair(g.index, f.index), h.index).second)
        fail(l, l.tokens[1], "duplicate comp entry " + l.tokens[1].text + " . " +
                                 l.tokens[3].text);
      builder_->set_comp(g, f, h);
    }
  }
  for (const auto& [obj, line] : object_line)
    if (!has_id[obj])
      fail(*line, line->tokens[1], "object '" + line->tokens[1].text + "' has no identity");

  InstanceBundle b;
  b.cat = std::move(*builder_).build();
  built_ = &b.cat;
  b.notes = notes_;
  if (opts_.check_laws) {
    const ValidationReport rep = validate_category(b.cat);
    if (!rep.ok())
      throw ModelError(rep.violations.front().law + ": " + rep.violations.front().detail);
  }

  const FinCat& cat = b.cat;
  b.d = MorClass(cat.num_morphisms());
  IdAssignment ida(cat.num_morphisms());
  bool any_id = false;
  std::vector<std::tuple<MorRef, MorRef, MorRef, MorRef>> actions;
  std::vector<PiExpectation> pis;
  for (const Line& l : lines_) {
    const std::string& kw = l.tokens[0].text;
    if (kw == "display") {
      if (l.tokens.size() < 2) fail(l, l.tokens[0], "'display' expects morphisms");
      for (std::size_t i = 1; i < l.tokens.size(); ++i) b.d.insert(morphism(l, l.tokens[i]));
    } else if (kw == "idstruct") {
      expect_count(l, 6);
      expect_word(l, 2, ":");
      const MorRef f = morphism(l, l.tokens[1]);
      Token obj, r, eps;
      keyed(l, 3, "obj", obj);
      keyed(l, 4, "r", r);
      keyed(l, 5, "eps", eps);
      const ObjRef o = object(l, obj);
      const MorRef rm = morphism(l, r);
      const MorRef em = morphism(l, eps);
      if (ida.find(f)) fail(l, l.tokens[1], "duplicate idstruct for '" + l.tokens[1].text + "'");
      if (cat.dst(rm) != o || cat.src(em) != o)
        fail(l, obj, "r and eps must meet at obj");
      try {
        ida.set(make_id_entry(cat, f, rm, em));
      } catch (const Error& e) {
        fail(l, l.tokens[1], e.what());
      }
      any_id = true;
    } else if (kw == "idaction") {
      // idaction <Y> : <m> : <d> -> <d2> => <k>
      expect_count(l, 10);
      expect_word(l, 2, ":");
      expect_word(l, 4, ":");
      expect_word(l, 6, "->");
      expect_word(l, 8, "=>");
      const ObjRef y = object(l, l.tokens[1]);
      const MorRef m = morphism(l, l.tokens[3]);
      const MorRef d1 = morphism(l, l.tokens[5]);
      const MorRef d2 = morphism(l, l.tokens[7]);
      const MorRef k = morphism(l, l.tokens[9]);
      if (cat.dst(d1) != y || cat.dst(d2) != y)
        fail(l, l.tokens[5], "slice objects must lie over '" + l.tokens[1].text + "'");
      if (cat.src(m) != cat.src(d1) || cat.dst(m) != cat.src(d2) ||
          cat.compose(d2, m) != d1)
        fail(l, l.tokens[3], "'" + l.tokens[3].text + "' is not a morphism of the slice");
      actions.emplace_back(d1, d2, m, k);
    } else if (kw == "pi") {
      expect_count(l, 5);
      expect_word(l, 3, "=");
      pis.push_back({morphism(l, l.tokens[1]), morphism(l, l.tokens[2]),
                     morphism(l, l.tokens[4])});
    }
  }
  if (any_id) b.ida = ida;
  if (!actions.empty()) {
    if (!any_id) throw ParseError("idaction entries need idstruct entries", 1, 1);
    FunctorialIdAssignment f(ida);
    for (const auto& [d1, d2, m, k] : actions) f.set_action(d1, d2, m, k);
    b.fida = std::move(f);
  }
  if (!pis.empty()) b.pi_expected = std::move(pis);
  return b;
}

void sorted_section(std::ostringstream& os, std::vector<std::string> lines) {
  std::sort(lines.begin(), lines.end());
  for (const std::string& l : lines) os << l << '\n';
}

}  // namespace

InstanceBundle parse_fincat(std::string_view text, const ParseOptions& opts) {
  return Parser(text, opts).run();
}

std::string emit_fincat(const InstanceBundle& b) {
  const FinCat& cat = b.cat;
  auto mn = [&](MorRef m) { return cat.morphism_name(m); };
  std::ostringstream os;
  os << "category " << cat.name() << '\n';
  for (const std::string& n : b.notes) os << "# note: " << n << '\n';
  std::vector<std::string> lines;
  for (ObjRef x : cat.objects()) lines.push_back("object " + cat.object_name(x));
  sorted_section(os, std::move(lines));
  lines = {};
  for (MorRef m : cat.morphisms())
    lines.push_back("mor " + mn(m) + " : " + cat.object_name(cat.src(m)) + " -> " +
                    cat.object_name(cat.dst(m)));
  sorted_section(os, std::move(lines));
  lines = {};
  for (ObjRef x : cat.objects())
    lines.push_back("id " + cat.object_name(x) + " = " + mn(cat.identity(x)));
  sorted_section(os, std::move(lines));
  lines = {};
  for (MorRef g : cat.morphisms())
    for (MorRef f : cat.morphisms())
      if (auto h = cat.try_compose(g, f))
        lines.push_back("comp " + mn(g) + " . " + mn(f) + " = " + mn(*h));
  sorted_section(os, std::move(lines));
  lines = {};
  for (MorRef m : b.d.members()) lines.push_back("display " + mn(m));
  sorted_section(os, std::move(lines));
  lines = {};
  if (const IdAssignment* ida = b.id_structure())
    for (MorRef f : ida->covered()) {
      const IdEntry& e = ida->at(f);
      lines.push_back("idstruct " + mn(f) + " : obj=" + cat.object_name(e.idobj) +
                      " r=" + mn(e.r) + " eps=" + mn(e.eps));
    }
  sorted_section(os, std::move(lines));
  lines = {};
  if (b.fida)
    for (const auto& [key, k] : b.fida->actions()) {
      const auto [d1, d2, m] = key;
      lines.push_back("idaction " + cat.object_name(cat.dst(MorRef{d1})) + " : " +
                      mn(MorRef{m}) + " : " + mn(MorRef{d1}) + " -> " + mn(MorRef{d2}) +
                      " => " + mn(k));
    }
  sorted_section(os, std::move(lines));
  lines = {};
  if (b.pi_expected)
    for (const PiExpectation& p : *b.pi_expected)
      lines.push_back("pi " + mn(p.f) + " " + mn(p.g) + " = " + mn(p.pi));
  sorted_section(os, std::move(lines));
  return os.str();
}

bool structurally_equal(const InstanceBundle& a, const InstanceBundle& b) {
  return emit_fincat(a) == emit_fincat(b);
}

InstanceBundle load_bundle(const std::string& path, const ParseOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fincat(ss.str(), opts);
}

void save_bundle(const std::string& path, const InstanceBundle& b) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << emit_fincat(b);
}

}  // namespace dmc
