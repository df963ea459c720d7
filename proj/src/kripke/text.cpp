/* Copyright 2026 The modalhol Authors. All Rights Reserved.

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

#include <fstream>
#include <sstream>

#include "../syntax/parser.hpp"
#include "modalhol/kripke.hpp"

namespace modalhol::kripke {

using syntax::Sort;

std::string format_value(const Sort& sort, Value v, int worlds, int carrier) {
  switch (sort.kind()) {
    case Sort::Kind::Indiv: return std::to_string(v);
    case Sort::Kind::Prop: {
      std::string s = "{";
      bool first = true;
      for (int w = 0; w < worlds; ++w) {
        if (!((v >> w) & 1)) continue;
        s += (first ? "" : " ") + std::to_string(w);
        first = false;
      }
      return s + "}";
    }
    case Sort::Kind::Arrow: {
      uint64_t n = sort_size(sort.domain(), worlds, carrier);
      uint64_t radix = sort_size(sort.codomain(), worlds, carrier);
      std::string s = "[";
      for (uint64_t x = 0; x < n; ++x) {
        if (x) s += ", ";
        s += format_value(sort.codomain(), v % radix, worlds, carrier);
        v /= radix;
      }
      return s + "]";
    }
  }
  return "?";
}

std::string to_text(const KripkeModel& m) {
  std::ostringstream out;
  out << "worlds " << m.worlds << "\n";
  out << "carrier " << m.carrier << "\n";
  out << "actual " << m.actual << "\n";
  for (const auto& [idx, rel] : m.access) {
    out << "access" << (idx.empty() ? "" : " " + idx) << ":";
    for (int w = 0; w < m.worlds; ++w)
      for (int v = 0; v < m.worlds; ++v)
        if ((rel[w] >> v) & 1) out << " " << w << "->" << v;
    out << "\n";
  }
  for (int w = 0; w < m.worlds; ++w) {
    if (m.domain[w] == m.full_domain()) continue;
    out << "domain " << w << ":";
    for (int x = 0; x < m.carrier; ++x)
      if ((m.domain[w] >> x) & 1) out << " " << x;
    out << "\n";
  }
  for (const auto& v : m.valuation)
    out << "val " << v.name << " : " << to_string(v.sort) << " = "
        << format_value(v.sort, v.value, m.worlds, m.carrier) << "\n";
  return out.str();
}

namespace {

[[noreturn]] void bad(int line, const std::string& msg) {
  throw Error(ErrorCode::BadModelFile, "line " + std::to_string(line) + ": " + msg);
}

int to_int(const std::string& s, int line) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 0) bad(line, "expected a number, found '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    bad(line, "expected a number, found '" + s + "'");
  }
}

class ValueReader {
 public:
  ValueReader(const std::string& text, int line, int worlds, int carrier)
      : s_(text), line_(line), worlds_(worlds), carrier_(carrier) {}

  Value read(const Sort& sort) {
    skip();
    switch (sort.kind()) {
      case Sort::Kind::Indiv: {
        int x = number();
        if (x >= carrier_) bad(line_, "individual " + std::to_string(x) + " outside the carrier");
        return static_cast<Value>(x);
      }
      case Sort::Kind::Prop: {
        expect('{');
        Value v = 0;
        for (skip(); peek() != '}'; skip()) {
          int w = number();
          if (w >= worlds_) bad(line_, "world " + std::to_string(w) + " out of range");
          v |= 1ull << w;
        }
        expect('}');
        return v;
      }
      case Sort::Kind::Arrow: {
        uint64_t n = sort_size(sort.domain(), worlds_, carrier_);
        uint64_t radix = sort_size(sort.codomain(), worlds_, carrier_);
        expect('[');
        Value v = 0, place = 1;
        for (uint64_t x = 0; x < n; ++x) {
          if (x) expect(',');
          v += read(sort.codomain()) * place;
          if (x + 1 < n) place *= radix;
        }
        expect(']');
        return v;
      }
    }
    return 0;
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) bad(line_, "trailing text in value");
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) bad(line_, std::string("expected '") + c + "' in value");
    ++pos_;
  }
  int number() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) bad(line_, "expected a number in value");
    return to_int(s_.substr(start, pos_ - start), line_);
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_;
  int worlds_;
  int carrier_;
};

}  // namespace

KripkeModel parse_model(const std::string& text) {
  KripkeModel m;
  bool have_worlds = false, have_carrier = false;
  struct Pending {
    std::string name, sort, value;
    int line;
  };
  std::vector<Pending> vals;
  std::vector<std::pair<std::string, int>> access_lines, domain_lines;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream words(line);
    std::string kw;
    if (!(words >> kw)) continue;
    std::string rest;
    std::getline(words, rest);
    if (kw == "worlds") {
      m.worlds = to_int(rest.substr(rest.find_first_not_of(' ')), no);
      have_worlds = true;
    } else if (kw == "carrier") {
      m.carrier = to_int(rest.substr(rest.find_first_not_of(' ')), no);
      have_carrier = true;
    } else if (kw == "actual") {
      m.actual = to_int(rest.substr(rest.find_first_not_of(' ')), no);
    } else if (kw.rfind("access", 0) == 0 || kw.rfind("domain", 0) == 0) {
      std::string full = line.substr(line.find(kw.substr(0, 6)) + 6);
      (kw.rfind("access", 0) == 0 ? access_lines : domain_lines).emplace_back(full, no);
    } else if (kw == "val") {
      size_t colon = rest.find(':'), eq = rest.find('=');
      if (colon == std::string::npos || eq == std::string::npos || eq < colon)
        bad(no, "expected 'val NAME : SORT = VALUE'");
      std::string name = rest.substr(0, colon);
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t") + 1);
      vals.push_back({name, rest.substr(colon + 1, eq - colon - 1), rest.substr(eq + 1), no});
    } else {
      bad(no, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_worlds || !have_carrier) bad(no, "missing 'worlds' or 'carrier' line");
  if (m.worlds < 1 || m.worlds > kMaxWorlds) bad(no, "world count out of range");
  if (m.carrier < 1 || m.carrier > kMaxCarrier) bad(no, "carrier size out of range");
  if (m.actual >= m.worlds) bad(no, "actual world out of range");
  m.domain.assign(m.worlds, m.full_domain());
  for (const auto& [body, line] : access_lines) {
    size_t colon = body.find(':');
    if (colon == std::string::npos) bad(line, "expected ':' after 'access'");
    std::string idx = body.substr(0, colon);
    idx.erase(0, idx.find_first_not_of(" \t"));
    idx.erase(idx.find_last_not_of(" \t") + 1);
    auto& rel = m.access[idx];
    rel.assign(m.worlds, 0);
    std::istringstream edges(body.substr(colon + 1));
    std::string e;
    while (edges >> e) {
      size_t arrow = e.find("->");
      if (arrow == std::string::npos) bad(line, "expected an edge 'w->v', found '" + e + "'");
      int a = to_int(e.substr(0, arrow), line), b = to_int(e.substr(arrow + 2), line);
      if (a >= m.worlds || b >= m.worlds) bad(line, "edge " + e + " out of range");
      rel[a] |= 1ull << b;
    }
  }
  for (const auto& [body, line] : domain_lines) {
    size_t colon = body.find(':');
    if (colon == std::string::npos) bad(line, "expected 'domain W: ...'");
    std::string ws = body.substr(0, colon);
    ws.erase(0, ws.find_first_not_of(" \t"));
    ws.erase(ws.find_last_not_of(" \t") + 1);
    int w = to_int(ws, line);
    if (w >= m.worlds) bad(line, "world out of range");
    m.domain[w] = 0;
    std::istringstream xs(body.substr(colon + 1));
    std::string x;
    while (xs >> x) {
      int v = to_int(x, line);
      if (v >= m.carrier) bad(line, "individual out of range");
      m.domain[w] |= 1ull << v;
    }
  }
  syntax::Declarations none;
  for (const auto& p : vals) {
    Sort sort = Sort::prop();
    try {
      syntax::detail::Parser parser(syntax::detail::tokenize(p.sort), none);
      sort = parser.sort();
      parser.expect_end();
    } catch (const Error& e) {
      bad(p.line, std::string("bad sort: ") + e.what());
    }
    if (m.find(p.name)) bad(p.line, "'" + p.name + "' given twice");
    ValueReader reader(p.value, p.line, m.worlds, m.carrier);
    Value v = reader.read(sort);
    reader.finish();
    m.valuation.push_back({p.name, sort, v});
  }
  return m;
}

KripkeModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingFile, path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string to_dot(const KripkeModel& m) {
  std::ostringstream out;
  out << "digraph model {\n";
  for (int w = 0; w < m.worlds; ++w) {
    std::string label = "w" + std::to_string(w);
    std::string atoms;
    for (const auto& v : m.valuation)
      if (v.sort == Sort::prop() && ((v.value >> w) & 1)) atoms += (atoms.empty() ? "" : " ") + v.name;
    if (!atoms.empty()) label += "\\n" + atoms;
    if (m.domain[w] != m.full_domain()) {
      label += "\\nD={";
      bool first = true;
      for (int x = 0; x < m.carrier; ++x) {
        if (!((m.domain[w] >> x) & 1)) continue;
        label += (first ? "" : ",") + std::to_string(x);
        first = false;
      }
      label += "}";
    }
    out << "  w" << w << " [label=\"" << label << "\""
        << (w == m.actual ? ", shape=doublecircle" : ", shape=circle") << "];\n";
  }
  for (const auto& [idx, rel] : m.access)
    for (int w = 0; w < m.worlds; ++w)
      for (int v = 0; v < m.worlds; ++v)
        if ((rel[w] >> v) & 1) {
          out << "  w" << w << " -> w" << v;
          if (!idx.empty()) out << " [label=\"" << idx << "\"]";
          out << ";\n";
        }
  out << "}\n";
  return out.str();
}

}  // namespace modalhol::kripke
