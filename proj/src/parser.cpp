// parser.cpp
//
// Line oriented parser for the algebra input format. Every diagnostic
// carries a line and column so a bad file fails loudly and precisely.

#include <algorithm>
#include <cctype>
#include <sstream>

#include "strat/quiver.hpp"

namespace strat {

int Quiver::vertex_index(const std::string& v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? -1 : int(it - vertices.begin());
}

int Quiver::arrow_index(const std::string& a) const {
  for (int i = 0; i < int(arrows.size()); ++i)
    if (arrows[i].name == a) return i;
  return -1;
}

std::string path_name(const Quiver& q, const std::vector<int>& arrows_applied) {
  std::string out;
  for (int i = int(arrows_applied.size()) - 1; i >= 0; --i) {
    out += q.arrows[arrows_applied[i]].name;
    if (i > 0) out += "*";
  }
  return out;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Cursor {
  const std::string& s;
  int line;
  std::size_t pos = 0;

  int col() const { return int(pos) + 1; }
  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  void skip_ws() {
    while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col(), msg); }

  std::string ident() {
    skip_ws();
    if (done() || !ident_start(peek())) fail("expected a name");
    std::size_t start = pos;
    while (!done() && ident_char(peek())) ++pos;
    return s.substr(start, pos - start);
  }

  // signed integer or a/b rational
  Scalar number() {
    skip_ws();
    std::size_t start = pos;
    if (peek() == '-' || peek() == '+') ++pos;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (peek() == '/') {
      ++pos;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    }
    return rat(s.substr(start, pos - start));
  }

  bool eat(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    skip_ws();
    if (!done()) fail("unexpected trailing text");
  }
};

// a*b*c in text order -> arrow indices in application order (c first)
std::vector<int> parse_path(Cursor& c, const Quiver& q) {
  std::vector<int> text_order;
  while (true) {
    int col = c.col();
    std::string name = c.ident();
    int ai = q.arrow_index(name);
    if (ai < 0) throw ParseError(c.line, col, "unknown arrow '" + name + "'");
    text_order.push_back(ai);
    if (!c.eat('*')) break;
    c.skip_ws();
    if (c.done() || !ident_start(c.peek())) c.fail("expected an arrow after '*'");
  }
  std::vector<int> applied(text_order.rbegin(), text_order.rend());
  for (std::size_t i = 0; i + 1 < applied.size(); ++i)
    if (q.arrows[applied[i]].tgt != q.arrows[applied[i + 1]].src)
      throw ParseError(c.line, c.col(),
                       "path is not composable at '" + q.arrows[applied[i + 1]].name + "'");
  return applied;
}

PathExpr parse_relation(const std::string& body, int line, const Quiver& q) {
  Cursor c{body, line};
  PathExpr e;
  e.text = body;
  bool first = true;
  while (true) {
    c.skip_ws();
    Scalar sign = 1;
    if (c.peek() == '-') {
      ++c.pos;
      sign = -1;
    } else if (c.peek() == '+') {
      if (first) c.fail("relation may not start with '+'");
      ++c.pos;
    } else if (!first) {
      break;
    }
    c.skip_ws();
    Scalar coeff = sign;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = coeff * c.number();
      c.expect('*');
    }
    PathTerm t;
    t.coeff = coeff;
    t.arrows = parse_path(c, q);
    e.terms.push_back(std::move(t));
    first = false;
    c.skip_ws();
    if (c.done()) break;
  }
  c.expect_end();

  // all terms must be parallel paths of one common length, at least 2
  const auto& a0 = e.terms[0].arrows;
  e.src = q.arrows[a0.front()].src;
  e.tgt = q.arrows[a0.back()].tgt;
  e.len = int(a0.size());
  if (e.len < 2) throw ParseError(line, 1, "relation paths must have length at least 2");
  for (const auto& t : e.terms) {
    if (int(t.arrows.size()) != e.len)
      throw ParseError(line, 1, "relation mixes path lengths; only homogeneous relations are accepted");
    if (q.arrows[t.arrows.front()].src != e.src || q.arrows[t.arrows.back()].tgt != e.tgt)
      throw ParseError(line, 1, "relation mixes non-parallel paths");
  }
  return e;
}

std::vector<std::vector<Scalar>> parse_matrix(const std::string& body, int line) {
  std::vector<std::vector<Scalar>> rows;
  std::string row_text;
  std::stringstream ss(body);
  std::string piece;
  // rows split on ';', entries split on whitespace
  std::vector<std::string> row_strings;
  std::string cur;
  for (char ch : body) {
    if (ch == ';') {
      row_strings.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  row_strings.push_back(cur);
  for (const auto& rs : row_strings) {
    std::vector<Scalar> row;
    Cursor c{rs, line};
    while (true) {
      c.skip_ws();
      if (c.done()) break;
      row.push_back(c.number());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

AlgebraInput parse_algebra(const std::string& text) {
  AlgebraInput in;
  Quiver& q = in.quiver;

  enum class Section { none, quiver, relations, order, module };
  Section sec = Section::none;
  ModuleSpec* cur_mod = nullptr;
  bool saw_header = false;
  bool saw_quiver = false;

  std::istringstream lines(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(lines, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.pop_back();
    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    line = line.substr(b);

    if (line.front() == '[') {
      auto close = line.find(']');
      if (close == std::string::npos) throw ParseError(lineno, 1, "unterminated section header");
      std::string name = line.substr(1, close - 1);
      if (!saw_header)
        throw ParseError(lineno, 1, "file must declare 'composition = right-to-left' first");
      if (name == "quiver") {
        sec = Section::quiver;
        saw_quiver = true;
      } else if (name == "relations") {
        sec = Section::relations;
      } else if (name == "order") {
        sec = Section::order;
      } else if (name.rfind("module ", 0) == 0) {
        sec = Section::module;
        ModuleSpec m;
        m.name = name.substr(7);
        m.line = lineno;
        if (m.name.empty()) throw ParseError(lineno, 1, "module section needs a name");
        for (const auto& prev : in.modules)
          if (prev.name == m.name)
            throw ParseError(lineno, 1, "duplicate module '" + m.name + "'");
        in.modules.push_back(std::move(m));
        cur_mod = &in.modules.back();
      } else {
        throw ParseError(lineno, 1, "unknown section '" + name + "'");
      }
      if (sec != Section::module) cur_mod = nullptr;
      if ((sec == Section::relations || sec == Section::order || sec == Section::module) &&
          !saw_quiver)
        throw ParseError(lineno, 1, "section appears before [quiver]");
      continue;
    }

    if (!saw_header) {
      // the one line allowed before any section
      Cursor c{line, lineno};
      std::string key = c.ident();
      if (key != "composition")
        throw ParseError(lineno, 1, "file must declare 'composition = right-to-left' first");
      c.expect('=');
      c.skip_ws();
      std::string val = line.substr(c.pos);
      if (val != "right-to-left")
        throw ParseError(lineno, c.col(),
                         "unsupported composition convention '" + val + "'");
      saw_header = true;
      continue;
    }

    switch (sec) {
      case Section::none:
        throw ParseError(lineno, 1, "content outside any section");
      case Section::quiver: {
        Cursor c{line, lineno};
        std::string key = c.ident();
        if (key == "vertices") {
          if (!q.vertices.empty()) throw ParseError(lineno, 1, "vertices declared twice");
          c.expect('=');
          while (true) {
            c.skip_ws();
            if (c.done()) break;
            std::string v = c.ident();
            if (q.vertex_index(v) >= 0)
              throw ParseError(lineno, c.col(), "duplicate vertex '" + v + "'");
            q.vertices.push_back(v);
          }
          if (q.vertices.empty()) throw ParseError(lineno, 1, "empty vertex list");
        } else if (key == "arrow") {
          std::string name = c.ident();
          if (q.arrow_index(name) >= 0)
            throw ParseError(lineno, 1, "duplicate arrow '" + name + "'");
          std::string sv = c.ident();
          std::string tv = c.ident();
          c.expect_end();
          int s = q.vertex_index(sv), t = q.vertex_index(tv);
          if (s < 0) throw ParseError(lineno, 1, "unknown vertex '" + sv + "'");
          if (t < 0) throw ParseError(lineno, 1, "unknown vertex '" + tv + "'");
          q.arrows.push_back({name, s, t});
        } else {
          throw ParseError(lineno, 1, "expected 'vertices' or 'arrow'");
        }
        break;
      }
      case Section::relations:
        in.relations.push_back(parse_relation(line, lineno, q));
        break;
      case Section::order: {
        Cursor c{line, lineno};
        std::string key = c.ident();
        if (key == "kind") {
          c.expect('=');
          std::string val = c.ident();
          c.expect_end();
          if (val != "partial" && val != "preorder")
            throw ParseError(lineno, 1, "order kind must be 'partial' or 'preorder'");
          in.order_kind = val;
        } else if (key == "below") {
          std::string av = c.ident();
          std::string bv = c.ident();
          c.expect_end();
          int a = q.vertex_index(av), b = q.vertex_index(bv);
          if (a < 0) throw ParseError(lineno, 1, "unknown vertex '" + av + "'");
          if (b < 0) throw ParseError(lineno, 1, "unknown vertex '" + bv + "'");
          in.order_pairs.emplace_back(a, b);
        } else {
          throw ParseError(lineno, 1, "expected 'kind' or 'below'");
        }
        break;
      }
      case Section::module: {
        Cursor c{line, lineno};
        std::string key = c.ident();
        if (key == "dims") {
          if (!cur_mod->dims.empty()) throw ParseError(lineno, 1, "dims declared twice");
          c.expect('=');
          while (true) {
            c.skip_ws();
            if (c.done()) break;
            Scalar d = c.number();
            if (d.get_den() != 1 || d < 0)
              throw ParseError(lineno, c.col(), "dims must be nonnegative integers");
            cur_mod->dims.push_back(int(d.get_num().get_si()));
          }
          if (cur_mod->dims.size() != q.vertices.size())
            throw ParseError(lineno, 1, "dims must list one entry per vertex");
        } else if (key == "arrow") {
          std::string name = c.ident();
          if (q.arrow_index(name) < 0) throw ParseError(lineno, 1, "unknown arrow '" + name + "'");
          for (const auto& [n, m] : cur_mod->mats)
            if (n == name) throw ParseError(lineno, 1, "matrix for '" + name + "' given twice");
          c.expect('=');
          cur_mod->mats.emplace_back(name, parse_matrix(line.substr(c.pos), lineno));
        } else {
          throw ParseError(lineno, 1, "expected 'dims' or 'arrow'");
        }
        break;
      }
    }
  }

  if (!saw_header) throw ParseError(1, 1, "empty input; expected 'composition = right-to-left'");
  if (!saw_quiver) throw ParseError(lineno, 1, "missing [quiver] section");
  if (q.vertices.empty()) throw ParseError(lineno, 1, "no vertices declared");
  for (const auto& m : in.modules)
    if (m.dims.empty()) throw ParseError(m.line, 1, "module '" + m.name + "' has no dims line");
  return in;
}

}  // namespace strat
