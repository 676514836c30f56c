// quiver.hpp
//
// The textual input format and its parsed form. A file describes a quiver,
// a list of relations, an order on the vertices, and optionally some
// explicit modules given by dimension vectors and arrow matrices.
//
// Composition is right to left everywhere: the path written a*b means
// "apply b, then a", so it runs along b's source into a's target. Files
// must declare `composition = right-to-left` up front; anything else is
// rejected rather than silently reinterpreted. Internally paths store
// their arrows in application order, which is the reverse of text order.

#ifndef STRAT_QUIVER_HPP
#define STRAT_QUIVER_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strat/scalar.hpp"

namespace strat {

struct Quiver {
  struct Arrow {
    std::string name;
    int src = -1;
    int tgt = -1;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& v) const;
  int arrow_index(const std::string& a) const;
};

// One summand of a relation: coeff * (arrows[k-1] * ... * arrows[0] in text
// order). arrows[0] acts first.
struct PathTerm {
  Scalar coeff;
  std::vector<int> arrows;
};

// A linear combination of parallel paths of equal length.
struct PathExpr {
  std::vector<PathTerm> terms;
  int src = -1;
  int tgt = -1;
  int len = 0;
  std::string text;  // as written, for messages
};

struct ModuleSpec {
  std::string name;
  std::vector<int> dims;  // one per vertex
  // arrow name and its matrix (tgt dim rows by src dim columns); arrows
  // left out act by zero
  std::vector<std::pair<std::string, std::vector<std::vector<Scalar>>>> mats;
  int line = 0;
};

struct AlgebraInput {
  Quiver quiver;
  std::vector<PathExpr> relations;
  std::vector<std::pair<int, int>> order_pairs;  // (a, b) for "below a b"
  std::string order_kind = "partial";            // or "preorder"
  std::vector<ModuleSpec> modules;
};

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                           ": " + msg),
        line(line),
        col(col) {}
};

AlgebraInput parse_algebra(const std::string& text);

// Human readable path name in text order, e.g. "alpha*beta".
std::string path_name(const Quiver& q, const std::vector<int>& arrows_applied);

}  // namespace strat

#endif
