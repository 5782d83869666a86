#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ddrt/matrix_interpretation.hpp"
#include "ddrt/tpdb.hpp"

namespace testing {

inline ddrt::Term T(const std::string& text) { return ddrt::parse_term(text, {"x", "y", "z"}); }

inline ddrt::Trs R(const std::string& rules, const std::string& vars = "x y z") {
  return ddrt::parse_trs("(VAR " + vars + ")\n(RULES\n" + rules + "\n)\n").trs;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline ddrt::Trs fixture(const std::string& name) {
  return ddrt::parse_trs(read_file(std::string(DDRT_FIXTURES) + "/" + name + ".trs"), name).trs;
}

inline ddrt::Position P(const std::string& dotted) {
  ddrt::Position p;
  if (dotted == "e") return p;
  std::istringstream in(dotted);
  std::string part;
  while (std::getline(in, part, '.')) p.path.push_back(std::stoi(part));
  return p;
}

/// A two-dimensional interpretation that orients both critical pair steps
/// of the nat/inc system strictly.  It leaves tl(x:y) -> y unoriented.
inline ddrt::MatrixInterpretation stream_interpretation() {
  using ddrt::Matrix;
  ddrt::MatrixInterpretation m;
  m.dim = 2;
  m.symbols["inc"] = {{Matrix(2, {1, 0, 1, 0})}, {0, 0}};
  m.symbols["hd"] = {{Matrix::identity(2)}, {0, 0}};
  m.symbols["0"] = {{}, {0, 0}};
  m.symbols["nat"] = {{}, {0, 1}};
  m.symbols["tl"] = {{Matrix(2, {1, 1, 1, 0})}, {0, 0}};
  m.symbols["s"] = {{Matrix(2, {1, 1, 0, 0})}, {0, 0}};
  m.symbols["d"] = {{Matrix(2, {1, 1, 1, 1})}, {0, 0}};
  m.symbols[":"] = {{Matrix(2, {1, 1, 1, 1}), Matrix::identity(2)}, {0, 0}};
  return m;
}

}  // namespace testing
