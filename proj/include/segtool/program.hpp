#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segtool/error.hpp"
#include "segtool/groebner.hpp"

namespace segtool {

/// Error located in source text (1-based line and column; 0 when unknown).
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& what, int line, int column)
      : Error(code, what), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

struct IdealDef {
  std::string name;
  std::vector<Polynomial> generators;
  int line = 0;
};

struct PointDef {
  std::string name;
  std::vector<Rational> coords;
  int line = 0;
};

/// A parsed source file: one ring, then named ideals and points.
struct SourceProgram {
  RingPtr ring;
  std::vector<IdealDef> ideals;
  std::vector<PointDef> points;

  const IdealDef* find_ideal(std::string_view name) const;
  const PointDef* find_point(std::string_view name) const;

  /// The named ideal, checked homogeneous. Throws undefined_identifier or
  /// inhomogeneous.
  Ideal projective_ideal(std::string_view name) const;
  std::vector<Rational> point(std::string_view name) const;
};

bool operator==(const SourceProgram& a, const SourceProgram& b);

/// Grammar:
///   program := stmt*
///   stmt    := 'ring' ID 'vars' ID+ ';'
///            | 'ideal' ID '=' poly (',' poly)* ';'
///            | 'point' ID '=' '(' rat (':' rat)* ')' ';'
///   poly    := ['-'] term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := atom ('^' INT)?
///   atom    := INT ['/' INT] | ID | '(' poly ')' | '-' factor
///   rat     := ['-'] INT ['/' INT]
/// '#' starts a comment running to the end of the line.
SourceProgram parse_source(std::string_view text);

/// Canonical source text; parse_source(pretty_print(p)) == p.
std::string pretty_print(const SourceProgram& program);

}  // namespace segtool
