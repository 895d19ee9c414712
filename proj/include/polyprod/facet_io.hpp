#pragma once

#include <string>
#include <string_view>

#include "polyprod/errors.hpp"
#include "polyprod/simplicial_complex.hpp"

namespace polyprod {

/// Facet files, line-oriented:
///
///   # comment
///   m 4
///   facet 1 2
///   facet 2 3 4
///
/// The header must precede everything else. `empty` stands for {∅} and
/// `void` for Void; either must be the only body line. A header with no
/// body is {∅} as well. Blank lines are ignored.
class ParseError : public Error {
 public:
  enum class Kind { MissingHeader, IndexOutOfRange, NonIncreasing, DominatedFacet, Syntax };

  ParseError(Kind kind, int line, const std::string& message);

  Kind kind() const { return kind_; }
  /// 1-based line number.
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

const char* to_string(ParseError::Kind kind);

SimplicialComplex parse_facet_file(std::string_view text);

/// Inverse of parse_facet_file. The complex must live on [m].
std::string write_facet_file(const SimplicialComplex& k);

}  // namespace polyprod
