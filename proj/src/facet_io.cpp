#include "polyprod/facet_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace polyprod {

const char* to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::MissingHeader: return "MissingHeader";
    case ParseError::Kind::IndexOutOfRange: return "IndexOutOfRange";
    case ParseError::Kind::NonIncreasing: return "NonIncreasing";
    case ParseError::Kind::DominatedFacet: return "DominatedFacet";
    case ParseError::Kind::Syntax: return "Syntax";
  }
  return "?";
}

ParseError::ParseError(Kind kind, int line, const std::string& message)
    : Error(ErrorCode::Parse, std::string(polyprod::to_string(kind)) + " at line " + std::to_string(line) + ": " +
                                  message),
      kind_(kind),
      line_(line) {}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<int> to_int(std::string_view word) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) return std::nullopt;
  return value;
}

struct FacetLine {
  Simplex facet;
  int line;
};

}  // namespace

SimplicialComplex parse_facet_file(std::string_view text) {
  using Kind = ParseError::Kind;
  std::optional<int> m;
  std::vector<FacetLine> facets;
  std::optional<int> literal_line;
  bool is_void = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto words = split_words(line);
    if (words.empty() || words.front().front() == '#') continue;
    const std::string_view head = words.front();
    if (!m) {
      if (head != "m") throw ParseError(Kind::MissingHeader, line_no, "expected 'm <integer>'");
      if (words.size() != 2) throw ParseError(Kind::Syntax, line_no, "header takes one integer");
      const auto value = to_int(words[1]);
      if (!value || *value < 0 || *value > 32) throw ParseError(Kind::Syntax, line_no, "m must be in 0..32");
      m = *value;
      continue;
    }
    if (literal_line) throw ParseError(Kind::Syntax, line_no, "nothing may follow 'empty' or 'void'");
    if (head == "empty" || head == "void") {
      if (words.size() != 1 || !facets.empty())
        throw ParseError(Kind::Syntax, line_no, std::string(head) + " must be the only body line");
      literal_line = line_no;
      is_void = head == "void";
      continue;
    }
    if (head != "facet") throw ParseError(Kind::Syntax, line_no, "unknown directive '" + std::string(head) + "'");
    if (words.size() == 1) throw ParseError(Kind::Syntax, line_no, "facet needs at least one index");
    Simplex f;
    int previous = 0;
    for (std::size_t i = 1; i < words.size(); ++i) {
      const auto value = to_int(words[i]);
      if (!value) throw ParseError(Kind::Syntax, line_no, "not an integer: '" + std::string(words[i]) + "'");
      if (*value < 1 || *value > *m)
        throw ParseError(Kind::IndexOutOfRange, line_no,
                         "index " + std::to_string(*value) + " outside 1.." + std::to_string(*m));
      if (*value <= previous) throw ParseError(Kind::NonIncreasing, line_no, "indices must strictly increase");
      previous = *value;
      f = f.with(*value);
    }
    for (const auto& other : facets) {
      if (f.is_subset_of(other.facet))
        throw ParseError(Kind::DominatedFacet, line_no,
                         f.to_string() + " lies in " + other.facet.to_string() + " (line " +
                             std::to_string(other.line) + ")");
      if (other.facet.is_subset_of(f))
        throw ParseError(Kind::DominatedFacet, other.line,
                         other.facet.to_string() + " lies in " + f.to_string() + " (line " + std::to_string(line_no) +
                             ")");
    }
    facets.push_back({f, line_no});
  }
  if (!m) throw ParseError(Kind::MissingHeader, line_no, "no 'm <integer>' header");
  const Simplex ground = Simplex::range(*m);
  if (is_void) return SimplicialComplex::void_complex(ground);
  std::vector<Simplex> list;
  for (const auto& f : facets) list.push_back(f.facet);
  return SimplicialComplex::from_facets(ground, std::move(list));
}

std::string write_facet_file(const SimplicialComplex& k) {
  if (k.ground() != Simplex::range(k.m())) throw std::invalid_argument("facet files need the index set 1..m");
  std::ostringstream out;
  out << "m " << k.m() << "\n";
  if (k.is_void()) {
    out << "void\n";
  } else if (k.is_empty_complex()) {
    out << "empty\n";
  } else {
    for (Simplex f : k.facets()) {
      out << "facet";
      for (int v : f.vertices()) out << ' ' << v;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace polyprod
