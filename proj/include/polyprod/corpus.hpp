#pragma once

#include <string>
#include <variant>
#include <vector>

#include "polyprod/simplicial_complex.hpp"

namespace polyprod {

/// Every complex on [n] with no ghost vertex and at least one vertex, i.e.
/// antichains of nonempty subsets covering [n]. Ordered by facet list
/// (canonical simplex order, then lexicographic). Throws
/// Error(Unsupported) unless 1 <= n <= 4.
std::vector<SimplicialComplex> enumerate_complexes(int n);

/// Registry: simplex(d), boundary-simplex(d), cycle(n), points(n),
/// skeleton(d,m), rp2-6, disjoint-edges(k). Throws Error(Parse) for an
/// unknown name or wrong parameter count, std::invalid_argument for
/// out-of-range parameters.
SimplicialComplex named_complex(const std::string& name, const std::vector<int>& params);

/// Names accepted by named_complex, with their parameter lists.
std::vector<std::string> named_complex_help();

struct FileSource {
  std::string path;
};
struct NamedSource {
  std::string name;
  std::vector<int> params;
};
struct EnumeratedSource {
  int n = 0;
  /// 0-based position in enumerate_complexes(n).
  std::size_t index = 0;
};

using ComplexSource = std::variant<FileSource, NamedSource, EnumeratedSource>;

/// "cycle:4", "skeleton:1,4", "rp2-6".
NamedSource parse_named_source(const std::string& spec);
/// "3:5" for the sixth complex on [3].
EnumeratedSource parse_enumerated_source(const std::string& spec);

/// Human-readable label: the file path, "cycle:4", "enum:3:5".
std::string source_label(const ComplexSource& src);

SimplicialComplex resolve(const ComplexSource& src);

}  // namespace polyprod
