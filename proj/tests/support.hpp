#pragma once

// Shared fixtures and brute-force oracles for the unit tests. Nothing here
// calls into the library's algorithms beyond the plain value types.

#include <algorithm>
#include <initializer_list>
#include <random>
#include <set>
#include <vector>

#include "polyprod/simplicial_complex.hpp"

namespace polyprod::testing {

inline SimplicialComplex cx(int m, std::initializer_list<std::initializer_list<int>> facets) {
  std::vector<Simplex> fs;
  for (auto f : facets) fs.push_back(Simplex::from_vertices(f));
  return SimplicialComplex::from_facets(Simplex::range(m), fs);
}

inline Simplex sx(std::initializer_list<int> v) { return Simplex::from_vertices(v); }

inline SimplicialComplex boundary_triangle() { return cx(3, {{1, 2}, {1, 3}, {2, 3}}); }
inline SimplicialComplex full_triangle() { return cx(3, {{1, 2, 3}}); }
inline SimplicialComplex square() { return cx(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }
inline SimplicialComplex points(int n) {
  std::vector<Simplex> fs;
  for (int v = 1; v <= n; ++v) fs.push_back(Simplex::from_vertices({v}));
  return SimplicialComplex::from_facets(Simplex::range(n), fs);
}
inline SimplicialComplex two_edges() { return cx(4, {{1, 2}, {3, 4}}); }
inline SimplicialComplex k4_graph() {
  return cx(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}
inline SimplicialComplex rp2_6() {
  return cx(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                {2, 3, 5}, {3, 5, 6}, {3, 4, 6}, {2, 4, 6}, {2, 4, 5}});
}

/// Every face of K by direct enumeration of subsets of the ground set.
inline std::set<Simplex> face_set(const SimplicialComplex& k) {
  std::set<Simplex> out;
  for (Simplex s : subsets_of(k.ground())) {
    for (Simplex f : k.facets()) {
      if (s.is_subset_of(f)) {
        out.insert(s);
        break;
      }
    }
  }
  return out;
}

/// Random complex on [m] with no ghost vertex: random generators plus
/// every singleton.
inline SimplicialComplex random_complex(std::mt19937& rng, int m, int generators, int max_size) {
  std::uniform_int_distribution<int> vert(1, m);
  std::uniform_int_distribution<int> size(1, max_size);
  std::vector<Simplex> gens;
  for (int v = 1; v <= m; ++v) gens.push_back(Simplex::from_vertices({v}));
  for (int g = 0; g < generators; ++g) {
    Simplex s;
    const int target = std::min(size(rng), m);
    while (s.size() < target) s = s.with(vert(rng));
    gens.push_back(s);
  }
  return SimplicialComplex::generated_by(Simplex::range(m), gens);
}

}  // namespace polyprod::testing
