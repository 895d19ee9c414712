#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polyprod/coefficients.hpp"
#include "polyprod/matrix.hpp"
#include "polyprod/simplicial_complex.hpp"

namespace polyprod {

/// One homology group: Z^rank ⊕ Z/t_1 ⊕ ... with t_1 | t_2 | ...; over a
/// field only `rank` (the dimension) is used.
struct HomologyGroup {
  std::uint64_t rank = 0;
  std::vector<BigInt> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2+Z/2", "F^3" style rendering; `field` selects "k^n".
  std::string to_string(bool field = false) const;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Graded homology, degrees n >= -1. Only nonzero degrees are stored.
class HomologyGroups {
 public:
  HomologyGroups() = default;

  void set(int degree, HomologyGroup group);
  /// The zero group for absent degrees.
  const HomologyGroup& at(int degree) const;
  std::uint64_t rank(int degree) const { return at(degree).rank; }

  const std::map<int, HomologyGroup>& groups() const { return groups_; }
  bool is_zero() const { return groups_.empty(); }
  bool is_torsion_free() const;
  std::uint64_t total_rank() const;

  /// Direct sum with `other` shifted up by `shift` degrees.
  void add_shifted(const HomologyGroups& other, int shift);

  /// "H1=Z/2 H2=Z"; "0" when everything vanishes.
  std::string to_string(bool field = false) const;

  friend bool operator==(const HomologyGroups&, const HomologyGroups&) = default;

 private:
  std::map<int, HomologyGroup> groups_;
};

/// A finite free chain complex. boundary(n) is the matrix of C_n -> C_{n-1}
/// (rows index C_{n-1}); degrees outside [min_degree, max_degree] are zero.
class ChainComplex {
 public:
  ChainComplex(int min_degree, std::vector<std::size_t> dims, std::vector<IntMatrix> boundaries);

  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int n) const;
  /// dim C_{n-1} x dim C_n, possibly with zero rows or columns.
  IntMatrix boundary(int n) const;

  /// True when every composite boundary(n-1) * boundary(n) vanishes.
  bool squares_to_zero() const;

 private:
  int min_degree_;
  std::vector<std::size_t> dims_;
  std::vector<IntMatrix> boundaries_;
};

HomologyGroups homology(const ChainComplex& chains, const Coefficients& coefficients);

/// Matrix of ∂_k from k-faces (columns) to (k-1)-faces (rows), both in
/// canonical face order. The face obtained by dropping the t-th smallest
/// vertex carries sign (-1)^t; ∂_0 maps every vertex to ∅ with sign +1.
IntMatrix boundary_matrix(const SimplicialComplex& k, int degree);

/// Augmented simplicial chain complex (C_{-1} spanned by ∅); Void gives the
/// zero complex.
ChainComplex simplicial_chains(const SimplicialComplex& k);

HomologyGroups reduced_homology(const SimplicialComplex& k, const Coefficients& coefficients);

/// H̃_n(K; c) = 0 for every n >= -1.
bool is_acyclic(const SimplicialComplex& k, const Coefficients& coefficients);

/// Dimension of the image of ⊕_j H̃_n(subs_j; c) -> H̃_n(K; c) induced by
/// inclusion, c a field. Every entry of `subs` must be a subcomplex of K.
std::size_t inclusion_image_rank(const SimplicialComplex& k, const std::vector<SimplicialComplex>& subs,
                                 int n, const Coefficients& c);

/// A simplicial chain over F_p in a single dimension. Coefficients are
/// residues in [1, p); zero terms are never stored.
struct ChainVector {
  std::uint32_t prime = 2;
  int dim = -1;
  std::map<Simplex, std::int64_t> terms;

  std::int64_t coefficient(Simplex s) const;
  bool involves(Simplex s) const { return terms.contains(s); }
  bool is_zero() const { return terms.empty(); }
  /// Adds c * s (c any integer).
  void add(Simplex s, std::int64_t c);
  /// this += c * other.
  void add_multiple(const ChainVector& other, std::int64_t c);

  /// "{1,2}-{1,3}+{2,3}" with coefficients in (-p/2, p/2].
  std::string to_string() const;

  friend bool operator==(const ChainVector&, const ChainVector&) = default;
};

/// Simplicial boundary of a chain, in dimension dim - 1.
ChainVector boundary(const ChainVector& x);

/// True when x is supported on faces of K and ∂x = 0.
bool is_cycle_of(const ChainVector& x, const SimplicialComplex& k);

/// True when x is the boundary of some (dim+1)-chain of K over F_p.
bool is_boundary_of(const ChainVector& x, const SimplicialComplex& k);

/// Cycles over F_p whose classes form a basis of H̃_n(K; F_p). The result
/// is checked: every vector is a cycle of K and the set is independent
/// modulo boundaries (throws Error(Internal) otherwise).
std::vector<ChainVector> homology_basis(const SimplicialComplex& k, int n, std::uint32_t p);

}  // namespace polyprod
