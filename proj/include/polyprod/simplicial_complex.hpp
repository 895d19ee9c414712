#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "polyprod/simplex.hpp"

namespace polyprod {

/// An immutable simplicial complex on an explicit index set.
///
/// The index set ("ground") is kept separately from the facets so ghost
/// vertices are representable, and Alexander duality is always taken
/// relative to it. Two complexes with no facets exist:
///  - Void: contains no face at all, not even the empty simplex;
///  - the empty complex {∅}: its single facet is the empty simplex.
///
/// Faces are enumerated by dimension ascending, lexicographically within a
/// dimension. Every boundary matrix in the library is indexed in this order.
class SimplicialComplex {
 public:
  /// The void complex on `ground`.
  static SimplicialComplex void_complex(Simplex ground);
  /// {∅} on `ground`: every index is a ghost vertex.
  static SimplicialComplex empty_complex(Simplex ground);
  /// The full simplex on `ground`.
  static SimplicialComplex full_simplex(Simplex ground);

  /// Facets must form an antichain inside `ground`; throws
  /// std::invalid_argument otherwise. An empty facet list yields {∅}.
  static SimplicialComplex from_facets(Simplex ground, std::vector<Simplex> facets);

  /// The complex generated by arbitrary faces; dominated generators are
  /// dropped. An empty list yields Void.
  static SimplicialComplex generated_by(Simplex ground, std::span<const Simplex> generators);

  Simplex ground() const { return ground_; }
  /// Size of the index set.
  int m() const { return ground_.size(); }

  bool is_void() const { return facets_.empty(); }
  /// True for {∅}.
  bool is_empty_complex() const { return facets_.size() == 1 && facets_.front().empty(); }
  /// True when there is exactly one facet (this includes {∅}).
  bool is_simplex() const { return facets_.size() == 1; }
  bool is_pure() const;

  /// Facets in canonical order.
  const std::vector<Simplex>& facets() const { return facets_; }
  /// -2 for Void, -1 for {∅}.
  int dim() const { return is_void() ? -2 : facets_.back().dim(); }

  bool contains(Simplex face) const { return index_.contains(face.bits()); }
  bool has_facet(Simplex face) const;

  /// All faces in canonical order (empty simplex first, unless Void).
  const std::vector<Simplex>& faces() const { return faces_; }
  /// Faces of dimension d (d >= -1), in canonical order.
  std::span<const Simplex> faces_of_dim(int d) const;
  std::size_t face_count(int d) const { return faces_of_dim(d).size(); }
  /// Position of `face` inside faces_of_dim(face.dim()).
  std::optional<std::size_t> index_in_dim(Simplex face) const;

  /// Union of all faces.
  Simplex vertex_set() const { return vertices_; }
  Simplex ghost_vertices() const { return ground_.minus(vertices_); }
  bool has_ghost_vertex() const { return !ghost_vertices().empty(); }

  /// Alternating face count sum_{d>=-1} (-1)^d f_d (reduced Euler characteristic).
  long long reduced_euler_characteristic() const;

  /// "m=3 {1,2} {1,3} {2,3}", "m=2 empty", "m=2 void".
  std::string to_string() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.ground_ == b.ground_ && a.facets_ == b.facets_;
  }

 private:
  SimplicialComplex(Simplex ground, std::vector<Simplex> facets);

  Simplex ground_;
  Simplex vertices_;
  std::vector<Simplex> facets_;
  std::vector<Simplex> faces_;
  // Start offsets into faces_ per dimension d, at slot d + 1.
  std::vector<std::size_t> dim_offsets_;
  // face bits -> index within its dimension.
  std::unordered_map<std::uint32_t, std::uint32_t> index_;
};

/// Which index set deletion reports for its result.
enum class DeletionGround {
  /// Keep the input index set.
  Keep,
  /// Drop the members of σ that no surviving face uses. For a vertex v this
  /// is [m]∖v.
  Shrink,
};

/// lk_K(σ) = {τ ∈ K | σ∪τ ∈ K, σ∩τ = ∅} on the index set ground∖σ.
/// Throws Error(NotAFace) when σ ∉ K.
SimplicialComplex link(const SimplicialComplex& k, Simplex sigma);

/// st_K(σ) = {τ ∈ K | σ∪τ ∈ K} on the same index set as K.
/// Throws Error(NotAFace) when σ ∉ K.
SimplicialComplex star(const SimplicialComplex& k, Simplex sigma);

/// dl_K(σ) = {τ ∈ K | σ ⊄ τ}.
SimplicialComplex deletion(const SimplicialComplex& k, Simplex sigma,
                           DeletionGround ground = DeletionGround::Shrink);

/// K_I = {σ ∈ K | σ ⊆ I} on the index set I. Throws std::invalid_argument
/// if I is not inside K's index set.
SimplicialComplex induced(const SimplicialComplex& k, Simplex subset);

/// K^{<i>}: generated by the facets of dimension >= i; Void if none.
SimplicialComplex skeleton_ge(const SimplicialComplex& k, int i);

/// K^∨ = {σ ⊆ [m] | [m]∖σ ∉ K}, on the same index set.
SimplicialComplex alexander_dual(const SimplicialComplex& k);

/// Unreduced suspension with apexes max(ground)+1 and max(ground)+2.
SimplicialComplex suspension(const SimplicialComplex& k);
/// Suspension with explicit apex labels (both outside the index set).
SimplicialComplex suspension(const SimplicialComplex& k, int apex_a, int apex_b);

/// Inclusion-minimal subsets of the index set that are not faces.
std::vector<Simplex> minimal_nonfaces(const SimplicialComplex& k);

/// True when every face of `sub` is a face of `k`.
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& k);

}  // namespace polyprod
