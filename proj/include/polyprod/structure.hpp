#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polyprod/coefficients.hpp"
#include "polyprod/simplicial_complex.hpp"

namespace polyprod {

/// A permutation of the facets of a complex.
using ShellingOrder = std::vector<Simplex>;

/// Vertex labels listed from smallest to largest in the order.
struct VertexOrder {
  std::vector<int> labels;
  friend bool operator==(const VertexOrder&, const VertexOrder&) = default;
};

/// One elementary collapse: remove the free face and its unique coface.
struct CollapseStep {
  Simplex free_face;
  Simplex coface;
  friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};
using CollapseSequence = std::vector<CollapseStep>;

/// Vertex-decomposition witness. A leaf (vertex == 0) marks a simplex;
/// otherwise `vertex` is a shedding vertex and children are
/// {deletion, link} in that order.
struct SheddingTree {
  int vertex = 0;
  std::vector<SheddingTree> children;
  friend bool operator==(const SheddingTree&, const SheddingTree&) = default;
};

/// Extractibility (homological shadow) witness for the complex induced on
/// `ground`. condition 1: `vertex` has a simplex deletion. condition 2:
/// one child per vertex of `ground`, ascending.
struct ExtractionTree {
  Simplex ground;
  int condition = 1;
  int vertex = 0;
  std::vector<ExtractionTree> children;
  friend bool operator==(const ExtractionTree&, const ExtractionTree&) = default;
};

using Witness = std::variant<std::monostate, ShellingOrder, VertexOrder, CollapseSequence, SheddingTree,
                             ExtractionTree>;

/// Outcome of a decision procedure. Unknown means the search budget ran out
/// (or the procedure is incomplete, as for collapsibility); it is never a
/// proof of the negative.
enum class Answer { Yes, No, Unknown };

const char* to_string(Answer a);

struct StructureVerdict {
  std::string property;
  Answer answer = Answer::Unknown;
  Witness witness;
  /// Human-readable reason for No / Unknown.
  std::string detail;
  /// Search nodes visited.
  std::uint64_t nodes = 0;

  bool yes() const { return answer == Answer::Yes; }

  friend bool operator==(const StructureVerdict&, const StructureVerdict&) = default;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// True iff each F_k (k > 1) meets the earlier facets in a pure complex of
/// dimension dim F_k - 1. Throws Error(InvalidOrder) unless `order` is a
/// permutation of the facets.
bool verify_shelling(const SimplicialComplex& k, const ShellingOrder& order);

/// Backtracking over facet orders of non-increasing dimension, memoizing
/// facet sets that cannot be continued.
StructureVerdict find_shelling(const SimplicialComplex& k, std::uint64_t budget = kDefaultBudget);

/// For every face σ (∅ included) and i >= 0, H̃_j(lk(σ)^{<i>}; c) = 0 for all
/// j < i. Void skeleta pass vacuously; Void itself passes.
bool is_sequentially_cm(const SimplicialComplex& k, const Coefficients& c);

/// Björner–Wachs vertex decomposability (non-pure).
StructureVerdict is_vertex_decomposable(const SimplicialComplex& k);
bool verify_shedding_tree(const SimplicialComplex& k, const SheddingTree& tree);

/// With an order: shifted with respect to it. Without: tries every order
/// of the index set when m <= 8, else Unknown.
StructureVerdict is_shifted(const SimplicialComplex& k, const std::optional<VertexOrder>& order = std::nullopt);
bool is_shifted_under(const SimplicialComplex& k, const VertexOrder& order);

/// Searches for elementary collapses down to a single vertex. Only Yes is
/// conclusive.
StructureVerdict greedy_collapse(const SimplicialComplex& k, std::uint64_t budget = kDefaultBudget);
/// Replays the sequence; true when every step is an elementary collapse and
/// a single vertex remains.
bool verify_collapse(const SimplicialComplex& k, const CollapseSequence& seq);

/// Homological shadow of extractibility over a field: condition (1) a
/// vertex deletion is a simplex; condition (2) every vertex deletion is
/// certified and the maps H̃_*(Σ dl_K(v)) -> H̃_*(ΣK) are jointly onto.
/// Throws Error(GhostVertex) if K has a ghost vertex.
StructureVerdict extractibility_certificate(const SimplicialComplex& k, const Coefficients& c);
/// Rechecks every node of an extraction tree rooted at the index set of K.
bool verify_extraction_tree(const SimplicialComplex& k, const ExtractionTree& tree, const Coefficients& c);

}  // namespace polyprod
