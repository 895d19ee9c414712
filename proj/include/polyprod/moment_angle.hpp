#pragma once

#include <string>
#include <vector>

#include "polyprod/coefficients.hpp"
#include "polyprod/homology.hpp"
#include "polyprod/simplicial_complex.hpp"
#include "polyprod/tor.hpp"

namespace polyprod {

/// (D¹,S⁰) or (D²,S¹).
enum class MomentAnglePair { Real, Complex };

const char* to_string(MomentAnglePair pair);

/// Largest index set the cellular models accept.
inline constexpr int kMaxModelIndices = 8;

/// Cellular chains of a polyhedral product, augmented on the basepoint
/// degree so that homology is reduced.
///
/// Real: a cell is (free set σ ∈ K, ones ω ⊆ [m]∖σ); the other coordinates
/// sit at 0. Dimension |σ|, boundary Σ_t (-1)^t ((σ∖σ_t, ω∪σ_t) - (σ∖σ_t, ω)).
/// Complex: a cell is (σ, ω) with σ the D² coordinates and ω the S¹
/// 1-cells. Dimension 2|σ| + |ω|, boundary Σ_{v∈σ} (-1)^{#{w∈ω : w<v}}
/// (σ∖v, ω∪v), the transpose of the Koszul differential.
struct CellComplexModel {
  MomentAnglePair pair = MomentAnglePair::Real;
  /// cells[n] lists the cells of dimension n in chain-basis order.
  std::vector<std::vector<KoszulCell>> cells;
  ChainComplex chains{-1, {}, {}};
};

/// Throws Error(Unsupported) when m > kMaxModelIndices.
CellComplexModel build_ma_model(const SimplicialComplex& k, MomentAnglePair pair);

HomologyGroups real_ma_homology(const SimplicialComplex& k, const Coefficients& c);
HomologyGroups complex_ma_homology(const SimplicialComplex& k, const Coefficients& c);

/// Real: degree n gets ⊕_{I≠∅} H̃_{n-1}(K_I); Complex: ⊕_{I≠∅} H̃_{n-|I|-1}(K_I).
HomologyGroups predicted_ma_homology(const SimplicialComplex& k, const Coefficients& c, MomentAnglePair pair);

struct DegreeComparison {
  int degree = 0;
  HomologyGroup predicted;
  HomologyGroup computed;
  bool match = true;

  friend bool operator==(const DegreeComparison&, const DegreeComparison&) = default;
};

struct ModelComparison {
  MomentAnglePair pair = MomentAnglePair::Real;
  HomologyGroups predicted;
  HomologyGroups computed;
  /// Every degree where either side is nonzero.
  std::vector<DegreeComparison> degrees;
  bool match = true;

  friend bool operator==(const ModelComparison&, const ModelComparison&) = default;
};

ModelComparison compare(MomentAnglePair pair, const HomologyGroups& predicted, const HomologyGroups& computed);

struct DecompositionReport {
  Coefficients coefficients = Coefficients::integers();
  std::vector<ModelComparison> models;
  /// Extra failed checks (wedge-of-spheres conditions).
  std::vector<std::string> failures;
  bool match = true;

  friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

/// Both models against their predictions, exact per-degree equality.
DecompositionReport verify_decomposition(const SimplicialComplex& k, const Coefficients& c);

/// Homological shadow of the wedge-of-spheres statement over Z: complex
/// model homology torsion-free, zero through degree 2, equal to the
/// prediction, and rank H̃_n = Σ_I #{spheres of |ΣK_I| of dimension n-|I|}
/// with the sphere lists read from mod-2 spanning facets of each K_I^∨.
/// Throws Error(NotApplicable) unless K^∨ is sequentially CM over Z.
DecompositionReport verify_wedge_of_spheres(const SimplicialComplex& k);

}  // namespace polyprod
