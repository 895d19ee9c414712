#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyprod/coefficients.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/homology.hpp"
#include "polyprod/simplicial_complex.hpp"
#include "polyprod/structure.hpp"

namespace polyprod {

/// A set Γ of facets of `host` such that the remainder (host with the open
/// facets of Γ removed) is acyclic and contains the boundary of every F ∈ Γ.
///
/// Mod-p certificates also carry one witness cycle per facet, parallel to
/// `gamma`: witness j involves gamma[j] and no other member of gamma.
/// For the host {∅}, gamma = {∅} and the remainder is Void.
struct SpanningFacetCertificate {
  SimplicialComplex host = SimplicialComplex::void_complex(Simplex{});
  std::vector<Simplex> gamma;
  Coefficients coefficients = Coefficients::integers();
  std::vector<ChainVector> witnesses;
  SimplicialComplex remainder = SimplicialComplex::void_complex(Simplex{});

  friend bool operator==(const SpanningFacetCertificate&, const SpanningFacetCertificate&) = default;
};

/// host minus the open facets in gamma (Void when nothing is left).
SimplicialComplex remove_open_facets(const SimplicialComplex& host, const std::vector<Simplex>& gamma);

/// Spanning facets read off a shelling: F_k (k > 1) whose whole boundary
/// lies in the earlier facets, plus F_1 when F_1 = ∅. Coefficients are Z.
/// Throws Error(NotAShelling) if the order is not a shelling.
SpanningFacetCertificate spanning_from_shelling(const SimplicialComplex& k, const ShellingOrder& order);

/// Raised by spanning_mod_p when H̃_i(K^{<i+1>}; F_p) ≠ 0: `cycle` is a
/// nontrivial class there, and it involves no i-dimensional facet of K.
class NotApplicableError : public Error {
 public:
  NotApplicableError(int degree, ChainVector cycle)
      : Error(ErrorCode::NotApplicable, "no spanning facets in degree " + std::to_string(degree) + ": " +
                                            cycle.to_string() + " involves no facet"),
        degree_(degree),
        cycle_(std::move(cycle)) {}

  int degree() const { return degree_; }
  const ChainVector& cycle() const { return cycle_; }

 private:
  int degree_;
  ChainVector cycle_;
};

/// Spanning facets over F_p from homology bases, degree by degree, with
/// Gauss–Jordan elimination on the chosen facets. Facet choice: the first
/// facet (canonical order) the reduced cycle involves. The result is
/// verified before returning (Error(Internal) if that fails).
SpanningFacetCertificate spanning_mod_p(const SimplicialComplex& k, std::uint32_t p);

/// Terms of x whose simplex contains v, and the boundary of that part as a
/// cycle of lk_K(v). Throws Error(NotACycle) unless x is a cycle of K.
std::pair<ChainVector, ChainVector> chain_vertex_part(const SimplicialComplex& k, const ChainVector& x, int v);

/// Rechecks a certificate from scratch: gamma are distinct facets of host,
/// the stored remainder is host minus gamma and acyclic over the stated
/// coefficients, every boundary face of each F ∈ gamma is in the remainder,
/// and witnesses (if present) satisfy their involvement conditions.
bool verify_certificate(const SpanningFacetCertificate& cert);

/// Multiset of sphere dimensions.
struct SphereList {
  std::map<int, std::uint64_t> counts;

  void add(int dim, std::uint64_t times = 1);
  std::uint64_t multiplicity(int dim) const;
  std::uint64_t size() const;
  /// "{1,1,1}", sorted ascending; "{}" when empty.
  std::string to_string() const;

  friend bool operator==(const SphereList&, const SphereList&) = default;
};

/// {m - |F| - 1 : F ∈ gamma} for a certificate on K^∨. Throws
/// Error(AmbientMismatch) unless cert.host is the Alexander dual of K on
/// the same index set.
SphereList dual_wedge_prediction(const SimplicialComplex& k, const SpanningFacetCertificate& cert);

/// Sphere dimensions read from homology (ranks; torsion ignored), for
/// comparison with a prediction.
SphereList spheres_from_homology(const HomologyGroups& h);

}  // namespace polyprod
