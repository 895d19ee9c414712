#include "polyprod/spanning.hpp"

#include <algorithm>
#include <set>

#include "polyprod/field.hpp"

namespace polyprod {

SimplicialComplex remove_open_facets(const SimplicialComplex& host, const std::vector<Simplex>& gamma) {
  const std::set<Simplex> removed(gamma.begin(), gamma.end());
  std::vector<Simplex> keep;
  for (Simplex f : host.faces())
    if (!removed.contains(f)) keep.push_back(f);
  return SimplicialComplex::generated_by(host.ground(), keep);
}

SpanningFacetCertificate spanning_from_shelling(const SimplicialComplex& k, const ShellingOrder& order) {
  bool valid = false;
  try {
    valid = verify_shelling(k, order);
  } catch (const Error&) {
    valid = false;
  }
  if (!valid) throw Error(ErrorCode::NotAShelling, "order is not a shelling of " + k.to_string());
  SpanningFacetCertificate cert;
  cert.host = k;
  cert.coefficients = Coefficients::integers();
  if (!order.empty() && order.front().empty()) cert.gamma.push_back(order.front());
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Simplex f = order[i];
    const auto verts = f.vertices();
    const bool covered = std::all_of(verts.begin(), verts.end(), [&](int v) {
      const Simplex ridge = f.without(v);
      return std::any_of(order.begin(), order.begin() + static_cast<long>(i),
                         [ridge](Simplex g) { return ridge.is_subset_of(g); });
    });
    if (covered) cert.gamma.push_back(f);
  }
  cert.remainder = remove_open_facets(k, cert.gamma);
  return cert;
}

SpanningFacetCertificate spanning_mod_p(const SimplicialComplex& k, std::uint32_t p) {
  SpanningFacetCertificate cert;
  cert.host = k;
  cert.coefficients = Coefficients::prime_field(p);
  const std::int64_t prime = p;
  const PrimeField field(p);
  for (int i = -1; i <= k.dim(); ++i) {
    const auto upper = skeleton_ge(k, i + 1);
    if (auto bad = homology_basis(upper, i, p); !bad.empty()) throw NotApplicableError(i, std::move(bad.front()));

    auto basis = homology_basis(k, i, p);
    std::vector<Simplex> chosen;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      // Terms are already in canonical order.
      Simplex pick;
      bool found = false;
      for (const auto& [s, c] : basis[j].terms) {
        if (k.has_facet(s)) {
          pick = s;
          found = true;
          break;
        }
      }
      if (!found) throw Error(ErrorCode::Internal, "reduced cycle " + basis[j].to_string() + " involves no facet");
      const std::int64_t inv = field.inv(basis[j].coefficient(pick));
      for (std::size_t l = 0; l < basis.size(); ++l) {
        if (l == j) continue;
        const std::int64_t c = basis[l].coefficient(pick);
        if (c != 0) basis[l].add_multiple(basis[j], prime - field.mul(c, inv));
      }
      chosen.push_back(pick);
    }
    cert.gamma.insert(cert.gamma.end(), chosen.begin(), chosen.end());
    for (auto& x : basis) cert.witnesses.push_back(std::move(x));
  }
  cert.remainder = remove_open_facets(k, cert.gamma);
  if (!verify_certificate(cert)) throw Error(ErrorCode::Internal, "mod-p spanning facets failed verification");
  return cert;
}

std::pair<ChainVector, ChainVector> chain_vertex_part(const SimplicialComplex& k, const ChainVector& x, int v) {
  if (!is_cycle_of(x, k)) throw Error(ErrorCode::NotACycle, x.to_string() + " is not a cycle");
  ChainVector part;
  part.prime = x.prime;
  part.dim = x.dim;
  for (const auto& [s, c] : x.terms)
    if (s.contains(v)) part.add(s, c);
  ChainVector d = boundary(part);
  if (part.is_zero()) return {part, d};
  const auto lk = link(k, Simplex::from_vertices({v}));
  if (!is_cycle_of(d, lk)) throw Error(ErrorCode::Internal, "boundary of the vertex part is not a link cycle");
  return {part, d};
}

bool verify_certificate(const SpanningFacetCertificate& cert) {
  const auto& host = cert.host;
  const std::set<Simplex> gamma(cert.gamma.begin(), cert.gamma.end());
  if (gamma.size() != cert.gamma.size()) return false;
  for (Simplex f : cert.gamma)
    if (!host.has_facet(f)) return false;
  if (!(cert.remainder == remove_open_facets(host, cert.gamma))) return false;
  if (!is_acyclic(cert.remainder, cert.coefficients)) return false;
  for (Simplex f : cert.gamma) {
    for (int v : f.vertices())
      if (!cert.remainder.contains(f.without(v))) return false;
  }
  if (cert.witnesses.empty()) return true;
  if (cert.coefficients.kind() != Coefficients::Kind::PrimeField) return false;
  if (cert.witnesses.size() != cert.gamma.size()) return false;
  for (std::size_t j = 0; j < cert.gamma.size(); ++j) {
    const auto& w = cert.witnesses[j];
    if (w.prime != cert.coefficients.prime() || !is_cycle_of(w, host)) return false;
    if (!w.involves(cert.gamma[j])) return false;
    for (std::size_t l = 0; l < cert.gamma.size(); ++l)
      if (l != j && w.involves(cert.gamma[l])) return false;
  }
  return true;
}

void SphereList::add(int dim, std::uint64_t times) {
  if (times > 0) counts[dim] += times;
}

std::uint64_t SphereList::multiplicity(int dim) const {
  const auto it = counts.find(dim);
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t SphereList::size() const {
  std::uint64_t total = 0;
  for (const auto& [d, n] : counts) total += n;
  return total;
}

std::string SphereList::to_string() const {
  std::string out = "{";
  for (const auto& [d, n] : counts)
    for (std::uint64_t i = 0; i < n; ++i) {
      if (out.size() > 1) out += ',';
      out += std::to_string(d);
    }
  return out + "}";
}

SphereList dual_wedge_prediction(const SimplicialComplex& k, const SpanningFacetCertificate& cert) {
  if (!(cert.host == alexander_dual(k))) {
    throw Error(ErrorCode::AmbientMismatch, "certificate host is not the Alexander dual of " + k.to_string());
  }
  SphereList out;
  for (Simplex f : cert.gamma) {
    const int d = k.m() - f.size() - 1;
    if (d < 0) throw Error(ErrorCode::Internal, "negative sphere dimension");
    out.add(d);
  }
  return out;
}

SphereList spheres_from_homology(const HomologyGroups& h) {
  SphereList out;
  for (const auto& [n, g] : h.groups()) out.add(n, g.rank);
  return out;
}

}  // namespace polyprod
