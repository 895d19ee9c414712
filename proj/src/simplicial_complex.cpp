#include "polyprod/simplicial_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "polyprod/errors.hpp"

namespace polyprod {

namespace {

// Largest facet whose faces we are willing to enumerate.
constexpr int kMaxFacetSize = 24;

std::vector<Simplex> maximal_elements(std::vector<Simplex> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Simplex> out;
  // Canonical order sorts by size, so a set can only be dominated by a later one.
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = i + 1; j < sets.size() && !dominated; ++j) {
      dominated = sets[i].is_subset_of(sets[j]);
    }
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(Simplex ground, std::vector<Simplex> facets)
    : ground_(ground), facets_(std::move(facets)) {
  std::sort(facets_.begin(), facets_.end());
  std::unordered_set<std::uint32_t> seen;
  for (Simplex f : facets_) {
    if (f.size() > kMaxFacetSize) {
      throw Error(ErrorCode::Unsupported, "facet too large to enumerate: " + f.to_string());
    }
    vertices_ = vertices_.unite(f);
    for (Simplex s : subsets_of(f)) {
      if (seen.insert(s.bits()).second) faces_.push_back(s);
    }
  }
  std::sort(faces_.begin(), faces_.end());
  const int top = dim();
  dim_offsets_.assign(static_cast<std::size_t>(std::max(top + 3, 1)), faces_.size());
  std::size_t pos = 0;
  for (int d = -1; d <= top + 1; ++d) {
    while (pos < faces_.size() && faces_[pos].dim() < d) ++pos;
    dim_offsets_[static_cast<std::size_t>(d + 1)] = pos;
  }
  index_.reserve(faces_.size());
  for (int d = -1; d <= top; ++d) {
    const auto span = faces_of_dim(d);
    for (std::size_t i = 0; i < span.size(); ++i) {
      index_.emplace(span[i].bits(), static_cast<std::uint32_t>(i));
    }
  }
}

SimplicialComplex SimplicialComplex::void_complex(Simplex ground) { return {ground, {}}; }

SimplicialComplex SimplicialComplex::empty_complex(Simplex ground) { return {ground, {Simplex{}}}; }

SimplicialComplex SimplicialComplex::full_simplex(Simplex ground) { return {ground, {ground}}; }

SimplicialComplex SimplicialComplex::from_facets(Simplex ground, std::vector<Simplex> facets) {
  if (facets.empty()) return empty_complex(ground);
  for (Simplex f : facets) {
    if (!f.is_subset_of(ground)) {
      throw std::invalid_argument("facet " + f.to_string() + " outside the index set");
    }
  }
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i != j && facets[i].is_subset_of(facets[j])) {
        throw std::invalid_argument("facet " + facets[i].to_string() + " is dominated by " +
                                    facets[j].to_string());
      }
    }
  }
  return {ground, std::move(facets)};
}

SimplicialComplex SimplicialComplex::generated_by(Simplex ground, std::span<const Simplex> generators) {
  for (Simplex g : generators) {
    if (!g.is_subset_of(ground)) {
      throw std::invalid_argument("generator " + g.to_string() + " outside the index set");
    }
  }
  return {ground, maximal_elements({generators.begin(), generators.end()})};
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  return facets_.front().size() == facets_.back().size();
}

bool SimplicialComplex::has_facet(Simplex face) const {
  return std::binary_search(facets_.begin(), facets_.end(), face);
}

std::span<const Simplex> SimplicialComplex::faces_of_dim(int d) const {
  if (d < -1 || d > dim()) return {};
  const auto lo = dim_offsets_[static_cast<std::size_t>(d + 1)];
  const auto hi = dim_offsets_[static_cast<std::size_t>(d + 2)];
  return std::span<const Simplex>(faces_).subspan(lo, hi - lo);
}

std::optional<std::size_t> SimplicialComplex::index_in_dim(Simplex face) const {
  const auto it = index_.find(face.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

long long SimplicialComplex::reduced_euler_characteristic() const {
  long long chi = 0;
  for (Simplex f : faces_) chi += (f.dim() % 2 == 0) ? 1 : -1;
  return chi;
}

std::string SimplicialComplex::to_string() const {
  std::string out = "m=" + std::to_string(m());
  if (ground_ != Simplex::range(m())) out += " ground=" + ground_.to_string();
  if (is_void()) return out + " void";
  if (is_empty_complex()) return out + " empty";
  for (Simplex f : facets_) out += " " + f.to_string();
  return out;
}

SimplicialComplex link(const SimplicialComplex& k, Simplex sigma) {
  if (!k.contains(sigma)) throw Error(ErrorCode::NotAFace, sigma.to_string() + " in " + k.to_string());
  std::vector<Simplex> gens;
  for (Simplex f : k.facets()) {
    if (sigma.is_subset_of(f)) gens.push_back(f.minus(sigma));
  }
  return SimplicialComplex::generated_by(k.ground().minus(sigma), gens);
}

SimplicialComplex star(const SimplicialComplex& k, Simplex sigma) {
  if (!k.contains(sigma)) throw Error(ErrorCode::NotAFace, sigma.to_string() + " in " + k.to_string());
  std::vector<Simplex> gens;
  for (Simplex f : k.facets()) {
    if (sigma.is_subset_of(f)) gens.push_back(f);
  }
  return SimplicialComplex::generated_by(k.ground(), gens);
}

SimplicialComplex deletion(const SimplicialComplex& k, Simplex sigma, DeletionGround ground) {
  std::vector<Simplex> gens;
  for (Simplex f : k.faces()) {
    if (!sigma.is_subset_of(f)) gens.push_back(f);
  }
  Simplex result_ground = k.ground();
  if (ground == DeletionGround::Shrink) {
    Simplex used;
    for (Simplex g : gens) used = used.unite(g);
    result_ground = result_ground.minus(sigma.minus(used));
  }
  return SimplicialComplex::generated_by(result_ground, gens);
}

SimplicialComplex induced(const SimplicialComplex& k, Simplex subset) {
  if (!subset.is_subset_of(k.ground())) {
    throw std::invalid_argument("induced: " + subset.to_string() + " not inside the index set");
  }
  if (k.is_void()) return SimplicialComplex::void_complex(subset);
  std::vector<Simplex> gens;
  gens.reserve(k.facets().size());
  for (Simplex f : k.facets()) gens.push_back(f.intersect(subset));
  return SimplicialComplex::generated_by(subset, gens);
}

SimplicialComplex skeleton_ge(const SimplicialComplex& k, int i) {
  std::vector<Simplex> gens;
  for (Simplex f : k.facets()) {
    if (f.dim() >= i) gens.push_back(f);
  }
  return SimplicialComplex::generated_by(k.ground(), gens);
}

std::vector<Simplex> minimal_nonfaces(const SimplicialComplex& k) {
  if (k.m() > 24) throw Error(ErrorCode::Unsupported, "index set too large for nonface enumeration");
  std::vector<Simplex> out;
  for (Simplex s : subsets_of(k.ground())) {
    if (k.contains(s)) continue;
    bool minimal = true;
    for (int v : s.vertices()) {
      if (!k.contains(s.without(v))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& k) {
  // Maximal faces of the dual are complements of minimal nonfaces.
  std::vector<Simplex> facets;
  for (Simplex n : minimal_nonfaces(k)) facets.push_back(k.ground().minus(n));
  if (facets.empty()) return SimplicialComplex::void_complex(k.ground());
  return SimplicialComplex::generated_by(k.ground(), facets);
}

SimplicialComplex suspension(const SimplicialComplex& k) {
  const int top = k.ground().max_vertex();
  return suspension(k, top + 1, top + 2);
}

SimplicialComplex suspension(const SimplicialComplex& k, int apex_a, int apex_b) {
  if (apex_a == apex_b || k.ground().contains(apex_a) || k.ground().contains(apex_b)) {
    throw std::invalid_argument("suspension apexes must be distinct new labels");
  }
  const Simplex ground = k.ground().with(apex_a).with(apex_b);
  std::vector<Simplex> gens;
  for (Simplex f : k.facets()) {
    gens.push_back(f.with(apex_a));
    gens.push_back(f.with(apex_b));
  }
  return SimplicialComplex::generated_by(ground, gens);
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& k) {
  return std::all_of(sub.facets().begin(), sub.facets().end(),
                     [&](Simplex f) { return k.contains(f); });
}

}  // namespace polyprod
