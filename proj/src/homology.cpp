#include "polyprod/homology.hpp"

#include <stdexcept>

#include "polyprod/errors.hpp"
#include "polyprod/field.hpp"
#include "polyprod/smith.hpp"

namespace polyprod {

std::string HomologyGroup::to_string(bool field) const {
  if (is_zero()) return "0";
  std::string out;
  if (rank > 0) {
    out = field ? "k" : "Z";
    if (rank > 1) out += "^" + std::to_string(rank);
  }
  for (const auto& t : torsion) {
    if (!out.empty()) out += "+";
    out += "Z/" + t.str();
  }
  return out;
}

void HomologyGroups::set(int degree, HomologyGroup group) {
  if (group.is_zero()) {
    groups_.erase(degree);
  } else {
    groups_[degree] = std::move(group);
  }
}

const HomologyGroup& HomologyGroups::at(int degree) const {
  static const HomologyGroup zero;
  const auto it = groups_.find(degree);
  return it == groups_.end() ? zero : it->second;
}

bool HomologyGroups::is_torsion_free() const {
  for (const auto& [n, g] : groups_)
    if (!g.torsion.empty()) return false;
  return true;
}

std::uint64_t HomologyGroups::total_rank() const {
  std::uint64_t total = 0;
  for (const auto& [n, g] : groups_) total += g.rank;
  return total;
}

void HomologyGroups::add_shifted(const HomologyGroups& other, int shift) {
  for (const auto& [n, g] : other.groups_) {
    HomologyGroup sum = at(n + shift);
    sum.rank += g.rank;
    if (!g.torsion.empty()) {
      std::vector<BigInt> all = sum.torsion;
      all.insert(all.end(), g.torsion.begin(), g.torsion.end());
      sum.torsion = normalize_torsion(all);
    }
    set(n + shift, std::move(sum));
  }
}

std::string HomologyGroups::to_string(bool field) const {
  if (groups_.empty()) return "0";
  std::string out;
  for (const auto& [n, g] : groups_) {
    if (!out.empty()) out += ' ';
    out += "H" + std::to_string(n) + "=" + g.to_string(field);
  }
  return out;
}

ChainComplex::ChainComplex(int min_degree, std::vector<std::size_t> dims, std::vector<IntMatrix> boundaries)
    : min_degree_(min_degree), dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
  if (boundaries_.size() != dims_.size()) throw std::invalid_argument("ChainComplex: one boundary per degree");
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    const std::size_t below = k == 0 ? 0 : dims_[k - 1];
    if (boundaries_[k].cols() != dims_[k] || boundaries_[k].rows() != below) {
      throw std::invalid_argument("ChainComplex: boundary shape mismatch in degree " +
                                  std::to_string(min_degree_ + static_cast<int>(k)));
    }
  }
}

std::size_t ChainComplex::dim(int n) const {
  if (n < min_degree_ || n > max_degree()) return 0;
  return dims_[static_cast<std::size_t>(n - min_degree_)];
}

IntMatrix ChainComplex::boundary(int n) const {
  if (n < min_degree_ || n > max_degree()) return IntMatrix(dim(n - 1), dim(n));
  return boundaries_[static_cast<std::size_t>(n - min_degree_)];
}

bool ChainComplex::squares_to_zero() const {
  for (int n = min_degree_ + 1; n <= max_degree(); ++n) {
    if (!multiply(boundary(n - 1), boundary(n)).is_zero()) return false;
  }
  return true;
}

namespace {

template <class F>
HomologyGroups field_homology(const ChainComplex& chains, const F& field) {
  HomologyGroups out;
  std::vector<std::size_t> ranks;  // rank of boundary(n), n = min..max+1
  for (int n = chains.min_degree(); n <= chains.max_degree() + 1; ++n) {
    ranks.push_back(rank(field, chains.boundary(n)));
  }
  for (int n = chains.min_degree(); n <= chains.max_degree(); ++n) {
    const std::size_t k = static_cast<std::size_t>(n - chains.min_degree());
    HomologyGroup g;
    g.rank = chains.dim(n) - ranks[k] - ranks[k + 1];
    out.set(n, std::move(g));
  }
  return out;
}

HomologyGroups integral_homology(const ChainComplex& chains) {
  HomologyGroups out;
  std::vector<std::vector<BigInt>> factors;
  for (int n = chains.min_degree(); n <= chains.max_degree() + 1; ++n) {
    factors.push_back(invariant_factors(chains.boundary(n)));
  }
  for (int n = chains.min_degree(); n <= chains.max_degree(); ++n) {
    const std::size_t k = static_cast<std::size_t>(n - chains.min_degree());
    HomologyGroup g;
    g.rank = chains.dim(n) - factors[k].size() - factors[k + 1].size();
    for (const auto& d : factors[k + 1])
      if (d > 1) g.torsion.push_back(d);
    out.set(n, std::move(g));
  }
  return out;
}

}  // namespace

HomologyGroups homology(const ChainComplex& chains, const Coefficients& coefficients) {
  switch (coefficients.kind()) {
    case Coefficients::Kind::Integers: return integral_homology(chains);
    case Coefficients::Kind::PrimeField: return field_homology(chains, PrimeField(coefficients.prime()));
    case Coefficients::Kind::Rationals: return field_homology(chains, RationalField{});
  }
  return {};
}

IntMatrix boundary_matrix(const SimplicialComplex& k, int degree) {
  const auto cols = k.faces_of_dim(degree);
  const auto rows = k.faces_of_dim(degree - 1);
  IntMatrix d(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto verts = cols[c].vertices();
    for (std::size_t t = 0; t < verts.size(); ++t) {
      const auto r = k.index_in_dim(cols[c].without(verts[t]));
      d(*r, c) = (t % 2 == 0) ? 1 : -1;
    }
  }
  return d;
}

ChainComplex simplicial_chains(const SimplicialComplex& k) {
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> boundaries;
  for (int d = -1; d <= k.dim(); ++d) {
    dims.push_back(k.face_count(d));
    boundaries.push_back(boundary_matrix(k, d));
  }
  return ChainComplex(-1, std::move(dims), std::move(boundaries));
}

HomologyGroups reduced_homology(const SimplicialComplex& k, const Coefficients& coefficients) {
  if (k.is_void()) return {};
  return homology(simplicial_chains(k), coefficients);
}

bool is_acyclic(const SimplicialComplex& k, const Coefficients& coefficients) {
  return reduced_homology(k, coefficients).is_zero();
}

namespace {

template <class F>
std::size_t image_rank(const F& field, const SimplicialComplex& k, const std::vector<SimplicialComplex>& subs,
                       int n) {
  if (k.is_void() || n < -1 || n > k.dim()) return 0;
  auto span = column_space(field, boundary_matrix(k, n + 1));
  const std::size_t boundaries = span.rank();
  const auto faces = k.faces_of_dim(n);
  for (const auto& sub : subs) {
    if (sub.is_void() || n > sub.dim()) continue;
    const auto sub_faces = sub.faces_of_dim(n);
    for (const auto& z : kernel_basis(field, boundary_matrix(sub, n))) {
      FieldVector<F> v(faces.size(), field.zero());
      for (std::size_t i = 0; i < z.size(); ++i) {
        const auto idx = k.index_in_dim(sub_faces[i]);
        if (!idx) throw std::invalid_argument("inclusion_image_rank: not a subcomplex");
        v[*idx] = z[i];
      }
      span.insert(std::move(v));
    }
  }
  return span.rank() - boundaries;
}

}  // namespace

std::size_t inclusion_image_rank(const SimplicialComplex& k, const std::vector<SimplicialComplex>& subs,
                                 int n, const Coefficients& c) {
  switch (c.kind()) {
    case Coefficients::Kind::PrimeField: return image_rank(PrimeField(c.prime()), k, subs, n);
    case Coefficients::Kind::Rationals: return image_rank(RationalField{}, k, subs, n);
    case Coefficients::Kind::Integers: break;
  }
  throw std::invalid_argument("inclusion_image_rank needs field coefficients");
}

std::int64_t ChainVector::coefficient(Simplex s) const {
  const auto it = terms.find(s);
  return it == terms.end() ? 0 : it->second;
}

void ChainVector::add(Simplex s, std::int64_t c) {
  const std::int64_t p = prime;
  std::int64_t r = c % p;
  if (r < 0) r += p;
  if (r == 0) return;
  auto [it, inserted] = terms.emplace(s, r);
  if (!inserted) {
    it->second = (it->second + r) % p;
    if (it->second == 0) terms.erase(it);
  }
}

void ChainVector::add_multiple(const ChainVector& other, std::int64_t c) {
  if (&other == this) {
    const ChainVector copy = other;
    add_multiple(copy, c);
    return;
  }
  for (const auto& [s, a] : other.terms) add(s, (a * (c % static_cast<std::int64_t>(prime))));
}

std::string ChainVector::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  const std::int64_t p = prime;
  for (const auto& [s, a] : terms) {
    const std::int64_t c = (2 * a > p) ? a - p : a;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += s.to_string();
  }
  return out;
}

ChainVector boundary(const ChainVector& x) {
  ChainVector out;
  out.prime = x.prime;
  out.dim = x.dim - 1;
  for (const auto& [s, a] : x.terms) {
    const auto verts = s.vertices();
    for (std::size_t t = 0; t < verts.size(); ++t) {
      out.add(s.without(verts[t]), (t % 2 == 0) ? a : -a);
    }
  }
  return out;
}

bool is_cycle_of(const ChainVector& x, const SimplicialComplex& k) {
  for (const auto& [s, a] : x.terms) {
    if (s.dim() != x.dim || !k.contains(s)) return false;
  }
  return boundary(x).is_zero();
}

namespace {

FieldVector<PrimeField> to_dense(const ChainVector& x, const SimplicialComplex& k) {
  FieldVector<PrimeField> v(k.face_count(x.dim), 0);
  for (const auto& [s, a] : x.terms) {
    const auto idx = k.index_in_dim(s);
    if (!idx || s.dim() != x.dim) throw std::invalid_argument("chain not supported on the complex");
    v[*idx] = a;
  }
  return v;
}

}  // namespace

bool is_boundary_of(const ChainVector& x, const SimplicialComplex& k) {
  const PrimeField field(x.prime);
  const auto span = column_space(field, boundary_matrix(k, x.dim + 1));
  return span.contains(to_dense(x, k));
}

std::vector<ChainVector> homology_basis(const SimplicialComplex& k, int n, std::uint32_t p) {
  if (k.is_void() || n < -1 || n > k.dim()) return {};
  const PrimeField field(p);
  const IntMatrix incoming = boundary_matrix(k, n + 1);
  const IntMatrix outgoing = boundary_matrix(k, n);
  const auto reps = homology_representatives(field, incoming, outgoing);
  const auto faces = k.faces_of_dim(n);
  std::vector<ChainVector> out;
  auto span = column_space(field, incoming);
  for (const auto& v : reps) {
    ChainVector x;
    x.prime = p;
    x.dim = n;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) x.add(faces[i], v[i]);
    if (!is_cycle_of(x, k) || !span.insert(to_dense(x, k))) {
      throw Error(ErrorCode::Internal, "homology_basis produced an invalid class");
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace polyprod
