#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyprod/coefficients.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/field.hpp"
#include "polyprod/homology.hpp"
#include "polyprod/simplicial_complex.hpp"

namespace polyprod {

/// (homological degree i, internal degree 2j).
struct Bidegree {
  int hom = 0;
  int internal = 0;

  /// "(1,4)"
  std::string to_string() const;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Finitely supported map Bidegree -> dimension; zero entries are not stored.
struct BigradedBettiTable {
  std::map<Bidegree, std::uint64_t> entries;

  void add(Bidegree b, std::uint64_t n);
  std::uint64_t at(Bidegree b) const;
  std::uint64_t total() const;
  /// "{(0,0):1, (1,4):2}"
  std::string to_string() const;

  friend bool operator==(const BigradedBettiTable&, const BigradedBettiTable&) = default;
};

/// Entry (i, 2j) = Σ_{|I|=j} dim H̃_{j-i-1}(K_I; c), c a field. I = ∅
/// contributes the unit (0,0) through H̃_{-1}({∅}).
BigradedBettiTable hochster_table(const SimplicialComplex& k, const Coefficients& c);

/// Basis element u_ω v_σ of Λ[u_1..u_m] ⊗ k[K] / (v_i², u_i v_i).
struct KoszulCell {
  Simplex sigma;
  Simplex omega;

  Bidegree bidegree() const { return {omega.size(), 2 * (sigma.size() + omega.size())}; }
  /// "({1},{3})"
  std::string to_string() const;
  friend auto operator<=>(const KoszulCell&, const KoszulCell&) = default;
};

/// d(σ, ω) = Σ_t (-1)^(t-1) (σ ∪ w_t, ω ∖ w_t) over ω = {w_1 < w_2 < ...},
/// dropping terms with σ ∪ w_t ∉ K.
std::vector<std::pair<KoszulCell, int>> koszul_differential(const SimplicialComplex& k, const KoszulCell& cell);

/// (σ,ω)·(σ',ω') = shuffle_sign(ω, ω') (σ∪σ', ω∪ω') when σ, σ', ω, ω' are
/// pairwise disjoint and σ∪σ' ∈ K; nullopt (zero) otherwise.
std::optional<std::pair<KoszulCell, int>> koszul_product(const SimplicialComplex& k, const KoszulCell& a,
                                                         const KoszulCell& b);

/// The cells of the model grouped by bidegree, each group in canonical order
/// (σ ∪ ω first, then σ).
class KoszulBasis {
 public:
  explicit KoszulBasis(const SimplicialComplex& k);

  const SimplicialComplex& complex() const { return k_; }
  std::size_t size() const { return size_; }
  std::vector<Bidegree> bidegrees() const;
  const std::vector<KoszulCell>& component(Bidegree b) const;
  /// Position of `cell` inside its component.
  std::optional<std::size_t> index(const KoszulCell& cell) const;
  /// Matrix of d from component b (columns) to (b.hom - 1, b.internal) (rows).
  IntMatrix differential(Bidegree b) const;

 private:
  SimplicialComplex k_;
  std::size_t size_ = 0;
  std::map<Bidegree, std::vector<KoszulCell>> components_;
  std::map<KoszulCell, std::size_t> index_;
};

/// The Koszul model over a field, with cached homology per bidegree. Not
/// safe for concurrent use.
template <class F>
class KoszulModel {
 public:
  using Vector = FieldVector<F>;

  KoszulModel(const SimplicialComplex& k, F field) : basis_(k), field_(std::move(field)) {}

  const KoszulBasis& basis() const { return basis_; }
  const F& field() const { return field_; }

  /// Cycles whose classes form a basis of the homology in bidegree b.
  const std::vector<Vector>& homology(Bidegree b) const {
    auto it = homology_.find(b);
    if (it == homology_.end()) {
      const auto incoming = basis_.differential({b.hom + 1, b.internal});
      const auto outgoing = basis_.differential(b);
      it = homology_.emplace(b, homology_representatives(field_, incoming, outgoing)).first;
    }
    return it->second;
  }

  bool is_cycle(Bidegree b, const Vector& v) const {
    const auto d = to_field(field_, basis_.differential(b));
    for (std::size_t r = 0; r < d.rows(); ++r) {
      auto acc = field_.zero();
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (!field_.is_zero(d(r, c))) acc = field_.add(acc, field_.mul(d(r, c), v[c]));
      if (!field_.is_zero(acc)) return false;
    }
    return true;
  }

  bool is_boundary(Bidegree b, const Vector& v) const {
    auto it = boundaries_.find(b);
    if (it == boundaries_.end())
      it = boundaries_.emplace(b, column_space(field_, basis_.differential({b.hom + 1, b.internal}))).first;
    return it->second.contains(v);
  }

  Vector zero(Bidegree b) const { return Vector(basis_.component(b).size(), field_.zero()); }

  Vector multiply(Bidegree a, const Vector& x, Bidegree b, const Vector& y) const {
    const Bidegree target{a.hom + b.hom, a.internal + b.internal};
    Vector out = zero(target);
    const auto& ca = basis_.component(a);
    const auto& cb = basis_.component(b);
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (field_.is_zero(x[p])) continue;
      for (std::size_t q = 0; q < y.size(); ++q) {
        if (field_.is_zero(y[q])) continue;
        const auto prod = koszul_product(basis_.complex(), ca[p], cb[q]);
        if (!prod) continue;
        const std::size_t idx = *basis_.index(prod->first);
        const auto term = field_.mul(field_.mul(x[p], y[q]), field_.from_int(prod->second));
        out[idx] = field_.add(out[idx], term);
      }
    }
    return out;
  }

  BigradedBettiTable table() const {
    BigradedBettiTable t;
    for (Bidegree b : basis_.bidegrees()) t.add(b, homology(b).size());
    return t;
  }

 private:
  KoszulBasis basis_;
  F field_;
  mutable std::map<Bidegree, std::vector<Vector>> homology_;
  mutable std::map<Bidegree, Echelon<F>> boundaries_;
};

/// A homology class of a KoszulModel, given by a cycle representative.
template <class F>
struct TorClass {
  const KoszulModel<F>* model = nullptr;
  Bidegree bidegree;
  FieldVector<F> rep;

  bool is_zero() const { return model->is_boundary(bidegree, rep); }
};

template <class F>
TorClass<F> unit_class(const KoszulModel<F>& m) {
  return {&m, {0, 0}, FieldVector<F>{m.field().one()}};
}

/// Class of the product of representatives. Throws Error(ModelMismatch)
/// for classes of different models.
template <class F>
TorClass<F> tor_product(const TorClass<F>& a, const TorClass<F>& b) {
  if (a.model != b.model || a.model == nullptr) throw Error(ErrorCode::ModelMismatch, "classes from different models");
  const Bidegree target{a.bidegree.hom + b.bidegree.hom, a.bidegree.internal + b.bidegree.internal};
  return {a.model, target, a.model->multiply(a.bidegree, a.rep, b.bidegree, b.rep)};
}

template <class F>
std::string format_scalar(const F& field, const typename F::value_type& x) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    const std::int64_t p = field.prime();
    return std::to_string(2 * x > p ? x - p : x);
  } else {
    return x.str();
  }
}

/// "({1},{3})-2*({2},{4})"
template <class F>
std::string format_vector(const KoszulModel<F>& m, Bidegree b, const FieldVector<F>& v) {
  const auto& cells = m.basis().component(b);
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (m.field().is_zero(v[i])) continue;
    std::string c = format_scalar(m.field(), v[i]);
    const bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (negative) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (c != "1") out += c + "*";
    out += cells[i].to_string();
  }
  return out.empty() ? "0" : out;
}

struct GolodWitness {
  Bidegree left;
  Bidegree right;
  Bidegree product;
  std::string left_rep;
  std::string right_rep;
  std::string product_rep;

  friend bool operator==(const GolodWitness&, const GolodWitness&) = default;
};

struct GolodVerdict {
  bool golod = true;
  std::optional<GolodWitness> witness;
  std::uint64_t products_checked = 0;

  friend bool operator==(const GolodVerdict&, const GolodVerdict&) = default;
};

/// Every product of basis classes of positive homological degree vanishes.
/// Pairs are visited by bidegree in lexicographic order (a·a included);
/// the witness is the first nonzero product.
template <class F>
GolodVerdict golod_check(const KoszulModel<F>& m) {
  GolodVerdict out;
  std::vector<Bidegree> positive;
  for (Bidegree b : m.basis().bidegrees())
    if (b.hom > 0 && !m.homology(b).empty()) positive.push_back(b);
  for (std::size_t x = 0; x < positive.size(); ++x) {
    for (std::size_t y = x; y < positive.size(); ++y) {
      const Bidegree a = positive[x];
      const Bidegree b = positive[y];
      const Bidegree target{a.hom + b.hom, a.internal + b.internal};
      const auto& ha = m.homology(a);
      const auto& hb = m.homology(b);
      for (std::size_t i = 0; i < ha.size(); ++i) {
        for (std::size_t j = (x == y ? i : 0); j < hb.size(); ++j) {
          ++out.products_checked;
          const auto prod = m.multiply(a, ha[i], b, hb[j]);
          if (m.is_boundary(target, prod)) continue;
          out.golod = false;
          out.witness = GolodWitness{a, b, target, format_vector(m, a, ha[i]), format_vector(m, b, hb[j]),
                                     format_vector(m, target, prod)};
          return out;
        }
      }
    }
  }
  return out;
}

/// Bigraded homology dimensions of the Koszul model over the field c.
BigradedBettiTable koszul_table(const SimplicialComplex& k, const Coefficients& c);

/// Golod test over the field c.
GolodVerdict is_golod(const SimplicialComplex& k, const Coefficients& c);

// ------------------------------------------------ induced-subcomplex side

/// A simplicial cochain on K_I in one degree; values are indexed by
/// induced(K, support).faces_of_dim(degree).
template <class F>
struct Cochain {
  Simplex support;
  int degree = -1;
  FieldVector<F> values;
};

/// Cocycles whose classes form a basis of H̃^p(K_I; F). Coboundary is
/// the transpose of the boundary: (δf)(τ) = Σ_k (-1)^k f(τ ∖ τ_k).
template <class F>
std::vector<Cochain<F>> cohomology_basis(const F& field, const SimplicialComplex& k, Simplex support, int p) {
  const auto sub = induced(k, support);
  if (p < -1 || p > sub.dim()) return {};
  const auto incoming = boundary_matrix(sub, p).transposed();
  const auto outgoing = boundary_matrix(sub, p + 1).transposed();
  std::vector<Cochain<F>> out;
  for (auto& v : homology_representatives(field, incoming, outgoing)) out.push_back({support, p, std::move(v)});
  return out;
}

/// (α·β)(τ) = (-1)^(|I|·|τ_J|) sh(I,J) sh(τ_I,τ_J) α(τ_I) β(τ_J), for
/// α on K_I, β on K_J and τ = τ_I ⊔ τ_J a face of K_{I∪J}. Zero when
/// I ∩ J ≠ ∅.
template <class F>
Cochain<F> baskakov_product(const F& field, const SimplicialComplex& k, const Cochain<F>& a, const Cochain<F>& b) {
  const Simplex i_set = a.support;
  const Simplex j_set = b.support;
  const Simplex u = i_set.unite(j_set);
  const auto whole = induced(k, u);
  Cochain<F> out{u, a.degree + b.degree + 1, {}};
  const auto faces = whole.faces_of_dim(out.degree);
  out.values.assign(faces.size(), field.zero());
  if (i_set.intersects(j_set)) return out;
  const auto ki = induced(k, i_set);
  const auto kj = induced(k, j_set);
  const int base = shuffle_sign(i_set, j_set);
  for (std::size_t t = 0; t < faces.size(); ++t) {
    const Simplex tau = faces[t];
    const Simplex ti = tau.intersect(i_set);
    const Simplex tj = tau.intersect(j_set);
    if (ti.dim() != a.degree || tj.dim() != b.degree) continue;
    const auto ia = ki.index_in_dim(ti);
    const auto jb = kj.index_in_dim(tj);
    if (!ia || !jb) continue;
    const auto& va = a.values[*ia];
    const auto& vb = b.values[*jb];
    if (field.is_zero(va) || field.is_zero(vb)) continue;
    int sign = base * shuffle_sign(ti, tj);
    if ((i_set.size() * tj.size()) % 2 != 0) sign = -sign;
    out.values[t] = field.mul(field.from_int(sign), field.mul(va, vb));
  }
  return out;
}

/// Hochster identification of a cochain on K_I with a Koszul element of
/// multidegree I: σ* ↦ (-1)^(Σ_{x∈σ} r_I(x)) (σ, I∖σ), r_I(x) the 0-based
/// rank of x in I. It carries δ to d, so cocycles go to cycles.
template <class F>
TorClass<F> hochster_class(const KoszulModel<F>& m, const Cochain<F>& c) {
  const Simplex i_set = c.support;
  const Bidegree b{i_set.size() - c.degree - 1, 2 * i_set.size()};
  TorClass<F> out{&m, b, m.zero(b)};
  const auto sub = induced(m.basis().complex(), i_set);
  const auto faces = sub.faces_of_dim(c.degree);
  const auto& field = m.field();
  for (std::size_t t = 0; t < faces.size(); ++t) {
    if (field.is_zero(c.values[t])) continue;
    const Simplex sigma = faces[t];
    int rank_sum = 0;
    for (int x : sigma.vertices()) rank_sum += i_set.rank_of(x);
    const auto idx = m.basis().index({sigma, i_set.minus(sigma)});
    out.rep[*idx] = rank_sum % 2 == 0 ? c.values[t] : field.neg(c.values[t]);
  }
  return out;
}

}  // namespace polyprod
