#pragma once

#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "polyprod/coefficients.hpp"
#include "polyprod/matrix.hpp"

namespace polyprod {

/// Z/p with p < 2^31; elements are canonical residues in [0, p).
class PrimeField {
 public:
  using value_type = std::int64_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31)) throw std::invalid_argument("PrimeField needs a prime below 2^31");
  }

  std::uint32_t prime() const { return p_; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long x) const {
    const long long r = x % static_cast<long long>(p_);
    return r < 0 ? r + p_ : r;
  }
  value_type from_big(const BigInt& x) const {
    BigInt r = x % p_;
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }
  value_type add(value_type a, value_type b) const { return (a + b) % p_; }
  value_type sub(value_type a, value_type b) const { return (a - b + p_) % p_; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p_; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    // Fermat: a^(p-2).
    value_type result = 1;
    value_type base = a;
    for (std::uint64_t e = p_ - 2; e > 0; e >>= 1) {
      if (e & 1u) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
  bool is_zero(value_type a) const { return a == 0; }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long x) const { return x; }
  value_type from_big(const BigInt& x) const { return Rational(x); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return 1 / a; }
  bool is_zero(const value_type& a) const { return a == 0; }
};

template <class F>
using FieldVector = std::vector<typename F::value_type>;

/// Incrementally maintained basis of a subspace of F^n in echelon form.
///
/// Each stored row has a pivot column at which every later-inserted row is
/// zero, so reduction can sweep the rows in insertion order.
template <class F>
class Echelon {
 public:
  using Scalar = typename F::value_type;

  Echelon(F field, std::size_t n) : field_(std::move(field)), n_(n) {}

  std::size_t dimension() const { return n_; }
  std::size_t rank() const { return rows_.size(); }

  /// v minus its projection along the stored rows.
  FieldVector<F> reduce(FieldVector<F> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& coef = v[pivots_[r]];
      if (field_.is_zero(coef)) continue;
      const Scalar c = coef;
      const auto& row = rows_[r];
      for (std::size_t j = 0; j < n_; ++j) {
        if (!field_.is_zero(row[j])) v[j] = field_.sub(v[j], field_.mul(c, row[j]));
      }
    }
    return v;
  }

  bool contains(const FieldVector<F>& v) const { return is_zero_vector(reduce(v)); }

  /// Returns true when v was independent of the stored rows.
  bool insert(FieldVector<F> v) {
    v = reduce(std::move(v));
    std::size_t pivot = n_;
    for (std::size_t j = 0; j < n_; ++j) {
      if (!field_.is_zero(v[j])) {
        pivot = j;
        break;
      }
    }
    if (pivot == n_) return false;
    const Scalar scale = field_.inv(v[pivot]);
    for (auto& x : v)
      if (!field_.is_zero(x)) x = field_.mul(x, scale);
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  bool is_zero_vector(const FieldVector<F>& v) const {
    for (const auto& x : v)
      if (!field_.is_zero(x)) return false;
    return true;
  }

 private:
  F field_;
  std::size_t n_;
  std::vector<FieldVector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class F, class T>
Matrix<typename F::value_type> to_field(const F& field, const Matrix<T>& m) {
  Matrix<typename F::value_type> out(m.rows(), m.cols(), field.zero());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if constexpr (std::is_same_v<T, BigInt>) {
        out(r, c) = field.from_big(m(r, c));
      } else {
        out(r, c) = field.from_int(static_cast<long long>(m(r, c)));
      }
    }
  return out;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(const F& field, Matrix<typename F::value_type>& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = a.rows();
    for (std::size_t r = row; r < a.rows(); ++r) {
      if (!field.is_zero(a(r, col))) {
        sel = r;
        break;
      }
    }
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    const auto scale = field.inv(a(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = field.mul(a(row, c), scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || field.is_zero(a(r, col))) continue;
      const auto factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!field.is_zero(a(row, c))) a(r, c) = field.sub(a(r, c), field.mul(factor, a(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F, class T>
std::size_t rank(const F& field, const Matrix<T>& m) {
  auto a = to_field(field, m);
  return row_reduce(field, a).size();
}

/// Basis of {x : m x = 0}, one vector per free column of the row echelon form.
template <class F, class T>
std::vector<FieldVector<F>> kernel_basis(const F& field, const Matrix<T>& m) {
  auto a = to_field(field, m);
  const auto pivots = row_reduce(field, a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<FieldVector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    FieldVector<F> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(a(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Column space of m as an Echelon.
template <class F, class T>
Echelon<F> column_space(const F& field, const Matrix<T>& m) {
  Echelon<F> echelon(field, m.rows());
  const auto a = to_field(field, m);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    FieldVector<F> col(m.rows(), field.zero());
    for (std::size_t r = 0; r < m.rows(); ++r) col[r] = a(r, c);
    echelon.insert(std::move(col));
  }
  return echelon;
}

/// Cycles of `outgoing` (C_n -> C_{n-1}) whose classes form a basis of
/// ker(outgoing) / im(incoming), where incoming is C_{n+1} -> C_n. Shapes
/// must be exact: incoming is n x dim C_{n+1}, outgoing is dim C_{n-1} x n.
template <class F, class T>
std::vector<FieldVector<F>> homology_representatives(const F& field, const Matrix<T>& incoming,
                                                     const Matrix<T>& outgoing) {
  if (incoming.rows() != outgoing.cols()) throw std::invalid_argument("homology_representatives: shape mismatch");
  Echelon<F> span = column_space(field, incoming);
  std::vector<FieldVector<F>> out;
  for (auto& z : kernel_basis(field, outgoing)) {
    if (span.insert(z)) out.push_back(std::move(z));
  }
  return out;
}

}  // namespace polyprod
