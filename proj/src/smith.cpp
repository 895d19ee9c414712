#include "polyprod/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace polyprod {

namespace {

class SmithReducer {
 public:
  SmithReducer(BigMatrix a, bool with_transforms)
      : a_(std::move(a)), transforms_(with_transforms) {
    if (transforms_) {
      u_ = BigMatrix::identity(a_.rows());
      v_ = BigMatrix::identity(a_.cols());
    }
  }

  SmithForm run() {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
      const auto pivot = smallest_entry(t);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      settle_pivot(t);
      if (a_(t, t) < 0) negate_row(t);
    }
    SmithForm out;
    for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(a_(i, i));
    if (transforms_) {
      out.left = std::move(u_);
      out.right = std::move(v_);
    }
    return out;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const BigInt& x = a_(i, j);
        if (x == 0) continue;
        BigInt ax = abs(x);
        if (!best || ax < best_abs) {
          best = {i, j};
          best_abs = std::move(ax);
          if (best_abs == 1) return best;
        }
      }
    return best;
  }

  // Clears row t and column t, leaving a pivot dividing the remaining block.
  void settle_pivot(std::size_t t) {
    while (true) {
      if (clear_column(t)) continue;
      if (clear_row(t)) continue;
      const auto bad = non_divisible_entry(t);
      if (!bad) return;
      add_row(t, bad->first);
    }
  }

  // Returns true when a smaller pivot was moved into place and work remains.
  bool clear_column(std::size_t t) {
    const BigInt& p = a_(t, t);
    std::optional<std::size_t> smallest;
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (a_(i, t) == 0) continue;
      const BigInt q = a_(i, t) / p;
      if (q != 0) subtract_row(i, t, q);
      if (a_(i, t) != 0 && (!smallest || abs(a_(i, t)) < abs(a_(*smallest, t)))) smallest = i;
    }
    if (!smallest) return false;
    swap_rows(t, *smallest);
    return true;
  }

  bool clear_row(std::size_t t) {
    const BigInt& p = a_(t, t);
    std::optional<std::size_t> smallest;
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (a_(t, j) == 0) continue;
      const BigInt q = a_(t, j) / p;
      if (q != 0) subtract_col(j, t, q);
      if (a_(t, j) != 0 && (!smallest || abs(a_(t, j)) < abs(a_(t, *smallest)))) smallest = j;
    }
    if (!smallest) return false;
    swap_cols(t, *smallest);
    return true;
  }

  std::optional<std::pair<std::size_t, std::size_t>> non_divisible_entry(std::size_t t) const {
    const BigInt& p = a_(t, t);
    if (abs(p) == 1) return std::nullopt;
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(i, j) % p != 0) return std::make_pair(i, j);
      }
    return std::nullopt;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(k, c));
    if (transforms_)
      for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(k, c));
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, j), a_(r, k));
    if (transforms_)
      for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, j), v_(r, k));
  }

  // row_i -= q * row_k
  void subtract_row(std::size_t i, std::size_t k, const BigInt& q) {
    for (std::size_t c = 0; c < a_.cols(); ++c)
      if (a_(k, c) != 0) a_(i, c) -= q * a_(k, c);
    if (transforms_)
      for (std::size_t c = 0; c < u_.cols(); ++c)
        if (u_(k, c) != 0) u_(i, c) -= q * u_(k, c);
  }

  // col_j -= q * col_k
  void subtract_col(std::size_t j, std::size_t k, const BigInt& q) {
    for (std::size_t r = 0; r < a_.rows(); ++r)
      if (a_(r, k) != 0) a_(r, j) -= q * a_(r, k);
    if (transforms_)
      for (std::size_t r = 0; r < v_.rows(); ++r)
        if (v_(r, k) != 0) v_(r, j) -= q * v_(r, k);
  }

  // row_t += row_i
  void add_row(std::size_t t, std::size_t i) { subtract_row(t, i, BigInt(-1)); }

  void negate_row(std::size_t t) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(t, c) = -a_(t, c);
    if (transforms_)
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(t, c) = -u_(t, c);
  }

  BigMatrix a_;
  BigMatrix u_;
  BigMatrix v_;
  bool transforms_;
};

}  // namespace

BigMatrix SmithForm::diagonal_matrix(std::size_t rows, std::size_t cols) const {
  BigMatrix d(rows, cols);
  for (std::size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
  return d;
}

SmithForm smith_normal_form(const BigMatrix& m, bool with_transforms) {
  return SmithReducer(m, with_transforms).run();
}

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms) {
  return SmithReducer(convert<BigInt>(m), with_transforms).run();
}

std::vector<BigInt> invariant_factors(const IntMatrix& m) {
  return smith_normal_form(m, false).diagonal;
}

std::vector<BigInt> normalize_torsion(const std::vector<BigInt>& cyclic_orders) {
  BigMatrix d(cyclic_orders.size(), cyclic_orders.size());
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i) d(i, i) = cyclic_orders[i];
  std::vector<BigInt> out;
  for (auto& x : smith_normal_form(d, false).diagonal) {
    if (x > 1) out.push_back(x);
  }
  return out;
}

}  // namespace polyprod
