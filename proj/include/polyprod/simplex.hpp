#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace polyprod {

/// Largest vertex label a Simplex can hold. Labels run from 1.
inline constexpr int kMaxVertex = 32;

/// A finite set of vertex labels, stored as a bit mask (label v <-> bit v-1).
///
/// The empty set is the empty simplex. Ordering is the canonical face order
/// used everywhere in the library: by cardinality, then lexicographically on
/// the ascending vertex sequence.
class Simplex {
 public:
  constexpr Simplex() = default;

  static constexpr Simplex from_bits(std::uint32_t bits) {
    Simplex s;
    s.bits_ = bits;
    return s;
  }

  /// Vertices need not be sorted; throws std::invalid_argument on a label
  /// outside 1..kMaxVertex or a repeated label.
  static Simplex from_vertices(std::span<const int> vertices);
  static Simplex from_vertices(std::initializer_list<int> vertices) {
    return from_vertices(std::span<const int>(vertices.begin(), vertices.size()));
  }

  /// {1, ..., m}.
  static Simplex range(int m);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int dim() const { return size() - 1; }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(int v) const {
    return v >= 1 && v <= kMaxVertex && ((bits_ >> (v - 1)) & 1u) != 0;
  }
  constexpr bool is_subset_of(Simplex other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(Simplex other) const { return (bits_ & other.bits_) != 0; }

  constexpr Simplex unite(Simplex other) const { return from_bits(bits_ | other.bits_); }
  constexpr Simplex intersect(Simplex other) const { return from_bits(bits_ & other.bits_); }
  constexpr Simplex minus(Simplex other) const { return from_bits(bits_ & ~other.bits_); }
  Simplex with(int v) const;
  Simplex without(int v) const;

  /// Smallest / largest label; 0 for the empty simplex.
  constexpr int min_vertex() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  constexpr int max_vertex() const { return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_); }

  /// Number of members strictly smaller than v.
  constexpr int rank_of(int v) const {
    return std::popcount(bits_ & ((std::uint32_t{1} << (v - 1)) - 1u));
  }

  /// Ascending vertex labels.
  std::vector<int> vertices() const;

  /// "{1,2,3}"; "{}" for the empty simplex.
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument.
  static Simplex parse(const std::string& text);

  friend constexpr bool operator==(Simplex a, Simplex b) { return a.bits_ == b.bits_; }
  friend constexpr std::strong_ordering operator<=>(Simplex a, Simplex b) {
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    const int sa = a.size();
    const int sb = b.size();
    if (sa != sb) return sa <=> sb;
    // The lowest label where the two sets differ decides the lex order.
    const std::uint32_t diff = a.bits_ ^ b.bits_;
    const std::uint32_t low = diff & (~diff + 1u);
    return (a.bits_ & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Sign (+1/-1) of the permutation sorting the concatenation a.b ascending,
/// for disjoint a, b.
int shuffle_sign(Simplex a, Simplex b);

/// Submasks of `set`, including the empty set and `set` itself, in
/// increasing bit-mask order.
std::vector<Simplex> subsets_of(Simplex set);

/// Subsets of `set` of the given cardinality, in canonical order.
std::vector<Simplex> subsets_of_size(Simplex set, int size);

}  // namespace polyprod

template <>
struct std::hash<polyprod::Simplex> {
  std::size_t operator()(polyprod::Simplex s) const noexcept {
    return std::hash<std::uint32_t>{}(s.bits());
  }
};
