#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace polyprod {

/// Coefficient ring for (co)homology: Z, F_p or Q.
class Coefficients {
 public:
  enum class Kind { Integers, PrimeField, Rationals };

  static Coefficients integers() { return Coefficients(Kind::Integers, 0); }
  static Coefficients rationals() { return Coefficients(Kind::Rationals, 0); }
  /// Throws std::invalid_argument unless p is prime.
  static Coefficients prime_field(std::uint32_t p);

  /// Accepts "Z", "Q", "F<p>" (e.g. "F2"); throws std::invalid_argument.
  static Coefficients parse(const std::string& name);

  Kind kind() const { return kind_; }
  /// The prime for PrimeField, 0 otherwise.
  std::uint32_t prime() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  /// 0 for Z and Q.
  std::uint32_t characteristic() const { return p_; }

  /// "Z", "Q", "F2", ...
  std::string name() const;

  friend bool operator==(const Coefficients&, const Coefficients&) = default;
  friend auto operator<=>(const Coefficients&, const Coefficients&) = default;

 private:
  Coefficients(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

}  // namespace polyprod
