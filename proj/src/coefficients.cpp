#include "polyprod/coefficients.hpp"

#include <stdexcept>

namespace polyprod {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Coefficients Coefficients::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  return Coefficients(Kind::PrimeField, p);
}

Coefficients Coefficients::parse(const std::string& name) {
  if (name == "Z") return integers();
  if (name == "Q") return rationals();
  if (name.size() >= 2 && name[0] == 'F') {
    const std::string digits = name.substr(1);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 9) {
      return prime_field(static_cast<std::uint32_t>(std::stoul(digits)));
    }
  }
  throw std::invalid_argument("unknown coefficients: " + name);
}

std::string Coefficients::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F" + std::to_string(p_);
  }
  return "?";
}

}  // namespace polyprod
