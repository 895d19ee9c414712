#include "polyprod/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyprod {

Simplex Simplex::from_vertices(std::span<const int> vertices) {
  std::uint32_t bits = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertex) {
      throw std::invalid_argument("vertex label out of range: " + std::to_string(v));
    }
    const std::uint32_t bit = std::uint32_t{1} << (v - 1);
    if (bits & bit) throw std::invalid_argument("repeated vertex label: " + std::to_string(v));
    bits |= bit;
  }
  return from_bits(bits);
}

Simplex Simplex::range(int m) {
  if (m < 0 || m > kMaxVertex) throw std::invalid_argument("index set size out of range");
  if (m == kMaxVertex) return from_bits(~std::uint32_t{0});
  return from_bits((std::uint32_t{1} << m) - 1u);
}

Simplex Simplex::with(int v) const {
  if (v < 1 || v > kMaxVertex) throw std::invalid_argument("vertex label out of range");
  return from_bits(bits_ | (std::uint32_t{1} << (v - 1)));
}

Simplex Simplex::without(int v) const {
  if (v < 1 || v > kMaxVertex) return *this;
  return from_bits(bits_ & ~(std::uint32_t{1} << (v - 1)));
}

std::vector<int> Simplex::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string Simplex::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

Simplex Simplex::parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw std::invalid_argument("malformed simplex: " + text);
  }
  std::vector<int> labels;
  const std::string body = text.substr(1, text.size() - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    const std::size_t comma = body.find(',', pos);
    const std::string token = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("malformed simplex: " + text);
    }
    labels.push_back(std::stoi(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos == body.size()) throw std::invalid_argument("malformed simplex: " + text);
  }
  if (!std::is_sorted(labels.begin(), labels.end())) {
    throw std::invalid_argument("simplex labels must be increasing: " + text);
  }
  return from_vertices(labels);
}

int shuffle_sign(Simplex a, Simplex b) {
  // Count pairs (x in a, y in b) with x > y.
  int inversions = 0;
  for (int y : b.vertices()) inversions += a.size() - a.rank_of(y);
  return (inversions & 1) ? -1 : 1;
}

std::vector<Simplex> subsets_of(Simplex set) {
  std::vector<Simplex> out;
  out.reserve(std::size_t{1} << set.size());
  const std::uint32_t full = set.bits();
  std::uint32_t sub = 0;
  while (true) {
    out.push_back(Simplex::from_bits(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
  return out;
}

std::vector<Simplex> subsets_of_size(Simplex set, int size) {
  std::vector<Simplex> out;
  for (Simplex s : subsets_of(set)) {
    if (s.size() == size) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polyprod
