#include "polyprod/tor.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyprod {

std::string Bidegree::to_string() const { return "(" + std::to_string(hom) + "," + std::to_string(internal) + ")"; }

void BigradedBettiTable::add(Bidegree b, std::uint64_t n) {
  if (n > 0) entries[b] += n;
}

std::uint64_t BigradedBettiTable::at(Bidegree b) const {
  const auto it = entries.find(b);
  return it == entries.end() ? 0 : it->second;
}

std::uint64_t BigradedBettiTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& [b, n] : entries) sum += n;
  return sum;
}

std::string BigradedBettiTable::to_string() const {
  std::string out = "{";
  for (const auto& [b, n] : entries) {
    if (out.size() > 1) out += ", ";
    out += b.to_string() + ":" + std::to_string(n);
  }
  return out + "}";
}

BigradedBettiTable hochster_table(const SimplicialComplex& k, const Coefficients& c) {
  if (!c.is_field()) throw std::invalid_argument("hochster_table needs field coefficients");
  BigradedBettiTable t;
  if (k.is_void()) return t;
  for (Simplex i_set : subsets_of(k.ground())) {
    const int j = i_set.size();
    const auto h = reduced_homology(induced(k, i_set), c);
    for (const auto& [n, g] : h.groups()) t.add({j - n - 1, 2 * j}, g.rank);
  }
  return t;
}

std::string KoszulCell::to_string() const { return "(" + sigma.to_string() + "," + omega.to_string() + ")"; }

std::vector<std::pair<KoszulCell, int>> koszul_differential(const SimplicialComplex& k, const KoszulCell& cell) {
  std::vector<std::pair<KoszulCell, int>> out;
  const auto w = cell.omega.vertices();
  for (std::size_t t = 0; t < w.size(); ++t) {
    const Simplex s = cell.sigma.with(w[t]);
    if (!k.contains(s)) continue;
    out.push_back({{s, cell.omega.without(w[t])}, t % 2 == 0 ? 1 : -1});
  }
  return out;
}

std::optional<std::pair<KoszulCell, int>> koszul_product(const SimplicialComplex& k, const KoszulCell& a,
                                                         const KoszulCell& b) {
  const Simplex all[4] = {a.sigma, a.omega, b.sigma, b.omega};
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y)
      if (all[x].intersects(all[y])) return std::nullopt;
  const Simplex sigma = a.sigma.unite(b.sigma);
  if (!k.contains(sigma)) return std::nullopt;
  return std::make_pair(KoszulCell{sigma, a.omega.unite(b.omega)}, shuffle_sign(a.omega, b.omega));
}

KoszulBasis::KoszulBasis(const SimplicialComplex& k) : k_(k) {
  std::vector<KoszulCell> cells;
  for (Simplex sigma : k.faces())
    for (Simplex omega : subsets_of(k.ground().minus(sigma))) cells.push_back({sigma, omega});
  std::sort(cells.begin(), cells.end(), [](const KoszulCell& x, const KoszulCell& y) {
    const Simplex ux = x.sigma.unite(x.omega);
    const Simplex uy = y.sigma.unite(y.omega);
    if (ux != uy) return ux < uy;
    return x.sigma < y.sigma;
  });
  size_ = cells.size();
  for (const auto& c : cells) {
    auto& comp = components_[c.bidegree()];
    index_.emplace(c, comp.size());
    comp.push_back(c);
  }
}

std::vector<Bidegree> KoszulBasis::bidegrees() const {
  std::vector<Bidegree> out;
  for (const auto& [b, cells] : components_) out.push_back(b);
  return out;
}

const std::vector<KoszulCell>& KoszulBasis::component(Bidegree b) const {
  static const std::vector<KoszulCell> none;
  const auto it = components_.find(b);
  return it == components_.end() ? none : it->second;
}

std::optional<std::size_t> KoszulBasis::index(const KoszulCell& cell) const {
  const auto it = index_.find(cell);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IntMatrix KoszulBasis::differential(Bidegree b) const {
  const auto& cols = component(b);
  const auto& rows = component({b.hom - 1, b.internal});
  IntMatrix d(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [cell, sign] : koszul_differential(k_, cols[c])) d(*index(cell), c) = sign;
  return d;
}

BigradedBettiTable koszul_table(const SimplicialComplex& k, const Coefficients& c) {
  if (k.is_void()) return {};
  auto from_model = [&](auto field) {
    const KoszulBasis basis(k);
    BigradedBettiTable t;
    for (Bidegree b : basis.bidegrees()) {
      const std::size_t dim = basis.component(b).size();
      const std::size_t out_rank = rank(field, basis.differential(b));
      const std::size_t in_rank = rank(field, basis.differential({b.hom + 1, b.internal}));
      t.add(b, dim - out_rank - in_rank);
    }
    return t;
  };
  switch (c.kind()) {
    case Coefficients::Kind::PrimeField: return from_model(PrimeField(c.prime()));
    case Coefficients::Kind::Rationals: return from_model(RationalField{});
    case Coefficients::Kind::Integers: break;
  }
  throw std::invalid_argument("koszul_table needs field coefficients");
}

GolodVerdict is_golod(const SimplicialComplex& k, const Coefficients& c) {
  switch (c.kind()) {
    case Coefficients::Kind::PrimeField: return golod_check(KoszulModel<PrimeField>(k, PrimeField(c.prime())));
    case Coefficients::Kind::Rationals: return golod_check(KoszulModel<RationalField>(k, RationalField{}));
    case Coefficients::Kind::Integers: break;
  }
  throw std::invalid_argument("is_golod needs field coefficients");
}

}  // namespace polyprod
