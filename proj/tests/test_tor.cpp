#include <doctest.h>

#include <map>

#include "polyprod/errors.hpp"
#include "polyprod/homology.hpp"
#include "polyprod/structure.hpp"
#include "polyprod/tor.hpp"
#include "support.hpp"

using namespace polyprod;
using namespace polyprod::testing;

namespace {

using Combination = std::map<KoszulCell, long long>;

void accumulate(Combination& into, const KoszulCell& c, long long x) {
  if ((into[c] += x) == 0) into.erase(c);
}

Combination d_of(const SimplicialComplex& k, const Combination& x) {
  Combination out;
  for (const auto& [cell, a] : x)
    for (const auto& [t, s] : koszul_differential(k, cell)) accumulate(out, t, a * s);
  return out;
}

Combination times(const SimplicialComplex& k, const Combination& x, const Combination& y) {
  Combination out;
  for (const auto& [c1, a] : x)
    for (const auto& [c2, b] : y)
      if (auto p = koszul_product(k, c1, c2)) accumulate(out, p->first, a * b * p->second);
  return out;
}

Combination single(const KoszulCell& c) { return {{c, 1}}; }

std::vector<KoszulCell> all_cells(const SimplicialComplex& k) {
  std::vector<KoszulCell> out;
  const KoszulBasis basis(k);
  for (Bidegree b : basis.bidegrees())
    for (const auto& c : basis.component(b)) out.push_back(c);
  return out;
}

std::vector<SimplicialComplex> sweep() {
  std::vector<SimplicialComplex> out = {boundary_triangle(), full_triangle(), square(), points(2), points(4),
                                        two_edges(), cx(3, {{1, 2}, {3}}),
                                        SimplicialComplex::empty_complex(Simplex::range(2))};
  std::mt19937 rng(41);
  for (int i = 0; i < 30; ++i) out.push_back(random_complex(rng, 2 + i % 4, 1 + i % 4, 3));
  return out;
}

BigradedBettiTable table(std::initializer_list<std::pair<Bidegree, std::uint64_t>> entries) {
  BigradedBettiTable t;
  for (const auto& [b, n] : entries) t.add(b, n);
  return t;
}

}  // namespace

TEST_CASE("hochster tables") {
  const auto f2 = Coefficients::prime_field(2);
  CHECK(hochster_table(points(2), f2) == table({{{0, 0}, 1}, {{1, 4}, 1}}));
  CHECK(hochster_table(full_triangle(), f2) == table({{{0, 0}, 1}}));
  CHECK(hochster_table(square(), f2) == table({{{0, 0}, 1}, {{1, 4}, 2}, {{2, 8}, 1}}));
  CHECK(hochster_table(square(), f2).to_string() == "{(0,0):1, (1,4):2, (2,8):1}");
  CHECK_THROWS_AS(hochster_table(square(), Coefficients::integers()), std::invalid_argument);
}

TEST_CASE("koszul tables") {
  const auto q = Coefficients::rationals();
  CHECK(KoszulBasis(points(2)).size() == 8);
  CHECK(koszul_table(points(2), q) == table({{{0, 0}, 1}, {{1, 4}, 1}}));
  CHECK(koszul_table(full_triangle(), q) == table({{{0, 0}, 1}}));
  CHECK(koszul_table(square(), q) == hochster_table(square(), q));
}

TEST_CASE("koszul tables agree with hochster over several fields") {
  for (const auto& k : sweep()) {
    for (auto c : {Coefficients::prime_field(2), Coefficients::prime_field(3), Coefficients::rationals()}) {
      CAPTURE(k.to_string());
      const auto h = hochster_table(k, c);
      CHECK(koszul_table(k, c) == h);
      CHECK(h.at({0, 0}) == 1);
    }
  }
  CHECK(koszul_table(rp2_6(), Coefficients::prime_field(2)) == hochster_table(rp2_6(), Coefficients::prime_field(2)));
  CHECK_FALSE(hochster_table(rp2_6(), Coefficients::prime_field(2)) ==
              hochster_table(rp2_6(), Coefficients::rationals()));
}

TEST_CASE("model differential squares to zero and satisfies Leibniz") {
  for (const auto& k : sweep()) {
    if (k.m() > 4) continue;
    const auto cells = all_cells(k);
    for (const auto& c : cells) CHECK(d_of(k, d_of(k, single(c))).empty());
    for (const auto& a : cells) {
      for (const auto& b : cells) {
        const auto lhs = d_of(k, times(k, single(a), single(b)));
        Combination rhs = times(k, d_of(k, single(a)), single(b));
        const long long sign = a.omega.size() % 2 == 0 ? 1 : -1;
        for (const auto& [cell, x] : times(k, single(a), d_of(k, single(b)))) accumulate(rhs, cell, sign * x);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("unit and products") {
  const KoszulModel<PrimeField> m(square(), PrimeField(3));
  const auto unit = unit_class(m);
  const Bidegree b14{1, 4};
  for (const auto& rep : m.homology(b14)) {
    const TorClass<PrimeField> a{&m, b14, rep};
    CHECK(tor_product(unit, a).rep == rep);
    CHECK(tor_product(a, unit).rep == rep);
  }
  auto cls = [&](KoszulCell c) {
    TorClass<PrimeField> out{&m, c.bidegree(), m.zero(c.bidegree())};
    out.rep[*m.basis().index(c)] = 1;
    return out;
  };
  const auto a = cls({sx({1}), sx({3})});
  const auto b = cls({sx({2}), sx({4})});
  CHECK(m.is_cycle(a.bidegree, a.rep));
  CHECK(m.is_cycle(b.bidegree, b.rep));
  CHECK_FALSE(a.is_zero());
  const auto ab = tor_product(a, b);
  CHECK(ab.bidegree == Bidegree{2, 8});
  CHECK_FALSE(ab.is_zero());
  // Overlapping supports multiply to zero.
  const auto c = cls({sx({3}), sx({1})});
  CHECK(tor_product(a, c).is_zero());
  const KoszulModel<PrimeField> other(square(), PrimeField(3));
  CHECK_THROWS_AS(tor_product(a, unit_class(other)), Error);
}

TEST_CASE("golod examples") {
  for (auto c : {Coefficients::prime_field(2), Coefficients::prime_field(3), Coefficients::rationals()}) {
    for (int n = 2; n <= 4; ++n) CHECK(is_golod(points(n), c).golod);
    const auto g = is_golod(full_triangle(), c);
    CHECK(g.golod);
    CHECK(g.products_checked == 0);
    const auto sq = is_golod(square(), c);
    REQUIRE_FALSE(sq.golod);
    REQUIRE(sq.witness);
    CHECK(sq.witness->left == Bidegree{1, 4});
    CHECK(sq.witness->right == Bidegree{1, 4});
    CHECK(sq.witness->product == Bidegree{2, 8});
  }
}

TEST_CASE("sequentially Cohen-Macaulay duals give Golod complexes") {
  // Two ghost vertices make Tor an exterior algebra with nonzero products.
  CHECK_FALSE(is_golod(SimplicialComplex::empty_complex(Simplex::range(2)), Coefficients::rationals()).golod);
  for (const auto& k : sweep()) {
    if (k.has_ghost_vertex()) continue;
    for (auto c : {Coefficients::prime_field(2), Coefficients::prime_field(3), Coefficients::rationals()}) {
      if (!is_sequentially_cm(alexander_dual(k), c)) continue;
      CAPTURE(k.to_string());
      CHECK(is_golod(k, c).golod);
    }
  }
}

TEST_CASE("baskakov product on the square") {
  const PrimeField f(5);
  const auto sq = square();
  const auto alpha = cohomology_basis(f, sq, sx({1, 3}), 0);
  const auto beta = cohomology_basis(f, sq, sx({2, 4}), 0);
  REQUIRE(alpha.size() == 1);
  REQUIRE(beta.size() == 1);
  const auto prod = baskakov_product(f, sq, alpha[0], beta[0]);
  CHECK(prod.degree == 1);
  CHECK(prod.support == sq.ground());
  // Nonzero in H^1: not in the image of the coboundary from 0-cochains.
  const auto coboundaries = column_space(f, boundary_matrix(sq, 1).transposed());
  CHECK_FALSE(coboundaries.contains(prod.values));
  const Cochain<PrimeField> zero{sx({1, 3}), 0, FieldVector<PrimeField>(2, 0)};
  const auto z = baskakov_product(f, sq, zero, beta[0]);
  CHECK(std::all_of(z.values.begin(), z.values.end(), [](auto x) { return x == 0; }));
  const auto p3 = points(3);
  CHECK(cohomology_basis(f, p3, sx({1}), 0).empty());
  const auto overlap = baskakov_product(f, sq, alpha[0], alpha[0]);
  CHECK(std::all_of(overlap.values.begin(), overlap.values.end(), [](auto x) { return x == 0; }));
}

TEST_CASE("baskakov product matches the model product under the hochster map") {
  for (const auto& k : sweep()) {
    for (std::uint32_t p : {2u, 3u, 7u}) {
      const PrimeField f(p);
      const KoszulModel<PrimeField> m(k, f);
      const auto subsets = subsets_of(k.ground());
      for (Simplex i_set : subsets) {
        for (int a_deg = -1; a_deg < i_set.size(); ++a_deg) {
          const auto alphas = cohomology_basis(f, k, i_set, a_deg);
          for (const auto& alpha : alphas) {
            const auto ha = hochster_class(m, alpha);
            CHECK(m.is_cycle(ha.bidegree, ha.rep));
            CHECK_FALSE(ha.is_zero());
            for (Simplex j_set : subsets_of(k.ground().minus(i_set))) {
              for (int b_deg = -1; b_deg < j_set.size(); ++b_deg) {
                for (const auto& beta : cohomology_basis(f, k, j_set, b_deg)) {
                  const auto lhs = hochster_class(m, baskakov_product(f, k, alpha, beta));
                  const auto rhs = tor_product(ha, hochster_class(m, beta));
                  CHECK(lhs.bidegree == rhs.bidegree);
                  CHECK(lhs.rep == rhs.rep);
                }
              }
            }
          }
        }
      }
    }
  }
}
