#include <doctest.h>

#include "polyprod/errors.hpp"
#include "polyprod/moment_angle.hpp"
#include "polyprod/structure.hpp"
#include "polyprod/tor.hpp"
#include "support.hpp"

using namespace polyprod;
using namespace polyprod::testing;

namespace {

HomologyGroups groups(std::initializer_list<std::pair<int, HomologyGroup>> entries) {
  HomologyGroups h;
  for (const auto& [n, g] : entries) h.set(n, g);
  return h;
}

HomologyGroup free_rank(std::uint64_t r) { return {r, {}}; }

std::vector<SimplicialComplex> sweep() {
  std::vector<SimplicialComplex> out = {boundary_triangle(), full_triangle(), square(), points(2), points(4),
                                        two_edges(), cx(1, {{1}}), cx(3, {{1, 2}, {3}}),
                                        SimplicialComplex::empty_complex(Simplex::range(2))};
  std::mt19937 rng(43);
  for (int i = 0; i < 30; ++i) out.push_back(random_complex(rng, 2 + i % 4, 1 + i % 4, 3));
  return out;
}

}  // namespace

TEST_CASE("real moment-angle model") {
  const auto z = Coefficients::integers();
  CHECK(build_ma_model(points(2), MomentAnglePair::Real).chains.squares_to_zero());
  CHECK(real_ma_homology(points(2), z) == groups({{1, free_rank(1)}}));
  CHECK(real_ma_homology(full_triangle(), z).is_zero());
  CHECK(real_ma_homology(boundary_triangle(), z) == groups({{2, free_rank(1)}}));
  // 4-cycle: a product of two circles.
  CHECK(real_ma_homology(square(), z) == groups({{1, free_rank(2)}, {2, free_rank(1)}}));
  std::size_t cells = 0;
  for (const auto& layer : build_ma_model(points(2), MomentAnglePair::Real).cells) cells += layer.size();
  CHECK(cells == 8);
}

TEST_CASE("complex moment-angle model") {
  const auto z = Coefficients::integers();
  CHECK(complex_ma_homology(points(2), z) == groups({{3, free_rank(1)}}));
  CHECK(complex_ma_homology(square(), z) == groups({{3, free_rank(2)}, {6, free_rank(1)}}));
  CHECK(complex_ma_homology(full_triangle(), z).is_zero());
  CHECK(complex_ma_homology(boundary_triangle(), z) == groups({{5, free_rank(1)}}));
  for (const auto& k : sweep()) {
    CHECK(build_ma_model(k, MomentAnglePair::Complex).chains.squares_to_zero());
    CHECK(build_ma_model(k, MomentAnglePair::Real).chains.squares_to_zero());
  }
  CHECK_THROWS_AS(build_ma_model(SimplicialComplex::full_simplex(Simplex::range(9)), MomentAnglePair::Real), Error);
}

TEST_CASE("predicted moment-angle homology") {
  const auto z = Coefficients::integers();
  CHECK(predicted_ma_homology(points(2), z, MomentAnglePair::Complex) == groups({{3, free_rank(1)}}));
  CHECK(predicted_ma_homology(full_triangle(), z, MomentAnglePair::Real).is_zero());
  CHECK(predicted_ma_homology(full_triangle(), z, MomentAnglePair::Complex).is_zero());
  CHECK(predicted_ma_homology(boundary_triangle(), z, MomentAnglePair::Real) == groups({{2, free_rank(1)}}));
}

TEST_CASE("decomposition holds on every sample") {
  for (const auto& k : sweep()) {
    for (auto c : {Coefficients::integers(), Coefficients::prime_field(2), Coefficients::prime_field(3)}) {
      CAPTURE(k.to_string());
      const auto r = verify_decomposition(k, c);
      CHECK(r.match);
      CHECK(r.models.size() == 2);
    }
  }
  const auto sq = verify_decomposition(square(), Coefficients::integers());
  REQUIRE(sq.match);
  const auto& cm = sq.models[1];
  CHECK(cm.pair == MomentAnglePair::Complex);
  CHECK(cm.computed.rank(3) == 2);
  CHECK(cm.computed.rank(4) == 0);
  CHECK(cm.computed.rank(5) == 0);
  CHECK(cm.computed.rank(6) == 1);
  CHECK(verify_decomposition(cx(1, {{1}}), Coefficients::integers()).match);
}

TEST_CASE("projective plane model carries 2-torsion") {
  const auto z = Coefficients::integers();
  const auto rp = rp2_6();
  const auto h = complex_ma_homology(rp, z);
  CHECK_FALSE(h.is_torsion_free());
  // I = [6] contributes H̃_1(RP2) = Z/2 in degree 1 + 6 + 1.
  CHECK(h.at(8).torsion == std::vector<BigInt>{2});
  CHECK(h == predicted_ma_homology(rp, z, MomentAnglePair::Complex));
  CHECK_THROWS_AS(verify_wedge_of_spheres(rp), Error);
}

TEST_CASE("complex model dimensions match the koszul table") {
  for (const auto& k : sweep()) {
    for (auto c : {Coefficients::prime_field(2), Coefficients::rationals()}) {
      const auto t = koszul_table(k, c);
      std::map<int, std::uint64_t> by_total;
      for (const auto& [b, n] : t.entries)
        if (!(b == Bidegree{0, 0})) by_total[b.internal - b.hom] += n;
      const auto h = complex_ma_homology(k, c);
      std::map<int, std::uint64_t> ranks;
      for (const auto& [n, g] : h.groups()) ranks[n] = g.rank;
      CHECK(ranks == by_total);
      CHECK(t.total() == h.total_rank() + 1);
    }
  }
}

TEST_CASE("wedge of spheres") {
  const auto p = verify_wedge_of_spheres(points(4));
  CHECK(p.match);
  const auto& h = p.models[0].computed;
  CHECK(h.rank(3) == 6);
  CHECK(h.rank(4) == 8);
  CHECK(h.rank(5) == 3);
  CHECK(verify_wedge_of_spheres(boundary_triangle()).match);
  CHECK_THROWS_AS(verify_wedge_of_spheres(square()), Error);
  for (const auto& k : sweep()) {
    if (k.has_ghost_vertex() || !is_sequentially_cm(alexander_dual(k), Coefficients::integers())) continue;
    CAPTURE(k.to_string());
    const auto r = verify_wedge_of_spheres(k);
    CHECK(r.match);
    for (const auto& f : r.failures) MESSAGE(f);
  }
}
