#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "polyprod/errors.hpp"
#include "polyprod/homology.hpp"
#include "polyprod/structure.hpp"
#include "support.hpp"

using namespace polyprod;
using namespace polyprod::testing;

namespace {

// Oracle: the definition read literally. The faces of F lying in some
// earlier facet must form a nonempty family whose maximal members all have
// size |F| - 1.
bool shelling_step_oracle(Simplex f, const std::vector<Simplex>& earlier) {
  std::vector<Simplex> common;
  for (Simplex s : subsets_of(f)) {
    for (Simplex g : earlier)
      if (s.is_subset_of(g)) {
        common.push_back(s);
        break;
      }
  }
  if (common.empty()) return false;
  for (Simplex s : common) {
    const bool maximal = std::none_of(common.begin(), common.end(),
                                      [s](Simplex t) { return t != s && s.is_subset_of(t); });
    if (maximal && s.size() != f.size() - 1) return false;
  }
  return true;
}

bool shellable_oracle(const SimplicialComplex& k) {
  std::vector<Simplex> order = k.facets();
  do {
    bool ok = true;
    for (std::size_t i = 1; i < order.size() && ok; ++i)
      ok = shelling_step_oracle(order[i], {order.begin(), order.begin() + static_cast<long>(i)});
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// For complexes of dimension <= 1, sequential Cohen-Macaulayness reduces to
// connectivity of the graph formed by the edges.
bool graph_scm_oracle(const SimplicialComplex& k) {
  std::vector<int> parent(33);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  Simplex touched;
  for (Simplex f : k.facets()) {
    if (f.size() != 2) continue;
    const auto v = f.vertices();
    parent[find(v[0])] = find(v[1]);
    touched = touched.unite(f);
  }
  std::set<int> roots;
  for (int v : touched.vertices()) roots.insert(find(v));
  return roots.size() <= 1;
}

std::vector<SimplicialComplex> small_complexes() {
  std::vector<SimplicialComplex> out = {boundary_triangle(), full_triangle(), square(), points(3),
                                        two_edges(), k4_graph(), cx(3, {{1, 2}, {3}}),
                                        cx(4, {{1, 2, 3}, {3, 4}}), cx(4, {{1, 2, 3}, {4}}),
                                        cx(5, {{1, 2, 3}, {3, 4, 5}}), cx(4, {{1, 2, 3}, {2, 3, 4}})};
  std::mt19937 rng(5);
  for (int i = 0; i < 120; ++i) {
    auto k = random_complex(rng, 3 + i % 3, 1 + i % 4, 3);
    if (k.facets().size() <= 6) out.push_back(std::move(k));
  }
  return out;
}

}  // namespace

TEST_CASE("verify_shelling examples") {
  CHECK(verify_shelling(boundary_triangle(), {sx({1, 2}), sx({1, 3}), sx({2, 3})}));
  CHECK(verify_shelling(full_triangle(), {sx({1, 2, 3})}));
  CHECK_FALSE(verify_shelling(two_edges(), {sx({1, 2}), sx({3, 4})}));
  CHECK_FALSE(verify_shelling(two_edges(), {sx({3, 4}), sx({1, 2})}));
  CHECK_FALSE(verify_shelling(square(), {sx({1, 2}), sx({3, 4}), sx({2, 3}), sx({1, 4})}));
  CHECK(verify_shelling(square(), {sx({1, 2}), sx({2, 3}), sx({3, 4}), sx({1, 4})}));
  // Non-pure: the lower-dimensional facet must meet the union in a (-1)-dim face.
  CHECK(verify_shelling(cx(3, {{1, 2}, {3}}), {sx({1, 2}), sx({3})}));
  CHECK_FALSE(verify_shelling(cx(3, {{1, 2}, {3}}), {sx({3}), sx({1, 2})}));
  CHECK(verify_shelling(points(3), {sx({2}), sx({1}), sx({3})}));
  CHECK_THROWS_AS(verify_shelling(square(), {sx({1, 2})}), Error);
  CHECK_THROWS_AS(verify_shelling(square(), {sx({1, 2}), sx({1, 2}), sx({3, 4}), sx({1, 4})}), Error);
}

TEST_CASE("find_shelling examples") {
  const auto t = find_shelling(boundary_triangle());
  REQUIRE(t.yes());
  CHECK(verify_shelling(boundary_triangle(), std::get<ShellingOrder>(t.witness)));
  const auto e = find_shelling(two_edges());
  CHECK(e.answer == Answer::No);
  CHECK(find_shelling(SimplicialComplex::full_simplex(Simplex::range(5))).yes());
  CHECK(find_shelling(SimplicialComplex::empty_complex(Simplex::range(2))).yes());
  // Not Cohen-Macaulay over F2, hence not shellable.
  CHECK(find_shelling(rp2_6()).answer == Answer::No);
  CHECK(find_shelling(rp2_6(), 2).answer == Answer::Unknown);
  CHECK(find_shelling(square(), 2).answer == Answer::Unknown);
}

TEST_CASE("find_shelling agrees with exhaustive search over all orders") {
  for (const auto& k : small_complexes()) {
    const auto v = find_shelling(k);
    CAPTURE(k.to_string());
    CHECK(v.yes() == shellable_oracle(k));
    if (v.yes()) CHECK(verify_shelling(k, std::get<ShellingOrder>(v.witness)));
  }
}

TEST_CASE("sequentially Cohen-Macaulay examples") {
  for (auto c : {Coefficients::integers(), Coefficients::rationals(), Coefficients::prime_field(2),
                 Coefficients::prime_field(3)}) {
    CHECK(is_sequentially_cm(boundary_triangle(), c));
    CHECK_FALSE(is_sequentially_cm(two_edges(), c));
    CHECK(is_sequentially_cm(points(4), c));
    CHECK(is_sequentially_cm(cx(3, {{1, 2}, {3}}), c));
  }
  CHECK(is_sequentially_cm(rp2_6(), Coefficients::rationals()));
  CHECK(is_sequentially_cm(rp2_6(), Coefficients::prime_field(3)));
  CHECK_FALSE(is_sequentially_cm(rp2_6(), Coefficients::prime_field(2)));
  CHECK_FALSE(is_sequentially_cm(rp2_6(), Coefficients::integers()));
  CHECK(is_sequentially_cm(SimplicialComplex::void_complex(Simplex::range(2)), Coefficients::integers()));
}

TEST_CASE("sequential Cohen-Macaulayness of graphs is edge connectivity") {
  std::mt19937 rng(17);
  for (int i = 0; i < 80; ++i) {
    const auto k = random_complex(rng, 3 + i % 4, 1 + i % 5, 2);
    CAPTURE(k.to_string());
    CHECK(is_sequentially_cm(k, Coefficients::integers()) == graph_scm_oracle(k));
  }
}

TEST_CASE("vertex decomposability") {
  CHECK(is_vertex_decomposable(full_triangle()).yes());
  const auto t = is_vertex_decomposable(boundary_triangle());
  REQUIRE(t.yes());
  CHECK(verify_shedding_tree(boundary_triangle(), std::get<SheddingTree>(t.witness)));
  CHECK(is_vertex_decomposable(two_edges()).answer == Answer::No);
  CHECK(is_vertex_decomposable(square()).yes());
  // Not shellable, so not vertex decomposable.
  CHECK(is_vertex_decomposable(rp2_6()).answer == Answer::No);
  CHECK_FALSE(verify_shedding_tree(boundary_triangle(), SheddingTree{}));
}

TEST_CASE("shifted") {
  const auto k = cx(3, {{1, 2}, {1, 3}});
  const auto v = is_shifted(k, VertexOrder{{1, 2, 3}});
  CHECK(v.yes());
  CHECK(is_shifted(k, VertexOrder{{2, 1, 3}}).answer == Answer::No);
  const auto sq = is_shifted(square());
  CHECK(sq.answer == Answer::No);
  CHECK(sq.nodes == 24);
  CHECK(is_shifted(SimplicialComplex::full_simplex(Simplex::range(4))).yes());
  CHECK(is_shifted(boundary_triangle()).yes());
  CHECK(is_shifted(two_edges()).answer == Answer::No);
  CHECK_THROWS_AS(is_shifted_under(k, VertexOrder{{1, 2}}), Error);
}

TEST_CASE("collapsibility") {
  const auto t = greedy_collapse(full_triangle());
  REQUIRE(t.yes());
  CHECK(verify_collapse(full_triangle(), std::get<CollapseSequence>(t.witness)));
  CHECK(greedy_collapse(boundary_triangle()).answer == Answer::Unknown);
  const auto pt = greedy_collapse(cx(1, {{1}}));
  REQUIRE(pt.yes());
  CHECK(std::get<CollapseSequence>(pt.witness).empty());
  CHECK(greedy_collapse(SimplicialComplex::full_simplex(Simplex::range(5))).yes());
  CHECK(greedy_collapse(cx(4, {{1, 2, 3}, {3, 4}})).yes());
  CHECK(greedy_collapse(points(2)).answer == Answer::Unknown);
  CHECK_FALSE(verify_collapse(full_triangle(), {{sx({1}), sx({1, 2})}}));
}

TEST_CASE("extractibility certificate examples") {
  const auto f2 = Coefficients::prime_field(2);
  const auto t = extractibility_certificate(boundary_triangle(), f2);
  REQUIRE(t.yes());
  CHECK(std::get<ExtractionTree>(t.witness).condition == 1);
  const auto p = extractibility_certificate(points(4), f2);
  REQUIRE(p.yes());
  const auto& tree = std::get<ExtractionTree>(p.witness);
  CHECK(tree.condition == 2);
  CHECK(tree.children.size() == 4);
  for (auto c : {f2, Coefficients::rationals(), Coefficients::prime_field(3)}) {
    const auto sq = extractibility_certificate(square(), c);
    CHECK(sq.answer == Answer::No);
    CHECK(sq.detail.find("degree 2") != std::string::npos);
  }
  CHECK_THROWS_AS(extractibility_certificate(cx(3, {{1, 2}}), f2), Error);
  CHECK_THROWS_AS(extractibility_certificate(square(), Coefficients::integers()), std::invalid_argument);
}

TEST_CASE("implication chain on random complexes") {
  std::mt19937 rng(23);
  for (int i = 0; i < 60; ++i) {
    const auto k = random_complex(rng, 3 + i % 4, 1 + i % 4, 3);
    CAPTURE(k.to_string());
    const bool shifted = is_shifted(k).yes();
    const auto vd = is_vertex_decomposable(k);
    const auto sh = find_shelling(k);
    if (shifted) CHECK(vd.yes());
    if (vd.yes()) {
      CHECK(verify_shedding_tree(k, std::get<SheddingTree>(vd.witness)));
      CHECK(sh.yes());
    }
    if (sh.yes()) CHECK(is_sequentially_cm(k, Coefficients::integers()));
    const auto col = greedy_collapse(k);
    if (col.yes()) {
      CHECK(verify_collapse(k, std::get<CollapseSequence>(col.witness)));
      CHECK(is_acyclic(alexander_dual(k), Coefficients::integers()));
    }
  }
}

TEST_CASE("sequential Cohen-Macaulayness of the dual passes to vertex deletions") {
  std::mt19937 rng(29);
  for (int i = 0; i < 40; ++i) {
    const auto k = random_complex(rng, 3 + i % 3, 1 + i % 4, 3);
    for (auto c : {Coefficients::prime_field(2), Coefficients::rationals()}) {
      if (!is_sequentially_cm(alexander_dual(k), c)) continue;
      for (int v : k.ground().vertices()) {
        const auto d = alexander_dual(deletion(k, sx({v})));
        CHECK(is_sequentially_cm(d, c));
      }
    }
  }
}
