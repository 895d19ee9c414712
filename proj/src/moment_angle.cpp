#include "polyprod/moment_angle.hpp"

#include <algorithm>
#include <map>

#include "polyprod/errors.hpp"
#include "polyprod/spanning.hpp"
#include "polyprod/structure.hpp"

namespace polyprod {

const char* to_string(MomentAnglePair pair) { return pair == MomentAnglePair::Real ? "real" : "complex"; }

namespace {

int cell_dim(MomentAnglePair pair, const KoszulCell& c) {
  return pair == MomentAnglePair::Real ? c.sigma.size() : 2 * c.sigma.size() + c.omega.size();
}

std::vector<std::pair<KoszulCell, int>> cell_boundary(MomentAnglePair pair, const KoszulCell& c) {
  std::vector<std::pair<KoszulCell, int>> out;
  const auto free = c.sigma.vertices();
  for (std::size_t t = 0; t < free.size(); ++t) {
    const int v = free[t];
    const Simplex rest = c.sigma.without(v);
    if (pair == MomentAnglePair::Real) {
      const int sign = t % 2 == 0 ? 1 : -1;
      out.push_back({{rest, c.omega.with(v)}, sign});
      out.push_back({{rest, c.omega}, -sign});
    } else {
      out.push_back({{rest, c.omega.with(v)}, c.omega.rank_of(v) % 2 == 0 ? 1 : -1});
    }
  }
  return out;
}

}  // namespace

CellComplexModel build_ma_model(const SimplicialComplex& k, MomentAnglePair pair) {
  if (k.m() > kMaxModelIndices) {
    throw Error(ErrorCode::Unsupported, "moment-angle models are limited to m <= " + std::to_string(kMaxModelIndices));
  }
  CellComplexModel model;
  model.pair = pair;
  if (k.is_void()) return model;
  std::map<KoszulCell, std::size_t> index;
  for (Simplex sigma : k.faces())
    for (Simplex omega : subsets_of(k.ground().minus(sigma))) {
      const KoszulCell c{sigma, omega};
      const auto n = static_cast<std::size_t>(cell_dim(pair, c));
      if (model.cells.size() <= n) model.cells.resize(n + 1);
      model.cells[n].push_back(c);
    }
  for (auto& layer : model.cells) {
    std::sort(layer.begin(), layer.end());
    for (std::size_t i = 0; i < layer.size(); ++i) index.emplace(layer[i], i);
  }
  // Degree -1 holds the augmentation target.
  std::vector<std::size_t> dims = {1};
  std::vector<IntMatrix> boundaries = {IntMatrix(0, 1)};
  for (std::size_t n = 0; n < model.cells.size(); ++n) {
    const auto& layer = model.cells[n];
    IntMatrix d(dims.back(), layer.size());
    for (std::size_t col = 0; col < layer.size(); ++col) {
      if (n == 0) {
        d(0, col) = 1;
        continue;
      }
      for (const auto& [face, sign] : cell_boundary(pair, layer[col])) d(index.at(face), col) += sign;
    }
    dims.push_back(layer.size());
    boundaries.push_back(std::move(d));
  }
  model.chains = ChainComplex(-1, std::move(dims), std::move(boundaries));
  return model;
}

HomologyGroups real_ma_homology(const SimplicialComplex& k, const Coefficients& c) {
  return homology(build_ma_model(k, MomentAnglePair::Real).chains, c);
}

HomologyGroups complex_ma_homology(const SimplicialComplex& k, const Coefficients& c) {
  return homology(build_ma_model(k, MomentAnglePair::Complex).chains, c);
}

HomologyGroups predicted_ma_homology(const SimplicialComplex& k, const Coefficients& c, MomentAnglePair pair) {
  HomologyGroups out;
  if (k.is_void()) return out;
  for (Simplex i_set : subsets_of(k.ground())) {
    if (i_set.empty()) continue;
    const int shift = pair == MomentAnglePair::Real ? 1 : i_set.size() + 1;
    out.add_shifted(reduced_homology(induced(k, i_set), c), shift);
  }
  return out;
}

ModelComparison compare(MomentAnglePair pair, const HomologyGroups& predicted, const HomologyGroups& computed) {
  ModelComparison out{pair, predicted, computed, {}, true};
  std::map<int, bool> degrees;
  for (const auto& [n, g] : predicted.groups()) degrees[n] = true;
  for (const auto& [n, g] : computed.groups()) degrees[n] = true;
  for (const auto& [n, unused] : degrees) {
    DegreeComparison d{n, predicted.at(n), computed.at(n), predicted.at(n) == computed.at(n)};
    out.match = out.match && d.match;
    out.degrees.push_back(std::move(d));
  }
  return out;
}

DecompositionReport verify_decomposition(const SimplicialComplex& k, const Coefficients& c) {
  DecompositionReport report;
  report.coefficients = c;
  for (auto pair : {MomentAnglePair::Real, MomentAnglePair::Complex}) {
    const auto computed = homology(build_ma_model(k, pair).chains, c);
    report.models.push_back(compare(pair, predicted_ma_homology(k, c, pair), computed));
    report.match = report.match && report.models.back().match;
  }
  return report;
}

DecompositionReport verify_wedge_of_spheres(const SimplicialComplex& k) {
  const auto z = Coefficients::integers();
  if (!is_sequentially_cm(alexander_dual(k), z)) {
    throw Error(ErrorCode::NotApplicable, "Alexander dual is not sequentially Cohen-Macaulay over Z");
  }
  DecompositionReport report;
  report.coefficients = z;
  const auto computed = complex_ma_homology(k, z);
  report.models.push_back(compare(MomentAnglePair::Complex, predicted_ma_homology(k, z, MomentAnglePair::Complex),
                                  computed));
  if (!report.models.back().match) report.failures.push_back("complex model differs from the prediction");
  if (!computed.is_torsion_free()) report.failures.push_back("torsion in the complex model");
  for (int n = 0; n <= 2; ++n)
    if (!computed.at(n).is_zero()) report.failures.push_back("nonzero homology in degree " + std::to_string(n));

  SphereList smashed;
  for (Simplex i_set : subsets_of(k.ground())) {
    if (i_set.empty()) continue;
    const auto sub = induced(k, i_set);
    const auto spheres = dual_wedge_prediction(sub, spanning_mod_p(alexander_dual(sub), 2));
    for (const auto& [d, mult] : spheres.counts) smashed.add(d + i_set.size(), mult);
  }
  if (!(smashed == spheres_from_homology(computed))) {
    report.failures.push_back("sphere count " + smashed.to_string() + " differs from the ranks " +
                              spheres_from_homology(computed).to_string());
  }
  report.match = report.failures.empty();
  return report;
}

}  // namespace polyprod
