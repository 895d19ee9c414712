// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "polyprod/corpus.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/homology.hpp"
#include "polyprod/moment_angle.hpp"
#include "polyprod/report.hpp"
#include "polyprod/spanning.hpp"
#include "polyprod/structure.hpp"
#include "polyprod/tor.hpp"

using namespace polyprod;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Tally {
  std::uint64_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o{failures.empty(), summary + ", " + std::to_string(checked) + " checks"};
    for (std::size_t i = 0; i < failures.size() && i < 5; ++i) o.detail += "\n    " + failures[i];
    if (failures.size() > 5) o.detail += "\n    ... " + std::to_string(failures.size() - 5) + " more";
    return o;
  }
};

// Covering antichains of nonempty subsets, by inclusion-exclusion over the
// Dedekind numbers 2, 3, 6, 20, 168.
std::int64_t expected_corpus_size(int n) {
  const std::int64_t dedekind[] = {2, 3, 6, 20, 168};
  const std::int64_t binom[5][5] = {{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}, {1, 4, 6, 4, 1}};
  std::int64_t total = 0;
  for (int k = 0; k <= n; ++k) total += ((n - k) % 2 == 0 ? 1 : -1) * binom[n][k] * (dedekind[k] - 1);
  return total;
}

const std::vector<SimplicialComplex>& corpus() {
  static const std::vector<SimplicialComplex> all = [] {
    std::vector<SimplicialComplex> out;
    for (int n = 1; n <= 4; ++n) {
      auto part = enumerate_complexes(n);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }();
  return all;
}

std::vector<std::pair<std::string, SimplicialComplex>> named_up_to_6() {
  std::vector<std::string> specs = {"rp2-6"};
  for (int n = 3; n <= 6; ++n) specs.push_back("cycle:" + std::to_string(n));
  for (int n = 1; n <= 6; ++n) specs.push_back("points:" + std::to_string(n));
  for (int d = 0; d <= 5; ++d) specs.push_back("simplex:" + std::to_string(d));
  for (int d = 1; d <= 5; ++d) specs.push_back("boundary-simplex:" + std::to_string(d));
  for (int m = 2; m <= 6; ++m)
    for (int d = 0; d < m - 1; ++d) specs.push_back("skeleton:" + std::to_string(d) + "," + std::to_string(m));
  for (int k = 1; k <= 3; ++k) specs.push_back("disjoint-edges:" + std::to_string(k));
  std::vector<std::pair<std::string, SimplicialComplex>> out;
  for (const auto& s : specs) out.emplace_back(s, resolve(ComplexSource{parse_named_source(s)}));
  return out;
}

const std::vector<Coefficients> kFields = {Coefficients::prime_field(2), Coefficients::prime_field(3),
                                           Coefficients::rationals()};

// Certificates gathered by criteria 5 and 6 for criterion 11.
std::vector<SpanningFacetCertificate>& certificates() {
  static std::vector<SpanningFacetCertificate> all;
  return all;
}

Outcome hochster_equals_koszul() {
  Tally t;
  for (int n = 1; n <= 4; ++n)
    t.expect(static_cast<std::int64_t>(enumerate_complexes(n).size()) == expected_corpus_size(n),
             "corpus size for n = " + std::to_string(n));
  for (const auto& k : corpus())
    for (const auto& c : kFields)
      t.expect(hochster_table(k, c) == koszul_table(k, c), k.to_string() + " over " + c.name());
  return t.outcome(std::to_string(corpus().size()) + " complexes x F2,F3,Q");
}

Outcome decomposition() {
  Tally t;
  const std::vector<Coefficients> rings = {Coefficients::integers(), Coefficients::prime_field(2),
                                           Coefficients::prime_field(3)};
  for (const auto& k : corpus())
    for (const auto& c : rings) t.expect(verify_decomposition(k, c).match, k.to_string() + " over " + c.name());
  const auto named = named_up_to_6();
  for (const auto& [name, k] : named)
    for (const auto& c : rings) t.expect(verify_decomposition(k, c).match, name + " over " + c.name());
  return t.outcome(std::to_string(corpus().size()) + " corpus + " + std::to_string(named.size()) +
                   " named complexes x Z,F2,F3");
}

Outcome golod_sweep() {
  Tally t;
  std::uint64_t applicable = 0;
  for (const auto& k : corpus()) {
    const auto dual = alexander_dual(k);
    for (const auto& c : kFields) {
      if (!is_sequentially_cm(dual, c)) continue;
      ++applicable;
      t.expect(is_golod(k, c).golod, "counterexample " + k.to_string() + " over " + c.name());
    }
  }
  return t.outcome(std::to_string(applicable) + " (complex, field) pairs with SCM dual, 0 counterexamples allowed");
}

Outcome square_negative_control() {
  Tally t;
  const auto r = analyze(named_complex("cycle", {4}), "cycle:4");
  for (const auto& c : kFields) {
    const auto it = r.golod.find(c.name());
    t.expect(it != r.golod.end() && !it->second.verdict.golod, "golod = false over " + c.name());
    if (it == r.golod.end() || !it->second.verdict.witness) continue;
    const auto& w = *it->second.verdict.witness;
    t.expect(w.left == Bidegree{1, 4} && w.right == Bidegree{1, 4} && w.product == Bidegree{2, 8},
             "witness bidegrees over " + c.name());
  }
  HomologyGroups expected;
  expected.set(3, {2, {}});
  expected.set(6, {1, {}});
  const auto& z = r.decomposition.at("Z");
  t.expect(z.models.size() == 2 && z.models[1].computed == expected, "complex model ranks (3:2, 6:1)");
  t.expect(z.models[1].computed.is_torsion_free(), "torsion-free");
  t.expect(z.models[1].predicted == expected, "induced-subcomplex prediction");
  std::map<int, std::uint64_t> totals;
  for (const auto& [b, n] : koszul_table(named_complex("cycle", {4}), Coefficients::rationals()).entries)
    if (b.hom > 0) totals[b.internal - b.hom] += n;
  t.expect(totals == std::map<int, std::uint64_t>{{3, 2}, {6, 1}}, "Koszul model totals");
  t.expect(r.violations.empty(), "report has no violations");
  return t.outcome("cycle:4 witness (1,4)x(1,4)->(2,8), ranks {3:2, 6:1}");
}

Outcome shelling_wedge() {
  Tally t;
  std::uint64_t shellable = 0;
  for (const auto& k : corpus()) {
    const auto dual = alexander_dual(k);
    if (dual.is_void()) continue;
    const auto sh = find_shelling(dual);
    t.expect(sh.answer != Answer::Unknown, "shelling search exhausted its budget on the dual of " + k.to_string());
    if (!sh.yes()) continue;
    ++shellable;
    const auto cert = spanning_from_shelling(dual, std::get<ShellingOrder>(sh.witness));
    certificates().push_back(cert);
    const auto h = reduced_homology(suspension(k), Coefficients::integers());
    t.expect(h.is_torsion_free(), "torsion in the suspension of " + k.to_string());
    t.expect(spheres_from_homology(h) == dual_wedge_prediction(k, cert), "sphere count for " + k.to_string());
  }
  const auto pts = named_complex("points", {4});
  const auto dual = alexander_dual(pts);
  const auto sh = find_shelling(dual);
  t.expect(sh.yes(), "dual of points:4 shellable");
  if (sh.yes()) {
    const auto cert = spanning_from_shelling(dual, std::get<ShellingOrder>(sh.witness));
    t.expect(dual_wedge_prediction(pts, cert).to_string() == "{1,1,1}", "points:4 sphere list {1,1,1}");
  }
  t.expect(reduced_homology(suspension(pts), Coefficients::integers()).rank(1) == 3, "points:4 rank 3");
  return t.outcome(std::to_string(shellable) + " corpus complexes with shellable dual; points:4 gives {1,1,1}");
}

Outcome scm_wedge() {
  Tally t;
  std::uint64_t applicable = 0;
  for (const auto& k : corpus()) {
    const auto dual = alexander_dual(k);
    for (std::uint32_t p : {2u, 3u}) {
      const auto c = Coefficients::prime_field(p);
      if (!is_sequentially_cm(dual, c)) continue;
      ++applicable;
      try {
        const auto cert = spanning_mod_p(dual, p);
        certificates().push_back(cert);
        const auto h = reduced_homology(suspension(k), c);
        t.expect(spheres_from_homology(h) == dual_wedge_prediction(k, cert),
                 "dimensions for " + k.to_string() + " over " + c.name());
      } catch (const NotApplicableError& e) {
        t.expect(false, "no spanning facets for the SCM dual of " + k.to_string() + ": " + e.what());
      }
    }
  }
  return t.outcome(std::to_string(applicable) + " (complex, p) pairs with SCM dual");
}

Outcome implication_chain() {
  Tally t;
  auto chain = [&](const SimplicialComplex& k) {
    const auto shifted = is_shifted(k);
    const auto vd = is_vertex_decomposable(k);
    const auto sh = find_shelling(k);
    const bool scm = is_sequentially_cm(k, Coefficients::integers());
    t.expect(shifted.answer != Answer::Unknown && sh.answer != Answer::Unknown, "undecided on " + k.to_string());
    t.expect(!shifted.yes() || vd.yes(), "shifted but not vertex decomposable: " + k.to_string());
    t.expect(!vd.yes() || sh.yes(), "vertex decomposable but not shellable: " + k.to_string());
    t.expect(!sh.yes() || scm, "shellable but not SCM over Z: " + k.to_string());
  };
  for (const auto& k : corpus()) {
    chain(k);
    const auto dual = alexander_dual(k);
    if (!dual.is_void()) chain(dual);
  }
  return t.outcome("corpus complexes and their non-void duals");
}

Outcome link_dual_identity() {
  Tally t;
  for (const auto& k : corpus()) {
    const auto dual = alexander_dual(k);
    for (int v : k.ground().vertices()) {
      const auto lhs = alexander_dual(link(k, Simplex::from_vertices({v})));
      const auto rhs = deletion(dual, Simplex::from_vertices({v}), DeletionGround::Keep);
      t.expect(lhs.facets() == rhs.facets(), k.to_string() + " at " + std::to_string(v));
    }
  }
  return t.outcome("link(K,v)^dual = deletion(K^dual, v) on every corpus complex and vertex");
}

Outcome deletion_keeps_dual_scm() {
  Tally t;
  for (const auto& k : corpus()) {
    for (std::uint32_t p : {2u, 3u}) {
      const auto c = Coefficients::prime_field(p);
      if (!is_sequentially_cm(alexander_dual(k), c)) continue;
      for (int v : k.ground().vertices())
        t.expect(is_sequentially_cm(alexander_dual(deletion(k, Simplex::from_vertices({v}))), c),
                 k.to_string() + " minus " + std::to_string(v) + " over " + c.name());
    }
  }
  return t.outcome("vertex deletions of complexes with SCM dual, p = 2, 3");
}

Outcome projective_plane_gates() {
  Tally t;
  const auto rp = named_complex("rp2-6", {});
  HomologyGroups z2;
  z2.set(1, {0, {BigInt(2)}});
  t.expect(reduced_homology(rp, Coefficients::integers()) == z2, "integral homology is Z/2 in degree 1");
  t.expect(rp.is_pure() && is_sequentially_cm(rp, Coefficients::rationals()), "Cohen-Macaulay over Q");
  t.expect(!is_sequentially_cm(rp, Coefficients::prime_field(2)), "not SCM over F2");
  try {
    spanning_mod_p(rp, 2);
    t.expect(false, "spanning_mod_p over F2 must refuse");
  } catch (const NotApplicableError& e) {
    t.expect(e.degree() == 1, "refusal in degree 1");
  }
  t.expect(!is_sequentially_cm(alexander_dual(rp), Coefficients::integers()), "dual not SCM over Z");
  const auto h = complex_ma_homology(rp, Coefficients::integers());
  bool two_torsion = false;
  for (const auto& [n, g] : h.groups())
    for (const auto& tor : g.torsion) two_torsion = two_torsion || tor % 2 == 0;
  t.expect(two_torsion, "complex moment-angle model has 2-torsion");
  return t.outcome("rp2-6 homology, CM, SCM, spanning and torsion gates");
}

std::vector<SpanningFacetCertificate> tampered(const SpanningFacetCertificate& c) {
  std::vector<SpanningFacetCertificate> out;
  auto with_gamma = [&](std::vector<Simplex> gamma, bool recompute) {
    auto t = c;
    t.gamma = std::move(gamma);
    if (recompute) t.remainder = remove_open_facets(t.host, t.gamma);
    out.push_back(std::move(t));
  };
  if (!c.gamma.empty()) {
    auto fewer = c.gamma;
    fewer.pop_back();
    with_gamma(fewer, true);
    with_gamma(fewer, false);
    auto twice = c.gamma;
    twice.push_back(c.gamma.front());
    with_gamma(twice, false);
    auto host_only = c;
    host_only.remainder = c.host;
    out.push_back(host_only);
  }
  for (Simplex f : c.host.facets()) {
    if (std::find(c.gamma.begin(), c.gamma.end(), f) != c.gamma.end()) continue;
    auto more = c.gamma;
    more.push_back(f);
    with_gamma(more, true);
    break;
  }
  for (Simplex f : c.host.facets()) {
    if (f.size() < 2) continue;
    auto face = c.gamma;
    face.push_back(f.without(f.min_vertex()));
    with_gamma(face, true);
    break;
  }
  if (c.witnesses.size() >= 2) {
    auto swapped = c;
    std::swap(swapped.witnesses[0], swapped.witnesses[1]);
    out.push_back(swapped);
    auto leaked = c;
    leaked.witnesses[0].add(c.gamma[1], 1);
    out.push_back(leaked);
  }
  // Witnesses are optional, so only a partial list is a forgery.
  if (c.witnesses.size() >= 2) {
    auto dropped = c;
    dropped.witnesses.pop_back();
    out.push_back(dropped);
  }
  return out;
}

Outcome certificate_integrity() {
  Tally t;
  auto& certs = certificates();
  for (const auto& k : {named_complex("cycle", {4}), named_complex("points", {4}), named_complex("rp2-6", {})}) {
    for (const auto& s : analyze(k, "named").spanning)
      if (s.certificate) certs.push_back(*s.certificate);
  }
  std::uint64_t tampers = 0;
  for (const auto& c : certs) {
    t.expect(verify_certificate(c), "certificate on " + c.host.to_string() + " does not verify");
    for (const auto& bad : tampered(c)) {
      ++tampers;
      t.expect(!verify_certificate(bad), "tampered certificate on " + c.host.to_string() + " still verifies");
    }
  }
  return t.outcome(std::to_string(certs.size()) + " certificates, " + std::to_string(tampers) + " tampered variants");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    std::int64_t limit_ms;
  };
  const std::vector<Criterion> criteria = {
      {"Hochster table equals Koszul homology", hochster_equals_koszul, 60'000},
      {"moment-angle homology decomposition", decomposition, 300'000},
      {"SCM dual implies Golod", golod_sweep, 0},
      {"cycle:4 negative control", square_negative_control, 0},
      {"shellable dual gives a wedge of spheres", shelling_wedge, 0},
      {"SCM dual gives spanning-facet sphere counts", scm_wedge, 0},
      {"shifted => vertex decomposable => shellable => SCM", implication_chain, 0},
      {"link and deletion under Alexander duality", link_dual_identity, 0},
      {"SCM dual survives vertex deletion", deletion_keeps_dual_scm, 0},
      {"rp2-6 gates", projective_plane_gates, 0},
      {"spanning-facet certificate integrity", certificate_integrity, 0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].limit_ms > 0 && ms > criteria[i].limit_ms) {
      o.pass = false;
      o.detail += "\n    over the time limit of " + std::to_string(criteria[i].limit_ms) + " ms";
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1 < 10 ? "0" : "") << i + 1 << "] " << criteria[i].name
              << ": " << o.detail << " (" << ms << " ms)\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
