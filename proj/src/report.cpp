#include "polyprod/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "polyprod/errors.hpp"

namespace polyprod {

using Json = nlohmann::ordered_json;

std::string complex_hash(const SimplicialComplex& k) {
  const std::string text = k.ground().to_string() + " " + k.to_string();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ------------------------------------------------------------------ analyze

namespace {

class Stopwatch {
 public:
  Stopwatch(AnalysisReport& r, bool enabled, const char* stage)
      : r_(r), enabled_(enabled), stage_(stage), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    if (!enabled_) return;
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_);
    r_.timings_us[stage_] += static_cast<std::uint64_t>(us.count());
  }

 private:
  AnalysisReport& r_;
  bool enabled_;
  const char* stage_;
  std::chrono::steady_clock::time_point start_;
};

StructureReport structure_report(const SimplicialComplex& k, const AnalysisOptions& opt) {
  StructureReport s;
  s.shellable = find_shelling(k, opt.budget);
  s.vertex_decomposable = is_vertex_decomposable(k);
  s.shifted = is_shifted(k);
  s.collapsible = greedy_collapse(k, opt.budget);
  for (const auto& c : opt.coefficients) s.scm[c.name()] = is_sequentially_cm(k, c);
  if (!k.is_void() && !k.has_ghost_vertex()) {
    for (const auto& c : opt.coefficients)
      if (c.is_field()) s.extractible[c.name()] = extractibility_certificate(k, c);
  }
  return s;
}

void check_chain(const StructureReport& s, const std::string& who, std::vector<std::string>& violations) {
  if (s.shifted.yes() && s.vertex_decomposable.answer == Answer::No)
    violations.push_back(who + ": shifted but not vertex decomposable");
  if (s.vertex_decomposable.yes() && s.shellable.answer == Answer::No)
    violations.push_back(who + ": vertex decomposable but not shellable");
  if (s.shellable.yes()) {
    for (const auto& [name, scm] : s.scm)
      if (!scm) violations.push_back(who + ": shellable but not sequentially Cohen-Macaulay over " + name);
  }
}

}  // namespace

AnalysisReport analyze(const SimplicialComplex& k, const std::string& source, const AnalysisOptions& opt) {
  AnalysisReport r;
  r.source = source;
  r.complex = k;
  r.hash = complex_hash(k);
  for (const auto& c : opt.coefficients) r.coefficients.push_back(c.name());
  if (k.is_void()) return r;
  const auto dual = alexander_dual(k);

  {
    Stopwatch t(r, opt.timings, "homology");
    for (const auto& c : opt.coefficients) r.homology[c.name()] = reduced_homology(k, c);
  }
  {
    Stopwatch t(r, opt.timings, "structure");
    r.structure = structure_report(k, opt);
    r.dual_structure = structure_report(dual, opt);
    check_chain(*r.structure, "K", r.violations);
    // Void satisfies shiftedness vacuously but has no facets to shell or shed.
    if (!dual.is_void()) check_chain(*r.dual_structure, "dual", r.violations);
  }
  {
    Stopwatch t(r, opt.timings, "betti");
    for (const auto& c : opt.coefficients) {
      if (!c.is_field()) continue;
      BettiReport b{hochster_table(k, c), koszul_table(k, c), true};
      b.agree = b.hochster == b.koszul;
      if (!b.agree) r.violations.push_back("Hochster and Koszul tables differ over " + c.name());
      r.betti[c.name()] = std::move(b);
    }
  }
  if (!dual.is_void()) {
    Stopwatch t(r, opt.timings, "spanning");
    const auto& shelling = r.dual_structure->shellable;
    if (shelling.yes()) {
      SpanningReport s;
      s.method = "shelling";
      const auto cert = spanning_from_shelling(dual, std::get<ShellingOrder>(shelling.witness));
      s.predicted = dual_wedge_prediction(k, cert);
      const auto h = reduced_homology(suspension(k), s.coefficients);
      s.observed = spheres_from_homology(h);
      s.match = h.is_torsion_free() && s.predicted == s.observed;
      if (!s.match) r.violations.push_back("shelling of the dual mispredicts the suspension homology over Z");
      s.certificate = cert;
      r.spanning.push_back(std::move(s));
    }
    for (const auto& c : opt.coefficients) {
      if (c.kind() != Coefficients::Kind::PrimeField) continue;
      SpanningReport s;
      s.method = "mod p";
      s.coefficients = c;
      s.observed = spheres_from_homology(reduced_homology(suspension(k), c));
      try {
        s.certificate = spanning_mod_p(dual, c.prime());
        s.predicted = dual_wedge_prediction(k, *s.certificate);
        s.match = s.predicted == s.observed;
        if (!s.match) r.violations.push_back("spanning facets over " + c.name() + " mispredict the suspension");
      } catch (const NotApplicableError& e) {
        s.not_applicable_degree = e.degree();
        s.match = false;
        const auto it = r.dual_structure->scm.find(c.name());
        if (it != r.dual_structure->scm.end() && it->second)
          r.violations.push_back("dual is sequentially Cohen-Macaulay over " + c.name() +
                                 " but has no spanning facets");
      }
      r.spanning.push_back(std::move(s));
    }
  }
  if (k.m() <= kMaxModelIndices) {
    Stopwatch t(r, opt.timings, "decomposition");
    for (const auto& c : opt.coefficients) {
      auto d = verify_decomposition(k, c);
      if (!d.match) r.violations.push_back("moment-angle decomposition fails over " + c.name());
      r.decomposition[c.name()] = std::move(d);
    }
    const auto z = r.dual_structure->scm.find("Z");
    const bool dual_scm_z = z != r.dual_structure->scm.end() && z->second;
    if (dual_scm_z) {
      r.wedge = verify_wedge_of_spheres(k);
      if (!r.wedge->match) r.violations.push_back("wedge-of-spheres check fails");
    }
  }
  {
    Stopwatch t(r, opt.timings, "golod");
    for (const auto& c : opt.coefficients) {
      if (!c.is_field()) continue;
      GolodReport g;
      g.verdict = is_golod(k, c);
      g.dual_scm = is_sequentially_cm(dual, c);
      if (g.dual_scm && !g.verdict.golod && !k.has_ghost_vertex())
        r.violations.push_back("dual is sequentially Cohen-Macaulay over " + c.name() + " but K is not Golod");
      r.golod[c.name()] = std::move(g);
    }
  }
  {
    Stopwatch t(r, opt.timings, "reverify");
    for (auto& failure : reverify(r)) r.violations.push_back(std::move(failure));
  }
  return r;
}

AnalysisReport analyze(const ComplexSource& src, const AnalysisOptions& options) {
  return analyze(resolve(src), source_label(src), options);
}

// ----------------------------------------------------------------- reverify

namespace {

void reverify_verdict(const StructureVerdict& v, const SimplicialComplex& k, const std::string& where,
                      std::vector<std::string>& out) {
  bool ok = true;
  try {
    if (const auto* order = std::get_if<ShellingOrder>(&v.witness)) ok = verify_shelling(k, *order);
    else if (const auto* vo = std::get_if<VertexOrder>(&v.witness)) ok = is_shifted_under(k, *vo);
    else if (const auto* seq = std::get_if<CollapseSequence>(&v.witness)) ok = verify_collapse(k, *seq);
    else if (const auto* tree = std::get_if<SheddingTree>(&v.witness)) ok = verify_shedding_tree(k, *tree);
  } catch (const Error&) {
    ok = false;
  }
  if (!ok) out.push_back(where + ": " + v.property + " witness does not verify");
}

void reverify_structure(const StructureReport& s, const SimplicialComplex& k, const std::string& who,
                        std::vector<std::string>& out) {
  reverify_verdict(s.shellable, k, who, out);
  reverify_verdict(s.vertex_decomposable, k, who, out);
  reverify_verdict(s.shifted, k, who, out);
  reverify_verdict(s.collapsible, k, who, out);
  for (const auto& [name, v] : s.extractible) {
    if (const auto* tree = std::get_if<ExtractionTree>(&v.witness)) {
      if (!verify_extraction_tree(k, *tree, Coefficients::parse(name)))
        out.push_back(who + ": extraction tree over " + name + " does not verify");
    }
  }
}

}  // namespace

std::vector<std::string> reverify(const AnalysisReport& report) {
  std::vector<std::string> out;
  const auto& k = report.complex;
  if (k.is_void()) return out;
  const auto dual = alexander_dual(k);
  if (report.structure) reverify_structure(*report.structure, k, "K", out);
  if (report.dual_structure) reverify_structure(*report.dual_structure, dual, "dual", out);
  for (const auto& s : report.spanning) {
    if (!s.certificate) continue;
    if (!(s.certificate->host == dual) || !verify_certificate(*s.certificate))
      out.push_back("spanning certificate (" + s.method + ", " + s.coefficients.name() + ") does not verify");
  }
  return out;
}

// --------------------------------------------------------------------- json

namespace {

std::string num(std::uint64_t x) { return std::to_string(x); }
std::string num(int x) { return std::to_string(x); }
std::string num(std::int64_t x) { return std::to_string(x); }

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, "report json: " + what); }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::string need_string(const Json& j, const char* key) {
  const auto& v = need(j, key);
  if (!v.is_string()) bad(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

bool need_bool(const Json& j, const char* key) {
  const auto& v = need(j, key);
  if (!v.is_boolean()) bad(std::string("'") + key + "' must be a boolean");
  return v.get<bool>();
}

std::int64_t to_i64(const std::string& s) {
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) bad("not an integer: " + s);
  return v;
}

std::uint64_t to_u64(const std::string& s) {
  if (s.empty() || s.front() == '-') bad("not a natural number: " + s);
  std::size_t used = 0;
  const unsigned long long v = std::stoull(s, &used);
  if (used != s.size()) bad("not a natural number: " + s);
  return v;
}

int to_int(const std::string& s) { return static_cast<int>(to_i64(s)); }

Answer parse_answer(const std::string& s) {
  if (s == "yes") return Answer::Yes;
  if (s == "no") return Answer::No;
  if (s == "unknown") return Answer::Unknown;
  bad("bad answer " + s);
}

Json simplices(const std::vector<Simplex>& list) {
  Json out = Json::array();
  for (Simplex s : list) out.push_back(s.to_string());
  return out;
}

std::vector<Simplex> parse_simplices(const Json& j) {
  if (!j.is_array()) bad("expected a simplex list");
  std::vector<Simplex> out;
  for (const auto& s : j) out.push_back(Simplex::parse(s.get<std::string>()));
  return out;
}

Json complex_json(const SimplicialComplex& k) {
  Json j;
  j["m"] = num(k.m());
  j["ground"] = k.ground().to_string();
  j["void"] = k.is_void();
  j["facets"] = simplices(k.facets());
  return j;
}

SimplicialComplex parse_complex(const Json& j) {
  const Simplex ground = Simplex::parse(need_string(j, "ground"));
  if (need_bool(j, "void")) return SimplicialComplex::void_complex(ground);
  auto facets = parse_simplices(need(j, "facets"));
  if (facets.empty()) bad("a non-void complex needs facets");
  return SimplicialComplex::from_facets(ground, std::move(facets));
}

Json shedding_json(const SheddingTree& t) {
  Json j;
  j["vertex"] = num(t.vertex);
  if (!t.children.empty()) {
    j["children"] = Json::array();
    for (const auto& c : t.children) j["children"].push_back(shedding_json(c));
  }
  return j;
}

SheddingTree parse_shedding(const Json& j) {
  SheddingTree t;
  t.vertex = to_int(need_string(j, "vertex"));
  if (j.contains("children"))
    for (const auto& c : j.at("children")) t.children.push_back(parse_shedding(c));
  return t;
}

Json extraction_json(const ExtractionTree& t) {
  Json j;
  j["ground"] = t.ground.to_string();
  j["condition"] = num(t.condition);
  j["vertex"] = num(t.vertex);
  if (!t.children.empty()) {
    j["children"] = Json::array();
    for (const auto& c : t.children) j["children"].push_back(extraction_json(c));
  }
  return j;
}

ExtractionTree parse_extraction(const Json& j) {
  ExtractionTree t;
  t.ground = Simplex::parse(need_string(j, "ground"));
  t.condition = to_int(need_string(j, "condition"));
  t.vertex = to_int(need_string(j, "vertex"));
  if (j.contains("children"))
    for (const auto& c : j.at("children")) t.children.push_back(parse_extraction(c));
  return t;
}

std::optional<Json> witness_json(const Witness& w) {
  Json j;
  if (const auto* order = std::get_if<ShellingOrder>(&w)) {
    j["kind"] = "shelling";
    j["order"] = simplices(*order);
  } else if (const auto* vo = std::get_if<VertexOrder>(&w)) {
    j["kind"] = "vertex order";
    j["labels"] = Json::array();
    for (int v : vo->labels) j["labels"].push_back(num(v));
  } else if (const auto* seq = std::get_if<CollapseSequence>(&w)) {
    j["kind"] = "collapse";
    j["steps"] = Json::array();
    for (const auto& step : *seq) j["steps"].push_back(Json::array({step.free_face.to_string(), step.coface.to_string()}));
  } else if (const auto* st = std::get_if<SheddingTree>(&w)) {
    j["kind"] = "shedding tree";
    j["tree"] = shedding_json(*st);
  } else if (const auto* et = std::get_if<ExtractionTree>(&w)) {
    j["kind"] = "extraction tree";
    j["tree"] = extraction_json(*et);
  } else {
    return std::nullopt;
  }
  return j;
}

Witness parse_witness(const Json& j) {
  const auto kind = need_string(j, "kind");
  if (kind == "shelling") return parse_simplices(need(j, "order"));
  if (kind == "vertex order") {
    VertexOrder vo;
    for (const auto& v : need(j, "labels")) vo.labels.push_back(to_int(v.get<std::string>()));
    return vo;
  }
  if (kind == "collapse") {
    CollapseSequence seq;
    for (const auto& step : need(j, "steps")) {
      if (!step.is_array() || step.size() != 2) bad("collapse steps are pairs");
      seq.push_back({Simplex::parse(step[0].get<std::string>()), Simplex::parse(step[1].get<std::string>())});
    }
    return seq;
  }
  if (kind == "shedding tree") return parse_shedding(need(j, "tree"));
  if (kind == "extraction tree") return parse_extraction(need(j, "tree"));
  bad("unknown witness kind " + kind);
}

Json verdict_json(const StructureVerdict& v) {
  Json j;
  j["property"] = v.property;
  j["answer"] = to_string(v.answer);
  if (auto w = witness_json(v.witness)) j["witness"] = std::move(*w);
  if (!v.detail.empty()) j["detail"] = v.detail;
  j["nodes"] = num(v.nodes);
  return j;
}

StructureVerdict parse_verdict(const Json& j) {
  StructureVerdict v;
  v.property = need_string(j, "property");
  v.answer = parse_answer(need_string(j, "answer"));
  if (j.contains("witness")) v.witness = parse_witness(j.at("witness"));
  if (j.contains("detail")) v.detail = need_string(j, "detail");
  v.nodes = to_u64(need_string(j, "nodes"));
  return v;
}

Json structure_json(const StructureReport& s) {
  Json j;
  j["shellable"] = verdict_json(s.shellable);
  j["vertex_decomposable"] = verdict_json(s.vertex_decomposable);
  j["shifted"] = verdict_json(s.shifted);
  j["collapsible"] = verdict_json(s.collapsible);
  if (!s.scm.empty()) {
    j["scm"] = Json::object();
    for (const auto& [name, ok] : s.scm) j["scm"][name] = ok;
  }
  if (!s.extractible.empty()) {
    j["extractible"] = Json::object();
    for (const auto& [name, v] : s.extractible) j["extractible"][name] = verdict_json(v);
  }
  return j;
}

StructureReport parse_structure(const Json& j) {
  StructureReport s;
  s.shellable = parse_verdict(need(j, "shellable"));
  s.vertex_decomposable = parse_verdict(need(j, "vertex_decomposable"));
  s.shifted = parse_verdict(need(j, "shifted"));
  s.collapsible = parse_verdict(need(j, "collapsible"));
  if (j.contains("scm"))
    for (const auto& [name, ok] : j.at("scm").items()) s.scm[name] = ok.get<bool>();
  if (j.contains("extractible"))
    for (const auto& [name, v] : j.at("extractible").items()) s.extractible[name] = parse_verdict(v);
  return s;
}

Json groups_json(const HomologyGroups& h) {
  Json j = Json::object();
  for (const auto& [n, g] : h.groups()) {
    Json e;
    e["rank"] = num(g.rank);
    if (!g.torsion.empty()) {
      e["torsion"] = Json::array();
      for (const auto& t : g.torsion) e["torsion"].push_back(t.str());
    }
    j[num(n)] = std::move(e);
  }
  return j;
}

HomologyGroups parse_groups(const Json& j) {
  if (!j.is_object()) bad("homology must be an object");
  HomologyGroups h;
  for (const auto& [n, e] : j.items()) {
    HomologyGroup g;
    g.rank = to_u64(need_string(e, "rank"));
    if (e.contains("torsion"))
      for (const auto& t : e.at("torsion")) g.torsion.emplace_back(t.get<std::string>());
    h.set(to_int(n), std::move(g));
  }
  return h;
}

Json table_json(const BigradedBettiTable& t) {
  Json j = Json::object();
  for (const auto& [b, n] : t.entries) j[b.to_string()] = num(n);
  return j;
}

Bidegree parse_bidegree(const std::string& s) {
  int hom = 0;
  int internal = 0;
  char close = 0;
  if (std::sscanf(s.c_str(), "(%d,%d%c", &hom, &internal, &close) != 3 || close != ')') bad("bad bidegree " + s);
  return {hom, internal};
}

BigradedBettiTable parse_table(const Json& j) {
  BigradedBettiTable t;
  for (const auto& [b, n] : j.items()) t.add(parse_bidegree(b), to_u64(n.get<std::string>()));
  return t;
}

Json chain_json(const ChainVector& x) {
  Json j;
  j["prime"] = num(static_cast<std::uint64_t>(x.prime));
  j["dim"] = num(x.dim);
  j["terms"] = Json::array();
  for (const auto& [s, c] : x.terms) j["terms"].push_back(Json::array({s.to_string(), num(c)}));
  return j;
}

ChainVector parse_chain(const Json& j) {
  ChainVector x;
  x.prime = static_cast<std::uint32_t>(to_u64(need_string(j, "prime")));
  x.dim = to_int(need_string(j, "dim"));
  for (const auto& t : need(j, "terms")) {
    if (!t.is_array() || t.size() != 2) bad("chain terms are pairs");
    x.terms[Simplex::parse(t[0].get<std::string>())] = to_i64(t[1].get<std::string>());
  }
  return x;
}

Json certificate_json(const SpanningFacetCertificate& c) {
  Json j;
  j["coefficients"] = c.coefficients.name();
  j["host"] = complex_json(c.host);
  j["gamma"] = simplices(c.gamma);
  if (!c.witnesses.empty()) {
    j["witnesses"] = Json::array();
    for (const auto& w : c.witnesses) j["witnesses"].push_back(chain_json(w));
  }
  j["remainder"] = complex_json(c.remainder);
  return j;
}

SpanningFacetCertificate parse_certificate(const Json& j) {
  SpanningFacetCertificate c;
  c.coefficients = Coefficients::parse(need_string(j, "coefficients"));
  c.host = parse_complex(need(j, "host"));
  c.gamma = parse_simplices(need(j, "gamma"));
  if (j.contains("witnesses"))
    for (const auto& w : j.at("witnesses")) c.witnesses.push_back(parse_chain(w));
  c.remainder = parse_complex(need(j, "remainder"));
  return c;
}

SphereList parse_spheres(const std::string& s) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') bad("bad sphere list " + s);
  SphereList out;
  std::stringstream body(s.substr(1, s.size() - 2));
  std::string word;
  while (std::getline(body, word, ',')) out.add(to_int(word));
  return out;
}

Json spanning_json(const SpanningReport& s) {
  Json j;
  j["method"] = s.method;
  j["coefficients"] = s.coefficients.name();
  if (s.certificate) j["certificate"] = certificate_json(*s.certificate);
  if (s.not_applicable_degree) j["not_applicable_degree"] = num(*s.not_applicable_degree);
  j["predicted"] = s.predicted.to_string();
  j["observed"] = s.observed.to_string();
  j["match"] = s.match;
  return j;
}

SpanningReport parse_spanning(const Json& j) {
  SpanningReport s;
  s.method = need_string(j, "method");
  s.coefficients = Coefficients::parse(need_string(j, "coefficients"));
  if (j.contains("certificate")) s.certificate = parse_certificate(j.at("certificate"));
  if (j.contains("not_applicable_degree")) s.not_applicable_degree = to_int(need_string(j, "not_applicable_degree"));
  s.predicted = parse_spheres(need_string(j, "predicted"));
  s.observed = parse_spheres(need_string(j, "observed"));
  s.match = need_bool(j, "match");
  return s;
}

MomentAnglePair parse_pair(const std::string& s) {
  if (s == "real") return MomentAnglePair::Real;
  if (s == "complex") return MomentAnglePair::Complex;
  bad("bad model " + s);
}

Json decomposition_json(const DecompositionReport& d) {
  Json j;
  j["coefficients"] = d.coefficients.name();
  j["models"] = Json::array();
  for (const auto& m : d.models) {
    Json e;
    e["model"] = to_string(m.pair);
    e["predicted"] = groups_json(m.predicted);
    e["computed"] = groups_json(m.computed);
    e["match"] = m.match;
    j["models"].push_back(std::move(e));
  }
  if (!d.failures.empty()) j["failures"] = d.failures;
  j["match"] = d.match;
  return j;
}

DecompositionReport parse_decomposition(const Json& j) {
  DecompositionReport d;
  d.coefficients = Coefficients::parse(need_string(j, "coefficients"));
  for (const auto& e : need(j, "models")) {
    d.models.push_back(compare(parse_pair(need_string(e, "model")), parse_groups(need(e, "predicted")),
                               parse_groups(need(e, "computed"))));
    if (d.models.back().match != need_bool(e, "match")) bad("model verdict disagrees with its groups");
  }
  if (j.contains("failures")) d.failures = j.at("failures").get<std::vector<std::string>>();
  d.match = need_bool(j, "match");
  return d;
}

Json golod_json(const GolodReport& g) {
  Json j;
  j["golod"] = g.verdict.golod;
  j["dual_scm"] = g.dual_scm;
  j["products_checked"] = num(g.verdict.products_checked);
  if (g.verdict.witness) {
    const auto& w = *g.verdict.witness;
    Json e;
    e["left"] = w.left.to_string();
    e["right"] = w.right.to_string();
    e["product"] = w.product.to_string();
    e["left_rep"] = w.left_rep;
    e["right_rep"] = w.right_rep;
    e["product_rep"] = w.product_rep;
    j["witness"] = std::move(e);
  }
  return j;
}

GolodReport parse_golod(const Json& j) {
  GolodReport g;
  g.verdict.golod = need_bool(j, "golod");
  g.dual_scm = need_bool(j, "dual_scm");
  g.verdict.products_checked = to_u64(need_string(j, "products_checked"));
  if (j.contains("witness")) {
    const auto& e = j.at("witness");
    g.verdict.witness = GolodWitness{parse_bidegree(need_string(e, "left")),
                                     parse_bidegree(need_string(e, "right")),
                                     parse_bidegree(need_string(e, "product")),
                                     need_string(e, "left_rep"),
                                     need_string(e, "right_rep"),
                                     need_string(e, "product_rep")};
  }
  return g;
}

}  // namespace

std::string to_json(const AnalysisReport& r, int indent) {
  Json j;
  j["source"] = r.source;
  j["m"] = num(r.complex.m());
  j["hash"] = r.hash;
  j["complex"] = complex_json(r.complex);
  j["coefficients"] = r.coefficients;
  if (!r.homology.empty()) {
    j["homology"] = Json::object();
    for (const auto& [name, h] : r.homology) j["homology"][name] = groups_json(h);
  }
  if (r.structure) j["structure"] = structure_json(*r.structure);
  if (r.dual_structure) j["dual_structure"] = structure_json(*r.dual_structure);
  if (!r.betti.empty()) {
    j["betti"] = Json::object();
    for (const auto& [name, b] : r.betti) {
      Json e;
      e["hochster"] = table_json(b.hochster);
      e["koszul"] = table_json(b.koszul);
      e["agree"] = b.agree;
      j["betti"][name] = std::move(e);
    }
  }
  if (!r.spanning.empty()) {
    j["spanning"] = Json::array();
    for (const auto& s : r.spanning) j["spanning"].push_back(spanning_json(s));
  }
  if (!r.decomposition.empty()) {
    j["decomposition"] = Json::object();
    for (const auto& [name, d] : r.decomposition) j["decomposition"][name] = decomposition_json(d);
  }
  if (r.wedge) j["wedge"] = decomposition_json(*r.wedge);
  if (!r.golod.empty()) {
    j["golod"] = Json::object();
    for (const auto& [name, g] : r.golod) j["golod"][name] = golod_json(g);
  }
  j["violations"] = r.violations;
  if (!r.timings_us.empty()) {
    j["timings_us"] = Json::object();
    for (const auto& [stage, us] : r.timings_us) j["timings_us"][stage] = num(us);
  }
  return j.dump(indent);
}

AnalysisReport report_from_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    AnalysisReport r;
    r.source = need_string(j, "source");
    r.complex = parse_complex(need(j, "complex"));
    r.hash = need_string(j, "hash");
    if (r.hash != complex_hash(r.complex)) bad("hash does not match the complex");
    r.coefficients = need(j, "coefficients").get<std::vector<std::string>>();
    if (j.contains("homology"))
      for (const auto& [name, h] : j.at("homology").items()) r.homology[name] = parse_groups(h);
    if (j.contains("structure")) r.structure = parse_structure(j.at("structure"));
    if (j.contains("dual_structure")) r.dual_structure = parse_structure(j.at("dual_structure"));
    if (j.contains("betti")) {
      for (const auto& [name, e] : j.at("betti").items())
        r.betti[name] = BettiReport{parse_table(need(e, "hochster")), parse_table(need(e, "koszul")),
                                    need_bool(e, "agree")};
    }
    if (j.contains("spanning"))
      for (const auto& s : j.at("spanning")) r.spanning.push_back(parse_spanning(s));
    if (j.contains("decomposition"))
      for (const auto& [name, d] : j.at("decomposition").items()) r.decomposition[name] = parse_decomposition(d);
    if (j.contains("wedge")) r.wedge = parse_decomposition(j.at("wedge"));
    if (j.contains("golod"))
      for (const auto& [name, g] : j.at("golod").items()) r.golod[name] = parse_golod(g);
    if (j.contains("violations")) r.violations = j.at("violations").get<std::vector<std::string>>();
    if (j.contains("timings_us"))
      for (const auto& [stage, us] : j.at("timings_us").items()) r.timings_us[stage] = to_u64(us.get<std::string>());
    return r;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::Parse, std::string("report json: ") + e.what());
  }
}

// ----------------------------------------------------------------- markdown

namespace {

std::string verdict_cell(const StructureVerdict& v) {
  std::string out = to_string(v.answer);
  if (!v.detail.empty() && v.answer != Answer::Yes) out += " (" + v.detail + ")";
  return out;
}

std::string gamma_cell(const SpanningReport& s) {
  if (s.not_applicable_degree) return "not applicable in degree " + std::to_string(*s.not_applicable_degree);
  if (!s.certificate) return "-";
  std::string out;
  for (Simplex f : s.certificate->gamma) out += (out.empty() ? "" : " ") + f.to_string();
  return out.empty() ? "none" : out;
}

}  // namespace

std::string to_markdown(const AnalysisReport& r) {
  std::ostringstream out;
  const auto& k = r.complex;
  out << "# " << r.source << "\n\n";
  out << "- index set: " << k.ground().to_string() << " (m = " << k.m() << ")\n";
  out << "- facets: ";
  if (k.is_void()) out << "void";
  for (std::size_t i = 0; i < k.facets().size(); ++i) out << (i ? " " : "") << k.facets()[i].to_string();
  out << "\n- hash: " << r.hash << "\n";

  if (!r.homology.empty()) {
    out << "\n## Reduced homology\n\n| coefficients | groups |\n|---|---|\n";
    for (const auto& [name, h] : r.homology)
      out << "| " << name << " | " << h.to_string(Coefficients::parse(name).is_field()) << " |\n";
  }

  if (r.structure && r.dual_structure) {
    const auto& s = *r.structure;
    const auto& d = *r.dual_structure;
    out << "\n## Structure\n\n| property | K | dual |\n|---|---|---|\n";
    out << "| shellable | " << verdict_cell(s.shellable) << " | " << verdict_cell(d.shellable) << " |\n";
    out << "| vertex decomposable | " << verdict_cell(s.vertex_decomposable) << " | "
        << verdict_cell(d.vertex_decomposable) << " |\n";
    out << "| shifted | " << verdict_cell(s.shifted) << " | " << verdict_cell(d.shifted) << " |\n";
    out << "| collapsible | " << verdict_cell(s.collapsible) << " | " << verdict_cell(d.collapsible) << " |\n";
    for (const auto& [name, ok] : s.scm) {
      const auto it = d.scm.find(name);
      out << "| sequentially CM over " << name << " | " << (ok ? "yes" : "no") << " | "
          << (it == d.scm.end() ? "-" : (it->second ? "yes" : "no")) << " |\n";
    }
    for (const auto& [name, v] : s.extractible) {
      const auto it = d.extractible.find(name);
      out << "| extractible over " << name << " | " << verdict_cell(v) << " | "
          << (it == d.extractible.end() ? "-" : verdict_cell(it->second)) << " |\n";
    }
  }

  for (const auto& [name, b] : r.betti) {
    out << "\n## Bigraded Betti numbers over " << name << "\n\n| bidegree : dimension |\n|---|\n";
    for (const auto& [bd, n] : b.hochster.entries) out << "| " << bd.to_string() << " : " << n << " |\n";
    out << "\nHochster and Koszul tables " << (b.agree ? "agree" : "DIFFER") << ".\n";
  }

  if (!r.spanning.empty()) {
    out << "\n## Spanning facets of the dual\n\n| method | coefficients | facets | predicted | observed | match |\n"
           "|---|---|---|---|---|---|\n";
    for (const auto& s : r.spanning)
      out << "| " << s.method << " | " << s.coefficients.name() << " | " << gamma_cell(s) << " | "
          << s.predicted.to_string() << " | " << s.observed.to_string() << " | " << (s.match ? "yes" : "no") << " |\n";
  }

  if (!r.decomposition.empty()) {
    out << "\n## Moment-angle decomposition\n\n| coefficients | model | degree | predicted | computed | match |\n"
           "|---|---|---|---|---|---|\n";
    for (const auto& [name, d] : r.decomposition) {
      for (const auto& m : d.models) {
        if (m.degrees.empty()) out << "| " << name << " | " << to_string(m.pair) << " | - | 0 | 0 | yes |\n";
        for (const auto& deg : m.degrees)
          out << "| " << name << " | " << to_string(m.pair) << " | " << deg.degree << " | "
              << deg.predicted.to_string(d.coefficients.is_field()) << " | "
              << deg.computed.to_string(d.coefficients.is_field()) << " | "
              << (deg.match ? "yes" : "no") << " |\n";
      }
    }
  }

  if (r.wedge) {
    out << "\n## Wedge of spheres\n\n" << (r.wedge->match ? "pass" : "FAIL") << "\n";
    for (const auto& f : r.wedge->failures) out << "- " << f << "\n";
  }

  if (!r.golod.empty()) {
    out << "\n## Golod\n\n| field | golod | dual sequentially CM | products | witness |\n|---|---|---|---|---|\n";
    for (const auto& [name, g] : r.golod) {
      out << "| " << name << " | " << (g.verdict.golod ? "yes" : "no") << " | " << (g.dual_scm ? "yes" : "no")
          << " | " << g.verdict.products_checked << " | ";
      if (g.verdict.witness) {
        const auto& w = *g.verdict.witness;
        out << w.left.to_string() << " x " << w.right.to_string() << " -> " << w.product.to_string();
      } else {
        out << "-";
      }
      out << " |\n";
    }
  }

  out << "\n## Violations\n\n";
  if (r.violations.empty()) out << "none\n";
  for (const auto& v : r.violations) out << "- " << v << "\n";

  if (!r.timings_us.empty()) {
    out << "\n## Timings\n\n| stage | microseconds |\n|---|---|\n";
    for (const auto& [stage, us] : r.timings_us) out << "| " << stage << " | " << us << " |\n";
  }
  return out.str();
}

}  // namespace polyprod
