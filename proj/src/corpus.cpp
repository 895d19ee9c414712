#include "polyprod/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "polyprod/errors.hpp"
#include "polyprod/facet_io.hpp"
#include "polyprod/homology.hpp"

namespace polyprod {

namespace {

void extend(const std::vector<Simplex>& pool, std::size_t next, std::vector<Simplex>& chosen, Simplex ground,
            std::vector<SimplicialComplex>& out) {
  Simplex covered;
  for (Simplex f : chosen) covered = covered.unite(f);
  if (!chosen.empty() && covered == ground) out.push_back(SimplicialComplex::from_facets(ground, chosen));
  for (std::size_t i = next; i < pool.size(); ++i) {
    const bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](Simplex f) {
      return f.is_subset_of(pool[i]) || pool[i].is_subset_of(f);
    });
    if (comparable) continue;
    chosen.push_back(pool[i]);
    extend(pool, i + 1, chosen, ground, out);
    chosen.pop_back();
  }
}

void expect_params(const std::string& name, const std::vector<int>& params, std::size_t count) {
  if (params.size() != count)
    throw Error(ErrorCode::Parse,
                name + " takes " + std::to_string(count) + " parameter" + (count == 1 ? "" : "s"));
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

int parse_int(const std::string& word, const std::string& context) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size() || word.empty())
    throw Error(ErrorCode::Parse, "bad integer '" + word + "' in " + context);
  return value;
}

}  // namespace

std::vector<SimplicialComplex> enumerate_complexes(int n) {
  if (n < 1 || n > 4) throw Error(ErrorCode::Unsupported, "enumeration needs 1 <= n <= 4, got " + std::to_string(n));
  const Simplex ground = Simplex::range(n);
  std::vector<Simplex> pool;
  for (Simplex s : subsets_of(ground))
    if (!s.empty()) pool.push_back(s);
  std::sort(pool.begin(), pool.end());
  std::vector<SimplicialComplex> out;
  std::vector<Simplex> chosen;
  extend(pool, 0, chosen, ground, out);
  std::sort(out.begin(), out.end(), [](const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets() < b.facets();
  });
  return out;
}

SimplicialComplex named_complex(const std::string& name, const std::vector<int>& params) {
  if (name == "simplex") {
    expect_params(name, params, 1);
    require(params[0] >= 0 && params[0] < 20, "simplex dimension out of range");
    return SimplicialComplex::full_simplex(Simplex::range(params[0] + 1));
  }
  if (name == "boundary-simplex") {
    expect_params(name, params, 1);
    require(params[0] >= 0 && params[0] < 20, "simplex dimension out of range");
    const Simplex ground = Simplex::range(params[0] + 1);
    std::vector<Simplex> facets;
    for (int v : ground.vertices()) facets.push_back(ground.without(v));
    return SimplicialComplex::from_facets(ground, facets);
  }
  if (name == "cycle") {
    expect_params(name, params, 1);
    const int n = params[0];
    require(n >= 3 && n <= 32, "cycle needs 3 <= n <= 32");
    std::vector<Simplex> facets;
    for (int v = 1; v <= n; ++v) facets.push_back(Simplex::from_vertices({v, v % n + 1}));
    return SimplicialComplex::from_facets(Simplex::range(n), facets);
  }
  if (name == "points") {
    expect_params(name, params, 1);
    require(params[0] >= 1 && params[0] <= 32, "points needs 1 <= n <= 32");
    std::vector<Simplex> facets;
    for (int v = 1; v <= params[0]; ++v) facets.push_back(Simplex::from_vertices({v}));
    return SimplicialComplex::from_facets(Simplex::range(params[0]), facets);
  }
  if (name == "skeleton") {
    expect_params(name, params, 2);
    const int d = params[0];
    const int m = params[1];
    require(m >= 1 && m <= 32 && d >= 0 && d < m, "skeleton needs 0 <= d < m <= 32");
    return SimplicialComplex::from_facets(Simplex::range(m), subsets_of_size(Simplex::range(m), d + 1));
  }
  if (name == "disjoint-edges") {
    expect_params(name, params, 1);
    require(params[0] >= 1 && params[0] <= 16, "disjoint-edges needs 1 <= k <= 16");
    std::vector<Simplex> facets;
    for (int i = 0; i < params[0]; ++i) facets.push_back(Simplex::from_vertices({2 * i + 1, 2 * i + 2}));
    return SimplicialComplex::from_facets(Simplex::range(2 * params[0]), facets);
  }
  if (name == "rp2-6") {
    expect_params(name, params, 0);
    const std::vector<std::vector<int>> list = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                                {2, 3, 5}, {3, 5, 6}, {3, 4, 6}, {2, 4, 6}, {2, 4, 5}};
    std::vector<Simplex> facets;
    for (const auto& f : list) facets.push_back(Simplex::from_vertices(f));
    auto k = SimplicialComplex::from_facets(Simplex::range(6), facets);
    const auto h = reduced_homology(k, Coefficients::integers());
    if (!(h.at(1) == HomologyGroup{0, {BigInt(2)}}) || h.groups().size() != 1)
      throw Error(ErrorCode::Internal, "rp2-6 self-check failed: " + h.to_string());
    return k;
  }
  throw Error(ErrorCode::Parse, "unknown complex '" + name + "'");
}

std::vector<std::string> named_complex_help() {
  return {"simplex:d", "boundary-simplex:d", "cycle:n", "points:n", "skeleton:d,m", "rp2-6", "disjoint-edges:k"};
}

NamedSource parse_named_source(const std::string& spec) {
  NamedSource src;
  const auto colon = spec.find(':');
  src.name = spec.substr(0, colon);
  if (colon == std::string::npos) return src;
  std::stringstream rest(spec.substr(colon + 1));
  std::string word;
  while (std::getline(rest, word, ',')) src.params.push_back(parse_int(word, spec));
  return src;
}

EnumeratedSource parse_enumerated_source(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::Parse, "expected n:index, got '" + spec + "'");
  const int n = parse_int(spec.substr(0, colon), spec);
  const int index = parse_int(spec.substr(colon + 1), spec);
  if (index < 0) throw Error(ErrorCode::Parse, "negative index in '" + spec + "'");
  return {n, static_cast<std::size_t>(index)};
}

std::string source_label(const ComplexSource& src) {
  if (const auto* f = std::get_if<FileSource>(&src)) return f->path;
  if (const auto* e = std::get_if<EnumeratedSource>(&src))
    return "enum:" + std::to_string(e->n) + ":" + std::to_string(e->index);
  const auto& named = std::get<NamedSource>(src);
  std::string out = named.name;
  for (std::size_t i = 0; i < named.params.size(); ++i) out += (i == 0 ? ":" : ",") + std::to_string(named.params[i]);
  return out;
}

SimplicialComplex resolve(const ComplexSource& src) {
  if (const auto* f = std::get_if<FileSource>(&src)) {
    std::ifstream in(f->path);
    if (!in) throw Error(ErrorCode::Parse, "cannot read " + f->path);
    std::stringstream text;
    text << in.rdbuf();
    return parse_facet_file(text.str());
  }
  if (const auto* e = std::get_if<EnumeratedSource>(&src)) {
    auto all = enumerate_complexes(e->n);
    if (e->index >= all.size())
      throw Error(ErrorCode::Parse, "index " + std::to_string(e->index) + " out of range for n = " +
                                        std::to_string(e->n) + " (" + std::to_string(all.size()) + " complexes)");
    return all[e->index];
  }
  const auto& named = std::get<NamedSource>(src);
  return named_complex(named.name, named.params);
}

}  // namespace polyprod
