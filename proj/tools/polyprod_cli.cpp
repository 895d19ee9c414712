#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyprod/corpus.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/facet_io.hpp"
#include "polyprod/report.hpp"

using namespace polyprod;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct SourceFlags {
  std::string file;
  std::string named;
  std::string enumerated;
};

struct CommonFlags {
  std::string coeffs = "Z,F2,F3,Q";
  std::uint64_t budget = kDefaultBudget;
  std::string format = "markdown";
  std::string out;
  bool timings = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_source(CLI::App* cmd, SourceFlags& src) {
  cmd->add_option("file", src.file, "Facet file");
  cmd->add_option("--named", src.named, "Named complex, e.g. cycle:4 or skeleton:1,4");
  cmd->add_option("--enum", src.enumerated, "Corpus complex n:index (0-based)");
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--coeffs", flags.coeffs, "Comma-separated coefficients (Z, Q, F<p>)");
  cmd->add_option("--budget", flags.budget, "Search budget for shelling and collapse");
  cmd->add_option("--format", flags.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
  cmd->add_option("--out", flags.out, "Write output here instead of stdout");
  cmd->add_flag("--timings", flags.timings, "Record per-stage wall-clock time");
}

ComplexSource source_of(const SourceFlags& src) {
  const int given = !src.file.empty() + !src.named.empty() + !src.enumerated.empty();
  if (given != 1) throw UsageError("give exactly one of: a facet file, --named, --enum");
  if (!src.file.empty()) return FileSource{src.file};
  if (!src.named.empty()) return parse_named_source(src.named);
  return parse_enumerated_source(src.enumerated);
}

AnalysisOptions options_of(const CommonFlags& flags) {
  AnalysisOptions opt;
  opt.coefficients.clear();
  std::stringstream list(flags.coeffs);
  std::string word;
  while (std::getline(list, word, ',')) {
    if (word.empty()) continue;
    try {
      opt.coefficients.push_back(Coefficients::parse(word));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  opt.budget = flags.budget;
  opt.timings = flags.timings;
  return opt;
}

void emit(const CommonFlags& flags, const std::string& text) {
  if (flags.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(flags.out);
  if (!out) throw UsageError("cannot write " + flags.out);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

int run_analyze(const SourceFlags& src, const CommonFlags& flags) {
  const auto report = analyze(source_of(src), options_of(flags));
  emit(flags, flags.format == "json" ? to_json(report) : to_markdown(report));
  return report.violations.empty() ? kExitOk : kExitViolation;
}

int run_golod(const SourceFlags& src, const CommonFlags& flags) {
  const auto source = source_of(src);
  const auto k = resolve(source);
  const auto opt = options_of(flags);
  const auto dual = alexander_dual(k);
  nlohmann::ordered_json j;
  j["source"] = source_label(source);
  std::ostringstream md;
  md << "| field | golod | dual sequentially CM | witness |\n|---|---|---|---|\n";
  bool violated = false;
  for (const auto& c : opt.coefficients) {
    if (!c.is_field()) continue;
    const auto g = is_golod(k, c);
    const bool dual_scm = is_sequentially_cm(dual, c);
    const bool bad = dual_scm && !g.golod && !k.has_ghost_vertex();
    violated = violated || bad;
    auto& e = j["fields"][c.name()];
    e["golod"] = g.golod;
    e["dual_scm"] = dual_scm;
    e["products_checked"] = std::to_string(g.products_checked);
    md << "| " << c.name() << " | " << (g.golod ? "yes" : "no") << " | " << (dual_scm ? "yes" : "no") << " | ";
    if (g.witness) {
      e["witness"] = g.witness->left.to_string() + "x" + g.witness->right.to_string() + "->" +
                     g.witness->product.to_string();
      md << g.witness->left.to_string() << " x " << g.witness->right.to_string() << " -> "
         << g.witness->product.to_string() << ": (" << g.witness->left_rep << ")(" << g.witness->right_rep
         << ") = " << g.witness->product_rep;
    } else {
      md << "-";
    }
    md << " |\n";
    if (bad) md << "\ncounterexample: dual sequentially Cohen-Macaulay over " << c.name() << " but not Golod\n";
  }
  j["counterexample"] = violated;
  emit(flags, flags.format == "json" ? j.dump(2) : md.str());
  return violated ? kExitViolation : kExitOk;
}

int run_decompose(const SourceFlags& src, const CommonFlags& flags) {
  const auto source = source_of(src);
  const auto k = resolve(source);
  const auto opt = options_of(flags);
  AnalysisReport report;
  report.source = source_label(source);
  report.complex = k;
  report.hash = complex_hash(k);
  for (const auto& c : opt.coefficients) report.coefficients.push_back(c.name());
  bool ok = true;
  for (const auto& c : opt.coefficients) {
    auto d = verify_decomposition(k, c);
    ok = ok && d.match;
    report.decomposition[c.name()] = std::move(d);
  }
  try {
    report.wedge = verify_wedge_of_spheres(k);
    ok = ok && report.wedge->match;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotApplicable) throw;
  }
  if (!ok) report.violations.push_back("moment-angle decomposition check failed");
  emit(flags, flags.format == "json" ? to_json(report) : to_markdown(report));
  return ok ? kExitOk : kExitViolation;
}

int run_dual(const SourceFlags& src, const CommonFlags& flags) {
  const auto k = resolve(source_of(src));
  emit(flags, write_facet_file(alexander_dual(k)));
  return kExitOk;
}

struct CorpusRow {
  std::string source;
  AnalysisReport report;
};

int run_corpus(const std::vector<int>& sizes, const std::vector<std::string>& named, unsigned threads,
               const CommonFlags& flags) {
  std::vector<std::pair<std::string, SimplicialComplex>> items;
  for (int n : sizes) {
    const auto all = enumerate_complexes(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      items.emplace_back(source_label(EnumeratedSource{n, i}), all[i]);
  }
  for (const auto& spec : named) {
    const ComplexSource src = parse_named_source(spec);
    items.emplace_back(source_label(src), resolve(src));
  }
  const auto opt = options_of(flags);
  std::vector<AnalysisReport> reports(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        reports[i] = analyze(items[i].second, items[i].first, opt);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::size_t violations = 0;
  nlohmann::ordered_json j;
  j["complexes"] = nlohmann::ordered_json::array();
  std::ostringstream md;
  md << "| source | facets | dual shellable | golod | decomposition | violations |\n|---|---|---|---|---|---|\n";
  for (const auto& r : reports) {
    violations += r.violations.size();
    std::string facets;
    for (Simplex f : r.complex.facets()) facets += (facets.empty() ? "" : " ") + f.to_string();
    std::string golod;
    for (const auto& [name, g] : r.golod) golod += (golod.empty() ? "" : " ") + name + "=" + (g.verdict.golod ? "yes" : "no");
    bool decomposition = true;
    for (const auto& [name, d] : r.decomposition) decomposition = decomposition && d.match;
    const char* shellable = r.dual_structure ? to_string(r.dual_structure->shellable.answer) : "-";
    md << "| " << r.source << " | " << facets << " | " << shellable << " | " << (golod.empty() ? "-" : golod)
       << " | " << (r.decomposition.empty() ? "-" : decomposition ? "match" : "MISMATCH") << " | "
       << r.violations.size() << " |\n";
    nlohmann::ordered_json e;
    e["source"] = r.source;
    e["hash"] = r.hash;
    e["facets"] = facets;
    e["dual_shellable"] = shellable;
    if (!r.golod.empty())
      for (const auto& [name, g] : r.golod) e["golod"][name] = g.verdict.golod;
    if (!r.decomposition.empty()) e["decomposition_match"] = decomposition;
    e["violations"] = r.violations;
    j["complexes"].push_back(std::move(e));
  }
  md << "\n" << reports.size() << " complexes, " << violations << " violations\n";
  for (const auto& r : reports)
    for (const auto& v : r.violations) md << "- " << r.source << ": " << v << "\n";
  j["summary"]["complexes"] = std::to_string(reports.size());
  j["summary"]["violations"] = std::to_string(violations);
  emit(flags, flags.format == "json" ? j.dump(2) : md.str());
  return violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polyhedral products, Golod complexes and their homology"};
  app.require_subcommand(1);

  SourceFlags src;
  CommonFlags flags;
  std::vector<int> sizes = {1, 2, 3, 4};
  std::vector<std::string> named;
  unsigned threads = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report");
  auto* golod_cmd = app.add_subcommand("golod", "Golod verdicts and the dual-SCM check");
  auto* decompose_cmd = app.add_subcommand("decompose", "Moment-angle homology against its decomposition");
  auto* dual_cmd = app.add_subcommand("dual", "Print the Alexander dual as a facet file");
  for (auto* cmd : {analyze_cmd, golod_cmd, decompose_cmd, dual_cmd}) {
    add_source(cmd, src);
    add_common(cmd, flags);
  }
  auto* corpus_cmd = app.add_subcommand("corpus", "Sweep the enumerated corpus and named complexes");
  add_common(corpus_cmd, flags);
  corpus_cmd->add_option("--sizes", sizes, "Index-set sizes to enumerate (1..4)");
  corpus_cmd->add_option("--named", named, "Extra named complexes");
  corpus_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return run_analyze(src, flags);
    if (golod_cmd->parsed()) return run_golod(src, flags);
    if (decompose_cmd->parsed()) return run_decompose(src, flags);
    if (dual_cmd->parsed()) return run_dual(src, flags);
    if (corpus_cmd->parsed()) return run_corpus(sizes, named, threads, flags);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::Parse || e.code() == ErrorCode::Unsupported;
    return usage ? kExitUsage : kExitViolation;
  }
  return kExitUsage;
}
