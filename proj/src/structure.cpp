#include "polyprod/structure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "polyprod/errors.hpp"
#include "polyprod/homology.hpp"

namespace polyprod {

const char* to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "?";
}

// ---------------------------------------------------------------- shelling

namespace {

// F may be appended after `earlier` iff every F ∩ G lies in some F ∩ G'
// of size |F| - 1.
bool extends_shelling(Simplex f, const std::vector<Simplex>& earlier) {
  std::vector<Simplex> ridges;
  for (Simplex g : earlier) {
    const Simplex x = f.intersect(g);
    if (x.size() == f.size() - 1) ridges.push_back(x);
  }
  for (Simplex g : earlier) {
    const Simplex x = f.intersect(g);
    const bool covered =
        std::any_of(ridges.begin(), ridges.end(), [x](Simplex r) { return x.is_subset_of(r); });
    if (!covered) return false;
  }
  return true;
}

class ShellingSearch {
 public:
  ShellingSearch(const std::vector<Simplex>& facets, std::uint64_t budget)
      : facets_(facets), budget_(budget), used_(facets.size(), false) {}

  enum class Outcome { Found, Failed, OutOfBudget };

  Outcome run() {
    if (order_.size() == facets_.size()) return Outcome::Found;
    if (++nodes_ > budget_) return Outcome::OutOfBudget;
    if (failed_.contains(used_)) return Outcome::Failed;
    int top = -2;
    for (std::size_t i = 0; i < facets_.size(); ++i)
      if (!used_[i]) top = std::max(top, facets_[i].dim());
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if (used_[i] || facets_[i].dim() != top) continue;
      if (!order_.empty() && !extends_shelling(facets_[i], order_)) continue;
      used_[i] = true;
      order_.push_back(facets_[i]);
      const Outcome r = run();
      if (r != Outcome::Failed) return r;
      order_.pop_back();
      used_[i] = false;
    }
    failed_.insert(used_);
    return Outcome::Failed;
  }

  const ShellingOrder& order() const { return order_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  const std::vector<Simplex>& facets_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<bool> used_;
  ShellingOrder order_;
  std::set<std::vector<bool>> failed_;
};

}  // namespace

bool verify_shelling(const SimplicialComplex& k, const ShellingOrder& order) {
  std::vector<Simplex> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != k.facets()) throw Error(ErrorCode::InvalidOrder, "not a permutation of the facets");
  std::vector<Simplex> earlier;
  for (Simplex f : order) {
    if (!earlier.empty() && !extends_shelling(f, earlier)) return false;
    earlier.push_back(f);
  }
  return true;
}

StructureVerdict find_shelling(const SimplicialComplex& k, std::uint64_t budget) {
  StructureVerdict v;
  v.property = "shellable";
  if (k.is_void()) {
    v.answer = Answer::No;
    v.detail = "void complex";
    return v;
  }
  ShellingSearch search(k.facets(), budget);
  const auto outcome = search.run();
  v.nodes = search.nodes();
  switch (outcome) {
    case ShellingSearch::Outcome::Found:
      v.answer = Answer::Yes;
      v.witness = search.order();
      break;
    case ShellingSearch::Outcome::Failed:
      v.answer = Answer::No;
      v.detail = "search exhausted";
      break;
    case ShellingSearch::Outcome::OutOfBudget:
      v.answer = Answer::Unknown;
      v.detail = "budget exhausted";
      break;
  }
  return v;
}

// --------------------------------------------------- sequential CM property

bool is_sequentially_cm(const SimplicialComplex& k, const Coefficients& c) {
  for (Simplex sigma : k.faces()) {
    const auto lk = link(k, sigma);
    for (int i = 0; i <= lk.dim(); ++i) {
      const auto skel = skeleton_ge(lk, i);
      if (skel.is_void()) continue;
      const auto h = reduced_homology(skel, c);
      for (const auto& [n, g] : h.groups()) {
        if (n < i) return false;
      }
    }
  }
  return true;
}

// ------------------------------------------------- vertex decomposability

namespace {

std::vector<std::uint32_t> facet_key(const SimplicialComplex& k) {
  std::vector<std::uint32_t> key;
  key.reserve(k.facets().size());
  for (Simplex f : k.facets()) key.push_back(f.bits());
  return key;
}

bool sheds(const SimplicialComplex& k, const SimplicialComplex& del) {
  return std::all_of(del.facets().begin(), del.facets().end(), [&](Simplex f) { return k.has_facet(f); });
}

class Decomposer {
 public:
  std::optional<SheddingTree> run(const SimplicialComplex& k) {
    if (k.is_simplex()) return SheddingTree{};
    const auto key = facet_key(k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::optional<SheddingTree> result;
    for (int v : k.vertex_set().vertices()) {
      const auto del = deletion(k, Simplex::from_vertices({v}));
      if (!sheds(k, del)) continue;
      auto d = run(del);
      if (!d) continue;
      auto l = run(link(k, Simplex::from_vertices({v})));
      if (!l) continue;
      result = SheddingTree{v, {std::move(*d), std::move(*l)}};
      break;
    }
    memo_.emplace(key, result);
    return result;
  }

  std::uint64_t states() const { return memo_.size(); }

 private:
  std::map<std::vector<std::uint32_t>, std::optional<SheddingTree>> memo_;
};

}  // namespace

StructureVerdict is_vertex_decomposable(const SimplicialComplex& k) {
  StructureVerdict v;
  v.property = "vertex-decomposable";
  if (k.is_void()) {
    v.answer = Answer::No;
    v.detail = "void complex";
    return v;
  }
  Decomposer d;
  auto tree = d.run(k);
  v.nodes = d.states();
  if (tree) {
    v.answer = Answer::Yes;
    v.witness = std::move(*tree);
  } else {
    v.answer = Answer::No;
    v.detail = "no shedding vertex sequence";
  }
  return v;
}

bool verify_shedding_tree(const SimplicialComplex& k, const SheddingTree& tree) {
  if (tree.vertex == 0) return tree.children.empty() && k.is_simplex();
  const Simplex v = Simplex::from_vertices({tree.vertex});
  if (tree.children.size() != 2 || !k.contains(v)) return false;
  const auto del = deletion(k, v);
  return sheds(k, del) && verify_shedding_tree(del, tree.children[0]) &&
         verify_shedding_tree(link(k, v), tree.children[1]);
}

// ---------------------------------------------------------------- shifted

bool is_shifted_under(const SimplicialComplex& k, const VertexOrder& order) {
  std::vector<int> sorted = order.labels;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != k.ground().vertices()) throw Error(ErrorCode::InvalidOrder, "not an order of the index set");
  // Checking facets suffices: a swap inside a facet stays inside it, and a
  // swap in a face extends to the same swap in its facet.
  for (Simplex f : k.facets()) {
    for (std::size_t a = 0; a < order.labels.size(); ++a) {
      const int i = order.labels[a];
      if (f.contains(i)) continue;
      for (std::size_t b = a + 1; b < order.labels.size(); ++b) {
        const int j = order.labels[b];
        if (f.contains(j) && !k.contains(f.without(j).with(i))) return false;
      }
    }
  }
  return true;
}

StructureVerdict is_shifted(const SimplicialComplex& k, const std::optional<VertexOrder>& order) {
  StructureVerdict v;
  v.property = "shifted";
  if (order) {
    v.nodes = 1;
    if (is_shifted_under(k, *order)) {
      v.answer = Answer::Yes;
      v.witness = *order;
    } else {
      v.answer = Answer::No;
      v.detail = "not shifted under the given order";
    }
    return v;
  }
  if (k.m() > 8) {
    v.answer = Answer::Unknown;
    v.detail = "order search limited to m <= 8";
    return v;
  }
  VertexOrder candidate{k.ground().vertices()};
  do {
    ++v.nodes;
    if (is_shifted_under(k, candidate)) {
      v.answer = Answer::Yes;
      v.witness = candidate;
      return v;
    }
  } while (std::next_permutation(candidate.labels.begin(), candidate.labels.end()));
  v.answer = Answer::No;
  v.detail = "no vertex order works";
  return v;
}

// ----------------------------------------------------------- collapsing

namespace {

using FacetList = std::vector<Simplex>;

bool in_other_facet(const FacetList& facets, Simplex face, Simplex skip) {
  return std::any_of(facets.begin(), facets.end(),
                     [&](Simplex f) { return f != skip && face.is_subset_of(f); });
}

std::vector<CollapseStep> free_pairs(const FacetList& facets) {
  std::vector<CollapseStep> out;
  for (Simplex tau : facets) {
    if (tau.size() < 2) continue;
    for (int v : tau.vertices()) {
      const Simplex sigma = tau.without(v);
      if (!in_other_facet(facets, sigma, tau)) out.push_back({sigma, tau});
    }
  }
  return out;
}

FacetList collapse(const FacetList& facets, const CollapseStep& step) {
  FacetList out;
  for (Simplex f : facets)
    if (f != step.coface) out.push_back(f);
  for (int u : step.coface.vertices()) {
    const Simplex face = step.coface.without(u);
    if (face == step.free_face) continue;
    if (!in_other_facet(out, face, Simplex{})) out.push_back(face);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_point(const FacetList& facets) { return facets.size() == 1 && facets.front().size() == 1; }

class CollapseSearch {
 public:
  explicit CollapseSearch(std::uint64_t budget) : budget_(budget) {}

  enum class Outcome { Found, Failed, OutOfBudget };

  Outcome run(const FacetList& facets) {
    if (is_point(facets)) return Outcome::Found;
    if (++nodes_ > budget_) return Outcome::OutOfBudget;
    std::vector<std::uint32_t> key;
    for (Simplex f : facets) key.push_back(f.bits());
    if (failed_.contains(key)) return Outcome::Failed;
    for (const auto& step : free_pairs(facets)) {
      seq_.push_back(step);
      const Outcome r = run(collapse(facets, step));
      if (r != Outcome::Failed) return r;
      seq_.pop_back();
    }
    failed_.insert(std::move(key));
    return Outcome::Failed;
  }

  const CollapseSequence& sequence() const { return seq_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  CollapseSequence seq_;
  std::set<std::vector<std::uint32_t>> failed_;
};

}  // namespace

StructureVerdict greedy_collapse(const SimplicialComplex& k, std::uint64_t budget) {
  StructureVerdict v;
  v.property = "collapsible";
  if (k.is_void() || k.is_empty_complex()) {
    v.answer = Answer::Unknown;
    v.detail = "no vertex";
    return v;
  }
  CollapseSearch search(budget);
  const auto outcome = search.run(k.facets());
  v.nodes = search.nodes();
  if (outcome == CollapseSearch::Outcome::Found) {
    v.answer = Answer::Yes;
    v.witness = search.sequence();
  } else {
    v.answer = Answer::Unknown;
    v.detail = outcome == CollapseSearch::Outcome::Failed ? "no collapse sequence found" : "budget exhausted";
  }
  return v;
}

bool verify_collapse(const SimplicialComplex& k, const CollapseSequence& seq) {
  FacetList facets = k.facets();
  for (const auto& step : seq) {
    const bool valid = step.free_face.size() >= 1 && step.free_face.size() + 1 == step.coface.size() &&
                       step.free_face.is_subset_of(step.coface) &&
                       std::binary_search(facets.begin(), facets.end(), step.coface) &&
                       !in_other_facet(facets, step.free_face, step.coface);
    if (!valid) return false;
    facets = collapse(facets, step);
  }
  return is_point(facets);
}

// --------------------------------------------------------- extractibility

namespace {

class Extractor {
 public:
  Extractor(const SimplicialComplex& k, const Coefficients& c)
      : k_(k), c_(c), apex_a_(k.ground().max_vertex() + 1), apex_b_(k.ground().max_vertex() + 2) {}

  std::optional<ExtractionTree> run(Simplex ground) {
    if (auto it = memo_.find(ground.bits()); it != memo_.end()) return it->second;
    auto result = certify(ground);
    memo_.emplace(ground.bits(), result);
    return result;
  }

  std::string failure;

 private:
  std::optional<ExtractionTree> certify(Simplex ground) {
    const auto verts = ground.vertices();
    for (int v : verts) {
      if (induced(k_, ground.without(v)).is_simplex()) return ExtractionTree{ground, 1, v, {}};
    }
    ExtractionTree tree{ground, 2, 0, {}};
    std::vector<SimplicialComplex> subs;
    for (int v : verts) {
      auto child = run(ground.without(v));
      if (!child) {
        failure = "deletion of " + std::to_string(v) + " on " + ground.to_string() + " not certified";
        return std::nullopt;
      }
      tree.children.push_back(std::move(*child));
      subs.push_back(suspension(induced(k_, ground.without(v)), apex_a_, apex_b_));
    }
    const auto whole = suspension(induced(k_, ground), apex_a_, apex_b_);
    const auto h = reduced_homology(whole, c_);
    for (const auto& [n, g] : h.groups()) {
      if (inclusion_image_rank(whole, subs, n, c_) != g.rank) {
        failure = "surjectivity fails in degree " + std::to_string(n) + " on " + ground.to_string();
        return std::nullopt;
      }
    }
    return tree;
  }

  const SimplicialComplex& k_;
  Coefficients c_;
  int apex_a_;
  int apex_b_;
  std::map<std::uint32_t, std::optional<ExtractionTree>> memo_;
};

}  // namespace

StructureVerdict extractibility_certificate(const SimplicialComplex& k, const Coefficients& c) {
  if (!c.is_field()) throw std::invalid_argument("extractibility_certificate needs field coefficients");
  if (k.has_ghost_vertex()) throw Error(ErrorCode::GhostVertex, "ghost vertices " + k.ghost_vertices().to_string());
  StructureVerdict v;
  v.property = "extractible (homological shadow)";
  Extractor e(k, c);
  auto tree = e.run(k.ground());
  if (tree) {
    v.answer = Answer::Yes;
    v.witness = std::move(*tree);
  } else {
    v.answer = Answer::No;
    v.detail = e.failure;
  }
  return v;
}

}  // namespace polyprod

namespace polyprod {

namespace {

bool check_extraction_node(const SimplicialComplex& k, const ExtractionTree& node, const Coefficients& c, int apex_a,
                           int apex_b) {
  if (!node.ground.is_subset_of(k.ground())) return false;
  if (node.condition == 1)
    return node.children.empty() && node.ground.contains(node.vertex) &&
           induced(k, node.ground.without(node.vertex)).is_simplex();
  if (node.condition != 2) return false;
  const auto verts = node.ground.vertices();
  if (node.children.size() != verts.size()) return false;
  std::vector<SimplicialComplex> subs;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const auto& child = node.children[i];
    if (child.ground != node.ground.without(verts[i])) return false;
    if (!check_extraction_node(k, child, c, apex_a, apex_b)) return false;
    subs.push_back(suspension(induced(k, child.ground), apex_a, apex_b));
  }
  const auto whole = suspension(induced(k, node.ground), apex_a, apex_b);
  const auto h = reduced_homology(whole, c);
  for (const auto& [n, g] : h.groups())
    if (inclusion_image_rank(whole, subs, n, c) != g.rank) return false;
  return true;
}

}  // namespace

bool verify_extraction_tree(const SimplicialComplex& k, const ExtractionTree& tree, const Coefficients& c) {
  if (!c.is_field() || k.has_ghost_vertex() || tree.ground != k.ground()) return false;
  const int top = k.ground().max_vertex();
  return check_extraction_node(k, tree, c, top + 1, top + 2);
}

}  // namespace polyprod
