#pragma once

// Subcommand bodies for the gpends tool. Each writes its report to `out`
// and returns the process exit code.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "gpends/classifier.hpp"
#include "gpends/decomposer.hpp"
#include "gpends/document.hpp"
#include "gpends/enumerate.hpp"
#include "gpends/oracle.hpp"

namespace gpends::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kUnsupportedLabels = 2,
  kResourceCap = 3,
  kDisagreement = 4,
};

inline constexpr int kCrosscheckMaxVertices = 5;

using ojson = nlohmann::ordered_json;

namespace detail {

inline ojson names_of(const GraphDocument& doc, const VertexSet& s) {
  ojson out = ojson::array();
  for (Vertex v : s) out.push_back(doc.ids.at(static_cast<std::size_t>(v)));
  return out;
}

inline std::string names_text(const GraphDocument& doc, const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + doc.ids.at(static_cast<std::size_t>(s[i]));
  return out + "}";
}

inline ojson witness_json(const GraphDocument& doc, const EndsWitness& w) {
  ojson out;
  out["kind"] = witness_kind(w);
  if (auto* x = std::get_if<witness::CompleteOneMultiEnded>(&w)) out["vertex"] = doc.ids.at(static_cast<std::size_t>(x->vertex));
  if (auto* x = std::get_if<witness::CompleteOneOneEnded>(&w)) out["vertex"] = doc.ids.at(static_cast<std::size_t>(x->vertex));
  if (auto* x = std::get_if<witness::FiniteCliqueSeparator>(&w)) out["separator"] = names_of(doc, x->separator);
  if (auto* x = std::get_if<witness::JoinTwoZ2>(&w)) {
    out["universal"] = names_of(doc, x->universal);
    out["pair"] = names_of(doc, x->pair);
  }
  return out;
}

inline std::string witness_text(const GraphDocument& doc, const EndsWitness& w) {
  std::string out = witness_kind(w);
  if (auto* x = std::get_if<witness::CompleteOneMultiEnded>(&w)) out += " vertex " + doc.ids.at(static_cast<std::size_t>(x->vertex));
  if (auto* x = std::get_if<witness::CompleteOneOneEnded>(&w)) out += " vertex " + doc.ids.at(static_cast<std::size_t>(x->vertex));
  if (auto* x = std::get_if<witness::FiniteCliqueSeparator>(&w)) out += " separator " + names_text(doc, x->separator);
  if (auto* x = std::get_if<witness::JoinTwoZ2>(&w))
    out += " universal " + names_text(doc, x->universal) + " pair " + names_text(doc, x->pair);
  return out;
}

}  // namespace detail

/// Ends, witness, finiteness and (for finite labels) the dictionary checks.
inline ojson classify_report(const GraphDocument& doc) {
  const auto& lg = doc.graph;
  const EndsVerdict v = ends(lg);
  ojson out;
  out["name"] = doc.name;
  out["ends"] = to_string(v.ends);
  out["witness"] = detail::witness_json(doc, v.witness);
  out["finite"] = is_finite_group(lg);
  if (auto order = special_subgroup_order(lg, lg.graph().vertices())) out["order"] = *order;
  if (lg.all_finite()) {
    out["hyperbolic"] = is_hyperbolic(lg);
    out["virtually_free"] = is_virtually_free(lg);
  } else {
    out["notice"] = "hyperbolic and virtually_free omitted: not all vertex groups are finite";
  }
  return out;
}

inline int cmd_classify(const GraphDocument& doc, bool as_json, std::ostream& out) {
  const ojson rep = classify_report(doc);
  if (as_json) {
    out << rep.dump(2) << "\n";
    return kOk;
  }
  const EndsVerdict v = ends(doc.graph);
  out << "name: " << doc.name << "\n";
  out << "ends: " << to_string(v.ends) << "\n";
  out << "witness: " << detail::witness_text(doc, v.witness) << "\n";
  out << "finite: " << (rep["finite"].get<bool>() ? "true" : "false") << "\n";
  if (rep.contains("order")) out << "order: " << rep["order"].get<std::int64_t>() << "\n";
  if (rep.contains("hyperbolic")) {
    out << "hyperbolic: " << (rep["hyperbolic"].get<bool>() ? "true" : "false") << "\n";
    out << "virtually_free: " << (rep["virtually_free"].get<bool>() ? "true" : "false") << "\n";
  } else {
    out << "notice: " << rep["notice"].get<std::string>() << "\n";
  }
  return kOk;
}

inline ojson tree_json(const GraphDocument& doc, const GroupTree& t) {
  ojson out;
  out["name"] = doc.name;
  out["nodes"] = ojson::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    ojson node;
    node["id"] = i;
    node["vertices"] = detail::names_of(doc, t.nodes[i]);
    if (auto order = special_subgroup_order(doc.graph, t.nodes[i])) node["order"] = *order;
    node["ends"] = to_string(ends(doc.graph.restrict_to(t.nodes[i])).ends);
    out["nodes"].push_back(std::move(node));
  }
  out["edges"] = ojson::array();
  for (const auto& e : t.edges) {
    ojson edge;
    edge["source"] = e.a;
    edge["target"] = e.b;
    edge["label"] = detail::names_of(doc, e.label);
    edge["order"] = special_subgroup_order(doc.graph, e.label).value_or(0);
    out["edges"].push_back(std::move(edge));
  }
  return out;
}

inline int cmd_decompose(const GraphDocument& doc, const std::optional<std::string>& dot_path, std::ostream& out) {
  const GroupTree t = tree_of_groups(doc.graph);
  out << tree_json(doc, t).dump(2) << "\n";
  if (dot_path) {
    std::ofstream f(*dot_path);
    if (!f) throw InputError("cannot write " + *dot_path);
    f << render_dot(t, doc.graph, doc.ids);
  }
  return kOk;
}

struct OracleOptions {
  int r_max = kDefaultRMax;
  int margin = kDefaultMargin;
  std::size_t cap = kDefaultBallCap;
  std::optional<std::string> csv_path;
  bool as_json = false;
};

inline std::string estimate_csv(const EstimateReport& rep) {
  std::ostringstream os;
  os << "radius,sphere_size,shell_components\n";
  for (std::size_t r = 0; r < rep.sphere_sizes.size(); ++r) {
    os << r << "," << rep.sphere_sizes[r] << ",";
    if (r >= 1 && r <= rep.shell_component_counts.size()) os << rep.shell_component_counts[r - 1];
    os << "\n";
  }
  return os.str();
}

inline ojson estimate_json(const GraphDocument& doc, const EstimateReport& rep) {
  ojson out;
  out["name"] = doc.name;
  out["inner_radius"] = rep.inner_radius;
  out["outer_radius"] = rep.outer_radius;
  out["sphere_sizes"] = rep.sphere_sizes;
  out["shell_component_counts"] = rep.shell_component_counts;
  out["verdict"] = to_string(rep.verdict);
  if (rep.element_count) out["element_count"] = *rep.element_count;
  out["capped"] = rep.capped;
  return out;
}

inline int cmd_oracle(const GraphDocument& doc, const OracleOptions& opt, std::ostream& out) {
  const EstimateReport rep = ends_estimate(doc.graph, opt.r_max, opt.margin, opt.cap);
  if (opt.as_json) {
    out << estimate_json(doc, rep).dump(2) << "\n";
  } else {
    auto join = [](const auto& xs) {
      std::string s = "[";
      for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
      return s + "]";
    };
    out << "name: " << doc.name << "\n";
    out << "inner_radius: " << rep.inner_radius << "\n";
    out << "outer_radius: " << rep.outer_radius << "\n";
    out << "sphere_sizes: " << join(rep.sphere_sizes) << "\n";
    out << "shell_component_counts: " << join(rep.shell_component_counts) << "\n";
    out << "verdict: " << to_string(rep.verdict) << "\n";
    if (rep.element_count) out << "element_count: " << *rep.element_count << "\n";
    if (rep.capped) out << "capped: element cap " << opt.cap << " reached at radius " << rep.sphere_sizes.size() - 1 << "\n";
  }
  if (opt.csv_path) {
    std::ofstream f(*opt.csv_path);
    if (!f) throw InputError("cannot write " + *opt.csv_path);
    f << estimate_csv(rep);
  }
  return rep.capped ? kResourceCap : kOk;
}

struct CrossCheckRecord {
  std::string hash;
  GraphDocument doc;
  EndsClass classifier;
  OracleVerdict oracle;
  /// Empty when the oracle was inconclusive.
  std::optional<bool> agree;
};

struct CrossCheckSummary {
  std::size_t total = 0;
  std::size_t conclusive = 0;
  std::size_t agreements = 0;
  std::size_t inconclusive = 0;
  std::vector<CrossCheckRecord> records;
};

struct CrossCheckOptions {
  int n_max = 4;
  std::vector<std::int64_t> pool = {2, 3};
  int r_max = kDefaultRMax;
  int margin = kDefaultMargin;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultBallCap;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Classifier against oracle over every small labelled graph. Each graph is
/// relabelled by a seeded random permutation before both run.
inline CrossCheckSummary crosscheck(const CrossCheckOptions& opt) {
  if (opt.n_max > kCrosscheckMaxVertices)
    throw InputError("n_max must be at most " + std::to_string(kCrosscheckMaxVertices));
  std::vector<GroupLabel> pool;
  for (auto n : opt.pool) {
    if (n != 2 && n != 3) throw InputError("cross-check label pool is limited to cyclic 2 and cyclic 3");
    pool.push_back(GroupLabel::cyclic(n));
  }
  const auto graphs = enumerate_labelled_graphs(opt.n_max, pool);
  std::mt19937_64 rng(opt.seed);
  std::vector<LabelledGraph> inputs;
  inputs.reserve(graphs.size());
  for (const auto& g : graphs) inputs.push_back(permute(g, random_permutation(rng, g.vertex_count())));

  std::vector<CrossCheckRecord> records(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();) {
      const auto& lg = inputs[i];
      CrossCheckRecord& rec = records[i];
      rec.doc = make_document("", lg);
      rec.hash = fnv1a_hex(canonical_key(lg));
      rec.doc.name = rec.hash;
      rec.classifier = ends(lg).ends;
      rec.oracle = ends_estimate(lg, opt.r_max, opt.margin, opt.cap).verdict;
      if (auto e = as_ends(rec.oracle)) rec.agree = *e == rec.classifier;
    }
  };
  unsigned n_threads = opt.threads ? opt.threads : std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::thread> pool_threads;
  for (unsigned t = 1; t < n_threads; ++t) pool_threads.emplace_back(worker);
  worker();
  for (auto& t : pool_threads) t.join();

  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.hash < b.hash; });
  CrossCheckSummary s;
  s.total = records.size();
  for (const auto& r : records) {
    if (!r.agree) {
      ++s.inconclusive;
      continue;
    }
    ++s.conclusive;
    if (*r.agree) ++s.agreements;
  }
  s.records = std::move(records);
  return s;
}

inline int cmd_crosscheck(const CrossCheckOptions& opt, bool as_json, std::ostream& out) {
  const CrossCheckSummary s = crosscheck(opt);
  ojson summary{{"total", s.total}, {"conclusive", s.conclusive}, {"agreements", s.agreements},
                {"inconclusive", s.inconclusive}};
  auto agree_text = [](const CrossCheckRecord& r) {
    return r.agree ? (*r.agree ? "true" : "false") : "n/a";
  };
  if (as_json) {
    ojson rep;
    rep["records"] = ojson::array();
    for (const auto& r : s.records)
      rep["records"].push_back({{"hash", r.hash},
                                {"classifier", to_string(r.classifier)},
                                {"oracle", to_string(r.oracle)},
                                {"agree", r.agree ? ojson(*r.agree) : ojson("n/a")}});
    rep["summary"] = summary;
    out << rep.dump(2) << "\n";
  } else {
    for (const auto& r : s.records)
      out << r.hash << " classifier=" << to_string(r.classifier) << " oracle=" << to_string(r.oracle)
          << " agree=" << agree_text(r) << "\n";
    out << "summary: " << summary.dump() << "\n";
  }
  if (s.agreements == s.conclusive) return kOk;
  std::cerr << "cross-check disagreements:\n";
  for (const auto& r : s.records)
    if (r.agree && !*r.agree) std::cerr << "  " << to_json(r.doc).dump() << "\n";
  return kDisagreement;
}

/// Seeded stream of random documents, one compact JSON object per line.
inline int cmd_corpus(int count, int n, double edge_prob, std::uint64_t seed, std::ostream& out) {
  if (count < 0 || n < 0) throw InputError("count and n must be non-negative");
  if (edge_prob < 0.0 || edge_prob > 1.0) throw InputError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  const auto pool = default_fuzz_pool();
  for (int i = 0; i < count; ++i) {
    auto doc = make_document("random-" + std::to_string(seed) + "-" + std::to_string(i),
                             random_labelled_graph(rng, n, edge_prob, pool));
    out << to_json(doc).dump() << "\n";
  }
  return kOk;
}

}  // namespace gpends::cli
