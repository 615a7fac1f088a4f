// gpends: ends of graph products from labelled graphs.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gpends/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw gpends::InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::optional<std::string> opt_path(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = gpends::cli;
  CLI::App app{"Number of ends of graph products of groups"};
  app.require_subcommand(1);

  std::string input = "-";
  bool as_json = false;
  std::string dot_path, csv_path;
  cli::OracleOptions oracle;
  cli::CrossCheckOptions cross;
  int corpus_count = 1, corpus_n = 5;
  double corpus_p = 0.5;
  std::uint64_t corpus_seed = 1;

  auto* classify = app.add_subcommand("classify", "end count, witness and dictionary checks");
  classify->add_option("--input,-i", input, "graph document (- for stdin)");
  classify->add_flag("--json", as_json, "JSON output");

  auto* decompose = app.add_subcommand("decompose", "tree of groups over finite clique separators");
  decompose->add_option("--input,-i", input, "graph document (- for stdin)");
  decompose->add_option("--dot", dot_path, "also write Graphviz DOT to this path");
  decompose->add_flag("--json", as_json, "JSON output (always on)");

  auto* orc = app.add_subcommand("oracle", "empirical end count from Cayley balls");
  orc->add_option("--input,-i", input, "graph document (- for stdin)");
  orc->add_option("--rmax", oracle.r_max, "largest removed radius")->check(CLI::Range(2, 64));
  orc->add_option("--margin", oracle.margin, "outer radius minus rmax")->check(CLI::Range(2, 64));
  orc->add_option("--cap", oracle.cap, "element cap for the ball");
  orc->add_option("--csv", csv_path, "write radius,sphere_size,shell_components CSV");
  orc->add_flag("--json", oracle.as_json, "JSON output");

  auto* cc = app.add_subcommand("crosscheck", "classifier vs oracle over all small graphs");
  cc->add_option("--nmax", cross.n_max, "largest vertex count")->check(CLI::Range(0, cli::kCrosscheckMaxVertices));
  cc->add_option("--pool", cross.pool, "cyclic orders to label with (2 and/or 3)")->delimiter(',');
  cc->add_option("--rmax", cross.r_max, "largest removed radius")->check(CLI::Range(2, 64));
  cc->add_option("--margin", cross.margin, "outer radius minus rmax")->check(CLI::Range(2, 64));
  cc->add_option("--seed", cross.seed, "relabelling seed");
  cc->add_option("--cap", cross.cap, "element cap per ball");
  cc->add_option("--threads", cross.threads, "worker threads (0: all cores)");
  cc->add_flag("--json", as_json, "JSON output");

  auto* corpus = app.add_subcommand("corpus", "seeded random graph documents, one per line");
  corpus->add_option("--count", corpus_count, "number of documents");
  corpus->add_option("--n", corpus_n, "vertices per graph");
  corpus->add_option("--p", corpus_p, "edge probability")->check(CLI::Range(0.0, 1.0));
  corpus->add_option("--seed", corpus_seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) return cli::cmd_classify(gpends::parse_graph_document(read_input(input)), as_json, std::cout);
    if (*decompose)
      return cli::cmd_decompose(gpends::parse_graph_document(read_input(input)), opt_path(dot_path), std::cout);
    if (*orc) {
      oracle.csv_path = opt_path(csv_path);
      return cli::cmd_oracle(gpends::parse_graph_document(read_input(input)), oracle, std::cout);
    }
    if (*cc) return cli::cmd_crosscheck(cross, as_json, std::cout);
    if (*corpus) return cli::cmd_corpus(corpus_count, corpus_n, corpus_p, corpus_seed, std::cout);
  } catch (const gpends::UnsupportedLabelError& e) {
    std::cerr << "unsupported labels: " << e.what() << "\n";
    return cli::kUnsupportedLabels;
  } catch (const gpends::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return cli::kResourceCap;
  } catch (const gpends::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return cli::kInputError;
  }
  return cli::kInputError;
}
