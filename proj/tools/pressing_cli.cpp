#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pressing/cholesky.hpp"
#include "pressing/genesis.hpp"
#include "pressing/graph.hpp"
#include "pressing/recognition.hpp"

using namespace pressing;

namespace {

constexpr int exit_no = 1;
constexpr int exit_usage = 2;

// Exit status 1: the input was well-formed but the operation refused it.
struct Refused : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string format;
  std::string output_format = "graph";
  std::string dot;
  std::vector<std::string> sequence;
  bool trace = false;
  std::size_t n = 0;
  std::size_t jobs = 1;
  std::size_t oracle_bound = 5;
};

TextFormat parse_format(const std::string& name) {
  if (name.empty()) return TextFormat::automatic;
  return name == "matrix" ? TextFormat::matrix : TextFormat::graph;
}

std::vector<PseudoGraph> load(const Options& opt) {
  std::vector<PseudoGraph> graphs;
  if (opt.input == "-") {
    graphs = read_graphs(std::cin, parse_format(opt.format));
  } else {
    std::ifstream file(opt.input);
    if (!file) throw InvalidArgument("cannot open " + opt.input);
    graphs = read_graphs(file, parse_format(opt.format));
  }
  if (graphs.empty()) throw ParseError(1, "empty input");
  return graphs;
}

PseudoGraph load_one(const Options& opt) {
  std::vector<PseudoGraph> graphs = load(opt);
  if (graphs.size() != 1) throw InvalidArgument("expected exactly one graph, got " + std::to_string(graphs.size()));
  return std::move(graphs.front());
}

void write_dot(const Options& opt, const PseudoGraph& g) {
  if (opt.dot.empty()) return;
  std::ofstream file(opt.dot);
  if (!file) throw InvalidArgument("cannot write " + opt.dot);
  file << to_dot(g);
}

int cmd_recognize(const Options& opt) {
  const std::vector<PseudoGraph> graphs = load(opt);
  write_dot(opt, graphs.front());
  bool all_yes = true;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    if (k != 0) std::cout << '\n';
    const RecognitionReport report = recognize(graphs[k]);
    write_report(std::cout, report);
    all_yes = all_yes && report.accepted();
  }
  return all_yes ? 0 : exit_no;
}

int cmd_press(const Options& opt) {
  std::vector<Label> labels;
  for (const std::string& token : opt.sequence) {
    if (token.empty()) continue;
    const auto value = std::stoull(token);
    if (value > std::numeric_limits<Label>::max()) throw std::out_of_range("label out of range: " + token);
    labels.push_back(static_cast<Label>(value));
  }
  const PressingSequence seq(std::move(labels));
  PseudoGraph g = load_one(opt);
  std::size_t position = 0;
  try {
    for (Label v : seq.vertices()) {
      ++position;
      g = press(g, v);
      if (opt.trace) std::cout << "# press " << v << '\n' << to_string(g) << '\n';
    }
  } catch (const InvalidPress& e) {
    throw InvalidPress(e.vertex(), position);
  } catch (const InvalidArgument& e) {
    throw Refused("invalid press at position " + std::to_string(position) + ": " + e.what());
  }
  if (!opt.trace) write_graph(std::cout, g);
  write_dot(opt, g);
  return 0;
}

int cmd_root(const Options& opt) {
  const PseudoGraph g = load_one(opt);
  write_dot(opt, g);
  write_matrix(std::cout, instructional_root(g).u);
  return 0;
}

int cmd_generate(const Options& opt) {
  const std::vector<PseudoGraph> graphs = generate_cup(opt.n);
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    if (k != 0) std::cout << '\n';
    write_graph(std::cout, graphs[k]);
  }
  return 0;
}

int cmd_count(const Options& opt) {
  std::cout << "cup=" << cup_count(opt.n) << " total=" << total_count(opt.n) << '\n';
  return 0;
}

int cmd_census(const Options& opt) {
  const CensusResult r = census(opt.n, {opt.oracle_bound, opt.jobs});
  std::cout << "n=" << r.n << '\n'
            << "labeled_total=" << r.labeled_total << '\n'
            << "up_iso_classes=" << r.up_iso_classes << '\n'
            << "cup_iso_classes=" << r.cup_iso_classes << '\n';
  return 0;
}

int cmd_convert(const Options& opt) {
  const PseudoGraph g = load_one(opt);
  write_dot(opt, g);
  if (opt.output_format == "matrix") {
    write_matrix(std::cout, adjacency_matrix(g));
  } else {
    write_graph(std::cout, g);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pressing sequences, instructional Cholesky roots and uniquely pressable graphs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand help for every subcommand");

  Options opt;
  const auto formats = CLI::IsMember({"graph", "matrix"});

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "Input file, - for standard input")->capture_default_str();
    sub->add_option("--format", opt.format, "Input format (default: detect)")->check(formats);
    sub->add_option("--dot", opt.dot, "Also write the graph as Graphviz DOT to PATH");
  };

  CLI::App* recognize_cmd = app.add_subcommand("recognize", "Decide unique pressability");
  add_input(recognize_cmd);

  CLI::App* press_cmd = app.add_subcommand("press", "Apply a pressing sequence");
  add_input(press_cmd);
  press_cmd->add_option("--sequence,-s", opt.sequence, "Vertices to press, in order")
      ->expected(0, CLI::detail::expected_max_vector_size)
      ->delimiter(',')
      ->check(CLI::Validator(
          [](std::string& token) {
            const bool digits = token.find_first_not_of("0123456789") == std::string::npos;
            return digits ? std::string{} : "not a vertex label: " + token;
          },
          "LABEL"));
  press_cmd->add_flag("--trace", opt.trace, "Print the graph after every press");

  CLI::App* root_cmd = app.add_subcommand("root", "Instructional Cholesky root in label order");
  add_input(root_cmd);

  CLI::App* generate_cmd = app.add_subcommand("generate", "All CUP graphs on 1..n");
  generate_cmd->add_option("n", opt.n, "Number of vertices")->required();

  CLI::App* count_cmd = app.add_subcommand("count", "Closed-form counts for n vertices");
  count_cmd->add_option("n", opt.n, "Number of vertices")->required();

  CLI::App* census_cmd = app.add_subcommand("census", "Exhaustive isomorphism-class census");
  census_cmd->add_option("n", opt.n, "Number of vertices")->required();
  census_cmd->add_option("--jobs,-j", opt.jobs, "Worker threads")->check(CLI::Range(1, 64))->capture_default_str();
  census_cmd->add_option("--oracle-bound", opt.oracle_bound, "Largest n accepted")->capture_default_str();

  CLI::App* convert_cmd = app.add_subcommand("convert", "Rewrite a graph in another text format");
  convert_cmd->add_option("input", opt.input, "Input file, - for standard input")->capture_default_str();
  convert_cmd->add_option("--format", opt.output_format, "Output format")->check(formats)->capture_default_str();
  convert_cmd->add_option("--dot", opt.dot, "Also write the graph as Graphviz DOT to PATH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*recognize_cmd) return cmd_recognize(opt);
    if (*press_cmd) return cmd_press(opt);
    if (*root_cmd) return cmd_root(opt);
    if (*generate_cmd) return cmd_generate(opt);
    if (*count_cmd) return cmd_count(opt);
    if (*census_cmd) return cmd_census(opt);
    if (*convert_cmd) return cmd_convert(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const InvalidPress& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_no;
  } catch (const NotOrderPressable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_no;
  } catch (const Refused& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_no;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
