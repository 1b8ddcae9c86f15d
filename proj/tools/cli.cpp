#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "skelmc/classify.hpp"
#include "skelmc/graph.hpp"
#include "skelmc/kernel.hpp"
#include "skelmc/oracle.hpp"
#include "skelmc/report.hpp"
#include "skelmc/skeleton.hpp"
#include "skelmc/skeleton_matrix.hpp"
#include "skelmc/strategies.hpp"

namespace skelmc::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string output;
  double zero_tol = 0.0;
  std::uint64_t enumerate_cap = std::uint64_t{1} << 20;
  std::uint64_t lift_cap = kDefaultLiftCap;
  std::uint64_t seed = 0;
  std::size_t alphabet_size = 2;
  std::size_t order = 3;
  double prohibition_rate = 0.0;
  std::string method = "scc";
  std::string emit_dot;
  bool json = false;
  bool tree = false;
  bool essential = false;
  bool irreducible = false;
  unsigned repeat = 3;
};

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

SupportKernel load(const RunConfig& cfg) {
  if (cfg.input.empty()) throw InputError("missing kernel file");
  return load_kernel(cfg.input, ParseOptions{cfg.zero_tol});
}

int cmd_skeleton(const RunConfig& cfg, std::ostream& out) {
  const SupportKernel kernel = load(cfg);
  KernelTree tree = KernelTree::build(kernel);
  tree.prune();
  const Skeleton skeleton = tree.to_skeleton();
  std::string text;
  if (cfg.json) {
    text = skeleton_report(skeleton, kernel.order(), kernel.alphabet()).dump(2) + "\n";
  } else {
    text = "order m = " + std::to_string(kernel.order()) + ", skeleton order K = " + std::to_string(skeleton.order()) +
           "\n" + skeleton_table(skeleton, kernel.alphabet());
    if (cfg.tree) text += "\n" + tree.to_text(kernel.alphabet());
  }
  write_text(cfg.output, text, out);
  if (!cfg.emit_dot.empty()) write_text(cfg.emit_dot, tree.to_dot(kernel.alphabet()), out);
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const SupportKernel kernel = load(cfg);
  const Classification c = classify(kernel, ClassifyOptions{cfg.enumerate_cap});
  write_text(cfg.output,
             cfg.json ? classification_report(c, kernel.alphabet()).dump(2) + "\n"
                      : classification_text(c, kernel.alphabet()),
             out);
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const SupportKernel kernel = load(cfg);
  const Classification c = classify_brute_force(lift(kernel, cfg.lift_cap));
  write_text(cfg.output,
             cfg.json ? classification_report(c, kernel.alphabet()).dump(2) + "\n"
                      : classification_text(c, kernel.alphabet()),
             out);
  return kExitOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.essential == cfg.irreducible) throw InputError("check needs exactly one of --essential or --irreducible");
  const SupportKernel kernel = load(cfg);
  if (cfg.essential) {
    const EssentialMethod method = cfg.method == "matrix-sum" ? EssentialMethod::kMatrixSum : EssentialMethod::kScc;
    const bool holds = is_essentially_irreducible(kernel, method);
    out << "essentially irreducible: " << (holds ? "yes" : "no") << " (method " << cfg.method << ")\n";
    return holds ? kExitOk : kExitFalse;
  }
  const IrreducibilityVerdict v = is_irreducible(kernel);
  out << "irreducible: " << (v.irreducible ? "yes" : "no") << " (" << to_string(v.reason) << ")\n";
  return v.irreducible ? kExitOk : kExitFalse;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  const SupportKernel kernel = random_kernel(cfg.alphabet_size, cfg.order, cfg.prohibition_rate, cfg.seed);
  write_text(cfg.output, serialize_kernel(kernel), out);
  return kExitOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  const SupportKernel kernel = cfg.input.empty()
                                   ? random_kernel(cfg.alphabet_size, cfg.order, cfg.prohibition_rate, cfg.seed)
                                   : load(cfg);
  const auto rows = compare_strategies(kernel, cfg.repeat);
  std::ostringstream text;
  if (cfg.json) {
    Report r = Report::array();
    for (const auto& row : rows) {
      Report item;
      item["strategy"] = to_string(row.strategy);
      item["states"] = row.states;
      item["ops"] = row.ops;
      item["wall_ms"] = row.wall_ms;
      item["essentially_irreducible"] =
          row.essentially_irreducible ? Report(*row.essentially_irreducible) : Report(nullptr);
      if (!row.note.empty()) item["note"] = row.note;
      r.push_back(std::move(item));
    }
    text << r.dump(2) << '\n';
  } else {
    text << "strategy,states,ops,wall_ms,essentially_irreducible\n";
    for (const auto& row : rows) {
      text << to_string(row.strategy) << ',';
      if (!row.essentially_irreducible) {
        text << ",,,skipped\n";
        continue;
      }
      text << row.states << ',' << row.ops << ',' << std::fixed << std::setprecision(3) << row.wall_ms << ','
           << (*row.essentially_irreducible ? "true" : "false") << '\n';
    }
  }
  write_text(cfg.output, text.str(), out);
  return kExitOk;
}

int cmd_export_dot(const RunConfig& cfg, std::ostream& out) {
  const SupportKernel kernel = load(cfg);
  const ShiftGraph graph = skeleton_graph(skeleton_pruned(kernel));
  write_text(cfg.output, matrix_dot(graph, decompose(graph), kernel.alphabet()), out);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"skelmc: skeleton-based classification of higher-order Markov chains", "skelmc"};
  app.require_subcommand(1, 1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("kernel", cfg.input, "Kernel document")->required();
    sub->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
    sub->add_option("--zero-tol", cfg.zero_tol, "Coerce probabilities below this to zero")
        ->check(CLI::Range(0.0, 1.0));
  };

  CLI::App* skeleton = app.add_subcommand("skeleton", "Print the skeleton of a kernel");
  add_input(skeleton);
  skeleton->add_flag("--json", cfg.json, "Structured output");
  skeleton->add_flag("--tree", cfg.tree, "Also print the pruned context tree");
  skeleton->add_option("--emit-dot", cfg.emit_dot, "Write the pruned tree in DOT format to this file");

  CLI::App* classify_cmd = app.add_subcommand("classify", "Classify the chain from its skeleton");
  add_input(classify_cmd);
  classify_cmd->add_flag("--json", cfg.json, "Structured output");
  classify_cmd->add_option("--enumerate-cap", cfg.enumerate_cap, "List recurrent classes when |A|^m is at most this")
      ->check(CLI::PositiveNumber);

  CLI::App* check = app.add_subcommand("check", "Exit 0 if the property holds, 1 otherwise");
  add_input(check);
  check->add_flag("--essential", cfg.essential, "Check essential irreducibility");
  check->add_flag("--irreducible", cfg.irreducible, "Check irreducibility");
  check->add_option("--method", cfg.method, "Essential irreducibility method")
      ->check(CLI::IsMember({"scc", "matrix-sum"}));

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force classification of the lifted chain");
  add_input(oracle);
  oracle->add_flag("--json", cfg.json, "Structured output");
  oracle->add_option("--cap", cfg.lift_cap, "Refuse lifted chains with more states than this")
      ->check(CLI::PositiveNumber);

  auto add_generator = [&](CLI::App* sub, bool required) {
    auto* a = sub->add_option("--alphabet-size", cfg.alphabet_size, "Alphabet size")->check(CLI::Range(2, 64));
    auto* m = sub->add_option("--order", cfg.order, "Chain order m")->check(CLI::Range(1, 24));
    sub->add_option("--prohibition-rate", cfg.prohibition_rate, "Probability that an entry is prohibited")
        ->check(CLI::Range(0.0, 0.999999999));
    sub->add_option("--seed", cfg.seed, "Random seed");
    if (required) {
      a->required();
      m->required();
    }
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate a random full-table kernel");
  add_generator(gen, true);
  gen->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");

  CLI::App* bench = app.add_subcommand("bench", "Compare essential-irreducibility strategies (CSV)");
  bench->add_option("kernel", cfg.input, "Kernel document; a random kernel is generated when omitted");
  bench->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
  bench->add_option("--zero-tol", cfg.zero_tol, "Coerce probabilities below this to zero")->check(CLI::Range(0.0, 1.0));
  bench->add_option("--repeat", cfg.repeat, "Repetitions per strategy (best time is reported)")
      ->check(CLI::Range(1, 1000));
  bench->add_flag("--json", cfg.json, "Structured output");
  add_generator(bench, false);

  CLI::App* export_dot = app.add_subcommand("export-dot", "Write the skeleton matrix graph in DOT format");
  add_input(export_dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const std::pair<CLI::App*, std::function<int(const RunConfig&, std::ostream&)>> handlers[] = {
      {skeleton, cmd_skeleton}, {classify_cmd, cmd_classify}, {check, cmd_check},      {oracle, cmd_oracle},
      {gen, cmd_gen},           {bench, cmd_bench},           {export_dot, cmd_export_dot},
  };
  try {
    for (const auto& [sub, handler] : handlers)
      if (sub->parsed()) return handler(cfg, out);
  } catch (const KernelError& e) {
    err << "skelmc: invalid kernel: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "skelmc: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace skelmc::cli
