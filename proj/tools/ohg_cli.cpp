// Command-line front end. Talks to the library only through ohg.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ohg.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct HypergraphDeleter {
  void operator()(ohg_hypergraph* g) const { ohg_hypergraph_free(g); }
};
struct MatrixDeleter {
  void operator()(ohg_matrix* m) const { ohg_matrix_free(m); }
};
struct ReportDeleter {
  void operator()(ohg_report* r) const { ohg_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { ohg_string_free(s); }
};
using Hypergraph = std::unique_ptr<ohg_hypergraph, HypergraphDeleter>;
using Matrix = std::unique_ptr<ohg_matrix, MatrixDeleter>;
using Report = std::unique_ptr<ohg_report, ReportDeleter>;
using CString = std::unique_ptr<char, StringDeleter>;

// Library or input failure; carries the exit code to use.
struct CliFailure {
  int code;
  std::string message;
};

void check(ohg_status status) {
  if (status != OHG_OK) throw CliFailure{kExitUsage, ohg_last_error()};
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kExitUsage, "cannot open '" + path + "'"};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Hypergraph load(const std::string& path) {
  const std::string text = read_file(path);
  ohg_hypergraph* g = nullptr;
  const auto status = ohg_hypergraph_parse(text.c_str(), &g);
  if (status != OHG_OK) throw CliFailure{kExitUsage, path + ": " + ohg_last_error()};
  return Hypergraph(g);
}

void print(CString s) { std::fputs(s.get(), stdout); }

void print_hypergraph(const ohg_hypergraph* g) {
  char* out = nullptr;
  check(ohg_hypergraph_serialize(g, &out));
  print(CString(out));
}

void print_matrix(const ohg_matrix* m, const std::string& format) {
  char* out = nullptr;
  check(ohg_matrix_serialize(m, format == "json" ? OHG_FORMAT_JSON : OHG_FORMAT_CSV, &out));
  print(CString(out));
}

ohg_anchor_set anchor_set(const std::string& s) {
  return s == "E" ? OHG_ANCHORS_EDGES : OHG_ANCHORS_VERTICES;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact matrix computations on oriented hypergraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ohg_version()));

  std::string instance;
  std::string format = "csv";
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("instance", instance, "Instance file (JSON), '-' for stdin")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Matrix output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "Check an instance file against the hypergraph invariants");
  add_instance(validate);

  std::string kind;
  auto* matrix = app.add_subcommand("matrix", "Build a matrix of the instance");
  matrix->add_option("kind", kind, "incidence|adjacency|degree|laplacian|dual-laplacian")
      ->required()
      ->check(CLI::IsMember({"incidence", "adjacency", "degree", "laplacian", "dual-laplacian"}));
  add_instance(matrix);
  add_format(matrix);

  auto* dual = app.add_subcommand("dual", "Print the incidence dual");
  add_instance(dual);

  std::string theta_path;
  auto* sw = app.add_subcommand("switch", "Vertex-switch the instance");
  add_instance(sw);
  sw->add_option("--theta", theta_path, "JSON map vertex -> +1/-1")->required();

  std::string from, to;
  std::size_t n = 0;
  bool weak = false;
  bool list = false;
  std::size_t max_incidences = 12;
  std::uint64_t max_walks = 1'000'000;
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-incidences", max_incidences, "Enumeration ceiling on n");
    sub->add_option("--max-walks", max_walks, "Enumeration ceiling on walk count");
  };
  auto* walks = app.add_subcommand("walks", "Count (or list) walks between two anchors");
  add_instance(walks);
  walks->add_option("--from", from, "Start anchor label")->required();
  walks->add_option("--to", to, "End anchor label")->required();
  walks->add_option("--n", n, "Incidence count (walk length n/2)")->required();
  walks->add_flag("--weak", weak, "Count weak walks");
  walks->add_flag("--list", list, "Print every walk");
  add_limits(walks);

  std::string rows = "V", cols = "V";
  auto* walk_matrix = app.add_subcommand("walk-matrix", "Signed walk-count matrix X (or W with --weak)");
  add_instance(walk_matrix);
  walk_matrix->add_option("--rows", rows)->check(CLI::IsMember({"V", "E"}));
  walk_matrix->add_option("--cols", cols)->check(CLI::IsMember({"V", "E"}));
  walk_matrix->add_option("--n", n, "Incidence count (walk length n/2)")->required();
  walk_matrix->add_flag("--weak", weak, "Weak walks");
  add_format(walk_matrix);
  add_limits(walk_matrix);

  auto* linegraph = app.add_subcommand("linegraph", "Line graph of a simple 2-uniform instance");
  add_instance(linegraph);

  ohg_random_options ropts;
  ohg_random_options_default(&ropts);
  bool simple_flag = false;
  double non_simple_rate = -1.0;
  auto* random = app.add_subcommand("random", "Generate a seeded random instance");
  random->add_option("--seed", ropts.seed)->required();
  random->add_option("--vertices", ropts.n_vertices);
  random->add_option("--edges", ropts.n_edges);
  random->add_option("--max-edge-size", ropts.max_edge_size);
  random->add_option("--uniform", ropts.uniform_edge_size, "Every edge gets exactly this size");
  random->add_flag("--simple", simple_flag, "Force a simple instance (default)");
  random->add_option("--non-simple-rate", non_simple_rate,
                     "Probability an incidence repeats a vertex; implies non-simple");
  random->add_flag("--distinct-edges", ropts.distinct_edge_sets, "No two edges on one vertex set");

  ohg_verify_options vopts;
  ohg_verify_options_default(&vopts);
  std::string verify_instance;
  bool json_out = false;
  bool self_test = false;
  auto* verify = app.add_subcommand("verify", "Check the matrix identities on an instance or a random family");
  verify->add_option("--instance", verify_instance, "Verify one instance instead of a random family");
  verify->add_option("--seed", vopts.seed);
  verify->add_option("--trials", vopts.trials);
  verify->add_option("--max-n", vopts.max_walk_incidences, "Longest walk checked, in incidences");
  verify->add_option("--max-vertices", vopts.max_vertices);
  verify->add_option("--max-edges", vopts.max_edges);
  verify->add_option("--max-edge-size", vopts.max_edge_size);
  verify->add_option("--switchings", vopts.switchings, "Random θ per instance");
  verify->add_option("--threads", vopts.threads);
  verify->add_flag("--self-test", self_test, "Corrupt one Laplacian entry; the run must fail");
  verify->add_flag("--json", json_out, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) {
      const std::string text = read_file(instance);
      int ok = 0;
      char* report = nullptr;
      check(ohg_validate_text(text.c_str(), &ok, &report));
      CString owned(report);
      if (ok) {
        std::puts("valid");
        return kExitOk;
      }
      std::fputs(owned.get(), stdout);
      return kExitVerificationFailed;
    }
    if (*matrix) {
      const auto g = load(instance);
      const ohg_matrix_kind k = kind == "incidence"   ? OHG_MATRIX_INCIDENCE
                                : kind == "adjacency" ? OHG_MATRIX_ADJACENCY
                                : kind == "degree"    ? OHG_MATRIX_DEGREE
                                : kind == "laplacian" ? OHG_MATRIX_LAPLACIAN
                                                      : OHG_MATRIX_DUAL_LAPLACIAN;
      ohg_matrix* m = nullptr;
      check(ohg_matrix_build(g.get(), k, &m));
      print_matrix(Matrix(m).get(), format);
      return kExitOk;
    }
    if (*dual) {
      const auto g = load(instance);
      ohg_hypergraph* d = nullptr;
      check(ohg_hypergraph_dual(g.get(), &d));
      print_hypergraph(Hypergraph(d).get());
      return kExitOk;
    }
    if (*sw) {
      const auto g = load(instance);
      const std::string theta = read_file(theta_path);
      ohg_hypergraph* s = nullptr;
      check(ohg_hypergraph_switch(g.get(), theta.c_str(), &s));
      print_hypergraph(Hypergraph(s).get());
      return kExitOk;
    }
    const ohg_limits limits{max_incidences, max_walks};
    if (*walks) {
      const auto g = load(instance);
      if (list) {
        char* out = nullptr;
        check(ohg_walks_list(g.get(), from.c_str(), to.c_str(), n, weak, &limits, &out));
        print(CString(out));
        return kExitOk;
      }
      ohg_walk_counts c{};
      check(ohg_walk_counts_get(g.get(), from.c_str(), to.c_str(), n, weak, &limits, &c));
      std::printf("{\"total\": %llu, \"positive\": %llu, \"negative\": %llu, \"signed_net\": %lld}\n",
                  static_cast<unsigned long long>(c.total),
                  static_cast<unsigned long long>(c.positive),
                  static_cast<unsigned long long>(c.negative),
                  static_cast<long long>(c.signed_net));
      return kExitOk;
    }
    if (*walk_matrix) {
      const auto g = load(instance);
      ohg_matrix* m = nullptr;
      check(ohg_walk_matrix(g.get(), anchor_set(rows), anchor_set(cols), n, weak, &limits, &m));
      print_matrix(Matrix(m).get(), format);
      return kExitOk;
    }
    if (*linegraph) {
      const auto g = load(instance);
      ohg_hypergraph* l = nullptr;
      check(ohg_line_graph(g.get(), &l));
      print_hypergraph(Hypergraph(l).get());
      return kExitOk;
    }
    if (*random) {
      if (non_simple_rate >= 0.0) {
        if (simple_flag) throw CliFailure{kExitUsage, "--simple conflicts with --non-simple-rate"};
        ropts.simple = 0;
        ropts.non_simple_rate = non_simple_rate;
      }
      ohg_hypergraph* g = nullptr;
      check(ohg_hypergraph_random(&ropts, &g));
      print_hypergraph(Hypergraph(g).get());
      return kExitOk;
    }
    if (*verify) {
      vopts.self_test = self_test ? 1 : 0;
      Hypergraph g;
      if (!verify_instance.empty()) g = load(verify_instance);
      ohg_report* r = nullptr;
      check(ohg_verify(g.get(), &vopts, &r));
      Report report(r);
      char* out = nullptr;
      check(ohg_report_serialize(report.get(), json_out ? OHG_FORMAT_JSON : OHG_FORMAT_TEXT, &out));
      print(CString(out));
      return ohg_report_all_passed(report.get()) ? kExitOk : kExitVerificationFailed;
    }
  } catch (const CliFailure& f) {
    std::fprintf(stderr, "ohg: %s\n", f.message.c_str());
    return f.code;
  }
  return kExitUsage;
}
