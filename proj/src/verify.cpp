#include "ohg/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "ohg/instance_io.hpp"
#include "ohg/matrix_builders.hpp"
#include "ohg/random_instance.hpp"
#include "ohg/signed_graph.hpp"

namespace ohg {

using nlohmann::json;

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

bool VerificationReport::all_passed() const { return failure_count() == 0; }

std::size_t VerificationReport::failure_count() const {
  return static_cast<std::size_t>(std::ranges::count_if(results, [](const CheckResult& r) {
    return r.status == CheckStatus::fail && !r.informational;
  }));
}

namespace {

json matrix_json(const LabeledMatrix& m) { return json::parse(serialize_matrix(m, MatrixFormat::json)); }

std::string summarize(const OrientedHypergraph& g, const std::string& family) {
  std::ostringstream os;
  os << family << " n=" << g.vertex_count() << " m=" << g.edge_count()
     << " incidences=" << g.incidences().size() << (is_simple(g) ? " simple" : " non-simple");
  return os.str();
}

// Collects results for one instance.
class Checker {
 public:
  Checker(const OrientedHypergraph& g, const VerifyOptions& opts, std::size_t trial,
          std::uint64_t seed, std::string family, VerificationReport& out)
      : g_(g), opts_(opts), trial_(trial), seed_(seed), summary_(summarize(g, std::move(family))),
        out_(out) {}

  void matrices(const std::string& name, const LabeledMatrix& lhs, const LabeledMatrix& rhs,
                json extra = json::object(), bool informational = false) {
    auto diff = first_difference(lhs, rhs);
    if (!diff) {
      record(name, CheckStatus::pass, "", std::nullopt, informational);
      return;
    }
    extra["lhs"] = matrix_json(lhs);
    extra["rhs"] = matrix_json(rhs);
    fail(name, diff->description, std::move(extra), informational);
  }

  void condition(const std::string& name, bool ok, const std::string& detail,
                 json extra = json::object(), bool informational = false) {
    if (ok) {
      record(name, CheckStatus::pass, "", std::nullopt, informational);
    } else {
      fail(name, detail, std::move(extra), informational);
    }
  }

  void skipped(const std::string& name, const std::string& why) {
    out_.incomplete = true;
    record(name, CheckStatus::skipped, why, std::nullopt, false);
  }

 private:
  void fail(const std::string& name, const std::string& detail, json extra, bool informational) {
    extra["check"] = name;
    extra["seed"] = seed_;
    extra["trial"] = trial_;
    extra["self_test"] = opts_.self_test;
    extra["instance"] = json::parse(serialize_instance(g_));
    record(name, CheckStatus::fail, detail, extra.dump(), informational);
  }

  void record(const std::string& name, CheckStatus status, std::string detail,
              std::optional<std::string> counterexample, bool informational) {
    CheckResult r;
    r.check_name = name;
    r.trial = trial_;
    r.instance_summary = summary_;
    r.status = status;
    r.informational = informational;
    r.detail = std::move(detail);
    r.counterexample = std::move(counterexample);
    r.seed = seed_;
    out_.results.push_back(std::move(r));
  }

  const OrientedHypergraph& g_;
  const VerifyOptions& opts_;
  std::size_t trial_;
  std::uint64_t seed_;
  std::string summary_;
  VerificationReport& out_;
};

void run_checks(const OrientedHypergraph& g, const VerifyOptions& opts, std::size_t trial,
                std::uint64_t seed, const std::string& family, VerificationReport& out) {
  Checker check(g, opts, trial, seed, family, out);
  const bool simple = is_simple(g);
  const auto dual = incidence_dual(g);
  const auto h = incidence_matrix(g);
  const auto a = adjacency_matrix(g);
  const auto d = degree_matrix(g);
  auto l = laplacian(g);
  if (opts.self_test && l.rows() > 0) l.add_to(0, 0, 1);

  check.condition("duality_involution", incidence_dual(dual) == g,
                  "dual of the dual differs from the instance",
                  {{"double_dual", json::parse(serialize_instance(incidence_dual(dual)))}});
  check.matrices("dual_incidence_transpose", incidence_matrix(dual), h.transposed());
  check.matrices("laplacian_degree_minus_adjacency", l, d - a);
  check.matrices("laplacian_factorization", l, h * h.transposed());
  check.matrices("dual_laplacian_factorization", dual_laplacian(g), h.transposed() * h);

  if (simple && g.edge_count() > 0) {
    const std::size_t k = g.edge_size(0);
    if (is_k_uniform(g, k)) {
      check.matrices("k_uniform_identity", h.transposed() * h,
                     static_cast<std::int64_t>(k) * LabeledMatrix::identity(h.col_labels()) -
                         adjacency_matrix(dual),
                     {{"k", k}});
    }
  }

  const auto& limits = opts.limits;
  try {
    const std::string oracle = simple ? "walk_power_oracle" : "walk_power_oracle_nonsimple";
    for (std::size_t n = 0; n <= opts.max_walk_incidences; n += 2) {
      check.matrices(oracle + "_k" + std::to_string(n / 2), power(a, static_cast<unsigned>(n / 2)),
                     walk_matrix(g, AnchorKind::vertex, AnchorKind::vertex, n, limits),
                     {{"half_length_numerator", n}}, !simple);
    }
  } catch (const ResourceError& e) {
    check.skipped("walk_power_oracle", e.what());
  }

  try {
    const auto x_ve = walk_matrix(g, AnchorKind::vertex, AnchorKind::edge, 1, limits);
    const auto x_ev = walk_matrix(g, AnchorKind::edge, AnchorKind::vertex, 1, limits);
    check.matrices("half_walk_incidence", x_ve, h);
    check.matrices("half_walk_laplacian", l, x_ve * x_ev);

    bool backsteps_ok = true;
    json bad = json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const Anchor at{AnchorKind::vertex, v};
      const auto deg = g.degree(v);
      const auto steps = backstep_count(g, g.vertices()[v]);
      const auto weak = walk_counts(g, at, at, 2, true, limits).total;
      const auto strict = walk_counts(g, at, at, 2, false, limits).total;
      if (steps != deg || weak - strict != deg) {
        backsteps_ok = false;
        bad.push_back({{"vertex", g.vertices()[v]}, {"degree", deg}, {"backsteps", steps},
                       {"weak_minus_walks", weak - strict}});
      }
    }
    check.condition("degree_backsteps", backsteps_ok, "backstep count differs from degree",
                    {{"vertices", bad}});

    // ℓ_ij = w̃(v_i, v_j; 1) − 2 w⁺(v_i, v_j; 1)
    LabeledMatrix formula(h.row_labels(), h.row_labels());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      for (std::size_t j = 0; j < g.vertex_count(); ++j) {
        const Anchor vi{AnchorKind::vertex, i}, vj{AnchorKind::vertex, j};
        const auto weak = walk_counts(g, vi, vj, 2, true, limits);
        const auto strict = walk_counts(g, vi, vj, 2, false, limits);
        formula(i, j) = static_cast<std::int64_t>(weak.total) -
                        2 * static_cast<std::int64_t>(strict.positive);
      }
    }
    check.matrices("laplacian_walk_formula", l, formula);

    if (simple) {
      check.matrices("weak_walk_laplacian", l,
                     -weak_walk_matrix(g, AnchorKind::vertex, AnchorKind::vertex, 2, limits));
    }
  } catch (const ResourceError& e) {
    check.skipped("half_walk_and_weak_walk", e.what());
  }

  SeededRng rng(mix_seed(seed, 0x5717c4));
  for (std::size_t s = 0; s < opts.switchings; ++s) {
    const auto theta = random_switching(g, rng);
    const auto switched = switch_vertices(g, theta);
    const auto dt = switching_matrix(theta, h.row_labels());
    const json extra = {{"theta", json::parse(serialize_switching_function(theta))}};
    check.matrices("switching_adjacency", adjacency_matrix(switched), dt.transposed() * a * dt, extra);
    check.matrices("switching_incidence", incidence_matrix(switched), dt * h, extra);
    LabeledMatrix switched_l = laplacian(switched);
    check.matrices("switching_laplacian", switched_l, dt.transposed() * laplacian(g) * dt, extra);
  }

  if (simple && is_k_uniform(g, 2)) {
    const auto s = from_hypergraph(g);
    if (s.is_simple()) {
      const auto lambda = line_graph(s);
      check.matrices("line_graph_adjacency", adjacency_matrix(lambda), adjacency_matrix(dual));
      const auto failures = signed_graph_identities(s);
      json listed = json::array();
      for (const auto& f : failures) listed.push_back({{"identity", f.identity}, {"detail", f.detail}});
      check.condition("signed_graph_identities", failures.empty(),
                      failures.empty() ? "" : failures.front().identity + ": " + failures.front().detail,
                      {{"failures", listed}});
    }
  }
}

void sort_results(VerificationReport& report) {
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const CheckResult& x, const CheckResult& y) {
                     return std::tie(x.check_name, x.trial) < std::tie(y.check_name, y.trial);
                   });
}

std::size_t draw(SeededRng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.uniform(lo, std::max(lo, hi)));
}

void run_trial(const VerifyOptions& opts, std::size_t trial, VerificationReport& out) {
  const std::uint64_t seed = mix_seed(opts.seed, trial);
  SeededRng rng(seed);

  RandomInstanceOptions mixed;
  mixed.seed = mix_seed(seed, 1);
  mixed.simple = !rng.bernoulli(opts.non_simple_fraction);
  mixed.n_vertices = draw(rng, 1, opts.max_vertices);
  mixed.n_edges = draw(rng, 0, opts.max_edges);
  mixed.max_edge_size = mixed.simple ? std::min(opts.max_edge_size, mixed.n_vertices)
                                     : opts.max_edge_size;
  mixed.non_simple_rate = mixed.simple ? 0.0 : 0.3;
  run_checks(random_instance(mixed), opts, trial, seed, "mixed", out);

  const std::size_t k = 2 + trial % 3;
  if (k <= opts.max_edge_size && k <= opts.max_vertices) {
    RandomInstanceOptions uniform;
    uniform.seed = mix_seed(seed, 2);
    uniform.uniform_edge_size = k;
    uniform.max_edge_size = k;
    uniform.n_vertices = draw(rng, k, opts.max_vertices);
    uniform.n_edges = draw(rng, 1, opts.max_edges);
    run_checks(random_instance(uniform), opts, trial, seed, "k-uniform", out);
  }

  if (opts.max_vertices >= 2) {
    RandomInstanceOptions graph;
    graph.seed = mix_seed(seed, 3);
    graph.uniform_edge_size = 2;
    graph.max_edge_size = 2;
    graph.distinct_edge_sets = true;
    graph.n_vertices = draw(rng, 2, opts.max_vertices);
    const std::size_t pairs = graph.n_vertices * (graph.n_vertices - 1) / 2;
    graph.n_edges = draw(rng, 0, std::min(pairs, opts.max_edges));
    run_checks(random_instance(graph), opts, trial, seed, "signed-graph", out);
  }
}

}  // namespace

VerificationReport verify_instance(const OrientedHypergraph& g, const VerifyOptions& options) {
  VerificationReport report;
  run_checks(g, options, 0, options.seed, "instance", report);
  sort_results(report);
  return report;
}

VerificationReport verify_family(const VerifyOptions& options) {
  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, options.trials))));

  std::vector<VerificationReport> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = w; t < options.trials; t += workers) run_trial(options, t, partial[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  VerificationReport report;
  for (auto& p : partial) {
    report.incomplete = report.incomplete || p.incomplete;
    std::move(p.results.begin(), p.results.end(), std::back_inserter(report.results));
  }
  // Within one check and trial, keep the per-trial family order.
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const CheckResult& x, const CheckResult& y) { return x.trial < y.trial; });
  sort_results(report);
  return report;
}

std::string format_report_text(const VerificationReport& report) {
  struct Tally {
    std::size_t pass = 0, fail = 0, skipped = 0;
    bool informational = false;
  };
  std::map<std::string, Tally> tally;
  for (const auto& r : report.results) {
    auto& t = tally[r.check_name];
    t.informational = t.informational || r.informational;
    if (r.status == CheckStatus::pass) ++t.pass;
    if (r.status == CheckStatus::fail) ++t.fail;
    if (r.status == CheckStatus::skipped) ++t.skipped;
  }
  std::ostringstream os;
  for (const auto& [name, t] : tally) {
    const char* status = t.fail ? (t.informational ? "INFO" : "FAIL") : (t.skipped ? "SKIP" : "PASS");
    os << status << "  " << name << "  (" << t.pass << " pass, " << t.fail << " fail";
    if (t.skipped) os << ", " << t.skipped << " skipped";
    os << ")\n";
  }
  for (const auto& r : report.results) {
    if (r.status != CheckStatus::fail) continue;
    os << "\n" << (r.informational ? "note" : "failure") << ": " << r.check_name
       << " trial=" << r.trial << " seed=" << r.seed << " [" << r.instance_summary << "]\n  "
       << r.detail << "\n";
    if (r.counterexample) os << "  counterexample: " << *r.counterexample << "\n";
  }
  os << "\n" << (report.all_passed() ? "all checks passed" : "verification FAILED") << " ("
     << report.results.size() << " results, " << report.failure_count() << " failures"
     << (report.incomplete ? ", incomplete" : "") << ")\n";
  return os.str();
}

std::string format_report_json(const VerificationReport& report) {
  json results = json::array();
  for (const auto& r : report.results) {
    json j = {{"check_name", r.check_name},
              {"trial", r.trial},
              {"instance_summary", r.instance_summary},
              {"status", to_string(r.status)},
              {"informational", r.informational},
              {"seed", r.seed}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.counterexample) j["counterexample"] = json::parse(*r.counterexample);
    results.push_back(std::move(j));
  }
  json out = {{"all_passed", report.all_passed()},
              {"incomplete", report.incomplete},
              {"failures", report.failure_count()},
              {"results", results}};
  return out.dump(2) + "\n";
}

}  // namespace ohg
