#include "ohg.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "ohg/instance_io.hpp"
#include "ohg/matrix_builders.hpp"
#include "ohg/random_instance.hpp"
#include "ohg/signed_graph.hpp"
#include "ohg/verify.hpp"
#include "ohg/walks.hpp"

struct ohg_hypergraph {
  ohg::OrientedHypergraph value;
};

struct ohg_matrix {
  ohg::LabeledMatrix value;
};

struct ohg_report {
  ohg::VerificationReport value;
};

namespace {

thread_local std::string last_error;

ohg_status fail(ohg_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
ohg_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return OHG_OK;
  } catch (const ohg::ParseError& e) {
    return fail(OHG_ERR_PARSE, e.what());
  } catch (const ohg::InvalidHypergraphError& e) {
    return fail(OHG_ERR_INVALID, e.what());
  } catch (const ohg::DomainError& e) {
    return fail(OHG_ERR_DOMAIN, e.what());
  } catch (const ohg::ArgumentError& e) {
    return fail(OHG_ERR_ARGUMENT, e.what());
  } catch (const ohg::ResourceError& e) {
    return fail(OHG_ERR_RESOURCE, e.what());
  } catch (const ohg::NotTwoUniformError& e) {
    return fail(OHG_ERR_NOT_TWO_UNIFORM, e.what());
  } catch (const ohg::UnsupportedInputError& e) {
    return fail(OHG_ERR_UNSUPPORTED, e.what());
  } catch (const ohg::OverflowError& e) {
    return fail(OHG_ERR_OVERFLOW, e.what());
  } catch (const ohg::StructuralError& e) {
    return fail(OHG_ERR_STRUCTURE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(OHG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(OHG_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ohg::EnumerationLimits to_limits(const ohg_limits* limits) {
  ohg::EnumerationLimits out;
  if (limits) {
    out.max_incidences = limits->max_incidences;
    out.max_walks = limits->max_walks;
  }
  return out;
}

ohg::AnchorKind to_kind(ohg_anchor_set s) {
  switch (s) {
    case OHG_ANCHORS_VERTICES: return ohg::AnchorKind::vertex;
    case OHG_ANCHORS_EDGES: return ohg::AnchorKind::edge;
  }
  throw ohg::ArgumentError("unknown anchor set");
}

#define OHG_REQUIRE(ptr)                                               \
  do {                                                                 \
    if (!(ptr)) return fail(OHG_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

}  // namespace

extern "C" {

const char* ohg_version(void) { return "1.0.0"; }

const char* ohg_last_error(void) { return last_error.c_str(); }

void ohg_string_free(char* s) { std::free(s); }

void ohg_limits_default(ohg_limits* out) {
  if (!out) return;
  const ohg::EnumerationLimits d;
  out->max_incidences = d.max_incidences;
  out->max_walks = d.max_walks;
}

void ohg_random_options_default(ohg_random_options* out) {
  if (!out) return;
  const ohg::RandomInstanceOptions d;
  out->seed = d.seed;
  out->n_vertices = d.n_vertices;
  out->n_edges = d.n_edges;
  out->max_edge_size = d.max_edge_size;
  out->simple = d.simple ? 1 : 0;
  out->non_simple_rate = d.non_simple_rate;
  out->uniform_edge_size = 0;
  out->distinct_edge_sets = 0;
}

void ohg_verify_options_default(ohg_verify_options* out) {
  if (!out) return;
  const ohg::VerifyOptions d;
  out->seed = d.seed;
  out->trials = d.trials;
  out->max_walk_incidences = d.max_walk_incidences;
  out->max_vertices = d.max_vertices;
  out->max_edges = d.max_edges;
  out->max_edge_size = d.max_edge_size;
  out->switchings = d.switchings;
  out->non_simple_fraction = d.non_simple_fraction;
  out->self_test = d.self_test ? 1 : 0;
  out->threads = d.threads;
  ohg_limits_default(&out->limits);
}

ohg_status ohg_hypergraph_parse(const char* text, ohg_hypergraph** out) {
  OHG_REQUIRE(text);
  OHG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new ohg_hypergraph{ohg::parse_instance(text)}; });
}

ohg_status ohg_validate_text(const char* text, int* is_valid, char** report_json) {
  OHG_REQUIRE(text);
  OHG_REQUIRE(is_valid);
  OHG_REQUIRE(report_json);
  *report_json = nullptr;
  return guarded([&] {
    const auto report = ohg::validate(ohg::parse_instance_data(text));
    *is_valid = report.empty() ? 1 : 0;
    *report_json = dup_string(ohg::serialize_validation_report(report));
  });
}

ohg_status ohg_hypergraph_serialize(const ohg_hypergraph* g, char** out) {
  OHG_REQUIRE(g);
  OHG_REQUIRE(out);
  return guarded([&] { *out = dup_string(ohg::serialize_instance(g->value)); });
}

void ohg_hypergraph_free(ohg_hypergraph* g) { delete g; }

ohg_status ohg_hypergraph_clone(const ohg_hypergraph* g, ohg_hypergraph** out) {
  OHG_REQUIRE(g);
  OHG_REQUIRE(out);
  return guarded([&] { *out = new ohg_hypergraph{g->value}; });
}

int ohg_hypergraph_equal(const ohg_hypergraph* a, const ohg_hypergraph* b) {
  return a && b && a->value == b->value;
}

size_t ohg_hypergraph_vertex_count(const ohg_hypergraph* g) { return g ? g->value.vertex_count() : 0; }
size_t ohg_hypergraph_edge_count(const ohg_hypergraph* g) { return g ? g->value.edge_count() : 0; }
size_t ohg_hypergraph_incidence_count(const ohg_hypergraph* g) {
  return g ? g->value.incidences().size() : 0;
}

ohg_status ohg_hypergraph_degree(const ohg_hypergraph* g, const char* vertex, size_t* out) {
  OHG_REQUIRE(g);
  OHG_REQUIRE(vertex);
  OHG_REQUIRE(out);
  const auto v = g->value.find_vertex(vertex);
  if (!v) return fail(OHG_ERR_ARGUMENT, std::string("unknown vertex '") + vertex + "'");
  *out = g->value.degree(*v);
  return OHG_OK;
}

ohg_status ohg_hypergraph_is_simple(const ohg_hypergraph* g, int* out) {
  OHG_REQUIRE(g);
  OHG_REQUIRE(out);
  *out = ohg::is_simple(g->value);
  return OHG_OK;
}

ohg_status ohg_hypergraph_is_k_uniform(const ohg_hypergraph* g, size_t k, int* out) {
  OHG_REQUIRE(g);
  OHG_REQUIRE(out);
  *out = ohg::is_k_uniform(g->value, k);
  return OHG_OK;
}

ohg_status ohg_hypergraph_is_k_regular(const ohg_hypergraph* g, size_t k, int* out) {
  OHG_REQUIRE(g);
  OHG_REQUIRE(out);
  *out = ohg::is_k_regular(g->value, k);
  return OHG_OK;
}

ohg_status ohg_hypergraph_dual(const ohg_hypergraph* g, ohg_hypergraph** out) {
  OHG_REQUIRE(g);
  OHG_REQUIRE(out);
  return guarded([&] { *out = new ohg_hypergraph{ohg::incidence_dual(g->value)}; });
}

ohg_status ohg_hypergraph_switch(const ohg_hypergraph* g, const char* theta_json,
                                 ohg_hypergraph** out) {
  OHG_REQUIRE(g);
  OHG_REQUIRE(theta_json);
  OHG_REQUIRE(out);
  return guarded([&] {
    const auto theta = ohg::parse_switching_function(theta_json);
    *out = new ohg_hypergraph{ohg::switch_vertices(g->value, theta)};
  });
}

ohg_status ohg_hypergraph_random(const ohg_random_options* options, ohg_hypergraph** out) {
  OHG_REQUIRE(options);
  OHG_REQUIRE(out);
  return guarded([&] {
    ohg::RandomInstanceOptions o;
    o.seed = options->seed;
    o.n_vertices = options->n_vertices;
    o.n_edges = options->n_edges;
    o.max_edge_size = options->max_edge_size;
    o.simple = options->simple != 0;
    o.non_simple_rate = options->non_simple_rate;
    if (options->uniform_edge_size) o.uniform_edge_size = options->uniform_edge_size;
    o.distinct_edge_sets = options->distinct_edge_sets != 0;
    *out = new ohg_hypergraph{ohg::random_instance(o)};
  });
}

ohg_status ohg_matrix_build(const ohg_hypergraph* g, ohg_matrix_kind kind, ohg_matrix** out) {
  OHG_REQUIRE(g);
  OHG_REQUIRE(out);
  return guarded([&] {
    const auto& h = g->value;
    switch (kind) {
      case OHG_MATRIX_INCIDENCE: *out = new ohg_matrix{ohg::incidence_matrix(h)}; return;
      case OHG_MATRIX_ADJACENCY: *out = new ohg_matrix{ohg::adjacency_matrix(h)}; return;
      case OHG_MATRIX_DEGREE: *out = new ohg_matrix{ohg::degree_matrix(h)}; return;
      case OHG_MATRIX_LAPLACIAN: *out = new ohg_matrix{ohg::laplacian(h)}; return;
      case OHG_MATRIX_DUAL_LAPLACIAN: *out = new ohg_matrix{ohg::dual_laplacian(h)}; return;
    }
    throw ohg::ArgumentError("unknown matrix kind");
  });
}

ohg_status ohg_switching_matrix(const ohg_hypergraph* g, const char* theta_json, ohg_matrix** out) {
  OHG_REQUIRE(g);
  OHG_REQUIRE(theta_json);
  OHG_REQUIRE(out);
  return guarded([&] {
    const auto theta = ohg::parse_switching_function(theta_json);
    const auto v = g->value.vertices();
    *out = new ohg_matrix{ohg::switching_matrix(theta, {v.begin(), v.end()})};
  });
}

ohg_status ohg_walk_matrix(const ohg_hypergraph* g, ohg_anchor_set rows, ohg_anchor_set cols,
                           size_t n, int weak, const ohg_limits* limits, ohg_matrix** out) {
  OHG_REQUIRE(g);
  OHG_REQUIRE(out);
  return guarded([&] {
    const auto r = to_kind(rows);
    const auto c = to_kind(cols);
    const auto l = to_limits(limits);
    *out = new ohg_matrix{weak ? ohg::weak_walk_matrix(g->value, r, c, n, l)
                               : ohg::walk_matrix(g->value, r, c, n, l)};
  });
}

void ohg_matrix_free(ohg_matrix* m) { delete m; }
size_t ohg_matrix_rows(const ohg_matrix* m) { return m ? m->value.rows() : 0; }
size_t ohg_matrix_cols(const ohg_matrix* m) { return m ? m->value.cols() : 0; }

ohg_status ohg_matrix_entry(const ohg_matrix* m, size_t row, size_t col, int64_t* out) {
  OHG_REQUIRE(m);
  OHG_REQUIRE(out);
  return guarded([&] { *out = m->value.at(row, col); });
}

const char* ohg_matrix_row_label(const ohg_matrix* m, size_t row) {
  if (!m || row >= m->value.rows()) return nullptr;
  return m->value.row_labels()[row].c_str();
}

const char* ohg_matrix_col_label(const ohg_matrix* m, size_t col) {
  if (!m || col >= m->value.cols()) return nullptr;
  return m->value.col_labels()[col].c_str();
}

int ohg_matrix_equal(const ohg_matrix* a, const ohg_matrix* b) {
  return a && b && a->value == b->value;
}

ohg_status ohg_matrix_serialize(const ohg_matrix* m, ohg_format format, char** out) {
  OHG_REQUIRE(m);
  OHG_REQUIRE(out);
  return guarded([&] {
    const auto f = format == OHG_FORMAT_JSON ? ohg::MatrixFormat::json : ohg::MatrixFormat::csv;
    *out = dup_string(ohg::serialize_matrix(m->value, f));
  });
}

ohg_status ohg_matrix_parse(const char* text, ohg_format format, ohg_matrix** out) {
  OHG_REQUIRE(text);
  OHG_REQUIRE(out);
  return guarded([&] {
    const auto f = format == OHG_FORMAT_JSON ? ohg::MatrixFormat::json : ohg::MatrixFormat::csv;
    *out = new ohg_matrix{ohg::parse_matrix(text, f)};
  });
}

ohg_status ohg_walk_counts_get(const ohg_hypergraph* g, const char* from, const char* to, size_t n,
                               int weak, const ohg_limits* limits, ohg_walk_counts* out) {
  OHG_REQUIRE(g);
  OHG_REQUIRE(from);
  OHG_REQUIRE(to);
  OHG_REQUIRE(out);
  return guarded([&] {
    const auto c = ohg::walk_counts(g->value, from, to, n, weak != 0, to_limits(limits));
    *out = {c.total, c.positive, c.negative, c.signed_net};
  });
}

ohg_status ohg_walks_list(const ohg_hypergraph* g, const char* from, const char* to, size_t n,
                          int weak, const ohg_limits* limits, char** out) {
  OHG_REQUIRE(g);
  OHG_REQUIRE(from);
  OHG_REQUIRE(to);
  OHG_REQUIRE(out);
  return guarded([&] {
    const auto& h = g->value;
    nlohmann::json list = nlohmann::json::array();
    for (const auto& w : ohg::enumerate_walks(h, from, to, n, weak != 0, to_limits(limits))) {
      nlohmann::json anchors = nlohmann::json::array();
      for (const auto& a : w.anchors) anchors.push_back(h.label(a));
      nlohmann::json incs = nlohmann::json::array();
      for (std::size_t i : w.incidences) {
        const auto& inc = h.incidences()[i];
        incs.push_back({{"v", h.vertices()[inc.vertex]},
                        {"e", h.edges()[inc.edge]},
                        {"k", inc.mult_index},
                        {"sign", ohg::to_int(inc.sign)}});
      }
      list.push_back({{"anchors", anchors},
                      {"incidences", incs},
                      {"sign", ohg::to_int(ohg::walk_sign(h, w))}});
    }
    *out = dup_string(list.dump(2) + "\n");
  });
}

ohg_status ohg_backstep_count(const ohg_hypergraph* g, const char* vertex, uint64_t* out) {
  OHG_REQUIRE(g);
  OHG_REQUIRE(vertex);
  OHG_REQUIRE(out);
  return guarded([&] { *out = ohg::backstep_count(g->value, vertex); });
}

ohg_status ohg_line_graph(const ohg_hypergraph* g, ohg_hypergraph** out) {
  OHG_REQUIRE(g);
  OHG_REQUIRE(out);
  return guarded([&] {
    const auto lambda = ohg::line_graph(ohg::from_hypergraph(g->value));
    *out = new ohg_hypergraph{ohg::to_hypergraph(lambda)};
  });
}

ohg_status ohg_signed_graph_identities(const ohg_hypergraph* g, char** out) {
  OHG_REQUIRE(g);
  OHG_REQUIRE(out);
  return guarded([&] {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& f : ohg::signed_graph_identities(ohg::from_hypergraph(g->value))) {
      list.push_back({{"identity", f.identity}, {"detail", f.detail}});
    }
    *out = dup_string(list.dump() + "\n");
  });
}

ohg_status ohg_verify(const ohg_hypergraph* instance, const ohg_verify_options* options,
                      ohg_report** out) {
  OHG_REQUIRE(options);
  OHG_REQUIRE(out);
  return guarded([&] {
    ohg::VerifyOptions o;
    o.seed = options->seed;
    o.trials = options->trials;
    o.max_walk_incidences = options->max_walk_incidences;
    o.max_vertices = options->max_vertices;
    o.max_edges = options->max_edges;
    o.max_edge_size = options->max_edge_size;
    o.switchings = options->switchings;
    o.non_simple_fraction = options->non_simple_fraction;
    o.self_test = options->self_test != 0;
    o.threads = options->threads;
    o.limits = to_limits(&options->limits);
    *out = new ohg_report{instance ? ohg::verify_instance(instance->value, o) : ohg::verify_family(o)};
  });
}

void ohg_report_free(ohg_report* r) { delete r; }
int ohg_report_all_passed(const ohg_report* r) { return r && r->value.all_passed(); }
int ohg_report_incomplete(const ohg_report* r) { return r && r->value.incomplete; }
size_t ohg_report_failure_count(const ohg_report* r) { return r ? r->value.failure_count() : 0; }

ohg_status ohg_report_serialize(const ohg_report* r, ohg_format format, char** out) {
  OHG_REQUIRE(r);
  OHG_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(format == OHG_FORMAT_JSON ? ohg::format_report_json(r->value)
                                                : ohg::format_report_text(r->value));
  });
}

}  // extern "C"
