#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ohg/error.hpp"

namespace ohg {

enum class Sign : std::int8_t { negative = -1, positive = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::positive : Sign::negative;
}
constexpr Sign operator-(Sign s) {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}

// Incidence as it appears in an instance document, before validation. The
// sign is a plain int so that invalid values can be reported.
struct LabeledIncidence {
  std::string vertex;
  std::string edge;
  std::int64_t mult_index = 1;
  int sign = 1;

  friend bool operator==(const LabeledIncidence&, const LabeledIncidence&) = default;
};

// Unvalidated description of an oriented hypergraph.
struct HypergraphData {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
  std::vector<LabeledIncidence> incidences;

  friend bool operator==(const HypergraphData&, const HypergraphData&) = default;
};

enum class IssueKind {
  duplicate_vertex_label,
  duplicate_edge_label,
  vertex_edge_overlap,
  undeclared_vertex,
  undeclared_edge,
  invalid_sign,
  invalid_mult_index,
  duplicate_incidence,
  multiplicity_gap,
};

const char* to_string(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::string message;
  std::vector<std::string> labels;
  // Position in HypergraphData::incidences, when the issue is tied to one.
  std::optional<std::size_t> incidence_index;
};

using ValidationReport = std::vector<ValidationIssue>;

// Empty iff `data` describes a valid oriented hypergraph.
ValidationReport validate(const HypergraphData& data);

class InvalidHypergraphError : public Error {
 public:
  explicit InvalidHypergraphError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// One signed incidence (v, e, k, σ) with v and e as positions in the owning
// hypergraph's vertex and edge lists.
struct Incidence {
  std::size_t vertex = 0;
  std::size_t edge = 0;
  std::uint32_t mult_index = 1;
  Sign sign = Sign::positive;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

enum class AnchorKind : std::uint8_t { vertex, edge };

struct Anchor {
  AnchorKind kind = AnchorKind::vertex;
  std::size_t index = 0;

  friend bool operator==(const Anchor&, const Anchor&) = default;
  friend auto operator<=>(const Anchor&, const Anchor&) = default;
};

using SwitchingFunction = std::map<std::string, Sign>;

// G = (V, E, I, σ). Immutable once built. Incidences are kept in canonical
// order: by vertex position, then edge position, then multiplicity index.
class OrientedHypergraph {
 public:
  OrientedHypergraph() = default;

  // Throws InvalidHypergraphError when validate(data) is non-empty.
  static OrientedHypergraph from_data(const HypergraphData& data);

  HypergraphData to_data() const;

  std::span<const std::string> vertices() const { return vertices_; }
  std::span<const std::string> edges() const { return edges_; }
  std::span<const Incidence> incidences() const { return incidences_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Positions into incidences(), ascending.
  std::span<const std::size_t> incidences_at_vertex(std::size_t v) const {
    return by_vertex_[v];
  }
  std::span<const std::size_t> incidences_at_edge(std::size_t e) const {
    return by_edge_[e];
  }
  std::span<const std::size_t> incidences_at(Anchor a) const {
    return a.kind == AnchorKind::vertex ? incidences_at_vertex(a.index)
                                        : incidences_at_edge(a.index);
  }

  std::size_t degree(std::size_t v) const { return by_vertex_[v].size(); }
  std::size_t edge_size(std::size_t e) const { return by_edge_[e].size(); }

  std::optional<std::size_t> find_vertex(const std::string& label) const;
  std::optional<std::size_t> find_edge(const std::string& label) const;
  // Labels of V and E are disjoint, so a label names at most one anchor.
  std::optional<Anchor> find_anchor(const std::string& label) const;
  const std::string& label(Anchor a) const;

  // The element of incidence `i` on the opposite side of `from`.
  Anchor across(std::size_t i, Anchor from) const;
  bool contains(std::size_t i, Anchor a) const;

  friend bool operator==(const OrientedHypergraph& a, const OrientedHypergraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ &&
           a.incidences_ == b.incidences_;
  }

 private:
  OrientedHypergraph(std::vector<std::string> vertices, std::vector<std::string> edges,
                     std::vector<Incidence> incidences);

  std::vector<std::string> vertices_;
  std::vector<std::string> edges_;
  std::vector<Incidence> incidences_;
  std::vector<std::vector<std::size_t>> by_vertex_;
  std::vector<std::vector<std::size_t>> by_edge_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;

  friend OrientedHypergraph incidence_dual(const OrientedHypergraph&);
  friend OrientedHypergraph switch_vertices(const OrientedHypergraph&,
                                            const SwitchingFunction&);
};

bool is_simple(const OrientedHypergraph& g);
bool is_k_uniform(const OrientedHypergraph& g, std::size_t k);
bool is_k_regular(const OrientedHypergraph& g, std::size_t k);

// G* = (E, V, I*, σ*): vertices and edges trade places, each (v,e,k,s)
// becomes (e,v,k,s).
OrientedHypergraph incidence_dual(const OrientedHypergraph& g);

// G^θ: every incidence sign multiplied by θ of its vertex. θ must assign
// exactly the vertices of g; otherwise DomainError.
OrientedHypergraph switch_vertices(const OrientedHypergraph& g, const SwitchingFunction& theta);

}  // namespace ohg
