#include "ohg/walks.hpp"

#include <optional>

namespace ohg {

namespace {

void check_parity(Anchor from, Anchor to, std::size_t n) {
  const bool same_kind = from.kind == to.kind;
  if (same_kind != (n % 2 == 0)) {
    throw ArgumentError(same_kind
                            ? "walks between anchors of the same kind need an even incidence count"
                            : "cross-walks need an odd incidence count");
  }
}

void check_anchor(const OrientedHypergraph& g, Anchor a) {
  const std::size_t bound = a.kind == AnchorKind::vertex ? g.vertex_count() : g.edge_count();
  if (a.index >= bound) throw ArgumentError("anchor out of range");
}

Anchor resolve(const OrientedHypergraph& g, const std::string& label) {
  if (auto a = g.find_anchor(label)) return *a;
  throw ArgumentError("unknown anchor label '" + label + "'");
}

// Depth-first search over incidence sequences. `visit` sees the incidence
// stack, the accumulated sign product (without the (−1)^⌊n/2⌋ factor) and the
// end anchor of every completed walk ending at `to`, or at any anchor when
// `to` is empty.
class WalkSearch {
 public:
  using Visitor = std::function<void(std::span<const std::size_t>, Sign, Anchor)>;

  WalkSearch(const OrientedHypergraph& g, std::optional<Anchor> to, std::size_t n, bool weak,
             const EnumerationLimits& limits, Visitor visit)
      : g_(g), to_(to), n_(n), weak_(weak), limits_(limits), visit_(std::move(visit)) {
    if (n_ > limits_.max_incidences) {
      throw ResourceError("walk length of " + std::to_string(n_) +
                          " incidences exceeds the ceiling of " +
                          std::to_string(limits_.max_incidences));
    }
    stack_.reserve(n_);
  }

  void run(Anchor from) { descend(from, Sign::positive); }

 private:
  void descend(Anchor at, Sign product) {
    const std::size_t depth = stack_.size();
    if (depth == n_) {
      if (!to_ || at == *to_) {
        if (++found_ > limits_.max_walks) {
          throw ResourceError("walk enumeration exceeded " + std::to_string(limits_.max_walks) +
                              " walks");
        }
        visit_(stack_, product, at);
      }
      return;
    }
    // Step depth+1 closes the pair (i_{2h−1}, i_{2h}) when depth+1 is even.
    const bool closes_pair = (depth % 2) == 1;
    for (std::size_t i : g_.incidences_at(at)) {
      if (!weak_ && closes_pair && stack_.back() == i) continue;
      stack_.push_back(i);
      descend(g_.across(i, at), product * g_.incidences()[i].sign);
      stack_.pop_back();
    }
  }

  const OrientedHypergraph& g_;
  std::optional<Anchor> to_;
  std::size_t n_;
  bool weak_;
  EnumerationLimits limits_;
  Visitor visit_;
  std::vector<std::size_t> stack_;
  std::uint64_t found_ = 0;
};

Sign parity_factor(std::size_t n) { return (n / 2) % 2 == 0 ? Sign::positive : Sign::negative; }

LabeledMatrix signed_walk_matrix(const OrientedHypergraph& g, AnchorKind rows, AnchorKind cols,
                                 std::size_t n, bool weak, const EnumerationLimits& limits) {
  auto labels_of = [&](AnchorKind k) {
    auto s = k == AnchorKind::vertex ? g.vertices() : g.edges();
    return std::vector<std::string>(s.begin(), s.end());
  };
  LabeledMatrix x(labels_of(rows), labels_of(cols));
  if ((rows == cols) != (n % 2 == 0)) {
    throw ArgumentError(rows == cols
                            ? "walk matrices over one anchor set need an even incidence count"
                            : "cross-walk matrices need an odd incidence count");
  }
  const Sign factor = parity_factor(n);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    WalkSearch search(g, std::nullopt, n, weak, limits,
                      [&](std::span<const std::size_t>, Sign product, Anchor end) {
                        // Walks of the right parity always end on the column kind.
                        x.add_to(r, end.index, to_int(factor * product));
                      });
    search.run(Anchor{rows, r});
  }
  return x;
}

}  // namespace

Sign walk_sign(const OrientedHypergraph& g, const Walk& w) {
  const std::size_t n = w.incidences.size();
  if (w.anchors.size() != n + 1) {
    throw StructuralError("walk with " + std::to_string(n) + " incidences needs " +
                          std::to_string(n + 1) + " anchors");
  }
  for (const auto& a : w.anchors) {
    const std::size_t bound = a.kind == AnchorKind::vertex ? g.vertex_count() : g.edge_count();
    if (a.index >= bound) throw StructuralError("walk anchor out of range");
  }
  Sign s = parity_factor(n);
  for (std::size_t h = 1; h <= n; ++h) {
    const Anchor prev = w.anchors[h - 1];
    const Anchor next = w.anchors[h];
    if (prev.kind == next.kind) throw StructuralError("walk anchors must alternate vertex/edge");
    const std::size_t i = w.incidences[h - 1];
    if (!g.contains(i, prev) || !g.contains(i, next)) {
      throw StructuralError("incidence " + std::to_string(h) +
                            " does not join its neighbouring anchors");
    }
    if (!w.weak && h % 2 == 0 && w.incidences[h - 2] == i) {
      throw StructuralError("incidences " + std::to_string(h - 1) + " and " + std::to_string(h) +
                            " coincide in a non-weak walk");
    }
    s = s * g.incidences()[i].sign;
  }
  return s;
}

std::vector<Walk> enumerate_walks(const OrientedHypergraph& g, Anchor from, Anchor to,
                                  std::size_t n, bool weak, const EnumerationLimits& limits) {
  check_anchor(g, from);
  check_anchor(g, to);
  check_parity(from, to, n);
  std::vector<Walk> out;
  WalkSearch search(g, to, n, weak, limits, [&](std::span<const std::size_t> seq, Sign, Anchor) {
    Walk w;
    w.weak = weak;
    w.incidences.assign(seq.begin(), seq.end());
    w.anchors.reserve(n + 1);
    w.anchors.push_back(from);
    for (std::size_t i : seq) w.anchors.push_back(g.across(i, w.anchors.back()));
    out.push_back(std::move(w));
  });
  search.run(from);
  return out;
}

WalkCounts walk_counts(const OrientedHypergraph& g, Anchor from, Anchor to, std::size_t n,
                       bool weak, const EnumerationLimits& limits) {
  check_anchor(g, from);
  check_anchor(g, to);
  check_parity(from, to, n);
  WalkCounts counts;
  const Sign factor = parity_factor(n);
  WalkSearch search(g, to, n, weak, limits, [&](std::span<const std::size_t>, Sign product, Anchor) {
    ++counts.total;
    if (factor * product == Sign::positive) {
      ++counts.positive;
    } else {
      ++counts.negative;
    }
  });
  search.run(from);
  counts.signed_net =
      static_cast<std::int64_t>(counts.positive) - static_cast<std::int64_t>(counts.negative);
  return counts;
}

std::vector<Walk> enumerate_walks(const OrientedHypergraph& g, const std::string& from,
                                  const std::string& to, std::size_t n, bool weak,
                                  const EnumerationLimits& limits) {
  return enumerate_walks(g, resolve(g, from), resolve(g, to), n, weak, limits);
}

WalkCounts walk_counts(const OrientedHypergraph& g, const std::string& from,
                       const std::string& to, std::size_t n, bool weak,
                       const EnumerationLimits& limits) {
  return walk_counts(g, resolve(g, from), resolve(g, to), n, weak, limits);
}

LabeledMatrix walk_matrix(const OrientedHypergraph& g, AnchorKind rows, AnchorKind cols,
                          std::size_t n, const EnumerationLimits& limits) {
  return signed_walk_matrix(g, rows, cols, n, false, limits);
}

LabeledMatrix weak_walk_matrix(const OrientedHypergraph& g, AnchorKind rows, AnchorKind cols,
                               std::size_t n, const EnumerationLimits& limits) {
  return signed_walk_matrix(g, rows, cols, n, true, limits);
}

std::uint64_t backstep_count(const OrientedHypergraph& g, const std::string& vertex) {
  const auto v = g.find_vertex(vertex);
  if (!v) throw ArgumentError("unknown vertex '" + vertex + "'");
  const Anchor a{AnchorKind::vertex, *v};
  std::uint64_t count = 0;
  for (const auto& w : enumerate_walks(g, a, a, 2, true)) {
    if (w.incidences[0] == w.incidences[1]) ++count;
  }
  return count;
}

}  // namespace ohg
