#pragma once

#include <optional>
#include <vector>

#include "radiogrid/grid.hpp"

namespace radiogrid {

/// Vertex sequence u_1 .. u_n; the combinatorial object the constructions
/// optimize. A valid ordering is a permutation of V(G).
using Ordering = std::vector<Vertex>;

/// Injective assignment of nonnegative integer channels to all vertices.
class Labeling {
public:
    Labeling(const GridGraph& g, std::vector<long long> labels_by_index)
        : a_(g.a()), b_(g.b()), labels_(std::move(labels_by_index)) {
        if (labels_.size() != static_cast<size_t>(g.vertex_count()))
            throw std::invalid_argument("Labeling: one label per vertex required");
    }

    int a() const { return a_; }
    int b() const { return b_; }
    long long at(Vertex v) const { return labels_[idx(v)]; }
    void set(Vertex v, long long label) { labels_[idx(v)] = label; }
    const std::vector<long long>& raw() const { return labels_; }
    size_t size() const { return labels_.size(); }

private:
    size_t idx(Vertex v) const {
        if (v.x < 1 || v.x > a_ || v.y < 1 || v.y > b_)
            throw std::invalid_argument("Labeling: vertex out of bounds");
        return static_cast<size_t>(v.y - 1) * a_ + (v.x - 1);
    }
    int a_, b_;
    std::vector<long long> labels_;
};

/// A vertex pair whose labels sit closer than the radio condition allows.
struct Violation {
    Vertex u, v;
    long long required_gap;  // D + 1 - d(u,v)
    long long actual_gap;    // |f(u) - f(v)|
};

struct BumpEvent {
    int index;           // 1-based step i with b_i > 0 (edge u_i -> u_{i+1})
    long long magnitude; // b_i
    int binding_offset;  // largest c > 1 with u_{i+1-c} tight against u_{i+1}
};

/// Per-step metrics of the minimal labeling of an ordering.
struct StepReport {
    std::vector<int> d;            // d_i = d(u_{i+1}, u_i), i = 1..n-1
    std::vector<long long> f_gaps; // f_i = f(u_{i+1}) - f(u_i)
    std::vector<long long> bumps;  // b_i = f_i - (D + 1 - d_i)
    std::vector<BumpEvent> bump_events;
    long long span = 0;
    long long distance_sum = 0;    // sum of d_i
};

/// Every unordered pair violating |f(u)-f(v)| >= D+1-d(u,v), each once.
std::vector<Violation> validate(const GridGraph& g, const Labeling& f);

/// max label - min label. Throws on an empty labeling.
long long span(const Labeling& f);

/// Vertices sorted by increasing label. Throws if labels repeat.
Ordering ordering_of(const Labeling& f);

/// The minimum-span radio labeling whose increasing-label order is s:
/// f(u_1) = 0 and f(u_i) = max_{j<i} f(u_j) + D + 1 - d(u_i, u_j).
/// Greedy tightness is optimal for a fixed order: every pair constraint is a
/// lower bound f(u_i) - f(u_j) >= D+1-d, so raising any label never lets a
/// later label drop, and lowering f(u_i) below the max violates the binding
/// pair. (exhaustive_min_span_check re-verifies this on small instances.)
Labeling min_span_labeling(const GridGraph& g, const Ordering& s);

/// d_i / f_i / b_i sequences of min_span_labeling(g,s) plus the bump events
/// with their binding predecessor offsets.
StepReport step_report(const GridGraph& g, const Ordering& s);

/// All v with |f(u)-f(v)| == D+1-d(u,v).
std::vector<Vertex> tightness_neighbors(const GridGraph& g, const Labeling& f, Vertex u);

/// The grid bump condition: placing u_k after u_km1 (whose own placement
/// incurred bump b_km1) forces a bump iff
///   2 * d_rect(u_km2, u_k; probe u_km1) > D + 1 + b_km1.
bool bump_condition_holds(const GridGraph& g, Vertex u_km2, Vertex u_km1, Vertex u_k,
                          long long b_km1);

/// Throws unless s is a permutation of V(g).
void require_permutation(const GridGraph& g, const Ordering& s);

}  // namespace radiogrid
