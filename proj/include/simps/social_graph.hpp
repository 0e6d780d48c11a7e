#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace simps {

using NodeId = std::uint32_t;

// How edge weights are drawn by the synthetic generators.
struct EdgeWeightSpec {
    enum class Kind { Uniform, Constant };
    Kind kind = Kind::Uniform;
    double value = 1.0;  // used when kind == Constant

    static EdgeWeightSpec uniform() { return {Kind::Uniform, 1.0}; }
    static EdgeWeightSpec constant(double w);
};

// Directed, weighted acquaintance graph. Weights live in [0,1]; an absent
// edge means zero acquaintance. Immutable once built, so concurrent reads
// are safe.
class SocialGraph {
public:
    struct OutEdge {
        NodeId dest;
        double weight;
    };
    struct Edge {
        NodeId origin;
        NodeId dest;
        double weight;
    };

    explicit SocialGraph(std::size_t node_count);
    SocialGraph(std::size_t node_count, std::vector<Edge> edges);

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    // Acquaintance felt by i toward j: edge weight if the directed edge
    // exists, zero otherwise. Strangeness is its complement.
    double acquaintance(NodeId i, NodeId j) const;
    double strangeness(NodeId i, NodeId j) const { return 1.0 - acquaintance(i, j); }
    bool has_edge(NodeId i, NodeId j) const;

    // Out-edges of i, sorted by destination id.
    const std::vector<OutEdge>& out_edges(NodeId i) const;

    double mean_out_degree() const;
    std::size_t max_total_degree() const;  // in-degree + out-degree maximum

private:
    void check_node(NodeId i) const;

    std::vector<std::vector<OutEdge>> adjacency_;
    std::size_t edge_count_ = 0;
};

// Directed Erdos-Renyi: every ordered pair (i,j), i != j, gets an edge
// independently with probability d/(n-1).
SocialGraph generate_random(std::size_t n, double target_avg_outdegree, std::uint64_t seed,
                            EdgeWeightSpec weights = EdgeWeightSpec::uniform());

// Undirected Barabasi-Albert preferential attachment, then every undirected
// edge is materialized as two directed edges with independent weights. The
// per-node attachment count m is floor(d/2), plus one more with probability
// d/2 - floor(d/2), so the expected mean out-degree approaches d.
SocialGraph generate_scale_free(std::size_t n, double target_avg_outdegree, std::uint64_t seed,
                                EdgeWeightSpec weights = EdgeWeightSpec::uniform());

// Edge-list text format: one `origin destination weight` triple per line,
// whitespace separated, 0-based ids, `#` starts a comment. Node count is
// 1 + max id unless a `nodes <N>` header line is present. Malformed lines,
// weights outside [0,1], self-loops and duplicate ordered pairs are reported
// with their line number.
SocialGraph load_graph(std::istream& in);
SocialGraph load_graph_file(const std::string& path);

void write_edge_list(const SocialGraph& g, std::ostream& out);

}  // namespace simps
