#include "simps/social_graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "simps/format.hpp"
#include "simps/rng.hpp"

namespace simps {

EdgeWeightSpec EdgeWeightSpec::constant(double w) {
    if (!(w >= 0.0 && w <= 1.0))
        throw std::invalid_argument("edge_weight: constant weight must be in [0,1]");
    return {Kind::Constant, w};
}

SocialGraph::SocialGraph(std::size_t node_count) : adjacency_(node_count) {
    if (node_count == 0) throw std::invalid_argument("graph: node count must be >= 1");
}

SocialGraph::SocialGraph(std::size_t node_count, std::vector<Edge> edges)
    : SocialGraph(node_count) {
    for (const Edge& e : edges) {
        if (e.origin >= node_count || e.dest >= node_count)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (e.origin == e.dest) throw std::invalid_argument("graph: self-loop");
        if (!(e.weight >= 0.0 && e.weight <= 1.0))
            throw std::invalid_argument("graph: edge weight outside [0,1]");
        adjacency_[e.origin].push_back({e.dest, e.weight});
    }
    for (auto& row : adjacency_) {
        std::sort(row.begin(), row.end(),
                  [](const OutEdge& a, const OutEdge& b) { return a.dest < b.dest; });
        for (std::size_t k = 1; k < row.size(); ++k)
            if (row[k].dest == row[k - 1].dest)
                throw std::invalid_argument("graph: duplicate ordered pair");
        edge_count_ += row.size();
    }
}

void SocialGraph::check_node(NodeId i) const {
    if (i >= adjacency_.size()) throw std::out_of_range("graph: invalid node id");
}

bool SocialGraph::has_edge(NodeId i, NodeId j) const {
    check_node(i);
    check_node(j);
    const auto& row = adjacency_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const OutEdge& e, NodeId id) { return e.dest < id; });
    return it != row.end() && it->dest == j;
}

double SocialGraph::acquaintance(NodeId i, NodeId j) const {
    check_node(i);
    check_node(j);
    if (i == j) throw std::invalid_argument("acquaintance: i and j must differ");
    const auto& row = adjacency_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const OutEdge& e, NodeId id) { return e.dest < id; });
    if (it != row.end() && it->dest == j) return it->weight;
    return 0.0;
}

const std::vector<SocialGraph::OutEdge>& SocialGraph::out_edges(NodeId i) const {
    check_node(i);
    return adjacency_[i];
}

double SocialGraph::mean_out_degree() const {
    return static_cast<double>(edge_count_) / static_cast<double>(adjacency_.size());
}

std::size_t SocialGraph::max_total_degree() const {
    std::vector<std::size_t> deg(adjacency_.size(), 0);
    for (NodeId i = 0; i < adjacency_.size(); ++i) {
        deg[i] += adjacency_[i].size();
        for (const OutEdge& e : adjacency_[i]) deg[e.dest] += 1;
    }
    return *std::max_element(deg.begin(), deg.end());
}

namespace {

double draw_weight(const EdgeWeightSpec& spec, std::mt19937_64& rng) {
    if (spec.kind == EdgeWeightSpec::Kind::Constant) return spec.value;
    // uniform on (0,1]: zero-weight edges would be indistinguishable from
    // absent ones
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return 1.0 - u(rng);
}

}  // namespace

SocialGraph generate_random(std::size_t n, double d, std::uint64_t seed,
                            EdgeWeightSpec weights) {
    if (n == 0) throw std::invalid_argument("graph: node count must be >= 1");
    if (!(d >= 0.0) || d > static_cast<double>(n - 1))
        throw std::invalid_argument("graph.d: random graph needs 0 <= d <= n-1");

    std::mt19937_64 structure = make_stream(seed, StreamPurpose::GraphStructure);
    std::mt19937_64 wstream = make_stream(seed, StreamPurpose::GraphWeights);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    const double p = n > 1 ? d / static_cast<double>(n - 1) : 0.0;
    std::vector<SocialGraph::Edge> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = 0; j < n; ++j) {
            if (i == j) continue;
            if (u(structure) < p) edges.push_back({i, j, draw_weight(weights, wstream)});
        }
    }
    return SocialGraph(n, std::move(edges));
}

SocialGraph generate_scale_free(std::size_t n, double d, std::uint64_t seed,
                                EdgeWeightSpec weights) {
    if (n == 0) throw std::invalid_argument("graph: node count must be >= 1");
    if (!(d >= 2.0) || d > static_cast<double>(n - 1))
        throw std::invalid_argument("graph.d: scale-free graph needs 2 <= d <= n-1");

    std::mt19937_64 structure = make_stream(seed, StreamPurpose::GraphStructure);
    std::mt19937_64 wstream = make_stream(seed, StreamPurpose::GraphWeights);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    const int m_base = static_cast<int>(std::floor(d / 2.0));
    const double m_frac = d / 2.0 - m_base;
    const std::size_t core = static_cast<std::size_t>(m_base) + (m_frac > 0.0 ? 1 : 0);

    // Preferential attachment via the endpoint pool: every undirected edge
    // contributes both endpoints, so a uniform draw from the pool picks a
    // node with probability proportional to its degree.
    std::vector<NodeId> pool;
    std::vector<std::pair<NodeId, NodeId>> undirected;
    std::unordered_set<NodeId> picked;

    for (NodeId v = static_cast<NodeId>(std::max<std::size_t>(core, 1)); v < n; ++v) {
        int m = m_base + ((m_frac > 0.0 && u(structure) < m_frac) ? 1 : 0);
        m = std::min<int>(m, static_cast<int>(v));
        picked.clear();
        while (static_cast<int>(picked.size()) < m) {
            NodeId target;
            if (!pool.empty()) {
                std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
                target = pool[pick(structure)];
            } else {
                std::uniform_int_distribution<NodeId> pick(0, v - 1);
                target = pick(structure);
            }
            if (target == v || picked.count(target)) continue;
            picked.insert(target);
            undirected.emplace_back(v, target);
        }
        for (NodeId t : picked) {
            pool.push_back(v);
            pool.push_back(t);
        }
    }

    std::vector<SocialGraph::Edge> edges;
    edges.reserve(2 * undirected.size());
    for (auto [a, b] : undirected) {
        edges.push_back({a, b, draw_weight(weights, wstream)});
        edges.push_back({b, a, draw_weight(weights, wstream)});
    }
    return SocialGraph(n, std::move(edges));
}

SocialGraph load_graph(std::istream& in) {
    std::vector<SocialGraph::Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    long node_header = -1;
    NodeId max_id = 0;
    bool any = false;

    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("edge list line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank or comment-only

        if (first == "nodes") {
            long n;
            std::string extra;
            if (!(ls >> n) || n < 1 || (ls >> extra)) fail("malformed nodes header");
            if (node_header >= 0) fail("duplicate nodes header");
            node_header = n;
            continue;
        }

        long o, t;
        double w;
        std::string extra;
        std::istringstream es(line);
        if (!(es >> o >> t >> w) || (es >> extra)) fail("malformed edge line");
        if (o < 0 || t < 0) fail("negative node id");
        if (o == t) fail("self-loop");
        if (!(w >= 0.0 && w <= 1.0)) fail("weight outside [0,1]");
        const std::uint64_t key = (static_cast<std::uint64_t>(o) << 32) | static_cast<std::uint64_t>(t);
        if (!seen.insert(key).second) fail("duplicate ordered pair");
        edges.push_back({static_cast<NodeId>(o), static_cast<NodeId>(t), w});
        max_id = std::max({max_id, static_cast<NodeId>(o), static_cast<NodeId>(t)});
        any = true;
    }

    std::size_t n = node_header >= 0 ? static_cast<std::size_t>(node_header)
                                     : (any ? static_cast<std::size_t>(max_id) + 1 : 1);
    if (node_header >= 0 && any && max_id >= n)
        throw std::runtime_error("edge list: node id exceeds declared node count");
    return SocialGraph(n, std::move(edges));
}

SocialGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    try {
        return load_graph(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_edge_list(const SocialGraph& g, std::ostream& out) {
    out << "nodes " << g.node_count() << "\n";
    for (NodeId i = 0; i < g.node_count(); ++i)
        for (const auto& e : g.out_edges(i))
            // 17 significant digits so a load of this file rebuilds the
            // weights bit for bit.
            out << i << " " << e.dest << " " << fmt_g(e.weight, 17) << "\n";
}

}  // namespace simps
