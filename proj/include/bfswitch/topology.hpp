#ifndef BFSWITCH_TOPOLOGY_HPP
#define BFSWITCH_TOPOLOGY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bfswitch {

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One direction of an undirected link. port is the outgoing port index at
// `from`, counted in ascending neighbor-id order.
struct DirectedEdge {
    int from = -1;
    int to = -1;
    int port = -1;

    bool operator==(const DirectedEdge&) const = default;
    auto operator<=>(const DirectedEdge&) const = default;
};

// Connected simple undirected graph over dense node ids 0..N-1.
class Topology {
public:
    Topology(int n, std::vector<std::pair<int, int>> links, std::string name = "graph");

    int num_nodes() const { return static_cast<int>(neighbors_.size()); }
    int num_links() const { return static_cast<int>(links_.size()); }
    int num_directed_edges() const { return 2 * num_links(); }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    const std::vector<std::pair<int, int>>& links() const { return links_; }
    const std::vector<int>& neighbors(int v) const { return neighbors_.at(v); }
    int degree(int v) const { return static_cast<int>(neighbors_.at(v).size()); }
    int neighbor(int v, int port) const { return neighbors_.at(v).at(port); }

    // Outgoing port at u toward adjacent node v; throws if not adjacent.
    int port_of(int u, int v) const;
    bool adjacent(int u, int v) const;

    // Dense index of a directed edge: edges enumerated in (node id, port) order.
    int edge_index(int from, int port) const { return edge_offset_[from] + port; }
    int edge_index(const DirectedEdge& e) const { return edge_index(e.from, e.port); }
    DirectedEdge edge_at(int index) const;
    DirectedEdge directed_edge(int from, int to) const { return {from, to, port_of(from, to)}; }
    DirectedEdge reverse(const DirectedEdge& e) const { return directed_edge(e.to, e.from); }

    int max_degree() const;
    double mean_degree() const;
    std::vector<int> degrees() const;

private:
    std::string name_;
    std::vector<std::pair<int, int>> links_;          // u < v, sorted
    std::vector<std::vector<int>> neighbors_;         // sorted ascending
    std::vector<int> edge_offset_;                    // prefix sums of degrees
};

struct DegreeStats {
    std::vector<int> degrees;
    int max = 0;
    double mean = 0.0;
};

DegreeStats degree_stats(const Topology& topo);

// Simple path between two nodes.
struct Path {
    std::vector<int> nodes;           // <s, ..., t>
    std::vector<DirectedEdge> edges;  // nodes.size() - 1 entries

    int length() const { return static_cast<int>(edges.size()); }
    int source() const { return nodes.front(); }
    int target() const { return nodes.back(); }
};

// Hop-count shortest paths for all ordered pairs, ties broken by
// lexicographically smallest node-id sequence. Stored as one predecessor
// tree per source; paths materialize on demand.
class PathSet {
public:
    explicit PathSet(const Topology& topo);

    const Topology& topology() const { return *topo_; }
    int num_nodes() const { return topo_->num_nodes(); }
    std::size_t size() const {
        auto n = static_cast<std::size_t>(num_nodes());
        return n * (n - 1);
    }

    int length(int s, int t) const { return dist_[s][t]; }
    Path path(int s, int t) const;

    // Predecessor of v on the chosen shortest path from s (-1 for v == s).
    int parent(int s, int v) const { return parent_[s][v]; }

    double mean_path_length() const;
    std::uint64_t total_path_length() const;

private:
    const Topology* topo_;
    std::vector<std::vector<int>> dist_;
    std::vector<std::vector<int>> parent_;
};

PathSet all_pairs_shortest_paths(const Topology& topo);
double mean_path_length(const PathSet& paths);

// --- loading / generation -------------------------------------------------

struct LoadReport {
    int dropped_self_loops = 0;
    int collapsed_parallel_links = 0;
    int dropped_components = 0;
    int dropped_nodes = 0;
};

// ITZ-dialect GraphML: node/edge elements with id/source/target attributes,
// everything else ignored. Cleanup drops self-loops, collapses parallel
// links and keeps the largest connected component.
Topology load_graphml(const std::string& bytes, std::string name = "graph",
                      LoadReport* report = nullptr);

// Line-oriented internal form: "N <count>" header then one "u v" per link.
Topology load_topology_text(const std::string& bytes, std::string name = "graph",
                            LoadReport* report = nullptr);
std::string save_topology_text(const Topology& topo);

// Loads either format, chosen by filename extension (.graphml vs anything else).
Topology load_topology_file(const std::string& path, LoadReport* report = nullptr);

struct WeibullParams {
    int n = 0;
    double shape = 0.42;
    double scale = 2.0;
    std::uint64_t seed = 1;
    int max_degree = 0;  // 0 means n-1
};

// Node degrees follow the discrete Weibull survival P(D >= k) =
// exp(-(k/scale)^shape), truncated to [1, max_degree]; realized by a
// graphical-sequence construction plus degree-preserving rewiring until
// connected. Deterministic per parameter set.
Topology gen_weibull_topology(const WeibullParams& params);
Topology gen_weibull_topology(int n, double shape, double scale, std::uint64_t seed);

// Raw sampler behind the generator, no truncation (D >= 0). Exposed so the
// distribution itself can be checked against its survival function.
std::vector<int> sample_degree_sequence(std::size_t count, double shape, double scale,
                                        std::uint64_t seed);

}  // namespace bfswitch

#endif
