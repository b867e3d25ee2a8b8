#include "bfswitch/topology.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

namespace bfswitch {

namespace {

// Collapse to a clean simple graph: no self-loops, no parallel links,
// largest connected component only, nodes relabeled densely in the order
// they first appeared.
std::pair<std::vector<std::pair<int, int>>, int> clean_links(
    int n, const std::vector<std::pair<int, int>>& raw, LoadReport* report) {
    LoadReport local;
    LoadReport* rep = report ? report : &local;

    std::set<std::pair<int, int>> uniq;
    for (auto [u, v] : raw) {
        if (u == v) {
            rep->dropped_self_loops++;
            continue;
        }
        if (u > v) std::swap(u, v);
        if (!uniq.insert({u, v}).second) rep->collapsed_parallel_links++;
    }

    // connected components over nodes that still have an edge
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : uniq) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v])
                if (comp[u] == -1) {
                    comp[u] = ncomp;
                    stack.push_back(u);
                }
        }
        ncomp++;
    }
    std::vector<int> comp_size(ncomp, 0);
    for (int v = 0; v < n; ++v) comp_size[comp[v]]++;
    int keep = static_cast<int>(std::max_element(comp_size.begin(), comp_size.end()) -
                                comp_size.begin());
    rep->dropped_components = ncomp - 1;
    rep->dropped_nodes = n - comp_size[keep];

    std::vector<int> relabel(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (comp[v] == keep) relabel[v] = next++;

    std::vector<std::pair<int, int>> links;
    for (auto [u, v] : uniq)
        if (comp[u] == keep) links.push_back({relabel[u], relabel[v]});
    std::sort(links.begin(), links.end());
    return {std::move(links), next};
}

}  // namespace

Topology::Topology(int n, std::vector<std::pair<int, int>> links, std::string name)
    : name_(std::move(name)) {
    if (n < 2) throw input_error("topology needs at least 2 nodes, got " + std::to_string(n));
    neighbors_.resize(n);
    std::sort(links.begin(), links.end());
    for (auto [u, v] : links) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("link endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
        if (u == v) throw input_error("self-loop at node " + std::to_string(u));
        neighbors_[u].push_back(v);
        neighbors_[v].push_back(u);
    }
    links_ = std::move(links);
    for (auto& nb : neighbors_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw input_error("parallel link in topology");
        if (nb.empty()) throw input_error("isolated node in topology");
    }
    edge_offset_.resize(n + 1, 0);
    for (int v = 0; v < n; ++v) edge_offset_[v + 1] = edge_offset_[v] + degree(v);

    // reachability from node 0
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : neighbors_[v])
            if (!seen[u]) {
                seen[u] = 1;
                count++;
                stack.push_back(u);
            }
    }
    if (count != n) throw input_error("topology is not connected");
}

int Topology::port_of(int u, int v) const {
    const auto& nb = neighbors_.at(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v)
        throw input_error("nodes " + std::to_string(u) + " and " + std::to_string(v) +
                          " are not adjacent");
    return static_cast<int>(it - nb.begin());
}

bool Topology::adjacent(int u, int v) const {
    const auto& nb = neighbors_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

DirectedEdge Topology::edge_at(int index) const {
    if (index < 0 || index >= num_directed_edges()) throw input_error("edge index out of range");
    int from = static_cast<int>(std::upper_bound(edge_offset_.begin(), edge_offset_.end(), index) -
                                edge_offset_.begin()) - 1;
    int port = index - edge_offset_[from];
    return {from, neighbors_[from][port], port};
}

int Topology::max_degree() const {
    int m = 0;
    for (int v = 0; v < num_nodes(); ++v) m = std::max(m, degree(v));
    return m;
}

double Topology::mean_degree() const {
    return 2.0 * num_links() / num_nodes();
}

std::vector<int> Topology::degrees() const {
    std::vector<int> d(num_nodes());
    for (int v = 0; v < num_nodes(); ++v) d[v] = degree(v);
    return d;
}

DegreeStats degree_stats(const Topology& topo) {
    DegreeStats s;
    s.degrees = topo.degrees();
    s.max = topo.max_degree();
    s.mean = topo.mean_degree();
    return s;
}

// --- shortest paths ---------------------------------------------------------

PathSet::PathSet(const Topology& topo) : topo_(&topo) {
    int n = topo.num_nodes();
    dist_.assign(n, std::vector<int>(n, -1));
    parent_.assign(n, std::vector<int>(n, -1));

    // Level-ordered BFS. rank[v] is the lexicographic rank of the chosen
    // path to v within its level, so picking the min-rank predecessor and
    // sorting each level by (parent rank, id) keeps every stored path the
    // lexicographically smallest shortest one.
    std::vector<int> rank(n);
    for (int s = 0; s < n; ++s) {
        auto& dist = dist_[s];
        auto& parent = parent_[s];
        dist[s] = 0;
        rank[s] = 0;
        std::vector<int> level{s};
        while (!level.empty()) {
            std::vector<int> next;
            for (int v : level)
                for (int u : topo.neighbors(v))
                    if (dist[u] == -1) {
                        dist[u] = dist[v] + 1;
                        next.push_back(u);
                    }
            for (int u : next) {
                int best = -1;
                for (int w : topo.neighbors(u))
                    if (dist[w] == dist[u] - 1 && (best == -1 || rank[w] < rank[best])) best = w;
                parent[u] = best;
            }
            std::sort(next.begin(), next.end(), [&](int a, int b) {
                if (rank[parent[a]] != rank[parent[b]]) return rank[parent[a]] < rank[parent[b]];
                return a < b;
            });
            for (std::size_t i = 0; i < next.size(); ++i) rank[next[i]] = static_cast<int>(i);
            level = std::move(next);
        }
    }
}

Path PathSet::path(int s, int t) const {
    if (s == t) throw input_error("path endpoints must differ");
    Path p;
    for (int v = t; v != -1; v = parent_[s][v]) p.nodes.push_back(v);
    std::reverse(p.nodes.begin(), p.nodes.end());
    p.edges.reserve(p.nodes.size() - 1);
    for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i)
        p.edges.push_back(topo_->directed_edge(p.nodes[i], p.nodes[i + 1]));
    return p;
}

std::uint64_t PathSet::total_path_length() const {
    std::uint64_t total = 0;
    int n = num_nodes();
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (t != s) total += static_cast<std::uint64_t>(dist_[s][t]);
    return total;
}

double PathSet::mean_path_length() const {
    return static_cast<double>(total_path_length()) / static_cast<double>(size());
}

PathSet all_pairs_shortest_paths(const Topology& topo) { return PathSet(topo); }

double mean_path_length(const PathSet& paths) { return paths.mean_path_length(); }

// --- text format ------------------------------------------------------------

Topology load_topology_text(const std::string& bytes, std::string name, LoadReport* report) {
    std::istringstream in(bytes);
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "N")
        throw input_error("topology text must start with 'N <count>'");
    std::vector<std::pair<int, int>> raw;
    int u, v;
    while (in >> u >> v) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("link endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
        raw.push_back({u, v});
    }
    if (!in.eof()) throw input_error("trailing garbage in topology text");
    auto [links, kept] = clean_links(n, raw, report);
    if (kept < 2 || links.empty()) throw input_error("empty graph after cleanup");
    return Topology(kept, std::move(links), std::move(name));
}

std::string save_topology_text(const Topology& topo) {
    std::string out = "N " + std::to_string(topo.num_nodes()) + "\n";
    for (auto [u, v] : topo.links())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// --- Weibull generator ------------------------------------------------------

namespace {

double uniform01(std::mt19937_64& rng) {
    // 53-bit mantissa, offset half an ulp so the result is in (0,1)
    return (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

int raw_weibull_degree(double shape, double scale, std::mt19937_64& rng) {
    double x = scale * std::pow(-std::log(uniform01(rng)), 1.0 / shape);
    if (x >= 1e9) return 1000000000;
    return static_cast<int>(std::floor(x));
}

int truncated_weibull_degree(double shape, double scale, int max_degree, std::mt19937_64& rng) {
    for (int i = 0; i < 65536; ++i) {
        int d = raw_weibull_degree(shape, scale, rng);
        if (d >= 1 && d <= max_degree) return d;
    }
    throw input_error("degree distribution has negligible mass in [1, " +
                      std::to_string(max_degree) + "]");
}

// Havel-Hakimi. Returns links (u < v) or empty optional when the sequence
// is not graphical.
std::optional<std::vector<std::pair<int, int>>> realize_graphical(std::vector<int> degree) {
    int n = static_cast<int>(degree.size());
    std::vector<std::pair<int, int>> links;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (;;) {
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (degree[a] != degree[b]) return degree[a] > degree[b];
            return a < b;
        });
        int v = order[0];
        if (degree[v] == 0) break;
        if (degree[v] > n - 1 || degree[v] >= n) return std::nullopt;
        int need = degree[v];
        if (need > static_cast<int>(order.size()) - 1) return std::nullopt;
        for (int i = 1; i <= need; ++i) {
            int u = order[i];
            if (degree[u] == 0) return std::nullopt;  // not graphical
            degree[u]--;
            links.push_back({std::min(u, v), std::max(u, v)});
        }
        degree[v] = 0;
    }
    return links;
}

// Degree-preserving 2-swap between components until connected.
std::vector<std::pair<int, int>> connect_by_rewiring(int n,
                                                     std::vector<std::pair<int, int>> links,
                                                     std::mt19937_64& rng) {
    for (;;) {
        std::set<std::pair<int, int>> edges(links.begin(), links.end());
        std::vector<int> comp(n, -1);
        std::vector<std::vector<int>> adj(n);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        int ncomp = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] != -1) continue;
            std::vector<int> stack{s};
            comp[s] = ncomp;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : adj[v])
                    if (comp[u] == -1) {
                        comp[u] = ncomp;
                        stack.push_back(u);
                    }
            }
            ncomp++;
        }
        if (ncomp == 1) return {edges.begin(), edges.end()};

        // one edge from each of two different components; swapping endpoints
        // joins them and cannot create loops or parallels across components
        std::vector<std::vector<std::pair<int, int>>> comp_edges(ncomp);
        for (auto e : edges) comp_edges[comp[e.first]].push_back(e);
        int a = -1, b = -1;
        for (int c = 0; c < ncomp && b == -1; ++c) {
            if (comp_edges[c].empty()) continue;  // isolated node; degrees >= 1 prevent this
            if (a == -1) a = c;
            else b = c;
        }
        if (b == -1) throw input_error("cannot rewire degree sequence to connectivity");
        auto pick = [&](std::vector<std::pair<int, int>>& es) {
            return es[rng() % es.size()];
        };
        auto [u1, v1] = pick(comp_edges[a]);
        auto [u2, v2] = pick(comp_edges[b]);
        edges.erase({u1, v1});
        edges.erase({u2, v2});
        edges.insert({std::min(u1, u2), std::max(u1, u2)});
        edges.insert({std::min(v1, v2), std::max(v1, v2)});
        links.assign(edges.begin(), edges.end());
    }
}

}  // namespace

std::vector<int> sample_degree_sequence(std::size_t count, double shape, double scale,
                                        std::uint64_t seed) {
    if (shape <= 0 || scale <= 0) throw input_error("weibull shape and scale must be positive");
    std::mt19937_64 rng(seed);
    std::vector<int> out(count);
    for (auto& d : out) d = raw_weibull_degree(shape, scale, rng);
    return out;
}

Topology gen_weibull_topology(const WeibullParams& params) {
    int n = params.n;
    if (n < 2) throw input_error("need n >= 2");
    if (params.shape <= 0 || params.scale <= 0)
        throw input_error("weibull shape and scale must be positive");
    int dmax = params.max_degree > 0 ? std::min(params.max_degree, n - 1) : n - 1;

    std::mt19937_64 rng(params.seed);
    const int kMaxAttempts = 200;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<int> degree(n);
        for (auto& d : degree) d = truncated_weibull_degree(params.shape, params.scale, dmax, rng);
        long long sum = std::accumulate(degree.begin(), degree.end(), 0LL);
        // parity fix: redraw single entries until the sum is even
        for (int tries = 0; sum % 2 != 0 && tries < 4096; ++tries) {
            int i = static_cast<int>(rng() % n);
            sum -= degree[i];
            degree[i] = truncated_weibull_degree(params.shape, params.scale, dmax, rng);
            sum += degree[i];
        }
        if (sum % 2 != 0) continue;
        if (sum / 2 < n - 1) continue;  // not enough links to connect
        auto links = realize_graphical(degree);
        if (!links) continue;
        auto connected = connect_by_rewiring(n, std::move(*links), rng);
        std::sort(connected.begin(), connected.end());
        char label[96];
        std::snprintf(label, sizeof label, "weibull-n%d-s%llu", n,
                      static_cast<unsigned long long>(params.seed));
        return Topology(n, std::move(connected), label);
    }
    throw input_error("no feasible degree sequence after " + std::to_string(kMaxAttempts) +
                      " attempts");
}

Topology gen_weibull_topology(int n, double shape, double scale, std::uint64_t seed) {
    WeibullParams p;
    p.n = n;
    p.shape = shape;
    p.scale = scale;
    p.seed = seed;
    return gen_weibull_topology(p);
}

}  // namespace bfswitch
