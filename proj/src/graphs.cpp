#include "relhyp/graphs.hpp"

#include <algorithm>
#include <deque>

namespace relhyp {

int SimpGraph::num_edges() const {
    int twice = 0;
    for (const auto& a : adj_) twice += static_cast<int>(a.size());
    return twice / 2;
}

int SimpGraph::add_vertex(std::string label) {
    adj_.emplace_back();
    labels_.resize(adj_.size());
    labels_.back() = std::move(label);
    return num_vertices() - 1;
}

void SimpGraph::set_label(int v, std::string s) {
    labels_.resize(adj_.size());
    labels_[v] = std::move(s);
}

void SimpGraph::add_edge(int u, int v) {
    if (u == v) throw GroupError("simplicial graph cannot have loops");
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        throw GroupError("edge endpoint out of range");
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v) return;
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool SimpGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> SimpGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> bfs_distances_multi(const SimpGraph& g, const std::vector<int>& srcs) {
    std::vector<int> dist(g.num_vertices(), kUnreachable);
    std::deque<int> work;
    for (int s : srcs) {
        if (s < 0 || s >= g.num_vertices()) throw GroupError("BFS source out of range");
        if (dist[s] == kUnreachable) {
            dist[s] = 0;
            work.push_back(s);
        }
    }
    while (!work.empty()) {
        int u = work.front();
        work.pop_front();
        for (int v : g.neighbors(u))
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                work.push_back(v);
            }
    }
    return dist;
}

std::vector<int> bfs_distances(const SimpGraph& g, int src) {
    return bfs_distances_multi(g, {src});
}

int graph_distance(const SimpGraph& g, int u, int v) { return bfs_distances(g, u)[v]; }

std::vector<int> ball_vertices(const SimpGraph& g, int v, int r) {
    auto dist = bfs_distances(g, v);
    std::vector<int> out;
    for (int x = 0; x < g.num_vertices(); ++x)
        if (dist[x] != kUnreachable && dist[x] <= r) out.push_back(x);
    return out;
}

std::vector<int> canonical_geodesic(const SimpGraph& g, int u, int v) {
    auto dist = bfs_distances(g, v);
    if (u < 0 || u >= g.num_vertices() || dist[u] == kUnreachable)
        throw GroupError("vertices are not connected");
    std::vector<int> path = {u};
    int cur = u;
    while (cur != v) {
        int best = kUnreachable;
        for (int w : g.neighbors(cur)) // neighbors ascend, so first hit is least
            if (dist[w] == dist[cur] - 1) { best = w; break; }
        path.push_back(best);
        cur = best;
    }
    return path;
}

GeodesicDag all_geodesics_dag(const SimpGraph& g, int u, int v, size_t max_count) {
    auto dist = bfs_distances(g, v);
    if (u < 0 || u >= g.num_vertices() || dist[u] == kUnreachable)
        throw GroupError("vertices are not connected");
    GeodesicDag dag;
    // Collect the DAG restricted to vertices on some u-v geodesic.
    auto du = bfs_distances(g, u);
    for (int x = 0; x < g.num_vertices(); ++x) {
        if (du[x] == kUnreachable || dist[x] == kUnreachable) continue;
        if (du[x] + dist[x] != dist[u]) continue;
        std::vector<int> succ;
        for (int w : g.neighbors(x))
            if (dist[w] == dist[x] - 1 && du[w] == du[x] + 1) succ.push_back(w);
        dag.next[x] = std::move(succ);
    }
    // Depth-first enumeration in lexicographic order.
    std::vector<int> stack = {u};
    std::vector<size_t> choice = {0};
    while (!stack.empty()) {
        if (max_count && dag.geodesics.size() >= max_count) {
            dag.truncated = true;
            break;
        }
        int cur = stack.back();
        if (cur == v) {
            dag.geodesics.push_back(stack);
            stack.pop_back();
            choice.pop_back();
            continue;
        }
        const auto& succ = dag.next[cur];
        if (choice.back() < succ.size()) {
            int nxt = succ[choice.back()++];
            stack.push_back(nxt);
            choice.push_back(0);
        } else {
            stack.pop_back();
            choice.pop_back();
        }
    }
    return dag;
}

int InducedSubgraph::local_id(int parent_vertex) const {
    auto it = std::find(vertices.begin(), vertices.end(), parent_vertex);
    return it == vertices.end() ? kUnreachable : static_cast<int>(it - vertices.begin());
}

InducedSubgraph induced_subgraph(const SimpGraph& g, const std::vector<int>& vertices) {
    InducedSubgraph out;
    out.vertices = vertices;
    out.graph = SimpGraph(static_cast<int>(vertices.size()));
    std::map<int, int> local;
    for (size_t k = 0; k < vertices.size(); ++k) {
        local[vertices[k]] = static_cast<int>(k);
        out.graph.set_label(static_cast<int>(k), g.label(vertices[k]));
    }
    for (size_t k = 0; k < vertices.size(); ++k)
        for (int w : g.neighbors(vertices[k])) {
            auto it = local.find(w);
            if (it != local.end() && it->second > static_cast<int>(k))
                out.graph.add_edge(static_cast<int>(k), it->second);
        }
    return out;
}

SimpGraph simplicial_cayley_ball(const Group& g, const std::vector<Word>& gen_set,
                                 const BallIndex& ball) {
    SimpGraph out(static_cast<int>(ball.elements.size()));
    for (int v = 0; v < out.num_vertices(); ++v) out.set_label(v, g.to_string(ball.elements[v]));
    for (int v = 0; v < out.num_vertices(); ++v) {
        for (const auto& s : gen_set) {
            Word w = g.multiply(ball.elements[v], s);
            auto it = ball.index.find(w);
            if (it != ball.index.end() && it->second != v) out.add_edge(v, it->second);
        }
    }
    return out;
}

LabeledCayleyGraph labeled_cayley_graph(const Group& g, const std::vector<Word>& gen_set,
                                        const BallIndex& ball) {
    LabeledCayleyGraph lcg;
    lcg.ball = &ball;
    int n = static_cast<int>(ball.elements.size());
    lcg.underlying = SimpGraph(n);
    lcg.target.assign(n, std::vector<int>(gen_set.size(), kUnreachable));
    for (int v = 0; v < n; ++v) {
        lcg.underlying.set_label(v, g.to_string(ball.elements[v]));
        for (size_t s = 0; s < gen_set.size(); ++s) {
            Word w = g.multiply(ball.elements[v], gen_set[s]);
            auto it = ball.index.find(w);
            if (it == ball.index.end()) continue;
            lcg.target[v][s] = it->second;
            if (it->second != v) lcg.underlying.add_edge(v, it->second);
        }
    }
    return lcg;
}

} // namespace relhyp
