#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relhyp/groups.hpp"

namespace relhyp {

/// Simple undirected graph on vertices 0..n-1 with optional string labels.
/// Edges are stored as sorted adjacency lists; no loops, no multi-edges.
class SimpGraph {
public:
    explicit SimpGraph(int n = 0) : adj_(n), labels_(n) {}

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const;
    int add_vertex(std::string label = {});
    void add_edge(int u, int v); // idempotent; throws on loops / bad ids
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::string& label(int v) const { return labels_[v]; }
    void set_label(int v, std::string s);
    std::vector<std::pair<int, int>> edges() const; // u < v, lexicographic

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

constexpr int kUnreachable = -1;

/// BFS distances from `src`; kUnreachable where not connected.
std::vector<int> bfs_distances(const SimpGraph& g, int src);

/// Distance from every vertex to the nearest vertex of `srcs` (multi-source BFS).
std::vector<int> bfs_distances_multi(const SimpGraph& g, const std::vector<int>& srcs);

int graph_distance(const SimpGraph& g, int u, int v);

/// Vertex ids at distance <= r from v, ascending.
std::vector<int> ball_vertices(const SimpGraph& g, int v, int r);

/// The canonical geodesic from u to v: at each step move to the neighbor that
/// is closer to v and has the smallest id. Returns the vertex sequence
/// u=p0,...,pk=v; throws if unreachable.
std::vector<int> canonical_geodesic(const SimpGraph& g, int u, int v);

/// All geodesics from u to v as a DAG: `next[x]` lists the successors of x on
/// some geodesic toward v (ascending ids). Also enumerates complete geodesics
/// up to `max_count` (0 = unlimited).
struct GeodesicDag {
    std::map<int, std::vector<int>> next;
    std::vector<std::vector<int>> geodesics; // each is a vertex sequence u..v
    bool truncated = false;                  // hit max_count
};
GeodesicDag all_geodesics_dag(const SimpGraph& g, int u, int v, size_t max_count = 0);

/// Full (induced) subgraph on the given parent vertices. `vertices` keeps the
/// parent ids in the order given; local ids follow that order.
struct InducedSubgraph {
    SimpGraph graph;
    std::vector<int> vertices;
    int local_id(int parent_vertex) const; // kUnreachable if absent
};
InducedSubgraph induced_subgraph(const SimpGraph& g, const std::vector<int>& vertices);

/// Simplicial Cayley graph on an explored ball: x ~ y iff x^-1 y lies in S.
/// Vertex v of the graph is ball element v; labels are normal-form strings.
SimpGraph simplicial_cayley_ball(const Group& g, const std::vector<Word>& gen_set,
                                 const BallIndex& ball);

/// Labeled (directed-edge) Cayley graph on a ball: edge (x, s) -> xs for every
/// generator index s with xs in the ball. Used by the pair-complex module.
struct LabeledCayleyGraph {
    const BallIndex* ball = nullptr;
    // per vertex id, per generator index: target vertex id or kUnreachable
    std::vector<std::vector<int>> target;
    SimpGraph underlying; // forgetting orientation and labels
};
LabeledCayleyGraph labeled_cayley_graph(const Group& g, const std::vector<Word>& gen_set,
                                        const BallIndex& ball);

} // namespace relhyp
