#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "relhyp/graphs.hpp"

namespace relhyp {

/// Combinatorial horoball over a finite graph G, truncated at height H_max.
/// Vertex (g, n) has id n*|G| + g. Edges: a copy of G at height 0, vertical
/// edges (g,n)-(g,n+1), and a single edge (g,n)-(h,n) iff d_G(g,h) <= 2^n.
SimpGraph build_horoball(const SimpGraph& G, int H_max);

/// One glued horoball of a cusped graph.
struct Horoball {
    int peripheral = -1;
    int coset = -1;              // index into the peripheral's coset partition
    std::vector<int> members;    // base ball vertex ids in the coset, ascending
    SimpGraph coset_graph;       // Cayley graph of the coset w.r.t. S cap Gamma_i
                                 // (vertices follow `members` order)
};

/// Truncated cusped graph: base Cayley ball of radius R_base with one horoball
/// glued over every coset of every peripheral subgroup that meets the ball.
struct CuspedGraph {
    SimpGraph graph;
    BallIndex ball;
    int R_base = 0;
    int H_max = 0;
    std::vector<Horoball> horoballs;

    // per graph-vertex decoration; base vertices (height 0) have hb_of == -1
    std::vector<int> height;
    std::vector<int> hb_of;
    std::vector<int> member_of;  // index into horoballs[hb].members (height > 0)
    std::vector<char> frontier;  // vertices whose neighborhoods the truncation
                                 // may misrepresent

    Rat delta_estimate = 0;  // filled after a hyperbolicity scan
    Rat C = 0;               // chosen constant, must exceed delta_estimate

    /// Graph vertex of (horoball hb, member m, height n); n = 0 gives the base
    /// ball vertex itself.
    int vertex_id(int hb, int member, int n) const;
    /// Vertices of horoball hb with height >= n (the n-horoball vertex set);
    /// at n = 0 this includes the glued base-layer members.
    std::vector<int> horoball_vertices(int hb, int n) const;

private:
    friend CuspedGraph build_cusped_graph(const GroupPair&, int, int);
    std::map<std::tuple<int, int, int>, int> vid_;
};

/// Height truncation high enough that shortest paths between explored base
/// vertices never profit from higher levels (horizontal spans double per
/// level, and base distances are at most 2*R_base).
int default_hmax(int R_base);

CuspedGraph build_cusped_graph(const GroupPair& pair, int R_base, int H_max = -1);

/// Full subgraph of horoball hb at heights >= n.
InducedSubgraph n_horoball(const CuspedGraph& x, int hb, int n);

/// Multi-source BFS distance from every vertex to the truncation frontier
/// (a large sentinel where no frontier is reachable).
std::vector<int> distance_to_frontier(const CuspedGraph& x);

constexpr int kFarFromFrontier = 1 << 28;

/// A distance d(u,v) computed inside the truncation is exact -- and every
/// geodesic between u and v lies inside -- when d <= dF(u) + dF(v) + 1: any
/// route through misrepresented territory costs at least dF(u) + dF(v) + 2.
inline bool truncation_safe(int d_uv, int df_u, int df_v) {
    long long bound = static_cast<long long>(df_u) + df_v + 1;
    return d_uv <= bound;
}

struct ConvexityViolation {
    int u = -1, v = -1;
    std::vector<int> geodesic; // a witness geodesic leaving the C-horoball
};

struct ConvexityReport {
    int pairs_checked = 0;
    int pairs_skipped_unsafe = 0;
    std::vector<ConvexityViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// For every truncation-safe vertex pair in each C-horoball, checks that every
/// geodesic between them stays inside that C-horoball.
ConvexityReport check_horoball_convexity(const CuspedGraph& x, const Rat& C,
                                         size_t max_geodesics_per_pair = 100000);

/// Exact (min height, max height) over a set of cusped-graph vertices.
std::pair<int, int> height_profile(const CuspedGraph& x, const std::vector<int>& vertices);

} // namespace relhyp
