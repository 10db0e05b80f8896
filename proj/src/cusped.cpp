#include "relhyp/cusped.hpp"

#include <algorithm>
#include <set>

namespace relhyp {

namespace {

// Largest height at which a horizontal edge condition d <= 2^n can still be
// evaluated without overflow concerns; heights are tiny in practice.
long long pow2(int n) { return n >= 60 ? (1LL << 60) : (1LL << n); }

} // namespace

SimpGraph build_horoball(const SimpGraph& G, int H_max) {
    int m = G.num_vertices();
    SimpGraph out(m * (H_max + 1));
    for (int n = 0; n <= H_max; ++n)
        for (int g = 0; g < m; ++g)
            out.set_label(n * m + g, G.label(g) + " @" + std::to_string(n));
    // height-0 copy of G
    for (auto [u, v] : G.edges()) out.add_edge(u, v);
    // vertical edges
    for (int n = 0; n < H_max; ++n)
        for (int g = 0; g < m; ++g) out.add_edge(n * m + g, (n + 1) * m + g);
    // horizontal edges: (g,n) ~ (h,n) iff d_G(g,h) <= 2^n
    for (int g = 0; g < m; ++g) {
        auto d = bfs_distances(G, g);
        for (int h = g + 1; h < m; ++h) {
            if (d[h] == kUnreachable) continue;
            for (int n = 1; n <= H_max; ++n)
                if (d[h] <= pow2(n)) out.add_edge(n * m + g, n * m + h);
        }
    }
    return out;
}

int default_hmax(int R_base) {
    int h = 0;
    while (pow2(h) < 2LL * R_base) ++h; // h = ceil(log2(2 R_base))
    return h + 2;
}

int CuspedGraph::vertex_id(int hb, int member, int n) const {
    if (hb < 0 || hb >= static_cast<int>(horoballs.size()))
        throw GroupError("unknown horoball");
    if (member < 0 || member >= static_cast<int>(horoballs[hb].members.size()))
        throw GroupError("unknown horoball member");
    if (n < 0 || n > H_max) throw GroupError("height out of range");
    if (n == 0) return horoballs[hb].members[member];
    return vid_.at({hb, member, n});
}

std::vector<int> CuspedGraph::horoball_vertices(int hb, int n) const {
    if (hb < 0 || hb >= static_cast<int>(horoballs.size()))
        throw GroupError("unknown horoball");
    if (n < 0 || n > H_max) throw GroupError("height out of range");
    std::vector<int> out;
    int m = static_cast<int>(horoballs[hb].members.size());
    if (n == 0)
        for (int k = 0; k < m; ++k) out.push_back(horoballs[hb].members[k]);
    for (int h = std::max(1, n); h <= H_max; ++h)
        for (int k = 0; k < m; ++k) out.push_back(vid_.at({hb, k, h}));
    return out;
}

CuspedGraph build_cusped_graph(const GroupPair& pair, int R_base, int H_max) {
    if (R_base < 1) throw GroupError("R_base must be >= 1");
    if (H_max == -1) H_max = default_hmax(R_base);
    if (H_max < 1) throw GroupError("H_max must be >= 1");
    CompatibilityReport comp = check_compatible(pair);
    if (!comp.compatible)
        throw GroupError("generating set is not compatible with peripheral " +
                         std::to_string(comp.failing_index));

    CuspedGraph x;
    x.R_base = R_base;
    x.H_max = H_max;
    x.ball = explore_ball(pair.gamma, pair.gen_set, R_base);
    x.graph = simplicial_cayley_ball(pair.gamma, pair.gen_set, x.ball);
    int n_base = x.graph.num_vertices();
    x.height.assign(n_base, 0);
    x.hb_of.assign(n_base, -1);
    x.member_of.assign(n_base, -1);

    for (int i = 0; i < static_cast<int>(pair.peripherals.size()); ++i) {
        // generator indices of S cap Gamma_i
        std::vector<int> si;
        for (size_t s = 0; s < pair.gen_set.size(); ++s)
            if (pair.peripherals[i].contains(pair.gen_set[s])) si.push_back(static_cast<int>(s));
        CosetPartition part = coset_partition(pair, x.ball, i);
        for (int c = 0; c < static_cast<int>(part.reps.size()); ++c) {
            Horoball hb;
            hb.peripheral = i;
            hb.coset = c;
            std::map<int, int> local; // ball vertex -> member index
            for (int v = 0; v < n_base; ++v)
                if (part.coset_of[v] == c) {
                    local[v] = static_cast<int>(hb.members.size());
                    hb.members.push_back(v);
                }
            hb.coset_graph = SimpGraph(static_cast<int>(hb.members.size()));
            for (int m = 0; m < static_cast<int>(hb.members.size()); ++m) {
                hb.coset_graph.set_label(m, x.graph.label(hb.members[m]));
                for (int s : si) {
                    Word w = pair.gamma.multiply(x.ball.elements[hb.members[m]], pair.gen_set[s]);
                    auto it = x.ball.index.find(w);
                    if (it == x.ball.index.end()) continue;
                    auto jt = local.find(it->second);
                    if (jt != local.end() && jt->second != m)
                        hb.coset_graph.add_edge(m, jt->second);
                }
            }
            int hb_id = static_cast<int>(x.horoballs.size());
            // higher layers
            for (int n = 1; n <= H_max; ++n)
                for (int m = 0; m < static_cast<int>(hb.members.size()); ++m) {
                    int v = x.graph.add_vertex(hb.coset_graph.label(m) + " @" +
                                               std::to_string(n) + " hb" +
                                               std::to_string(hb_id));
                    x.vid_[{hb_id, m, n}] = v;
                    x.height.push_back(n);
                    x.hb_of.push_back(hb_id);
                    x.member_of.push_back(m);
                }
            // vertical edges
            for (int m = 0; m < static_cast<int>(hb.members.size()); ++m) {
                x.graph.add_edge(hb.members[m], x.vid_[{hb_id, m, 1}]);
                for (int n = 1; n < H_max; ++n)
                    x.graph.add_edge(x.vid_[{hb_id, m, n}], x.vid_[{hb_id, m, n + 1}]);
            }
            // horizontal edges from coset-graph distances
            for (int m = 0; m < static_cast<int>(hb.members.size()); ++m) {
                auto d = bfs_distances(hb.coset_graph, m);
                for (int m2 = m + 1; m2 < static_cast<int>(hb.members.size()); ++m2) {
                    if (d[m2] == kUnreachable) continue;
                    for (int n = 1; n <= H_max; ++n)
                        if (d[m2] <= pow2(n))
                            x.graph.add_edge(x.vid_[{hb_id, m, n}], x.vid_[{hb_id, m2, n}]);
                }
            }
            x.horoballs.push_back(std::move(hb));
        }
    }

    // Truncation frontier: outermost base sphere, the top layer of every
    // horoball, and any horoball vertex (g, n) whose 2^n horizontal reach
    // touches the coset's outermost members (its horizontal edge set may then
    // be incomplete).
    x.frontier.assign(x.graph.num_vertices(), 0);
    for (int v = 0; v < n_base; ++v)
        if (x.ball.radius[v] >= R_base) x.frontier[v] = 1;
    for (int hb_id = 0; hb_id < static_cast<int>(x.horoballs.size()); ++hb_id) {
        const Horoball& hb = x.horoballs[hb_id];
        std::vector<int> coset_frontier;
        for (int m = 0; m < static_cast<int>(hb.members.size()); ++m)
            if (x.ball.radius[hb.members[m]] >= R_base) coset_frontier.push_back(m);
        std::vector<int> dfc =
            coset_frontier.empty()
                ? std::vector<int>(hb.members.size(), kUnreachable)
                : bfs_distances_multi(hb.coset_graph, coset_frontier);
        for (int m = 0; m < static_cast<int>(hb.members.size()); ++m)
            for (int n = 1; n <= H_max; ++n) {
                int v = x.vid_.at({hb_id, m, n});
                if (n == H_max) x.frontier[v] = 1;
                else if (dfc[m] != kUnreachable && dfc[m] <= pow2(n)) x.frontier[v] = 1;
            }
    }
    return x;
}

InducedSubgraph n_horoball(const CuspedGraph& x, int hb, int n) {
    return induced_subgraph(x.graph, x.horoball_vertices(hb, n));
}

std::vector<int> distance_to_frontier(const CuspedGraph& x) {
    std::vector<int> srcs;
    for (int v = 0; v < x.graph.num_vertices(); ++v)
        if (x.frontier[v]) srcs.push_back(v);
    std::vector<int> d = srcs.empty()
                             ? std::vector<int>(x.graph.num_vertices(), kUnreachable)
                             : bfs_distances_multi(x.graph, srcs);
    for (int& v : d)
        if (v == kUnreachable) v = kFarFromFrontier;
    return d;
}

ConvexityReport check_horoball_convexity(const CuspedGraph& x, const Rat& C,
                                         size_t max_geodesics_per_pair) {
    ConvexityReport rep;
    std::vector<int> df = distance_to_frontier(x);
    for (int hb = 0; hb < static_cast<int>(x.horoballs.size()); ++hb) {
        std::vector<int> verts;
        for (int v = 0; v < x.graph.num_vertices(); ++v)
            if (x.hb_of[v] == hb && Rat(x.height[v]) >= C) verts.push_back(v);
        if (C <= 0) // height-0 members belong to the horoball as well
            for (int m : x.horoballs[hb].members) verts.push_back(m);
        std::set<int> vset(verts.begin(), verts.end());
        for (size_t a = 0; a < verts.size(); ++a) {
            auto dist = bfs_distances(x.graph, verts[a]);
            for (size_t b = a + 1; b < verts.size(); ++b) {
                int u = verts[a], v = verts[b];
                if (dist[v] == kUnreachable || !truncation_safe(dist[v], df[u], df[v])) {
                    ++rep.pairs_skipped_unsafe;
                    continue;
                }
                ++rep.pairs_checked;
                GeodesicDag dag = all_geodesics_dag(x.graph, u, v, max_geodesics_per_pair);
                for (const auto& geo : dag.geodesics) {
                    bool inside = std::all_of(geo.begin(), geo.end(),
                                              [&](int w) { return vset.count(w) > 0; });
                    if (!inside) {
                        rep.violations.push_back({u, v, geo});
                        break;
                    }
                }
            }
        }
    }
    return rep;
}

std::pair<int, int> height_profile(const CuspedGraph& x, const std::vector<int>& vertices) {
    if (vertices.empty()) throw GroupError("height profile of an empty set");
    int lo = x.H_max + 1, hi = -1;
    for (int v : vertices) {
        if (v < 0 || v >= x.graph.num_vertices()) throw GroupError("vertex out of range");
        lo = std::min(lo, x.height[v]);
        hi = std::max(hi, x.height[v]);
    }
    return {lo, hi};
}

} // namespace relhyp
