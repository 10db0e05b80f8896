#include "relhyp/hyperbolicity.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace relhyp {

namespace {

// Dense pairwise distances over V; throws on a disconnected pair.
std::vector<std::vector<int>> distance_matrix(const SimpGraph& g, const std::vector<int>& V) {
    std::vector<std::vector<int>> d(V.size(), std::vector<int>(V.size(), 0));
    for (size_t a = 0; a < V.size(); ++a) {
        auto da = bfs_distances(g, V[a]);
        for (size_t b = 0; b < V.size(); ++b) {
            if (da[V[b]] == kUnreachable)
                throw GroupError("vertex set is not pairwise connected");
            d[a][b] = da[V[b]];
        }
    }
    return d;
}

DeltaReport scan(const std::vector<std::vector<int>>& d, const std::vector<int>& V) {
    DeltaReport rep;
    rep.scanned = static_cast<int>(V.size());
    int n = rep.scanned;
    long long best2 = 0; // doubled delta
    // Doubled Gromov products keep everything integral.
    for (int w = 0; w < n; ++w) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                long long pxy = static_cast<long long>(d[x][w]) + d[y][w] - d[x][y];
                for (int z = 0; z < n; ++z) {
                    long long pyz = static_cast<long long>(d[y][w]) + d[z][w] - d[y][z];
                    long long pxz = static_cast<long long>(d[x][w]) + d[z][w] - d[x][z];
                    long long v = std::min(pxy, pyz) - pxz;
                    if (v > best2) {
                        best2 = v;
                        rep.witness = {V[w], V[x], V[y], V[z]};
                    }
                }
            }
    }
    rep.delta_four_point = Rat(best2, 2);
    return rep;
}

std::vector<int> all_vertices(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

DeltaReport four_point_delta(const SimpGraph& g, std::vector<int> V) {
    if (V.empty()) V = all_vertices(g.num_vertices());
    return scan(distance_matrix(g, V), V);
}

DeltaReport four_point_delta(const CuspedGraph& x, std::vector<int> V) {
    if (V.empty()) V = all_vertices(x.graph.num_vertices());
    auto d = distance_matrix(x.graph, V);
    auto df = distance_to_frontier(x);
    for (size_t a = 0; a < V.size(); ++a)
        for (size_t b = a + 1; b < V.size(); ++b)
            if (!truncation_safe(d[a][b], df[V[a]], df[V[b]]))
                throw GroupError("vertex set is not truncation-safe");
    DeltaReport rep = scan(d, V);
    rep.truncation_safe = true;
    return rep;
}

int thin_triangle_probe(const SimpGraph& g,
                        const std::vector<std::array<int, 3>>& triples) {
    int worst = 0;
    for (const auto& t : triples) {
        std::array<std::vector<int>, 3> sides = {canonical_geodesic(g, t[0], t[1]),
                                                 canonical_geodesic(g, t[1], t[2]),
                                                 canonical_geodesic(g, t[2], t[0])};
        for (int s = 0; s < 3; ++s) {
            std::set<int> others(sides[(s + 1) % 3].begin(), sides[(s + 1) % 3].end());
            others.insert(sides[(s + 2) % 3].begin(), sides[(s + 2) % 3].end());
            auto d = bfs_distances_multi(g, {others.begin(), others.end()});
            for (int v : sides[s])
                if (d[v] != kUnreachable) worst = std::max(worst, d[v]);
        }
    }
    return worst;
}

} // namespace relhyp
