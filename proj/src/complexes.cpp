#include "relhyp/complexes.hpp"

#include <algorithm>

namespace relhyp {

int SComplex::dim() const {
    for (int d = static_cast<int>(simplices.size()) - 1; d >= 0; --d)
        if (!simplices[d].empty()) return d;
    return -1;
}

bool SComplex::has_simplex(const Simplex& s) const { return simplex_id(s) != kUnreachable; }

int SComplex::simplex_id(const Simplex& s) const {
    int d = static_cast<int>(s.size()) - 1;
    if (d < 0 || d >= static_cast<int>(simplices.size())) return kUnreachable;
    auto it = std::lower_bound(simplices[d].begin(), simplices[d].end(), s);
    if (it == simplices[d].end() || *it != s) return kUnreachable;
    return static_cast<int>(it - simplices[d].begin());
}

SComplex build_rips(const SimpGraph& g, int kappa, int d_max,
                    const std::vector<int>& vertex_heights) {
    if (kappa < 1) throw GroupError("kappa must be >= 1");
    if (d_max < 1) throw GroupError("d_max must be >= 1");
    int n = g.num_vertices();
    // kappa-neighborhoods: adjacency in the Rips 1-skeleton
    std::vector<std::vector<char>> close(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) {
        auto d = bfs_distances(g, v);
        for (int w = 0; w < n; ++w)
            if (w != v && d[w] != kUnreachable && d[w] <= kappa) close[v][w] = 1;
    }
    SComplex k;
    k.d_max = d_max;
    k.heights = vertex_heights;
    k.simplices.resize(d_max + 1);
    for (int v = 0; v < n; ++v) k.simplices[0].push_back({v});
    // grow cliques by appending larger vertex ids adjacent to all current ones
    std::vector<std::pair<Simplex, std::vector<int>>> frontier;
    for (int v = 0; v < n; ++v) {
        std::vector<int> ext;
        for (int w = v + 1; w < n; ++w)
            if (close[v][w]) ext.push_back(w);
        frontier.push_back({{v}, std::move(ext)});
    }
    for (int d = 1; d <= d_max; ++d) {
        std::vector<std::pair<Simplex, std::vector<int>>> next;
        for (auto& [s, ext] : frontier)
            for (size_t i = 0; i < ext.size(); ++i) {
                Simplex t = s;
                t.push_back(ext[i]);
                k.simplices[d].push_back(t);
                if (d == d_max) continue;
                std::vector<int> ext2;
                for (size_t j = i + 1; j < ext.size(); ++j)
                    if (close[ext[i]][ext[j]]) ext2.push_back(ext[j]);
                next.push_back({std::move(t), std::move(ext2)});
            }
        std::sort(k.simplices[d].begin(), k.simplices[d].end());
        frontier = std::move(next);
    }
    return k;
}

SComplex full_subcomplex(const SComplex& k, const std::set<int>& vertices) {
    SComplex out;
    out.d_max = k.d_max;
    out.heights = k.heights;
    out.simplices.resize(k.simplices.size());
    for (size_t d = 0; d < k.simplices.size(); ++d)
        for (const auto& s : k.simplices[d])
            if (std::all_of(s.begin(), s.end(),
                            [&](int v) { return vertices.count(v) > 0; }))
                out.simplices[d].push_back(s);
    return out;
}

void Chain::add(std::vector<int> verts, Rat c) {
    if (c == 0) return;
    if (static_cast<int>(verts.size()) != degree + 1)
        throw GroupError("simplex dimension does not match chain degree");
    // sort with sign; duplicates make a degenerate simplex
    int sign = 1;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            if (verts[i] == verts[j]) return;
            if (verts[i] > verts[j]) {
                std::swap(verts[i], verts[j]);
                sign = -sign;
            }
        }
    Rat& slot = coef[verts];
    slot += sign > 0 ? c : -c;
    if (slot == 0) coef.erase(verts);
}

Rat Chain::coefficient(const Simplex& sorted) const {
    auto it = coef.find(sorted);
    return it == coef.end() ? Rat(0) : it->second;
}

Chain& Chain::operator+=(const Chain& o) {
    if (degree != o.degree && !o.is_zero() && !is_zero())
        throw GroupError("chain degree mismatch");
    for (const auto& [s, c] : o.coef) {
        Rat& slot = coef[s];
        slot += c;
        if (slot == 0) coef.erase(s);
    }
    return *this;
}

Chain& Chain::operator-=(const Chain& o) {
    if (degree != o.degree && !o.is_zero() && !is_zero())
        throw GroupError("chain degree mismatch");
    for (const auto& [s, c] : o.coef) {
        Rat& slot = coef[s];
        slot -= c;
        if (slot == 0) coef.erase(s);
    }
    return *this;
}

Chain& Chain::operator*=(const Rat& r) {
    if (r == 0) {
        coef.clear();
        return *this;
    }
    for (auto& [s, c] : coef) c *= r;
    return *this;
}

Chain boundary(const Chain& c) {
    if (c.degree < 1) throw GroupError("boundary needs degree >= 1");
    Chain out(c.degree - 1);
    for (const auto& [s, lam] : c.coef)
        for (size_t j = 0; j < s.size(); ++j) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (size_t i = 0; i < s.size(); ++i)
                if (i != j) face.push_back(s[i]);
            out.add(std::move(face), j % 2 == 0 ? lam : -lam);
        }
    return out;
}

Rat l1_norm(const Chain& c) {
    Rat n = 0;
    for (const auto& [s, lam] : c.coef) n += rat_abs(lam);
    return n;
}

ChainStats chain_stats(const Chain& c, const std::vector<int>& heights) {
    ChainStats st;
    auto h = [&](int v) {
        return heights.empty() || v >= static_cast<int>(heights.size()) ? 0 : heights[v];
    };
    for (const auto& [s, lam] : c.coef) {
        st.norm += rat_abs(lam);
        st.support.insert(s);
        for (int v : s) {
            st.supp0.insert(v);
            st.minh = st.minh ? std::min(*st.minh, h(v)) : h(v);
            st.maxh = st.maxh ? std::max(*st.maxh, h(v)) : h(v);
        }
    }
    return st;
}

Chain restrict_chain(const Chain& c, const std::set<int>& A) {
    Chain out(c.degree);
    for (const auto& [s, lam] : c.coef)
        if (std::all_of(s.begin(), s.end(), [&](int v) { return A.count(v) > 0; }))
            out.coef[s] = lam;
    return out;
}

namespace {

// Exact rank of a sparse rational matrix given as columns (row -> value),
// by column reduction on the largest row index.
int sparse_rank(std::vector<std::map<int, Rat>> cols) {
    std::map<int, int> pivot_owner; // pivot row -> column index holding it
    int rank = 0;
    for (size_t j = 0; j < cols.size(); ++j) {
        auto& col = cols[j];
        while (!col.empty()) {
            int piv = col.rbegin()->first;
            auto it = pivot_owner.find(piv);
            if (it == pivot_owner.end()) {
                pivot_owner[piv] = static_cast<int>(j);
                ++rank;
                break;
            }
            const auto& other = cols[it->second];
            Rat factor = col.rbegin()->second / other.rbegin()->second;
            for (const auto& [r, v] : other) {
                Rat& slot = col[r];
                slot -= factor * v;
                if (slot == 0) col.erase(r);
            }
        }
    }
    return rank;
}

} // namespace

int boundary_rank(const SComplex& k, int deg) {
    if (deg < 1 || deg >= static_cast<int>(k.simplices.size())) return 0;
    std::vector<std::map<int, Rat>> cols;
    cols.reserve(k.simplices[deg].size());
    for (const auto& s : k.simplices[deg]) {
        std::map<int, Rat> col;
        for (size_t j = 0; j < s.size(); ++j) {
            Simplex face;
            for (size_t i = 0; i < s.size(); ++i)
                if (i != j) face.push_back(s[i]);
            int row = k.simplex_id(face);
            if (row == kUnreachable) throw GroupError("complex is not face-closed");
            col[row] = j % 2 == 0 ? Rat(1) : Rat(-1);
        }
        cols.push_back(std::move(col));
    }
    return sparse_rank(std::move(cols));
}

int homology_rank(const SComplex& k, int deg, bool reduced) {
    if (deg < 0) throw GroupError("negative degree");
    if (deg + 1 > k.d_max) throw GroupError("dimension cap exceeded: need d_max >= k+1");
    long long n_k = deg < static_cast<int>(k.simplices.size())
                        ? static_cast<long long>(k.simplices[deg].size())
                        : 0;
    long long r_k = boundary_rank(k, deg);
    long long r_k1 = boundary_rank(k, deg + 1);
    long long rank = n_k - r_k - r_k1;
    if (deg == 0 && reduced) rank -= 1;
    return static_cast<int>(rank);
}

std::map<int, int> min_height_dimension_profile(const SComplex& k) {
    std::map<int, int> out;
    for (size_t d = 0; d < k.simplices.size(); ++d)
        for (const auto& s : k.simplices[d]) {
            int mh = k.height_of(s[0]);
            for (int v : s) mh = std::min(mh, k.height_of(v));
            auto [it, fresh] = out.try_emplace(static_cast<int>(d), mh);
            if (!fresh) it->second = std::min(it->second, mh);
        }
    return out;
}

} // namespace relhyp
