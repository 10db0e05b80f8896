#include "relhyp/resolutions.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace relhyp {

// ---------------------------------------------------------------------------
// StChain basics
// ---------------------------------------------------------------------------

void StChain::add(const StTuple& t, const Rat& c) {
    if (static_cast<int>(t.size()) != degree + 1)
        throw GroupError("StChain::add: tuple length does not match degree");
    if (c == 0) return;
    auto it = coef.find(t);
    if (it == coef.end()) {
        coef.emplace(t, c);
    } else {
        it->second += c;
        if (it->second == 0) coef.erase(it);
    }
}

Rat StChain::coefficient(const StTuple& t) const {
    auto it = coef.find(t);
    return it == coef.end() ? Rat(0) : it->second;
}

StChain& StChain::operator+=(const StChain& o) {
    if (degree != o.degree && !o.is_zero() && !is_zero())
        throw GroupError("StChain: degree mismatch");
    for (const auto& [t, c] : o.coef) add(t, c);
    return *this;
}

StChain& StChain::operator-=(const StChain& o) {
    if (degree != o.degree && !o.is_zero() && !is_zero())
        throw GroupError("StChain: degree mismatch");
    for (const auto& [t, c] : o.coef) add(t, -c);
    return *this;
}

StChain& StChain::operator*=(const Rat& r) {
    if (r == 0) {
        coef.clear();
        return *this;
    }
    for (auto& [t, c] : coef) c *= r;
    return *this;
}

Rat st_norm(const StChain& c) {
    Rat n = 0;
    for (const auto& [t, v] : c.coef) n += rat_abs(v);
    return n;
}

bool st_prime_member(const GroupPair& pair, const StTuple& t) {
    if (t.empty()) return false;
    const int i = t[0].i;
    for (const auto& v : t)
        if (v.i != i) return false;
    if (i < 0 || i >= static_cast<int>(pair.peripherals.size()))
        throw GroupError("st_prime_member: copy index out of range");
    const auto& sub = pair.peripherals[i];
    const auto& g = pair.gamma;
    const Word inv0 = g.inverse(t[0].g);
    for (size_t j = 1; j < t.size(); ++j)
        if (!sub.contains(g.multiply(inv0, t[j].g))) return false;
    return true;
}

StChain st_translate(const GroupPair& pair, const Word& g, const StChain& c) {
    StChain out(c.degree);
    const Word nf = pair.gamma.normal_form(g);
    for (const auto& [t, v] : c.coef) {
        StTuple tt = t;
        for (auto& e : tt) e.g = pair.gamma.multiply(nf, e.g);
        out.add(tt, v);
    }
    return out;
}

void require_window(const StChain& c, const BallIndex& window) {
    for (const auto& [t, v] : c.coef)
        for (const auto& e : t)
            if (!window.contains(e.g)) throw GroupError("window exceeded");
}

StChain st_boundary(const StChain& c) {
    if (c.degree == 0) return StChain(0); // the chain boundary below degree 1 is zero
    StChain out(c.degree - 1);
    for (const auto& [t, v] : c.coef) {
        Rat sign = 1;
        for (size_t j = 0; j < t.size(); ++j) {
            StTuple face;
            face.reserve(t.size() - 1);
            for (size_t m = 0; m < t.size(); ++m)
                if (m != j) face.push_back(t[m]);
            out.add(face, sign * v);
            sign = -sign;
        }
    }
    return out;
}

StChain st_project(const GroupPair& pair, const StChain& c) {
    StChain out(c.degree);
    for (const auto& [t, v] : c.coef)
        if (!st_prime_member(pair, t)) out.add(t, v);
    return out;
}

StChain st_lift(const StChain& b) { return b; }

Rat st_augmentation(const StChain& c) {
    Rat s = 0;
    for (const auto& [t, v] : c.coef) s += v;
    return s;
}

// ---------------------------------------------------------------------------
// Cosets and the relative augmentation
// ---------------------------------------------------------------------------

bool same_coset(const GroupPair& pair, const IGV& a, const IGV& b) {
    if (a.i != b.i) return false;
    if (a.i < 0 || a.i >= static_cast<int>(pair.peripherals.size()))
        throw GroupError("same_coset: copy index out of range");
    const auto& g = pair.gamma;
    return pair.peripherals[a.i].contains(g.multiply(g.inverse(a.g), b.g));
}

Rat DeltaElement::total() const {
    Rat s = 0;
    for (const auto& [i, rep, c] : terms) s += c;
    return s;
}

static void delta_add(DeltaElement& d, const GroupPair& pair, const IGV& v, const Rat& c) {
    if (c == 0) return;
    for (auto& [i, rep, coef] : d.terms) {
        if (i != v.i) continue;
        if (same_coset(pair, IGV{rep, i}, v)) {
            coef += c;
            if (pair.gamma.shortlex_less(v.g, rep)) rep = v.g;
            return;
        }
    }
    d.terms.emplace_back(v.i, v.g, c);
}

DeltaElement rel_augmentation(const GroupPair& pair, const StChain& b) {
    if (b.degree != 1) throw GroupError("rel_augmentation: degree-1 chain expected");
    DeltaElement d;
    for (const auto& [t, c] : b.coef) {
        delta_add(d, pair, t[1], c);
        delta_add(d, pair, t[0], -c);
    }
    std::erase_if(d.terms, [](const auto& term) { return std::get<2>(term) == 0; });
    return d;
}

// ---------------------------------------------------------------------------
// Cones
// ---------------------------------------------------------------------------

StChain phi_map(const StChain& c) {
    if (c.degree != 0) throw GroupError("phi_map: degree-0 chain expected");
    std::vector<std::pair<IGV, Rat>> pos, neg;
    Rat sum_pos = 0;
    for (const auto& [t, v] : c.coef) {
        if (v > 0) {
            pos.emplace_back(t[0], v);
            sum_pos += v;
        } else {
            neg.emplace_back(t[0], -v);
        }
    }
    if (pos.empty()) throw GroupError("phi_map: zero positive part");
    StChain out(1);
    for (const auto& [x, am] : neg)
        for (const auto& [y, ap] : pos) out.add({x, y}, am * ap / sum_pos);
    return out;
}

StChain phi_map_signed(const StChain& c) {
    if (c.is_zero()) throw GroupError("phi_map: zero chain");
    for (const auto& [t, v] : c.coef)
        if (v > 0) return phi_map(c);
    StChain neg = c;
    neg *= Rat(-1);
    StChain out = phi_map(neg);
    out *= Rat(-1);
    return out;
}

StChain absolute_cone(const IGV& y, const StChain& c) {
    StChain out(c.degree + 1);
    for (const auto& [t, v] : c.coef) {
        StTuple tt;
        tt.reserve(t.size() + 1);
        tt.push_back(y);
        tt.insert(tt.end(), t.begin(), t.end());
        out.add(tt, v);
    }
    return out;
}

StChain relative_cone(const GroupPair& pair, const IGV& y, const StChain& b) {
    if (b.degree != 1) throw GroupError("relative_cone: degree-1 class expected");
    StChain a = st_lift(b);
    StChain d = st_boundary(a);
    // split the boundary by coset class
    std::vector<std::pair<IGV, StChain>> parts;
    for (const auto& [t, v] : d.coef) {
        bool found = false;
        for (auto& [rep, part] : parts) {
            if (same_coset(pair, rep, t[0])) {
                part.add(t, v);
                found = true;
                break;
            }
        }
        if (!found) {
            parts.emplace_back(t[0], StChain(0));
            parts.back().second.add(t, v);
        }
    }
    StChain corrected = a;
    for (const auto& [rep, part] : parts) corrected -= phi_map_signed(part);
    return st_project(pair, absolute_cone(y, corrected));
}

// ---------------------------------------------------------------------------
// Bicombing and the triangle defect
// ---------------------------------------------------------------------------

Chain naive_bicombing(const CuspedGraph& x, int a, int b) {
    Chain q(1);
    if (a == b) return q;
    const auto dist = bfs_distances(x.graph, a);
    if (dist[b] == kUnreachable) throw GroupError("naive_bicombing: unreachable pair");
    const auto df = distance_to_frontier(x);
    if (!truncation_safe(dist[b], df[a], df[b]))
        throw GroupError("naive_bicombing: pair is not truncation-safe");
    const int u = std::min(a, b), v = std::max(a, b);
    const auto path = canonical_geodesic(x.graph, u, v);
    const Rat sign = (a < b) ? 1 : -1;
    for (size_t j = 0; j + 1 < path.size(); ++j) q.add({path[j], path[j + 1]}, sign);
    return q;
}

// BFS path between two vertices staying inside `allowed`; empty if none.
static std::vector<int> bfs_path_within(const SimpGraph& g, const std::set<int>& allowed,
                                        int from, int to) {
    if (from == to) return {from};
    std::map<int, int> prev;
    std::queue<int> q;
    prev[from] = from;
    q.push(from);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (!allowed.count(w) || prev.count(w)) continue;
            prev[w] = v;
            if (w == to) {
                std::vector<int> path{to};
                while (path.back() != from) path.push_back(prev[path.back()]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            q.push(w);
        }
    }
    return {};
}

TriangleDefect triangle_defect(const CuspedGraph& x, int a, int b, int c, int C) {
    TriangleDefect out;
    Chain w = naive_bicombing(x, a, b);
    w += naive_bicombing(x, b, c);
    w += naive_bicombing(x, c, a);

    std::set<int> high;
    for (int v = 0; v < x.graph.num_vertices(); ++v)
        if (x.height[v] >= C) high.insert(v);
    Chain whigh0 = restrict_chain(w, high);
    Chain zlow0 = w - whigh0;
    Chain e = boundary(whigh0);

    // group the mismatch by horoball and cancel it with horizontal paths at
    // level C
    std::map<int, std::vector<std::pair<int, Rat>>> by_hb;
    for (const auto& [s, v] : e.coef) {
        const int vert = s[0];
        if (x.height[vert] != C || x.hb_of[vert] < 0) {
            out.split_ok = false;
            out.note = "mismatch outside level-C horoball layer";
            return out;
        }
        by_hb[x.hb_of[vert]].emplace_back(vert, v);
    }
    Chain g(1);
    for (const auto& [hb, terms] : by_hb) {
        Rat total = 0;
        for (const auto& [vert, coefv] : terms) total += coefv;
        if (total != 0) {
            out.split_ok = false;
            out.note = "per-horoball mismatch does not balance";
            return out;
        }
        std::set<int> level;
        const auto& members = x.horoballs[hb].members;
        for (size_t m = 0; m < members.size(); ++m)
            level.insert(x.vertex_id(hb, static_cast<int>(m), C));
        const int base = terms.front().first;
        for (const auto& [vert, coefv] : terms) {
            if (vert == base) continue;
            const auto path = bfs_path_within(x.graph, level, base, vert);
            if (path.empty()) {
                out.split_ok = false;
                out.note = "level-C layer is disconnected";
                return out;
            }
            for (size_t j = 0; j + 1 < path.size(); ++j)
                g.add({path[j], path[j + 1]}, coefv);
        }
    }
    out.z_low = zlow0 + g;
    out.w_high = whigh0 - g;
    if (!boundary(out.z_low).is_zero()) {
        out.split_ok = false;
        out.note = "completion is not a cycle";
        return out;
    }
    auto stats = chain_stats(out.z_low, x.height);
    out.z_norm = stats.norm;
    out.z_maxh = stats.maxh.value_or(0);
    return out;
}

// ---------------------------------------------------------------------------
// The symmetrized chain map
// ---------------------------------------------------------------------------

StChain symmetrized_vertex_image(const CuspedGraph& x, const GroupPair& pair, int v) {
    const int copies = static_cast<int>(pair.peripherals.size());
    if (copies == 0) throw GroupError("symmetrized_vertex_image: no peripherals");
    StChain out(0);
    if (x.height[v] >= 1) {
        const auto& hb = x.horoballs[x.hb_of[v]];
        const Word g = x.ball.elements[hb.members[x.member_of[v]]];
        out.add({IGV{g, hb.peripheral}}, 1);
    } else {
        const Word g = x.ball.elements[v];
        for (int i = 0; i < copies; ++i) out.add({IGV{g, i}}, Rat(1, copies));
    }
    return out;
}

static int permutation_sign(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

StChain symmetrized_chain_map(const CuspedGraph& x, const GroupPair& pair,
                              const Simplex& sigma) {
    const int k = static_cast<int>(sigma.size()) - 1;
    if (k < 0) throw GroupError("symmetrized_chain_map: empty simplex");
    std::vector<StChain> images;
    images.reserve(sigma.size());
    for (int v : sigma) images.push_back(symmetrized_vertex_image(x, pair, v));

    Rat factorial = 1;
    for (int j = 2; j <= k + 1; ++j) factorial *= j;

    StChain out(k);
    std::vector<int> perm(k + 1);
    for (int j = 0; j <= k; ++j) perm[j] = j;
    do {
        const Rat sign = permutation_sign(perm);
        // expand the product of the (degree-0) vertex images in this order
        std::vector<std::pair<StTuple, Rat>> partial{{StTuple{}, sign / factorial}};
        for (int j = 0; j <= k; ++j) {
            std::vector<std::pair<StTuple, Rat>> next;
            for (const auto& [t, c] : partial) {
                for (const auto& [vt, vc] : images[perm[j]].coef) {
                    StTuple tt = t;
                    tt.push_back(vt[0]);
                    next.emplace_back(std::move(tt), c * vc);
                }
            }
            partial = std::move(next);
        }
        for (const auto& [t, c] : partial) out.add(t, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

StChain symmetrized_chain_map(const CuspedGraph& x, const GroupPair& pair, const Chain& c) {
    StChain out(c.degree);
    for (const auto& [s, v] : c.coef) out += v * symmetrized_chain_map(x, pair, s);
    return out;
}

// ---------------------------------------------------------------------------
// Finite pairs: cochains, bar isomorphism, cohomology
// ---------------------------------------------------------------------------

static void require_finite(const GroupPair& pair, const char* who) {
    if (pair.gamma.order() == 0)
        throw GroupError(std::string(who) + ": finite group required");
}

static Word elem_word(int id) { return id == 0 ? Word{} : Word{id}; }

static int elem_id(const Word& nf) {
    if (nf.empty()) return 0;
    if (nf.size() != 1) throw GroupError("elem_id: not a finite normal form");
    return nf[0];
}

std::vector<StTuple> st_cochain_basis(const GroupPair& pair, int k) {
    require_finite(pair, "st_cochain_basis");
    const int n = pair.gamma.order();
    const int copies = static_cast<int>(pair.peripherals.size());
    std::vector<StTuple> basis;
    // odometer over (i0; (g1,i1), ..., (gk,ik)) with the first element fixed
    // at the identity
    std::vector<int> state(1 + 2 * k, 0);
    while (true) {
        StTuple t;
        t.push_back(IGV{Word{}, state[0]});
        for (int j = 0; j < k; ++j)
            t.push_back(IGV{elem_word(state[1 + 2 * j]), state[2 + 2 * j]});
        if (!st_prime_member(pair, t)) basis.push_back(std::move(t));
        // increment
        int pos = static_cast<int>(state.size()) - 1;
        while (pos >= 0) {
            const int cap = (pos == 0 || pos % 2 == 0) ? copies : n;
            if (++state[pos] < cap) break;
            state[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return basis;
}

std::vector<BarKey> bar_cochain_basis(const GroupPair& pair, int k) {
    require_finite(pair, "bar_cochain_basis");
    const int n = pair.gamma.order();
    const int copies = static_cast<int>(pair.peripherals.size());
    std::vector<BarKey> basis;
    std::vector<int> state(k + 1 + k, 0); // k+1 indices then k element ids
    while (true) {
        BarKey key;
        key.idx.assign(state.begin(), state.begin() + k + 1);
        key.gs.assign(state.begin() + k + 1, state.end());
        bool peripheral = true;
        for (int j = 1; j <= k && peripheral; ++j)
            if (key.idx[j] != key.idx[0]) peripheral = false;
        if (peripheral)
            for (int j = 0; j < k && peripheral; ++j)
                if (!pair.peripherals[key.idx[0]].contains(elem_word(key.gs[j])))
                    peripheral = false;
        if (!peripheral) basis.push_back(std::move(key));
        int pos = static_cast<int>(state.size()) - 1;
        while (pos >= 0) {
            const int cap = (pos <= k) ? copies : n;
            if (++state[pos] < cap) break;
            state[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return basis;
}

static StTuple st_orbit_rep(const GroupPair& pair, const StTuple& t) {
    const auto& g = pair.gamma;
    const Word inv0 = g.inverse(t[0].g);
    StTuple rep = t;
    for (auto& e : rep) e.g = g.multiply(inv0, e.g);
    return rep;
}

Rat st_cochain_eval(const GroupPair& pair, const StCochain& f, const StTuple& t) {
    if (t.empty()) return 0;
    const StTuple rep = st_orbit_rep(pair, t);
    if (st_prime_member(pair, rep)) return 0;
    auto it = f.find(rep);
    return it == f.end() ? Rat(0) : it->second;
}

Rat bar_cochain_eval(const GroupPair& pair, const BarCochain& h, const BarKey& key) {
    bool peripheral = true;
    for (size_t j = 1; j < key.idx.size() && peripheral; ++j)
        if (key.idx[j] != key.idx[0]) peripheral = false;
    if (peripheral)
        for (size_t j = 0; j < key.gs.size() && peripheral; ++j)
            if (!pair.peripherals[key.idx[0]].contains(elem_word(key.gs[j])))
                peripheral = false;
    if (peripheral) return 0;
    auto it = h.find(key);
    return it == h.end() ? Rat(0) : it->second;
}

StCochain st_coboundary(const GroupPair& pair, int k, const StCochain& f) {
    require_finite(pair, "st_coboundary");
    StCochain out;
    for (const auto& t : st_cochain_basis(pair, k + 1)) {
        Rat val = 0;
        Rat sign = 1;
        for (size_t j = 0; j < t.size(); ++j) {
            StTuple face;
            for (size_t m = 0; m < t.size(); ++m)
                if (m != j) face.push_back(t[m]);
            val += sign * st_cochain_eval(pair, f, face);
            sign = -sign;
        }
        if (val != 0) out.emplace(t, val);
    }
    return out;
}

BarCochain bar_coboundary(const GroupPair& pair, int k, const BarCochain& h) {
    require_finite(pair, "bar_coboundary");
    const auto& table = pair.gamma.table();
    const int n = k + 1; // bar degree of the arguments of the result
    BarCochain out;
    for (const auto& key : bar_cochain_basis(pair, k + 1)) {
        Rat val = 0;
        // leading merge: the first morphism absorbs the second, which drops
        // out of the reduced key entirely
        {
            BarKey face;
            face.idx.assign(key.idx.begin() + 1, key.idx.end());
            face.gs.assign(key.gs.begin() + 1, key.gs.end());
            val += bar_cochain_eval(pair, h, face);
        }
        Rat sign = -1;
        for (int j = 1; j <= n - 1; ++j) {
            BarKey face;
            face.idx = key.idx;
            face.idx.erase(face.idx.begin() + j);
            face.gs = key.gs;
            face.gs[j - 1] = table[key.gs[j - 1]][key.gs[j]];
            face.gs.erase(face.gs.begin() + j);
            val += sign * bar_cochain_eval(pair, h, face);
            sign = -sign;
        }
        {
            BarKey face;
            face.idx.assign(key.idx.begin(), key.idx.end() - 1);
            face.gs.assign(key.gs.begin(), key.gs.end() - 1);
            val += sign * bar_cochain_eval(pair, h, face);
        }
        if (val != 0) out.emplace(key, val);
    }
    return out;
}

Rat st_cochain_sup_norm(const GroupPair& pair, int k, const StCochain& f) {
    Rat best = 0;
    for (const auto& t : st_cochain_basis(pair, k))
        best = std::max(best, rat_abs(st_cochain_eval(pair, f, t)));
    return best;
}

Rat bar_cochain_sup_norm(const GroupPair& pair, int k, const BarCochain& h) {
    Rat best = 0;
    for (const auto& key : bar_cochain_basis(pair, k))
        best = std::max(best, rat_abs(bar_cochain_eval(pair, h, key)));
    return best;
}

StCochain bar_iso_phi(const GroupPair& pair, int k, const BarCochain& f) {
    require_finite(pair, "bar_iso_phi");
    const auto& g = pair.gamma;
    StCochain out;
    for (const auto& t : st_cochain_basis(pair, k)) {
        BarKey key;
        key.idx.reserve(t.size());
        for (const auto& e : t) key.idx.push_back(e.i);
        for (size_t j = 1; j < t.size(); ++j)
            key.gs.push_back(elem_id(g.multiply(g.inverse(t[j - 1].g), t[j].g)));
        const Rat val = bar_cochain_eval(pair, f, key);
        if (val != 0) out.emplace(t, val);
    }
    return out;
}

BarCochain bar_iso_psi(const GroupPair& pair, int k, const StCochain& h) {
    require_finite(pair, "bar_iso_psi");
    const auto& g = pair.gamma;
    BarCochain out;
    for (const auto& key : bar_cochain_basis(pair, k)) {
        StTuple t;
        t.push_back(IGV{Word{}, key.idx[0]});
        Word prod;
        for (int j = 0; j < k; ++j) {
            prod = g.multiply(prod, elem_word(key.gs[j]));
            t.push_back(IGV{prod, key.idx[j + 1]});
        }
        const Rat val = st_cochain_eval(pair, h, t);
        if (val != 0) out.emplace(key, val);
    }
    return out;
}

// exact rank by Gaussian elimination
static int rank_of(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Rat f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j)
                if (m[r][j] != 0) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// coboundary matrix on the equivariant relative cochain bases, degree k -> k+1
static std::vector<std::vector<Rat>> st_coboundary_matrix(const GroupPair& pair, int k) {
    const auto dom = st_cochain_basis(pair, k);
    const auto cod = st_cochain_basis(pair, k + 1);
    std::map<StTuple, int> dom_index;
    for (size_t j = 0; j < dom.size(); ++j) dom_index.emplace(dom[j], static_cast<int>(j));
    std::vector<std::vector<Rat>> m(cod.size(), std::vector<Rat>(dom.size(), Rat(0)));
    for (size_t row = 0; row < cod.size(); ++row) {
        const auto& t = cod[row];
        Rat sign = 1;
        for (size_t j = 0; j < t.size(); ++j) {
            StTuple face;
            for (size_t mm = 0; mm < t.size(); ++mm)
                if (mm != j) face.push_back(t[mm]);
            const StTuple rep = st_orbit_rep(pair, face);
            if (!st_prime_member(pair, rep)) {
                auto it = dom_index.find(rep);
                if (it == dom_index.end()) throw GroupError("st_coboundary_matrix: face escape");
                m[row][it->second] += sign;
            }
            sign = -sign;
        }
    }
    return m;
}

int relative_cohomology_rank(const GroupPair& pair, int k) {
    require_finite(pair, "relative_cohomology_rank");
    if (k < 0) throw GroupError("relative_cohomology_rank: negative degree");
    const int dim_k = static_cast<int>(st_cochain_basis(pair, k).size());
    const int rank_out = rank_of(st_coboundary_matrix(pair, k));
    const int rank_in = (k == 0) ? 0 : rank_of(st_coboundary_matrix(pair, k - 1));
    return dim_k - rank_out - rank_in;
}

// full (non-equivariant) tuple basis of degree k over the finite pair
static std::vector<StTuple> st_full_basis(const GroupPair& pair, int k) {
    const int n = pair.gamma.order();
    const int copies = static_cast<int>(pair.peripherals.size());
    std::vector<StTuple> basis;
    std::vector<int> state(2 * (k + 1), 0);
    while (true) {
        StTuple t;
        for (int j = 0; j <= k; ++j)
            t.push_back(IGV{elem_word(state[2 * j]), state[2 * j + 1]});
        basis.push_back(std::move(t));
        int pos = static_cast<int>(state.size()) - 1;
        while (pos >= 0) {
            const int cap = (pos % 2 == 0) ? n : copies;
            if (++state[pos] < cap) break;
            state[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return basis;
}

// boundary matrix of the standard resolution, degree k+1 -> k
static std::vector<std::vector<Rat>> st_boundary_matrix(const GroupPair& pair, int k) {
    const auto dom = st_full_basis(pair, k + 1);
    const auto cod = st_full_basis(pair, k);
    std::map<StTuple, int> cod_index;
    for (size_t j = 0; j < cod.size(); ++j) cod_index.emplace(cod[j], static_cast<int>(j));
    std::vector<std::vector<Rat>> m(cod.size(), std::vector<Rat>(dom.size(), Rat(0)));
    for (size_t col = 0; col < dom.size(); ++col) {
        const auto& t = dom[col];
        Rat sign = 1;
        for (size_t j = 0; j < t.size(); ++j) {
            StTuple face;
            for (size_t mm = 0; mm < t.size(); ++mm)
                if (mm != j) face.push_back(t[mm]);
            m[cod_index.at(face)][col] += sign;
            sign = -sign;
        }
    }
    return m;
}

bool st_exact_at(const GroupPair& pair, int k) {
    require_finite(pair, "st_exact_at");
    const int dim_k = static_cast<int>(st_full_basis(pair, k).size());
    int rank_down; // rank of the map leaving degree k
    if (k == 0) {
        rank_down = 1; // the augmentation onto the ground field
    } else {
        rank_down = rank_of(st_boundary_matrix(pair, k - 1));
    }
    const int rank_up = rank_of(st_boundary_matrix(pair, k));
    return rank_up == dim_k - rank_down;
}

} // namespace relhyp
