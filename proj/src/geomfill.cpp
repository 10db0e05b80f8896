#include "relhyp/geomfill.hpp"

#include <algorithm>

#include "relhyp/graphs.hpp"

namespace relhyp {

namespace {

int chain_maxh(const SComplex& k, const Chain& z) {
    ChainStats st = chain_stats(z, k.heights);
    return st.maxh.value_or(0);
}

std::set<int> supp0(const Chain& z) {
    std::set<int> out;
    for (const auto& [s, v] : z.coef) out.insert(s.begin(), s.end());
    return out;
}

int max_dist(const Chain& z, const std::vector<int>& dist) {
    int m = 0;
    for (int v : supp0(z)) {
        if (dist[v] == kUnreachable) return kUnreachable;
        m = std::max(m, dist[v]);
    }
    return m;
}

/// Minimum-norm fill of `z` over cells whose vertices satisfy dist <= t and
/// the optional extra filter, growing t until the LP is feasible or the region
/// saturates. Returns the fill and records the t used in `radius`.
FillingResult grow_fill(const SComplex& k, const Chain& z, const std::vector<int>& dist,
                        int t0, const std::set<int>& filter, int* radius) {
    int n = static_cast<int>(dist.size());
    int t = t0;
    size_t last_size = 0;
    while (true) {
        std::set<int> region;
        for (int v = 0; v < n; ++v)
            if (dist[v] != kUnreachable && dist[v] <= t &&
                (filter.empty() || filter.count(v)))
                region.insert(v);
        if (region.size() > last_size || t == t0) {
            last_size = region.size();
            FillingResult fr = filling_norm_lp(k, z, region);
            if (fr.feasible) {
                if (radius) *radius = t;
                return fr;
            }
        } else if (static_cast<int>(region.size()) == n || t > 2 * n) {
            if (radius) *radius = t;
            return FillingResult{}; // infeasible even unrestricted
        }
        ++t;
    }
}

std::vector<int> clamp_subpath(const std::vector<int>& path, int lo, int hi) {
    int n = static_cast<int>(path.size());
    lo = std::max(lo, 0);
    hi = std::min(hi, n - 1);
    if (lo > hi) return {};
    return std::vector<int>(path.begin() + lo, path.begin() + hi + 1);
}

} // namespace

FillingCertificate local_fill(const SComplex& k, const SimpGraph& x, const Chain& z,
                              int v0, int D, FillMode mode, const std::set<int>& horoball) {
    if (z.degree >= 1 && !boundary(z).is_zero())
        throw GroupError("local_fill input must be a cycle");
    FillingCertificate cert;
    cert.input = z;
    cert.output = Chain(z.degree + 1);
    cert.maxh_z = chain_maxh(k, z);
    if (z.is_zero()) {
        cert.feasible = true;
        cert.support_radius = D;
        cert.horoball_confined = (mode == FillMode::Horoball);
        return cert;
    }
    std::vector<int> dist = bfs_distances(x, v0);
    if (max_dist(z, dist) == kUnreachable || max_dist(z, dist) > D)
        throw GroupError("local_fill: support not contained in B_D(v0)");
    std::set<int> filter;
    if (mode == FillMode::Horoball) {
        for (int v : supp0(z))
            if (!horoball.count(v))
                throw GroupError("local_fill: support not inside the horoball");
        filter = horoball;
    }
    int radius = D;
    FillingResult fr = grow_fill(k, z, dist, D, filter, &radius);
    cert.support_radius = radius;
    if (!fr.feasible) return cert;
    cert.feasible = true;
    cert.output = fr.witness;
    cert.norm_ratio = fr.value / l1_norm(z);
    if (mode == FillMode::Horoball) {
        cert.horoball_confined = true;
        for (int v : supp0(cert.output)) cert.horoball_confined &= horoball.count(v) > 0;
    }
    if (!(boundary(cert.output) == z)) throw GroupError("local_fill verification failed");
    return cert;
}

SliceResult slice_cycle_along_geodesic(const SComplex& k, const SimpGraph& x,
                                       const Chain& z, const std::vector<int>& gamma,
                                       int S) {
    if (gamma.empty()) throw GroupError("slice: empty geodesic");
    if (z.degree < 1 || !boundary(z).is_zero())
        throw GroupError("slice input must be a cycle of degree >= 1");
    SliceResult res;
    res.D = 2 * S + 3;
    if (z.is_zero()) {
        res.feasible = true;
        return res;
    }
    std::vector<int> dnear = bfs_distances_multi(x, gamma);
    if (max_dist(z, dnear) == kUnreachable || max_dist(z, dnear) > S)
        throw GroupError("slice: support not contained in N_S(gamma)");

    const int D = res.D, r = S + 1;
    const int glen = static_cast<int>(gamma.size());
    auto at = [&](int t) { return gamma[std::clamp(t, 0, glen - 1)]; };
    std::vector<int> dist0 = bfs_distances(x, gamma[0]);
    int far = max_dist(z, dist0);
    int k_max = far / D;

    Rat znorm = l1_norm(z), piece_norms = 0;
    Chain prev_a(z.degree); // a_{k-1}
    Chain prev_b(z.degree - 1);
    Chain total(z.degree);
    for (int kk = 0; kk <= k_max; ++kk) {
        auto in_ball = [&](int rad) {
            std::set<int> ball;
            for (int v = 0; v < x.num_vertices(); ++v)
                if (dist0[v] != kUnreachable && dist0[v] <= rad) ball.insert(v);
            return ball;
        };
        Chain zbar = restrict_chain(z, in_ball((kk + 1) * D)) -
                     restrict_chain(z, in_ball(kk * D));
        // split d(zbar) into the piece near y_k and the piece near y_{k+1}
        Chain dz = boundary(zbar);
        std::vector<int> du = bfs_distances(x, at(kk * D));
        std::vector<int> dv = bfs_distances(x, at((kk + 1) * D));
        Chain b_lo(z.degree - 1), b_hi(z.degree - 1);
        for (const auto& [s, c] : dz.coef) {
            int mu = x.num_vertices(), mv = mu;
            for (int v : s) {
                if (du[v] != kUnreachable) mu = std::min(mu, du[v]);
                if (dv[v] != kUnreachable) mv = std::min(mv, dv[v]);
            }
            if (mu <= r) b_lo.coef[s] = c;
            else if (mv <= r) b_hi.coef[s] = c;
            else throw GroupError("slice: boundary piece escapes both end balls");
        }
        Chain neg_prev = prev_b;
        neg_prev *= -1;
        if (!(b_lo == neg_prev))
            throw GroupError("slice: boundary pieces do not telescope");
        FillingCertificate ac = local_fill(k, x, b_hi, at((kk + 1) * D), r);
        if (!ac.feasible) return res; // infeasible sub-fill, res.feasible stays false
        // z_k := zbar - a'_k - a_k with a'_k = -a_{k-1}
        Chain piece = zbar;
        piece += prev_a;
        piece -= ac.output;
        prev_a = ac.output;
        prev_b = b_hi;
        if (piece.is_zero()) continue;
        if (!boundary(piece).is_zero()) throw GroupError("slice: piece is not a cycle");
        int center = at(kk * D + D / 2);
        std::vector<int> dc = bfs_distances(x, center);
        res.R = std::max(res.R, max_dist(piece, dc));
        piece_norms += l1_norm(piece);
        total += piece;
        res.pieces.push_back(std::move(piece));
        res.centers.push_back(center);
    }
    if (!(total == z)) throw GroupError("slice: pieces do not sum to the input");
    res.sum_norm_ratio = piece_norms / znorm;
    res.feasible = true;
    return res;
}

FillingCertificate thin_fill(const SComplex& k, const SimpGraph& x, const Chain& z,
                             const std::vector<int>& gamma, int S) {
    FillingCertificate cert;
    cert.input = z;
    cert.output = Chain(z.degree + 1);
    cert.maxh_z = chain_maxh(k, z);
    if (z.is_zero()) {
        cert.feasible = true;
        cert.support_radius = S;
        return cert;
    }
    SliceResult sl = slice_cycle_along_geodesic(k, x, z, gamma, S);
    if (!sl.feasible) return cert;
    Chain a(z.degree + 1);
    for (size_t i = 0; i < sl.pieces.size(); ++i) {
        std::vector<int> dc = bfs_distances(x, sl.centers[i]);
        FillingCertificate c =
            local_fill(k, x, sl.pieces[i], sl.centers[i], max_dist(sl.pieces[i], dc));
        if (!c.feasible) return cert;
        a += c.output;
    }
    if (!(boundary(a) == z)) throw GroupError("thin_fill verification failed");
    cert.feasible = true;
    cert.output = a;
    cert.norm_ratio = l1_norm(a) / l1_norm(z);
    std::vector<int> dnear = bfs_distances_multi(x, gamma);
    cert.support_radius = max_dist(a, dnear);
    return cert;
}

SpiderCover spider_cover(const SimpGraph& x, const std::vector<std::vector<int>>& geodesics,
                         int S, int delta) {
    if (S < 10 * delta) throw GroupError("spider_cover requires S >= 10 * delta");
    SpiderCover sp;
    for (const auto& alpha : geodesics) {
        if (alpha.empty()) continue;
        if (sp.segments.empty() && sp.balls.empty()) {
            sp.segments.push_back(alpha);
            continue;
        }
        // stretches of alpha that come S-close to an existing segment
        struct Interval {
            int lo, hi;
        };
        std::vector<Interval> hits;
        for (const auto& seg : sp.segments) {
            std::vector<int> d = bfs_distances_multi(x, seg);
            int lo = -1, hi = -1;
            for (int t = 0; t < static_cast<int>(alpha.size()); ++t)
                if (d[alpha[t]] != kUnreachable && d[alpha[t]] <= S) {
                    if (lo < 0) lo = t;
                    hi = t;
                }
            if (lo >= 0) hits.push_back({lo, hi});
        }
        std::sort(hits.begin(), hits.end(),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        std::vector<Interval> merged;
        for (const auto& iv : hits) {
            if (!merged.empty() && iv.lo <= merged.back().hi)
                merged.back().hi = std::max(merged.back().hi, iv.hi);
            else merged.push_back(iv);
        }
        if (merged.empty()) {
            sp.segments.push_back(alpha);
            continue;
        }
        int margin = S + delta;
        int prev_end = 0; // left extreme plays the role of y_0
        for (const auto& iv : merged) {
            auto piece = clamp_subpath(alpha, prev_end, iv.lo - margin);
            if (!piece.empty()) sp.segments.push_back(piece);
            sp.balls.push_back({alpha[iv.lo], margin});
            if (iv.hi != iv.lo) sp.balls.push_back({alpha[iv.hi], margin});
            prev_end = iv.hi + margin;
        }
        auto tail = clamp_subpath(alpha, prev_end, static_cast<int>(alpha.size()) - 1);
        if (!tail.empty()) sp.segments.push_back(tail);
    }

    // enforce pairwise separation: drop the shorter of an offending pair and
    // absorb its vertices into balls
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < sp.segments.size() && !changed; ++i) {
            std::vector<int> d = bfs_distances_multi(x, sp.segments[i]);
            for (size_t j = i + 1; j < sp.segments.size() && !changed; ++j) {
                int dm = x.num_vertices();
                for (int v : sp.segments[j])
                    if (d[v] != kUnreachable) dm = std::min(dm, d[v]);
                if (dm > S) continue;
                size_t victim = sp.segments[j].size() < sp.segments[i].size() ? j : i;
                int rad = S + delta, step = std::max(1, 2 * rad);
                const auto& seg = sp.segments[victim];
                for (int t = 0; t < static_cast<int>(seg.size()); t += step) {
                    sp.balls.push_back({seg[t], rad});
                    ++sp.repairs;
                }
                sp.balls.push_back({seg.back(), rad});
                ++sp.repairs;
                sp.segments.erase(sp.segments.begin() + victim);
                changed = true;
            }
        }
    }

    // exhaustive cover verification with ball repair
    std::vector<int> covered(x.num_vertices(), 0);
    auto mark_ball = [&](const SpiderCover::Ball& b) {
        for (int v : ball_vertices(x, b.center, b.radius)) covered[v] = 1;
    };
    for (const auto& b : sp.balls) mark_ball(b);
    for (const auto& seg : sp.segments) {
        std::vector<int> d = bfs_distances_multi(x, seg);
        for (int v = 0; v < x.num_vertices(); ++v)
            if (d[v] != kUnreachable && d[v] <= 2 * delta) covered[v] = 1;
    }
    for (const auto& alpha : geodesics)
        for (int v : alpha)
            if (!covered[v]) {
                sp.balls.push_back({v, S + delta});
                ++sp.repairs;
                mark_ball(sp.balls.back());
            }
    sp.cover_ok = true;
    for (const auto& alpha : geodesics)
        for (int v : alpha) sp.cover_ok &= covered[v] != 0;
    sp.separation_ok = true;
    for (size_t i = 0; i < sp.segments.size(); ++i) {
        std::vector<int> d = bfs_distances_multi(x, sp.segments[i]);
        for (size_t j = i + 1; j < sp.segments.size(); ++j)
            for (int v : sp.segments[j])
                if (d[v] != kUnreachable && d[v] <= S) sp.separation_ok = false;
    }
    return sp;
}

FillingCertificate fill_graphlike_cycle(const SComplex& k, const SimpGraph& x,
                                        const Chain& z,
                                        const std::vector<std::vector<int>>& geodesics,
                                        int L, int delta) {
    if (z.degree < 2) throw GroupError("fill_graphlike_cycle needs degree >= 2");
    FillingCertificate cert;
    cert.input = z;
    cert.output = Chain(z.degree + 1);
    cert.maxh_z = chain_maxh(k, z);
    if (z.is_zero()) {
        cert.feasible = true;
        cert.support_radius = L;
        return cert;
    }
    std::vector<int> all_geo;
    for (const auto& g : geodesics) all_geo.insert(all_geo.end(), g.begin(), g.end());
    if (all_geo.empty()) throw GroupError("fill_graphlike_cycle: no geodesics");
    std::vector<int> dgeo = bfs_distances_multi(x, all_geo);
    if (max_dist(z, dgeo) == kUnreachable || max_dist(z, dgeo) > L)
        throw GroupError("fill_graphlike_cycle: support escapes N_L(geodesics)");

    // wide enough that the (2 delta + L)-neighborhoods of distinct segments
    // stay disjoint
    int S = std::max(10 * delta, 4 * delta + 2 * L + 1);
    SpiderCover sp = spider_cover(x, geodesics, S, delta);

    // disjointify the cover's balls: drop one of an intersecting pair and
    // triple the common radius until the kept balls are pairwise disjoint
    int base_r = 0;
    for (const auto& b : sp.balls) base_r = std::max(base_r, b.radius);
    int rho = base_r + L + 1;
    std::vector<int> centers;
    for (const auto& b : sp.balls) centers.push_back(b.center);
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (size_t i = 0; i < centers.size() && !shrunk; ++i)
            for (size_t j = i + 1; j < centers.size() && !shrunk; ++j)
                if (graph_distance(x, centers[i], centers[j]) <= 2 * rho) {
                    centers.erase(centers.begin() + j);
                    rho *= 3;
                    shrunk = true;
                }
    }
    std::vector<std::set<int>> ballset;
    for (int c : centers) {
        auto vs = ball_vertices(x, c, rho);
        ballset.emplace_back(vs.begin(), vs.end());
    }
    std::vector<std::set<int>> nbh;
    for (const auto& seg : sp.segments) {
        std::vector<int> d = bfs_distances_multi(x, seg);
        std::set<int> n;
        for (int v = 0; v < x.num_vertices(); ++v)
            if (d[v] != kUnreachable && d[v] <= 2 * delta + L) n.insert(v);
        nbh.push_back(std::move(n));
    }

    // split z into per-segment parts and per-ball leftovers
    Chain rem = z;
    std::vector<Chain> z_seg;
    for (const auto& n : nbh) {
        Chain part = restrict_chain(rem, n);
        rem -= part;
        z_seg.push_back(std::move(part));
    }
    std::vector<Chain> z_ball;
    for (const auto& bs : ballset) {
        Chain part = restrict_chain(rem, bs);
        rem -= part;
        z_ball.push_back(std::move(part));
    }
    if (!rem.is_zero())
        throw GroupError("fill_graphlike_cycle: support escapes the spider cover");

    // correct segment parts into cycles by locally filling their boundary
    // pieces inside the disjoint balls, crediting the fills to the balls
    std::vector<Chain> ball_credit(centers.size(), Chain(z.degree));
    Chain a(z.degree + 1);
    for (size_t j = 0; j < z_seg.size(); ++j) {
        if (z_seg[j].is_zero()) continue;
        Chain dz = boundary(z_seg[j]);
        Chain corrected = z_seg[j];
        for (size_t i = 0; i < centers.size(); ++i) {
            Chain b_ji = restrict_chain(dz, ballset[i]);
            if (b_ji.is_zero()) continue;
            dz -= b_ji;
            if (z.degree - 1 >= 1 && !boundary(b_ji).is_zero())
                throw GroupError("fill_graphlike_cycle: boundary piece not a cycle");
            FillingCertificate c = local_fill(k, x, b_ji, centers[i], rho);
            if (!c.feasible) return cert;
            corrected -= c.output;
            ball_credit[i] += c.output;
        }
        if (!dz.is_zero())
            throw GroupError("fill_graphlike_cycle: segment boundary escapes balls");
        if (!boundary(corrected).is_zero())
            throw GroupError("fill_graphlike_cycle: corrected segment part not a cycle");
        std::vector<int> dseg = bfs_distances_multi(x, sp.segments[j]);
        FillingCertificate c = thin_fill(k, x, corrected, sp.segments[j],
                                         std::max(1, max_dist(corrected, dseg)));
        if (!c.feasible) return cert;
        a += c.output;
    }
    for (size_t i = 0; i < centers.size(); ++i) {
        Chain zi = z_ball[i] + ball_credit[i];
        if (zi.is_zero()) continue;
        if (!boundary(zi).is_zero())
            throw GroupError("fill_graphlike_cycle: corrected ball part not a cycle");
        std::vector<int> dc = bfs_distances(x, centers[i]);
        FillingCertificate c = local_fill(k, x, zi, centers[i], max_dist(zi, dc));
        if (!c.feasible) return cert;
        a += c.output;
    }
    if (!(boundary(a) == z)) throw GroupError("fill_graphlike_cycle verification failed");
    cert.feasible = true;
    cert.output = a;
    cert.norm_ratio = l1_norm(a) / l1_norm(z);
    cert.support_radius = max_dist(a, dgeo);
    return cert;
}

FillingCertificate fill_triangle_cycle(const SComplex& k, const SimpGraph& x,
                                       const Chain& z, int v1, int v2, int v3, int L,
                                       int delta) {
    if (z.degree != 1) throw GroupError("fill_triangle_cycle needs a 1-cycle");
    std::vector<int> g12 = canonical_geodesic(x, v1, v2);
    std::vector<int> g13 = canonical_geodesic(x, v1, v3);
    std::vector<int> g23 = canonical_geodesic(x, v2, v3);
    std::vector<int> tri = g12;
    tri.insert(tri.end(), g13.begin(), g13.end());
    tri.insert(tri.end(), g23.begin(), g23.end());

    FillingCertificate cert;
    cert.input = z;
    cert.output = Chain(2);
    cert.maxh_z = chain_maxh(k, z);
    if (z.is_zero()) {
        cert.feasible = true;
        cert.support_radius = L;
        return cert;
    }
    std::vector<int> dtri = bfs_distances_multi(x, tri);
    if (max_dist(z, dtri) == kUnreachable || max_dist(z, dtri) > L)
        throw GroupError("fill_triangle_cycle: support escapes N_L(triangle)");

    // center on [v1,v2] closest to the two other sides
    std::vector<int> d13 = bfs_distances_multi(x, g13);
    std::vector<int> d23 = bfs_distances_multi(x, g23);
    int pos_x = 0, best = x.num_vertices();
    for (int t = 0; t < static_cast<int>(g12.size()); ++t) {
        int m = std::max(d13[g12[t]], d23[g12[t]]);
        if (m < best) {
            best = m;
            pos_x = t;
        }
    }
    int xc = g12[pos_x];
    const int R = 10 * (delta + L);

    // prongs: the legs beyond distance R from the center
    std::vector<int> gx3 = canonical_geodesic(x, xc, v3);
    std::vector<std::vector<int>> prongs;
    prongs.push_back(clamp_subpath(g12, 0, pos_x - R));
    prongs.push_back(clamp_subpath(g12, pos_x + R, static_cast<int>(g12.size()) - 1));
    prongs.push_back(clamp_subpath(gx3, R, static_cast<int>(gx3.size()) - 1));

    Chain rem = z;
    Chain a(2);
    for (const auto& prong : prongs) {
        if (prong.empty()) continue;
        std::vector<int> dp = bfs_distances_multi(x, prong);
        std::set<int> n;
        for (int v = 0; v < x.num_vertices(); ++v)
            if (dp[v] != kUnreachable && dp[v] <= L + delta) n.insert(v);
        Chain zbar = restrict_chain(rem, n);
        if (zbar.is_zero()) continue;
        rem -= zbar;
        // correct zbar into a cycle: fill its 0-dimensional boundary by a
        // 1-chain in a grown tube around the prong
        Chain corr(2);
        Chain dz = boundary(zbar);
        Chain piece = zbar;
        if (!dz.is_zero()) {
            int used = 0;
            FillingResult fr = grow_fill(k, dz, dp, L + delta, {}, &used);
            if (!fr.feasible) return cert;
            piece -= fr.witness;
        }
        if (!boundary(piece).is_zero())
            throw GroupError("fill_triangle_cycle: prong piece not a cycle");
        FillingCertificate c =
            thin_fill(k, x, piece, prong, std::max(1, max_dist(piece, dp)));
        if (!c.feasible) return cert;
        a += c.output;
        rem += zbar - piece; // the correction chain stays with the center part
    }
    // rem = z - sum of prong cycles; a central cycle around x
    if (!boundary(rem).is_zero())
        throw GroupError("fill_triangle_cycle: central part not a cycle");
    if (!rem.is_zero()) {
        std::vector<int> dc = bfs_distances(x, xc);
        FillingCertificate c = local_fill(k, x, rem, xc, max_dist(rem, dc));
        if (!c.feasible) return cert;
        a += c.output;
    }
    if (!(boundary(a) == z)) throw GroupError("fill_triangle_cycle verification failed");
    cert.feasible = true;
    cert.output = a;
    cert.norm_ratio = l1_norm(a) / l1_norm(z);
    cert.support_radius = max_dist(a, dtri);
    return cert;
}

} // namespace relhyp
