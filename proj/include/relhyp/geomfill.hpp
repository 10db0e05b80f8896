#pragma once

#include <set>
#include <vector>

#include "relhyp/complexes.hpp"
#include "relhyp/filling.hpp"

namespace relhyp {

enum class FillMode { Plain, Horoball };

/// Result of one of the geometric filling pipelines: an exact filling together
/// with the observed constants.
struct FillingCertificate {
    Chain input;  // z
    Chain output; // a with boundary(a) = z (verified)
    bool feasible = false;
    Rat norm_ratio = 0;      // ||a|| / ||z||, 0 for z = 0
    int support_radius = -1; // radius / neighborhood width actually used
    int maxh_z = 0;          // max vertex height over supp(z) (0 without heights)
    bool horoball_confined = false;
};

/// Fills a cycle supported in B_D(v0) by the minimum-norm chain supported in
/// B_R(v0), growing R from D until the restricted LP becomes feasible (the R
/// used is recorded as support_radius). In Horoball mode the admissible region
/// is additionally intersected with the given horoball vertex set, so the
/// witness stays inside the horoball.
FillingCertificate local_fill(const SComplex& k, const SimpGraph& x, const Chain& z,
                              int v0, int D, FillMode mode = FillMode::Plain,
                              const std::set<int>& horoball = {});

struct SliceResult {
    std::vector<Chain> pieces;    // cycles z_k with sum = input
    std::vector<int> centers;     // x_k for each piece
    int D = 0;                    // slice width used (>= 2S + 3)
    int R = 0;                    // observed max radius of supp(z_k) around x_k
    Rat sum_norm_ratio = 0;       // (sum_k ||z_k||) / ||z||
    bool feasible = false;
};

/// Splits a cycle supported in the S-neighborhood of a geodesic path into
/// cycles z_k supported in balls around evenly spaced centers x_k on the path:
/// annulus restrictions around gamma[0] are corrected by local fills of their
/// boundary pieces, with the correction of slice k reused (negated) in slice
/// k+1 so that the pieces sum to z exactly.
SliceResult slice_cycle_along_geodesic(const SComplex& k, const SimpGraph& x,
                                       const Chain& z, const std::vector<int>& gamma,
                                       int S);

/// Fills a cycle supported in the S-neighborhood of a geodesic path by slicing
/// it and locally filling every piece; the filling stays in a neighborhood of
/// the path (width recorded as support_radius).
FillingCertificate thin_fill(const SComplex& k, const SimpGraph& x, const Chain& z,
                             const std::vector<int>& gamma, int S);

/// Cover of a family of geodesic segments by balls and pairwise far subsegments.
struct SpiderCover {
    struct Ball {
        int center = 0;
        int radius = 0;
    };
    std::vector<Ball> balls;
    std::vector<std::vector<int>> segments; // subpaths of the input geodesics
    bool cover_ok = false;      // every input vertex in a ball or 2delta-near a segment
    bool separation_ok = false; // segments pairwise > S apart
    int repairs = 0;            // balls added by the verification fallback
};

/// Inductive ball/segment cover: each new geodesic is compared against the
/// segments built so far; the stretches that come S-close to an old segment
/// are trimmed away (plus an S + delta margin absorbed into balls), and the
/// leftovers become new segments. Verified exhaustively; uncovered vertices
/// are repaired by extra balls and counted. Requires S >= 10 * delta.
SpiderCover spider_cover(const SimpGraph& x, const std::vector<std::vector<int>>& geodesics,
                         int S, int delta);

/// Fills a cycle of degree >= 2 supported near a union of geodesics: covers the
/// geodesics by a spider, disjointifies the cover's balls, splits z into
/// per-segment and per-ball parts, corrects them into cycles by local fills of
/// the shared boundary pieces, and fills the corrected cycles by thin/local
/// fills. support_radius reports the observed neighborhood width of the output
/// around the geodesics.
FillingCertificate fill_graphlike_cycle(const SComplex& k, const SimpGraph& x,
                                        const Chain& z,
                                        const std::vector<std::vector<int>>& geodesics,
                                        int L, int delta);

/// Fills a 1-cycle supported in the L-neighborhood of the geodesic triangle on
/// (v1, v2, v3): picks a center x delta-close to the two other sides, splits z
/// into three prong pieces along the legs beyond radius 10 * (delta + L) plus a
/// central piece, and fills them by thin/local fills.
FillingCertificate fill_triangle_cycle(const SComplex& k, const SimpGraph& x,
                                       const Chain& z, int v1, int v2, int v3, int L,
                                       int delta);

} // namespace relhyp
