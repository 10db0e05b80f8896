#pragma once

#include <array>
#include <vector>

#include "relhyp/cusped.hpp"

namespace relhyp {

struct DeltaReport {
    Rat delta_four_point = 0;          // always a multiple of 1/2
    std::array<int, 4> witness{-1, -1, -1, -1}; // (w, x, y, z) attaining delta
    int scanned = 0;                   // size of the vertex set scanned
    bool truncation_safe = true;
};

/// Exact four-point hyperbolicity constant of the metric induced on V:
/// delta = max over quadruples (w,x,y,z) of
///         min((x.y)_w, (y.z)_w) - (x.z)_w, clamped at 0,
/// with Gromov products (x.y)_w = (d(x,w)+d(y,w)-d(x,y))/2.
/// V empty means all vertices. Throws if V is not pairwise connected.
DeltaReport four_point_delta(const SimpGraph& g, std::vector<int> V = {});

/// Same scan on a cusped graph; rejects V unless every pairwise distance is
/// certified exact by the truncation-safety certificate.
DeltaReport four_point_delta(const CuspedGraph& x, std::vector<int> V = {});

/// Max over the sampled triangles (with canonical-geodesic sides) of the
/// distance from a side vertex to the union of the other two sides. A lower
/// bound for the true thin-triangle constant, not the constant itself.
int thin_triangle_probe(const SimpGraph& g, const std::vector<std::array<int, 3>>& triples);

} // namespace relhyp
