#pragma once

#include <map>
#include <set>
#include <vector>

#include "relhyp/complexes.hpp"

namespace relhyp {

struct FillingResult {
    bool feasible = false;
    Rat value = 0;
    Chain witness;                // simplicial fills: degree k+1 chain, d(witness) = input
    std::vector<Rat> cell_coeffs; // generic fills: coefficient per cell
    int cells_considered = 0;
};

/// Exact minimum l1-norm of a simplicial (k+1)-chain with boundary gamma,
/// using cells whose vertices lie in `region` (empty = no restriction).
/// Infeasibility (no filling among the available cells) is a first-class
/// result, not zero. Requires d(gamma) = 0.
FillingResult filling_norm_lp(const SComplex& k, const Chain& gamma,
                              const std::set<int>& region = {});

/// Same LP over arbitrary 2-cells given by their boundary 1-chains (for
/// combinatorial presentation complexes).
FillingResult filling_norm_cells(const std::vector<Chain>& cell_boundaries,
                                 const Chain& gamma);

struct FillComparison {
    bool feasible = false;
    Rat exact = 0;
    double approx = 0;
    double gap = 0; // |approx - exact|
};

/// Runs the exact-rational and double-precision solvers on the same instance.
FillComparison rational_vs_float_fv(const std::vector<Chain>& cell_boundaries,
                                    const Chain& gamma);
FillComparison rational_vs_float_fv(const SComplex& k, const Chain& gamma);

/// Conformal decomposition of a 1-cycle into circuits: each circuit follows
/// the sign orientation of z, so sum a_c c = z and sum a_c ||c|| = ||z||.
struct CircuitDecomposition {
    struct Term {
        Chain circuit; // simple cycle, coefficients +-1
        Rat a;         // positive weight
    };
    std::vector<Term> terms;
};
CircuitDecomposition circuit_decomposition(const Chain& z);

/// All simple cycles of length <= max_len in a graph, each reported once (the
/// smallest vertex starts, and the orientation with the smaller second vertex
/// is kept). Stops at `budget` circuits.
std::vector<std::vector<int>> enumerate_circuits(const SimpGraph& g, int max_len,
                                                 size_t budget, bool* exceeded = nullptr);

/// 1-cycle chain of a closed vertex loop v0 v1 ... v0.
Chain loop_chain(const std::vector<int>& loop);

struct DehnTable {
    std::map<int, Rat> max_fill; // k -> max filling value over circuits of length <= k
    int circuits_enumerated = 0;
    int infeasible = 0;
    bool budget_exceeded = false;
    Rat linear_fit_residual = 0; // max over k of (max_fill[k] - C*k) for the best C
};

/// Lower-bound sampling of the homological Dehn function: enumerates integral
/// circuits of length <= k_max in the skeleton and fills each by LP over the
/// given 2-cells.
DehnTable dehn_sample(const SimpGraph& skeleton, const std::vector<Chain>& cell_boundaries,
                      int k_max, size_t budget = 200000);

} // namespace relhyp
