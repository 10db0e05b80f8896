#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "relhyp/graphs.hpp"

namespace relhyp {

/// A simplex as its sorted vertex tuple (the positive orientation).
using Simplex = std::vector<int>;

/// Finite simplicial complex with simplices listed by dimension up to a cap.
struct SComplex {
    std::vector<std::vector<Simplex>> simplices; // [dim][id], each sorted, each list sorted
    std::vector<int> heights;                    // per vertex; empty = all zero
    int d_max = 0;

    int num_vertices() const {
        return simplices.empty() ? 0 : static_cast<int>(simplices[0].size());
    }
    int dim() const; // largest dimension with at least one simplex
    bool has_simplex(const Simplex& s) const;
    int simplex_id(const Simplex& s) const; // kUnreachable if absent
    int height_of(int v) const { return heights.empty() ? 0 : heights[v]; }
};

/// Rips complex R_kappa(G): a simplex for every vertex set of G-diameter
/// <= kappa, up to dimension d_max. G's edges are exactly the kappa = 1 case
/// extended: the 1-skeleton always contains G.
SComplex build_rips(const SimpGraph& g, int kappa, int d_max,
                    const std::vector<int>& vertex_heights = {});

/// Full subcomplex spanned by a vertex subset (vertex ids are preserved).
SComplex full_subcomplex(const SComplex& k, const std::set<int>& vertices);

/// Sparse simplicial chain with exact rational coefficients. Keys are sorted
/// simplices; inserting an odd permutation negates the coefficient.
struct Chain {
    int degree = 0;
    std::map<Simplex, Rat> coef;

    explicit Chain(int deg = 0) : degree(deg) {}
    /// Adds c * [verts] with orientation sign from sorting; duplicate vertices
    /// contribute nothing. Erases entries that cancel to zero.
    void add(std::vector<int> verts, Rat c);
    Rat coefficient(const Simplex& sorted) const;
    bool is_zero() const { return coef.empty(); }

    Chain& operator+=(const Chain& o);
    Chain& operator-=(const Chain& o);
    Chain& operator*=(const Rat& r);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(const Rat& r, Chain a) { return a *= r; }
    bool operator==(const Chain& o) const { return degree == o.degree && coef == o.coef; }
};

/// Alternating face sum; degree drops by one.
Chain boundary(const Chain& c);

Rat l1_norm(const Chain& c);

struct ChainStats {
    Rat norm = 0;
    std::set<Simplex> support;
    std::set<int> supp0;
    std::optional<int> minh, maxh; // absent for the zero chain
};
ChainStats chain_stats(const Chain& c, const std::vector<int>& heights = {});

/// Keeps only simplices with every vertex in A.
Chain restrict_chain(const Chain& c, const std::set<int>& A);

/// Exact rank over the rationals of the boundary matrix from degree k to k-1.
int boundary_rank(const SComplex& k_complex, int k);

/// Rank of H_k (or reduced H_k) over the rationals. Requires k + 1 <= d_max so
/// the answer cannot be inflated by missing (k+1)-simplices.
int homology_rank(const SComplex& k_complex, int k, bool reduced);

/// Per-dimension minimum over m-simplices of their minimum vertex height;
/// dimensions with no simplices are absent.
std::map<int, int> min_height_dimension_profile(const SComplex& k_complex);

} // namespace relhyp
