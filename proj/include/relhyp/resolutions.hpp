#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "relhyp/complexes.hpp"
#include "relhyp/cusped.hpp"
#include "relhyp/groups.hpp"

namespace relhyp {

/// A vertex of the disjoint union of |I| copies of the group: a group element
/// (as a normal form) together with the copy index.
struct IGV {
    Word g;
    int i = 0;
    bool operator==(const IGV&) const = default;
    auto operator<=>(const IGV&) const = default;
};

/// An ordered (k+1)-tuple of IGV vertices; repeats are allowed (standard
/// resolution basis, not an alternating simplicial one).
using StTuple = std::vector<IGV>;

/// Sparse rational chain of the standard resolution. Degree-k chains live on
/// (k+1)-tuples; the norm is the l1 norm of the coefficients.
struct StChain {
    int degree = 0;
    std::map<StTuple, Rat> coef;

    explicit StChain(int deg = 0) : degree(deg) {}
    /// Adds c * t; erases entries that cancel to zero. Throws on length mismatch.
    void add(const StTuple& t, const Rat& c);
    Rat coefficient(const StTuple& t) const;
    bool is_zero() const { return coef.empty(); }

    StChain& operator+=(const StChain& o);
    StChain& operator-=(const StChain& o);
    StChain& operator*=(const Rat& r);
    friend StChain operator+(StChain a, const StChain& b) { return a += b; }
    friend StChain operator-(StChain a, const StChain& b) { return a -= b; }
    friend StChain operator*(const Rat& r, StChain a) { return a *= r; }
    bool operator==(const StChain& o) const { return degree == o.degree && coef == o.coef; }
};

Rat st_norm(const StChain& c);

/// Basis tuples of the distinguished subcomplex: all entries share one copy
/// index i, and every entry lies in the left coset x0 * Gamma_i of the first
/// entry. Every single-entry tuple qualifies.
bool st_prime_member(const GroupPair& pair, const StTuple& t);

/// Left translation g . (x, i) = (g x, i) applied entrywise.
StChain st_translate(const GroupPair& pair, const Word& g, const StChain& c);

/// Throws GroupError("window exceeded") if some entry's group element lies
/// outside the explored window.
void require_window(const StChain& c, const BallIndex& window);

/// Alternating face sum (drop one entry); degree drops by one.
StChain st_boundary(const StChain& c);

/// Projection to the relative quotient, written on its canonical basis: drops
/// the distinguished tuples.
StChain st_project(const GroupPair& pair, const StChain& c);

/// The canonical right inverse of the projection: a relative class, given on
/// the canonical basis, is read back as an absolute chain verbatim. Norm 1.
StChain st_lift(const StChain& b);

/// Sum of coefficients (the degree-0 augmentation).
Rat st_augmentation(const StChain& c);

/// Finitely supported rational map on the disjoint union over i of the left
/// coset spaces Gamma / Gamma_i; cosets are keyed by (i, representative) with
/// the representative merged by exact membership tests.
struct DeltaElement {
    std::vector<std::tuple<int, Word, Rat>> terms; // nonzero, one per coset
    bool is_zero() const { return terms.empty(); }
    Rat total() const;
};

/// Coset class of a single vertex: (i, some member of g * Gamma_i).
/// Two vertices are in the same coset iff the indices agree and
/// g^-1 h lies in Gamma_i.
bool same_coset(const GroupPair& pair, const IGV& a, const IGV& b);

/// Augmentation of a degree-1 relative class into the coset space:
/// each pair (x, y) contributes [y] - [x]. The result lies in the kernel of
/// the total sum by construction; callers test is_zero() for the cycle
/// condition.
DeltaElement rel_augmentation(const GroupPair& pair, const StChain& b);

/// The averaging cone filler on degree-0 chains: writing c with disjoint
/// positive part sum(a+ x) and negative part sum(a- x),
///   Phi(c) = (1 / sum a+) * sum_{x,y} a-_x a+_y (x, y).
/// Norm bound ||Phi(c)|| <= ||c||; if the augmentation of c vanishes then
/// the boundary of Phi(c) is c. Throws GroupError when the positive part is
/// zero (including c = 0). phi_map_signed falls back to -Phi(-c) when only
/// the negative part is present, and still throws on c = 0.
StChain phi_map(const StChain& c);
StChain phi_map_signed(const StChain& c);

/// Prepends y to every tuple. Linear, norm 1; the boundary of [y, z] is z for
/// every cycle z (augmentation cycle in degree 0).
StChain absolute_cone(const IGV& y, const StChain& c);

/// The degree-1 relative cone: with a = lift(b) and the boundary of a split by
/// coset class as d = sum_s d_s,
///   [y, b]_rel = project(cone_y(a - sum_s PhiSigned(d_s))).
/// Norm bound ||[y,b]_rel|| <= 3 ||b||; when b is a cycle for the relative
/// augmentation, the relative boundary of [y, b]_rel is b.
StChain relative_cone(const GroupPair& pair, const IGV& y, const StChain& b);

/// Canonical-geodesic bicombing on a cusped graph: q(a, b) is the edge chain
/// of the canonical geodesic between a and b, oriented a -> b and computed on
/// the smaller-id endpoint first so that q(a, b) = -q(b, a) exactly.
/// The boundary of q(a, b) is b - a and ||q(a, b)|| = d(a, b). Throws if the
/// pair is not truncation-safe.
Chain naive_bicombing(const CuspedGraph& x, int a, int b);

/// Splitting of the bicombing triangle w = q(a,b) + q(b,c) + q(c,a) at height
/// C: w_high is the restriction of w to edges with both endpoints at height
/// >= C, completed by horizontal corrections at level C inside each horoball
/// so that z_low = w - w_high is a cycle with maxh <= C and w_high has
/// minh >= C. split_ok reports whether the level-C corrections existed.
struct TriangleDefect {
    Chain z_low{1};
    Chain w_high{1};
    bool split_ok = true;
    Rat z_norm = 0;   // l1 norm of z_low (empirical K contribution)
    int z_maxh = 0;   // max height over the support of z_low (0 if empty)
    std::string note; // why the split failed, when it did
};
TriangleDefect triangle_defect(const CuspedGraph& x, int a, int b, int c, int C);

/// The symmetrized chain map from Rips chains of the cusped graph into the
/// standard resolution. A vertex at height n >= 1 maps to (g, i) for its
/// horoball's coset member g and peripheral index i; a base vertex maps to
/// the average (1/|I|) sum_i (g, i). A k-simplex maps to the signed average
/// over all orderings of its vertices; the result is an exact chain map.
StChain symmetrized_vertex_image(const CuspedGraph& x, const GroupPair& pair, int v);
StChain symmetrized_chain_map(const CuspedGraph& x, const GroupPair& pair,
                              const Simplex& sigma);
StChain symmetrized_chain_map(const CuspedGraph& x, const GroupPair& pair, const Chain& c);

// ---------------------------------------------------------------------------
// Finite pairs: cochain spaces, the bar-resolution isomorphism, cohomology.
// ---------------------------------------------------------------------------

/// Reduced key of an equivariant groupoid bar cochain: the copy indices
/// i0..ik and the element ids g1..gk of the composable morphisms (the leading
/// morphism is quotiented away by equivariance; coefficients are trivial).
struct BarKey {
    std::vector<int> idx; // k+1 copy indices
    std::vector<int> gs;  // k element ids (finite-group ids)
    bool operator==(const BarKey&) const = default;
    auto operator<=>(const BarKey&) const = default;
};

/// Equivariant cochains are stored by orbit representative:
///  - St side: tuples whose first entry carries the identity; values on the
///    distinguished subcomplex are identically zero and excluded.
///  - bar side: BarKey; keys with all indices equal and every g inside that
///    peripheral subgroup are identically zero and excluded.
using StCochain = std::map<StTuple, Rat>;
using BarCochain = std::map<BarKey, Rat>;

/// Enumerates the orbit-representative basis in degree k. Throws GroupError
/// on infinite groups.
std::vector<StTuple> st_cochain_basis(const GroupPair& pair, int k);
std::vector<BarKey> bar_cochain_basis(const GroupPair& pair, int k);

/// Equivariant evaluation on an arbitrary basis tuple / reduced key
/// (translates to the orbit representative; vanishing conditions built in).
Rat st_cochain_eval(const GroupPair& pair, const StCochain& f, const StTuple& t);
Rat bar_cochain_eval(const GroupPair& pair, const BarCochain& h, const BarKey& key);

StCochain st_coboundary(const GroupPair& pair, int k, const StCochain& f);
BarCochain bar_coboundary(const GroupPair& pair, int k, const BarCochain& h);

Rat st_cochain_sup_norm(const GroupPair& pair, int k, const StCochain& f);
Rat bar_cochain_sup_norm(const GroupPair& pair, int k, const BarCochain& h);

/// The bar-resolution isomorphism in degree k <= 2 (finite pairs, trivial
/// real coefficients), with the fixed index taken to be 0:
///   phi: bar cochain -> St cochain,   psi: St cochain -> bar cochain.
/// Mutually inverse isometries commuting with the coboundaries.
StCochain bar_iso_phi(const GroupPair& pair, int k, const BarCochain& f);
BarCochain bar_iso_psi(const GroupPair& pair, int k, const StCochain& h);

/// Rank of the degree-k relative cohomology of a finite pair (k <= 2), by
/// exact rank computation on the equivariant cochain complex.
int relative_cohomology_rank(const GroupPair& pair, int k);

/// Exactness at degree k (k <= 2) of the augmented standard resolution of a
/// finite pair: the kernel of the degree-k boundary (the augmentation at
/// k = 0) equals the image of the degree-(k+1) boundary.
bool st_exact_at(const GroupPair& pair, int k);

} // namespace relhyp
