#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relhyp/complexes.hpp"
#include "relhyp/groups.hpp"

namespace relhyp {

/// Relative presentation: extra generators over the peripheral subgroups plus
/// relators written in both alphabets.
struct RelativePresentation {
    // one atom of a relator word: generator symbol and exponent (+1 / -1),
    // already expanded (powers and commutators unfolded)
    using Atom = std::pair<std::string, int>;

    std::vector<std::string> gens;                         // the finite set A
    std::vector<std::vector<std::string>> peripheral_gens; // per peripheral
    std::vector<std::vector<Atom>> relators;
};

/// Parses the grammar
///   rel-pres { gens: b; peripherals: P1 = <a>; relators: ; }
/// Words use `^-1` / `^k` for powers and `[u,v]` for commutators; lists are
/// comma-separated; empty sections are allowed. Throws GroupError with the
/// byte offset on malformed input.
RelativePresentation parse_relative_presentation(const std::string& text);

/// Resolves one relator to a word of the group (symbols matched against
/// generator names); throws on unknown symbols.
Word relator_word(const RelativePresentation& pres, size_t relator_index, const Group& g);

/// 2-dimensional combinatorial cell complex: a 1-skeleton that may carry
/// labeled multi-edges, and 2-cells given by closed edge loops.
struct CombComplex2 {
    struct Edge {
        int u = 0, v = 0;
        std::string label;
    };
    struct Cell2 {
        std::vector<int> edges;    // edge ids along the attaching loop
        std::vector<int> signs;    // +1 = traversed u->v, -1 = v->u
        std::vector<int> vertices; // visited vertices, vertices[k] starts edge k
        std::string kind;          // "relator" or "rectangle"
    };

    int num_vertices = 0;
    std::vector<Edge> edges;
    std::vector<Cell2> cells;
    std::vector<std::string> vlabels;

    int add_vertex(std::string label = {});
    int add_edge(int u, int v, std::string label = {});
    /// Adds a 2-cell from a closed vertex loop, resolving each step to an edge
    /// id (the first matching edge); throws if a step has no edge.
    int add_cell_loop(const std::vector<int>& loop, std::string kind = {});

    /// Forgets multi-edges and labels.
    SimpGraph simple_skeleton() const;
    /// Attaching loops as 1-chains over the simple skeleton (multi-edge
    /// multiplicities merge; back-and-forth steps cancel).
    std::vector<Chain> cell_boundary_chains() const;

    static CombComplex2 from_graph(const SimpGraph& g);
};

/// Relative Cayley complex truncated to a ball, with the bookkeeping needed to
/// form the quotient.
struct RelCayleyComplex {
    CombComplex2 complex;
    BallIndex ball;
    int copies = 1;
    int R = 0;

    int vid(int ball_vertex, int copy) const {
        return copy * static_cast<int>(ball.elements.size()) + ball_vertex;
    }
};

/// |I| copies of the Cayley ball joined by vertical edges, with relator 2-cells
/// attached at every basepoint whose traced loop stays inside the ball, and a
/// rectangular 2-cell for every horizontal edge and copy pair.
RelCayleyComplex build_relative_cayley_complex(const RelativePresentation& pres,
                                               const GroupPair& pair, int R);

/// Collapses, copy by copy, the full subcomplexes lying in one left coset of
/// the copy's peripheral subgroup. Vertices become coset labels; horizontal
/// edges with generator inside the peripheral disappear; vertical edges are
/// never collapsed; 2-cells whose whole boundary collapses are dropped.
CombComplex2 build_quotient_complex(const RelCayleyComplex& k, const GroupPair& pair);

/// All circuits (closed paths meeting every vertex at most once) through the
/// given edge with at most L edges, each reported once as an edge-id loop
/// starting with `edge`. Requires L >= 3 per the probe's contract, but bigons
/// between multi-edges are reported too.
std::vector<std::vector<int>> fineness_probe(const CombComplex2& g, int edge, int L);

} // namespace relhyp
