#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "relhyp/complexes.hpp"
#include "relhyp/groups.hpp"

namespace relhyp {

/// Parses a group-pair description:
///   group: free N | abelian N | s3 | cyclic N
///   peripheral: <space-separated generator words>   (one line per peripheral)
///   gens: <words>   (optional; default: all generators and their inverses,
///                    or every non-identity element for finite groups;
///                    explicit lists are closed under inverses)
/// '#' starts a comment; blank lines are ignored. Cyclic groups name their
/// elements e, t1, .., t{N-1}. Throws GroupError on malformed input.
GroupPair parse_pair(const std::string& text);
GroupPair load_pair(const std::string& path);

/// JSON-lines graph serialization: one {"type":"vertex",...} record per
/// vertex (with optional label and height) followed by one
/// {"type":"edge","u":u,"v":v} record per edge.
void write_graph_jsonl(std::ostream& os, const SimpGraph& g,
                       const std::vector<int>& heights = {});

struct LoadedGraph {
    SimpGraph graph;
    std::vector<int> heights; // empty when absent from the file
};
LoadedGraph read_graph_jsonl(std::istream& is);
LoadedGraph load_graph_jsonl(const std::string& path);

/// JSON-lines complex serialization. Two dialects share the format:
///  - simplicial: {"type":"simplex","verts":[...]} records by dimension,
///    vertex records carrying optional heights;
///  - cell complexes: edge records for the skeleton plus
///    {"type":"cell","terms":[[[u,v],"p/q"],...]} boundary chains.
void write_complex_jsonl(std::ostream& os, const SComplex& k);
void write_cell_complex_jsonl(std::ostream& os, const SimpGraph& skeleton,
                              const std::vector<Chain>& cells);

struct LoadedComplex {
    SComplex complex;          // simplicial part (empty for pure cell files)
    SimpGraph skeleton;        // 1-skeleton in both dialects
    std::vector<Chain> cells;  // generic 2-cell boundaries (cell dialect)
    bool has_cells() const { return !cells.empty(); }
};
LoadedComplex read_complex_jsonl(std::istream& is);
LoadedComplex load_complex_jsonl(const std::string& path);

/// Chains as {"degree":d,"terms":[[[v0,...],"num","den"],...]} with exact
/// integer strings.
std::string chain_to_json(const Chain& c);
Chain chain_from_json(const std::string& text);
Chain load_chain_json(const std::string& path);

} // namespace relhyp
