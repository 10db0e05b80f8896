#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "relhyp/rational.hpp"

namespace relhyp {

// A word over a group alphabet. Letter +k means generator k (1-based), -k its
// inverse. For finite groups, letter k is the group element with id k (the
// identity has id 0 and never appears in a normal form).
using Word = std::vector<int>;

enum class GroupKind { Free, FreeAbelian, Finite };

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Group with a decidable ShortLex normal form. Immutable after construction.
class Group {
public:
    static Group free_group(int rank);
    static Group free_abelian(int rank);
    /// `table[a][b]` is the id of a*b; id 0 must be the identity.
    static Group finite(std::vector<std::vector<int>> table,
                        std::vector<std::string> names = {});
    static Group symmetric3(); // S3, a handy finite test group

    GroupKind kind() const { return kind_; }
    int rank() const { return rank_; }
    int order() const { return static_cast<int>(table_.size()); } // 0 if infinite
    int alphabet_size() const;

    Word normal_form(const Word& w) const;
    Word multiply(const Word& a, const Word& b) const;
    Word inverse(const Word& a) const;
    bool is_identity(const Word& w) const { return normal_form(w).empty(); }
    bool equal(const Word& a, const Word& b) const { return normal_form(a) == normal_form(b); }

    /// ShortLex on normal forms: length first, then letter order a < a^-1 < b < b^-1 < ...
    bool shortlex_less(const Word& a, const Word& b) const;

    std::string to_string(const Word& nf) const;
    /// Parses space-separated tokens like `a b^-1 x^2`; throws GroupError on
    /// unknown symbols.
    Word parse_word(const std::string& text) const;
    std::string generator_name(int gen) const; // gen is 1-based

    const std::vector<std::vector<int>>& table() const { return table_; }

private:
    Group() = default;
    void validate_table() const;

    GroupKind kind_ = GroupKind::Free;
    int rank_ = 0;                         // free / free abelian
    std::vector<std::vector<int>> table_;  // finite
    std::vector<int> finv_;                // finite: inverse ids
    std::vector<std::string> names_;       // finite: element names
};

/// Subgroup with an exact membership structure: folded automaton (free),
/// Hermite-form lattice basis (free abelian), element subset (finite).
class Subgroup {
public:
    Subgroup(Group parent, std::vector<Word> generators);

    bool contains(const Word& g) const;
    const Group& parent() const { return parent_; }
    const std::vector<Word>& generators() const { return gens_; }

private:
    void build_free();
    void build_abelian();
    void build_finite();
    bool contains_free(const Word& nf) const;
    bool contains_abelian(const Word& nf) const;

    Group parent_;
    std::vector<Word> gens_; // normal forms
    // free: folded automaton, delta_[state][letter_index] (2*rank entries per state)
    std::vector<std::vector<int>> delta_;
    // abelian: column-style Hermite normal form of the generator lattice
    std::vector<std::vector<BigInt>> hnf_;
    // finite: closed element set
    std::set<int> elems_;
};

/// Group pair (Gamma, {Gamma_i}) with a compatible symmetric generating set S.
struct GroupPair {
    Group gamma;
    std::vector<Subgroup> peripherals;
    std::vector<Word> gen_set; // normal forms; symmetric, identity excluded

    GroupPair(Group g, std::vector<Subgroup> periph, std::vector<Word> gens);
};

struct CosetLabel {
    int peripheral = -1;
    Word representative; // ShortLex-least coset element found in the explored ball
    bool operator==(const CosetLabel&) const = default;
    auto operator<=>(const CosetLabel&) const = default;
};

/// Explored radius-R ball of the pair's Cayley graph, as a set of normal forms.
/// Vertex ids are assigned in (radius, ShortLex) order; id 0 is the identity.
struct BallIndex {
    std::vector<Word> elements;
    std::map<Word, int> index;
    std::vector<int> radius; // word-metric distance from identity
    int R = 0;

    bool contains(const Word& nf) const { return index.count(nf) > 0; }
    int id_of(const Word& nf) const;
};

BallIndex explore_ball(const Group& g, const std::vector<Word>& gens, int R);

CosetLabel coset_label(const GroupPair& pair, const BallIndex& ball, const Word& g, int i);

/// Per-peripheral partition of a ball into left cosets.
struct CosetPartition {
    std::vector<int> coset_of;  // per ball vertex id
    std::vector<Word> reps;     // ShortLex-least member per coset
};
CosetPartition coset_partition(const GroupPair& pair, const BallIndex& ball, int i);

struct CompatibilityReport {
    bool compatible = true;
    int failing_index = -1;
    // per peripheral, per generator: expression as a word of S cap Gamma_i
    // elements (each entry an index into the pair's gen_set), empty if the
    // bounded search did not find one.
    std::vector<std::vector<std::vector<int>>> certificates;
};
CompatibilityReport check_compatible(const GroupPair& pair);

} // namespace relhyp
