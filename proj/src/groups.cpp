#include "relhyp/groups.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <sstream>

namespace relhyp {

namespace {

// ShortLex letter order: a < a^-1 < b < b^-1 < ...
int letter_key(int letter) { return 2 * std::abs(letter) + (letter < 0 ? 1 : 0); }

} // namespace

// ---------------------------------------------------------------------------
// Group
// ---------------------------------------------------------------------------

Group Group::free_group(int rank) {
    if (rank < 1) throw GroupError("free group rank must be positive");
    Group g;
    g.kind_ = GroupKind::Free;
    g.rank_ = rank;
    return g;
}

Group Group::free_abelian(int rank) {
    if (rank < 1) throw GroupError("free abelian rank must be positive");
    Group g;
    g.kind_ = GroupKind::FreeAbelian;
    g.rank_ = rank;
    return g;
}

Group Group::finite(std::vector<std::vector<int>> table, std::vector<std::string> names) {
    Group g;
    g.kind_ = GroupKind::Finite;
    g.table_ = std::move(table);
    g.names_ = std::move(names);
    g.rank_ = 0;
    g.validate_table();
    int n = g.order();
    g.finv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.table_[a][b] == 0) g.finv_[a] = b;
    if (g.names_.empty()) {
        for (int i = 0; i < n; ++i) g.names_.push_back("e" + std::to_string(i));
    }
    return g;
}

Group Group::symmetric3() {
    // Permutations of {1,2,3} in one-line notation, composed left-to-right
    // (p*q maps i to q[p[i]]). Ids: 0=id, 1=(12), 2=(13), 3=(23), 4=(123), 5=(132).
    static const int perms[6][3] = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    // p*q acts as q-then-p (functional composition), so e.g. (123)*(12) = (13).
    auto compose = [&](int p, int q) {
        int r[3];
        for (int i = 0; i < 3; ++i) r[i] = perms[p][perms[q][i]];
        for (int k = 0; k < 6; ++k)
            if (std::equal(r, r + 3, perms[k])) return k;
        return -1;
    };
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) table[a][b] = compose(a, b);
    return finite(table, {"id", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

void Group::validate_table() const {
    int n = order();
    if (n == 0) throw GroupError("empty multiplication table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) throw GroupError("table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw GroupError("table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (table_[0][a] != a || table_[a][0] != a)
            throw GroupError("element 0 is not an identity");
    for (int a = 0; a < n; ++a) {
        bool has_inv = false;
        for (int b = 0; b < n; ++b) has_inv |= (table_[a][b] == 0);
        if (!has_inv) throw GroupError("element lacks an inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw GroupError("multiplication table is not associative");
}

int Group::alphabet_size() const {
    return kind_ == GroupKind::Finite ? order() - 1 : rank_;
}

Word Group::normal_form(const Word& w) const {
    switch (kind_) {
    case GroupKind::Free: {
        Word out;
        for (int letter : w) {
            if (letter == 0 || std::abs(letter) > rank_)
                throw GroupError("unknown symbol in word");
            if (!out.empty() && out.back() == -letter)
                out.pop_back();
            else
                out.push_back(letter);
        }
        return out;
    }
    case GroupKind::FreeAbelian: {
        std::vector<long long> exp(rank_ + 1, 0);
        for (int letter : w) {
            if (letter == 0 || std::abs(letter) > rank_)
                throw GroupError("unknown symbol in word");
            exp[std::abs(letter)] += letter > 0 ? 1 : -1;
        }
        Word out;
        for (int g = 1; g <= rank_; ++g) {
            for (long long k = 0; k < std::abs(exp[g]); ++k)
                out.push_back(exp[g] > 0 ? g : -g);
        }
        return out;
    }
    case GroupKind::Finite: {
        int acc = 0;
        for (int letter : w) {
            int e = std::abs(letter);
            if (e == 0 || e >= order()) throw GroupError("unknown symbol in word");
            acc = table_[acc][letter > 0 ? e : finv_[e]];
        }
        return acc == 0 ? Word{} : Word{acc};
    }
    }
    throw GroupError("bad group kind");
}

Word Group::multiply(const Word& a, const Word& b) const {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return normal_form(w);
}

Word Group::inverse(const Word& a) const {
    Word w;
    for (auto it = a.rbegin(); it != a.rend(); ++it) w.push_back(-*it);
    return normal_form(w);
}

bool Group::shortlex_less(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t k = 0; k < a.size(); ++k)
        if (letter_key(a[k]) != letter_key(b[k])) return letter_key(a[k]) < letter_key(b[k]);
    return false;
}

std::string Group::generator_name(int gen) const {
    if (kind_ == GroupKind::Finite) return names_[gen];
    static const char* free_names = "abcdefgh";
    static const char* ab_names = "xyzw";
    if (kind_ == GroupKind::Free && rank_ <= 8) return std::string(1, free_names[gen - 1]);
    if (kind_ == GroupKind::FreeAbelian && rank_ <= 4) return std::string(1, ab_names[gen - 1]);
    return (kind_ == GroupKind::Free ? "g" : "x") + std::to_string(gen);
}

std::string Group::to_string(const Word& nf) const {
    if (nf.empty()) return "1";
    if (kind_ == GroupKind::Finite) return names_[nf[0]];
    std::ostringstream os;
    size_t k = 0;
    bool first = true;
    while (k < nf.size()) {
        size_t j = k;
        while (j < nf.size() && nf[j] == nf[k]) ++j;
        int e = static_cast<int>(j - k) * (nf[k] > 0 ? 1 : -1);
        if (!first) os << " ";
        os << generator_name(std::abs(nf[k]));
        if (e != 1) os << "^" << e;
        first = false;
        k = j;
    }
    return os.str();
}

Word Group::parse_word(const std::string& text) const {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        std::string name = tok;
        long long e = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            name = tok.substr(0, caret);
            try {
                e = std::stoll(tok.substr(caret + 1));
            } catch (...) {
                throw GroupError("bad exponent in token '" + tok + "'");
            }
        }
        int gen = -1;
        int n_syms = alphabet_size();
        for (int g = 1; g <= n_syms; ++g) {
            if (generator_name(g) == name) { gen = g; break; }
        }
        if (gen == -1) throw GroupError("unknown symbol '" + name + "'");
        for (long long k = 0; k < std::abs(e); ++k) w.push_back(e > 0 ? gen : -gen);
    }
    return normal_form(w);
}

// ---------------------------------------------------------------------------
// Subgroup
// ---------------------------------------------------------------------------

Subgroup::Subgroup(Group parent, std::vector<Word> generators) : parent_(std::move(parent)) {
    for (auto& g : generators) gens_.push_back(parent_.normal_form(g));
    switch (parent_.kind()) {
    case GroupKind::Free: build_free(); break;
    case GroupKind::FreeAbelian: build_abelian(); break;
    case GroupKind::Finite: build_finite(); break;
    }
}

void Subgroup::build_free() {
    // Stallings folding. Letters are indexed 0..2r-1 via letter_key-2.
    int r = parent_.rank();
    auto lidx = [](int letter) { return letter_key(letter) - 2; };

    // Bouquet of generator loops at base state 0, as an (s, letter, t) edge
    // list so parallel/conflicting transitions survive until folding.
    int n_states = 1;
    std::vector<std::array<int, 3>> edges;
    for (const auto& g : gens_) {
        if (g.empty()) continue;
        int cur = 0;
        for (size_t k = 0; k < g.size(); ++k) {
            int nxt = (k + 1 == g.size()) ? 0 : n_states++;
            edges.push_back({cur, lidx(g[k]), nxt});
            edges.push_back({nxt, lidx(-g[k]), cur});
            cur = nxt;
        }
    }

    std::vector<int> parent_uf(n_states);
    std::iota(parent_uf.begin(), parent_uf.end(), 0);
    auto uf_find = [&](int x) {
        while (parent_uf[x] != x) x = parent_uf[x] = parent_uf[parent_uf[x]];
        return x;
    };

    // Fold to a fixed point: whenever two edges with the same letter leave one
    // state class toward different classes, merge the targets.
    std::map<std::pair<int, int>, int> delta_map;
    bool changed = true;
    while (changed) {
        changed = false;
        delta_map.clear();
        for (const auto& [s, l, t] : edges) {
            int rs = uf_find(s), rt = uf_find(t);
            auto [it, fresh] = delta_map.try_emplace({rs, l}, rt);
            if (!fresh && uf_find(it->second) != rt) {
                parent_uf[uf_find(it->second)] = rt;
                changed = true;
            }
        }
    }

    // Compact to a deterministic table with the base class at index 0.
    std::map<int, int> remap;
    remap[uf_find(0)] = 0;
    for (int s = 0; s < n_states; ++s) remap.try_emplace(uf_find(s), static_cast<int>(remap.size()));
    delta_.assign(remap.size(), std::vector<int>(2 * r, -1));
    for (const auto& [key, t] : delta_map)
        delta_[remap[uf_find(key.first)]][key.second] = remap[uf_find(t)];
}

bool Subgroup::contains_free(const Word& nf) const {
    auto lidx = [](int letter) { return letter_key(letter) - 2; };
    int cur = 0;
    for (int letter : nf) {
        cur = delta_[cur][lidx(letter)];
        if (cur == -1) return false;
    }
    return cur == 0;
}

namespace {

std::vector<long long> exponent_vector(int rank, const Word& nf) {
    std::vector<long long> e(rank, 0);
    for (int letter : nf) e[std::abs(letter) - 1] += letter > 0 ? 1 : -1;
    return e;
}

} // namespace

void Subgroup::build_abelian() {
    int r = parent_.rank();
    // Columns = generator exponent vectors; reduce to column HNF.
    std::vector<std::vector<BigInt>> cols;
    for (const auto& g : gens_) {
        if (g.empty()) continue;
        auto e = exponent_vector(r, g);
        std::vector<BigInt> c(e.begin(), e.end());
        cols.push_back(std::move(c));
    }
    hnf_.clear();
    int col = 0;
    for (int row = 0; row < r && col < static_cast<int>(cols.size()); ++row) {
        // gcd-eliminate entries of `row` across columns col..end
        while (true) {
            int piv = -1;
            for (int j = col; j < static_cast<int>(cols.size()); ++j)
                if (cols[j][row] != 0 &&
                    (piv == -1 || abs(cols[j][row]) < abs(cols[piv][row])))
                    piv = j;
            if (piv == -1) break;
            std::swap(cols[col], cols[piv]);
            bool clean = true;
            for (int j = col + 1; j < static_cast<int>(cols.size()); ++j) {
                if (cols[j][row] == 0) continue;
                BigInt q = cols[j][row] / cols[col][row];
                for (int k = 0; k < r; ++k) cols[j][k] -= q * cols[col][k];
                if (cols[j][row] != 0) clean = false;
            }
            if (clean) break;
        }
        if (cols[col][row] != 0) ++col;
    }
    cols.resize(col);
    hnf_ = std::move(cols);
}

bool Subgroup::contains_abelian(const Word& nf) const {
    int r = parent_.rank();
    auto ev = exponent_vector(r, nf);
    std::vector<BigInt> v(ev.begin(), ev.end());
    for (const auto& c : hnf_) {
        int row = 0;
        while (row < r && c[row] == 0) ++row;
        if (row == r) continue;
        if (v[row] % c[row] != 0) return false;
        BigInt q = v[row] / c[row];
        for (int k = 0; k < r; ++k) v[k] -= q * c[k];
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

void Subgroup::build_finite() {
    elems_ = {0};
    std::deque<int> work = {0};
    std::vector<int> gen_ids;
    for (const auto& g : gens_) gen_ids.push_back(g.empty() ? 0 : g[0]);
    const auto& table = parent_.table();
    while (!work.empty()) {
        int a = work.front();
        work.pop_front();
        for (int g : gen_ids) {
            for (int prod : {table[a][g], table[g][a]}) {
                if (elems_.insert(prod).second) work.push_back(prod);
            }
        }
    }
}

bool Subgroup::contains(const Word& g) const {
    Word nf = parent_.normal_form(g);
    switch (parent_.kind()) {
    case GroupKind::Free: return contains_free(nf);
    case GroupKind::FreeAbelian: return contains_abelian(nf);
    case GroupKind::Finite: return elems_.count(nf.empty() ? 0 : nf[0]) > 0;
    }
    return false;
}

// ---------------------------------------------------------------------------
// GroupPair / ball / cosets
// ---------------------------------------------------------------------------

GroupPair::GroupPair(Group g, std::vector<Subgroup> periph, std::vector<Word> gens)
    : gamma(std::move(g)), peripherals(std::move(periph)) {
    std::set<Word> seen;
    for (auto& w : gens) {
        Word nf = gamma.normal_form(w);
        if (nf.empty()) throw GroupError("generating set S must not contain the identity");
        if (seen.insert(nf).second) gen_set.push_back(nf);
    }
    for (const auto& s : gen_set) {
        Word inv = gamma.inverse(s);
        if (!seen.count(inv)) throw GroupError("generating set S must be symmetric");
    }
}

int BallIndex::id_of(const Word& nf) const {
    auto it = index.find(nf);
    if (it == index.end()) throw GroupError("element outside explored ball");
    return it->second;
}

BallIndex explore_ball(const Group& g, const std::vector<Word>& gens, int R) {
    BallIndex ball;
    ball.R = R;
    std::map<Word, int> dist;
    std::vector<std::vector<Word>> layers(R + 1);
    Word id_elem;
    dist[id_elem] = 0;
    layers[0].push_back(id_elem);
    for (int d = 0; d < R; ++d) {
        for (const auto& cur : layers[d]) {
            for (const auto& s : gens) {
                Word nxt = g.multiply(cur, s);
                if (!dist.count(nxt)) {
                    dist[nxt] = d + 1;
                    layers[d + 1].push_back(nxt);
                }
            }
        }
    }
    for (int d = 0; d <= R; ++d) {
        std::sort(layers[d].begin(), layers[d].end(),
                  [&](const Word& a, const Word& b) { return g.shortlex_less(a, b); });
        for (auto& w : layers[d]) {
            ball.index[w] = static_cast<int>(ball.elements.size());
            ball.radius.push_back(d);
            ball.elements.push_back(std::move(w));
        }
    }
    return ball;
}

CosetLabel coset_label(const GroupPair& pair, const BallIndex& ball, const Word& g, int i) {
    if (i < 0 || i >= static_cast<int>(pair.peripherals.size()))
        throw GroupError("bad peripheral index");
    Word nf = pair.gamma.normal_form(g);
    if (!ball.contains(nf)) throw GroupError("element outside explored ball");
    const Subgroup& H = pair.peripherals[i];
    Word ginv = pair.gamma.inverse(nf);
    CosetLabel lab;
    lab.peripheral = i;
    bool found = false;
    for (const auto& h : ball.elements) {
        if (!H.contains(pair.gamma.multiply(ginv, h))) continue;
        if (!found || pair.gamma.shortlex_less(h, lab.representative)) {
            lab.representative = h;
            found = true;
        }
    }
    return lab;
}

CosetPartition coset_partition(const GroupPair& pair, const BallIndex& ball, int i) {
    const Subgroup& H = pair.peripherals[i];
    CosetPartition part;
    part.coset_of.assign(ball.elements.size(), -1);
    // Scan in ShortLex order so every coset's first-seen member is its rep.
    std::vector<int> order(ball.elements.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return pair.gamma.shortlex_less(ball.elements[a], ball.elements[b]);
    });
    std::vector<Word> rep_invs;
    for (int v : order) {
        const Word& g = ball.elements[v];
        for (size_t c = 0; c < part.reps.size(); ++c) {
            if (H.contains(pair.gamma.multiply(rep_invs[c], g))) {
                part.coset_of[v] = static_cast<int>(c);
                break;
            }
        }
        if (part.coset_of[v] == -1) {
            part.coset_of[v] = static_cast<int>(part.reps.size());
            part.reps.push_back(g);
            rep_invs.push_back(pair.gamma.inverse(g));
        }
    }
    return part;
}

CompatibilityReport check_compatible(const GroupPair& pair) {
    CompatibilityReport rep;
    rep.certificates.resize(pair.peripherals.size());
    for (size_t i = 0; i < pair.peripherals.size(); ++i) {
        const Subgroup& H = pair.peripherals[i];
        std::vector<int> s_in_h;
        for (size_t s = 0; s < pair.gen_set.size(); ++s)
            if (H.contains(pair.gen_set[s])) s_in_h.push_back(static_cast<int>(s));
        // The subgroup generated by S cap Gamma_i must contain every listed
        // generator of Gamma_i.
        std::vector<Word> sub_gens;
        for (int s : s_in_h) sub_gens.push_back(pair.gen_set[s]);
        Subgroup generated(pair.gamma, sub_gens);
        bool ok = true;
        for (const auto& g : H.generators())
            if (!generated.contains(g)) ok = false;
        if (!ok) {
            rep.compatible = false;
            rep.failing_index = static_cast<int>(i);
            return rep;
        }
        // Bounded BFS over products of S cap Gamma_i for explicit expressions.
        std::map<Word, std::vector<int>> expr;
        expr[Word{}] = {};
        std::deque<Word> work = {Word{}};
        const size_t state_budget = 20000;
        const size_t length_budget = 12; // certificates stay short for desk-scale inputs
        while (!work.empty() && expr.size() < state_budget) {
            Word cur = work.front();
            work.pop_front();
            if (expr[cur].size() >= length_budget) continue;
            for (int s : s_in_h) {
                Word nxt = pair.gamma.multiply(cur, pair.gen_set[s]);
                if (!expr.count(nxt)) {
                    auto word = expr[cur];
                    word.push_back(s);
                    expr[nxt] = word;
                    work.push_back(nxt);
                }
            }
        }
        for (const auto& g : H.generators()) {
            auto it = expr.find(pair.gamma.normal_form(g));
            rep.certificates[i].push_back(it == expr.end() ? std::vector<int>{} : it->second);
        }
    }
    return rep;
}

} // namespace relhyp
