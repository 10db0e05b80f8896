#include "relhyp/paircomplex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace relhyp {

// ---------------------------------------------------------------------------
// parser

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw GroupError("syntax error at offset " + std::to_string(i) + ": " + what);
    }
    bool try_lit(const std::string& lit) {
        skip_ws();
        if (s.compare(i, lit.size(), lit) != 0) return false;
        i += lit.size();
        return true;
    }
    void expect(const std::string& lit) {
        if (!try_lit(lit)) fail("expected '" + lit + "'");
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    std::string ident() {
        skip_ws();
        size_t start = i;
        auto ok = [&](char c, bool first) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                   (!first && std::isdigit(static_cast<unsigned char>(c)));
        };
        while (i < s.size() && ok(s[i], i == start)) ++i;
        if (i == start) fail("expected identifier");
        return s.substr(start, i - start);
    }
    long integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected integer");
        return std::stol(s.substr(start, i - start));
    }
};

using Atoms = std::vector<RelativePresentation::Atom>;

Atoms invert(Atoms w) {
    std::reverse(w.begin(), w.end());
    for (auto& [sym, e] : w) e = -e;
    return w;
}

Atoms parse_word(Cursor& c);

// one factor: `sym`, `sym^k`, or `[w1,w2]`, expanded to exponent +-1 atoms
Atoms parse_factor(Cursor& c) {
    if (c.peek() == '[') {
        c.expect("[");
        Atoms u = parse_word(c);
        c.expect(",");
        Atoms v = parse_word(c);
        c.expect("]");
        Atoms out = u;
        out.insert(out.end(), v.begin(), v.end());
        Atoms iu = invert(u), iv = invert(v);
        out.insert(out.end(), iu.begin(), iu.end());
        out.insert(out.end(), iv.begin(), iv.end());
        return out;
    }
    std::string sym = c.ident();
    long e = 1;
    if (c.try_lit("^")) e = c.integer();
    Atoms out;
    for (long k = 0; k < std::labs(e); ++k) out.emplace_back(sym, e < 0 ? -1 : 1);
    return out;
}

// juxtaposition of factors until a delimiter
Atoms parse_word(Cursor& c) {
    Atoms out;
    while (true) {
        char p = c.peek();
        if (p == ',' || p == ';' || p == ']' || p == '}' || p == '\0') return out;
        Atoms f = parse_factor(c);
        out.insert(out.end(), f.begin(), f.end());
    }
}

} // namespace

RelativePresentation parse_relative_presentation(const std::string& text) {
    Cursor c{text};
    RelativePresentation pres;
    c.expect("rel-pres");
    c.expect("{");

    c.expect("gens");
    c.expect(":");
    while (c.peek() != ';') {
        pres.gens.push_back(c.ident());
        if (c.peek() == ',') c.expect(",");
    }
    c.expect(";");

    c.expect("peripherals");
    c.expect(":");
    while (c.peek() != ';') {
        c.ident(); // peripheral name, informational only
        c.expect("=");
        c.expect("<");
        std::vector<std::string> pg;
        while (c.peek() != '>') {
            pg.push_back(c.ident());
            if (c.peek() == ',') c.expect(",");
        }
        c.expect(">");
        pres.peripheral_gens.push_back(std::move(pg));
        if (c.peek() == ',') c.expect(",");
    }
    c.expect(";");

    c.expect("relators");
    c.expect(":");
    while (c.peek() != ';') {
        pres.relators.push_back(parse_word(c));
        if (pres.relators.back().empty()) c.fail("empty relator");
        if (c.peek() == ',') c.expect(",");
    }
    c.expect(";");

    c.expect("}");
    c.skip_ws();
    if (c.i != text.size()) c.fail("trailing input");
    return pres;
}

namespace {

// single-letter word for a symbol, matched against generator / element names
Word symbol_word(const std::string& sym, int exp, const Group& g) {
    if (g.kind() == GroupKind::Finite) {
        for (int id = 1; id < g.order(); ++id)
            if (g.generator_name(id) == sym)
                return exp > 0 ? Word{id} : g.inverse({id});
    } else {
        for (int k = 1; k <= g.rank(); ++k)
            if (g.generator_name(k) == sym) return {exp > 0 ? k : -k};
    }
    throw GroupError("unknown generator symbol '" + sym + "'");
}

} // namespace

Word relator_word(const RelativePresentation& pres, size_t relator_index, const Group& g) {
    Word w;
    for (const auto& [sym, e] : pres.relators.at(relator_index)) {
        Word s = symbol_word(sym, e, g);
        w = g.multiply(w, s);
    }
    return w;
}

// ---------------------------------------------------------------------------
// CombComplex2

int CombComplex2::add_vertex(std::string label) {
    vlabels.push_back(std::move(label));
    return num_vertices++;
}

int CombComplex2::add_edge(int u, int v, std::string label) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices || u == v)
        throw GroupError("bad edge endpoints");
    edges.push_back({u, v, std::move(label)});
    return static_cast<int>(edges.size()) - 1;
}

int CombComplex2::add_cell_loop(const std::vector<int>& loop, std::string kind) {
    if (loop.size() < 2 || loop.front() != loop.back())
        throw GroupError("attaching loop must be closed");
    std::map<std::pair<int, int>, int> first_edge;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        first_edge.try_emplace({edges[e].u, edges[e].v}, e);
        first_edge.try_emplace({edges[e].v, edges[e].u}, e);
    }
    Cell2 cell;
    cell.kind = std::move(kind);
    for (size_t k = 0; k + 1 < loop.size(); ++k) {
        auto it = first_edge.find({loop[k], loop[k + 1]});
        if (it == first_edge.end()) throw GroupError("attaching loop step has no edge");
        cell.edges.push_back(it->second);
        cell.signs.push_back(edges[it->second].u == loop[k] ? 1 : -1);
        cell.vertices.push_back(loop[k]);
    }
    cells.push_back(std::move(cell));
    return static_cast<int>(cells.size()) - 1;
}

SimpGraph CombComplex2::simple_skeleton() const {
    SimpGraph g(num_vertices);
    for (const auto& e : edges)
        if (!g.has_edge(e.u, e.v)) g.add_edge(e.u, e.v);
    return g;
}

std::vector<Chain> CombComplex2::cell_boundary_chains() const {
    std::vector<Chain> out;
    for (const auto& cell : cells) {
        Chain b(1);
        for (size_t k = 0; k < cell.edges.size(); ++k) {
            const Edge& e = edges[cell.edges[k]];
            int from = cell.signs[k] > 0 ? e.u : e.v;
            int to = cell.signs[k] > 0 ? e.v : e.u;
            b.add({from, to}, 1);
        }
        out.push_back(std::move(b));
    }
    return out;
}

CombComplex2 CombComplex2::from_graph(const SimpGraph& g) {
    CombComplex2 c;
    for (int v = 0; v < g.num_vertices(); ++v) c.add_vertex(g.label(v));
    for (auto [u, v] : g.edges()) c.add_edge(u, v);
    return c;
}

// ---------------------------------------------------------------------------
// relative Cayley complex

RelCayleyComplex build_relative_cayley_complex(const RelativePresentation& pres,
                                               const GroupPair& pair, int R) {
    const Group& g = pair.gamma;
    RelCayleyComplex k;
    k.R = R;
    k.ball = explore_ball(g, pair.gen_set, R);
    k.copies = std::max<int>(1, static_cast<int>(pair.peripherals.size()));
    const int n = static_cast<int>(k.ball.elements.size());
    CombComplex2& cx = k.complex;

    for (int i = 0; i < k.copies; ++i)
        for (int b = 0; b < n; ++b)
            cx.add_vertex(g.to_string(k.ball.elements[b]) + "|" + std::to_string(i));

    // horizontal edges: the Cayley edges of the ball, once per copy
    std::vector<std::pair<int, int>> base_edges;
    std::vector<std::string> base_labels;
    {
        std::set<std::pair<int, int>> seen;
        for (int b = 0; b < n; ++b)
            for (const Word& s : pair.gen_set) {
                Word y = g.multiply(k.ball.elements[b], s);
                if (!k.ball.contains(y)) continue;
                int t = k.ball.id_of(y);
                auto key = std::minmax(b, t);
                if (b == t || !seen.insert(key).second) continue;
                base_edges.push_back(key);
                base_labels.push_back(g.to_string(s));
            }
    }
    for (int i = 0; i < k.copies; ++i)
        for (size_t e = 0; e < base_edges.size(); ++e)
            cx.add_edge(k.vid(base_edges[e].first, i), k.vid(base_edges[e].second, i),
                        base_labels[e]);
    // vertical edges
    for (int b = 0; b < n; ++b)
        for (int i = 0; i < k.copies; ++i)
            for (int j = i + 1; j < k.copies; ++j)
                cx.add_edge(k.vid(b, i), k.vid(b, j), "vert");

    // relator cells at every basepoint whose traced loop stays inside the ball
    for (size_t ri = 0; ri < pres.relators.size(); ++ri) {
        if (!g.is_identity(relator_word(pres, ri, g)))
            throw GroupError("relator does not normalize to the identity");
        std::vector<Word> steps;
        for (const auto& [sym, e] : pres.relators[ri]) {
            Word s = g.normal_form(symbol_word(sym, e, g));
            if (std::find(pair.gen_set.begin(), pair.gen_set.end(), s) ==
                pair.gen_set.end())
                throw GroupError("relator letter '" + sym + "' is not in S");
            steps.push_back(std::move(s));
        }
        for (int b = 0; b < n; ++b) {
            std::vector<int> ball_loop = {b};
            Word cur = k.ball.elements[b];
            bool inside = true;
            for (const Word& s : steps) {
                cur = g.multiply(cur, s);
                if (!k.ball.contains(cur)) {
                    inside = false;
                    break;
                }
                ball_loop.push_back(k.ball.id_of(cur));
            }
            if (!inside) continue;
            for (int i = 0; i < k.copies; ++i) {
                std::vector<int> loop;
                for (int bv : ball_loop) loop.push_back(k.vid(bv, i));
                cx.add_cell_loop(loop, "relator");
            }
        }
    }

    // rectangular cells: one per horizontal edge and copy pair
    for (size_t e = 0; e < base_edges.size(); ++e) {
        auto [u, v] = base_edges[e];
        for (int i = 0; i < k.copies; ++i)
            for (int j = i + 1; j < k.copies; ++j)
                cx.add_cell_loop(
                    {k.vid(u, i), k.vid(v, i), k.vid(v, j), k.vid(u, j), k.vid(u, i)},
                    "rectangle");
    }
    return k;
}

CombComplex2 build_quotient_complex(const RelCayleyComplex& k, const GroupPair& pair) {
    const int n = static_cast<int>(k.ball.elements.size());
    CombComplex2 out;
    // new vertex per (copy, coset)
    std::vector<std::vector<int>> vmap(k.copies, std::vector<int>(n, -1));
    for (int i = 0; i < k.copies; ++i) {
        CosetPartition part = coset_partition(pair, k.ball, i);
        std::map<int, int> coset_vertex;
        for (int b = 0; b < n; ++b) {
            auto [it, fresh] = coset_vertex.try_emplace(part.coset_of[b], -1);
            if (fresh)
                it->second = out.add_vertex(
                    "P" + std::to_string(i) + ":" +
                    pair.gamma.to_string(part.reps[part.coset_of[b]]));
            vmap[i][b] = it->second;
        }
    }
    auto old_copy = [&](int v) { return v / n; };
    auto old_ball = [&](int v) { return v % n; };
    auto mapped = [&](int v) { return vmap[old_copy(v)][old_ball(v)]; };

    // edges: horizontal edges inside one coset collapse; everything else stays
    std::vector<int> emap(k.complex.edges.size(), -1);
    for (size_t e = 0; e < k.complex.edges.size(); ++e) {
        const auto& ed = k.complex.edges[e];
        int mu = mapped(ed.u), mv = mapped(ed.v);
        bool horizontal = old_copy(ed.u) == old_copy(ed.v);
        if (horizontal && mu == mv) continue; // collapsed
        emap[e] = out.add_edge(mu, mv, ed.label);
    }

    // cells: drop collapsed steps; drop cells whose whole boundary collapsed
    for (const auto& cell : k.complex.cells) {
        CombComplex2::Cell2 nc;
        nc.kind = cell.kind;
        for (size_t s = 0; s < cell.edges.size(); ++s) {
            if (emap[cell.edges[s]] < 0) continue;
            nc.edges.push_back(emap[cell.edges[s]]);
            nc.signs.push_back(cell.signs[s]);
            nc.vertices.push_back(mapped(cell.vertices[s]));
        }
        if (nc.edges.empty()) continue;
        out.cells.push_back(std::move(nc));
    }
    return out;
}

std::vector<std::vector<int>> fineness_probe(const CombComplex2& g, int edge, int L) {
    if (L < 3) throw GroupError("fineness_probe requires L >= 3");
    if (edge < 0 || edge >= static_cast<int>(g.edges.size()))
        throw GroupError("bad edge id");
    std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        if (g.edges[e].u == g.edges[e].v) continue;
        adj[g.edges[e].u].push_back({e, g.edges[e].v});
        adj[g.edges[e].v].push_back({e, g.edges[e].u});
    }
    const int a = g.edges[edge].u, b = g.edges[edge].v;
    std::vector<std::vector<int>> out;
    std::vector<int> path = {edge};
    std::vector<char> used(g.num_vertices, 0);
    used[a] = used[b] = 1;
    // simple paths b -> a avoiding `edge`; each circuit appears exactly once
    // because the traversal direction through `edge` is fixed
    auto dfs = [&](auto&& self, int cur) -> void {
        for (auto [e, nxt] : adj[cur]) {
            if (e == edge) continue;
            if (nxt == a) {
                path.push_back(e);
                out.push_back(path);
                path.pop_back();
                continue;
            }
            if (used[nxt] || static_cast<int>(path.size()) >= L - 1) continue;
            used[nxt] = 1;
            path.push_back(e);
            self(self, nxt);
            path.pop_back();
            used[nxt] = 0;
        }
    };
    dfs(dfs, b);
    return out;
}

} // namespace relhyp
