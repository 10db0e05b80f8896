#include "relhyp/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace relhyp {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// pair files
// ---------------------------------------------------------------------------

static std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

static Group make_cyclic(int n) {
    if (n < 1) throw GroupError("pair file: cyclic order must be positive");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    names.push_back("e");
    for (int a = 1; a < n; ++a) names.push_back("t" + std::to_string(a));
    return Group::finite(std::move(table), std::move(names));
}

GroupPair parse_pair(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    bool have_group = false;
    Group g = Group::free_group(1);
    std::vector<std::vector<Word>> peripheral_gens;
    std::vector<Word> gens;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto colon = line.find(':');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (colon == std::string::npos)
            throw GroupError("pair file: expected 'key: value' in \"" + line + "\"");
        const std::string key = line.substr(0, colon);
        const std::string val = line.substr(colon + 1);
        const auto keyw = split_ws(key);
        if (keyw.size() != 1) throw GroupError("pair file: bad key \"" + key + "\"");
        if (keyw[0] == "group") {
            auto w = split_ws(val);
            if (w.empty()) throw GroupError("pair file: empty group spec");
            if (w[0] == "free" && w.size() == 2) {
                g = Group::free_group(std::stoi(w[1]));
            } else if (w[0] == "abelian" && w.size() == 2) {
                g = Group::free_abelian(std::stoi(w[1]));
            } else if (w[0] == "s3" && w.size() == 1) {
                g = Group::symmetric3();
            } else if (w[0] == "cyclic" && w.size() == 2) {
                g = make_cyclic(std::stoi(w[1]));
            } else {
                throw GroupError("pair file: unknown group spec \"" + val + "\"");
            }
            have_group = true;
        } else if (keyw[0] == "peripheral") {
            if (!have_group) throw GroupError("pair file: group must come first");
            std::vector<Word> pg;
            for (const auto& tok : split_ws(val)) pg.push_back(g.parse_word(tok));
            peripheral_gens.push_back(std::move(pg));
        } else if (keyw[0] == "gens") {
            if (!have_group) throw GroupError("pair file: group must come first");
            for (const auto& tok : split_ws(val)) gens.push_back(g.parse_word(tok));
        } else {
            throw GroupError("pair file: unknown key \"" + keyw[0] + "\"");
        }
    }
    if (!have_group) throw GroupError("pair file: missing group line");
    if (peripheral_gens.empty())
        throw GroupError("pair file: at least one peripheral required");
    if (gens.empty()) {
        if (g.order() > 0) {
            for (int e = 1; e < g.order(); ++e) gens.push_back(Word{e});
        } else {
            for (int r = 1; r <= g.rank(); ++r) {
                gens.push_back(Word{r});
                gens.push_back(Word{-r});
            }
        }
    } else {
        // generating sets must be symmetric; close under inverses
        std::vector<Word> sym = gens;
        for (const auto& w : gens) {
            Word inv = g.inverse(w);
            bool seen = false;
            for (const auto& u : sym) seen = seen || u == inv;
            if (!seen) sym.push_back(std::move(inv));
        }
        gens = std::move(sym);
    }
    std::vector<Subgroup> periph;
    for (auto& pg : peripheral_gens) periph.emplace_back(g, std::move(pg));
    return GroupPair(std::move(g), std::move(periph), std::move(gens));
}

GroupPair load_pair(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw GroupError("cannot open pair file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_pair(ss.str());
}

// ---------------------------------------------------------------------------
// graphs
// ---------------------------------------------------------------------------

void write_graph_jsonl(std::ostream& os, const SimpGraph& g,
                       const std::vector<int>& heights) {
    for (int v = 0; v < g.num_vertices(); ++v) {
        json rec{{"type", "vertex"}, {"id", v}};
        if (!g.label(v).empty()) rec["label"] = g.label(v);
        if (!heights.empty()) rec["h"] = heights[v];
        os << rec.dump() << "\n";
    }
    for (const auto& [u, v] : g.edges())
        os << json{{"type", "edge"}, {"u", u}, {"v", v}}.dump() << "\n";
}

LoadedGraph read_graph_jsonl(std::istream& is) {
    LoadedGraph out;
    bool any_height = false;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int max_vertex = -1;
    std::vector<std::pair<int, int>> heights;
    std::vector<std::pair<int, std::string>> labels;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json rec = json::parse(line);
        const std::string type = rec.at("type");
        if (type == "vertex") {
            int id = rec.at("id");
            max_vertex = std::max(max_vertex, id);
            if (rec.contains("label")) labels.emplace_back(id, rec["label"]);
            if (rec.contains("h")) {
                heights.emplace_back(id, rec["h"]);
                any_height = true;
            }
        } else if (type == "edge") {
            int u = rec.at("u"), v = rec.at("v");
            max_vertex = std::max({max_vertex, u, v});
            edges.emplace_back(u, v);
        } else {
            throw GroupError("graph jsonl: unknown record type \"" + type + "\"");
        }
    }
    out.graph = SimpGraph(max_vertex + 1);
    for (const auto& [id, l] : labels) out.graph.set_label(id, l);
    for (const auto& [u, v] : edges) out.graph.add_edge(u, v);
    if (any_height) {
        out.heights.assign(max_vertex + 1, 0);
        for (const auto& [id, h] : heights) out.heights[id] = h;
    }
    return out;
}

LoadedGraph load_graph_jsonl(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw GroupError("cannot open graph file: " + path);
    return read_graph_jsonl(f);
}

// ---------------------------------------------------------------------------
// complexes
// ---------------------------------------------------------------------------

void write_complex_jsonl(std::ostream& os, const SComplex& k) {
    os << json{{"type", "complex"}, {"d_max", k.d_max}}.dump() << "\n";
    for (int v = 0; v < k.num_vertices(); ++v) {
        json rec{{"type", "vertex"}, {"id", v}};
        if (!k.heights.empty()) rec["h"] = k.heights[v];
        os << rec.dump() << "\n";
    }
    for (int d = 1; d < static_cast<int>(k.simplices.size()); ++d)
        for (const auto& s : k.simplices[d])
            os << json{{"type", "simplex"}, {"verts", s}}.dump() << "\n";
}

void write_cell_complex_jsonl(std::ostream& os, const SimpGraph& skeleton,
                              const std::vector<Chain>& cells) {
    os << json{{"type", "complex"}, {"d_max", 2}}.dump() << "\n";
    for (int v = 0; v < skeleton.num_vertices(); ++v)
        os << json{{"type", "vertex"}, {"id", v}}.dump() << "\n";
    for (const auto& [u, v] : skeleton.edges())
        os << json{{"type", "edge"}, {"u", u}, {"v", v}}.dump() << "\n";
    for (const auto& c : cells) {
        json terms = json::array();
        for (const auto& [s, r] : c.coef)
            terms.push_back(json::array(
                {s, numerator(r).str(), denominator(r).str()}));
        os << json{{"type", "cell"}, {"terms", terms}}.dump() << "\n";
    }
}

LoadedComplex read_complex_jsonl(std::istream& is) {
    LoadedComplex out;
    int d_max = 2;
    int max_vertex = -1;
    bool any_height = false;
    std::vector<std::pair<int, int>> heights;
    std::vector<Simplex> simplices;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json rec = json::parse(line);
        const std::string type = rec.at("type");
        if (type == "complex") {
            d_max = rec.at("d_max");
        } else if (type == "vertex") {
            int id = rec.at("id");
            max_vertex = std::max(max_vertex, id);
            if (rec.contains("h")) {
                heights.emplace_back(id, rec["h"]);
                any_height = true;
            }
        } else if (type == "simplex") {
            Simplex s = rec.at("verts").get<Simplex>();
            std::sort(s.begin(), s.end());
            for (int v : s) max_vertex = std::max(max_vertex, v);
            simplices.push_back(std::move(s));
        } else if (type == "edge") {
            int u = rec.at("u"), v = rec.at("v");
            max_vertex = std::max({max_vertex, u, v});
            edges.emplace_back(u, v);
        } else if (type == "cell") {
            Chain c(1);
            for (const auto& term : rec.at("terms")) {
                Simplex s = term.at(0).get<Simplex>();
                const Rat r(BigInt(term.at(1).get<std::string>()),
                            BigInt(term.at(2).get<std::string>()));
                for (int v : s) max_vertex = std::max(max_vertex, v);
                c.add(s, r);
            }
            out.cells.push_back(std::move(c));
        } else {
            throw GroupError("complex jsonl: unknown record type \"" + type + "\"");
        }
    }
    const int n = max_vertex + 1;
    out.complex.d_max = d_max;
    out.complex.simplices.assign(d_max + 1, {});
    for (int v = 0; v < n; ++v) out.complex.simplices[0].push_back({v});
    for (auto& s : simplices) {
        const int d = static_cast<int>(s.size()) - 1;
        if (d < 1 || d > d_max)
            throw GroupError("complex jsonl: simplex dimension out of range");
        out.complex.simplices[d].push_back(std::move(s));
    }
    for (int d = 1; d <= d_max; ++d)
        std::sort(out.complex.simplices[d].begin(), out.complex.simplices[d].end());
    if (any_height) {
        out.complex.heights.assign(n, 0);
        for (const auto& [id, h] : heights) out.complex.heights[id] = h;
    }
    out.skeleton = SimpGraph(n);
    if (d_max >= 1) {
        for (const auto& s : out.complex.simplices[1]) out.skeleton.add_edge(s[0], s[1]);
        for (const auto& [u, v] : edges) {
            out.skeleton.add_edge(u, v);
            Simplex e{std::min(u, v), std::max(u, v)};
            auto& ones = out.complex.simplices[1];
            if (!std::binary_search(ones.begin(), ones.end(), e)) {
                ones.push_back(e);
                std::sort(ones.begin(), ones.end());
            }
        }
    }
    return out;
}

LoadedComplex load_complex_jsonl(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw GroupError("cannot open complex file: " + path);
    return read_complex_jsonl(f);
}

// ---------------------------------------------------------------------------
// chains
// ---------------------------------------------------------------------------

std::string chain_to_json(const Chain& c) {
    json terms = json::array();
    for (const auto& [s, r] : c.coef)
        terms.push_back(json::array({s, numerator(r).str(), denominator(r).str()}));
    return json{{"degree", c.degree}, {"terms", terms}}.dump();
}

Chain chain_from_json(const std::string& text) {
    json rec = json::parse(text);
    Chain c(rec.at("degree").get<int>());
    for (const auto& term : rec.at("terms")) {
        Simplex s = term.at(0).get<Simplex>();
        const Rat r(BigInt(term.at(1).get<std::string>()),
                    BigInt(term.at(2).get<std::string>()));
        c.add(s, r);
    }
    return c;
}

Chain load_chain_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw GroupError("cannot open chain file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return chain_from_json(ss.str());
}

} // namespace relhyp
