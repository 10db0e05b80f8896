#include "relhyp/filling.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "relhyp/lp.hpp"

namespace relhyp {

namespace {

struct LpInstance {
    std::vector<Simplex> rows;
    std::map<Simplex, int> row_of;
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b, c;
};

// Equality system d(mu) = gamma with mu split as mu+ - mu- (columns 2c, 2c+1)
// and objective sum(mu+ + mu-).
LpInstance assemble(const std::vector<Chain>& cell_boundaries, const Chain& gamma) {
    LpInstance ins;
    auto row_id = [&](const Simplex& s) {
        auto [it, fresh] = ins.row_of.try_emplace(s, static_cast<int>(ins.rows.size()));
        if (fresh) ins.rows.push_back(s);
        return it->second;
    };
    for (const auto& cb : cell_boundaries)
        for (const auto& [s, v] : cb.coef) row_id(s);
    for (const auto& [s, v] : gamma.coef) row_id(s);
    size_t m = ins.rows.size(), n = 2 * cell_boundaries.size();
    ins.A.assign(m, std::vector<Rat>(n, 0));
    ins.b.assign(m, 0);
    ins.c.assign(n, 1);
    for (size_t cell = 0; cell < cell_boundaries.size(); ++cell)
        for (const auto& [s, v] : cell_boundaries[cell].coef) {
            int r = ins.row_of.at(s);
            ins.A[r][2 * cell] = v;
            ins.A[r][2 * cell + 1] = -v;
        }
    for (const auto& [s, v] : gamma.coef) ins.b[ins.row_of.at(s)] = v;
    return ins;
}

void require_cycle(const Chain& gamma) {
    if (gamma.degree >= 1 && !boundary(gamma).is_zero())
        throw GroupError("filling input must be a cycle");
}

} // namespace

FillingResult filling_norm_cells(const std::vector<Chain>& cell_boundaries,
                                 const Chain& gamma) {
    require_cycle(gamma);
    FillingResult res;
    res.cells_considered = static_cast<int>(cell_boundaries.size());
    res.witness = Chain(gamma.degree + 1);
    if (gamma.is_zero()) {
        res.feasible = true;
        res.cell_coeffs.assign(cell_boundaries.size(), 0);
        return res;
    }
    LpInstance ins = assemble(cell_boundaries, gamma);
    LpResult<Rat> lp = simplex_solve<Rat>(ins.A, ins.b, ins.c);
    if (lp.status != LpStatus::Optimal) return res;
    res.feasible = true;
    res.value = lp.objective;
    res.cell_coeffs.resize(cell_boundaries.size());
    Chain check(gamma.degree);
    for (size_t cell = 0; cell < cell_boundaries.size(); ++cell) {
        res.cell_coeffs[cell] = lp.x[2 * cell] - lp.x[2 * cell + 1];
        if (res.cell_coeffs[cell] != 0) {
            Chain t = cell_boundaries[cell];
            t *= res.cell_coeffs[cell];
            check += t;
        }
    }
    if (!(check == gamma)) throw GroupError("LP filling failed verification");
    return res;
}

FillingResult filling_norm_lp(const SComplex& k, const Chain& gamma,
                              const std::set<int>& region) {
    int cell_dim = gamma.degree + 1;
    if (cell_dim >= static_cast<int>(k.simplices.size()))
        throw GroupError("complex has no cells of the required dimension");
    std::vector<Chain> bnds;
    std::vector<const Simplex*> cells;
    for (const auto& s : k.simplices[cell_dim]) {
        if (!region.empty() &&
            !std::all_of(s.begin(), s.end(), [&](int v) { return region.count(v) > 0; }))
            continue;
        Chain c(cell_dim);
        c.add(s, 1);
        bnds.push_back(boundary(c));
        cells.push_back(&s);
    }
    FillingResult res = filling_norm_cells(bnds, gamma);
    if (res.feasible) {
        for (size_t i = 0; i < cells.size(); ++i)
            if (res.cell_coeffs[i] != 0) res.witness.add(*cells[i], res.cell_coeffs[i]);
    }
    return res;
}

FillComparison rational_vs_float_fv(const std::vector<Chain>& cell_boundaries,
                                    const Chain& gamma) {
    FillComparison cmp;
    FillingResult exact = filling_norm_cells(cell_boundaries, gamma);
    cmp.feasible = exact.feasible;
    if (!exact.feasible) return cmp;
    cmp.exact = exact.value;
    if (gamma.is_zero()) return cmp;
    LpInstance ins = assemble(cell_boundaries, gamma);
    auto to_d = [](const Rat& r) { return r.convert_to<double>(); };
    std::vector<std::vector<double>> A(ins.A.size());
    for (size_t i = 0; i < ins.A.size(); ++i)
        for (const auto& v : ins.A[i]) A[i].push_back(to_d(v));
    std::vector<double> b, c;
    for (const auto& v : ins.b) b.push_back(to_d(v));
    for (const auto& v : ins.c) c.push_back(to_d(v));
    LpResult<double> lp = simplex_solve<double>(A, b, c);
    if (lp.status == LpStatus::Optimal) {
        cmp.approx = lp.objective;
        cmp.gap = std::abs(cmp.approx - to_d(cmp.exact));
    } else {
        cmp.approx = -1;
        cmp.gap = -1; // non-convergence flagged
    }
    return cmp;
}

FillComparison rational_vs_float_fv(const SComplex& k, const Chain& gamma) {
    int cell_dim = gamma.degree + 1;
    std::vector<Chain> bnds;
    if (cell_dim < static_cast<int>(k.simplices.size()))
        for (const auto& s : k.simplices[cell_dim]) {
            Chain c(cell_dim);
            c.add(s, 1);
            bnds.push_back(boundary(c));
        }
    return rational_vs_float_fv(bnds, gamma);
}

CircuitDecomposition circuit_decomposition(const Chain& z) {
    if (z.degree != 1) throw GroupError("circuit decomposition needs a 1-chain");
    require_cycle(z);
    // directed residual flow following the sign orientation
    std::map<std::pair<int, int>, Rat> flow;
    for (const auto& [s, lam] : z.coef) {
        if (lam > 0) flow[{s[0], s[1]}] = lam;
        else flow[{s[1], s[0]}] = -lam;
    }
    CircuitDecomposition dec;
    while (!flow.empty()) {
        // walk forward until a vertex repeats; flow conservation (d z = 0)
        // guarantees an outgoing edge at every entered vertex
        int start = flow.begin()->first.first;
        std::vector<int> path = {start};
        std::map<int, int> pos = {{start, 0}};
        while (true) {
            int cur = path.back();
            auto it = flow.lower_bound({cur, INT32_MIN});
            if (it == flow.end() || it->first.first != cur)
                throw GroupError("flow conservation failed (input is not a cycle)");
            int nxt = it->first.second;
            auto seen = pos.find(nxt);
            if (seen != pos.end()) {
                // extract the simple cycle path[seen->second..]
                std::vector<int> cyc(path.begin() + seen->second, path.end());
                cyc.push_back(nxt);
                Rat a = flow.at({cyc[0], cyc[1]});
                for (size_t e = 0; e + 1 < cyc.size(); ++e)
                    a = std::min(a, flow.at({cyc[e], cyc[e + 1]}));
                Chain circuit(1);
                for (size_t e = 0; e + 1 < cyc.size(); ++e) {
                    circuit.add({cyc[e], cyc[e + 1]}, 1);
                    auto f = flow.find({cyc[e], cyc[e + 1]});
                    f->second -= a;
                    if (f->second == 0) flow.erase(f);
                }
                dec.terms.push_back({std::move(circuit), a});
                break;
            }
            pos[nxt] = static_cast<int>(path.size());
            path.push_back(nxt);
        }
    }
    return dec;
}

Chain loop_chain(const std::vector<int>& loop) {
    Chain z(1);
    if (loop.size() < 2) return z;
    for (size_t k = 0; k + 1 < loop.size(); ++k) z.add({loop[k], loop[k + 1]}, 1);
    z.add({loop.back(), loop.front()}, 1);
    return z;
}

std::vector<std::vector<int>> enumerate_circuits(const SimpGraph& g, int max_len,
                                                 size_t budget, bool* exceeded) {
    std::vector<std::vector<int>> out;
    if (exceeded) *exceeded = false;
    std::vector<int> path;
    std::vector<char> on_path(g.num_vertices(), 0);
    // canonical form: smallest vertex first, smaller second endpoint kept
    std::function<void(int)> dfs = [&](int v0) {
        int cur = path.back();
        for (int w : g.neighbors(cur)) {
            if (out.size() >= budget) {
                if (exceeded) *exceeded = true;
                return;
            }
            if (w == v0 && path.size() >= 3) {
                if (path[1] < path.back()) out.push_back(path);
                continue;
            }
            if (w <= v0 || on_path[w]) continue;
            if (static_cast<int>(path.size()) >= max_len) continue;
            on_path[w] = 1;
            path.push_back(w);
            dfs(v0);
            path.pop_back();
            on_path[w] = 0;
        }
    };
    for (int v0 = 0; v0 < g.num_vertices() && out.size() < budget; ++v0) {
        path = {v0};
        on_path.assign(g.num_vertices(), 0);
        on_path[v0] = 1;
        dfs(v0);
    }
    return out;
}

DehnTable dehn_sample(const SimpGraph& skeleton, const std::vector<Chain>& cell_boundaries,
                      int k_max, size_t budget) {
    DehnTable table;
    bool exceeded = false;
    auto circuits = enumerate_circuits(skeleton, k_max, budget, &exceeded);
    table.budget_exceeded = exceeded;
    table.circuits_enumerated = static_cast<int>(circuits.size());
    for (int k = 1; k <= k_max; ++k) table.max_fill[k] = 0;
    for (const auto& loop : circuits) {
        Chain z = loop_chain(loop);
        int len = static_cast<int>(loop.size());
        FillingResult fr = filling_norm_cells(cell_boundaries, z);
        if (!fr.feasible) {
            ++table.infeasible;
            continue;
        }
        for (int k = len; k <= k_max; ++k)
            table.max_fill[k] = std::max(table.max_fill[k], fr.value);
    }
    // smallest dominating linear constant, and total slack under it
    Rat C = 0;
    for (const auto& [k, v] : table.max_fill) C = std::max(C, Rat(v / k));
    for (const auto& [k, v] : table.max_fill) table.linear_fit_residual += C * k - v;
    return table;
}

} // namespace relhyp
