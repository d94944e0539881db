#include "sl2coh/grosshans.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>

namespace sl2coh {

int weight_of(const Monomial& m) {
    return int(m.exps[2]) + int(m.exps[3]) - int(m.exps[0]) - int(m.exps[1]);
}

size_t WeightDecomposition::total_dim() const {
    size_t n = 0;
    for (const auto& [w, s] : spaces) n += s.dim();
    return n;
}

namespace {

/// Kernel of "components outside the predicate vanish" over the basis of m.
Subspace coordinate_slice(const Subspace& m, const std::function<bool(const Monomial&)>& keep) {
    const auto& amb = m.amb();
    auto basis = m.basis_vecs();
    Gf2Rref solver(amb->basis.size(), basis.size());
    Subspace out(amb);
    for (size_t j = 0; j < basis.size(); ++j) {
        BitVec cond(amb->basis.size());
        for (size_t i = 0; i < amb->basis.size(); ++i)
            if (basis[j].get(i) && !keep(amb->basis[i])) cond.set(i);
        BitVec aug(basis.size());
        aug.set(j);
        cond = solver.reduce(std::move(cond), aug);
        if (!cond.any()) {
            BitVec elem(amb->basis.size());
            for (size_t k = 0; k < basis.size(); ++k)
                if (aug.get(k)) elem ^= basis[k];
            out.add(std::move(elem));
        } else {
            solver.add(std::move(cond), std::move(aug));
        }
    }
    return out;
}

}  // namespace

WeightDecomposition weight_decompose(const Subspace& m) {
    WeightDecomposition wd;
    const int D = m.amb()->D;
    for (int w = -D; w <= D; ++w) {
        Subspace s = coordinate_slice(m, [w](const Monomial& mon) { return weight_of(mon) == w; });
        if (s.dim() > 0) wd.spaces.emplace(w, std::move(s));
    }
    if (wd.total_dim() != m.dim())
        throw std::logic_error("module is not a direct sum of torus weight spaces");
    return wd;
}

Subspace grosshans_step(const Subspace& m, int n) {
    if (n < 0) throw std::invalid_argument("grosshans_step: n must be >= 0");
    const auto& amb = m.amb();
    Subspace v = coordinate_slice(m, [n](const Monomial& mon) { return std::abs(weight_of(mon)) <= n; });
    for (int round = 0; round < 50; ++round) {
        auto basis = v.basis_polys();
        if (basis.empty()) return v;
        // columns: (acting monomial, ambient index) pairs with nonzero residue
        std::map<std::pair<Monomial, size_t>, size_t> cols;
        std::vector<std::vector<std::pair<Monomial, size_t>>> rows(basis.size());
        for (size_t j = 0; j < basis.size(); ++j) {
            std::map<Monomial, std::vector<Monomial>> groups;
            Poly co = left_coaction(basis[j]);
            for (const Monomial& t : co.terms()) {
                Monomial acting(4), mfac(4);
                for (size_t i = 0; i < 4; ++i) {
                    mfac.exps[i] = t.exps[i];
                    acting.exps[i] = t.exps[i + 4];
                }
                groups[acting].push_back(std::move(mfac));
            }
            for (auto& [acting, mons] : groups) {
                BitVec w(amb->basis.size());
                for (const Monomial& mon : mons) w.flip(amb->index(mon));
                BitVec res = v.rref().reduce(std::move(w));
                for (size_t i = 0; i < amb->basis.size(); ++i)
                    if (res.get(i)) {
                        auto key = std::make_pair(acting, i);
                        cols.emplace(key, cols.size());
                        rows[j].emplace_back(key);
                    }
            }
        }
        Gf2Rref solver(cols.size(), basis.size());
        Subspace next(amb);
        for (size_t j = 0; j < basis.size(); ++j) {
            BitVec cond(cols.size());
            for (const auto& key : rows[j]) cond.flip(cols.at(key));
            BitVec aug(basis.size());
            aug.set(j);
            cond = solver.reduce(std::move(cond), aug);
            if (!cond.any()) {
                Poly elem = Poly::zero(ctx_g());
                for (size_t k = 0; k < basis.size(); ++k)
                    if (aug.get(k)) elem = elem + basis[k];
                next.add(elem);
            } else {
                solver.add(std::move(cond), std::move(aug));
            }
        }
        if (next.dim() == v.dim()) return v;
        v = std::move(next);
    }
    throw std::logic_error("grosshans_step did not stabilize within 50 rounds");
}

Subspace grosshans_step(ModuleId m, int n, int D) {
    return grosshans_step(module_basis(m, D), n);
}

int grosshans_degree(const Poly& f, const Subspace& m) {
    Poly nf = normal_form(f);
    if (!m.contains(nf)) throw MembershipError("grosshans_degree: element outside module", nf);
    for (int n = 0; n <= 2 * m.amb()->D; ++n)
        if (grosshans_step(m, n).contains(nf)) return n;
    throw std::logic_error("grosshans_degree: no step contains the element");
}

Character character(const Subspace& m) {
    Character c;
    for (const auto& [w, s] : weight_decompose(m).spaces) c[w] = int64_t(s.dim());
    return c;
}

Character character_difference(const Character& big, const Character& small) {
    Character out = big;
    for (const auto& [w, mult] : small) {
        out[w] -= mult;
        if (out[w] == 0) out.erase(w);
    }
    return out;
}

std::optional<std::map<int, int64_t>> nabla_decompose(Character c) {
    std::map<int, int64_t> mults;
    while (!c.empty()) {
        auto top = c.rbegin();  // largest weight present
        int lambda = top->first;
        int64_t mu = top->second;
        if (lambda < 0 || mu < 0) return std::nullopt;
        mults[lambda] += mu;
        for (int w = lambda; w >= -lambda; w -= 2) {
            c[w] -= mu;
            if (c[w] == 0) c.erase(w);
        }
        for (const auto& [w, m] : c)
            if (m < 0 && w >= lambda) return std::nullopt;
    }
    for (const auto& [w, m] : mults)
        if (m < 0) return std::nullopt;
    return mults;
}

namespace {

struct GradedPieces {
    std::vector<int> piece_of_row;   // per rep, its filtration step n
    std::vector<BitVec> reps;        // canonical complement representatives
    std::vector<Subspace> steps;     // steps[n]
};

GradedPieces graded_pieces(const Subspace& base) {
    GradedPieces gp;
    std::vector<size_t> prev_pivots;
    for (int n = 0;; ++n) {
        Subspace s = grosshans_step(base, n);
        auto rows = s.rref().sorted_rows();
        for (const auto& [pivot, row] : rows) {
            if (std::find(prev_pivots.begin(), prev_pivots.end(), pivot) == prev_pivots.end()) {
                gp.reps.push_back(*row);
                gp.piece_of_row.push_back(n);
            }
        }
        prev_pivots.clear();
        for (const auto& [pivot, row] : rows) prev_pivots.push_back(pivot);
        gp.steps.push_back(s);
        if (s.dim() == base.dim()) break;
        if (n > 2 * base.amb()->D) throw std::logic_error("Grosshans filtration failed to saturate");
    }
    return gp;
}

}  // namespace

HullReport hull_check(int D) {
    const Ctx& cg = ctx_g();
    Poly ad = Poly::var(cg, "a") * Poly::var(cg, "d");
    Poly abcd = Poly::var(cg, "a") * Poly::var(cg, "b") * Poly::var(cg, "c") * Poly::var(cg, "d");
    Subspace mT = module_basis(ModuleId::kG_mod_T, D);
    Subspace mN = module_basis(ModuleId::kG_mod_N, D);
    Subspace mN_lower = module_basis(ModuleId::kG_mod_N, D - 2);

    HullReport rep;
    rep.ad_square_drops = grosshans_degree(normal_form(ad * ad + abcd), mT) == 2;

    auto dims_of = [](const Subspace& base) {
        std::map<int, int64_t> out;
        GradedPieces gp = graded_pieces(base);
        for (size_t i = 0; i < gp.reps.size(); ++i) out[gp.piece_of_row[i]]++;
        return out;
    };
    auto dT = dims_of(mT), dN = dims_of(mN), dNl = dims_of(mN_lower);
    rep.graded_dims_ok = true;
    for (int n = 0; n <= 2 * D; n += 2) {
        int64_t t = dT.count(n) ? dT[n] : 0;
        int64_t nn = dN.count(n) ? dN[n] : 0;
        int64_t nl = (n >= 2 && dNl.count(n - 2)) ? dNl[n - 2] : 0;
        if (t == 0 && nn == 0 && nl == 0) continue;
        rep.graded_dims.push_back({n, t, nn, nl});
        if (t != nn + nl) rep.graded_dims_ok = false;
    }

    // squares of graded classes of k[G/T] land in the image of gr k[G/N]
    rep.purely_inseparable = true;
    GradedPieces gpT = graded_pieces(mT);
    for (size_t i = 0; i < gpT.reps.size(); ++i) {
        Poly f = mT.amb()->to_poly(gpT.reps[i]);
        if (2 * f.degree() > D) continue;
        int n = gpT.piece_of_row[i];
        Poly f2 = normal_form(f * f);
        Subspace target = mN.intersect(grosshans_step(mT, 2 * n));
        if (2 * n >= 2) target = target.sum_with(grosshans_step(mT, 2 * n - 2));
        if (!target.contains(f2)) rep.purely_inseparable = false;
    }
    return rep;
}

Comodule gr_comodule(ModuleId m, int D) {
    if (m != ModuleId::gr_kG_mod_N && m != ModuleId::gr_kG_mod_T)
        throw std::invalid_argument("gr_comodule: expects a gr module id");
    ModuleId base_id = (m == ModuleId::gr_kG_mod_N) ? ModuleId::kG_mod_N : ModuleId::kG_mod_T;
    Subspace base = module_basis(base_id, D);
    const auto& amb = base.amb();
    GradedPieces gp = graded_pieces(base);

    // order: ascending piece, then insertion (pivot) order inside a piece
    std::vector<size_t> order(gp.reps.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t x, size_t y) { return gp.piece_of_row[x] < gp.piece_of_row[y]; });

    Gf2Rref solver(amb->basis.size(), gp.reps.size());
    for (size_t k = 0; k < order.size(); ++k) {
        BitVec aug(gp.reps.size());
        aug.set(k);
        if (!solver.add(gp.reps[order[k]], std::move(aug)))
            throw std::logic_error("gr_comodule: dependent representatives");
    }

    Comodule com;
    com.name = to_string(m);
    com.rho.resize(order.size());
    for (size_t k = 0; k < order.size(); ++k) {
        Poly rep = amb->to_poly(gp.reps[order[k]]);
        com.labels.push_back("[" + format(rep) + "]");
        com.degrees.push_back(gp.piece_of_row[order[k]]);
    }
    for (size_t k = 0; k < order.size(); ++k) {
        int n = gp.piece_of_row[order[k]];
        Poly rep = amb->to_poly(gp.reps[order[k]]);
        std::map<Monomial, std::vector<Monomial>> groups;
        Poly co = left_coaction(rep);
        for (const Monomial& t : co.terms()) {
            Monomial acting(4), mfac(4);
            for (size_t i = 0; i < 4; ++i) {
                mfac.exps[i] = t.exps[i];
                acting.exps[i] = t.exps[i + 4];
            }
            groups[acting].push_back(std::move(mfac));
        }
        std::map<size_t, std::vector<Monomial>> acting_of;
        for (auto& [acting, mons] : groups) {
            BitVec w(amb->basis.size());
            for (const Monomial& mon : mons) w.flip(amb->index(mon));
            BitVec aug(gp.reps.size());
            BitVec res = solver.reduce(std::move(w), aug);
            if (res.any())
                throw MembershipError("gr coaction escapes the module", amb->to_poly(res));
            for (size_t j = 0; j < order.size(); ++j) {
                if (!aug.get(j)) continue;
                int nj = gp.piece_of_row[order[j]];
                if (nj > n)
                    throw std::logic_error("gr coaction raises the filtration step");
                if (nj == n) acting_of[j].push_back(acting);
                // nj < n: off-diagonal part, dropped in the associated graded
            }
        }
        for (auto& [j, mons] : acting_of) {
            Poly acting(ctx_g(), std::move(mons));
            if (!acting.is_zero()) com.rho[k].emplace_back(j, std::move(acting));
        }
    }
    return com;
}

}  // namespace sl2coh
