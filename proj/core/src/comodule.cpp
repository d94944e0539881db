#include "sl2coh/comodule.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <sstream>

#include "sl2coh/grosshans.hpp"

namespace sl2coh {

std::string to_string(ModuleId m) {
    switch (m) {
        case ModuleId::kG: return "kG";
        case ModuleId::kG_mod_T: return "kG_mod_T";
        case ModuleId::kG_mod_N: return "kG_mod_N";
        case ModuleId::kU_backslash_G: return "kU_backslash_G";
        case ModuleId::quotient: return "quotient";
        case ModuleId::gr_kG_mod_N: return "gr_kG_mod_N";
        case ModuleId::gr_kG_mod_T: return "gr_kG_mod_T";
    }
    return "?";
}

std::string to_string(const GroupScheme& g) {
    switch (g.kind) {
        case SchemeKind::U_left: return "U_left";
        case SchemeKind::T_left: return "T_left";
        case SchemeKind::N_left: return "N_left";
        case SchemeKind::G_left: return "G_left";
        case SchemeKind::Gr_left: return "Gr_left(" + std::to_string(g.r) + ")";
        case SchemeKind::T_right: return "T_right";
        case SchemeKind::N_right: return "N_right";
    }
    return "?";
}

Ambient::Ambient(int D) : D(D), basis(straightened_basis(D)) {}

size_t Ambient::index(const Monomial& m) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it != basis.end() && *it == m) return size_t(it - basis.begin());
    return npos;
}

BitVec Ambient::to_vec(const Poly& p) const {
    BitVec v(basis.size());
    for (const Monomial& m : p.terms()) {
        size_t i = index(m);
        if (i == npos)
            throw std::out_of_range("polynomial outside ambient basis (degree " +
                                    std::to_string(m.degree(*p.ctx())) + " > " + std::to_string(D) + "?)");
        v.flip(i);
    }
    return v;
}

Poly Ambient::to_poly(const BitVec& v) const {
    std::vector<Monomial> terms;
    for (size_t i = 0; i < basis.size(); ++i)
        if (v.get(i)) terms.push_back(basis[i]);
    return Poly(ctx_g(), std::move(terms));
}

AmbientPtr ambient(int D) {
    static std::mutex mu;
    static std::map<int, AmbientPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(D);
    if (it != cache.end()) return it->second;
    auto amb = std::make_shared<const Ambient>(D);
    cache[D] = amb;
    return amb;
}

std::vector<Poly> Subspace::basis_polys() const {
    std::vector<Poly> out;
    for (const auto& [pivot, row] : rref_.sorted_rows()) out.push_back(amb_->to_poly(*row));
    return out;
}

std::vector<BitVec> Subspace::basis_vecs() const {
    std::vector<BitVec> out;
    for (const auto& [pivot, row] : rref_.sorted_rows()) out.push_back(*row);
    return out;
}

bool Subspace::operator==(const Subspace& other) const {
    if (amb_->D != other.amb_->D || dim() != other.dim()) return false;
    auto a = rref_.sorted_rows(), b = other.rref_.sorted_rows();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].first != b[i].first || !(*a[i].second == *b[i].second)) return false;
    return true;
}

bool Subspace::contains_subspace(const Subspace& other) const {
    for (const auto& [pivot, row] : other.rref_.sorted_rows())
        if (!rref_.contains(*row)) return false;
    return true;
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (amb_->D != other.amb_->D) throw std::invalid_argument("intersect: ambient mismatch");
    auto w = other.basis_vecs();
    Gf2Rref phi(amb_->basis.size(), w.size());
    Subspace out(amb_);
    for (size_t j = 0; j < w.size(); ++j) {
        BitVec res = rref_.reduce(w[j]);
        BitVec aug(w.size());
        aug.set(j);
        res = phi.reduce(std::move(res), aug);
        if (!res.any()) {
            BitVec elem(amb_->basis.size());
            for (size_t k = 0; k < w.size(); ++k)
                if (aug.get(k)) elem ^= w[k];
            out.add(std::move(elem));
        } else {
            phi.add(std::move(res), std::move(aug));
        }
    }
    return out;
}

Subspace Subspace::sum_with(const Subspace& other) const {
    if (amb_->D != other.amb_->D) throw std::invalid_argument("sum: ambient mismatch");
    Subspace out(amb_);
    for (const auto& v : basis_vecs()) out.add(v);
    for (const auto& v : other.basis_vecs()) out.add(v);
    return out;
}

Subspace Subspace::span(const AmbientPtr& amb, const std::vector<Poly>& polys) {
    Subspace out(amb);
    for (const auto& p : polys) out.add(p);
    return out;
}

std::string Subspace::to_json() const {
    std::ostringstream os;
    os << "{\"ambient_basis\":[";
    for (size_t i = 0; i < amb_->basis.size(); ++i) {
        if (i) os << ",";
        os << '"' << format(Poly::monomial(ctx_g(), amb_->basis[i])) << '"';
    }
    os << "],\"rows\":[";
    auto rows = rref_.sorted_rows();
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) os << ",";
        os << '"';
        for (size_t i = 0; i < amb_->basis.size(); ++i) os << (rows[r].second->get(i) ? '1' : '0');
        os << '"';
    }
    os << "]}";
    return os.str();
}

Poly left_coaction(const Poly& f) {
    const Ctx& cc = ctx_coact();
    auto v = [&](const char* n) { return Poly::var(cc, n); };
    std::map<std::string, Poly> images = {
        {"a", v("alpha") * v("a") + v("beta") * v("c")},
        {"b", v("alpha") * v("b") + v("beta") * v("d")},
        {"c", v("gamma") * v("a") + v("delta") * v("c")},
        {"d", v("gamma") * v("b") + v("delta") * v("d")},
    };
    return normal_form(f.substitute(images, cc));
}

namespace {

Sl2Vars acting_quadruple() {
    const Ctx& cc = ctx_coact();
    return {size_t(cc->index_of("alpha")), size_t(cc->index_of("beta")),
            size_t(cc->index_of("gamma")), size_t(cc->index_of("delta"))};
}

Poly embed(const Poly& f, const Ctx& target) {
    return f.substitute({}, target);
}

}  // namespace

Poly act(const GroupScheme& g, const Poly& f) {
    switch (g.kind) {
        case SchemeKind::U_left: {
            const Ctx& ct = ctx_g_t();
            std::map<std::string, Poly> images = {
                {"a", Poly::var(ct, "a") + Poly::var(ct, "t") * Poly::var(ct, "c")},
                {"b", Poly::var(ct, "b") + Poly::var(ct, "t") * Poly::var(ct, "d")},
            };
            return normal_form(f.substitute(images, ct));
        }
        case SchemeKind::T_left: {
            const Ctx& cs = ctx_g_s();
            Poly s = Poly::var(cs, "s"), si = Poly::var(cs, "s", -1);
            std::map<std::string, Poly> images = {
                {"a", s * Poly::var(cs, "a")},
                {"b", s * Poly::var(cs, "b")},
                {"c", si * Poly::var(cs, "c")},
                {"d", si * Poly::var(cs, "d")},
            };
            return normal_form(f.substitute(images, cs));
        }
        case SchemeKind::T_right: {
            const Ctx& cs = ctx_g_s();
            Poly s = Poly::var(cs, "s"), si = Poly::var(cs, "s", -1);
            std::map<std::string, Poly> images = {
                {"a", s * Poly::var(cs, "a")},
                {"b", si * Poly::var(cs, "b")},
                {"c", s * Poly::var(cs, "c")},
                {"d", si * Poly::var(cs, "d")},
            };
            return normal_form(f.substitute(images, cs));
        }
        case SchemeKind::G_left:
            return left_coaction(f);
        case SchemeKind::Gr_left:
            return gr_reduce(left_coaction(f), acting_quadruple(), g.r);
        case SchemeKind::N_left:
        case SchemeKind::N_right:
            throw std::invalid_argument("N is not a single substitution; handled in invariants()");
    }
    throw std::invalid_argument("unknown scheme");
}

namespace {

/// Kernel of the linear conditions cond_j over the given basis polys;
/// returns the subspace of combinations with zero condition.
Subspace condition_kernel(const AmbientPtr& amb, const std::vector<Poly>& basis,
                          const std::vector<Poly>& conds) {
    // shared column index over all condition monomials, canonical order
    std::vector<Monomial> cols;
    for (const auto& c : conds)
        for (const auto& m : c.terms()) cols.push_back(m);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    auto col_of = [&](const Monomial& m) {
        return size_t(std::lower_bound(cols.begin(), cols.end(), m) - cols.begin());
    };
    Gf2Rref solver(cols.size(), basis.size());
    Subspace out(amb);
    for (size_t j = 0; j < conds.size(); ++j) {
        BitVec row(cols.size());
        for (const auto& m : conds[j].terms()) row.flip(col_of(m));
        BitVec aug(basis.size());
        aug.set(j);
        row = solver.reduce(std::move(row), aug);
        if (!row.any()) {
            Poly inv = Poly::zero(basis[j].ctx());
            for (size_t k = 0; k < basis.size(); ++k)
                if (aug.get(k)) inv = inv + basis[k];
            out.add(inv);
        } else {
            solver.add(std::move(row), std::move(aug));
        }
    }
    return out;
}

Subspace fixed_under(const Subspace& m, Poly (*op)(const Poly&)) {
    auto basis = m.basis_polys();
    std::vector<Poly> conds;
    conds.reserve(basis.size());
    for (const auto& f : basis) conds.push_back(op(f) + f);
    return condition_kernel(m.amb(), basis, conds);
}

}  // namespace

Subspace invariants(const Subspace& m, const GroupScheme& g) {
    if (g.kind == SchemeKind::N_left)
        return fixed_under(invariants(m, GroupScheme::T_left()), &sigma_translate_left);
    if (g.kind == SchemeKind::N_right)
        return fixed_under(invariants(m, GroupScheme::T_right()), &sigma_translate);
    auto basis = m.basis_polys();
    std::vector<Poly> conds;
    conds.reserve(basis.size());
    for (const auto& f : basis) {
        Poly a = act(g, f);
        conds.push_back(a + embed(f, a.ctx()));
    }
    return condition_kernel(m.amb(), basis, conds);
}

Subspace invariants(ModuleId m, const GroupScheme& g, int D) {
    return invariants(module_basis(m, D), g);
}

Subspace module_basis(ModuleId m, int D) {
    AmbientPtr amb = ambient(D);
    switch (m) {
        case ModuleId::kG: {
            Subspace s(amb);
            for (const auto& mon : amb->basis) s.add(amb->to_vec(Poly::monomial(ctx_g(), mon)));
            return s;
        }
        case ModuleId::kU_backslash_G:
            return invariants(module_basis(ModuleId::kG, D), GroupScheme::U_left());
        case ModuleId::kG_mod_T:
            return invariants(module_basis(ModuleId::kG, D), GroupScheme::T_right());
        case ModuleId::kG_mod_N:
            return invariants(module_basis(ModuleId::kG, D), GroupScheme::N_right());
        default:
            throw std::invalid_argument(to_string(m) + " is not a subspace of k[G]; use comodule()");
    }
}

std::vector<std::pair<int, int>> kgn_generator_exponents(int D) {
    std::vector<std::pair<int, int>> out;
    for (int n = 0; 2 * n <= D; ++n)
        for (int i = 0; i <= n; ++i) out.emplace_back(i, n - i);
    return out;
}

std::vector<Poly> kgn_generators(int D) {
    const Ctx& cg = ctx_g();
    Poly ab = Poly::var(cg, "a") * Poly::var(cg, "b");
    Poly cd = Poly::var(cg, "c") * Poly::var(cg, "d");
    std::vector<Poly> out;
    for (auto [i, j] : kgn_generator_exponents(D))
        out.push_back(normal_form(ab.pow(uint64_t(i)) * cd.pow(uint64_t(j))));
    return out;
}

std::vector<Poly> kgt_generators(int D) {
    const Ctx& cg = ctx_g();
    Poly ad = Poly::var(cg, "a") * Poly::var(cg, "d");
    std::vector<Poly> out = kgn_generators(D);
    for (const Poly& g : kgn_generators(D - 2)) out.push_back(normal_form(ad * g));
    return out;
}

FreeDecomposition free_decompose(const Poly& f) {
    const Ctx& cg = ctx_g();
    Poly nf = normal_form(f);
    if (nf.is_zero()) return {Poly::zero(cg), Poly::zero(cg)};
    int D = int(nf.degree());
    AmbientPtr amb = ambient(D);
    auto gens_n = kgn_generators(D);
    auto gens_q = kgn_generators(D - 2);
    const Ctx& c = ctx_g();
    Poly ad = Poly::var(c, "a") * Poly::var(c, "d");
    size_t total = gens_n.size() + gens_q.size();
    Gf2Rref solver(amb->basis.size(), total);
    size_t idx = 0;
    for (const Poly& g : gens_n) {
        BitVec aug(total);
        aug.set(idx++);
        bool fresh = solver.add(amb->to_vec(g), std::move(aug));
        assert(fresh);
        (void)fresh;
    }
    for (const Poly& g : gens_q) {
        BitVec aug(total);
        aug.set(idx++);
        bool fresh = solver.add(amb->to_vec(normal_form(ad * g)), std::move(aug));
        assert(fresh);
        (void)fresh;
    }
    BitVec aug(total);
    BitVec res = solver.reduce(amb->to_vec(nf), aug);
    if (res.any()) throw MembershipError("not in k[G/T]", amb->to_poly(res));
    Poly p = Poly::zero(cg), q = Poly::zero(cg);
    for (size_t k = 0; k < gens_n.size(); ++k)
        if (aug.get(k)) p = p + gens_n[k];
    for (size_t k = 0; k < gens_q.size(); ++k)
        if (aug.get(gens_n.size() + k)) q = q + gens_q[k];
    return {p, q};
}

bool SeparabilityReport::ok() const {
    return relation_ok && derivative_ok && !power_identity_ok_r.empty();
}

SeparabilityReport separability_check(int r_max) {
    const Ctx& cg = ctx_g();
    Poly ad = Poly::var(cg, "a") * Poly::var(cg, "d");
    Poly bc = Poly::var(cg, "b") * Poly::var(cg, "c");
    Poly abcd = Poly::var(cg, "a") * Poly::var(cg, "b") * Poly::var(cg, "c") * Poly::var(cg, "d");
    SeparabilityReport rep;
    rep.relation_ok = normal_form(ad * ad + ad + abcd).is_zero();
    const Ctx& cx = ctx_g_x();
    Poly x = Poly::var(cx, "x");
    Poly minpoly = x * x + x + embed(normal_form(abcd), cx);
    rep.derivative_ok = minpoly.derivative("x") == Poly::one(cx);
    for (int r = 1; r <= r_max; ++r) {
        uint64_t e = uint64_t(1) << r;
        if (normal_form(ad.pow(e) + bc.pow(e)) == Poly::one(cg)) rep.power_identity_ok_r.push_back(r);
    }
    return rep;
}

bool NonMembershipReport::ok() const {
    if (rows.empty()) return false;
    for (const auto& r : rows)
        if (!r.power_not_in_kgn || !r.difference_in_kgn) return false;
    return true;
}

NonMembershipReport non_membership_check(int r_max) {
    const Ctx& cg = ctx_g();
    Poly ad = Poly::var(cg, "a") * Poly::var(cg, "d");
    NonMembershipReport rep;
    for (int r = 1; r <= r_max; ++r) {
        uint64_t e = uint64_t(1) << r;
        Poly pw = normal_form(ad.pow(e));
        NonMembershipReport::Row row;
        row.r = r;
        // sigma moves (ad)^{2^r}, and its q-component over {1, ad} is nonzero
        bool sigma_moves = sigma_translate(pw) != pw;
        bool q_nonzero = !free_decompose(pw).q.is_zero();
        row.power_not_in_kgn = sigma_moves && q_nonzero;
        row.difference_in_kgn = free_decompose(normal_form(ad + pw)).q.is_zero();
        rep.rows.push_back(row);
    }
    return rep;
}

namespace {

/// Splits a straightened ctx_coact polynomial into (acting monomial -> M-part
/// polynomial) with the acting part translated to a ctx_g monomial.
std::map<Monomial, std::vector<Monomial>> split_by_acting(const Poly& p) {
    const Sl2Vars q = acting_quadruple();
    std::map<Monomial, std::vector<Monomial>> groups;
    for (const Monomial& m : p.terms()) {
        Monomial acting(4), mfac(4);
        acting.exps[0] = m.exps[q.a];
        acting.exps[1] = m.exps[q.b];
        acting.exps[2] = m.exps[q.c];
        acting.exps[3] = m.exps[q.d];
        for (size_t i = 0; i < 4; ++i) mfac.exps[i] = m.exps[i];
        groups[acting].push_back(std::move(mfac));
    }
    return groups;
}

Comodule comodule_from_generators(const std::string& name, const std::vector<Poly>& gens,
                                  const std::vector<int>& degrees, int D) {
    AmbientPtr amb = ambient(D);
    Gf2Rref solver(amb->basis.size(), gens.size());
    for (size_t j = 0; j < gens.size(); ++j) {
        BitVec aug(gens.size());
        aug.set(j);
        if (!solver.add(amb->to_vec(gens[j]), std::move(aug)))
            throw std::logic_error("dependent generator in " + name);
    }
    Comodule com;
    com.name = name;
    com.degrees = degrees;
    com.rho.resize(gens.size());
    for (const Poly& g : gens) com.labels.push_back(format(g));
    for (size_t i = 0; i < gens.size(); ++i) {
        std::map<size_t, std::vector<Monomial>> acting_of;  // j -> acting monomials
        for (auto& [acting, mfacs] : split_by_acting(left_coaction(gens[i]))) {
            BitVec w(amb->basis.size());
            for (const Monomial& m : mfacs) {
                size_t k = amb->index(m);
                if (k == Ambient::npos) throw std::logic_error("coaction left the truncation");
                w.flip(k);
            }
            BitVec aug(gens.size());
            BitVec res = solver.reduce(std::move(w), aug);
            if (res.any())
                throw MembershipError("coaction not expressible over generators of " + name,
                                      amb->to_poly(res));
            for (size_t j = 0; j < gens.size(); ++j)
                if (aug.get(j)) acting_of[j].push_back(acting);
        }
        for (auto& [j, mons] : acting_of) {
            Poly acting(ctx_g(), std::move(mons));
            if (!acting.is_zero()) com.rho[i].emplace_back(j, std::move(acting));
        }
    }
    return com;
}

}  // namespace

Comodule comodule(ModuleId m, int D) {
    switch (m) {
        case ModuleId::kG: {
            AmbientPtr amb = ambient(D);
            std::vector<Poly> gens;
            std::vector<int> degrees;
            for (const auto& mon : amb->basis) {
                gens.push_back(Poly::monomial(ctx_g(), mon));
                degrees.push_back(int(mon.degree(*ctx_g())));
            }
            return comodule_from_generators("kG", gens, degrees, D);
        }
        case ModuleId::kG_mod_N: {
            std::vector<int> degrees;
            for (auto [i, j] : kgn_generator_exponents(D)) degrees.push_back(2 * (i + j));
            return comodule_from_generators("kG_mod_N", kgn_generators(D), degrees, D);
        }
        case ModuleId::kG_mod_T: {
            std::vector<int> degrees;
            for (auto [i, j] : kgn_generator_exponents(D)) degrees.push_back(2 * (i + j));
            for (auto [i, j] : kgn_generator_exponents(D - 2)) degrees.push_back(2 * (i + j) + 2);
            return comodule_from_generators("kG_mod_T", kgt_generators(D), degrees, D);
        }
        case ModuleId::kU_backslash_G:
            // left-U-invariants are not stable under left translation by G
            throw std::invalid_argument("kU_backslash_G carries no left coaction; use module_basis()");
        case ModuleId::quotient: {
            // q-components of k[G/T]/k[G/N]; basis indexed by kgn generators of degree <= D-2
            const Ctx& cg = ctx_g();
            Poly ad = Poly::var(cg, "a") * Poly::var(cg, "d");
            AmbientPtr amb = ambient(D);
            auto gens_q = kgn_generators(D - 2);
            auto gens_t = kgt_generators(D);
            size_t nN = kgn_generators(D).size();
            Gf2Rref solver(amb->basis.size(), gens_t.size());
            for (size_t j = 0; j < gens_t.size(); ++j) {
                BitVec aug(gens_t.size());
                aug.set(j);
                solver.add(amb->to_vec(gens_t[j]), std::move(aug));
            }
            Comodule com;
            com.name = "quotient";
            com.rho.resize(gens_q.size());
            for (size_t i = 0; i < gens_q.size(); ++i) {
                com.labels.push_back("[" + format(normal_form(ad * gens_q[i])) + "]");
                com.degrees.push_back(int(gens_q[i].degree()) + 2);
                std::map<size_t, std::vector<Monomial>> acting_of;
                for (auto& [acting, mfacs] : split_by_acting(left_coaction(normal_form(ad * gens_q[i])))) {
                    BitVec w(amb->basis.size());
                    for (const Monomial& m : mfacs) w.flip(amb->index(m));
                    BitVec aug(gens_t.size());
                    BitVec res = solver.reduce(std::move(w), aug);
                    if (res.any())
                        throw MembershipError("quotient coaction escapes k[G/T]", amb->to_poly(res));
                    // q-part only: coordinates over the ad * kgn generators
                    for (size_t j = 0; j < gens_q.size(); ++j)
                        if (aug.get(nN + j)) acting_of[j].push_back(acting);
                }
                for (auto& [j, mons] : acting_of) {
                    Poly acting(ctx_g(), std::move(mons));
                    if (!acting.is_zero()) com.rho[i].emplace_back(j, std::move(acting));
                }
            }
            return com;
        }
        case ModuleId::gr_kG_mod_N:
        case ModuleId::gr_kG_mod_T:
            return gr_comodule(m, D);
    }
    throw std::invalid_argument("unknown module id");
}

}  // namespace sl2coh
