#include "sl2coh/cohomology.hpp"

#include <algorithm>
#include <cassert>

#include "sl2coh/grosshans.hpp"

namespace sl2coh {

namespace {

constexpr uint64_t kBasisGuard = 50'000'000;

Poly embed_g(const Poly& f, const Ctx& target) {
    return f.substitute({}, target);
}

Sl2Vars acting_quadruple() {
    const Ctx& cc = ctx_coact();
    return {size_t(cc->index_of("alpha")), size_t(cc->index_of("beta")),
            size_t(cc->index_of("gamma")), size_t(cc->index_of("delta"))};
}

}  // namespace

CobarComplex::CobarComplex(const GroupSpec& group, const Comodule& m) : group_(group), mdim_(m.dim()) {
    acting_ = group.frobenius_kernel ? gr_basis(group.r) : straightened_basis(group.E);
    Monomial one(4);
    unit_ = acting_index(one);
    assert(unit_ == 0);

    const Ctx& cg = ctx_g();
    auto quads2 = find_sl2_quadruples(ctx_tensor2());
    delta_.resize(acting_.size());
    for (size_t f = 0; f < acting_.size(); ++f) {
        Poly d = comultiply(Poly::monomial(cg, acting_[f]));
        if (group.frobenius_kernel)
            for (const auto& q : quads2) d = gr_reduce(d, q, group.r);
        for (const Monomial& t : d.terms()) {
            Monomial m1(4), m2(4);
            for (size_t i = 0; i < 4; ++i) {
                m1.exps[i] = t.exps[i];
                m2.exps[i] = t.exps[i + 4];
            }
            size_t i1 = acting_index(m1), i2 = acting_index(m2);
            if (i1 == size_t(-1) || i2 == size_t(-1))
                throw std::logic_error("comultiplication left the acting basis");
            // left-translation coaction f(gx) = sum f_i(x) h_i(g) is coassociative
            // against the opposite comultiplication, so the factors swap here
            delta_[f].emplace_back(uint32_t(i2), uint32_t(i1));
        }
        std::sort(delta_[f].begin(), delta_[f].end());
    }

    rho_.resize(mdim_);
    for (size_t i = 0; i < mdim_; ++i) {
        for (const auto& [j, acting] : m.rho[i]) {
            Poly a = group.frobenius_kernel ? gr_normal_form(acting, group.r) : acting;
            for (const Monomial& t : a.terms()) {
                size_t f = acting_index(t);
                if (f == size_t(-1))
                    throw GuardError("coaction exceeds the per-factor bound (need D <= E)");
                rho_[i].emplace_back(uint32_t(j), uint32_t(f));
            }
        }
        std::sort(rho_[i].begin(), rho_[i].end());
    }
}

size_t CobarComplex::acting_index(const Monomial& m) const {
    auto it = std::lower_bound(acting_.begin(), acting_.end(), m);
    if (it != acting_.end() && *it == m) return size_t(it - acting_.begin());
    return size_t(-1);
}

uint64_t CobarComplex::dim(int n) const {
    uint64_t d = mdim_;
    for (int k = 0; k < n; ++k) {
        if (d > kBasisGuard * 4) throw GuardError("cochain space exceeds the size guard");
        d *= acting_.size();
    }
    return d;
}

std::vector<uint64_t> CobarComplex::diff_row(int n, uint64_t idx) const {
    const uint64_t A = acting_.size();
    std::vector<uint32_t> f(static_cast<size_t>(n));
    uint64_t rest = idx;
    for (int k = n - 1; k >= 0; --k) {
        f[size_t(k)] = uint32_t(rest % A);
        rest /= A;
    }
    const uint32_t m = uint32_t(rest);

    // strides of the codomain C^(n+1): position p in 0..n holds an acting factor
    std::vector<uint64_t> out;
    auto encode = [&](uint32_t mm, const std::vector<uint32_t>& facs) {
        uint64_t v = mm;
        for (uint32_t x : facs) v = v * A + x;
        out.push_back(v);
    };

    std::vector<uint32_t> facs(size_t(n) + 1);
    // rho on the module factor: inserts the new acting factor first
    for (const auto& [j, g] : rho_[m]) {
        facs[0] = g;
        std::copy(f.begin(), f.end(), facs.begin() + 1);
        encode(j, facs);
    }
    // comultiplication on factor i
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < i; ++k) facs[size_t(k)] = f[size_t(k)];
        for (int k = i + 1; k < n; ++k) facs[size_t(k) + 1] = f[size_t(k)];
        for (const auto& [g1, g2] : delta_[f[size_t(i)]]) {
            facs[size_t(i)] = g1;
            facs[size_t(i) + 1] = g2;
            encode(m, facs);
        }
    }
    // unit appended at the end
    std::copy(f.begin(), f.end(), facs.begin());
    facs[size_t(n)] = uint32_t(unit_);
    encode(m, facs);

    std::sort(out.begin(), out.end());
    // GF(2): keep entries of odd multiplicity
    std::vector<uint64_t> reduced;
    reduced.reserve(out.size());
    for (size_t i = 0; i < out.size();) {
        size_t j = i;
        while (j < out.size() && out[j] == out[i]) ++j;
        if ((j - i) % 2 == 1) reduced.push_back(out[i]);
        i = j;
    }
    return reduced;
}

bool CobarComplex::d_squared_zero(int n) const {
    const uint64_t dn = dim(n);
    for (uint64_t idx = 0; idx < dn; ++idx) {
        std::vector<uint64_t> acc;
        for (uint64_t col : diff_row(n, idx)) acc = xor_sorted(acc, diff_row(n + 1, col));
        if (!acc.empty()) return false;
    }
    return true;
}

namespace {

uint64_t rank_of_differential(const CobarComplex& cx, int n) {
    const uint64_t dn = cx.dim(n);
    const uint64_t dn1 = cx.dim(n + 1);
    if (dn1 > kBasisGuard) throw GuardError("cochain space exceeds the size guard");
    if (dn <= 4096 && dn1 <= (uint64_t(1) << 21)) {
        Gf2Rref solver(static_cast<size_t>(dn1));
        for (uint64_t idx = 0; idx < dn; ++idx) {
            BitVec v(static_cast<size_t>(dn1));
            for (uint64_t col : cx.diff_row(n, idx)) v.flip(size_t(col));
            solver.add(std::move(v));
        }
        return solver.rank();
    }
    SparseElim elim;
    for (uint64_t idx = 0; idx < dn; ++idx) elim.add(cx.diff_row(n, idx));
    return elim.rank();
}

}  // namespace

std::vector<CohomologyCell> cohomology_dims(const CobarComplex& complex, int i_max) {
    std::vector<uint64_t> rank(size_t(i_max) + 1);
    for (int n = 0; n <= i_max; ++n) rank[size_t(n)] = rank_of_differential(complex, n);
    std::vector<CohomologyCell> out;
    for (int i = 0; i <= i_max; ++i) {
        uint64_t h = complex.dim(i) - rank[size_t(i)];
        if (i > 0) h -= rank[size_t(i) - 1];
        out.push_back({i, h});
    }
    return out;
}

std::vector<std::vector<uint64_t>> h1_cocycles(const CobarComplex& complex) {
    SparseElim elim(true);
    const uint64_t d1 = complex.dim(1);
    for (uint64_t idx = 0; idx < d1; ++idx) elim.add(complex.diff_row(1, idx));
    std::vector<std::vector<uint64_t>> out;
    for (const auto& comb : elim.kernel()) {
        std::vector<uint64_t> z;
        for (size_t k = 0; k < comb.size(); ++k)
            if (comb[k]) z.push_back(k);
        out.push_back(std::move(z));
    }
    return out;
}

std::vector<size_t> prefix_index(size_t small_dim) {
    std::vector<size_t> out(small_dim);
    for (size_t i = 0; i < small_dim; ++i) out[i] = i;
    return out;
}

uint64_t h1_transition_image_dim(const CobarComplex& small, const CobarComplex& large,
                                 const std::vector<size_t>& m_index) {
    const uint64_t AL = large.adim();
    const uint64_t c1_large = large.dim(1);
    if (c1_large > (uint64_t(1) << 24)) throw GuardError("transition target too large for dense rows");

    Gf2Rref solver(static_cast<size_t>(c1_large));
    for (uint64_t m = 0; m < large.mdim(); ++m) {
        BitVec v(static_cast<size_t>(c1_large));
        for (uint64_t col : large.diff_row(0, m)) v.flip(size_t(col));
        solver.add(std::move(v));
    }
    uint64_t base = solver.rank();

    const uint64_t AS = small.adim();
    uint64_t grown = 0;
    for (const auto& z : h1_cocycles(small)) {
        BitVec v(static_cast<size_t>(c1_large));
        for (uint64_t idx : z) {
            uint64_t f = idx % AS, m = idx / AS;
            size_t fl = large.acting_index(small.acting_basis()[size_t(f)]);
            if (fl == size_t(-1)) throw std::logic_error("acting basis does not embed");
            v.flip(size_t(m_index.at(size_t(m)) * AL + fl));
        }
        if (solver.add(std::move(v))) ++grown;
    }
    (void)base;
    return grown;
}

namespace {

/// The explicit extension cocycle c = rho(ad) + ad (x) 1 as a C^1 vector of
/// the k[G/N] complex, via the generator-coordinate solver.
BitVec cocycle_vector(const CobarComplex& cx, int D) {
    const Ctx& cg = ctx_g();
    Poly ad = Poly::var(cg, "a") * Poly::var(cg, "d");
    Poly c = normal_form(left_coaction(ad) + embed_g(normal_form(ad), ctx_coact()));

    auto gens = kgn_generators(D);
    AmbientPtr amb = ambient(D);
    Gf2Rref coords(amb->basis.size(), gens.size());
    for (size_t j = 0; j < gens.size(); ++j) {
        BitVec aug(gens.size());
        aug.set(j);
        coords.add(amb->to_vec(gens[j]), std::move(aug));
    }

    const uint64_t A = cx.adim();
    BitVec v(static_cast<size_t>(cx.dim(1)));
    std::map<Monomial, std::vector<Monomial>> groups;
    for (const Monomial& t : c.terms()) {
        Monomial acting(4), mfac(4);
        const Sl2Vars q = acting_quadruple();
        acting.exps[0] = t.exps[q.a];
        acting.exps[1] = t.exps[q.b];
        acting.exps[2] = t.exps[q.c];
        acting.exps[3] = t.exps[q.d];
        for (size_t i = 0; i < 4; ++i) mfac.exps[i] = t.exps[i];
        groups[acting].push_back(std::move(mfac));
    }
    for (auto& [acting, mons] : groups) {
        BitVec w(amb->basis.size());
        for (const Monomial& m : mons) w.flip(amb->index(m));
        BitVec aug(gens.size());
        BitVec res = coords.reduce(std::move(w), aug);
        if (res.any()) throw MembershipError("cocycle module factor escapes k[G/N]", amb->to_poly(res));
        size_t f = cx.acting_index(acting);
        for (size_t j = 0; j < gens.size(); ++j)
            if (aug.get(j)) v.flip(size_t(uint64_t(j) * A + f));
    }
    return v;
}

bool not_coboundary_in(const CobarComplex& cx, const BitVec& v) {
    Gf2Rref solver(v.size());
    for (uint64_t m = 0; m < cx.mdim(); ++m) {
        BitVec row(v.size());
        for (uint64_t col : cx.diff_row(0, m)) row.flip(size_t(col));
        solver.add(std::move(row));
    }
    return solver.add(v);
}

}  // namespace

ExtensionCocycleReport extension_cocycle_check(int D) {
    if (D < 2) throw std::invalid_argument("extension_cocycle_check: D must be >= 2");
    const Ctx& cg = ctx_g();
    Poly ad = Poly::var(cg, "a") * Poly::var(cg, "d");
    Poly c = normal_form(left_coaction(ad) + embed_g(normal_form(ad), ctx_coact()));

    ExtensionCocycleReport rep;
    rep.cocycle = format(c);

    // (i) module factor of every acting component lies in k[G/N]
    rep.m_factor_in_kgn = true;
    {
        const Sl2Vars q = acting_quadruple();
        std::map<Monomial, std::vector<Monomial>> groups;
        for (const Monomial& t : c.terms()) {
            Monomial acting(4), mfac(4);
            acting.exps[0] = t.exps[q.a];
            acting.exps[1] = t.exps[q.b];
            acting.exps[2] = t.exps[q.c];
            acting.exps[3] = t.exps[q.d];
            for (size_t i = 0; i < 4; ++i) mfac.exps[i] = t.exps[i];
            groups[acting].push_back(std::move(mfac));
        }
        for (auto& [acting, mons] : groups) {
            Poly w(cg, std::move(mons));
            try {
                if (!free_decompose(w).q.is_zero()) rep.m_factor_in_kgn = false;
            } catch (const MembershipError&) {
                rep.m_factor_in_kgn = false;
            }
        }
    }

    Comodule com = comodule(ModuleId::kG_mod_N, D);
    CobarComplex cx(GroupSpec::G(D), com);
    BitVec v = cocycle_vector(cx, D);

    // (ii) d^1 c = 0
    std::vector<uint64_t> dc;
    for (size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) dc = xor_sorted(dc, cx.diff_row(1, i));
    rep.is_cocycle = dc.empty();

    // (iii) c is not a coboundary of any p in k[G/N]_{<=D}
    rep.not_coboundary = not_coboundary_in(cx, v);
    return rep;
}

FrobeniusSplittingReport frobenius_splitting_check(int r, int D) {
    if (r < 1) throw std::invalid_argument("frobenius_splitting_check: r must be >= 1");
    const Ctx& cg = ctx_g();
    const Sl2Vars aq = acting_quadruple();
    Poly ad = Poly::var(cg, "a") * Poly::var(cg, "d");
    Poly lift = normal_form(ad.pow(uint64_t(1) << r));

    FrobeniusSplittingReport rep;
    rep.r = r;
    rep.lift_invariant =
        gr_reduce(left_coaction(lift), aq, r) == embed_g(lift, ctx_coact());

    FreeDecomposition fd = free_decompose(lift);
    rep.lifts_class = fd.q == Poly::one(cg);

    rep.splitting_equivariant = true;
    for (const Poly& q : kgn_generators(D)) {
        Poly sq = normal_form(q * lift);
        Poly lhs = gr_reduce(left_coaction(sq), aq, r);
        Poly rhs = gr_reduce(
            normal_form(gr_reduce(left_coaction(q), aq, r) * embed_g(lift, ctx_coact())), aq, r);
        if (lhs != rhs) rep.splitting_equivariant = false;
        if (free_decompose(sq).q != q) rep.splitting_equivariant = false;
    }
    return rep;
}

UntwistReport h0_untwist_check(int r, int D) {
    const Ctx& cg = ctx_g();
    Poly ab = Poly::var(cg, "a") * Poly::var(cg, "b");
    Poly cd = Poly::var(cg, "c") * Poly::var(cg, "d");
    const int64_t pr = int64_t(1) << r;

    UntwistReport rep;
    rep.r = r;
    Subspace inv = invariants(ModuleId::kG_mod_N, GroupScheme::Gr_left(r), D);
    std::vector<Poly> expected;
    std::vector<std::pair<int64_t, int64_t>> exps;
    for (int64_t i = 0; 2 * pr * i <= D; ++i)
        for (int64_t j = 0; 2 * pr * (i + j) <= D; ++j) {
            expected.push_back(normal_form(ab.pow(uint64_t(pr * i)) * cd.pow(uint64_t(pr * j))));
            exps.emplace_back(i, j);
        }
    rep.invariants_match = inv == Subspace::span(inv.amb(), expected);
    rep.dim = inv.dim();

    // exponent division by 2^r is multiplicative and injective on the basis
    rep.ring_iso = true;
    for (size_t x = 0; x < exps.size(); ++x)
        for (size_t y = 0; y < exps.size(); ++y) {
            auto [i1, j1] = exps[x];
            auto [i2, j2] = exps[y];
            if (2 * pr * (i1 + j1 + i2 + j2) > D) continue;
            // product of invariants is the invariant with added exponents;
            // the untwist of the product must be the product of untwists
            Poly prod = normal_form(expected[x] * expected[y]);
            Poly expect = normal_form(ab.pow(uint64_t(pr * (i1 + i2))) * cd.pow(uint64_t(pr * (j1 + j2))));
            if (prod != expect) rep.ring_iso = false;
            Poly untwist_prod = normal_form(ab.pow(uint64_t(i1 + i2)) * cd.pow(uint64_t(j1 + j2)));
            Poly prod_untwist =
                normal_form(ab.pow(uint64_t(i1)) * cd.pow(uint64_t(j1)) * ab.pow(uint64_t(i2)) * cd.pow(uint64_t(j2)));
            if (untwist_prod != prod_untwist) rep.ring_iso = false;
        }
    for (size_t x = 0; x < exps.size(); ++x)
        for (size_t y = x + 1; y < exps.size(); ++y)
            if (expected[x] == expected[y]) rep.ring_iso = false;
    return rep;
}

bool GrVanishingReport::all_vanish() const {
    if (rows.empty()) return false;
    for (const auto& row : rows)
        if (row.image_dim != 0) return false;
    return true;
}

GrVanishingReport gr_vanishing_check(int r_max, int D_max) {
    GrVanishingReport rep;
    for (int r = 1; r <= r_max; ++r) {
        for (int D = 2; D <= D_max; ++D) {
            int Dp = D + (1 << (r + 1));
            Comodule small = comodule(ModuleId::kG_mod_N, D);
            Comodule large = comodule(ModuleId::kG_mod_N, Dp);
            CobarComplex cs(GroupSpec::Gr(r), small), cl(GroupSpec::Gr(r), large);
            auto dims = cohomology_dims(cs, 1);
            uint64_t image = h1_transition_image_dim(cs, cl, prefix_index(small.dim()));
            rep.rows.push_back({r, D, Dp, dims[1].dim, image});
        }
    }
    return rep;
}

H1StabilizationReport h1_stabilization(const std::vector<std::pair<int, int>>& grid) {
    H1StabilizationReport rep;
    for (auto [D, E] : grid) {
        Comodule com = comodule(ModuleId::kG_mod_N, D);
        CobarComplex cx(GroupSpec::G(E), com);
        auto dims = cohomology_dims(cx, 1);
        bool survives = not_coboundary_in(cx, cocycle_vector(cx, D));
        rep.cells.push_back({D, E, dims[0].dim, dims[1].dim, survives});
    }
    size_t n = rep.cells.size();
    rep.stabilized = n >= 2 && rep.cells[n - 1].h1 == rep.cells[n - 2].h1;
    rep.stabilized_dim = n ? rep.cells[n - 1].h1 : 0;
    return rep;
}

bool PropositionReport::ok() const {
    if (!g_side.stabilized || g_side.stabilized_dim != 1) return false;
    for (const auto& cell : g_side.cells)
        if (!cell.class_survives) return false;
    return gr_side.all_vanish() && h0_intersection_is_k;
}

PropositionReport proposition_check(int D, int E, int r_max) {
    PropositionReport rep;
    std::vector<std::pair<int, int>> grid;
    for (int k = 2; k >= 0; --k)
        if (D - k >= 2 && E - k >= 2) grid.emplace_back(D - k, E - k);
    rep.g_side = h1_stabilization(grid);
    rep.gr_side = gr_vanishing_check(r_max, 4);

    int R = 1;
    while ((1 << R) <= D) ++R;
    Subspace inter = invariants(ModuleId::kG_mod_N, GroupScheme::Gr_left(1), D);
    for (int r = 2; r <= R; ++r)
        inter = inter.intersect(invariants(ModuleId::kG_mod_N, GroupScheme::Gr_left(r), D));
    Subspace unit_span(inter.amb());
    unit_span.add(Poly::one(ctx_g()));
    rep.h0_intersection_is_k = inter == unit_span;
    return rep;
}

GradedG1Report g1_gr_cohomology(int D, int i_max) {
    Comodule com = gr_comodule(ModuleId::gr_kG_mod_N, D);
    CobarComplex cx(GroupSpec::Gr(1), com);
    GradedG1Report rep;
    rep.D = D;
    rep.dims = cohomology_dims(cx, i_max);
    rep.nontrivial = false;
    for (const auto& cell : rep.dims)
        if (cell.i > 0 && cell.dim > 0) rep.nontrivial = true;
    return rep;
}

}  // namespace sl2coh
