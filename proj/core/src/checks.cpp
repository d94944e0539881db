#include "sl2coh/checks.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "sl2coh/cohomology.hpp"
#include "sl2coh/gf2field.hpp"
#include "sl2coh/grosshans.hpp"

namespace sl2coh {

using json = nlohmann::ordered_json;

std::string CheckParams::str() const {
    std::ostringstream os;
    os << "{D:" << D << ",E:" << E << ",r:" << r << ",i_max:" << i_max << ",r_max:" << r_max << "}";
    return os.str();
}

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inconclusive: return "inconclusive";
    }
    return "fail";
}

namespace {

Poly gp(const char* text) { return parse(text, ctx_g()); }

struct CheckResult {
    Status status;
    json payload;
};

using CheckFn = std::function<CheckResult(const CheckParams&)>;

Status gate(bool ok) { return ok ? Status::pass : Status::fail; }

// ---- identities -----------------------------------------------------------

CheckResult check_minimal_polynomial(const CheckParams&) {
    SeparabilityReport rep = separability_check(4);
    json p;
    p["relation"] = rep.relation_ok;
    p["derivative_is_one"] = rep.derivative_ok;
    p["power_identity_r"] = rep.power_identity_ok_r;
    return {gate(rep.ok()), p};
}

CheckResult check_sigma_and_powers(const CheckParams& prm) {
    Poly ad = gp("a*d"), bc = gp("b*c");
    bool sigma_swap = sigma_translate(normal_form(ad)) == bc && sigma_translate(bc) == normal_form(ad);
    NonMembershipReport rep = non_membership_check(prm.r_max);
    json rows = json::array();
    bool ok = sigma_swap && rep.ok() && !rep.rows.empty();
    for (const auto& row : rep.rows)
        rows.push_back({{"r", row.r},
                        {"power_not_in_kgn", row.power_not_in_kgn},
                        {"difference_in_kgn", row.difference_in_kgn}});
    json p;
    p["sigma_swaps_ad_bc"] = sigma_swap;
    p["rows"] = rows;
    return {gate(ok), p};
}

CheckResult check_evaluation_oracle(const CheckParams&) {
    const Ctx& cg = ctx_g();
    Poly ad = gp("a*d"), bc = gp("b*c");
    Poly rel = ad * ad + ad + gp("a*b") * gp("c*d");
    std::mt19937_64 rng(0x51f2c04u);
    int points = 0;
    bool ok = true;
    for (int m = 1; m <= 8; ++m) {
        GF2m f(m);
        for (int n = 0; n < 20; ++n) {
            SL2Point pt = random_sl2_point(f, rng);
            std::map<std::string, uint16_t> at = {{"a", pt.a}, {"b", pt.b}, {"c", pt.c}, {"d", pt.d}};
            // right translation by the involution sends the point (a,b,c,d) to (b,a,d,c)
            std::map<std::string, uint16_t> at_s = {{"a", pt.b}, {"b", pt.a}, {"c", pt.d}, {"d", pt.c}};
            if (evaluate(rel, f, at) != 0) ok = false;
            for (int r = 1; r <= 4; ++r) {
                Poly pw = ad.pow(uint64_t(1) << r) + bc.pow(uint64_t(1) << r);
                if (evaluate(pw, f, at) != 1) ok = false;
                Poly diff = ad + ad.pow(uint64_t(1) << r);
                if (evaluate(diff, f, at) != evaluate(diff, f, at_s)) ok = false;
            }
            if (evaluate(sigma_translate(ad), f, at) != evaluate(ad, f, at_s)) ok = false;
            if (evaluate(Poly::var(cg, "a") * Poly::var(cg, "d") + bc, f, at) != 1) ok = false;
            ++points;
        }
    }
    json p;
    p["fields"] = 8;
    p["points"] = points;
    p["all_identities_hold"] = ok;
    return {gate(ok), p};
}

// ---- invariant rings ------------------------------------------------------

CheckResult check_invariant_subalgebras(const CheckParams& prm) {
    const int D = prm.D;
    AmbientPtr amb = ambient(D);
    const Ctx& cg = ctx_g();

    Subspace cd_monomials(amb);
    for (int k = 0; k <= D; ++k)
        for (int l = 0; k + l <= D; ++l)
            cd_monomials.add(Poly::var(cg, "c", k) * Poly::var(cg, "d", l));
    Subspace ug = module_basis(ModuleId::kU_backslash_G, D);
    bool ug_ok = ug == cd_monomials;

    Subspace cd_powers(amb);
    for (int j = 0; 2 * j <= D; ++j) cd_powers.add(gp("c*d").pow(uint64_t(j)));
    Subspace a = invariants(module_basis(ModuleId::kG_mod_T, D), GroupScheme::U_left());
    Subspace b = invariants(ug, GroupScheme::T_right());
    Subspace c = invariants(ug, GroupScheme::N_right());
    Subspace e = invariants(module_basis(ModuleId::kG_mod_N, D), GroupScheme::U_left());
    bool four_way = a == cd_powers && b == cd_powers && c == cd_powers && e == cd_powers;

    Subspace one(amb);
    one.add(Poly::one(cg));
    bool g_inv = invariants(ModuleId::kG_mod_N, GroupScheme::G_left(), D) == one &&
                 invariants(ModuleId::kG_mod_T, GroupScheme::G_left(), D) == one;

    json p;
    p["D"] = D;
    p["u_invariants_are_cd_monomials"] = ug_ok;
    p["four_way_equality_is_k_cd"] = four_way;
    p["g_invariants_are_constants"] = g_inv;
    p["dim_k_cd"] = cd_powers.dim();
    return {gate(ug_ok && four_way && g_inv), p};
}

// ---- free module ----------------------------------------------------------

CheckResult check_free_basis(const CheckParams& prm) {
    const Ctx& cg = ctx_g();
    Poly ad = gp("a*d");

    bool dims_ok = true;
    json dims = json::array();
    for (int D = 2; D <= prm.D; ++D) {
        size_t t = module_basis(ModuleId::kG_mod_T, D).dim();
        size_t n = module_basis(ModuleId::kG_mod_N, D).dim();
        size_t n2 = module_basis(ModuleId::kG_mod_N, D - 2).dim();
        if (t != n + n2) dims_ok = false;
        dims.push_back({{"D", D}, {"kGT", t}, {"kGN", n}, {"kGN_shift", n2}});
    }

    // generators (ab)^i (cd)^j are linearly independent, so coordinates are unique
    Subspace genspan(ambient(prm.D));
    size_t added = 0;
    for (const Poly& g : kgn_generators(prm.D)) added += genspan.add(g) ? 1 : 0;
    bool gens_independent = added == kgn_generators(prm.D).size();

    bool decompose_ok = true;
    for (const Poly& f : module_basis(ModuleId::kG_mod_T, prm.D).basis_polys()) {
        FreeDecomposition fd = free_decompose(f);
        if (normal_form(fd.p + fd.q * ad) != normal_form(f)) decompose_ok = false;
    }

    bool sep = separability_check(1).derivative_ok;
    json p;
    p["dims"] = dims;
    p["rank_identity"] = dims_ok;
    p["generators_independent"] = gens_independent;
    p["decomposition_recomposes"] = decompose_ok;
    p["derivative_is_one"] = sep;
    return {gate(dims_ok && gens_independent && decompose_ok && sep), p};
}

// ---- Grosshans ------------------------------------------------------------

CheckResult check_grosshans_steps(const CheckParams& prm) {
    AmbientPtr amb = ambient(prm.D);
    auto span_of = [&](std::initializer_list<const char*> polys) {
        Subspace s(amb);
        for (const char* t : polys) s.add(gp(t));
        return s;
    };
    bool ok = grosshans_step(ModuleId::kG_mod_T, 0, prm.D) == span_of({"1"}) &&
              grosshans_step(ModuleId::kG_mod_N, 0, prm.D) == span_of({"1"}) &&
              grosshans_step(ModuleId::kG_mod_T, 2, prm.D) == span_of({"1", "a*b", "a*d", "c*d"}) &&
              grosshans_step(ModuleId::kG_mod_N, 2, prm.D) == span_of({"1", "a*b", "c*d"});
    json p;
    p["D"] = prm.D;
    p["step0_kGT_dim"] = grosshans_step(ModuleId::kG_mod_T, 0, prm.D).dim();
    p["step2_kGT_dim"] = grosshans_step(ModuleId::kG_mod_T, 2, prm.D).dim();
    p["step2_kGN_dim"] = grosshans_step(ModuleId::kG_mod_N, 2, prm.D).dim();
    p["spans_match"] = ok;
    return {gate(ok), p};
}

CheckResult check_grosshans_hull(const CheckParams& prm) {
    HullReport rep = hull_check(prm.D);
    json dims = json::array();
    for (const auto& row : rep.graded_dims)
        dims.push_back({{"n", row[0]}, {"kGT", row[1]}, {"kGN", row[2]}, {"kGN_prev", row[3]}});
    json p;
    p["D"] = prm.D;
    p["ad_square_drops"] = rep.ad_square_drops;
    p["graded_dims_ok"] = rep.graded_dims_ok;
    p["purely_inseparable"] = rep.purely_inseparable;
    p["graded_dims"] = dims;
    return {gate(rep.ok()), p};
}

CheckResult check_good_filtration(const CheckParams& prm) {
    bool ok = true;
    json rows = json::array();
    Character prev;
    for (int n = 0; n <= prm.D; ++n) {
        Character cur = character(grosshans_step(ModuleId::kG_mod_T, n, prm.D));
        Character diff = character_difference(cur, prev);
        prev = std::move(cur);
        if (diff.empty()) continue;
        auto dec = nabla_decompose(diff);
        if (!dec) {
            ok = false;
            rows.push_back({{"n", n}, {"nabla_multiplicities", nullptr}});
            continue;
        }
        json mults = json::object();
        for (const auto& [w, m] : *dec) mults[std::to_string(w)] = m;
        rows.push_back({{"n", n}, {"nabla_multiplicities", mults}});
    }
    json p;
    p["D"] = prm.D;
    p["pieces"] = rows;
    p["all_nonnegative"] = ok;
    return {gate(ok), p};
}

// ---- extension ------------------------------------------------------------

CheckResult check_extension_cocycle(const CheckParams& prm) {
    ExtensionCocycleReport rep = extension_cocycle_check(prm.D);
    json p;
    p["D"] = prm.D;
    p["cocycle"] = rep.cocycle;
    p["module_factors_in_kgn"] = rep.m_factor_in_kgn;
    p["is_cocycle"] = rep.is_cocycle;
    p["not_coboundary"] = rep.not_coboundary;
    return {gate(rep.ok()), p};
}

CheckResult check_frobenius_splitting(const CheckParams& prm) {
    bool ok = true;
    json rows = json::array();
    for (int r = 1; r <= prm.r_max; ++r) {
        FrobeniusSplittingReport rep = frobenius_splitting_check(r, prm.D);
        ok = ok && rep.ok();
        rows.push_back({{"r", r},
                        {"lift_invariant", rep.lift_invariant},
                        {"lifts_class", rep.lifts_class},
                        {"splitting_equivariant", rep.splitting_equivariant}});
    }
    json p;
    p["D"] = prm.D;
    p["rows"] = rows;
    return {gate(ok), p};
}

// ---- Frobenius-kernel cohomology ------------------------------------------

CheckResult check_gr_h1_vanishing(const CheckParams& prm) {
    GrVanishingReport rep = gr_vanishing_check(prm.r_max, prm.D);
    json rows = json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"r", row.r},
                        {"D", row.D},
                        {"D_prime", row.D_prime},
                        {"h1", row.h1_dim},
                        {"image", row.image_dim}});
    json p;
    p["rows"] = rows;
    p["all_images_vanish"] = rep.all_vanish();
    return {gate(rep.all_vanish()), p};
}

CheckResult check_h0_untwist(const CheckParams& prm) {
    bool ok = true;
    json rows = json::array();
    for (int r = 1; r <= prm.r_max; ++r) {
        UntwistReport rep = h0_untwist_check(r, prm.D);
        ok = ok && rep.ok();
        rows.push_back({{"r", r},
                        {"invariants_match", rep.invariants_match},
                        {"ring_iso", rep.ring_iso},
                        {"dim", rep.dim}});
    }
    json p;
    p["D"] = prm.D;
    p["rows"] = rows;
    return {gate(ok), p};
}

// ---- rational cohomology of G ---------------------------------------------

std::vector<std::pair<int, int>> stabilization_grid(const CheckParams& prm) {
    std::vector<std::pair<int, int>> grid;
    for (int k = 2; k >= 0; --k)
        if (prm.D - k >= 2 && prm.E - k >= 2) grid.emplace_back(prm.D - k, prm.E - k);
    return grid;
}

CheckResult check_h1_stabilization(const CheckParams& prm) {
    H1StabilizationReport rep = h1_stabilization(stabilization_grid(prm));
    bool h0_oracle = true;
    json cells = json::array();
    for (const auto& cell : rep.cells) {
        uint64_t inv = invariants(ModuleId::kG_mod_N, GroupScheme::G_left(), cell.D).dim();
        if (inv != cell.h0) h0_oracle = false;
        cells.push_back({{"D", cell.D},
                         {"E", cell.E},
                         {"h0", cell.h0},
                         {"h1", cell.h1},
                         {"class_survives", cell.class_survives},
                         {"h0_equals_invariants", inv == cell.h0}});
    }
    bool survives = true;
    for (const auto& cell : rep.cells) survives = survives && cell.class_survives;
    json p;
    p["cells"] = cells;
    p["stabilized"] = rep.stabilized;
    p["stabilized_dim"] = rep.stabilized_dim;
    p["h0_oracle"] = h0_oracle;
    Status st = Status::fail;
    if (!rep.stabilized)
        st = Status::inconclusive;
    else if (rep.stabilized_dim == 1 && survives && h0_oracle)
        st = Status::pass;
    return {st, p};
}

CheckResult check_h2_probe(const CheckParams& prm) {
    Comodule com = comodule(ModuleId::kG_mod_N, prm.D);
    CobarComplex cx(GroupSpec::G(prm.E), com);
    json p;
    p["D"] = prm.D;
    p["E"] = prm.E;
    json dims = json::array();
    for (const auto& cell : cohomology_dims(cx, 2))
        dims.push_back({{"i", cell.i}, {"dim", cell.dim}});
    p["dims"] = dims;
    p["gated"] = false;
    return {Status::pass, p};
}

CheckResult check_proposition(const CheckParams& prm) {
    PropositionReport rep = proposition_check(prm.D, prm.E, prm.r_max);
    json p;
    p["D"] = prm.D;
    p["E"] = prm.E;
    p["r_max"] = prm.r_max;
    p["g_h1_stabilized"] = rep.g_side.stabilized;
    p["g_h1_dim"] = rep.g_side.stabilized_dim;
    json images = json::array();
    for (const auto& row : rep.gr_side.rows)
        images.push_back({{"r", row.r}, {"D", row.D}, {"image", row.image_dim}});
    p["gr_h1_images"] = images;
    p["gr_images_vanish"] = rep.gr_side.all_vanish();
    p["h0_intersection_is_k"] = rep.h0_intersection_is_k;
    if (!rep.g_side.stabilized) return {Status::inconclusive, p};
    return {gate(rep.ok()), p};
}

// ---- graded G_1 -----------------------------------------------------------

CheckResult check_g1_graded(const CheckParams& prm) {
    GradedG1Report rep = g1_gr_cohomology(prm.D, prm.i_max);
    json dims = json::array();
    for (const auto& cell : rep.dims) dims.push_back({{"i", cell.i}, {"dim", cell.dim}});
    json p;
    p["D"] = prm.D;
    p["dims"] = dims;
    p["nontrivial"] = rep.nontrivial;
    return {gate(rep.nontrivial), p};
}

// ---- infrastructure -------------------------------------------------------

CheckResult check_d_squared(const CheckParams& prm) {
    Comodule com = comodule(ModuleId::kG_mod_N, prm.D);
    CobarComplex g(GroupSpec::G(prm.E), com);
    CobarComplex gr(GroupSpec::Gr(prm.r), com);
    bool ok = g.d_squared_zero(0) && g.d_squared_zero(1) && gr.d_squared_zero(0) &&
              gr.d_squared_zero(1);
    json p;
    p["D"] = prm.D;
    p["E"] = prm.E;
    p["r"] = prm.r;
    p["d_squared_zero"] = ok;
    return {gate(ok), p};
}

struct Entry {
    CheckDescriptor desc;
    CheckFn fn;
};

CheckParams P(int D, int E, int r, int i_max, int r_max) { return {D, E, r, i_max, r_max}; }

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = [] {
        std::vector<Entry> t;
        auto add = [&](std::string name, std::string claim, Outcome out, CheckParams quick,
                       CheckParams full, CheckFn fn, bool uD = false, bool uE = false,
                       bool ur = false, bool ui = false, bool urm = false) {
            t.push_back({{std::move(name), std::move(claim), out, uD, uE, ur, ui, urm, quick, full},
                         std::move(fn)});
        };
        add("identities.minimal-polynomial",
            "(ad)^2 + ad + ab cd = 0 and d/dx(x^2 + x + ab cd) = 1; (ad)^{2^r} + (bc)^{2^r} = 1",
            Outcome::boolean_check, P(0, 0, 0, 0, 4), P(0, 0, 0, 0, 4), check_minimal_polynomial);
        add("identities.sigma-powers",
            "sigma swaps ad and bc; ad + (ad)^{2^r} lies in k[G/N] while (ad)^{2^r} does not",
            Outcome::boolean_check, P(0, 0, 0, 0, 4), P(0, 0, 0, 0, 4), check_sigma_and_powers,
            false, false, false, false, true);
        add("identities.evaluation-oracle",
            "the ring identities hold at 20 random points of SL2(F_{2^m}) for each m <= 8",
            Outcome::boolean_check, P(0, 0, 0, 0, 4), P(0, 0, 0, 0, 4), check_evaluation_oracle);
        add("invariants.subalgebras",
            "k[U\\G] = k[c,d]; k[G/T]^U = k[U\\G]^T = k[cd] = k[U\\G]^N = k[G/N]^U; "
            "k[G/N]^G = k[G/T]^G = k",
            Outcome::exact_subspace, P(4, 0, 0, 0, 0), P(8, 0, 0, 0, 0),
            check_invariant_subalgebras, true);
        add("module.free-basis",
            "k[G/T] is free over k[G/N] with basis {1, ad}: dim_{<=D} kGT = dim kGN + dim "
            "kGN_{<=D-2}",
            Outcome::dimension, P(6, 0, 0, 0, 0), P(10, 0, 0, 0, 0), check_free_basis, true);
        add("grosshans.steps",
            "Grosshans step 0 is k; step 2 of k[G/T] is span{1, ab, ad, cd} and of k[G/N] is "
            "span{1, ab, cd}",
            Outcome::exact_subspace, P(6, 0, 0, 0, 0), P(6, 0, 0, 0, 0), check_grosshans_steps,
            true);
        add("grosshans.hull",
            "gr k[G/T] over gr k[G/N]: the class of ad squares to the class of ab cd and the "
            "extension is purely inseparable",
            Outcome::boolean_check, P(4, 0, 0, 0, 0), P(6, 0, 0, 0, 0), check_grosshans_hull, true);
        add("grosshans.good-filtration",
            "every Grosshans graded piece of k[G/T] has a nonnegative nabla-character "
            "decomposition (necessary condition)",
            Outcome::boolean_check, P(4, 0, 0, 0, 0), P(8, 0, 0, 0, 0), check_good_filtration,
            true);
        add("extension.cocycle",
            "rho(ad) + ad(x)1 = ab(x)alpha gamma + 1(x)beta gamma + cd(x)beta delta is a "
            "1-cocycle of k[G/N] and not a coboundary",
            Outcome::boolean_check, P(4, 0, 0, 0, 0), P(8, 0, 0, 0, 0), check_extension_cocycle,
            true);
        add("extension.frobenius-splitting",
            "(ad)^{2^r} is a G_r-invariant lift of 1, so the extension splits over G_r",
            Outcome::boolean_check, P(4, 0, 0, 0, 2), P(6, 0, 0, 0, 2), check_frobenius_splitting,
            true, false, false, false, true);
        add("frobenius.h1-image-vanishing",
            "every H^1(G_r, k[G/N]_{<=D}) class dies in the truncation D' = D + 2^{r+1}",
            Outcome::dimension, P(4, 0, 0, 0, 2), P(4, 0, 0, 0, 2), check_gr_h1_vanishing, true,
            false, false, false, true);
        add("frobenius.h0-untwist",
            "H^0(G_r, k[G/N]) = span{(ab)^{2^r i}(cd)^{2^r j}}, isomorphic to k[G/N] by dividing "
            "exponents by 2^r",
            Outcome::exact_subspace, P(4, 0, 0, 0, 2), P(8, 0, 0, 0, 2), check_h0_untwist, true,
            false, false, false, true);
        add("g.h1-stabilization",
            "dim H^1(G, k[G/N]) stabilizes at 1 along (D,E) with the extension class surviving; "
            "H^0 equals the invariants",
            Outcome::stabilization, P(4, 4, 0, 0, 0), P(6, 6, 0, 0, 0), check_h1_stabilization,
            true, true);
        add("g.h2-probe", "H^2(G, k[G/N]) at a small truncation, reported without a target",
            Outcome::dimension, P(2, 4, 0, 0, 0), P(2, 5, 0, 0, 0), check_h2_probe, true, true);
        add("proposition",
            "H^1(G, k[G/N]) = k is not the inverse limit of the H^1(G_r, k[G/N]) = 0, while "
            "H^0(G, k[G/N]) = k is the limit of the H^0(G_r)",
            Outcome::stabilization, P(4, 4, 0, 0, 2), P(6, 6, 0, 0, 2), check_proposition, true,
            true, false, false, true);
        add("graded.g1-cohomology",
            "H^i(G_1, gr k[G/N]) is nonzero in some positive degree", Outcome::dimension,
            P(4, 0, 0, 2, 0), P(8, 0, 0, 2, 0), check_g1_graded, true, false, false, true);
        add("infrastructure.d-squared", "d o d = 0 on the cochain complexes",
            Outcome::boolean_check, P(2, 3, 1, 0, 0), P(3, 3, 2, 0, 0), check_d_squared, true,
            true, true);
        return t;
    }();
    return table;
}

}  // namespace

const std::vector<CheckDescriptor>& check_registry() {
    static const std::vector<CheckDescriptor> regs = [] {
        std::vector<CheckDescriptor> r;
        for (const auto& e : entries()) r.push_back(e.desc);
        return r;
    }();
    return regs;
}

const CheckDescriptor* find_check(const std::string& name) {
    for (const auto& d : check_registry())
        if (d.name == name) return &d;
    return nullptr;
}

RunReport run_check(const std::string& name, const CheckParams& params) {
    const Entry* entry = nullptr;
    for (const auto& e : entries())
        if (e.desc.name == name) entry = &e;
    if (!entry) throw std::invalid_argument("unknown check: " + name);

    auto start = std::chrono::steady_clock::now();
    CheckResult res = entry->fn(params);
    auto stop = std::chrono::steady_clock::now();

    RunReport rep;
    rep.check = name;
    rep.params = params;
    rep.status = res.status;
    rep.payload = res.payload.dump();
    rep.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return rep;
}

std::string RunReport::to_json() const {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["code_version"] = kCodeVersion;
    doc["check"] = check;
    doc["params"] = {{"D", params.D},
                     {"E", params.E},
                     {"r", params.r},
                     {"i_max", params.i_max},
                     {"r_max", params.r_max}};
    doc["status"] = sl2coh::to_string(status);
    doc["payload"] = json::parse(payload);
    return doc.dump(2) + "\n";
}

std::string cache_key(const std::string& check, const CheckParams& params) {
    std::string data = check + "\x1f" + params.str() + "\x1f" + kCodeVersion;
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace fs = std::filesystem;

static fs::path cache_path(const std::string& dir, const std::string& check,
                           const CheckParams& params) {
    std::string name = check;
    for (char& c : name)
        if (c == '.') c = '_';
    return fs::path(dir) / (name + "__" + cache_key(check, params) + ".json");
}

bool cache_load(const std::string& dir, const std::string& check, const CheckParams& params,
                RunReport& out) {
    std::ifstream in(cache_path(dir, check, params));
    if (!in) return false;
    json doc;
    try {
        in >> doc;
        if (doc.at("schema_version").get<int>() != kSchemaVersion) return false;
        if (doc.at("code_version").get<std::string>() != kCodeVersion) return false;
        out.check = doc.at("check").get<std::string>();
        const json& p = doc.at("params");
        out.params = {p.at("D").get<int>(), p.at("E").get<int>(), p.at("r").get<int>(),
                      p.at("i_max").get<int>(), p.at("r_max").get<int>()};
        std::string st = doc.at("status").get<std::string>();
        out.status = st == "pass"     ? Status::pass
                     : st == "fail"   ? Status::fail
                                      : Status::inconclusive;
        out.payload = doc.at("payload").dump();
        out.wall_ms = 0;
    } catch (const json::exception&) {
        return false;
    }
    return out.check == check;
}

void cache_store(const std::string& dir, const RunReport& report) {
    fs::create_directories(dir);
    fs::path final = cache_path(dir, report.check, report.params);
    fs::path tmp = final;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << report.to_json();
    }
    fs::rename(tmp, final);
}

}  // namespace sl2coh
