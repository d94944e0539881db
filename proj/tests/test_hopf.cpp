#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sl2coh/gf2field.hpp"
#include "sl2coh/hopf.hpp"

using namespace sl2coh;

namespace {

Poly random_g_poly(std::mt19937_64& rng, int max_exp = 3, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::vector<Monomial> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m(4);
        for (size_t i = 0; i < 4; ++i) m.exps[i] = exp(rng);
        terms.push_back(std::move(m));
    }
    return Poly(ctx_g(), std::move(terms));
}

SL2Point matmul(const GF2m& f, const SL2Point& p, const SL2Point& q) {
    return {f.add(f.mul(p.a, q.a), f.mul(p.b, q.c)), f.add(f.mul(p.a, q.b), f.mul(p.b, q.d)),
            f.add(f.mul(p.c, q.a), f.mul(p.d, q.c)), f.add(f.mul(p.c, q.b), f.mul(p.d, q.d))};
}

SL2Point inverse(const GF2m& f, const SL2Point& p) {
    // det = 1, characteristic 2
    return {p.d, p.b, p.c, p.a};
}

std::map<std::string, uint16_t> at_point(const SL2Point& p) {
    return {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}};
}

std::map<std::string, uint16_t> at_pair(const SL2Point& p, const SL2Point& q) {
    return {{"a", p.a},   {"b", p.b},   {"c", p.c},   {"d", p.d},
            {"a.2", q.a}, {"b.2", q.b}, {"c.2", q.c}, {"d.2", q.d}};
}

std::map<std::string, uint16_t> at_coact(const SL2Point& g, const SL2Point& x) {
    return {{"a", x.a},     {"b", x.b},    {"c", x.c},     {"d", x.d},
            {"alpha", g.a}, {"beta", g.b}, {"gamma", g.c}, {"delta", g.d}};
}

}  // namespace

TEST_CASE("normal_form preserves values on the variety") {
    std::mt19937_64 rng(31);
    GF2m f(5);
    for (int i = 0; i < 120; ++i) {
        Poly p = random_g_poly(rng);
        SL2Point pt = random_sl2_point(f, rng);
        CHECK(evaluate(normal_form(p), f, at_point(pt)) == evaluate(p, f, at_point(pt)));
    }
}

TEST_CASE("normal_form straightens every monomial and is idempotent") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 120; ++i) {
        Poly p = normal_form(random_g_poly(rng));
        for (const Monomial& m : p.terms()) CHECK((m.exps[0] == 0 || m.exps[3] == 0));
        CHECK(normal_form(p) == p);
    }
}

TEST_CASE("normal_form is a ring map") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 120; ++i) {
        Poly p = random_g_poly(rng), q = random_g_poly(rng);
        CHECK(normal_form(p * q) == normal_form(normal_form(p) * normal_form(q)));
        CHECK(normal_form(p + q) == normal_form(p) + normal_form(q));
    }
}

TEST_CASE("comultiplication evaluates as matrix product") {
    std::mt19937_64 rng(43);
    GF2m f(4);
    for (int i = 0; i < 120; ++i) {
        Poly p = random_g_poly(rng);
        SL2Point g1 = random_sl2_point(f, rng), g2 = random_sl2_point(f, rng);
        CHECK(evaluate(comultiply(p), f, at_pair(g1, g2)) ==
              evaluate(p, f, at_point(matmul(f, g1, g2))));
    }
}

TEST_CASE("counit evaluates at the identity") {
    std::mt19937_64 rng(47);
    GF2m f(1);
    for (int i = 0; i < 120; ++i) {
        Poly p = random_g_poly(rng);
        CHECK(int(counit(p)) == int(evaluate(p, f, {{"a", 1}, {"b", 0}, {"c", 0}, {"d", 1}})));
    }
}

TEST_CASE("antipode evaluates at the inverse") {
    std::mt19937_64 rng(53);
    GF2m f(6);
    for (int i = 0; i < 120; ++i) {
        Poly p = random_g_poly(rng);
        SL2Point pt = random_sl2_point(f, rng);
        CHECK(evaluate(antipode(p), f, at_point(pt)) == evaluate(p, f, at_point(inverse(f, pt))));
    }
}

TEST_CASE("translations by the involution") {
    std::mt19937_64 rng(59);
    GF2m f(3);
    for (int i = 0; i < 120; ++i) {
        Poly p = random_g_poly(rng);
        SL2Point pt = random_sl2_point(f, rng);
        // right: g -> g sigma swaps the columns; left: g -> sigma g swaps the rows
        SL2Point right{pt.b, pt.a, pt.d, pt.c};
        SL2Point left{pt.c, pt.d, pt.a, pt.b};
        CHECK(evaluate(sigma_translate(p), f, at_point(pt)) == evaluate(p, f, at_point(right)));
        CHECK(evaluate(sigma_translate_left(p), f, at_point(pt)) == evaluate(p, f, at_point(left)));
    }
}

TEST_CASE("hopf axioms through counit") {
    std::mt19937_64 rng(67);
    // (eps (x) id) Delta = id: substituting the identity into the first factor
    const Ctx& t2 = ctx_tensor2();
    std::map<std::string, Poly> left_id = {{"a", Poly::one(t2)},
                                           {"b", Poly::zero(t2)},
                                           {"c", Poly::zero(t2)},
                                           {"d", Poly::one(t2)}};
    std::map<std::string, Poly> right_id = {{"a.2", Poly::one(t2)},
                                            {"b.2", Poly::zero(t2)},
                                            {"c.2", Poly::zero(t2)},
                                            {"d.2", Poly::one(t2)}};
    for (int i = 0; i < 120; ++i) {
        Poly p = normal_form(random_g_poly(rng));
        Poly d = comultiply(p);
        Poly first = normal_form(d.substitute(left_id, t2));   // lives in the ".2" copy
        Poly second = normal_form(d.substitute(right_id, t2)); // lives in the plain copy
        std::map<std::string, Poly> rename = {{"a.2", Poly::var(ctx_g(), "a")},
                                              {"b.2", Poly::var(ctx_g(), "b")},
                                              {"c.2", Poly::var(ctx_g(), "c")},
                                              {"d.2", Poly::var(ctx_g(), "d")}};
        CHECK(normal_form(first.substitute(rename, ctx_g())) == p);
        CHECK(second.substitute({{"a.2", Poly::zero(ctx_g())},
                                 {"b.2", Poly::zero(ctx_g())},
                                 {"c.2", Poly::zero(ctx_g())},
                                 {"d.2", Poly::zero(ctx_g())}},
                                ctx_g()) == p);
    }
}

TEST_CASE("frobenius kernel quotient") {
    CHECK(gr_basis(1).size() == 8);
    CHECK(gr_basis(2).size() == 64);
    std::mt19937_64 rng(71);
    for (int r = 1; r <= 2; ++r) {
        for (int i = 0; i < 60; ++i) {
            Poly p = random_g_poly(rng), q = random_g_poly(rng);
            // ring map onto the quotient
            CHECK(gr_normal_form(p * q, r) ==
                  gr_normal_form(gr_normal_form(p, r) * gr_normal_form(q, r), r));
            CHECK(gr_normal_form(gr_normal_form(p, r), r) == gr_normal_form(p, r));
            Poly nf = gr_normal_form(p, r);
            for (const Monomial& m : nf.terms()) {
                CHECK(m.exps[3] == 0);
                for (size_t v = 0; v < 3; ++v) CHECK(m.exps[v] < (1 << r));
            }
        }
        // vanishing ideal: f^{2^r} maps to f(identity)^{2^r}
        Poly b = Poly::var(ctx_g(), "b");
        CHECK(gr_normal_form(b.pow(uint64_t(1) << r), r) == Poly::zero(ctx_g()));
        Poly ad = Poly::var(ctx_g(), "a") * Poly::var(ctx_g(), "d");
        CHECK(gr_normal_form(ad.pow(uint64_t(1) << r), r) == Poly::one(ctx_g()));
    }
}

TEST_CASE("straightened basis sizes and order") {
    CHECK(straightened_basis(6).size() == 140);
    CHECK(straightened_basis(8).size() == 285);
    auto b6 = straightened_basis(6), b8 = straightened_basis(8);
    for (size_t i = 0; i < b6.size(); ++i) CHECK(b6[i] == b8[i]);  // prefix stability
    for (size_t i = 1; i < b6.size(); ++i) CHECK(b6[i - 1] < b6[i]);
}
