#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sl2coh/gf2field.hpp"
#include "sl2coh/poly.hpp"

using namespace sl2coh;

namespace {

Poly random_poly(const Ctx& ctx, std::mt19937_64& rng, int max_exp = 4, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::vector<Monomial> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m(ctx->size());
        for (size_t i = 0; i < ctx->size(); ++i) m.exps[i] = exp(rng);
        terms.push_back(std::move(m));
    }
    return Poly(ctx, std::move(terms));
}

}  // namespace

TEST_CASE("ring laws on random triples") {
    Ctx ctx = make_context({"x", "y", "z"});
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1200; ++i) {
        Poly f = random_poly(ctx, rng), g = random_poly(ctx, rng), h = random_poly(ctx, rng);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f + g == g + f);
        CHECK(f + f == Poly::zero(ctx));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * Poly::one(ctx) == f);
        CHECK(f * Poly::zero(ctx) == Poly::zero(ctx));
        // characteristic 2 Frobenius
        CHECK((f + g) * (f + g) == f * f + g * g);
        CHECK(f.pow(2) == f * f);
    }
}

TEST_CASE("pow agrees with repeated multiplication") {
    Ctx ctx = make_context({"x", "y"});
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Poly f = random_poly(ctx, rng, 3, 3);
        Poly acc = Poly::one(ctx);
        for (uint64_t n = 0; n <= 5; ++n) {
            CHECK(f.pow(n) == acc);
            acc = acc * f;
        }
    }
}

TEST_CASE("graded-lex term order") {
    Ctx ctx = make_context({"x", "y"});
    Poly p = parse("x^2 + y^3 + x*y + 1", ctx);
    const auto& t = p.terms();
    for (size_t i = 1; i < t.size(); ++i) CHECK(t[i - 1] < t[i]);
    CHECK(t.front().is_one());
    CHECK(t.back().grade() == 3);
}

TEST_CASE("format and parse round trip") {
    Ctx ctx = make_context({"x", "y", "z"});
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        Poly f = random_poly(ctx, rng);
        CHECK(parse(format(f), ctx) == f);
    }
    CHECK(format(Poly::zero(ctx)) == "0");
    CHECK(format(Poly::one(ctx)) == "1");
    CHECK(parse("  x ^ 2 + y * z ", ctx) == parse("x^2+y*z", ctx));
    CHECK(parse("x + x", ctx) == Poly::zero(ctx));
    CHECK_THROWS_AS(parse("x + q", ctx), ParseError);
    CHECK_THROWS_AS(parse("x +", ctx), ParseError);
    CHECK_THROWS_AS(parse("", ctx), ParseError);
}

TEST_CASE("substitution is a ring homomorphism") {
    Ctx ctx = make_context({"x", "y"});
    Ctx target = make_context({"u", "v"});
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        Poly f = random_poly(ctx, rng, 3, 3), g = random_poly(ctx, rng, 3, 3);
        std::map<std::string, Poly> im = {{"x", random_poly(target, rng, 2, 2)},
                                          {"y", random_poly(target, rng, 2, 2)}};
        CHECK((f + g).substitute(im, target) == f.substitute(im, target) + g.substitute(im, target));
        CHECK((f * g).substitute(im, target) == f.substitute(im, target) * g.substitute(im, target));
    }
}

TEST_CASE("identity substitution maps by variable name") {
    Ctx small = make_context({"x"});
    Ctx big = make_context({"w", "x"});
    Poly f = parse("x^3 + x", small);
    CHECK(f.substitute({}, big) == parse("x^3 + x", big));
    Ctx other = make_context({"y"});
    CHECK_THROWS_AS(f.substitute({}, other), ContextError);
}

TEST_CASE("laurent variables") {
    Ctx ctx = make_context({"s", "x"}, {"s"});
    Poly p = Poly::var(ctx, "s", -2) * Poly::var(ctx, "x");
    CHECK(p.degree() == 3);
    CHECK(p.terms()[0].exps[0] == -2);
    Ctx plain = make_context({"s", "x"});
    CHECK_THROWS(Poly::var(plain, "s", -1));
}

TEST_CASE("parameter variables do not count toward degree") {
    Ctx ctx = make_context({"x", "t"}, {}, {"t"});
    Poly p = Poly::var(ctx, "x", 2) * Poly::var(ctx, "t", 5);
    CHECK(p.degree() == 2);
}

TEST_CASE("derivative in characteristic 2") {
    Ctx ctx = make_context({"x", "y"});
    CHECK(parse("x^2", ctx).derivative("x") == Poly::zero(ctx));
    CHECK(parse("x^3", ctx).derivative("x") == parse("x^2", ctx));
    CHECK(parse("x*y + y", ctx).derivative("x") == parse("y", ctx));
    std::mt19937_64 rng(19);
    for (int i = 0; i < 200; ++i) {
        Poly f = random_poly(ctx, rng), g = random_poly(ctx, rng);
        // Leibniz
        CHECK((f * g).derivative("x") ==
              f.derivative("x") * g + f * g.derivative("x"));
        CHECK((f + g).derivative("x") == f.derivative("x") + g.derivative("x"));
    }
}

TEST_CASE("arithmetic matches pointwise evaluation over small fields") {
    Ctx ctx = make_context({"x", "y", "z"});
    std::mt19937_64 rng(23);
    for (int m = 1; m <= 8; ++m) {
        GF2m field(m);
        std::uniform_int_distribution<uint32_t> dist(0, field.order() - 1u);
        for (int i = 0; i < 25; ++i) {
            Poly f = random_poly(ctx, rng), g = random_poly(ctx, rng);
            std::map<std::string, uint16_t> at = {{"x", uint16_t(dist(rng))},
                                                  {"y", uint16_t(dist(rng))},
                                                  {"z", uint16_t(dist(rng))}};
            CHECK(evaluate(f + g, field, at) == (evaluate(f, field, at) ^ evaluate(g, field, at)));
            CHECK(evaluate(f * g, field, at) ==
                  field.mul(evaluate(f, field, at), evaluate(g, field, at)));
        }
    }
}

TEST_CASE("exponent overflow guard") {
    Ctx ctx = make_context({"x"});
    Poly big = Poly::var(ctx, "x", (1 << 20) - 1);
    CHECK_THROWS_AS(big * big, OverflowError);
}
