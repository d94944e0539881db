#include "sl2coh/hopf.hpp"

#include <algorithm>

namespace sl2coh {

Ctx ctx_g() {
    static Ctx c = make_context({"a", "b", "c", "d"});
    return c;
}
Ctx ctx_g_t() {
    static Ctx c = make_context({"a", "b", "c", "d", "t"}, {}, {"t"});
    return c;
}
Ctx ctx_g_s() {
    static Ctx c = make_context({"a", "b", "c", "d", "s"}, {"s"}, {"s"});
    return c;
}
Ctx ctx_coact() {
    static Ctx c = make_context({"a", "b", "c", "d", "alpha", "beta", "gamma", "delta"}, {},
                                {"alpha", "beta", "gamma", "delta"});
    return c;
}
Ctx ctx_tensor2() {
    static Ctx c = make_context({"a", "b", "c", "d", "a.2", "b.2", "c.2", "d.2"}, {},
                                {"a.2", "b.2", "c.2", "d.2"});
    return c;
}
Ctx ctx_g_x() {
    static Ctx c = make_context({"a", "b", "c", "d", "x"});
    return c;
}

std::vector<Sl2Vars> find_sl2_quadruples(const Ctx& ctx) {
    std::vector<Sl2Vars> out;
    for (size_t i = 0; i < ctx->size(); ++i) {
        const std::string& n = ctx->name(i);
        std::string suffix;
        if (n == "a")
            suffix = "";
        else if (n.rfind("a.", 0) == 0)
            suffix = n.substr(1);
        else if (n == "alpha") {
            int b = ctx->index_of("beta"), c = ctx->index_of("gamma"), d = ctx->index_of("delta");
            if (b >= 0 && c >= 0 && d >= 0) out.push_back({i, size_t(b), size_t(c), size_t(d)});
            continue;
        } else {
            continue;
        }
        int b = ctx->index_of("b" + suffix), c = ctx->index_of("c" + suffix), d = ctx->index_of("d" + suffix);
        if (b >= 0 && c >= 0 && d >= 0) out.push_back({i, size_t(b), size_t(c), size_t(d)});
    }
    return out;
}

Poly straighten(const Poly& p, const Sl2Vars& q) {
    const Ctx& ctx = p.ctx();
    std::vector<Monomial> out;
    for (const Monomial& mon : p.terms()) {
        int32_t ea = mon.exps[q.a], ed = mon.exps[q.d];
        int32_t m = std::min(ea, ed);
        if (m <= 0) {
            out.push_back(mon);
            continue;
        }
        // a^ea d^ed = a^(ea-m) d^(ed-m) (bc+1)^m; C(m,k) is odd iff k's bits lie in m's
        for (int32_t k = 0; k <= m; ++k) {
            if ((k & m) != k) continue;
            Monomial t = mon;
            t.exps[q.a] = ea - m;
            t.exps[q.d] = ed - m;
            t.exps[q.b] += k;
            t.exps[q.c] += k;
            out.push_back(std::move(t));
        }
    }
    return Poly(ctx, std::move(out));
}

Poly normal_form(const Poly& p) {
    Poly r = p;
    for (const Sl2Vars& q : find_sl2_quadruples(p.ctx())) r = straighten(r, q);
    return r;
}

Poly comultiply(const Poly& p) {
    const Ctx& t2 = ctx_tensor2();
    auto v = [&](const char* n) { return Poly::var(t2, n); };
    std::map<std::string, Poly> images = {
        {"a", v("a") * v("a.2") + v("b") * v("c.2")},
        {"b", v("a") * v("b.2") + v("b") * v("d.2")},
        {"c", v("c") * v("a.2") + v("d") * v("c.2")},
        {"d", v("c") * v("b.2") + v("d") * v("d.2")},
    };
    return normal_form(p.substitute(images, t2));
}

bool counit(const Poly& p) {
    auto quads = find_sl2_quadruples(p.ctx());
    bool acc = false;
    for (const Monomial& mon : p.terms()) {
        bool live = true;
        for (const Sl2Vars& q : quads)
            if (mon.exps[q.b] != 0 || mon.exps[q.c] != 0) live = false;
        // any variable outside the quadruples must be absent
        for (size_t i = 0; live && i < mon.exps.size(); ++i) {
            bool in_quad = false;
            for (const Sl2Vars& q : quads)
                if (i == q.a || i == q.b || i == q.c || i == q.d) in_quad = true;
            if (!in_quad && mon.exps[i] != 0) live = false;
        }
        if (live) acc = !acc;
    }
    return acc;
}

namespace {
Poly swap_vars(const Poly& p, const char* x, const char* y, const char* u, const char* v) {
    const Ctx& ctx = p.ctx();
    std::map<std::string, Poly> images = {
        {x, Poly::var(ctx, y)},
        {y, Poly::var(ctx, x)},
        {u, Poly::var(ctx, v)},
        {v, Poly::var(ctx, u)},
    };
    return normal_form(p.substitute(images, ctx));
}
}  // namespace

Poly antipode(const Poly& p) {
    const Ctx& ctx = p.ctx();
    std::map<std::string, Poly> images = {{"a", Poly::var(ctx, "d")}, {"d", Poly::var(ctx, "a")}};
    return normal_form(p.substitute(images, ctx));
}

Poly sigma_translate(const Poly& p) {
    return swap_vars(p, "a", "b", "c", "d");
}

Poly sigma_translate_left(const Poly& p) {
    return swap_vars(p, "a", "c", "b", "d");
}

Poly gr_reduce(const Poly& p, const Sl2Vars& q, int r) {
    if (r < 1) throw std::invalid_argument("gr_reduce: r must be >= 1");
    const int32_t pr = int32_t(1) << r;
    const Ctx& ctx = p.ctx();
    std::vector<Monomial> out;
    for (const Monomial& mon : p.terms()) {
        int32_t l = mon.exps[q.d];
        // d^l = a^(l(2^r-1)) (bc+1)^l since a^(2^r) = 1 in k[G_r]
        for (int32_t k = 0; k <= l; ++k) {
            if ((k & l) != k) continue;
            Monomial t = mon;
            t.exps[q.d] = 0;
            t.exps[q.a] = (t.exps[q.a] + l * (pr - 1)) % pr;
            t.exps[q.b] += k;
            t.exps[q.c] += k;
            if (t.exps[q.b] >= pr || t.exps[q.c] >= pr) continue;
            out.push_back(std::move(t));
        }
    }
    return Poly(ctx, std::move(out));
}

Poly gr_normal_form(const Poly& p, int r) {
    auto quads = find_sl2_quadruples(p.ctx());
    if (quads.empty()) throw ContextError("gr_normal_form: no SL2 quadruple in context");
    return gr_reduce(p, quads.front(), r);
}

std::vector<Monomial> straightened_basis(int D) {
    std::vector<Monomial> out;
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j)
            for (int k = 0; i + j + k <= D; ++k) {
                Monomial m(4);
                m.exps[0] = i, m.exps[1] = j, m.exps[2] = k;
                out.push_back(std::move(m));
            }
    for (int l = 1; l <= D; ++l)
        for (int j = 0; l + j <= D; ++j)
            for (int k = 0; l + j + k <= D; ++k) {
                Monomial m(4);
                m.exps[3] = l, m.exps[1] = j, m.exps[2] = k;
                out.push_back(std::move(m));
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> gr_basis(int r) {
    const int32_t pr = int32_t(1) << r;
    std::vector<Monomial> out;
    for (int32_t i = 0; i < pr; ++i)
        for (int32_t j = 0; j < pr; ++j)
            for (int32_t k = 0; k < pr; ++k) {
                Monomial m(4);
                m.exps[0] = i, m.exps[1] = j, m.exps[2] = k;
                out.push_back(std::move(m));
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sl2coh
