#include "sl2coh/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace sl2coh {

namespace {
constexpr int32_t kMaxExponent = 1 << 20;
}

VarContext::VarContext(std::vector<std::string> names, std::vector<std::string> laurent,
                       std::vector<std::string> parameters)
    : names_(std::move(names)), laurent_(names_.size(), false), parameter_(names_.size(), false) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw ContextError("empty variable name");
        if (!seen.insert(n).second) throw ContextError("duplicate variable name: " + n);
    }
    for (const auto& n : laurent) {
        int i = index_of(n);
        if (i < 0) throw ContextError("laurent flag for unknown variable: " + n);
        laurent_[size_t(i)] = true;
    }
    for (const auto& n : parameters) {
        int i = index_of(n);
        if (i < 0) throw ContextError("parameter flag for unknown variable: " + n);
        parameter_[size_t(i)] = true;
    }
}

int VarContext::index_of(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return int(i);
    return -1;
}

Ctx make_context(std::vector<std::string> names, std::vector<std::string> laurent,
                 std::vector<std::string> parameters) {
    return std::make_shared<const VarContext>(std::move(names), std::move(laurent), std::move(parameters));
}

Ctx concat_contexts(const Ctx& a, const Ctx& b) {
    std::vector<std::string> names = a->names();
    std::vector<std::string> laurent, parameters;
    for (size_t i = 0; i < a->size(); ++i) {
        if (a->laurent(i)) laurent.push_back(a->name(i));
        if (a->parameter(i)) parameters.push_back(a->name(i));
    }
    for (size_t i = 0; i < b->size(); ++i) {
        names.push_back(b->name(i));
        if (b->laurent(i)) laurent.push_back(b->name(i));
        if (b->parameter(i)) parameters.push_back(b->name(i));
    }
    return make_context(std::move(names), std::move(laurent), std::move(parameters));
}

int64_t Monomial::grade() const {
    int64_t g = 0;
    for (int32_t e : exps) g += e;
    return g;
}

int64_t Monomial::degree(const VarContext& ctx) const {
    int64_t d = 0;
    for (size_t i = 0; i < exps.size(); ++i)
        if (!ctx.parameter(i)) d += std::abs(exps[i]);
    return d;
}

int64_t Monomial::degree_in(const std::vector<size_t>& vars) const {
    int64_t d = 0;
    for (size_t i : vars) d += std::abs(exps[i]);
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](int32_t e) { return e == 0; });
}

bool Monomial::operator<(const Monomial& other) const {
    int64_t ga = grade(), gb = other.grade();
    if (ga != gb) return ga < gb;
    return exps < other.exps;
}

Poly::Poly(Ctx ctx, std::vector<Monomial> terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end());
    // GF(2): pairs cancel
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (size_t i = 0; i < terms_.size();) {
        size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(terms_[i]);
        i = j;
    }
    terms_ = std::move(out);
    check_exponents();
}

void Poly::check_exponents() const {
    for (const auto& m : terms_) {
        if (m.exps.size() != ctx_->size()) throw ContextError("monomial width does not match context");
        for (size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] < 0 && !ctx_->laurent(i))
                throw ContextError("negative exponent for non-laurent variable " + ctx_->name(i));
            if (std::abs(m.exps[i]) > kMaxExponent) throw OverflowError("exponent overflow");
        }
    }
}

Poly Poly::one(const Ctx& ctx) {
    return Poly(ctx, {Monomial(ctx->size())});
}

Poly Poly::var(const Ctx& ctx, std::string_view name, int32_t exp) {
    int i = ctx->index_of(name);
    if (i < 0) throw ContextError("unknown variable: " + std::string(name));
    Monomial m(ctx->size());
    m.exps[size_t(i)] = exp;
    return Poly(ctx, {std::move(m)});
}

Poly Poly::monomial(const Ctx& ctx, Monomial m) {
    return Poly(ctx, {std::move(m)});
}

int64_t Poly::degree() const {
    int64_t d = -1;
    for (const auto& m : terms_) d = std::max(d, m.degree(*ctx_));
    return d;
}

Poly Poly::operator+(const Poly& other) const {
    if (!ctx_ || !other.ctx_ || !(*ctx_ == *other.ctx_)) throw ContextError("context mismatch in add");
    // merge of two sorted unique lists, dropping pairs
    std::vector<Monomial> out;
    out.reserve(terms_.size() + other.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        if (terms_[i] == other.terms_[j]) {
            ++i, ++j;
        } else if (terms_[i] < other.terms_[j]) {
            out.push_back(terms_[i++]);
        } else {
            out.push_back(other.terms_[j++]);
        }
    }
    out.insert(out.end(), terms_.begin() + long(i), terms_.end());
    out.insert(out.end(), other.terms_.begin() + long(j), other.terms_.end());
    Poly r(ctx_);
    r.terms_ = std::move(out);
    return r;
}

Poly Poly::operator*(const Poly& other) const {
    if (!ctx_ || !other.ctx_ || !(*ctx_ == *other.ctx_)) throw ContextError("context mismatch in mul");
    std::vector<Monomial> prods;
    prods.reserve(terms_.size() * other.terms_.size());
    const size_t w = ctx_->size();
    for (const auto& ma : terms_) {
        for (const auto& mb : other.terms_) {
            Monomial m(w);
            for (size_t k = 0; k < w; ++k) {
                int64_t e = int64_t(ma.exps[k]) + mb.exps[k];
                if (std::abs(e) > kMaxExponent) throw OverflowError("exponent overflow in mul");
                m.exps[k] = int32_t(e);
            }
            prods.push_back(std::move(m));
        }
    }
    return Poly(ctx_, std::move(prods));
}

bool Poly::operator==(const Poly& other) const {
    if (!ctx_ || !other.ctx_) return terms_.empty() && other.terms_.empty();
    return *ctx_ == *other.ctx_ && terms_ == other.terms_;
}

Poly Poly::pow(uint64_t n) const {
    Poly result = Poly::one(ctx_);
    Poly base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

Poly Poly::substitute(const std::map<std::string, Poly>& images, const Ctx& target) const {
    const size_t w = ctx_->size();
    // resolve per-variable images once
    std::vector<Poly> image(w);
    for (size_t i = 0; i < w; ++i) {
        auto it = images.find(ctx_->name(i));
        if (it != images.end()) {
            if (!(*it->second.ctx() == *target)) throw ContextError("substitution image not in target context");
            image[i] = it->second;
        } else {
            image[i] = Poly::var(target, ctx_->name(i));  // throws if target lacks it
        }
    }
    Poly result(target);
    for (const auto& m : terms_) {
        Poly term = Poly::one(target);
        for (size_t i = 0; i < w; ++i) {
            int32_t e = m.exps[i];
            if (e == 0) continue;
            if (e > 0) {
                term = term * image[i].pow(uint64_t(e));
            } else {
                // need the inverse of the image: must be a unit monomial
                const Poly& img = image[i];
                if (img.term_count() != 1) throw ContextError("negative exponent needs invertible image");
                Monomial inv = img.terms()[0];
                for (size_t k = 0; k < inv.exps.size(); ++k) {
                    if (inv.exps[k] != 0 && !target->laurent(k))
                        throw ContextError("Laurent target needed but unavailable for variable " +
                                           target->name(k));
                    inv.exps[k] = -inv.exps[k];
                }
                term = term * Poly::monomial(target, inv).pow(uint64_t(-int64_t(e)));
            }
        }
        result = result + term;
    }
    return result;
}

Poly Poly::derivative(std::string_view var) const {
    int idx = ctx_->index_of(var);
    if (idx < 0) throw ContextError("unknown variable: " + std::string(var));
    std::vector<Monomial> out;
    for (const auto& m : terms_) {
        int32_t e = m.exps[size_t(idx)];
        if (e % 2 == 0) continue;  // char 2: even exponents die, odd give coefficient 1
        Monomial d = m;
        d.exps[size_t(idx)] = e - 1;
        out.push_back(std::move(d));
    }
    return Poly(ctx_, std::move(out));
}

std::string format(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    const auto& terms = p.terms();
    for (size_t t = terms.size(); t-- > 0;) {
        const Monomial& m = terms[t];
        if (m.is_one()) {
            os << "1";
        } else {
            bool first = true;
            for (size_t i = 0; i < m.exps.size(); ++i) {
                if (m.exps[i] == 0) continue;
                if (!first) os << "*";
                first = false;
                os << p.ctx()->name(i);
                if (m.exps[i] != 1) os << "^" << m.exps[i];
            }
        }
        if (t > 0) os << " + ";
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

Poly parse_factor(Lexer& lx, const Ctx& ctx) {
    lx.skip_ws();
    if (lx.pos >= lx.text.size()) throw ParseError("unexpected end of input", lx.pos);
    char c = lx.text[lx.pos];
    if (c == '1' || c == '0') {
        ++lx.pos;
        return c == '1' ? Poly::one(ctx) : Poly::zero(ctx);
    }
    if (!ident_start(c)) throw ParseError("expected variable or constant", lx.pos);
    size_t start = lx.pos;
    while (lx.pos < lx.text.size() && ident_char(lx.text[lx.pos])) ++lx.pos;
    std::string name = lx.text.substr(start, lx.pos - start);
    int idx = ctx->index_of(name);
    if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
    int32_t exp = 1;
    lx.skip_ws();
    if (lx.pos < lx.text.size() && lx.text[lx.pos] == '^') {
        ++lx.pos;
        lx.skip_ws();
        size_t estart = lx.pos;
        if (lx.pos < lx.text.size() && lx.text[lx.pos] == '-') ++lx.pos;
        while (lx.pos < lx.text.size() && std::isdigit(static_cast<unsigned char>(lx.text[lx.pos]))) ++lx.pos;
        if (lx.pos == estart || (lx.text[estart] == '-' && lx.pos == estart + 1))
            throw ParseError("expected integer exponent", estart);
        exp = int32_t(std::stol(lx.text.substr(estart, lx.pos - estart)));
        if (exp < 0 && !ctx->laurent(size_t(idx)))
            throw ParseError("negative exponent only allowed for laurent variables", estart);
    }
    return Poly::var(ctx, name, exp);
}

Poly parse_term(Lexer& lx, const Ctx& ctx) {
    Poly p = parse_factor(lx, ctx);
    while (!lx.eof() && lx.peek() == '*') {
        ++lx.pos;
        p = p * parse_factor(lx, ctx);
    }
    return p;
}

}  // namespace

Poly parse(const std::string& text, const Ctx& ctx) {
    Lexer lx{text};
    if (lx.eof()) throw ParseError("empty input", 0);
    Poly p = parse_term(lx, ctx);
    while (!lx.eof()) {
        if (lx.peek() != '+') throw ParseError("expected '+'", lx.pos);
        ++lx.pos;
        p = p + parse_term(lx, ctx);
    }
    return p;
}

}  // namespace sl2coh
