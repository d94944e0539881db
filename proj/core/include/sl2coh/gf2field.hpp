#ifndef SL2COH_GF2FIELD_HPP
#define SL2COH_GF2FIELD_HPP

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "sl2coh/poly.hpp"

namespace sl2coh {

/// Arithmetic in F_{2^m}, m <= 8, for the random-point evaluation oracle.
/// Elements are bit vectors modulo a fixed irreducible polynomial.
class GF2m {
  public:
    explicit GF2m(int m) : m_(m) {
        if (m < 1 || m > 8) throw std::invalid_argument("GF2m: m out of range");
        static constexpr uint16_t irred[9] = {0, 0b10, 0b111, 0b1011, 0b10011,
                                              0b100101, 0b1000011, 0b10000011, 0b100011011};
        mod_ = irred[m];
    }

    int m() const { return m_; }
    uint16_t order() const { return uint16_t(1u << m_); }

    uint16_t add(uint16_t a, uint16_t b) const { return a ^ b; }

    uint16_t mul(uint16_t a, uint16_t b) const {
        uint32_t r = 0, x = a;
        while (b) {
            if (b & 1) r ^= x;
            x <<= 1;
            if (x & (1u << m_)) x ^= mod_;
            b >>= 1;
        }
        return uint16_t(r);
    }

    uint16_t pow(uint16_t a, uint64_t n) const {
        uint16_t r = 1;
        while (n) {
            if (n & 1) r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }

    uint16_t inv(uint16_t a) const {
        if (a == 0) throw std::domain_error("GF2m: inverse of zero");
        return pow(a, (uint64_t(1) << m_) - 2);
    }

  private:
    int m_;
    uint16_t mod_;
};

/// A point of SL2(F_{2^m}): ad + bc = 1 (char 2).
struct SL2Point {
    uint16_t a, b, c, d;
};

inline SL2Point random_sl2_point(const GF2m& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint32_t> dist(0, f.order() - 1u);
    for (;;) {
        uint16_t a = uint16_t(dist(rng)), b = uint16_t(dist(rng)), c = uint16_t(dist(rng));
        if (a != 0) {
            // d = (1 + bc) / a
            uint16_t d = f.mul(f.add(1, f.mul(b, c)), f.inv(a));
            return {a, b, c, d};
        }
        if (b != 0 && c != 0) {
            // a = 0 forces bc = 1
            return {0, b, f.inv(b), uint16_t(dist(rng))};
        }
    }
}

/// Evaluate a polynomial at a point given by variable-name assignments.
/// Negative exponents (laurent variables) require a nonzero value.
inline uint16_t evaluate(const Poly& p, const GF2m& f, const std::map<std::string, uint16_t>& point) {
    uint16_t acc = 0;
    const auto& ctx = *p.ctx();
    for (const auto& mon : p.terms()) {
        uint16_t t = 1;
        for (size_t i = 0; i < mon.exps.size(); ++i) {
            int32_t e = mon.exps[i];
            if (e == 0) continue;
            auto it = point.find(ctx.name(i));
            if (it == point.end()) throw std::invalid_argument("evaluate: no value for " + ctx.name(i));
            uint16_t v = it->second;
            t = f.mul(t, e > 0 ? f.pow(v, uint64_t(e)) : f.pow(f.inv(v), uint64_t(-int64_t(e))));
        }
        acc ^= t;
    }
    return acc;
}

}  // namespace sl2coh

#endif
