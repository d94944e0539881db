#ifndef SL2COH_HOPF_HPP
#define SL2COH_HOPF_HPP

#include <vector>

#include "sl2coh/poly.hpp"

namespace sl2coh {

/// Variable indices of one SL2 coordinate quadruple inside a context.
/// The defining relation is a*d + b*c = 1 (characteristic 2).
struct Sl2Vars {
    size_t a, b, c, d;
};

/// Standard contexts.  All are cached singletons.
Ctx ctx_g();        // a b c d
Ctx ctx_g_t();      // a b c d t          (t: unipotent parameter)
Ctx ctx_g_s();      // a b c d s          (s: torus parameter, laurent)
Ctx ctx_coact();    // a b c d alpha beta gamma delta  (acting-copy parameters)
Ctx ctx_tensor2();  // a b c d a.2 b.2 c.2 d.2
Ctx ctx_g_x();      // a b c d x          (auxiliary indeterminate)

/// All SL2 quadruples present in a context: the plain/suffixed a,b,c,d
/// families and the acting copy alpha..delta.
std::vector<Sl2Vars> find_sl2_quadruples(const Ctx& ctx);

/// Straightened normal form: rewrites (a d) -> (b c + 1) in every quadruple
/// until no monomial carries both a and d of the same quadruple.  Ring map.
Poly normal_form(const Poly& p);
/// Same, restricted to one quadruple.
Poly straighten(const Poly& p, const Sl2Vars& q);

/// Comultiplication k[G] -> k[G] (x) k[G], second factor in the ".2" copy.
/// Matrix coproduct extended as a ring map; both factors straightened.
Poly comultiply(const Poly& p);

/// Evaluation at the identity: a,d -> 1; b,c -> 0.
bool counit(const Poly& p);

/// Antipode: inverse-matrix substitution a<->d (b, c fixed in char 2).
Poly antipode(const Poly& p);

/// Right translation by the involution antidiag(1,1): a<->b, c<->d.
Poly sigma_translate(const Poly& p);
/// Left translation by the same involution: a<->c, b<->d.
Poly sigma_translate_left(const Poly& p);

/// Image in k[G_r] = span{a^i b^j c^k : 0 <= i,j,k < 2^r}: eliminates d via
/// d = a^(2^r - 1)(b c + 1), reduces exp(a) mod 2^r and kills monomials with
/// exp(b) or exp(c) >= 2^r.  Ring map onto the 2^(3r)-dimensional quotient.
Poly gr_normal_form(const Poly& p, int r);
/// Same reduction applied to an arbitrary quadruple of a larger context.
Poly gr_reduce(const Poly& p, const Sl2Vars& q, int r);

/// Straightened monomial basis of k[G] up to total degree D, ascending
/// graded-lex.  Basis: a^i b^j c^k and d^l b^j c^k (l >= 1).
std::vector<Monomial> straightened_basis(int D);
/// Monomial basis of k[G_r]: a^i b^j c^k with i,j,k < 2^r, ascending.
std::vector<Monomial> gr_basis(int r);

}  // namespace sl2coh

#endif
