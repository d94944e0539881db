#ifndef SL2COH_COMODULE_HPP
#define SL2COH_COMODULE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sl2coh/gf2matrix.hpp"
#include "sl2coh/hopf.hpp"
#include "sl2coh/poly.hpp"

namespace sl2coh {

/// Thrown when a polynomial fails a subspace-membership precondition.
/// Carries the offending residue after reduction.
struct MembershipError : std::runtime_error {
    Poly residue;
    MembershipError(const std::string& msg, Poly res)
        : std::runtime_error(msg + ": residue " + format(res)), residue(std::move(res)) {}
};

enum class ModuleId {
    kG,
    kG_mod_T,
    kG_mod_N,
    kU_backslash_G,
    quotient,      // k[G/T] / k[G/N], realized on the q-component
    gr_kG_mod_N,
    gr_kG_mod_T,
};

std::string to_string(ModuleId m);

enum class SchemeKind { U_left, T_left, N_left, G_left, Gr_left, T_right, N_right };

struct GroupScheme {
    SchemeKind kind;
    int r = 0;  // Frobenius kernel index, Gr_left only

    static GroupScheme U_left() { return {SchemeKind::U_left}; }
    static GroupScheme T_left() { return {SchemeKind::T_left}; }
    static GroupScheme N_left() { return {SchemeKind::N_left}; }
    static GroupScheme G_left() { return {SchemeKind::G_left}; }
    static GroupScheme Gr_left(int r) { return {SchemeKind::Gr_left, r}; }
    static GroupScheme T_right() { return {SchemeKind::T_right}; }
    static GroupScheme N_right() { return {SchemeKind::N_right}; }
};

std::string to_string(const GroupScheme& g);

/// Indexed straightened monomial basis of k[G] up to degree D.
struct Ambient {
    int D;
    std::vector<Monomial> basis;  // ascending graded-lex

    explicit Ambient(int D);
    size_t index(const Monomial& m) const;  // npos when absent
    static constexpr size_t npos = size_t(-1);
    BitVec to_vec(const Poly& p) const;     // p must be straightened and within degree
    Poly to_poly(const BitVec& v) const;
};

using AmbientPtr = std::shared_ptr<const Ambient>;
AmbientPtr ambient(int D);  // cached

/// Canonical GF(2) subspace of a truncated k[G]: reduced row-echelon basis
/// over the ambient monomial index.  Two computations of the same space
/// produce identical matrices.
class Subspace {
  public:
    explicit Subspace(AmbientPtr amb) : amb_(std::move(amb)), rref_(amb_->basis.size()) {}

    const AmbientPtr& amb() const { return amb_; }
    size_t dim() const { return rref_.rank(); }
    bool add(const Poly& p) { return rref_.add(amb_->to_vec(normal_form(p))); }
    bool add(BitVec v) { return rref_.add(std::move(v)); }
    bool contains(const Poly& p) const { return rref_.contains(amb_->to_vec(normal_form(p))); }
    bool contains(const BitVec& v) const { return rref_.contains(v); }
    BitVec residue(const Poly& p) const { return rref_.reduce(amb_->to_vec(normal_form(p))); }
    const Gf2Rref& rref() const { return rref_; }

    /// Rows in pivot order, as polynomials.
    std::vector<Poly> basis_polys() const;
    std::vector<BitVec> basis_vecs() const;

    bool operator==(const Subspace& other) const;
    bool contains_subspace(const Subspace& other) const;

    Subspace intersect(const Subspace& other) const;
    Subspace sum_with(const Subspace& other) const;

    static Subspace span(const AmbientPtr& amb, const std::vector<Poly>& polys);
    /// {ambient_basis: [...], rows: [bitstrings]}
    std::string to_json() const;

  private:
    AmbientPtr amb_;
    Gf2Rref rref_;
};

/// Image of f under the scheme's translation substitution, in the extended
/// context (t for U, s for T, alpha..delta for G and G_r).  N is not a single
/// substitution and is rejected here.
Poly act(const GroupScheme& g, const Poly& f);

/// Left-translation coaction rho(f)(g, x) = f(g x): M-factor in a..d,
/// acting factor in alpha..delta, both straightened.
Poly left_coaction(const Poly& f);

/// Exact invariants of a truncated module under a group scheme, as the
/// kernel of the generic-parameter translation condition.
Subspace invariants(const Subspace& m, const GroupScheme& g);
Subspace invariants(ModuleId m, const GroupScheme& g, int D);

/// Degree-D slice of the named subalgebra of k[G], computed from the
/// defining invariance condition.
Subspace module_basis(ModuleId m, int D);

/// Canonical free-module generator lists.  Stable under growing D: the list
/// for D is a prefix of the list for D' >= D.
std::vector<Poly> kgn_generators(int D);                       // (ab)^i (cd)^j, straightened
std::vector<std::pair<int, int>> kgn_generator_exponents(int D);
std::vector<Poly> kgt_generators(int D);                       // kgn part, then ad * kgn part

struct FreeDecomposition {
    Poly p, q;  // f = p + q * ad, both in k[G/N]
};

/// Unique decomposition of f in k[G/T] over the basis {1, ad}.
FreeDecomposition free_decompose(const Poly& f);

struct SeparabilityReport {
    bool relation_ok;        // (ad)^2 + ad + ab*cd = 0
    bool derivative_ok;      // d/dx (x^2 + x + ab*cd) = 1
    std::vector<int> power_identity_ok_r;  // r with (ad)^{2^r} + (bc)^{2^r} = 1
    bool ok() const;
};
SeparabilityReport separability_check(int r_max = 4);

struct NonMembershipReport {
    struct Row {
        int r;
        bool power_not_in_kgn;   // (ad)^{2^r} not fixed by sigma
        bool difference_in_kgn;  // ad + (ad)^{2^r} in k[G/N]
    };
    std::vector<Row> rows;
    bool ok() const;
};
NonMembershipReport non_membership_check(int r_max);

/// Finite comodule presented by an abstract basis with a coaction table:
/// rho[i] = list of (j, acting polynomial in k[G], straightened).
struct Comodule {
    std::string name;
    std::vector<std::string> labels;
    std::vector<int> degrees;  // module degree of each basis vector
    std::vector<std::vector<std::pair<size_t, Poly>>> rho;
    size_t dim() const { return rho.size(); }
};

/// Comodule over the canonical generator basis; bases for D <= D' are
/// index-compatible prefixes.
Comodule comodule(ModuleId m, int D);

}  // namespace sl2coh

#endif
