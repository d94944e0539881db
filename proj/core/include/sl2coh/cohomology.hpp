#ifndef SL2COH_COHOMOLOGY_HPP
#define SL2COH_COHOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sl2coh/comodule.hpp"

namespace sl2coh {

struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The group a cochain complex is taken over: the full group scheme (with a
/// per-factor degree bound E on each k[G] tensor factor) or a Frobenius
/// kernel G_r (whose coordinate ring is finite dimensional, no bound).
struct GroupSpec {
    bool frobenius_kernel = false;
    int r = 0;  // kernel index when frobenius_kernel
    int E = 0;  // per-factor degree bound otherwise

    static GroupSpec G(int E) { return {false, 0, E}; }
    static GroupSpec Gr(int r) { return {true, r, 0}; }
    std::string str() const { return frobenius_kernel ? "G" + std::to_string(r) : "G"; }
};

/// Degree-truncated cobar complex C^n = M (x) A^(x n) with
/// d(m (x) f1..fn) = rho(m)(x)f1..fn + sum_i m(x)..Delta(f_i).. + m(x)f1..fn(x)1
/// (characteristic 2, no signs).  Rows of the differential are emitted on
/// demand as sorted column lists.
class CobarComplex {
  public:
    CobarComplex(const GroupSpec& group, const Comodule& m);

    size_t mdim() const { return mdim_; }
    size_t adim() const { return acting_.size(); }
    uint64_t dim(int n) const;
    const std::vector<Monomial>& acting_basis() const { return acting_; }
    size_t acting_index(const Monomial& m) const;

    /// Image of domain basis vector idx under d^n, as sorted C^{n+1} indices.
    std::vector<uint64_t> diff_row(int n, uint64_t idx) const;

    /// d^(n+1) ∘ d^n = 0 over every domain basis vector.
    bool d_squared_zero(int n) const;

    const GroupSpec& group() const { return group_; }

  private:
    GroupSpec group_;
    size_t mdim_;
    std::vector<Monomial> acting_;  // ascending graded-lex
    size_t unit_;
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> delta_;  // per acting basis elt
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> rho_;    // per module basis elt
};

struct CohomologyCell {
    int i;
    uint64_t dim;
};

/// dim H^i = dim ker d^i - rank d^(i-1), for i = 0..i_max.
/// Guard: every needed cochain space must stay under 5*10^7 basis vectors.
std::vector<CohomologyCell> cohomology_dims(const CobarComplex& complex, int i_max);

/// Kernel of d^1 as sparse vectors over the C^1 index (cocycle representatives).
std::vector<std::vector<uint64_t>> h1_cocycles(const CobarComplex& complex);

/// Dimension of the image of H^1 at the small truncation inside H^1 at the
/// large one.  m_index maps small module basis indices into the large module;
/// the acting bases embed by monomial identity.
uint64_t h1_transition_image_dim(const CobarComplex& small, const CobarComplex& large,
                                 const std::vector<size_t>& m_index);

/// Identity embedding for prefix-compatible comodule bases.
std::vector<size_t> prefix_index(size_t small_dim);

struct ExtensionCocycleReport {
    bool m_factor_in_kgn;   // the cocycle's module factor lies in k[G/N]
    bool is_cocycle;        // d^1 c = 0
    bool not_coboundary;    // c != d^0 p for every p in k[G/N]_{<=D}
    std::string cocycle;    // formatted c = rho(ad) + ad (x) 1
    bool ok() const { return m_factor_in_kgn && is_cocycle && not_coboundary; }
};
ExtensionCocycleReport extension_cocycle_check(int D);

struct FrobeniusSplittingReport {
    int r;
    bool lift_invariant;   // rho((ad)^{2^r}) = (ad)^{2^r} (x) 1 over G_r
    bool lifts_class;      // free_decompose((ad)^{2^r}).q = 1
    bool splitting_equivariant;  // q -> q (ad)^{2^r} is G_r-equivariant and splits
    bool ok() const { return lift_invariant && lifts_class && splitting_equivariant; }
};
FrobeniusSplittingReport frobenius_splitting_check(int r, int D);

struct UntwistReport {
    int r;
    bool invariants_match;  // H^0(G_r) = span{(ab)^{2^r i}(cd)^{2^r j}}
    bool ring_iso;          // exponent division by 2^r is multiplicative
    uint64_t dim;
    bool ok() const { return invariants_match && ring_iso; }
};
UntwistReport h0_untwist_check(int r, int D);

struct GrVanishingReport {
    struct Row {
        int r, D, D_prime;
        uint64_t h1_dim, image_dim;
    };
    std::vector<Row> rows;
    bool all_vanish() const;
};
/// For each r <= r_max and D <= D_max: image of H^1(G_r, k[G/N]_{<=D}) inside
/// H^1 at coefficient truncation D' = D + 2^{r+1}.
GrVanishingReport gr_vanishing_check(int r_max, int D_max);

struct H1StabilizationReport {
    struct Cell {
        int D, E;
        uint64_t h0, h1;
        bool class_survives;  // the extension cocycle is not a coboundary here
    };
    std::vector<Cell> cells;
    bool stabilized;          // last two H^1 values agree
    uint64_t stabilized_dim;  // value at the largest cell
};
H1StabilizationReport h1_stabilization(const std::vector<std::pair<int, int>>& grid);

struct PropositionReport {
    H1StabilizationReport g_side;
    GrVanishingReport gr_side;
    bool h0_intersection_is_k;  // cap of H^0(G_r) over r <= R equals span{1}
    bool ok() const;
};
PropositionReport proposition_check(int D, int E, int r_max);

struct GradedG1Report {
    int D;
    std::vector<CohomologyCell> dims;  // H^i(G_1, gr k[G/N])
    bool nontrivial;                   // some i > 0 with dim > 0
};
GradedG1Report g1_gr_cohomology(int D, int i_max);

}  // namespace sl2coh

#endif
