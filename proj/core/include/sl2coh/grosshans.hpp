#ifndef SL2COH_GROSSHANS_HPP
#define SL2COH_GROSSHANS_HPP

#include <array>
#include <map>
#include <optional>

#include "sl2coh/comodule.hpp"

namespace sl2coh {

/// Left-torus weight of a straightened monomial: exp(c) + exp(d) - exp(a) - exp(b).
/// Convention: the U-invariant generator cd has weight +2.
int weight_of(const Monomial& m);

struct WeightDecomposition {
    std::map<int, Subspace> spaces;
    size_t total_dim() const;
};

/// Decomposition of a torus-stable subspace into weight spaces.
/// Throws when the weight spaces do not sum to the whole space.
WeightDecomposition weight_decompose(const Subspace& m);

/// Largest subcomodule of m whose torus weights lie in [-n, n]: iterates
/// V <- {v in V : rho(v) in V (x) k[G]} from the weight-window slice until
/// stable.  Caps at 50 rounds (the dimension strictly decreases, so this is
/// never reached for well-formed input).
Subspace grosshans_step(const Subspace& m, int n);
Subspace grosshans_step(ModuleId m, int n, int D);

/// Least n with f in grosshans_step(m, n); throws MembershipError when f is
/// outside the module.
int grosshans_degree(const Poly& f, const Subspace& m);

using Character = std::map<int, int64_t>;  // weight -> multiplicity

Character character(const Subspace& m);
Character character_difference(const Character& big, const Character& small);

/// Greedy top-weight-first decomposition into costandard characters
/// chi(nabla(n)) = {n, n-2, ..., -n}.  nullopt on a negative multiplicity.
std::optional<std::map<int, int64_t>> nabla_decompose(Character c);

struct HullReport {
    bool ad_square_drops;                    // grosshans_degree((ad)^2 + ab cd) == 2
    bool graded_dims_ok;                     // dim gr_n k[G/T] = dim gr_n k[G/N] + dim gr_{n-2} k[G/N]
    bool purely_inseparable;                 // squares of graded classes land in gr k[G/N]
    std::vector<std::array<int64_t, 4>> graded_dims;  // n, gr_n kGT, gr_n kGN, gr_{n-2} kGN
    bool ok() const { return ad_square_drops && graded_dims_ok && purely_inseparable; }
};
HullReport hull_check(int D);

/// Associated-graded comodule of the Grosshans filtration of kG_mod_N or
/// kG_mod_T, on echelon complement representatives, with the subquotient
/// coaction computed by projection.
Comodule gr_comodule(ModuleId m, int D);

}  // namespace sl2coh

#endif
