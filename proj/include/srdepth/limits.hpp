#ifndef SRDEPTH_LIMITS_HPP
#define SRDEPTH_LIMITS_HPP

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "srdepth/complex.hpp"
#include "srdepth/field.hpp"
#include "srdepth/linalg.hpp"
#include "srdepth/verdict.hpp"

namespace srdepth {

// Higher limits over the poset of nonempty faces of K of the functor
// σ ↦ F(st_K σ), with σ ⊆ τ acting by the restriction F(st σ) → F(st τ).

/// A chain σ_0 ⊆ σ_1 ⊆ ... ⊆ σ_n of nonempty faces.
using Flag = std::vector<Face>;

enum class Chains {
    /// Strictly increasing flags only; the complex has length ≤ dim K.
    normalized,
    /// All composable chains, identities included.
    unnormalized,
};

/// Chains of `length` elements drawn from `elements` (given in canonical face
/// order), in facewise lexicographic order.
std::vector<Flag> chains(std::span<const Face> elements, int length, Chains kind);

/// Degree-d cochain complex C^0 → C^1 → ... with C^n the product over chains
/// c_0 ⊆ ... ⊆ c_n of F(st c_n)_d, assembled from restriction maps. Returns
/// d_0..d_N where the target of d_N is the last term kept: C^{dim K+1} = 0
/// for the normalized complex, C^{max_n} for the truncated unnormalized one.
std::vector<IntMatrix> limits_complex(const SimplicialComplex& K, int d, Chains kind = Chains::normalized,
                                      int max_n = -1);

/// Degree-d map F(K)_d → C^0_d sending a monomial to its family of star
/// restrictions.
IntMatrix rho_matrix(const SimplicialComplex& K, int d);

/// (dim ker ρ, dim lim^0 / im ρ) in degree d, from the assembled complex.
std::pair<Index, Index> rho(const SimplicialComplex& K, const FieldSpec& field, int d);

struct DegreeLimits {
    /// lim^i for 0 ≤ i ≤ dim K.
    std::vector<Index> lim;
    Index rho_kernel = 0;
    Index rho_cokernel = 0;
};

struct LimitsProfile {
    FieldSpec field = FieldSpec::rationals();
    int d_max = 0;
    int top = -1;  ///< dim K: highest i with a possibly nonzero lim^i
    std::map<int, DegreeLimits> by_degree;

    Index lim(int i, int d) const;
    /// L^{-1} = ker ρ, L^0 = coker ρ, L^i = lim^i for i ≥ 1; degree d.
    Index L(int i, int d) const;
    /// Σ over computed degrees.
    Index total_lim(int i) const;
    Index total_L(int i) const;
};

/// Cohomology of the flag complex of the nonempty faces τ with τ ∪ s ∈ K,
/// with identity transition maps: the summand of the limit complex spanned
/// by monomials with support exactly s. Also returns rank of ρ on it.
struct SupportBlock {
    std::vector<Index> cohomology;
    Index rho_rank = 0;
};
SupportBlock support_block(const SimplicialComplex& K, Face support, const FieldSpec& field);

/// lim^i and L^{-1}, L^0 in every even degree d ≤ d_max. The complex splits
/// by monomial support; each support's block is computed once and weighted
/// by the number of degree-d monomials with that support.
LimitsProfile derived_limit_dims(const SimplicialComplex& K, const FieldSpec& field, int d_max);

struct SrdecReport {
    Verdict verdict;
    LimitsProfile profile;
    /// First failing (i, d), if any.
    std::optional<std::pair<int, int>> first_failure;
};

/// Checks lim^0_d = dim F(K)_d + [d=0]·dim H̃^0(K) and, for i ≥ 1,
/// lim^i_d = [d=0]·dim H^i(K) for all even d ≤ d_max.
SrdecReport verify_srdec(const SimplicialComplex& K, const FieldSpec& field, int d_max);
SrdecReport verify_srdec(const LimitsProfile& profile, const SimplicialComplex& K);

inline int default_d_max(const SimplicialComplex& K) { return 4 * K.m(); }

}  // namespace srdepth

#endif  // SRDEPTH_LIMITS_HPP
