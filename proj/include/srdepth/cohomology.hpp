#ifndef SRDEPTH_COHOMOLOGY_HPP
#define SRDEPTH_COHOMOLOGY_HPP

#include <optional>
#include <vector>

#include "srdepth/complex.hpp"
#include "srdepth/field.hpp"
#include "srdepth/linalg.hpp"

namespace srdepth {

/// Cohomology dimensions in degrees min_degree .. min_degree + dims.size() - 1;
/// zero outside that window.
struct CohomologyProfile {
    FieldSpec field = FieldSpec::rationals();
    int min_degree = 0;
    std::vector<Index> dims;

    Index at(int degree) const
    {
        const int k = degree - min_degree;
        return k >= 0 && k < static_cast<int>(dims.size()) ? dims[static_cast<std::size_t>(k)] : 0;
    }
    int max_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }
    std::optional<int> first_nonzero() const;
    /// True if H^i = 0 for every i ≤ bound.
    bool vanishes_through(int bound) const;
    /// Σ (-1)^i dim H^i.
    long long alternating_sum() const;
};

/// Coboundary from the faces with `card` vertices to those with card+1,
/// with signs from the increasing vertex order. Row/column order is the
/// canonical face order.
IntMatrix coboundary(const SimplicialComplex& K, int card);

/// Reduced cohomology H̃^i(K; F) for -1 ≤ i ≤ dim K, from the augmented
/// cochain complex (∅ spans degree -1).
CohomologyProfile reduced_cohomology(const SimplicialComplex& K, const FieldSpec& field);

/// H^i(K, L; F) for 0 ≤ i ≤ dim K, from the cochains on faces of K not in L.
/// L is matched to K through vertex labels.
CohomologyProfile relative_cohomology(const SimplicialComplex& K, const SimplicialComplex& L,
                                      const FieldSpec& field);

/// H^i(|K|, |K| - x; F) for x interior to σ, via the isomorphism with
/// H̃^{i-♯σ}(link_K σ; F). Degrees 0..dim K.
CohomologyProfile local_cohomology(const SimplicialComplex& K, Face sigma, const FieldSpec& field);

/// The same groups computed as H^i(K, cost_K σ; F).
CohomologyProfile local_cohomology_relative(const SimplicialComplex& K, Face sigma, const FieldSpec& field);

}  // namespace srdepth

#endif  // SRDEPTH_COHOMOLOGY_HPP
