#ifndef SRDEPTH_FACE_RING_HPP
#define SRDEPTH_FACE_RING_HPP

#include <map>
#include <vector>

#include "srdepth/complex.hpp"
#include "srdepth/linalg.hpp"

namespace srdepth {

// The face ring F[V]/(v_σ : σ ∉ K) in the topological grading: every
// generator has degree 2, so only even internal degrees are populated.

/// Internal degree → dimension.
using GradedDims = std::map<int, long long>;

using Exponent = std::vector<int>;

/// Degree-d monomials whose support is a face, in increasing lexicographic
/// order of exponent vectors.
struct MonomialBasis {
    int degree = 0;
    std::vector<Exponent> monomials;
};

/// numerator(t) / (1 - t^2)^denominator_exponent, with the denominator
/// exponent equal to the Krull dimension dim K + 1.
struct HilbertSeries {
    /// Coefficient of t^k at index k.
    std::vector<long long> numerator;
    int denominator_exponent = 0;

    /// Power-series coefficients of t^0 .. t^max_degree.
    std::vector<long long> expand(int max_degree) const;
};

long long binomial(long long n, long long k);

/// Number of monomials of polynomial degree `poly_degree` whose support is
/// exactly a given set of `support_size` variables.
long long monomials_with_support(int support_size, int poly_degree);

/// Throws OddDegree for odd or negative d.
long long graded_dim(const SimplicialComplex& K, int d);
GradedDims graded_dims(const SimplicialComplex& K, int d_max);
MonomialBasis monomial_basis(const SimplicialComplex& K, int d);
/// Basis of F(st_K σ) in degree d, written in the variables of K.
MonomialBasis star_basis(const SimplicialComplex& K, Face sigma, int d);
HilbertSeries hilbert_series(const SimplicialComplex& K);

/// Degree-d matrix of F(st_K σ) → F(st_K τ) for σ ⊆ τ: a basis monomial
/// maps to itself when it survives in the smaller star, else to 0.
IntMatrix restriction_map(const SimplicialComplex& K, Face sigma, Face tau, int d);

/// Support of an exponent vector as a face.
Face support_of(const Exponent& e);

}  // namespace srdepth

#endif  // SRDEPTH_FACE_RING_HPP
