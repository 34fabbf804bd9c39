#include "srdepth/face_ring.hpp"

#include <algorithm>

#include "srdepth/error.hpp"

namespace srdepth {

namespace {

void require_even(int d)
{
    if (d < 0 || d % 2 != 0)
        throw Error(ErrorCode::OddDegree, "internal degree " + std::to_string(d) + " is not a non-negative even number");
}

// Depth-first over variables with the smallest exponent first, which emits
// exponent vectors in increasing lexicographic order.
template <typename Allowed>
void enumerate(int m, int remaining, int var, std::uint64_t support, Exponent& current, Allowed& allowed,
               std::vector<Exponent>& out)
{
    if (var == m) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        const std::uint64_t next = e > 0 ? support | (std::uint64_t{1} << var) : support;
        if (e == 1 && !allowed(Face(next))) break;
        current[static_cast<std::size_t>(var)] = e;
        enumerate(m, remaining - e, var + 1, next, current, allowed, out);
    }
    current[static_cast<std::size_t>(var)] = 0;
}

template <typename Allowed>
MonomialBasis basis_where(int m, int d, Allowed allowed)
{
    require_even(d);
    MonomialBasis basis{d, {}};
    Exponent current(static_cast<std::size_t>(m), 0);
    enumerate(m, d / 2, 0, 0, current, allowed, basis.monomials);
    return basis;
}

}  // namespace

long long binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 result = 1;
    for (long long i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return static_cast<long long>(result);
}

long long monomials_with_support(int support_size, int poly_degree)
{
    if (support_size == 0) return poly_degree == 0 ? 1 : 0;
    return binomial(poly_degree - 1, support_size - 1);
}

long long graded_dim(const SimplicialComplex& K, int d)
{
    require_even(d);
    long long total = 0;
    for (int c = 0; c <= K.dim() + 1; ++c)
        total += static_cast<long long>(K.faces_of_cardinality(c).size()) * monomials_with_support(c, d / 2);
    return total;
}

GradedDims graded_dims(const SimplicialComplex& K, int d_max)
{
    GradedDims dims;
    for (int d = 0; d <= d_max; d += 2) dims[d] = graded_dim(K, d);
    return dims;
}

Face support_of(const Exponent& e)
{
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) bits |= std::uint64_t{1} << i;
    return Face(bits);
}

MonomialBasis monomial_basis(const SimplicialComplex& K, int d)
{
    return basis_where(K.m(), d, [&K](Face s) { return K.contains(s); });
}

MonomialBasis star_basis(const SimplicialComplex& K, Face sigma, int d)
{
    if (!K.contains(sigma)) throw Error(ErrorCode::FaceNotInComplex, "face is not in the complex");
    return basis_where(K.m(), d, [&K, sigma](Face s) { return K.contains(s | sigma); });
}

HilbertSeries hilbert_series(const SimplicialComplex& K)
{
    const int n = K.dim() + 1;
    HilbertSeries series;
    series.denominator_exponent = n;
    series.numerator.assign(static_cast<std::size_t>(2 * n + 1), 0);
    // Σ_σ t^{2♯σ} / (1-t²)^{♯σ}, cleared to the common denominator (1-t²)^n.
    for (int c = 0; c <= n; ++c) {
        const auto count = static_cast<long long>(K.faces_of_cardinality(c).size());
        for (int j = 0; j <= n - c; ++j) {
            const long long term = binomial(n - c, j) * (j % 2 == 0 ? 1 : -1);
            series.numerator[static_cast<std::size_t>(2 * (c + j))] += count * term;
        }
    }
    while (series.numerator.size() > 1 && series.numerator.back() == 0) series.numerator.pop_back();
    return series;
}

std::vector<long long> HilbertSeries::expand(int max_degree) const
{
    std::vector<long long> coeffs(static_cast<std::size_t>(max_degree + 1), 0);
    const int n = denominator_exponent;
    for (std::size_t a = 0; a < numerator.size(); ++a) {
        if (numerator[a] == 0) continue;
        for (int k = 0; static_cast<int>(a) + 2 * k <= max_degree; ++k) {
            const long long inverse_coeff = n == 0 ? (k == 0 ? 1 : 0) : binomial(k + n - 1, n - 1);
            coeffs[a + 2 * static_cast<std::size_t>(k)] += numerator[a] * inverse_coeff;
        }
    }
    return coeffs;
}

IntMatrix restriction_map(const SimplicialComplex& K, Face sigma, Face tau, int d)
{
    if (!sigma.is_subset_of(tau)) throw Error(ErrorCode::NotNested, "restriction needs sigma ⊆ tau");
    const MonomialBasis source = star_basis(K, sigma, d);
    const MonomialBasis target = star_basis(K, tau, d);
    std::vector<Eigen::Triplet<std::int64_t>> triplets;
    for (std::size_t j = 0; j < source.monomials.size(); ++j) {
        const auto it = std::lower_bound(target.monomials.begin(), target.monomials.end(), source.monomials[j]);
        if (it != target.monomials.end() && *it == source.monomials[j])
            triplets.emplace_back(static_cast<Index>(it - target.monomials.begin()), static_cast<Index>(j), 1);
    }
    IntMatrix map(static_cast<Index>(target.monomials.size()), static_cast<Index>(source.monomials.size()));
    map.setFromTriplets(triplets.begin(), triplets.end());
    return map;
}

}  // namespace srdepth
