#include <random>

#include "srdepth/complex.hpp"
#include "srdepth/error.hpp"

namespace srdepth {

namespace {

std::vector<int> one_to(int m)
{
    std::vector<int> labels(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) labels[i] = i + 1;
    return labels;
}

Face full_mask(int m)
{
    return Face(m == 0 ? 0 : (~std::uint64_t{0} >> (64 - m)));
}

void require(bool ok, const char* what)
{
    if (!ok) throw Error(ErrorCode::BadParameter, what);
}

}  // namespace

SimplicialComplex simplex(int m)
{
    require(m >= 1 && m <= SimplicialComplex::max_vertices, "simplex needs 1 <= m <= 64");
    const Face top = full_mask(m);
    return SimplicialComplex(one_to(m), std::span<const Face>(&top, 1));
}

SimplicialComplex boundary_simplex(int n)
{
    require(n >= 1 && n + 1 <= 31, "boundary_simplex needs 1 <= n <= 30");
    const int m = n + 1;
    std::vector<Face> facets;
    for (int i = 0; i < m; ++i) facets.push_back(full_mask(m).without(Face::vertex(i)));
    return SimplicialComplex(one_to(m), facets);
}

SimplicialComplex cycle(int n)
{
    require(n >= 3 && n <= SimplicialComplex::max_vertices, "cycle needs 3 <= n <= 64");
    std::vector<Face> facets;
    for (int i = 0; i < n; ++i) facets.push_back(Face::vertex(i) | Face::vertex((i + 1) % n));
    return SimplicialComplex(one_to(n), facets);
}

SimplicialComplex disjoint_points(int k)
{
    require(k >= 1 && k <= SimplicialComplex::max_vertices, "disjoint_points needs 1 <= k <= 64");
    std::vector<Face> facets;
    for (int i = 0; i < k; ++i) facets.push_back(Face::vertex(i));
    return SimplicialComplex(one_to(k), facets);
}

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L)
{
    const int m = K.m() + L.m();
    require(m <= SimplicialComplex::max_vertices, "join exceeds 64 vertices");
    std::vector<Face> facets;
    for (Face a : K.facets())
        for (Face b : L.facets()) facets.emplace_back(a.bits() | (b.bits() << K.m()));
    return SimplicialComplex(one_to(m), facets);
}

SimplicialComplex cone(const SimplicialComplex& K)
{
    return join(simplex(1), K);
}

SimplicialComplex suspension(const SimplicialComplex& K)
{
    return join(disjoint_points(2), K);
}

SimplicialComplex rp2_minimal()
{
    return validate({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                     {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}},
                    6);
}

SimplicialComplex random_complex(int m, int d, double density, std::uint64_t seed)
{
    require(m >= 1 && m <= 20, "random_complex needs 1 <= m <= 20");
    require(d >= 0 && d < m, "random_complex needs 0 <= d < m");
    require(density >= 0.0 && density <= 1.0, "density must lie in [0, 1]");

    // mt19937_64 output is fixed by the standard; distributions are not, so
    // draws are derived from raw output only.
    std::mt19937_64 rng(seed);
    const auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    std::vector<Face> facets;
    std::uint64_t covered = 0;
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        if (std::popcount(bits) != d + 1) continue;
        if (uniform() < density) {
            facets.emplace_back(bits);
            covered |= bits;
        }
    }
    for (int v = 0; v < m; ++v) {
        if ((covered >> v) & 1U) continue;
        std::vector<int> others;
        for (int u = 0; u < m; ++u)
            if (u != v) others.push_back(u);
        std::uint64_t bits = std::uint64_t{1} << v;
        for (int k = 0; k < d; ++k) {
            const auto pick = static_cast<std::size_t>(rng() % others.size());
            bits |= std::uint64_t{1} << others[pick];
            others.erase(others.begin() + static_cast<long>(pick));
        }
        facets.emplace_back(bits);
        covered |= bits;
    }
    return SimplicialComplex(one_to(m), facets);
}

}  // namespace srdepth
