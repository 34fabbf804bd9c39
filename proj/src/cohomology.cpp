#include "srdepth/cohomology.hpp"

#include <algorithm>
#include <unordered_map>

#include "srdepth/error.hpp"

namespace srdepth {

std::optional<int> CohomologyProfile::first_nonzero() const
{
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (dims[k] != 0) return min_degree + static_cast<int>(k);
    return std::nullopt;
}

bool CohomologyProfile::vanishes_through(int bound) const
{
    const auto first = first_nonzero();
    return !first || *first > bound;
}

long long CohomologyProfile::alternating_sum() const
{
    long long sum = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        const int degree = min_degree + static_cast<int>(k);
        sum += (degree % 2 == 0 ? 1 : -1) * static_cast<long long>(dims[k]);
    }
    return sum;
}

namespace {

/// Cohomology of the cochain complex spanned by the faces accepted by `keep`
/// with cardinalities first_card..last_card. Entry k of the result belongs
/// to cardinality first_card + k.
template <typename Keep>
std::vector<Index> cochain_cohomology(const SimplicialComplex& K, Keep keep, int first_card, int last_card,
                                      const FieldSpec& field)
{
    if (last_card < first_card) return {};
    std::vector<std::vector<Face>> basis(static_cast<std::size_t>(last_card - first_card + 1));
    for (int c = first_card; c <= last_card; ++c)
        for (Face f : K.faces_of_cardinality(c))
            if (keep(f)) basis[static_cast<std::size_t>(c - first_card)].push_back(f);
    if (basis.size() == 1) return {static_cast<Index>(basis.front().size())};

    std::vector<IntMatrix> differentials;
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) {
        const auto& lower = basis[k];
        const auto& upper = basis[k + 1];
        std::unordered_map<std::uint64_t, Index> column;
        for (std::size_t j = 0; j < lower.size(); ++j) column.emplace(lower[j].bits(), static_cast<Index>(j));
        std::vector<Eigen::Triplet<std::int64_t>> triplets;
        for (std::size_t i = 0; i < upper.size(); ++i) {
            const auto verts = upper[i].positions();
            for (std::size_t j = 0; j < verts.size(); ++j) {
                const auto it = column.find(upper[i].without(Face::vertex(verts[j])).bits());
                if (it != column.end())
                    triplets.emplace_back(static_cast<Index>(i), it->second, j % 2 == 0 ? 1 : -1);
            }
        }
        IntMatrix d(static_cast<Index>(upper.size()), static_cast<Index>(lower.size()));
        d.setFromTriplets(triplets.begin(), triplets.end());
        differentials.push_back(std::move(d));
    }
    return cohomology_dims(differentials, field);
}

}  // namespace

IntMatrix coboundary(const SimplicialComplex& K, int card)
{
    const auto lower = K.faces_of_cardinality(card);
    const auto upper = K.faces_of_cardinality(card + 1);
    std::vector<Eigen::Triplet<std::int64_t>> triplets;
    for (std::size_t i = 0; i < upper.size(); ++i) {
        const auto verts = upper[i].positions();
        for (std::size_t j = 0; j < verts.size(); ++j) {
            const long col = K.index_of(upper[i].without(Face::vertex(verts[j])));
            triplets.emplace_back(static_cast<Index>(i), col, j % 2 == 0 ? 1 : -1);
        }
    }
    IntMatrix d(static_cast<Index>(upper.size()), static_cast<Index>(lower.size()));
    d.setFromTriplets(triplets.begin(), triplets.end());
    return d;
}

CohomologyProfile reduced_cohomology(const SimplicialComplex& K, const FieldSpec& field)
{
    CohomologyProfile profile{field, -1, {}};
    const int top = K.dim() + 1;
    if (top == 0) {
        profile.dims = {1};
        return profile;
    }
    std::vector<IntMatrix> differentials;
    for (int c = 0; c < top; ++c) differentials.push_back(coboundary(K, c));
    profile.dims = cohomology_dims(differentials, field);
    return profile;
}

CohomologyProfile relative_cohomology(const SimplicialComplex& K, const SimplicialComplex& L,
                                      const FieldSpec& field)
{
    std::vector<Face> in_l = embed_faces(K, L);
    std::sort(in_l.begin(), in_l.end(), [](Face a, Face b) { return a.bits() < b.bits(); });
    const auto keep = [&](Face f) {
        return !std::binary_search(in_l.begin(), in_l.end(), f,
                                   [](Face a, Face b) { return a.bits() < b.bits(); });
    };
    CohomologyProfile profile{field, 0, {}};
    profile.dims = cochain_cohomology(K, keep, 1, K.dim() + 1, field);
    return profile;
}

CohomologyProfile local_cohomology(const SimplicialComplex& K, Face sigma, const FieldSpec& field)
{
    if (sigma.empty()) throw Error(ErrorCode::EmptyFace, "local cohomology needs a nonempty face");
    const CohomologyProfile of_link = reduced_cohomology(link(K, sigma), field);
    CohomologyProfile profile{field, 0, std::vector<Index>(static_cast<std::size_t>(K.dim() + 1), 0)};
    for (int i = 0; i <= K.dim(); ++i) profile.dims[static_cast<std::size_t>(i)] = of_link.at(i - sigma.cardinality());
    return profile;
}

CohomologyProfile local_cohomology_relative(const SimplicialComplex& K, Face sigma, const FieldSpec& field)
{
    if (sigma.empty()) throw Error(ErrorCode::EmptyFace, "local cohomology needs a nonempty face");
    return relative_cohomology(K, contrastar(K, sigma), field);
}

}  // namespace srdepth
