#include "srdepth/limits.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "srdepth/cohomology.hpp"
#include "srdepth/error.hpp"
#include "srdepth/face_ring.hpp"

namespace srdepth {

namespace {

struct FlagHash {
    std::size_t operator()(const Flag& flag) const noexcept
    {
        std::size_t h = flag.size();
        for (Face f : flag) h ^= std::hash<std::uint64_t>{}(f.bits()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

void extend(std::span<const Face> elements, std::size_t from, int remaining, Chains kind, Flag& current,
            std::vector<Flag>& out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t j = from; j < elements.size(); ++j) {
        const Face next = elements[j];
        if (!current.empty()) {
            const Face last = current.back();
            if (!last.is_subset_of(next)) continue;
            if (kind == Chains::normalized && last == next) continue;
        }
        current.push_back(next);
        // Canonical order puts supersets after subsets, so later elements
        // only need to be searched from here on.
        extend(elements, kind == Chains::normalized ? j + 1 : j, remaining - 1, kind, current, out);
        current.pop_back();
    }
}

/// Cochain complex over chains in `elements` with C^n spanned, at each chain,
/// by a basis of size block_dim(last face). Transition c_n → c_{n+1} is the
/// partial identity given by `transition(from, to)` as (target, source)
/// pairs. Terms C^0..C^{last_n}; if `zero_tail`, one more map into 0 is
/// appended.
template <typename BlockDim, typename Transition>
std::vector<IntMatrix> assemble(std::span<const Face> elements, int last_n, Chains kind, bool zero_tail,
                                BlockDim block_dim, Transition transition)
{
    std::vector<std::vector<Flag>> terms;
    std::vector<std::vector<Index>> offsets;
    std::vector<Index> sizes;
    std::vector<std::unordered_map<Flag, std::size_t, FlagHash>> lookup;
    for (int n = 0; n <= last_n; ++n) {
        terms.push_back(chains(elements, n + 1, kind));
        std::vector<Index> off;
        Index total = 0;
        std::unordered_map<Flag, std::size_t, FlagHash> index;
        for (std::size_t j = 0; j < terms.back().size(); ++j) {
            off.push_back(total);
            total += block_dim(terms.back()[j].back());
            index.emplace(terms.back()[j], j);
        }
        offsets.push_back(std::move(off));
        sizes.push_back(total);
        lookup.push_back(std::move(index));
    }

    std::vector<IntMatrix> differentials;
    for (int n = 0; n < last_n; ++n) {
        const auto& rows = terms[static_cast<std::size_t>(n + 1)];
        const auto& row_off = offsets[static_cast<std::size_t>(n + 1)];
        const auto& col_off = offsets[static_cast<std::size_t>(n)];
        const auto& col_index = lookup[static_cast<std::size_t>(n)];
        std::vector<Eigen::Triplet<std::int64_t>> triplets;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Flag& chain = rows[r];
            const Index width = block_dim(chain.back());
            for (int k = 0; k <= n + 1; ++k) {
                Flag face_of_chain = chain;
                face_of_chain.erase(face_of_chain.begin() + k);
                const std::size_t c = col_index.at(face_of_chain);
                const std::int64_t sign = k % 2 == 0 ? 1 : -1;
                if (k <= n) {
                    for (Index j = 0; j < width; ++j)
                        triplets.emplace_back(row_off[r] + j, col_off[c] + j, sign);
                } else {
                    for (auto [to, from] : transition(chain[static_cast<std::size_t>(n)], chain.back()))
                        triplets.emplace_back(row_off[r] + to, col_off[c] + from, sign);
                }
            }
        }
        IntMatrix d(sizes[static_cast<std::size_t>(n + 1)], sizes[static_cast<std::size_t>(n)]);
        d.setFromTriplets(triplets.begin(), triplets.end());
        differentials.push_back(std::move(d));
    }
    if (zero_tail) differentials.emplace_back(0, sizes.back());
    return differentials;
}

std::vector<Face> nonempty_faces(const SimplicialComplex& K)
{
    return {K.faces().begin() + 1, K.faces().end()};
}

/// Star bases per face in one degree, plus the restriction maps between them.
class StarBases {
public:
    StarBases(const SimplicialComplex& K, int d) : K_(K), d_(d) {}

    const MonomialBasis& of(Face f)
    {
        auto it = cache_.find(f.bits());
        if (it == cache_.end()) it = cache_.emplace(f.bits(), star_basis(K_, f, d_)).first;
        return it->second;
    }

    std::vector<std::pair<Index, Index>> restriction(Face from, Face to)
    {
        const auto& source = of(from).monomials;
        const auto& target = of(to).monomials;
        std::vector<std::pair<Index, Index>> pairs;
        for (std::size_t j = 0; j < source.size(); ++j) {
            const auto it = std::lower_bound(target.begin(), target.end(), source[j]);
            if (it != target.end() && *it == source[j])
                pairs.emplace_back(static_cast<Index>(it - target.begin()), static_cast<Index>(j));
        }
        return pairs;
    }

private:
    const SimplicialComplex& K_;
    int d_;
    std::unordered_map<std::uint64_t, MonomialBasis> cache_;
};

}  // namespace

std::vector<Flag> chains(std::span<const Face> elements, int length, Chains kind)
{
    std::vector<Flag> out;
    if (length <= 0) return out;
    Flag current;
    extend(elements, 0, length, kind, current, out);
    return out;
}

std::vector<IntMatrix> limits_complex(const SimplicialComplex& K, int d, Chains kind, int max_n)
{
    if (d < 0 || d % 2 != 0) throw Error(ErrorCode::OddDegree, "internal degree must be even");
    const std::vector<Face> elements = nonempty_faces(K);
    if (elements.empty()) return {};
    const bool normalized = kind == Chains::normalized;
    if (!normalized && max_n < 0) throw Error(ErrorCode::BadParameter, "unnormalized complex needs a truncation");
    const int last_n = normalized ? K.dim() : max_n;
    StarBases bases(K, d);
    return assemble(
        elements, last_n, kind, normalized,
        [&](Face f) { return static_cast<Index>(bases.of(f).monomials.size()); },
        [&](Face from, Face to) { return bases.restriction(from, to); });
}

IntMatrix rho_matrix(const SimplicialComplex& K, int d)
{
    const MonomialBasis source = monomial_basis(K, d);
    StarBases bases(K, d);
    std::vector<Eigen::Triplet<std::int64_t>> triplets;
    Index offset = 0;
    for (Face sigma : nonempty_faces(K)) {
        const auto& target = bases.of(sigma).monomials;
        for (std::size_t j = 0; j < source.monomials.size(); ++j) {
            const auto it = std::lower_bound(target.begin(), target.end(), source.monomials[j]);
            if (it != target.end() && *it == source.monomials[j])
                triplets.emplace_back(offset + (it - target.begin()), static_cast<Index>(j), 1);
        }
        offset += static_cast<Index>(target.size());
    }
    IntMatrix map(offset, static_cast<Index>(source.monomials.size()));
    map.setFromTriplets(triplets.begin(), triplets.end());
    return map;
}

std::pair<Index, Index> rho(const SimplicialComplex& K, const FieldSpec& field, int d)
{
    const IntMatrix map = rho_matrix(K, d);
    const Index rank_rho = rank(map, field);
    const auto complex = limits_complex(K, d);
    Index lim0 = 0;
    if (!complex.empty()) {
        const IntMatrix composite = complex.front() * map;
        if (!is_zero_over(composite, field))
            throw Error(ErrorCode::NotAComplex, "image of rho is not contained in lim^0");
        lim0 = kernel_dim(complex.front(), field);
    }
    return {map.cols() - rank_rho, lim0 - rank_rho};
}

SupportBlock support_block(const SimplicialComplex& K, Face support, const FieldSpec& field)
{
    if (!K.contains(support)) throw Error(ErrorCode::FaceNotInComplex, "support is not a face");
    std::vector<Face> elements;
    for (Face f : nonempty_faces(K))
        if (K.contains(f | support)) elements.push_back(f);

    SupportBlock block;
    block.cohomology.assign(static_cast<std::size_t>(std::max(K.dim() + 1, 0)), 0);
    if (elements.empty()) return block;

    const auto identity = [](Face, Face) { return std::vector<std::pair<Index, Index>>{{0, 0}}; };
    const auto differentials = assemble(elements, K.dim(), Chains::normalized, true,
                                        [](Face) { return Index{1}; }, identity);
    auto dims = cohomology_dims(differentials, field);
    dims.pop_back();  // the appended zero term
    std::copy(dims.begin(), dims.end(), block.cohomology.begin());

    // ρ on this block: the constant family.
    const IntMatrix ones = DenseIntMatrix::Ones(static_cast<Index>(elements.size()), 1).sparseView();
    if (!is_zero_over(IntMatrix(differentials.front() * ones), field))
        throw Error(ErrorCode::NotAComplex, "constant family is not a cocycle");
    block.rho_rank = rank(ones, field);
    return block;
}

Index LimitsProfile::lim(int i, int d) const
{
    const auto it = by_degree.find(d);
    if (it == by_degree.end() || i < 0 || i >= static_cast<int>(it->second.lim.size())) return 0;
    return it->second.lim[static_cast<std::size_t>(i)];
}

Index LimitsProfile::L(int i, int d) const
{
    if (i == -1 || i == 0) {
        const auto it = by_degree.find(d);
        if (it == by_degree.end()) return 0;
        return i == -1 ? it->second.rho_kernel : it->second.rho_cokernel;
    }
    return lim(i, d);
}

Index LimitsProfile::total_lim(int i) const
{
    Index sum = 0;
    for (const auto& [d, entry] : by_degree) sum += lim(i, d);
    return sum;
}

Index LimitsProfile::total_L(int i) const
{
    Index sum = 0;
    for (const auto& [d, entry] : by_degree) sum += L(i, d);
    return sum;
}

LimitsProfile derived_limit_dims(const SimplicialComplex& K, const FieldSpec& field, int d_max)
{
    if (d_max < 0 || d_max % 2 != 0) throw Error(ErrorCode::OddDegree, "d_max must be even");
    LimitsProfile profile;
    profile.field = field;
    profile.d_max = d_max;
    profile.top = K.dim();
    const std::size_t width = static_cast<std::size_t>(std::max(K.dim() + 1, 0));
    for (int d = 0; d <= d_max; d += 2) profile.by_degree[d].lim.assign(width, 0);

    // Blocks depend only on the set of admissible faces, which many supports
    // share.
    std::unordered_map<Flag, SupportBlock, FlagHash> cache;
    std::map<int, Index> rho_image;
    for (Face s : K.faces()) {
        Flag admissible;
        for (Face f : nonempty_faces(K))
            if (K.contains(f | s)) admissible.push_back(f);
        auto it = cache.find(admissible);
        if (it == cache.end()) it = cache.emplace(admissible, support_block(K, s, field)).first;
        const SupportBlock& block = it->second;
        for (int d = 0; d <= d_max; d += 2) {
            const Index count = monomials_with_support(s.cardinality(), d / 2);
            if (count == 0) continue;
            auto& entry = profile.by_degree[d];
            for (std::size_t i = 0; i < width; ++i) entry.lim[i] += count * block.cohomology[i];
            entry.rho_kernel += count * (1 - block.rho_rank);
            rho_image[d] += count * block.rho_rank;
        }
    }
    for (auto& [d, entry] : profile.by_degree)
        entry.rho_cokernel = (entry.lim.empty() ? 0 : entry.lim.front()) - rho_image[d];
    return profile;
}

SrdecReport verify_srdec(const LimitsProfile& profile, const SimplicialComplex& K)
{
    SrdecReport report{Verdict::ok(), profile, std::nullopt};
    if (K.is_empty_complex()) {
        report.verdict = Verdict::ok("vacuous: no vertices, the face category is empty");
        return report;
    }
    const CohomologyProfile cohomology = reduced_cohomology(K, profile.field);
    for (const auto& [d, entry] : profile.by_degree) {
        for (int i = 0; i <= K.dim(); ++i) {
            Index expected = 0;
            if (i == 0) expected = graded_dim(K, d) + (d == 0 ? cohomology.at(0) : 0);
            else if (d == 0) expected = cohomology.at(i);
            const Index actual = profile.lim(i, d);
            if (actual != expected) {
                report.first_failure = std::make_pair(i, d);
                report.verdict = Verdict::fail("lim^" + std::to_string(i) + " in degree " + std::to_string(d) +
                                               " is " + std::to_string(actual) + ", expected " +
                                               std::to_string(expected));
                return report;
            }
        }
    }
    return report;
}

SrdecReport verify_srdec(const SimplicialComplex& K, const FieldSpec& field, int d_max)
{
    return verify_srdec(derived_limit_dims(K, field, d_max), K);
}

}  // namespace srdepth
