#ifndef SRDEPTH_TESTS_ORACLE_HPP
#define SRDEPTH_TESTS_ORACLE_HPP

// Deliberately naive reference computations. Nothing here uses the library's
// face bitmasks, sparse matrices or field policies: faces are sorted label
// vectors, matrices are dense, ranks come from textbook Gaussian elimination.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Labels = std::vector<int>;
using FaceSet = std::set<Labels>;
using Dense = std::vector<std::vector<long long>>;

/// Every subset of every facet, ∅ included.
inline FaceSet closure(const std::vector<Labels>& facets)
{
    FaceSet out{Labels{}};
    for (const auto& f : facets) {
        const std::size_t n = f.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            Labels s;
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i) & 1U) s.push_back(f[i]);
            out.insert(s);
        }
    }
    return out;
}

inline std::vector<Labels> of_size(const FaceSet& faces, std::size_t k)
{
    std::vector<Labels> out;
    for (const auto& f : faces)
        if (f.size() == k) out.push_back(f);
    return out;
}

/// Rank over F_p (p > 0) or Q (p == 0).
inline long long rank(Dense a, unsigned p)
{
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    if (p == 0) {
        std::vector<std::vector<mpq_class>> q(rows, std::vector<mpq_class>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) q[i][j] = static_cast<long>(a[i][j]);
        long long r = 0;
        for (std::size_t c = 0; c < cols && r < static_cast<long long>(rows); ++c) {
            std::size_t piv = static_cast<std::size_t>(r);
            while (piv < rows && q[piv][c] == 0) ++piv;
            if (piv == rows) continue;
            std::swap(q[piv], q[static_cast<std::size_t>(r)]);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == static_cast<std::size_t>(r) || q[i][c] == 0) continue;
                const mpq_class f = q[i][c] / q[static_cast<std::size_t>(r)][c];
                for (std::size_t j = c; j < cols; ++j) q[i][j] -= f * q[static_cast<std::size_t>(r)][j];
            }
            ++r;
        }
        return r;
    }
    const long long P = p;
    for (auto& row : a)
        for (auto& v : row) v = ((v % P) + P) % P;
    const auto inv = [P](long long x) {
        long long result = 1, e = P - 2;
        while (e) {
            if (e & 1) result = result * x % P;
            x = x * x % P;
            e >>= 1;
        }
        return result;
    };
    long long r = 0;
    for (std::size_t c = 0; c < cols && r < static_cast<long long>(rows); ++c) {
        std::size_t piv = static_cast<std::size_t>(r);
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[static_cast<std::size_t>(r)]);
        const long long s = inv(a[static_cast<std::size_t>(r)][c]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == static_cast<std::size_t>(r) || a[i][c] == 0) continue;
            const long long f = a[i][c] * s % P;
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = ((a[i][j] - f * a[static_cast<std::size_t>(r)][j]) % P + P) % P;
        }
        ++r;
    }
    return r;
}

/// δ: cochains on `lower` → cochains on `upper`, (δφ)(τ) = Σ_i (-1)^i φ(τ \ τ_i).
inline Dense coboundary(const std::vector<Labels>& lower, const std::vector<Labels>& upper)
{
    Dense d(upper.size(), std::vector<long long>(lower.size(), 0));
    for (std::size_t r = 0; r < upper.size(); ++r)
        for (std::size_t i = 0; i < upper[r].size(); ++i) {
            Labels face = upper[r];
            face.erase(face.begin() + static_cast<long>(i));
            const auto it = std::find(lower.begin(), lower.end(), face);
            if (it != lower.end()) d[r][static_cast<std::size_t>(it - lower.begin())] = (i % 2 == 0) ? 1 : -1;
        }
    return d;
}

/// dim H̃^i for i = -1 .. max_size-2, from the augmented cochains of `faces`.
/// With `exclude` nonempty this is relative cohomology of (faces, exclude),
/// in which case ∅ ∈ exclude and the degree -1 term is 0.
inline std::map<int, long long> cohomology(const FaceSet& faces, unsigned p, const FaceSet& exclude = {})
{
    std::size_t top = 0;
    for (const auto& f : faces) top = std::max(top, f.size());
    std::vector<std::vector<Labels>> groups(top + 2);
    for (const auto& f : faces)
        if (!exclude.count(f)) groups[f.size()].push_back(f);
    std::vector<long long> ranks(top + 2, 0);  // ranks[k]: δ from size k to k+1
    for (std::size_t k = 0; k + 1 < groups.size(); ++k)
        if (!groups[k].empty() && !groups[k + 1].empty()) ranks[k] = rank(coboundary(groups[k], groups[k + 1]), p);
    std::map<int, long long> h;
    for (std::size_t k = 0; k <= top; ++k)
        h[static_cast<int>(k) - 1] =
            static_cast<long long>(groups[k].size()) - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
    return h;
}

inline FaceSet link(const FaceSet& faces, const Labels& sigma)
{
    FaceSet out;
    for (const auto& f : faces) {
        Labels u;
        std::set_union(f.begin(), f.end(), sigma.begin(), sigma.end(), std::back_inserter(u));
        Labels common;
        std::set_intersection(f.begin(), f.end(), sigma.begin(), sigma.end(), std::back_inserter(common));
        if (common.empty() && faces.count(u)) out.insert(f);
    }
    return out;
}

inline FaceSet induced(const FaceSet& faces, const Labels& w)
{
    FaceSet out;
    for (const auto& f : faces)
        if (std::includes(w.begin(), w.end(), f.begin(), f.end())) out.insert(f);
    return out;
}

inline Labels vertices(const FaceSet& faces)
{
    std::set<int> v;
    for (const auto& f : faces) v.insert(f.begin(), f.end());
    return {v.begin(), v.end()};
}

/// Reisner: largest r ≤ dim+1 with H̃^i(lk σ) = 0 for all σ and i < r - |σ| - 1.
inline int reisner_depth(const FaceSet& faces, unsigned p)
{
    std::size_t top = 0;
    for (const auto& f : faces) top = std::max(top, f.size());
    int best = static_cast<int>(top);
    for (const auto& sigma : faces) {
        const auto h = cohomology(link(faces, sigma), p);
        for (const auto& [i, v] : h)
            if (v != 0) best = std::min(best, i + static_cast<int>(sigma.size()) + 1);
    }
    return best;
}

/// Hochster: Σ_{|W|=j} dim H̃^{j-i-1}(K_W), for all (i, j).
inline std::vector<std::vector<long long>> betti(const FaceSet& faces, unsigned p)
{
    const Labels v = vertices(faces);
    const std::size_t m = v.size();
    std::vector<std::vector<long long>> beta(m + 1, std::vector<long long>(m + 1, 0));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Labels w;
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1U) w.push_back(v[i]);
        const int j = static_cast<int>(w.size());
        for (const auto& [deg, dim] : cohomology(induced(faces, w), p)) {
            const int i = j - deg - 1;
            if (dim != 0 && i >= 0 && i <= static_cast<int>(m)) beta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += dim;
        }
    }
    return beta;
}

/// Degree-k monomials (exponent vectors over m variables) whose support is a face.
inline long long count_monomials(const FaceSet& faces, int k)
{
    const Labels v = vertices(faces);
    const std::size_t m = v.size();
    long long count = 0;
    std::vector<int> e(m, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
        if (var == m) {
            if (left != 0) return;
            Labels support;
            for (std::size_t i = 0; i < m; ++i)
                if (e[i] > 0) support.push_back(v[i]);
            if (faces.count(support)) ++count;
            return;
        }
        for (int x = 0; x <= left; ++x) {
            e[var] = x;
            rec(var + 1, left - x);
        }
        e[var] = 0;
    };
    rec(0, k);
    return count;
}

}  // namespace oracle

#endif  // SRDEPTH_TESTS_ORACLE_HPP
