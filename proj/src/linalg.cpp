#include "srdepth/linalg.hpp"

#include <string>

#include "srdepth/error.hpp"

namespace srdepth {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 31) || !srdepth::is_prime(p))
        throw Error(ErrorCode::BadParameter, std::to_string(p) + " is not a prime below 2^31");
    return FieldSpec(Kind::prime, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    if (text == "q" || text == "Q") return rationals();
    if (text.size() > 2 && text.substr(0, 2) == "p=") {
        const std::string digits(text.substr(2));
        if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 12)
            return prime(std::stoull(digits));
    }
    throw Error(ErrorCode::BadParameter, "field must be 'q' or 'p=<prime>', got '" + std::string(text) + "'");
}

std::string FieldSpec::name() const
{
    return is_prime() ? "p=" + std::to_string(p_) : "q";
}

template <typename Field>
ExactMatrix<Field>::ExactMatrix(const IntMatrix& a, Field field) : field_(field), cols_(a.cols())
{
    rows_.resize(static_cast<std::size_t>(a.rows()));
    for (Index i = 0; i < a.outerSize(); ++i) {
        auto& row = rows_[static_cast<std::size_t>(i)];
        for (IntMatrix::InnerIterator it(a, i); it; ++it) {
            auto value = field_.from_integer(it.value());
            if (!Field::is_zero(value)) row.emplace_back(it.col(), std::move(value));
        }
    }
}

template <typename Field>
Index ExactMatrix<Field>::rank() const
{
    std::vector<Row> pivots(static_cast<std::size_t>(cols_));
    Index found = 0;
    Row scratch;
    for (const Row& input : rows_) {
        Row current = input;
        while (!current.empty()) {
            const Index lead = current.front().first;
            Row& pivot = pivots[static_cast<std::size_t>(lead)];
            if (pivot.empty()) {
                const Element scale = field_.inv(current.front().second);
                for (auto& entry : current) entry.second = field_.mul(entry.second, scale);
                pivot = std::move(current);
                ++found;
                break;
            }
            // current -= current[lead] * pivot; pivot has leading entry 1.
            const Element factor = current.front().second;
            scratch.clear();
            auto a = current.begin() + 1;
            auto b = pivot.begin() + 1;
            while (a != current.end() || b != pivot.end()) {
                if (b == pivot.end() || (a != current.end() && a->first < b->first)) {
                    scratch.push_back(std::move(*a++));
                } else if (a == current.end() || b->first < a->first) {
                    scratch.emplace_back(b->first, field_.sub(Element(0), field_.mul(factor, b->second)));
                    ++b;
                } else {
                    Element value = field_.sub(a->second, field_.mul(factor, b->second));
                    if (!Field::is_zero(value)) scratch.emplace_back(a->first, std::move(value));
                    ++a;
                    ++b;
                }
            }
            std::swap(current, scratch);
        }
    }
    return found;
}

template class ExactMatrix<PrimeField>;
template class ExactMatrix<RationalField>;

Index rank(const IntMatrix& a, const FieldSpec& field)
{
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return with_field(field, [&](auto policy) {
        using Policy = decltype(policy);
        // Eliminate along the shorter side.
        if (a.rows() > a.cols()) {
            const IntMatrix t = a.transpose();
            return ExactMatrix<Policy>(t, policy).rank();
        }
        return ExactMatrix<Policy>(a, policy).rank();
    });
}

bool is_zero_over(const IntMatrix& a, const FieldSpec& field)
{
    for (Index i = 0; i < a.outerSize(); ++i)
        for (IntMatrix::InnerIterator it(a, i); it; ++it) {
            if (it.value() == 0) continue;
            if (!field.is_prime() || it.value() % static_cast<std::int64_t>(field.characteristic()) != 0)
                return false;
        }
    return true;
}

std::vector<Index> cohomology_dims(std::span<const IntMatrix> differentials, const FieldSpec& field)
{
    const std::size_t n_maps = differentials.size();
    for (std::size_t n = 0; n + 1 < n_maps; ++n) {
        const IntMatrix& d = differentials[n];
        const IntMatrix& next = differentials[n + 1];
        if (next.cols() != d.rows())
            throw Error(ErrorCode::NotAComplex, "shape mismatch between d_" + std::to_string(n) +
                                                    " and d_" + std::to_string(n + 1));
        const IntMatrix product = next * d;
        if (!is_zero_over(product, field))
            throw Error(ErrorCode::NotAComplex, "d_" + std::to_string(n + 1) + " * d_" + std::to_string(n) + " != 0");
    }
    if (n_maps == 0) return {};
    std::vector<Index> ranks(n_maps);
    for (std::size_t n = 0; n < n_maps; ++n) ranks[n] = rank(differentials[n], field);
    std::vector<Index> dims;
    dims.reserve(n_maps + 1);
    for (std::size_t n = 0; n < n_maps; ++n)
        dims.push_back(differentials[n].cols() - ranks[n] - (n > 0 ? ranks[n - 1] : 0));
    dims.push_back(differentials.back().rows() - ranks.back());
    return dims;
}

}  // namespace srdepth
