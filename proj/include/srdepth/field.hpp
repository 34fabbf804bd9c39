#ifndef SRDEPTH_FIELD_HPP
#define SRDEPTH_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace srdepth {

/// Coefficient field: a prime field F_p (p < 2^31) or the rationals.
/// Cohomology dimensions and depth depend only on the characteristic, so
/// these two families cover every field.
class FieldSpec {
public:
    enum class Kind { prime, rationals };

    /// Throws BadParameter unless p is a prime below 2^31.
    static FieldSpec prime(std::uint64_t p);
    static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
    /// Accepts "q" or "p=<prime>".
    static FieldSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_prime() const { return kind_ == Kind::prime; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const { return p_; }
    /// "q" or "p=<n>".
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Arithmetic policy for F_p. Elements are least non-negative residues.
struct PrimeField {
    std::uint32_t p;

    using Element = std::uint32_t;

    Element from_integer(std::int64_t v) const
    {
        const std::int64_t r = v % static_cast<std::int64_t>(p);
        return static_cast<Element>(r < 0 ? r + p : r);
    }
    static bool is_zero(Element a) { return a == 0; }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p - b); }
    Element mul(Element a, Element b) const
    {
        return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p);
    }
    Element inv(Element a) const
    {
        // Fermat: a^(p-2).
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1U) result = result * base % p;
            base = base * base % p;
            e >>= 1U;
        }
        return static_cast<Element>(result);
    }
};

/// Arithmetic policy for Q; gmp keeps fractions in lowest terms with a
/// positive denominator.
struct RationalField {
    using Element = mpq_class;

    static Element from_integer(std::int64_t v) { return Element(static_cast<long>(v)); }
    static bool is_zero(const Element& a) { return sgn(a) == 0; }
    static Element sub(const Element& a, const Element& b) { return Element(a - b); }
    static Element mul(const Element& a, const Element& b) { return Element(a * b); }
    static Element inv(const Element& a) { return Element(1 / a); }
};

/// Calls `fn` with the arithmetic policy matching `field`.
template <typename Fn>
decltype(auto) with_field(const FieldSpec& field, Fn&& fn)
{
    if (field.is_prime()) return fn(PrimeField{field.characteristic()});
    return fn(RationalField{});
}

}  // namespace srdepth

#endif  // SRDEPTH_FIELD_HPP
