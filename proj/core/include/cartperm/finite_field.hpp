#ifndef CARTPERM_FINITE_FIELD_HPP
#define CARTPERM_FINITE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cartperm {

/// Element of GF(p^k).
///
/// The value is the power-basis coordinate vector (c_0, ..., c_{k-1}) packed
/// as the base-p integer c_0 + c_1 p + ... + c_{k-1} p^{k-1}. Zero is code 0,
/// one is code 1, and the chosen root alpha is code p (when k > 1). Ordering
/// elements by code is the "ascending coordinate encoding" used throughout.
class FieldElement {
public:
    constexpr FieldElement() = default;
    constexpr explicit FieldElement(std::uint32_t code) : code_(code) {}

    constexpr std::uint32_t code() const { return code_; }
    constexpr bool is_zero() const { return code_ == 0; }

    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

private:
    std::uint32_t code_ = 0;
};

std::ostream& operator<<(std::ostream& os, FieldElement x);

namespace detail {
struct FieldData;
}

/// GF(p^k) defined by a monic irreducible polynomial over Z_p.
///
/// Cheap to copy: the tables live behind a shared immutable block, so a Field
/// can be passed by value and shared freely across threads.
class Field {
public:
    /// Builds GF(p^k). Without an explicit polynomial, picks the monic
    /// irreducible of degree k whose coefficient vector has the smallest base-p
    /// encoding (constant term least significant). Throws std::invalid_argument
    /// for non-prime p, k == 0, q >= 2^31 or a bad polynomial.
    static Field make(std::uint32_t p, std::uint32_t k,
                      std::optional<std::vector<std::uint32_t>> irreducible = std::nullopt);

    std::uint32_t p() const;
    std::uint32_t k() const;
    std::uint32_t q() const;
    /// Coefficients c_0..c_k of the modulus, c_k == 1.
    const std::vector<std::uint32_t>& irreducible() const;

    FieldElement zero() const { return FieldElement{0}; }
    FieldElement one() const { return FieldElement{1}; }
    /// The class of x modulo the irreducible polynomial.
    FieldElement root() const;
    /// n mod p, as an element of the prime subfield.
    FieldElement from_integer(std::int64_t n) const;
    /// Throws std::invalid_argument if the length is not k or a coordinate is >= p.
    FieldElement from_coords(std::span<const std::uint32_t> coords) const;
    std::vector<std::uint32_t> coords(FieldElement x) const;
    bool contains(FieldElement x) const { return x.code() < q(); }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    /// Throws std::domain_error on zero.
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    /// Square-and-multiply; negative exponents invert first. 0^0 == 1.
    FieldElement pow(FieldElement a, std::int64_t e) const;

    /// Smallest-code element of multiplicative order q-1.
    FieldElement primitive_element() const;
    std::uint64_t multiplicative_order(FieldElement a) const;

    /// True iff x^(p^d) == x. Throws std::invalid_argument unless d divides k.
    bool in_subfield(FieldElement x, std::uint32_t d) const;
    /// Members of GF(p^d) in ascending code order.
    std::vector<FieldElement> subfield_elements(std::uint32_t d) const;

    /// All q elements in ascending code order.
    std::vector<FieldElement> elements() const;
    std::vector<FieldElement> nonzero_elements() const;

    std::string to_string(FieldElement x) const;

    friend bool operator==(const Field& a, const Field& b);

private:
    explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
    std::shared_ptr<const detail::FieldData> data_;

    friend FieldElement reference_mul(const Field&, FieldElement, FieldElement);
};

/// Multiplication done directly on coordinate vectors (schoolbook product,
/// then reduction by the modulus). The table-driven Field::mul must agree
/// with this for every pair.
FieldElement reference_mul(const Field& field, FieldElement a, FieldElement b);

bool is_prime(std::uint64_t n);

/// True iff the monic polynomial with coefficients c_0..c_k is irreducible
/// over Z_p, by trial division against every monic polynomial of degree
/// 1..k/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> coeffs);

/// Base-p digits, least significant first; zero has no digits.
struct PAdicExpansion {
    std::vector<std::uint32_t> digits;

    std::uint64_t value(std::uint32_t p) const;
    friend bool operator==(const PAdicExpansion&, const PAdicExpansion&) = default;
};

PAdicExpansion p_adic(std::uint64_t n, std::uint32_t p);

/// Digitwise comparison of base-p expansions. By Lucas' theorem this is
/// exactly binomial(b, a) != 0 mod p.
bool leq_p(std::uint64_t a, std::uint64_t b, std::uint32_t p);

/// Whether the multinomial coefficient v! / (parts_0! parts_1! ...) is nonzero
/// mod p, via the chained test parts_t <=_p v - (parts_0 + ... + parts_{t-1}).
/// Throws std::invalid_argument when the parts do not sum to v.
bool multinomial_nonzero_mod_p(std::uint64_t v, std::span<const std::uint64_t> parts,
                               std::uint32_t p);

} // namespace cartperm

#endif // CARTPERM_FINITE_FIELD_HPP
