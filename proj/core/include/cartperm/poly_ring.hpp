#ifndef CARTPERM_POLY_RING_HPP
#define CARTPERM_POLY_RING_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cartperm/affine_transform.hpp"
#include "cartperm/cartesian_sets.hpp"
#include "cartperm/finite_field.hpp"

namespace cartperm {

/// Exponent vector x_1^{e_1} ... x_m^{e_m}.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {}
    static Monomial one(std::size_t m) { return Monomial(std::vector<std::uint32_t>(m, 0)); }
    static Monomial variable(std::size_t m, std::size_t i);

    std::size_t variables() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint64_t degree() const;

    bool divides(const Monomial& other) const;
    /// Every exponent below the matching bound, i.e. membership in Delta.
    bool within(std::span<const std::uint32_t> bounds) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint32_t> exps_;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Canonical monomial order: by total degree, then lexicographically with
/// x_1 > x_2 > ... > x_m, the larger monomial first within a degree. So
/// 1, x_1, x_2, x_1^2, x_1 x_2, x_2^2, ... for m = 2.
struct GradedOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

std::string to_string(const Monomial& u);

/// Sparse polynomial over GF(q) in a fixed number of variables. Zero
/// coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, FieldElement, GradedOrder>;

    Polynomial(Field F, std::size_t m) : field_(std::move(F)), vars_(m) {}

    static Polynomial constant(const Field& F, std::size_t m, FieldElement c);
    static Polynomial variable(const Field& F, std::size_t m, std::size_t i);
    static Polynomial monomial(const Field& F, const Monomial& u, FieldElement c);
    static Polynomial monomial(const Field& F, const Monomial& u) {
        return monomial(F, u, F.one());
    }

    const Field& field() const { return field_; }
    std::size_t variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    std::vector<Monomial> support() const;
    FieldElement coefficient(const Monomial& u) const;

    /// Accumulates c into the coefficient of u, pruning a resulting zero.
    void add_term(const Monomial& u, FieldElement c);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
    }

private:
    Field field_;
    std::size_t vars_;
    TermMap terms_;
};

/// Ring operations; all throw std::invalid_argument on an ambient mismatch
/// (different field or variable count).
Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const Polynomial& f, const Polynomial& g);
Polynomial poly_neg(const Polynomial& f);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(const Polynomial& f, FieldElement c);
Polynomial poly_pow(const Polynomial& f, std::uint64_t e);

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return poly_add(f, g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return poly_sub(f, g); }
inline Polynomial operator-(const Polynomial& f) { return poly_neg(f); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return poly_mul(f, g); }

/// Memoizes the powers of the linear forms y_i = sum_j A_ij x_j + b_i so that
/// many monomials can be pushed through the same map. Not thread-safe; use
/// one instance per thread.
class AffineSubstitution {
public:
    explicit AffineSubstitution(const AffineTransformation& T);

    /// T(x^u) = y_1^{u_1} ... y_m^{u_m}, fully expanded and unreduced.
    Polynomial image(const Monomial& u);
    Polynomial apply(const Polynomial& f);

private:
    const Polynomial& power(std::size_t i, std::uint32_t e);

    Field field_;
    std::size_t m_;
    std::vector<std::vector<Polynomial>> powers_; // powers_[i][e] = y_i^e
};

/// f(Ax + b), expanded, no reduction. Throws std::invalid_argument on a
/// field or dimension mismatch.
Polynomial substitute_affine(const Polynomial& f, const AffineTransformation& T);

/// Canonical reduction modulo the vanishing ideal of a Cartesian set, which
/// is generated by g_j(x_j) = prod_{a in A_j} (x_j - a). Caches the remainders
/// x^e mod g_j. Not thread-safe; use one instance per thread.
class VanishingReducer {
public:
    explicit VanishingReducer(const CartesianSet& S);

    /// Divides by the g_j one variable at a time, highest violating degree
    /// first.
    Polynomial reduce(const Polynomial& f);
    /// Same, dividing variables in the given order.
    Polynomial reduce(const Polynomial& f, std::span<const std::size_t> variable_order);

    /// Coefficients (low first, length n_j) of x_j^e mod g_j.
    const std::vector<FieldElement>& remainder(std::size_t j, std::uint32_t e);

    /// Coefficients c_0..c_{n_j} of g_j.
    const std::vector<FieldElement>& vanishing_polynomial(std::size_t j) const { return g_[j]; }

private:
    Field field_;
    std::vector<std::uint32_t> bounds_;
    std::vector<std::vector<FieldElement>> g_;
    std::vector<std::vector<std::vector<FieldElement>>> rem_; // rem_[j][e - n_j]
};

Polynomial reduce_mod_vanishing(const Polynomial& f, const CartesianSet& S);

FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point);
/// Codeword (f(P_1), ..., f(P_n)) in the canonical point order.
Vector evaluate_on_set(const Polynomial& f, const CartesianSet& S);

/// Human-readable, highest terms first, e.g. "x2 + 2*x1 + 1".
std::string to_string(const Polynomial& f);

} // namespace cartperm

#endif // CARTPERM_POLY_RING_HPP
