#ifndef CARTPERM_TRANSFORM_STREAM_HPP
#define CARTPERM_TRANSFORM_STREAM_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cartperm/affine_transform.hpp"

namespace cartperm {

/// An enumeration would exceed its declared budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget);
    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// a * b, clamped to UINT64_MAX.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

/// A box of candidate maps: one value list per matrix entry and per
/// translation coordinate. Iteration is mixed-radix counting with digits in
/// the order A(0,0), A(1,0), ..., A(m-1,0), A(0,1), ..., then b_0, ..., b_{m-1},
/// the first digit least significant.
class CandidateSpace {
public:
    CandidateSpace(Field F, std::size_t m);

    /// Every entry ranges over the whole field.
    static CandidateSpace full(const Field& F, std::size_t m);

    const Field& field() const { return field_; }
    std::size_t dimension() const { return m_; }

    /// Throws std::invalid_argument on an empty list.
    void set_entry(std::size_t r, std::size_t c, std::vector<FieldElement> values);
    void set_translation(std::size_t i, std::vector<FieldElement> values);
    const std::vector<FieldElement>& entry(std::size_t r, std::size_t c) const {
        return a_[c * m_ + r];
    }
    const std::vector<FieldElement>& translation(std::size_t i) const { return b_[i]; }

    /// Number of candidates, saturating.
    std::uint64_t size() const;

    /// One subspace per choice of the first matrix row, in counting order
    /// of that row (first column least significant).
    std::vector<CandidateSpace> split_first_row() const;

    bool contains(const AffineTransformation& T) const;

private:
    Field field_;
    std::size_t m_;
    std::vector<std::vector<FieldElement>> a_; // column-major
    std::vector<std::vector<FieldElement>> b_;
};

/// Lazy sequence of affine maps. Single pass; not thread-safe.
class TransformStream {
public:
    using Source = std::function<std::optional<AffineTransformation>()>;

    explicit TransformStream(Source source) : source_(std::move(source)) {}

    /// Candidates of `space` accepted by `filter` (all when empty). Throws
    /// BudgetExceeded when the space holds more than `budget` candidates.
    static TransformStream over(const CandidateSpace& space, std::uint64_t budget,
                                std::function<bool(const AffineTransformation&)> filter = {});
    /// The streams one after another.
    static TransformStream concat(std::vector<TransformStream> parts);

    std::optional<AffineTransformation> next();
    std::vector<AffineTransformation> collect();

    template <typename Fn>
    void for_each(Fn&& fn) {
        while (auto t = next())
            fn(*t);
    }

private:
    Source source_;
};

} // namespace cartperm

#endif // CARTPERM_TRANSFORM_STREAM_HPP
