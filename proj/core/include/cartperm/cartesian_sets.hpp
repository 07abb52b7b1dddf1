#ifndef CARTPERM_CARTESIAN_SETS_HPP
#define CARTPERM_CARTESIAN_SETS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cartperm/finite_field.hpp"

namespace cartperm {

using Point = std::vector<FieldElement>;

enum class ComponentKind { FullField, MultiplicativeSubgroup, AdditiveSubgroup, Explicit };

std::string_view to_string(ComponentKind kind);

/// One factor A_i of a Cartesian evaluation set, materialized in its
/// canonical order:
///   - full field: ascending code (0 first);
///   - multiplicative subgroup of order s: 1, g, g^2, ... with g = beta^((q-1)/s);
///   - additive subgroup: base-p counting over the reduced echelon basis,
///     first basis vector least significant;
///   - explicit: as given (duplicates dropped).
class SetComponent {
public:
    static SetComponent full_field(const Field& F);
    /// Throws std::invalid_argument unless s divides q-1.
    static SetComponent multiplicative(const Field& F, std::uint64_t order);
    /// Subgroup spanned over Z_p by the given elements.
    static SetComponent additive(const Field& F, std::span<const FieldElement> spanning);
    /// Throws std::invalid_argument on an empty list.
    static SetComponent explicit_set(const Field& F, std::span<const FieldElement> elements);

    const Field& field() const { return field_; }
    ComponentKind kind() const { return kind_; }
    std::span<const FieldElement> elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    bool contains(FieldElement x) const { return index_of(x).has_value(); }
    std::optional<std::size_t> index_of(FieldElement x) const;

    /// Full field or additive subgroup.
    bool is_additive_group() const;
    /// Only components built or classified as multiplicative; F_q^* given
    /// as an explicit list does not count until classified.
    bool is_multiplicative_group() const {
        return kind_ == ComponentKind::MultiplicativeSubgroup;
    }

    /// Multiplicative subgroups: s and the canonical generator beta^t.
    std::uint64_t order() const { return order_; }
    FieldElement generator() const { return generator_; }
    /// Additive groups (including the full field): reduced echelon basis over Z_p.
    const std::vector<FieldElement>& basis() const { return basis_; }

    /// Same underlying set, regardless of kind or order.
    bool same_set(const SetComponent& other) const;

private:
    SetComponent(Field F, ComponentKind kind, std::vector<FieldElement> elements);

    Field field_;
    ComponentKind kind_;
    std::vector<FieldElement> elements_;
    std::vector<std::int32_t> position_; // indexed by code, -1 when absent
    std::uint64_t order_ = 0;
    FieldElement generator_;
    std::vector<FieldElement> basis_;
};

/// A = A_1 x ... x A_m with points enumerated row-major over the component
/// orders (last coordinate fastest).
class CartesianSet {
public:
    /// Throws std::invalid_argument on an empty list, mixed fields, or a
    /// non-explicit component with fewer than two elements.
    explicit CartesianSet(std::vector<SetComponent> components);

    const Field& field() const { return components_.front().field(); }
    std::size_t dimension() const { return components_.size(); }
    std::uint64_t size() const { return size_; }

    const SetComponent& component(std::size_t i) const { return components_[i]; }
    const std::vector<SetComponent>& components() const { return components_; }
    /// (n_1, ..., n_m)
    std::vector<std::uint32_t> bounds() const;

    Point point(std::uint64_t index) const;
    std::optional<std::uint64_t> index_of(std::span<const FieldElement> point) const;
    bool contains(std::span<const FieldElement> point) const { return index_of(point).has_value(); }

private:
    std::vector<SetComponent> components_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t size_ = 1;
};

std::vector<Point> enumerate_points(const CartesianSet& S);

/// Routes a user-supplied subset to a component kind by closure testing,
/// preferring full field, then multiplicative, then additive, then explicit.
/// Throws std::invalid_argument on an empty list or repeated elements.
SetComponent classify_subset(const Field& F, std::span<const FieldElement> elements);

/// Degree d of the largest subfield GF(p^d) over which the additive group G
/// is a vector space. Throws std::invalid_argument for non-additive input.
std::uint32_t stabilizer_subfield(const SetComponent& G);

/// {a in F : a * g lies in `row` for every g in `col`}, ascending code order.
/// Matrix entry (i, j) of a map stabilizing prod G_i must lie in
/// transporter_space(G_i, G_j).
std::vector<FieldElement> transporter_space(const SetComponent& row, const SetComponent& col);

/// Sum of the elements of a multiplicative subgroup. Throws
/// std::invalid_argument for other kinds.
FieldElement sum_of_elements(const SetComponent& G);

} // namespace cartperm

#endif // CARTPERM_CARTESIAN_SETS_HPP
