#include "cartperm/cartesian_sets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cartperm/linalg.hpp"

namespace cartperm {

std::string_view to_string(ComponentKind kind) {
    switch (kind) {
    case ComponentKind::FullField: return "full";
    case ComponentKind::MultiplicativeSubgroup: return "mult";
    case ComponentKind::AdditiveSubgroup: return "add";
    case ComponentKind::Explicit: return "explicit";
    }
    return "?";
}

namespace {

// Reduced echelon basis over Z_p of the span of the given elements. Rows are
// ordered by pivot coordinate ascending (constant coordinate first).
std::vector<FieldElement> echelon_basis(const Field& F, std::span<const FieldElement> spanning) {
    const Field prime = Field::make(F.p(), 1);
    Matrix m(spanning.size(), F.k());
    for (std::size_t r = 0; r < spanning.size(); ++r) {
        auto c = F.coords(spanning[r]);
        for (std::size_t j = 0; j < c.size(); ++j)
            m(r, j) = FieldElement{c[j]};
    }
    RowEchelon e = rref(prime, std::move(m));
    std::vector<FieldElement> basis;
    for (std::size_t r = 0; r < e.rank(); ++r) {
        std::vector<std::uint32_t> c(F.k());
        for (std::size_t j = 0; j < c.size(); ++j)
            c[j] = e.reduced(r, j).code();
        basis.push_back(F.from_coords(c));
    }
    return basis;
}

std::vector<FieldElement> span_in_counting_order(const Field& F,
                                                 const std::vector<FieldElement>& basis) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < basis.size(); ++i)
        count *= F.p();
    std::vector<FieldElement> out;
    out.reserve(count);
    for (std::uint64_t t = 0; t < count; ++t) {
        FieldElement x = F.zero();
        std::uint64_t digits = t;
        for (const auto& b : basis) {
            const auto c = static_cast<std::int64_t>(digits % F.p());
            digits /= F.p();
            if (c)
                x = F.add(x, F.mul(F.from_integer(c), b));
        }
        out.push_back(x);
    }
    return out;
}

} // namespace

SetComponent::SetComponent(Field F, ComponentKind kind, std::vector<FieldElement> elements)
    : field_(std::move(F)), kind_(kind), elements_(std::move(elements)) {
    position_.assign(field_.q(), -1);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (!field_.contains(elements_[i]))
            throw std::invalid_argument("element does not belong to the field");
        position_[elements_[i].code()] = static_cast<std::int32_t>(i);
    }
}

SetComponent SetComponent::full_field(const Field& F) {
    SetComponent c(F, ComponentKind::FullField, F.elements());
    std::vector<FieldElement> powers;
    for (std::uint32_t i = 0; i < F.k(); ++i) {
        std::vector<std::uint32_t> e(F.k(), 0);
        e[i] = 1;
        powers.push_back(F.from_coords(e));
    }
    c.basis_ = std::move(powers);
    return c;
}

SetComponent SetComponent::multiplicative(const Field& F, std::uint64_t order) {
    const std::uint64_t n = F.q() - 1;
    if (order == 0 || n % order != 0)
        throw std::invalid_argument("multiplicative subgroup order must divide q-1");
    const FieldElement g = F.pow(F.primitive_element(), static_cast<std::int64_t>(n / order));
    std::vector<FieldElement> elems;
    FieldElement x = F.one();
    for (std::uint64_t i = 0; i < order; ++i) {
        elems.push_back(x);
        x = F.mul(x, g);
    }
    SetComponent c(F, ComponentKind::MultiplicativeSubgroup, std::move(elems));
    c.order_ = order;
    c.generator_ = g;
    return c;
}

SetComponent SetComponent::additive(const Field& F, std::span<const FieldElement> spanning) {
    for (auto x : spanning)
        if (!F.contains(x))
            throw std::invalid_argument("basis element does not belong to the field");
    auto basis = echelon_basis(F, spanning);
    auto elems = span_in_counting_order(F, basis);
    SetComponent c(F, ComponentKind::AdditiveSubgroup, std::move(elems));
    c.basis_ = std::move(basis);
    return c;
}

SetComponent SetComponent::explicit_set(const Field& F, std::span<const FieldElement> elements) {
    if (elements.empty())
        throw std::invalid_argument("explicit component must be nonempty");
    std::vector<FieldElement> elems;
    std::set<FieldElement> seen;
    for (auto x : elements)
        if (seen.insert(x).second)
            elems.push_back(x);
    return SetComponent(F, ComponentKind::Explicit, std::move(elems));
}

std::optional<std::size_t> SetComponent::index_of(FieldElement x) const {
    if (x.code() >= position_.size() || position_[x.code()] < 0)
        return std::nullopt;
    return static_cast<std::size_t>(position_[x.code()]);
}

bool SetComponent::is_additive_group() const {
    return kind_ == ComponentKind::FullField || kind_ == ComponentKind::AdditiveSubgroup;
}

bool SetComponent::same_set(const SetComponent& other) const {
    if (!(field_ == other.field_) || size() != other.size())
        return false;
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](FieldElement x) { return other.contains(x); });
}

CartesianSet::CartesianSet(std::vector<SetComponent> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw std::invalid_argument("Cartesian set needs at least one component");
    for (const auto& c : components_) {
        if (!(c.field() == components_.front().field()))
            throw std::invalid_argument("Cartesian set components over different fields");
        if (c.size() < 2 && c.kind() != ComponentKind::Explicit)
            throw std::invalid_argument("Cartesian set components need at least two elements");
    }
    strides_.assign(components_.size(), 1);
    for (std::size_t i = components_.size(); i-- > 0;) {
        strides_[i] = size_;
        size_ *= components_[i].size();
    }
}

std::vector<std::uint32_t> CartesianSet::bounds() const {
    std::vector<std::uint32_t> b;
    for (const auto& c : components_)
        b.push_back(static_cast<std::uint32_t>(c.size()));
    return b;
}

Point CartesianSet::point(std::uint64_t index) const {
    if (index >= size_)
        throw std::out_of_range("point index out of range");
    Point pt(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) {
        pt[i] = components_[i].elements()[index / strides_[i]];
        index %= strides_[i];
    }
    return pt;
}

std::optional<std::uint64_t> CartesianSet::index_of(std::span<const FieldElement> point) const {
    if (point.size() != components_.size())
        throw std::invalid_argument("point dimension mismatch");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        auto pos = components_[i].index_of(point[i]);
        if (!pos)
            return std::nullopt;
        idx += *pos * strides_[i];
    }
    return idx;
}

std::vector<Point> enumerate_points(const CartesianSet& S) {
    std::vector<Point> out;
    out.reserve(S.size());
    for (std::uint64_t i = 0; i < S.size(); ++i)
        out.push_back(S.point(i));
    return out;
}

SetComponent classify_subset(const Field& F, std::span<const FieldElement> elements) {
    if (elements.empty())
        throw std::invalid_argument("cannot classify an empty set");
    std::set<FieldElement> set(elements.begin(), elements.end());
    if (set.size() != elements.size())
        throw std::invalid_argument("subset has repeated elements");
    for (auto x : elements)
        if (!F.contains(x))
            throw std::invalid_argument("element does not belong to the field");

    if (set.size() == F.q())
        return SetComponent::full_field(F);

    auto closed = [&](auto op) {
        for (auto a : set)
            for (auto b : set)
                if (!set.count(op(a, b)))
                    return false;
        return true;
    };

    if (!set.count(F.zero()) && set.count(F.one()) &&
        closed([&](FieldElement a, FieldElement b) { return F.mul(a, b); }))
        return SetComponent::multiplicative(F, set.size());

    if (set.count(F.zero()) &&
        closed([&](FieldElement a, FieldElement b) { return F.add(a, b); })) {
        std::vector<FieldElement> spanning(set.begin(), set.end());
        return SetComponent::additive(F, spanning);
    }
    return SetComponent::explicit_set(F, elements);
}

std::uint32_t stabilizer_subfield(const SetComponent& G) {
    if (!G.is_additive_group())
        throw std::invalid_argument("stabilizer subfield needs an additive group");
    const Field& F = G.field();
    const std::uint64_t n = F.q() - 1;
    for (std::uint32_t d = F.k(); d >= 1; --d) {
        if (F.k() % d != 0)
            continue;
        std::uint64_t sub = 1;
        for (std::uint32_t i = 0; i < d; ++i)
            sub *= F.p();
        // beta^((q-1)/(p^d-1)) generates GF(p^d) as a ring over Z_p
        const FieldElement gamma =
            F.pow(F.primitive_element(), static_cast<std::int64_t>(n / (sub - 1)));
        const bool stable = std::all_of(G.basis().begin(), G.basis().end(),
                                        [&](FieldElement b) { return G.contains(F.mul(gamma, b)); });
        if (stable)
            return d;
    }
    return 1;
}

std::vector<FieldElement> transporter_space(const SetComponent& row, const SetComponent& col) {
    if (!(row.field() == col.field()))
        throw std::invalid_argument("transporter space over different fields");
    const Field& F = row.field();
    std::vector<FieldElement> out;
    for (auto a : F.elements()) {
        const bool ok = std::all_of(col.elements().begin(), col.elements().end(),
                                    [&](FieldElement g) { return row.contains(F.mul(a, g)); });
        if (ok)
            out.push_back(a);
    }
    return out;
}

FieldElement sum_of_elements(const SetComponent& G) {
    if (!G.is_multiplicative_group())
        throw std::invalid_argument("sum_of_elements needs a multiplicative subgroup");
    FieldElement s = G.field().zero();
    for (auto x : G.elements())
        s = G.field().add(s, x);
    return s;
}

} // namespace cartperm
