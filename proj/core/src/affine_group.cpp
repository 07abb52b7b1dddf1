#include "cartperm/affine_group.hpp"

#include <numeric>
#include <stdexcept>

namespace cartperm {

CoordinatePermutation::CoordinatePermutation(std::vector<std::uint64_t> image)
    : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (auto i : image_) {
        if (i >= image_.size() || seen[i])
            throw std::invalid_argument("image list is not a permutation");
        seen[i] = 1;
    }
}

CoordinatePermutation CoordinatePermutation::identity(std::uint64_t n) {
    std::vector<std::uint64_t> image(n);
    std::iota(image.begin(), image.end(), 0);
    return CoordinatePermutation(std::move(image));
}

bool CoordinatePermutation::is_identity() const {
    for (std::uint64_t i = 0; i < image_.size(); ++i)
        if (image_[i] != i)
            return false;
    return true;
}

CoordinatePermutation compose(const CoordinatePermutation& a, const CoordinatePermutation& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("permutations of different degrees");
    std::vector<std::uint64_t> image(a.size());
    for (std::uint64_t i = 0; i < a.size(); ++i)
        image[i] = a(b(i));
    return CoordinatePermutation(std::move(image));
}

CoordinatePermutation inverse(const CoordinatePermutation& p) {
    std::vector<std::uint64_t> image(p.size());
    for (std::uint64_t i = 0; i < p.size(); ++i)
        image[p(i)] = i;
    return CoordinatePermutation(std::move(image));
}

Vector permute(std::span<const FieldElement> c, const CoordinatePermutation& pi) {
    if (c.size() != pi.size())
        throw std::invalid_argument("word length does not match the permutation");
    Vector out(c.size());
    for (std::uint64_t i = 0; i < c.size(); ++i)
        out[i] = c[pi(i)];
    return out;
}

namespace {

void check_shape(const AffineTransformation& T, const CartesianSet& S) {
    if (T.dimension() != S.dimension() || !(T.field() == S.field()))
        throw std::invalid_argument("affine map and point set have different shapes");
}

} // namespace

std::optional<Point> set_violation(const AffineTransformation& T, const CartesianSet& S) {
    check_shape(T, S);
    std::vector<char> hit(S.size(), 0);
    for (std::uint64_t i = 0; i < S.size(); ++i) {
        Point P = S.point(i);
        auto j = S.index_of(T.apply(P));
        if (!j || hit[*j])
            return P;
        hit[*j] = 1;
    }
    return std::nullopt;
}

CoordinatePermutation induced_permutation(const AffineTransformation& T, const CartesianSet& S) {
    check_shape(T, S);
    std::vector<std::uint64_t> image(S.size());
    std::vector<char> hit(S.size(), 0);
    for (std::uint64_t i = 0; i < S.size(); ++i) {
        auto j = S.index_of(T.apply(S.point(i)));
        if (!j || hit[*j])
            throw std::invalid_argument("affine map does not stabilize the point set");
        hit[*j] = 1;
        image[i] = *j;
    }
    return CoordinatePermutation(std::move(image));
}

SpanChecker::SpanChecker(const MonomialSet& L, const CartesianSet& S) : L_(&L), reducer_(S) {
    if (L.variables() != S.dimension())
        throw std::invalid_argument("monomial set and point set have different dimensions");
}

std::optional<SpanWitness> SpanChecker::violation(const AffineTransformation& T) {
    if (T.dimension() != L_->variables())
        throw std::invalid_argument("affine map and monomial set have different dimensions");
    AffineSubstitution sub(T);
    for (const auto& u : *L_) {
        const Polynomial image = reducer_.reduce(sub.image(u));
        for (const auto& [v, c] : image.terms())
            if (!L_->contains(v))
                return SpanWitness{u, v};
    }
    return std::nullopt;
}

std::optional<SpanWitness> span_violation(const AffineTransformation& T, const MonomialSet& L,
                                          const CartesianSet& S) {
    check_shape(T, S);
    SpanChecker checker(L, S);
    return checker.violation(T);
}

bool is_affine_permutation(const AffineTransformation& T, const MonomialSet& L,
                           const CartesianSet& S) {
    return stabilizes_set(T, S) && stabilizes_monomial_span(T, L, S);
}

} // namespace cartperm
