#include "cartperm/transform_stream.hpp"

#include <limits>
#include <string>

namespace cartperm {

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("enumeration of " + std::to_string(required) +
                         " candidates exceeds the budget of " + std::to_string(budget)),
      required_(required), budget_(budget) {}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    constexpr auto top = std::numeric_limits<std::uint64_t>::max();
    if (a != 0 && b > top / a)
        return top;
    return a * b;
}

CandidateSpace::CandidateSpace(Field F, std::size_t m)
    : field_(std::move(F)), m_(m), a_(m * m, {field_.zero()}), b_(m, {field_.zero()}) {}

CandidateSpace CandidateSpace::full(const Field& F, std::size_t m) {
    CandidateSpace s(F, m);
    const auto all = F.elements();
    for (auto& d : s.a_)
        d = all;
    for (auto& d : s.b_)
        d = all;
    return s;
}

void CandidateSpace::set_entry(std::size_t r, std::size_t c, std::vector<FieldElement> values) {
    if (values.empty())
        throw std::invalid_argument("candidate entry needs at least one value");
    a_.at(c * m_ + r) = std::move(values);
}

void CandidateSpace::set_translation(std::size_t i, std::vector<FieldElement> values) {
    if (values.empty())
        throw std::invalid_argument("candidate entry needs at least one value");
    b_.at(i) = std::move(values);
}

std::uint64_t CandidateSpace::size() const {
    std::uint64_t n = 1;
    for (const auto& d : a_)
        n = saturating_mul(n, d.size());
    for (const auto& d : b_)
        n = saturating_mul(n, d.size());
    return n;
}

std::vector<CandidateSpace> CandidateSpace::split_first_row() const {
    std::vector<CandidateSpace> out{*this};
    for (std::size_t c = 0; c < m_; ++c) {
        // earlier columns vary fastest
        std::vector<CandidateSpace> next;
        for (auto v : entry(0, c))
            for (const auto& part : out) {
                CandidateSpace s = part;
                s.set_entry(0, c, {v});
                next.push_back(std::move(s));
            }
        out = std::move(next);
    }
    return out;
}

bool CandidateSpace::contains(const AffineTransformation& T) const {
    if (T.dimension() != m_)
        return false;
    auto has = [](const std::vector<FieldElement>& d, FieldElement x) {
        for (auto v : d)
            if (v == x)
                return true;
        return false;
    };
    for (std::size_t r = 0; r < m_; ++r)
        for (std::size_t c = 0; c < m_; ++c)
            if (!has(entry(r, c), T.A()(r, c)))
                return false;
    for (std::size_t i = 0; i < m_; ++i)
        if (!has(b_[i], T.b()[i]))
            return false;
    return true;
}

TransformStream TransformStream::over(const CandidateSpace& space, std::uint64_t budget,
                                      std::function<bool(const AffineTransformation&)> filter) {
    const std::uint64_t n = space.size();
    if (n > budget)
        throw BudgetExceeded(n, budget);
    struct State {
        CandidateSpace space;
        std::vector<std::size_t> digits;
        bool done = false;
        std::function<bool(const AffineTransformation&)> filter;
    };
    const std::size_t m = space.dimension();
    auto st = std::make_shared<State>(State{space, std::vector<std::size_t>(m * m + m, 0), false,
                                            std::move(filter)});
    return TransformStream([st, m]() -> std::optional<AffineTransformation> {
        const Field& F = st->space.field();
        while (!st->done) {
            Matrix A(m, m);
            Vector b(m);
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t r = 0; r < m; ++r)
                    A(r, c) = st->space.entry(r, c)[st->digits[c * m + r]];
            for (std::size_t i = 0; i < m; ++i)
                b[i] = st->space.translation(i)[st->digits[m * m + i]];
            // advance the odometer
            std::size_t d = 0;
            for (; d < st->digits.size(); ++d) {
                const std::size_t radix = d < m * m ? st->space.entry(d % m, d / m).size()
                                                    : st->space.translation(d - m * m).size();
                if (++st->digits[d] < radix)
                    break;
                st->digits[d] = 0;
            }
            if (d == st->digits.size())
                st->done = true;
            AffineTransformation T(F, std::move(A), std::move(b));
            if (!st->filter || st->filter(T))
                return T;
        }
        return std::nullopt;
    });
}

TransformStream TransformStream::concat(std::vector<TransformStream> parts) {
    auto st = std::make_shared<std::pair<std::vector<TransformStream>, std::size_t>>(
        std::move(parts), 0);
    return TransformStream([st]() -> std::optional<AffineTransformation> {
        auto& [streams, at] = *st;
        for (; at < streams.size(); ++at)
            if (auto t = streams[at].next())
                return t;
        return std::nullopt;
    });
}

std::optional<AffineTransformation> TransformStream::next() { return source_(); }

std::vector<AffineTransformation> TransformStream::collect() {
    std::vector<AffineTransformation> out;
    while (auto t = next())
        out.push_back(std::move(*t));
    return out;
}

} // namespace cartperm
