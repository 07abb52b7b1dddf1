#include "cartperm/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cartperm {

namespace detail {

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> irreducible; // c_0..c_k
    std::vector<std::uint32_t> pow_p;       // p^0..p^k

    FieldElement primitive;
    std::vector<std::uint64_t> order_factors; // distinct primes dividing q-1

    // log/exp acceleration, present when q <= 2^16
    bool tabled = false;
    std::vector<std::uint32_t> exp; // exp[i] = primitive^i, length 2(q-1)
    std::vector<std::uint32_t> log; // log[0] unused
    std::vector<std::uint32_t> neg;
};

} // namespace detail

namespace {

constexpr std::uint32_t kTableLimit = 1u << 16;

std::vector<std::uint32_t> unpack(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
    std::vector<std::uint32_t> c(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        c[i] = code % p;
        code /= p;
    }
    return c;
}

std::uint32_t pack(std::span<const std::uint32_t> c, std::uint32_t p) {
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        code = code * p + c[i];
    return code;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

// Remainder of a (coefficients low first) divided by b over Z_p; b nonzero.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, std::span<const std::uint32_t> b,
                                    std::uint32_t p) {
    std::size_t db = b.size();
    while (db > 0 && b[db - 1] == 0)
        --db;
    std::uint32_t lead_inv = 1;
    // lead coefficient inverse mod p by Fermat
    {
        std::uint64_t base = b[db - 1], e = p - 2, r = 1;
        while (e) {
            if (e & 1)
                r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        lead_inv = static_cast<std::uint32_t>(r);
    }
    for (std::size_t top = a.size(); top >= db; --top) {
        const std::size_t i = top - 1;
        if (a[i] == 0)
            continue;
        std::uint64_t f = static_cast<std::uint64_t>(a[i]) * lead_inv % p;
        const std::size_t shift = i - (db - 1);
        for (std::size_t j = 0; j < db; ++j)
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - f * b[j] % p) % p);
    }
    a.resize(db - 1);
    return a;
}

std::uint32_t coord_mul(const detail::FieldData& d, std::uint32_t x, std::uint32_t y) {
    const std::uint32_t p = d.p, k = d.k;
    if (p == 2) {
        // carry-less product, then reduce by the modulus bit mask
        std::uint64_t r = 0, mod = 0;
        for (std::uint32_t i = 0; i < k; ++i)
            if (y >> i & 1)
                r ^= static_cast<std::uint64_t>(x) << i;
        for (std::uint32_t i = 0; i <= k; ++i)
            mod |= static_cast<std::uint64_t>(d.irreducible[i]) << i;
        for (std::uint32_t i = 2 * k - 1; i-- > k;)
            if (r >> i & 1)
                r ^= mod << (i - k);
        return static_cast<std::uint32_t>(r);
    }
    auto a = unpack(x, p, k);
    auto b = unpack(y, p, k);
    std::vector<std::uint64_t> prod(2 * k - 1, 0);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j)
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    // reduce by the monic modulus from the top down
    for (std::size_t i = prod.size(); i-- > k;) {
        std::uint64_t f = prod[i];
        if (f == 0)
            continue;
        prod[i] = 0;
        for (std::uint32_t j = 0; j < k; ++j) {
            std::size_t idx = i - k + j;
            prod[idx] = (prod[idx] + p - f * d.irreducible[j] % p) % p;
        }
    }
    std::vector<std::uint32_t> c(k);
    for (std::uint32_t i = 0; i < k; ++i)
        c[i] = static_cast<std::uint32_t>(prod[i]);
    return pack(c, p);
}

std::uint32_t coord_add(const detail::FieldData& d, std::uint32_t x, std::uint32_t y) {
    if (d.p == 2)
        return x ^ y;
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < d.k; ++i) {
        std::uint32_t s = (x % d.p + y % d.p) % d.p;
        out += s * d.pow_p[i];
        x /= d.p;
        y /= d.p;
    }
    return out;
}

std::uint32_t coord_neg(const detail::FieldData& d, std::uint32_t x) {
    if (d.p == 2)
        return x;
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < d.k; ++i) {
        std::uint32_t c = x % d.p;
        out += ((d.p - c) % d.p) * d.pow_p[i];
        x /= d.p;
    }
    return out;
}

std::uint32_t coord_pow(const detail::FieldData& d, std::uint32_t x, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1)
            r = coord_mul(d, r, x);
        x = coord_mul(d, x, x);
        e >>= 1;
    }
    return r;
}

} // namespace

std::ostream& operator<<(std::ostream& os, FieldElement x) { return os << x.code(); }

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> coeffs) {
    if (coeffs.size() < 2 || coeffs.back() != 1)
        return false;
    const std::size_t k = coeffs.size() - 1;
    if (k == 1)
        return true;
    std::vector<std::uint32_t> f(coeffs.begin(), coeffs.end());
    for (std::size_t deg = 1; deg <= k / 2; ++deg) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < deg; ++i)
            count *= p;
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            std::vector<std::uint32_t> g(deg + 1, 0);
            std::uint64_t t = enc;
            for (std::size_t i = 0; i < deg; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[deg] = 1;
            auto r = poly_mod(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; }))
                return false;
        }
    }
    return true;
}

Field Field::make(std::uint32_t p, std::uint32_t k,
                  std::optional<std::vector<std::uint32_t>> irreducible) {
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (k == 0)
        throw std::invalid_argument("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q >= (1ull << 31))
            throw std::invalid_argument("field size exceeds 2^31");
    }

    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->k = k;
    d->q = static_cast<std::uint32_t>(q);
    d->pow_p.resize(k + 1);
    d->pow_p[0] = 1;
    for (std::uint32_t i = 1; i <= k; ++i)
        d->pow_p[i] = d->pow_p[i - 1] * p;

    if (irreducible) {
        const auto& f = *irreducible;
        if (f.size() != k + 1)
            throw std::invalid_argument("irreducible polynomial must have degree exactly k");
        if (f.back() != 1)
            throw std::invalid_argument("irreducible polynomial must be monic");
        for (auto c : f)
            if (c >= p)
                throw std::invalid_argument("irreducible polynomial coefficient out of range");
        if (!is_irreducible(p, f))
            throw std::invalid_argument("supplied polynomial is reducible over Z_p");
        d->irreducible = f;
    } else {
        for (std::uint32_t enc = 0; enc < d->q; ++enc) {
            auto f = unpack(enc, p, k);
            f.push_back(1);
            if (is_irreducible(p, f)) {
                d->irreducible = std::move(f);
                break;
            }
        }
    }

    const std::uint64_t order = d->q - 1;
    d->order_factors = distinct_prime_factors(order);
    for (std::uint32_t c = 1; c < d->q; ++c) {
        bool primitive = true;
        for (auto r : d->order_factors) {
            if (coord_pow(*d, c, order / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            d->primitive = FieldElement{c};
            break;
        }
    }

    if (d->q <= kTableLimit) {
        d->tabled = true;
        const std::uint32_t n = d->q - 1;
        d->exp.resize(2 * static_cast<std::size_t>(n));
        d->log.assign(d->q, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            d->exp[i] = x;
            d->exp[i + n] = x;
            d->log[x] = i;
            x = coord_mul(*d, x, d->primitive.code());
        }
        d->neg.resize(d->q);
        for (std::uint32_t c = 0; c < d->q; ++c)
            d->neg[c] = coord_neg(*d, c);
    }
    return Field{std::move(d)};
}

std::uint32_t Field::p() const { return data_->p; }
std::uint32_t Field::k() const { return data_->k; }
std::uint32_t Field::q() const { return data_->q; }
const std::vector<std::uint32_t>& Field::irreducible() const { return data_->irreducible; }

FieldElement Field::root() const {
    if (data_->k == 1)
        return neg(FieldElement{data_->irreducible[0]});
    return FieldElement{data_->p};
}

FieldElement Field::from_integer(std::int64_t n) const {
    std::int64_t p = data_->p;
    return FieldElement{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

FieldElement Field::from_coords(std::span<const std::uint32_t> coords) const {
    if (coords.size() != data_->k)
        throw std::invalid_argument("element must have exactly k coordinates");
    for (auto c : coords)
        if (c >= data_->p)
            throw std::invalid_argument("element coordinate out of range");
    return FieldElement{pack(coords, data_->p)};
}

std::vector<std::uint32_t> Field::coords(FieldElement x) const {
    return unpack(x.code(), data_->p, data_->k);
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    return FieldElement{coord_add(*data_, a.code(), b.code())};
}

FieldElement Field::neg(FieldElement a) const {
    if (data_->tabled)
        return FieldElement{data_->neg[a.code()]};
    return FieldElement{coord_neg(*data_, a.code())};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero())
        return zero();
    if (data_->tabled)
        return FieldElement{data_->exp[data_->log[a.code()] + data_->log[b.code()]]};
    return FieldElement{coord_mul(*data_, a.code(), b.code())};
}

FieldElement Field::inv(FieldElement a) const {
    if (a.is_zero())
        throw std::domain_error("inverse of zero");
    if (data_->tabled) {
        const std::uint32_t n = data_->q - 1;
        return FieldElement{data_->exp[(n - data_->log[a.code()]) % n]};
    }
    return FieldElement{coord_pow(*data_, a.code(), data_->q - 2)};
}

FieldElement Field::pow(FieldElement a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    if (e == 0)
        return one();
    if (a.is_zero())
        return zero();
    const std::uint64_t n = data_->q - 1;
    if (data_->tabled) {
        std::uint64_t l = (static_cast<std::uint64_t>(data_->log[a.code()]) *
                           (static_cast<std::uint64_t>(e) % n)) % n;
        return FieldElement{data_->exp[l]};
    }
    return FieldElement{coord_pow(*data_, a.code(), static_cast<std::uint64_t>(e))};
}

FieldElement Field::primitive_element() const { return data_->primitive; }

std::uint64_t Field::multiplicative_order(FieldElement a) const {
    if (a.is_zero())
        throw std::domain_error("zero has no multiplicative order");
    std::uint64_t order = data_->q - 1;
    for (auto r : data_->order_factors) {
        while (order % r == 0 && pow(a, static_cast<std::int64_t>(order / r)) == one())
            order /= r;
    }
    return order;
}

bool Field::in_subfield(FieldElement x, std::uint32_t d) const {
    if (d == 0 || data_->k % d != 0)
        throw std::invalid_argument("subfield degree must divide the extension degree");
    return pow(x, data_->pow_p[d]) == x;
}

std::vector<FieldElement> Field::subfield_elements(std::uint32_t d) const {
    std::vector<FieldElement> out;
    for (std::uint32_t c = 0; c < data_->q; ++c)
        if (in_subfield(FieldElement{c}, d))
            out.push_back(FieldElement{c});
    return out;
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out(data_->q);
    for (std::uint32_t c = 0; c < data_->q; ++c)
        out[c] = FieldElement{c};
    return out;
}

std::vector<FieldElement> Field::nonzero_elements() const {
    std::vector<FieldElement> out;
    out.reserve(data_->q - 1);
    for (std::uint32_t c = 1; c < data_->q; ++c)
        out.emplace_back(c);
    return out;
}

std::string Field::to_string(FieldElement x) const {
    if (data_->k == 1)
        return std::to_string(x.code());
    auto c = coords(x);
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
}

bool operator==(const Field& a, const Field& b) {
    if (a.data_ == b.data_)
        return true;
    return a.data_->p == b.data_->p && a.data_->k == b.data_->k &&
           a.data_->irreducible == b.data_->irreducible;
}

FieldElement reference_mul(const Field& field, FieldElement a, FieldElement b) {
    return FieldElement{coord_mul(*field.data_, a.code(), b.code())};
}

std::uint64_t PAdicExpansion::value(std::uint32_t p) const {
    std::uint64_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;)
        v = v * p + digits[i];
    return v;
}

PAdicExpansion p_adic(std::uint64_t n, std::uint32_t p) {
    if (p < 2)
        throw std::invalid_argument("p-adic base must be at least 2");
    PAdicExpansion out;
    while (n > 0) {
        out.digits.push_back(static_cast<std::uint32_t>(n % p));
        n /= p;
    }
    return out;
}

bool leq_p(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    while (a > 0) {
        if (a % p > b % p)
            return false;
        a /= p;
        b /= p;
    }
    return true;
}

bool multinomial_nonzero_mod_p(std::uint64_t v, std::span<const std::uint64_t> parts,
                               std::uint32_t p) {
    std::uint64_t total = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
    if (total != v)
        throw std::invalid_argument("multinomial parts do not sum to v");
    std::uint64_t remaining = v;
    for (auto k : parts) {
        if (!leq_p(k, remaining, p))
            return false;
        remaining -= k;
    }
    return true;
}

} // namespace cartperm
