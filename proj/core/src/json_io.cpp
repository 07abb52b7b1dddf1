#include "cartperm/json_io.hpp"

#include <sstream>

namespace cartperm {

ConfigError::ConfigError(std::string pointer, const std::string& message)
    : std::runtime_error((pointer.empty() ? std::string("/") : pointer) + ": " + message),
      pointer_(std::move(pointer)) {}

namespace {

std::string child(const std::string& ptr, const std::string& key) {
    std::string escaped;
    for (char c : key) {
        if (c == '~')
            escaped += "~0";
        else if (c == '/')
            escaped += "~1";
        else
            escaped += c;
    }
    return ptr + "/" + escaped;
}

std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const json& require(const json& j, const std::string& key, const std::string& ptr) {
    if (!j.is_object())
        throw ConfigError(ptr, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw ConfigError(child(ptr, key), "missing required field");
    return *it;
}

const json& require_array(const json& j, const std::string& ptr) {
    if (!j.is_array())
        throw ConfigError(ptr, "expected an array");
    return j;
}

std::uint64_t read_uint(const json& j, const std::string& ptr) {
    if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<std::int64_t>() < 0))
        throw ConfigError(ptr, "expected a non-negative integer");
    return j.get<std::uint64_t>();
}

std::vector<std::uint32_t> read_uint_list(const json& j, const std::string& ptr) {
    require_array(j, ptr);
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(static_cast<std::uint32_t>(read_uint(j[i], child(ptr, i))));
    return out;
}

template <typename Fn>
auto rethrow_at(const std::string& ptr, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(ptr, e.what());
    }
}

std::vector<FieldElement> read_elements(const Field& F, const json& j, const std::string& ptr) {
    require_array(j, ptr);
    std::vector<FieldElement> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(element_from_json(F, j[i], child(ptr, i)));
    return out;
}

json elements_to_json(const Field& F, std::span<const FieldElement> xs) {
    json out = json::array();
    for (auto x : xs)
        out.push_back(element_to_json(F, x));
    return out;
}

Monomial read_monomial(const json& j, const std::string& ptr, std::optional<std::size_t> m) {
    auto e = read_uint_list(j, ptr);
    if (m && e.size() != *m)
        throw ConfigError(ptr, "expected " + std::to_string(*m) + " exponents");
    return Monomial(std::move(e));
}

} // namespace

Field field_from_json(const json& j, const std::string& ptr) {
    const auto p = static_cast<std::uint32_t>(read_uint(require(j, "p", ptr), child(ptr, "p")));
    std::uint32_t k = 1;
    if (j.contains("k"))
        k = static_cast<std::uint32_t>(read_uint(j["k"], child(ptr, "k")));
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("irreducible"))
        modulus = read_uint_list(j["irreducible"], child(ptr, "irreducible"));
    return rethrow_at(ptr, [&] { return Field::make(p, k, modulus); });
}

json to_json(const Field& F) {
    return {{"p", F.p()}, {"k", F.k()}, {"irreducible", F.irreducible()}};
}

FieldElement element_from_json(const Field& F, const json& j, const std::string& ptr) {
    if (j.is_number_integer()) {
        const auto code = read_uint(j, ptr);
        if (code >= F.q())
            throw ConfigError(ptr, "element code out of range");
        return FieldElement{static_cast<std::uint32_t>(code)};
    }
    const auto coords = read_uint_list(j, ptr);
    if (coords.size() != F.k())
        throw ConfigError(ptr, "expected " + std::to_string(F.k()) + " coordinates");
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] >= F.p())
            throw ConfigError(child(ptr, i), "coordinate not reduced mod p");
    return F.from_coords(coords);
}

json element_to_json(const Field& F, FieldElement x) { return F.coords(x); }

Polynomial polynomial_from_json(const Field& F, std::size_t m, const json& j,
                                const std::string& ptr) {
    require_array(j, ptr);
    Polynomial f(F, m);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto at = child(ptr, i);
        const Monomial u = read_monomial(require(j[i], "exp", at), child(at, "exp"), m);
        f.add_term(u, element_from_json(F, require(j[i], "coeff", at), child(at, "coeff")));
    }
    return f;
}

json to_json(const Polynomial& f) {
    json out = json::array();
    for (const auto& [u, c] : f.terms())
        out.push_back({{"exp", u.exponents()}, {"coeff", element_to_json(f.field(), c)}});
    return out;
}

CartesianSet cartesian_set_from_json(const Field& F, const json& j, const std::string& ptr) {
    const auto cptr = child(ptr, "components");
    const json& comps = require_array(require(j, "components", ptr), cptr);
    if (comps.empty())
        throw ConfigError(cptr, "a Cartesian set needs at least one component");
    std::vector<SetComponent> out;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto at = child(cptr, i);
        const json& kind_j = require(comps[i], "kind", at);
        if (!kind_j.is_string())
            throw ConfigError(child(at, "kind"), "expected a string");
        const auto kind = kind_j.get<std::string>();
        out.push_back(rethrow_at(at, [&] {
            if (kind == "full")
                return SetComponent::full_field(F);
            if (kind == "mult")
                return SetComponent::multiplicative(
                    F, read_uint(require(comps[i], "order", at), child(at, "order")));
            if (kind == "add") {
                const auto basis =
                    read_elements(F, require(comps[i], "basis", at), child(at, "basis"));
                return SetComponent::additive(F, basis);
            }
            if (kind == "explicit") {
                const auto els =
                    read_elements(F, require(comps[i], "elements", at), child(at, "elements"));
                return SetComponent::explicit_set(F, els);
            }
            throw ConfigError(child(at, "kind"), "unknown component kind '" + kind + "'");
        }));
    }
    return rethrow_at(ptr, [&] { return CartesianSet(std::move(out)); });
}

json to_json(const CartesianSet& S) {
    const Field& F = S.field();
    json comps = json::array();
    for (const auto& c : S.components()) {
        switch (c.kind()) {
        case ComponentKind::FullField:
            comps.push_back({{"kind", "full"}});
            break;
        case ComponentKind::MultiplicativeSubgroup:
            comps.push_back({{"kind", "mult"}, {"order", c.order()}});
            break;
        case ComponentKind::AdditiveSubgroup:
            comps.push_back({{"kind", "add"}, {"basis", elements_to_json(F, c.basis())}});
            break;
        case ComponentKind::Explicit:
            comps.push_back({{"kind", "explicit"}, {"elements", elements_to_json(F, c.elements())}});
            break;
        }
    }
    return {{"components", comps}};
}

MonomialSet monomial_set_from_json(const json& j, const std::string& ptr,
                                   std::optional<std::vector<std::uint32_t>> default_bound) {
    const json* list = &j;
    std::string list_ptr = ptr;
    bool close = false;
    std::optional<std::vector<std::uint32_t>> bound = std::move(default_bound);
    if (j.is_object()) {
        if (j.contains("bound"))
            bound = read_uint_list(j["bound"], child(ptr, "bound"));
        if (j.contains("monomials") == j.contains("generators"))
            throw ConfigError(ptr, "give exactly one of 'monomials' and 'generators'");
        close = j.contains("generators");
        const std::string key = close ? "generators" : "monomials";
        list = &j[key];
        list_ptr = child(ptr, key);
    }
    require_array(*list, list_ptr);
    std::optional<std::size_t> m;
    if (bound)
        m = bound->size();
    else if (!list->empty() && (*list)[0].is_array())
        m = (*list)[0].size();
    if (!m)
        throw ConfigError(ptr, "cannot infer the number of variables");
    MonomialSet L = rethrow_at(ptr, [&] { return MonomialSet(*m, bound, {}); });
    for (std::size_t i = 0; i < list->size(); ++i) {
        const auto at = child(list_ptr, i);
        const Monomial u = read_monomial((*list)[i], at, m);
        rethrow_at(at, [&] { return L.insert(u); });
    }
    return close ? divisibility_closure(L) : L;
}

json to_json(const Monomial& u) { return u.exponents(); }

json to_json(const MonomialSet& L) {
    json mons = json::array();
    for (const auto& u : L)
        mons.push_back(u.exponents());
    json out = {{"monomials", mons}};
    if (L.bound())
        out["bound"] = *L.bound();
    return out;
}

json to_json(const PBorelGraph& g) {
    json adj = json::array();
    json witness = json::array();
    for (std::size_t i = 0; i < g.m; ++i) {
        json to = json::array();
        for (std::size_t j = 0; j < g.m; ++j)
            if (i != j && g.has_edge(i, j))
                to.push_back(j + 1);
        adj.push_back({{"from", i + 1}, {"to", to}});
    }
    for (const auto& [edge, w] : g.witnesses)
        witness.push_back({{"from", edge.first + 1},
                           {"to", edge.second + 1},
                           {"u", w.member.exponents()},
                           {"ell", w.ell}});
    json discarded = json::array();
    for (const auto& d : g.discarded)
        discarded.push_back({{"from", d.from + 1},
                             {"to", d.to + 1},
                             {"u", d.member.exponents()},
                             {"ell", d.ell}});
    return {{"p", g.p},
            {"variables", g.m},
            {"adjacency", adj},
            {"witness", witness},
            {"discarded_outside_delta", discarded}};
}

AffineTransformation transformation_from_json(const Field& F, const json& j,
                                              const std::string& ptr) {
    const auto aptr = child(ptr, "A");
    const json& rows = require_array(require(j, "A", ptr), aptr);
    const std::size_t m = rows.size();
    if (m == 0)
        throw ConfigError(aptr, "empty matrix");
    Matrix A(m, m);
    for (std::size_t r = 0; r < m; ++r) {
        const auto rptr = child(aptr, r);
        const auto row = read_elements(F, rows[r], rptr);
        if (row.size() != m)
            throw ConfigError(rptr, "matrix must be square");
        for (std::size_t c = 0; c < m; ++c)
            A(r, c) = row[c];
    }
    Vector b(m, F.zero());
    if (j.contains("b")) {
        b = read_elements(F, j["b"], child(ptr, "b"));
        if (b.size() != m)
            throw ConfigError(child(ptr, "b"), "translation length differs from the matrix size");
    }
    return AffineTransformation(F, std::move(A), std::move(b));
}

json to_json(const AffineTransformation& T) {
    const Field& F = T.field();
    json A = json::array();
    for (std::size_t r = 0; r < T.dimension(); ++r)
        A.push_back(elements_to_json(F, T.A().row(r)));
    return {{"A", A}, {"b", elements_to_json(F, T.b())}};
}

json transformation_report(const AffineTransformation& T, const MonomialSet& L,
                           const CartesianSet& S) {
    json out = {{"T", to_json(T)}};
    const auto point = set_violation(T, S);
    out["stabilizes_set"] = !point.has_value();
    if (point) {
        out["stabilizes_span"] = nullptr;
        out["witness"] = {{"point", elements_to_json(S.field(), *point)}};
        return out;
    }
    const auto span = span_violation(T, L, S);
    out["stabilizes_span"] = !span.has_value();
    out["witness"] = span ? json{{"u", span->member.exponents()},
                                 {"monomial", span->monomial.exponents()}}
                          : json(nullptr);
    return out;
}

json to_json(const Family& fam) {
    json params = json::object();
    for (const auto& p : fam.params())
        params[p.name] = p.value;
    return {{"kind", to_string(fam.kind())}, {"params", params}, {"count", fam.count()}};
}

json to_json(const HeteroPattern& h) {
    json entries = json::array();
    for (std::size_t i = 0; i < h.m; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < h.m; ++j)
            row.push_back(elements_to_json(h.field, h.entry(i, j)));
        entries.push_back(row);
    }
    json translations = json::array();
    for (const auto& t : h.translations)
        translations.push_back(elements_to_json(h.field, t));
    return {{"kind", to_string(FamilyKind::AdditiveHetero)},
            {"necessary_only", HeteroPattern::necessary_only},
            {"entries", entries},
            {"translations", translations},
            {"candidates", h.candidates().size()}};
}

json to_json(const VerificationReport& r) {
    json ces = json::array();
    for (const auto& c : r.counterexamples) {
        json e = {{"T", to_json(c.T)}};
        if (c.point)
            e["point"] = elements_to_json(c.T.field(), *c.point);
        if (c.span)
            e["span"] = {{"u", c.span->member.exponents()},
                         {"monomial", c.span->monomial.exponents()}};
        ces.push_back(std::move(e));
    }
    return {{"configuration", r.configuration},
            {"expect_equal", r.expect_equal},
            {"relation", to_string(r.relation)},
            {"claimed_count", r.claimed_count},
            {"verified_count", r.verified_count},
            {"oracle_count", r.oracle_count},
            {"gap", r.oracle_count - r.verified_count},
            {"counterexamples", ces},
            {"passed", r.passed()}};
}

json to_json(const GroupCheck& g) {
    json out = {{"has_identity", g.has_identity},
                {"closed_under_inverse", g.closed_under_inverse},
                {"closed_under_composition", g.closed_under_composition},
                {"exhaustive", g.exhaustive},
                {"pairs_checked", g.pairs_checked}};
    if (g.failing_pair)
        out["failing_pair"] = {to_json(g.failing_pair->first), to_json(g.failing_pair->second)};
    return out;
}

json to_json(const Field& F, const Matrix& M) {
    json out = json::array();
    for (std::size_t r = 0; r < M.rows(); ++r)
        out.push_back(elements_to_json(F, M.row(r)));
    return out;
}

std::string to_text_grid(const Field& F, const Matrix& M) {
    std::ostringstream os;
    for (std::size_t r = 0; r < M.rows(); ++r) {
        for (std::size_t c = 0; c < M.cols(); ++c)
            os << (c ? " " : "") << F.to_string(M(r, c));
        os << '\n';
    }
    return os.str();
}

} // namespace cartperm
