#ifndef CARTPERM_JSON_IO_HPP
#define CARTPERM_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "cartperm/affine_group.hpp"
#include "cartperm/codes.hpp"
#include "cartperm/group_families.hpp"
#include "cartperm/monomial_sets.hpp"
#include "cartperm/oracle.hpp"

namespace cartperm {

using nlohmann::json;

/// Malformed input; `pointer()` is the JSON pointer of the offending value.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string pointer, const std::string& message);
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

// Readers take the pointer of `j` within its document for error messages.

/// {"p", "k", "irreducible": [c0, ..., 1]}; the modulus is optional.
Field field_from_json(const json& j, const std::string& ptr = "");
json to_json(const Field& F);

/// Coordinate vector [c0, ..., c_{k-1}]; a bare integer is read as its
/// base-p encoding.
FieldElement element_from_json(const Field& F, const json& j, const std::string& ptr = "");
json element_to_json(const Field& F, FieldElement x);

/// [{"exp": [...], "coeff": [...]}, ...]
Polynomial polynomial_from_json(const Field& F, std::size_t m, const json& j,
                                const std::string& ptr = "");
json to_json(const Polynomial& f);

/// {"components": [{"kind": "full"} | {"kind": "mult", "order": s} |
///  {"kind": "add", "basis": [...]} | {"kind": "explicit", "elements": [...]}]}
CartesianSet cartesian_set_from_json(const Field& F, const json& j, const std::string& ptr = "");
json to_json(const CartesianSet& S);

/// {"bound": [...], "monomials": [[...], ...]} or a bare list of exponent
/// vectors. With "generators" instead of "monomials" the divisibility
/// closure is taken. `default_bound` applies when "bound" is absent.
MonomialSet monomial_set_from_json(const json& j, const std::string& ptr = "",
                                   std::optional<std::vector<std::uint32_t>> default_bound = {});
json to_json(const MonomialSet& L);
json to_json(const Monomial& u);

/// Variables numbered from 1, matching x1, x2, ...
json to_json(const PBorelGraph& g);

AffineTransformation transformation_from_json(const Field& F, const json& j,
                                              const std::string& ptr = "");
json to_json(const AffineTransformation& T);

/// {"T", "stabilizes_set", "stabilizes_span", "witness"}
json transformation_report(const AffineTransformation& T, const MonomialSet& L,
                           const CartesianSet& S);

json to_json(const Family& fam);
json to_json(const HeteroPattern& h);
json to_json(const VerificationReport& r);
json to_json(const GroupCheck& g);

/// Array of rows of element coordinate vectors.
json to_json(const Field& F, const Matrix& M);
/// Rows of to_string values separated by spaces, one line per row.
std::string to_text_grid(const Field& F, const Matrix& M);

} // namespace cartperm

#endif // CARTPERM_JSON_IO_HPP
