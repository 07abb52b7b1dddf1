#ifndef CARTPERM_TOOLS_WORKED_EXAMPLES_HPP
#define CARTPERM_TOOLS_WORKED_EXAMPLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "cartperm/json_io.hpp"

namespace cartperm::cli {

struct Assertion {
    std::string example;
    std::string name;
    bool passed = false;
    std::string detail;
    std::optional<std::string> note; // set when the golden value was corrected
};

json to_json(const Assertion& a);

// Fixed inputs of the five worked examples.
namespace fixtures {

/// F_3^* x {0,1} over GF(3) and T = [[1,0],[1,1]]x.
CartesianSet torus_times_bit();
AffineTransformation shear_gf3();
/// Degree <= 3 monomials plus {x2^4, x1 x2^3, x1^3 x2, x1^4} over GF(9)^2.
MonomialSet f9_monomials();
/// G1 = F2 + aF2 + a^2F2, G2 = aF4, G3 = F2 in GF(16), a^4 = a + 1.
std::vector<SetComponent> gf16_groups();
/// a^6 F2 + a^11 F2 as an explicit list.
std::vector<FieldElement> alpha_f4_elements();
/// Divisors of x1^2 and x1 x2 with the bounds of G1 x G2 x G3.
MonomialSet final_monomials();

} // namespace fixtures

std::vector<Assertion> example_shear(const OracleBudget& budget);
std::vector<Assertion> example_f9(const OracleBudget& budget);
std::vector<Assertion> example_h_table(const OracleBudget& budget);
std::vector<Assertion> example_alpha_f4(const OracleBudget& budget);
std::vector<Assertion> example_final(const OracleBudget& budget);

std::vector<Assertion> run_worked_examples(const OracleBudget& budget);

} // namespace cartperm::cli

#endif // CARTPERM_TOOLS_WORKED_EXAMPLES_HPP
