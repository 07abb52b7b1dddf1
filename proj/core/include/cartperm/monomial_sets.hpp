#ifndef CARTPERM_MONOMIAL_SETS_HPP
#define CARTPERM_MONOMIAL_SETS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cartperm/poly_ring.hpp"

namespace cartperm {

/// Finite set of monomials in m variables, optionally confined to
/// Delta = {u : deg_{x_i} u < n_i}. Iterates in GradedOrder.
class MonomialSet {
public:
    using Storage = std::set<Monomial, GradedOrder>;

    explicit MonomialSet(std::size_t m) : m_(m) {}
    /// Throws std::invalid_argument if the bound has the wrong length.
    MonomialSet(std::size_t m, std::vector<std::uint32_t> bound);
    MonomialSet(std::size_t m, std::optional<std::vector<std::uint32_t>> bound,
                const std::vector<Monomial>& members);

    std::size_t variables() const { return m_; }
    const std::optional<std::vector<std::uint32_t>>& bound() const { return bound_; }

    /// Throws std::invalid_argument for a wrong-length monomial or one
    /// outside the attached bound.
    bool insert(const Monomial& u);
    bool contains(const Monomial& u) const { return members_.count(u) != 0; }
    /// Inside the attached bound (always true without one).
    bool admits(const Monomial& u) const;

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    Storage::const_iterator begin() const { return members_.begin(); }
    Storage::const_iterator end() const { return members_.end(); }
    std::vector<Monomial> members() const { return {members_.begin(), members_.end()}; }

    friend bool operator==(const MonomialSet& a, const MonomialSet& b) {
        return a.m_ == b.m_ && a.members_ == b.members_;
    }

private:
    std::size_t m_;
    std::optional<std::vector<std::uint32_t>> bound_;
    Storage members_;
};

/// Every divisor of every member (same bound).
MonomialSet divisibility_closure(const MonomialSet& L);
bool is_decreasing(const MonomialSet& L);

/// All x_j / x_i * u with x_i | u and j < i.
std::vector<Monomial> borel_movements(const Monomial& u);

/// A member u and a Borel movement of u that is missing from the set.
struct BorelWitness {
    Monomial member;
    Monomial movement;
};

/// First member with a Borel movement missing from the set. Movements that
/// leave the attached Delta bound are ignored, as for the p-Borel graph.
std::optional<BorelWitness> borel_violation(const MonomialSet& L);
inline bool has_borel_property(const MonomialSet& L) { return !borel_violation(L).has_value(); }

/// {(x_j/x_i)^l u : 0 <= l <=_p deg_{x_i} u}, always including u itself.
/// Throws std::invalid_argument unless x_i divides u and i != j.
std::vector<Monomial> p_borel_movements(const Monomial& u, std::size_t i, std::size_t j,
                                        std::uint32_t p);

/// Directed graph on the variables: (i, j) is an edge iff every member u
/// divisible by x_i has all of its standard p-Borel movements toward x_j
/// inside the set. Variables dividing no member get every outgoing edge
/// (vacuous truth). Movements that leave the attached Delta bound are not
/// counted against an edge; they are listed in `discarded`.
struct PBorelGraph {
    struct Witness {
        Monomial member;
        std::uint32_t ell;
    };
    struct Discarded {
        std::size_t from;
        std::size_t to;
        Monomial member;
        std::uint32_t ell;
    };

    std::size_t m = 0;
    std::uint32_t p = 0;
    std::vector<char> edges; // row-major m x m, diagonal unused
    std::map<std::pair<std::size_t, std::size_t>, Witness> witnesses; // absent edges only
    std::vector<Discarded> discarded;

    bool has_edge(std::size_t i, std::size_t j) const { return edges[i * m + j] != 0; }
};

PBorelGraph p_borel_graph(const MonomialSet& L, std::uint32_t p);

/// Everything reachable from u by chains of standard p-Borel movements along
/// graph edges, u included. Targets outside the attached bound are dropped.
/// Throws std::invalid_argument if u is not a member.
MonomialSet valid_p_borel_reachable(const MonomialSet& L, const Monomial& u, std::uint32_t p);

/// Entry (i, j) may be nonzero iff i == j or (x_i, x_j) is a graph edge.
struct StableMatrixPattern {
    std::size_t m = 0;
    std::vector<char> mask;

    bool allowed(std::size_t i, std::size_t j) const { return mask[i * m + j] != 0; }
};

StableMatrixPattern stable_pattern(const PBorelGraph& graph);
StableMatrixPattern stable_pattern(const MonomialSet& L, std::uint32_t p);

/// Closure under divisors and Borel movements, dropping movements that leave
/// the attached bound.
MonomialSet borel_closure(const MonomialSet& L);

/// Random decreasing set: divisor closure of up to `generators` uniformly
/// drawn monomials of Delta.
MonomialSet sample_decreasing_set(const std::vector<std::uint32_t>& bound, std::size_t generators,
                                  std::mt19937_64& rng);
/// Random decreasing set with the Borel property: borel_closure of a
/// random decreasing set.
MonomialSet sample_borel_set(const std::vector<std::uint32_t>& bound, std::size_t generators,
                             std::mt19937_64& rng);

} // namespace cartperm

#endif // CARTPERM_MONOMIAL_SETS_HPP
