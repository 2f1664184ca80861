#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mp {

/// Bit i set <=> variable x_{i+1} is present.
using VarMask = std::uint64_t;

/// Upper bound on the number of variables of any ring handled here.
inline constexpr int kMaxVars = 64;

/// A monomial x^a in a polynomial ring with a fixed number of variables.
class Monomial {
public:
    Monomial() = default;

    /// The unit monomial 1 in `nvars` variables.
    explicit Monomial(int nvars);

    /// Throws InvalidInput on a negative exponent, Unsupported beyond kMaxVars.
    explicit Monomial(std::vector<int> exponents);

    static Monomial from_support(VarMask support, int nvars);

    int nvars() const noexcept { return static_cast<int>(exps_.size()); }
    int degree() const noexcept { return degree_; }
    int exponent(int var) const { return exps_.at(static_cast<std::size_t>(var)); }
    std::span<const int> exponents() const noexcept { return exps_; }

    VarMask support_mask() const noexcept { return support_; }
    std::vector<int> support() const;

    bool is_unit() const noexcept { return degree_ == 0; }
    bool is_squarefree() const noexcept;

    bool divides(const Monomial& other) const;

    /// Canonical order: ascending degree, then the exponent vectors in
    /// descending lexicographic order (so x1x2 precedes x1x3 precedes x2x3).
    std::strong_ordering operator<=>(const Monomial& other) const;
    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);

private:
    void refresh();

    std::vector<int> exps_;
    int degree_ = 0;
    VarMask support_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// a / b; requires b | a.
Monomial quotient(const Monomial& a, const Monomial& b);

/// A monomial ideal stored by its minimal generating set in canonical order.
///
/// The zero ideal has no generators. The unit ideal S is the ideal whose only
/// generator is the unit monomial; it only arises as the zeroth matching power
/// and from colons by a member monomial.
class MonomialIdeal {
public:
    /// The zero ideal in `nvars` variables.
    explicit MonomialIdeal(int nvars = 0);

    static MonomialIdeal unit(int nvars);

    int nvars() const noexcept { return nvars_; }
    std::span<const Monomial> generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_unit(); }
    bool is_squarefree() const noexcept;
    /// All generators have the same degree.
    bool is_equigenerated() const noexcept;

    /// Ideal membership of a monomial.
    bool contains(const Monomial& m) const;

    std::vector<VarMask> support_masks() const;
    /// Union of the supports of all generators.
    VarMask support_mask() const noexcept;

    bool operator==(const MonomialIdeal& other) const = default;

    friend MonomialIdeal minimalize(std::vector<Monomial> monomials, int nvars);

private:
    int nvars_;
    std::vector<Monomial> gens_;
};

/// Ideal generated by `monomials`: divisibility-minimal elements, deduplicated,
/// canonically ordered. Throws InvalidInput on a length mismatch.
MonomialIdeal minimalize(std::vector<Monomial> monomials, int nvars);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
/// (I : u) for a monomial u.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);

/// I^[k]: products of k minimal generators with pairwise disjoint supports.
/// k = 0 gives the unit ideal.
MonomialIdeal matching_power(const MonomialIdeal& ideal, int k);

/// Largest k with I^[k] != 0; zero for the zero ideal.
int monomial_grade(const MonomialIdeal& ideal);

/// Ideal of all u / x_i with u a minimal generator and x_i | u.
MonomialIdeal partial_star(const MonomialIdeal& ideal);

/// Smallest s such that any s minimal generators have the lcm of all of them.
int big_cosize(const MonomialIdeal& ideal);

int initial_degree(const MonomialIdeal& ideal);

/// lcm of all minimal generators.
Monomial generator_lcm(const MonomialIdeal& ideal);

/// The graded maximal ideal (x_1, ..., x_n).
MonomialIdeal maximal_ideal(int nvars);

/// The squarefree Veronese ideal m^[d] of all squarefree monomials of degree d.
MonomialIdeal squarefree_veronese(int nvars, int degree);

struct Polarization {
    MonomialIdeal ideal;
    /// New variable index -> (original variable, 1-based copy index).
    std::vector<std::pair<int, int>> provenance;
};

/// Standard polarization. Every original variable keeps at least one copy,
/// so the polarized ring has at least as many variables as the original.
Polarization polarize(const MonomialIdeal& ideal);

}  // namespace mp
