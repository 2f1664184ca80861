#include "mp/monomial.hpp"

#include <algorithm>
#include <bit>

#include "mp/error.hpp"

namespace mp {

namespace {

void check_nvars(int nvars) {
    if (nvars < 0) throw InvalidInput("negative variable count");
    if (nvars > kMaxVars) {
        throw Unsupported("at most " + std::to_string(kMaxVars) + " variables are supported, got " +
                          std::to_string(nvars));
    }
}

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars()) {
        throw InvalidInput("ideals live in rings with " + std::to_string(a.nvars()) + " and " +
                           std::to_string(b.nvars()) + " variables");
    }
}

void check_same_ring(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw InvalidInput("monomials have different variable counts");
}

}  // namespace

Monomial::Monomial(int nvars) {
    check_nvars(nvars);
    exps_.assign(static_cast<std::size_t>(nvars), 0);
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    check_nvars(nvars());
    for (int e : exps_) {
        if (e < 0) throw InvalidInput("negative exponent");
    }
    refresh();
}

Monomial Monomial::from_support(VarMask support, int nvars) {
    check_nvars(nvars);
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    for (int i = 0; i < nvars; ++i) {
        if (support >> i & 1u) exps[static_cast<std::size_t>(i)] = 1;
    }
    if (nvars < kMaxVars && (support >> nvars) != 0) {
        throw InvalidInput("support mask has bits beyond the variable count");
    }
    return Monomial(std::move(exps));
}

void Monomial::refresh() {
    degree_ = 0;
    support_ = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        degree_ += exps_[i];
        if (exps_[i] > 0) support_ |= VarMask{1} << i;
    }
}

std::vector<int> Monomial::support() const {
    std::vector<int> out;
    for (int i = 0; i < nvars(); ++i) {
        if (support_ >> i & 1u) out.push_back(i);
    }
    return out;
}

bool Monomial::is_squarefree() const noexcept {
    return std::popcount(support_) == degree_;
}

bool Monomial::divides(const Monomial& other) const {
    check_same_ring(*this, other);
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    if (auto c = degree_ <=> other.degree_; c != 0) return c;
    // Larger exponent vector first.
    return other.exps_ <=> exps_;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    std::vector<int> e(a.exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exps_[i];
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    std::vector<int> e(a.exponents().begin(), a.exponents().end());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    std::vector<int> e(a.exponents().begin(), a.exponents().end());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw InvalidInput("quotient of non-divisible monomials");
    std::vector<int> e(a.exponents().begin(), a.exponents().end());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.exponents()[i];
    return Monomial(std::move(e));
}

// ---------------------------------------------------------------------------

MonomialIdeal::MonomialIdeal(int nvars) : nvars_(nvars) { check_nvars(nvars); }

MonomialIdeal MonomialIdeal::unit(int nvars) {
    MonomialIdeal out(nvars);
    out.gens_.emplace_back(nvars);
    return out;
}

bool MonomialIdeal::is_squarefree() const noexcept {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::is_equigenerated() const noexcept {
    return gens_.empty() || gens_.front().degree() == gens_.back().degree();
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.nvars() != nvars_) throw InvalidInput("monomial variable count does not match ideal");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::vector<VarMask> MonomialIdeal::support_masks() const {
    std::vector<VarMask> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.support_mask());
    return out;
}

VarMask MonomialIdeal::support_mask() const noexcept {
    VarMask m = 0;
    for (const auto& g : gens_) m |= g.support_mask();
    return m;
}

MonomialIdeal minimalize(std::vector<Monomial> monomials, int nvars) {
    MonomialIdeal out(nvars);
    for (const auto& m : monomials) {
        if (m.nvars() != nvars) {
            throw InvalidInput("monomial has " + std::to_string(m.nvars()) +
                               " exponents, ideal has " + std::to_string(nvars) + " variables");
        }
    }
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    // A divisor has degree at most that of its multiple, so it is already kept.
    for (auto& m : monomials) {
        bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(),
                                     [&](const Monomial& g) { return g.divides(m); });
        if (!redundant) out.gens_.push_back(std::move(m));
    }
    return out;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<Monomial> all(a.generators().begin(), a.generators().end());
    all.insert(all.end(), b.generators().begin(), b.generators().end());
    return minimalize(std::move(all), a.nvars());
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<Monomial> all;
    all.reserve(a.size() * b.size());
    for (const auto& u : a.generators()) {
        for (const auto& v : b.generators()) all.push_back(u * v);
    }
    return minimalize(std::move(all), a.nvars());
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<Monomial> all;
    all.reserve(a.size() * b.size());
    for (const auto& u : a.generators()) {
        for (const auto& v : b.generators()) all.push_back(lcm(u, v));
    }
    return minimalize(std::move(all), a.nvars());
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
    if (u.nvars() != ideal.nvars()) throw InvalidInput("monomial variable count does not match ideal");
    std::vector<Monomial> all;
    all.reserve(ideal.size());
    for (const auto& v : ideal.generators()) all.push_back(quotient(v, gcd(v, u)));
    return minimalize(std::move(all), ideal.nvars());
}

namespace {

struct MatchingPowerSearch {
    std::span<const Monomial> gens;
    std::vector<VarMask> masks;
    int k;
    std::vector<Monomial> out;

    void run(std::size_t start, int chosen, VarMask used, const Monomial& product) {
        if (chosen == k) {
            out.push_back(product);
            return;
        }
        const std::size_t need = static_cast<std::size_t>(k - chosen);
        for (std::size_t i = start; i + need <= gens.size(); ++i) {
            if ((masks[i] & used) != 0) continue;
            run(i + 1, chosen + 1, used | masks[i], product * gens[i]);
        }
    }
};

int max_disjoint(const std::vector<VarMask>& masks, std::size_t start, VarMask used, int chosen, int best) {
    if (chosen + static_cast<int>(masks.size() - start) <= best) return best;
    best = std::max(best, chosen);
    for (std::size_t i = start; i < masks.size(); ++i) {
        if ((masks[i] & used) == 0) best = max_disjoint(masks, i + 1, used | masks[i], chosen + 1, best);
    }
    return best;
}

}  // namespace

MonomialIdeal matching_power(const MonomialIdeal& ideal, int k) {
    if (k < 0) throw InvalidInput("matching power exponent must be nonnegative");
    if (k == 0) return MonomialIdeal::unit(ideal.nvars());
    if (k == 1) return ideal;
    MatchingPowerSearch search{ideal.generators(), ideal.support_masks(), k, {}};
    search.run(0, 0, 0, Monomial(ideal.nvars()));
    return minimalize(std::move(search.out), ideal.nvars());
}

int monomial_grade(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return 0;
    return max_disjoint(ideal.support_masks(), 0, 0, 0, 0);
}

MonomialIdeal partial_star(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw InvalidInput("partial_star of the zero ideal");
    std::vector<Monomial> all;
    for (const auto& u : ideal.generators()) {
        std::vector<int> e(u.exponents().begin(), u.exponents().end());
        for (auto& ei : e) {
            if (ei == 0) continue;
            --ei;
            all.emplace_back(e);
            ++ei;
        }
    }
    return minimalize(std::move(all), ideal.nvars());
}

Monomial generator_lcm(const MonomialIdeal& ideal) {
    Monomial acc(ideal.nvars());
    for (const auto& g : ideal.generators()) acc = lcm(acc, g);
    return acc;
}

int big_cosize(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw InvalidInput("big_cosize of the zero ideal");
    // A subset misses the full lcm iff, for some variable, all its members
    // have exponent below the maximum. The largest such subset therefore has
    // max_i #{u : u_i < L_i} elements, and one more generator always suffices.
    const Monomial full = generator_lcm(ideal);
    int largest_deficient = 0;
    for (int i = 0; i < ideal.nvars(); ++i) {
        if (full.exponent(i) == 0) continue;
        int below = 0;
        for (const auto& g : ideal.generators()) {
            if (g.exponent(i) < full.exponent(i)) ++below;
        }
        largest_deficient = std::max(largest_deficient, below);
    }
    return largest_deficient + 1;
}

int initial_degree(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw InvalidInput("initial degree of the zero ideal");
    return ideal.generators().front().degree();
}

MonomialIdeal maximal_ideal(int nvars) {
    return squarefree_veronese(nvars, 1);
}

MonomialIdeal squarefree_veronese(int nvars, int degree) {
    check_nvars(nvars);
    if (degree < 0) throw InvalidInput("negative degree");
    if (degree == 0) return MonomialIdeal::unit(nvars);
    std::vector<Monomial> all;
    auto choose = [&](auto&& self, int next, int left, VarMask mask) -> void {
        if (left == 0) {
            all.push_back(Monomial::from_support(mask, nvars));
            return;
        }
        for (int v = next; v + left <= nvars; ++v) self(self, v + 1, left - 1, mask | VarMask{1} << v);
    };
    choose(choose, 0, degree, 0);
    return minimalize(std::move(all), nvars);
}

Polarization polarize(const MonomialIdeal& ideal) {
    const int n = ideal.nvars();
    const Monomial top = generator_lcm(ideal);
    std::vector<int> first_copy(static_cast<std::size_t>(n));
    Polarization out;
    for (int i = 0; i < n; ++i) {
        first_copy[static_cast<std::size_t>(i)] = static_cast<int>(out.provenance.size());
        const int copies = std::max(1, top.exponent(i));
        for (int c = 1; c <= copies; ++c) out.provenance.emplace_back(i, c);
    }
    const int total = static_cast<int>(out.provenance.size());
    if (total > kMaxVars) throw Unsupported("polarization needs more than 64 variables");
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
        std::vector<int> e(static_cast<std::size_t>(total), 0);
        for (int i = 0; i < n; ++i) {
            for (int c = 0; c < g.exponent(i); ++c) e[static_cast<std::size_t>(first_copy[static_cast<std::size_t>(i)] + c)] = 1;
        }
        gens.emplace_back(std::move(e));
    }
    out.ideal = minimalize(std::move(gens), total);
    return out;
}

}  // namespace mp
