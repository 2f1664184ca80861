#include "mp/homology.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "mp/error.hpp"
#include "mp/ideal_io.hpp"
#include "mp/linalg.hpp"

namespace mp {

namespace {

constexpr int kMaxHochsterVars = 24;
constexpr std::uint64_t kMaxKoszulBox = std::uint64_t{1} << 22;

/// Reduced homology of the complex whose faces are exactly `faces`
/// (closed under taking subsets). Element s of the result is H̃_{s-1}.
std::vector<std::size_t> homology_from_faces(std::vector<VarMask> faces, const FieldSpec& field) {
    if (faces.empty()) return {};
    int top = 0;
    for (VarMask f : faces) top = std::max(top, std::popcount(f));
    std::vector<std::vector<VarMask>> levels(static_cast<std::size_t>(top) + 1);
    for (VarMask f : faces) levels[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    for (auto& level : levels) std::sort(level.begin(), level.end());

    // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces.
    std::vector<std::size_t> ranks(levels.size() + 1, 0);
    for (std::size_t s = 1; s < levels.size(); ++s) {
        const auto& rows = levels[s - 1];
        const auto& cols = levels[s];
        if (rows.empty() || cols.empty()) continue;
        DenseMatrix boundary(rows.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            VarMask rest = cols[c];
            int position = 0;
            while (rest != 0) {
                const VarMask bit = rest & (~rest + 1);
                rest &= rest - 1;
                const VarMask facet = cols[c] & ~bit;
                auto it = std::lower_bound(rows.begin(), rows.end(), facet);
                boundary(static_cast<std::size_t>(it - rows.begin()), c) = (position % 2 == 0) ? 1 : -1;
                ++position;
            }
        }
        ranks[s] = matrix_rank(boundary, field);
    }
    std::vector<std::size_t> out(levels.size(), 0);
    for (std::size_t s = 0; s < levels.size(); ++s) {
        out[s] = levels[s].size() - ranks[s] - ranks[s + 1];
    }
    return out;
}

}  // namespace

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, const FieldSpec& field) {
    return homology_from_faces(complex.faces(), field);
}

int depth_by_local_cohomology(const MonomialIdeal& ideal, const FieldSpec& field) {
    if (ideal.is_unit()) throw InvalidInput("depth of the unit ideal");
    if (!ideal.is_squarefree()) {
        const auto polar = polarize(ideal);
        return depth_by_local_cohomology(polar.ideal, field) - (polar.ideal.nvars() - ideal.nvars());
    }
    // H^i_m(K[Δ]) is nonzero iff H̃_{i-|F|-1}(lk F) is nonzero for some face F.
    const auto faces = stanley_reisner_complex(ideal).faces();
    int depth = ideal.nvars();
    for (VarMask f : faces) {
        std::vector<VarMask> link;
        for (VarMask g : faces) {
            if ((g & f) == f) link.push_back(g & ~f);
        }
        const auto ranks = homology_from_faces(std::move(link), field);
        for (std::size_t s = 0; s < ranks.size(); ++s) {
            if (ranks[s] == 0) continue;
            depth = std::min(depth, static_cast<int>(s) + std::popcount(f));
            break;
        }
    }
    return depth;
}

// ---------------------------------------------------------------------------

std::uint64_t BettiTable::at(int i, int j) const {
    auto it = graded_.find({i, j});
    return it == graded_.end() ? 0 : it->second;
}

std::uint64_t BettiTable::total(int i) const {
    std::uint64_t sum = 0;
    for (const auto& [key, value] : graded_) {
        if (key.first == i) sum += value;
    }
    return sum;
}

int BettiTable::projective_dimension() const {
    int best = 0;
    for (const auto& [key, value] : graded_) {
        if (value > 0) best = std::max(best, key.first);
    }
    return best;
}

void BettiTable::add(int i, int j, std::uint64_t value) {
    if (value == 0) return;
    graded_[{i, j}] += value;
}

void BettiTable::add_multigraded(int i, VarMask sigma, std::uint64_t value) {
    if (value == 0) return;
    enable_multigraded();
    (*multigraded_)[{i, sigma}] += value;
}

// ---------------------------------------------------------------------------

BettiTable betti_table_hochster(const MonomialIdeal& ideal, const FieldSpec& field) {
    if (!ideal.is_squarefree()) throw InvalidInput("Hochster's formula needs a squarefree ideal; polarize first");
    if (ideal.is_unit()) throw InvalidInput("Betti table of the unit ideal");
    const int n = ideal.nvars();
    if (n > kMaxHochsterVars) throw Unsupported("Hochster engine supports at most 24 variables");

    const auto gens = ideal.support_masks();
    const std::size_t count = std::size_t{1} << n;
    std::vector<std::uint8_t> nonface(count, 0);
    for (VarMask g : gens) nonface[g] = 1;
    for (std::size_t m = 1; m < count; ++m) {
        if (nonface[m]) continue;
        for (VarMask rest = m; rest != 0; rest &= rest - 1) {
            if (nonface[m & ~(rest & (~rest + 1))]) {
                nonface[m] = 1;
                break;
            }
        }
    }

    BettiTable table(field);
    table.enable_multigraded();
    table.add(0, 0, 1);
    table.add_multigraded(0, 0, 1);
    std::vector<VarMask> faces;
    for (std::size_t sigma = 1; sigma < count; ++sigma) {
        // A face restricts to a simplex; a vertex of σ outside every generator
        // contained in σ is a cone point. Both give acyclic restrictions.
        if (!nonface[sigma]) continue;
        VarMask covered = 0;
        for (VarMask g : gens) {
            if ((g & ~sigma) == 0) covered |= g;
        }
        if (covered != sigma) continue;

        faces.clear();
        for (VarMask tau = sigma;; tau = (tau - 1) & sigma) {
            if (!nonface[tau]) faces.push_back(tau);
            if (tau == 0) break;
        }
        const auto ranks = homology_from_faces(faces, field);
        const int size = std::popcount(static_cast<VarMask>(sigma));
        for (std::size_t s = 0; s < ranks.size(); ++s) {
            if (ranks[s] == 0) continue;
            // H̃_{s-1}(Δ_σ) contributes to β_{i,σ} with |σ| - i - 1 = s - 1.
            const int i = size - static_cast<int>(s);
            table.add(i, size, ranks[s]);
            table.add_multigraded(i, sigma, ranks[s]);
        }
    }
    return table;
}

BettiTable betti_table_koszul(const MonomialIdeal& ideal, const FieldSpec& field) {
    if (ideal.is_unit()) throw InvalidInput("Betti table of the unit ideal");
    const int n = ideal.nvars();
    const Monomial top = generator_lcm(ideal);
    std::uint64_t box = 1;
    for (int i = 0; i < n; ++i) {
        box *= static_cast<std::uint64_t>(top.exponent(i) + 1);
        if (box > kMaxKoszulBox) throw Unsupported("Koszul engine: multidegree box too large");
    }

    const std::size_t ngens = ideal.size();
    std::vector<int> gen_exps(ngens * static_cast<std::size_t>(n));
    for (std::size_t g = 0; g < ngens; ++g) {
        for (int i = 0; i < n; ++i) gen_exps[g * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = ideal.generators()[g].exponent(i);
    }
    auto member = [&](const std::vector<int>& e) {
        for (std::size_t g = 0; g < ngens; ++g) {
            const int* ge = &gen_exps[g * static_cast<std::size_t>(n)];
            bool divides = true;
            for (int i = 0; i < n && divides; ++i) divides = ge[i] <= e[static_cast<std::size_t>(i)];
            if (divides) return true;
        }
        return false;
    };

    const bool squarefree = ideal.is_squarefree();
    BettiTable table(field);
    if (squarefree) table.enable_multigraded();

    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::vector<int> shifted(static_cast<std::size_t>(n));
    for (std::uint64_t step = 0; step < box; ++step) {
        VarMask support = 0;
        int degree = 0;
        for (int i = 0; i < n; ++i) {
            if (a[static_cast<std::size_t>(i)] > 0) support |= VarMask{1} << i;
            degree += a[static_cast<std::size_t>(i)];
        }
        const int t = std::popcount(support);
        // basis[s]: subsets F of the support with |F| = s and x^(a - F) not in I.
        std::vector<std::vector<VarMask>> basis(static_cast<std::size_t>(t) + 1);
        for (VarMask f = support;; f = (f - 1) & support) {
            for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] - static_cast<int>(f >> i & 1u);
            if (!member(shifted)) basis[static_cast<std::size_t>(std::popcount(f))].push_back(f);
            if (f == 0) break;
        }
        for (auto& b : basis) std::sort(b.begin(), b.end());
        std::vector<std::size_t> ranks(basis.size() + 1, 0);
        for (std::size_t s = 1; s < basis.size(); ++s) {
            const auto& rows = basis[s - 1];
            const auto& cols = basis[s];
            if (rows.empty() || cols.empty()) continue;
            DenseMatrix d(rows.size(), cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                int position = 0;
                for (VarMask rest = cols[c]; rest != 0; rest &= rest - 1) {
                    const VarMask target = cols[c] & ~(rest & (~rest + 1));
                    auto it = std::lower_bound(rows.begin(), rows.end(), target);
                    if (it != rows.end() && *it == target) {
                        d(static_cast<std::size_t>(it - rows.begin()), c) = (position % 2 == 0) ? 1 : -1;
                    }
                    ++position;
                }
            }
            ranks[s] = matrix_rank(d, field);
        }
        for (std::size_t s = 0; s < basis.size(); ++s) {
            const std::size_t h = basis[s].size() - ranks[s] - ranks[s + 1];
            if (h == 0) continue;
            table.add(static_cast<int>(s), degree, h);
            if (squarefree) table.add_multigraded(static_cast<int>(s), support, h);
        }

        for (int i = 0; i < n; ++i) {
            if (++a[static_cast<std::size_t>(i)] <= top.exponent(i)) break;
            a[static_cast<std::size_t>(i)] = 0;
        }
    }
    return table;
}

// ---------------------------------------------------------------------------

namespace {

HomologicalSummary summarize(const MonomialIdeal& ideal, const BettiTable& table) {
    HomologicalSummary s;
    s.nvars = ideal.nvars();
    s.field = table.field();
    s.height = height(ideal);
    s.dim = s.nvars - s.height;
    s.pdim = table.projective_dimension();
    s.depth = s.nvars - s.pdim;
    s.is_cm = s.depth == s.dim;
    return s;
}

BettiTable compute_table(const MonomialIdeal& ideal, const FieldSpec& field) {
    if (ideal.is_squarefree()) return betti_table_hochster(ideal, field);
    const auto polar = polarize(ideal);
    const BettiTable polar_table = betti_table_hochster(polar.ideal, field);
    BettiTable table(field);
    for (const auto& [key, value] : polar_table.graded()) table.add(key.first, key.second, value);
    return table;
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field) {
    if (ideal.is_unit()) throw InvalidInput("Betti table of the unit ideal");
    auto& cache = BettiCache::instance();
    if (!cache.enabled()) return compute_table(ideal, field);
    const std::string key = BettiCache::key(ideal, field);
    if (auto hit = cache.find(key)) return *hit;
    auto store = cache.store();
    if (store) {
        if (auto stored = store->load(key); stored && stored->field() == field) {
            cache.insert(key, *stored);
            return *stored;
        }
    }
    BettiTable table = compute_table(ideal, field);
    cache.insert(key, table);
    if (store) store->save(key, table, summarize(ideal, table));
    return table;
}

HomologicalSummary summary(const MonomialIdeal& ideal, const FieldSpec& field) {
    if (ideal.is_unit()) throw InvalidInput("summary of the unit ideal");
    return summarize(ideal, betti_table(ideal, field));
}

bool has_linear_resolution(const BettiTable& table, int generation_degree) {
    for (const auto& [key, value] : table.graded()) {
        if (key.first == 1 && value > 0 && key.second != generation_degree) {
            throw InvalidInput("ideal is not equigenerated in degree " + std::to_string(generation_degree));
        }
    }
    for (const auto& [key, value] : table.graded()) {
        if (key.first >= 1 && value > 0 && key.second != generation_degree + key.first - 1) return false;
    }
    return true;
}

std::vector<int> normalized_depth_function(const MonomialIdeal& ideal, const FieldSpec& field) {
    if (ideal.is_zero()) throw InvalidInput("normalized depth function of the zero ideal");
    std::vector<int> out;
    const int grade = monomial_grade(ideal);
    for (int k = 1; k <= grade; ++k) {
        const MonomialIdeal power = matching_power(ideal, k);
        out.push_back(summary(power, field).depth - (initial_degree(power) - 1));
    }
    return out;
}

BettiTable::Graded ideal_betti_numbers(const MonomialIdeal& ideal, const FieldSpec& field) {
    BettiTable::Graded out;
    if (ideal.is_zero()) return out;
    const BettiTable table = betti_table(ideal, field);
    for (const auto& [key, value] : table.graded()) {
        if (key.first >= 1 && value > 0) out[{key.first - 1, key.second}] = value;
    }
    return out;
}

// ---------------------------------------------------------------------------

BettiCache& BettiCache::instance() {
    static BettiCache cache;
    return cache;
}

std::string BettiCache::key(const MonomialIdeal& ideal, const FieldSpec& field) {
    return "field " + field.name() + "\n" + format_ideal_text(ideal);
}

std::optional<BettiTable> BettiCache::find(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = tables_.find(key);
    if (it == tables_.end()) return std::nullopt;
    return it->second;
}

void BettiCache::insert(const std::string& key, const BettiTable& table) {
    std::unique_lock lock(mutex_);
    tables_.try_emplace(key, table);
}

void BettiCache::set_store(std::shared_ptr<BettiStore> store) {
    std::unique_lock lock(mutex_);
    store_ = std::move(store);
}

std::shared_ptr<BettiStore> BettiCache::store() const {
    std::shared_lock lock(mutex_);
    return store_;
}

void BettiCache::set_enabled(bool enabled) {
    std::unique_lock lock(mutex_);
    enabled_ = enabled;
}

bool BettiCache::enabled() const {
    std::shared_lock lock(mutex_);
    return enabled_;
}

void BettiCache::clear() {
    std::unique_lock lock(mutex_);
    tables_.clear();
}

std::size_t BettiCache::size() const {
    std::shared_lock lock(mutex_);
    return tables_.size();
}

}  // namespace mp
