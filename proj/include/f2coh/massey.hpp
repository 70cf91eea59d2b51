#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2coh/yoneda.hpp"

namespace f2coh {

// Entries m_{i,j}, 1 <= i < j <= n+1 with (i,j) != (1,n+1), of degree Σ_{i<=k<j} deg X_k - (j-i-1),
// satisfying δ m_{i,j} = Σ_{i<k<j} m_{i,k}·m_{k,j}; edge entries m_{i,i+1} represent the arguments.
class DefiningSystem {
public:
    DefiningSystem(ComplexPtr cx, std::vector<int> degrees) : cx_(std::move(cx)), degrees_(std::move(degrees)) {
        if (degrees_.size() < 2) throw std::invalid_argument("DefiningSystem: at least two arguments required");
        for (int d : degrees_) if (d < 1) throw std::invalid_argument("DefiningSystem: arguments must have positive degree");
        const std::size_t n = degrees_.size();
        entries_.resize((n + 2) * (n + 2));
    }

    const ComplexPtr& complex() const { return cx_; }
    int n() const { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& argument_degrees() const { return degrees_; }

    int entry_degree(int i, int j) const {
        int d = 0;
        for (int k = i; k < j; ++k) d += degrees_[static_cast<std::size_t>(k - 1)];
        return d - (j - i - 1);
    }
    int value_degree() const { return entry_degree(1, n() + 1) + 1; }

    bool has(int i, int j) const { return entries_[index(i, j)].has_value(); }
    const Cochain& entry(int i, int j) const {
        const auto& e = entries_[index(i, j)];
        if (!e) throw std::out_of_range("DefiningSystem: entry (" + std::to_string(i) + "," + std::to_string(j) + ") not set");
        return *e;
    }
    void set(int i, int j, Cochain c) {
        check_pair(i, j);
        if (i == 1 && j == n() + 1) throw std::invalid_argument("DefiningSystem: the corner entry is not part of a defining system");
        if (c.degree() != entry_degree(i, j)) throw std::invalid_argument("DefiningSystem: entry has the wrong degree");
        if (c.complex().get() != cx_.get()) throw std::invalid_argument("DefiningSystem: entry over a different resolution");
        entries_[index(i, j)] = std::move(c);
    }

    // Σ_{i<k<j} m_{i,k}·m_{k,j}, truncated to the given number of levels.
    Cochain product_sum(int i, int j, std::size_t levels = ~std::size_t{0}) const {
        std::optional<Cochain> acc;
        for (int k = i + 1; k < j; ++k) {
            Cochain p = compose(entry(i, k), entry(k, j), levels);
            if (acc) *acc += p; else acc = std::move(p);
        }
        return std::move(*acc);
    }

private:
    void check_pair(int i, int j) const {
        if (i < 1 || j > n() + 1 || i >= j) throw std::out_of_range("DefiningSystem: invalid entry index");
    }
    std::size_t index(int i, int j) const {
        check_pair(i, j);
        return static_cast<std::size_t>(i) * (degrees_.size() + 2) + static_cast<std::size_t>(j);
    }

    ComplexPtr cx_;
    std::vector<int> degrees_;
    std::vector<std::optional<Cochain>> entries_;
};

// Non-edge entries in the order they are solved: by length, then by row.
inline std::vector<std::pair<int, int>> solving_order(int n) {
    std::vector<std::pair<int, int>> out;
    for (int len = 2; len <= n; ++len)
        for (int i = 1; i + len <= n + 1; ++i)
            if (!(i == 1 && i + len == n + 1)) out.emplace_back(i, i + len);
    return out;
}

// Number of levels each entry needs so that level 0 of the value can be formed.
inline std::vector<std::vector<std::size_t>> level_plan(const DefiningSystem& shape, std::size_t extra = 0) {
    const int n = shape.n();
    std::vector<std::vector<std::size_t>> need(static_cast<std::size_t>(n) + 2, std::vector<std::size_t>(static_cast<std::size_t>(n) + 2, 0));
    auto bump = [&](int i, int j, std::size_t l) {
        auto& v = need[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        v = std::max(v, l);
    };
    for (int k = 2; k <= n; ++k) {
        bump(k, n + 1, 1 + extra);
        bump(1, k, 1 + extra + static_cast<std::size_t>(shape.entry_degree(k, n + 1)));
    }
    auto order = solving_order(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto [i, j] = *it;
        const std::size_t l = std::max<std::size_t>(need[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], 1);
        need[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = l;
        const std::size_t c = std::max<std::size_t>(1, l - 1);
        for (int k = i + 1; k < j; ++k) {
            bump(k, j, c);
            bump(i, k, c + static_cast<std::size_t>(shape.entry_degree(k, j)));
        }
    }
    const auto& cx = *shape.complex();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n + 1; ++j) {
            if (i == 1 && j == n + 1) continue;
            auto& v = need[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const std::size_t avail = cx.full_levels(shape.entry_degree(i, j));
            if (v > avail) {
                if (extra > 0) { v = avail; continue; }
                throw std::out_of_range("Massey product needs a larger resolution window");
            }
        }
    return need;
}

inline void check_arguments(const std::vector<CohClass>& args) {
    if (args.size() < 2) throw std::invalid_argument("Massey product needs at least two arguments");
    for (const auto& a : args) {
        if (a.complex().get() != args.front().complex().get()) throw std::invalid_argument("Massey arguments over different resolutions");
        if (a.degree() < 1) throw std::invalid_argument("Massey arguments must have positive degree");
    }
    DefiningSystem probe(args.front().complex(), [&] {
        std::vector<int> d;
        for (const auto& a : args) d.push_back(a.degree());
        return d;
    }());
    args.front().complex()->check_degree(probe.value_degree());
}

inline std::vector<int> degrees_of(const std::vector<CohClass>& args) {
    std::vector<int> d;
    for (const auto& a : args) d.push_back(a.degree());
    return d;
}

// Deterministic defining system: representatives are the lifted basis combinations and every
// entry is the particular solution with free variables zero. nullopt when an obstruction is nonzero.
inline std::optional<DefiningSystem> build_defining_system(const std::vector<CohClass>& args, std::size_t extra_levels = 0) {
    check_arguments(args);
    DefiningSystem ds(args.front().complex(), degrees_of(args));
    const auto need = level_plan(ds, extra_levels);
    const int n = ds.n();
    for (int i = 1; i <= n; ++i)
        ds.set(i, i + 1, args[static_cast<std::size_t>(i - 1)].representative(need[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) + 1]));
    for (const auto& [i, j] : solving_order(n)) {
        const std::size_t l = need[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        const Cochain c = ds.product_sum(i, j, std::max<std::size_t>(1, l - 1));
        auto psi = solve_coboundary(c, l);
        if (!psi) return std::nullopt;
        ds.set(i, j, std::move(*psi));
    }
    return ds;
}

inline CohClass massey_value(const DefiningSystem& ds) {
    return class_of(ds.product_sum(1, ds.n() + 1, 1));
}

// δ m_{i,j} = Σ m_{i,k}·m_{k,j} on every level both sides share, for every non-edge entry,
// and the edge entries are cocycles.
inline bool check_defining_system(const DefiningSystem& ds) {
    const int n = ds.n();
    for (int i = 1; i <= n; ++i) {
        const Cochain d = differential(ds.entry(i, i + 1));
        if (!d.is_zero()) return false;
    }
    for (const auto& [i, j] : solving_order(n)) {
        const Cochain d = differential(ds.entry(i, j));
        const Cochain rhs = ds.product_sum(i, j, d.levels());
        if (rhs.levels() < d.levels()) return false;
        if (!(d == rhs.truncated(d.levels()))) return false;
    }
    return true;
}

enum class EnumerationPolicy { ClassShifts, SampledCoboundaries };

struct MasseyValueSet {
    bool defined = false;
    std::vector<CohClass> values;  // sorted, without repetition
    std::size_t systems = 0;       // complete defining systems reached
    std::size_t obstructed = 0;    // branches cut by a nonzero obstruction
};

struct ValueSetOptions {
    EnumerationPolicy policy = EnumerationPolicy::ClassShifts;
    std::uint64_t seed = 1;
    int coboundaries_per_entry = 2;
    std::size_t max_systems = std::size_t{1} << 20;
};

// All values reachable by changing every non-edge entry by cocycle classes (and, for the
// sampled policy, by random coboundaries), with the argument representatives fixed.
inline MasseyValueSet massey_value_set(const std::vector<CohClass>& args, const ValueSetOptions& opt = {}) {
    check_arguments(args);
    const auto& cx = args.front().complex();
    DefiningSystem ds(cx, degrees_of(args));
    const auto need = level_plan(ds);
    const int n = ds.n();
    for (int i = 1; i <= n; ++i)
        ds.set(i, i + 1, args[static_cast<std::size_t>(i - 1)].representative(need[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) + 1]));
    const auto order = solving_order(n);
    std::vector<std::vector<Cochain>> shift_basis(static_cast<std::size_t>(cx->max_cohomology_degree()) + 1);
    std::vector<bool> shift_ready(shift_basis.size(), false);
    auto shifts_for = [&](int degree) -> const std::vector<Cochain>& {
        if (!shift_ready[static_cast<std::size_t>(degree)]) {
            for (const auto& b : cohomology_basis(cx, degree)) shift_basis[static_cast<std::size_t>(degree)].push_back(b.representative());
            shift_ready[static_cast<std::size_t>(degree)] = true;
        }
        return shift_basis[static_cast<std::size_t>(degree)];
    };
    std::mt19937_64 rng(opt.seed);
    MasseyValueSet out;
    std::set<CohClass> values;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == order.size()) {
            ++out.systems;
            if (out.systems > opt.max_systems) throw std::runtime_error("Massey enumeration exceeds the system budget");
            values.insert(massey_value(ds));
            return;
        }
        const auto [i, j] = order[pos];
        const std::size_t l = need[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        const Cochain c = ds.product_sum(i, j, std::max<std::size_t>(1, l - 1));
        auto psi = solve_coboundary(c, l);
        if (!psi) {
            ++out.obstructed;
            return;
        }
        const int d = ds.entry_degree(i, j);
        const auto& basis = shifts_for(d);
        if (basis.size() > 20) throw std::runtime_error("Massey enumeration: too many class shifts");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
            Cochain m = *psi;
            for (std::size_t k = 0; k < basis.size(); ++k)
                if ((mask >> k) & 1u) m += basis[k].truncated(l);
            if (opt.policy == EnumerationPolicy::SampledCoboundaries)
                for (int r = 0; r < opt.coboundaries_per_entry; ++r)
                    m += differential(random_cochain(cx, d - 1, l + 1, rng));
            ds.set(i, j, std::move(m));
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    out.defined = out.systems > 0;
    out.values.assign(values.begin(), values.end());
    return out;
}

inline std::vector<CohClass> span_of(const std::vector<CohClass>& gens, const ComplexPtr& cx, int degree) {
    IncrementalBasis basis(cx->dim(degree));
    std::vector<CohClass> independent;
    for (const auto& g : gens)
        if (basis.insert(g.coordinates())) independent.push_back(g);
    std::set<CohClass> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << independent.size()); ++mask) {
        CohClass c = CohClass::zero(cx, degree);
        for (std::size_t k = 0; k < independent.size(); ++k)
            if ((mask >> k) & 1u) c += independent[k];
        out.insert(c);
    }
    return {out.begin(), out.end()};
}

// A·H^{q+r-1} + H^{p+q-1}·C for ⟨A, B, C⟩ with deg B = q.
inline std::vector<CohClass> triple_indeterminacy(const CohClass& a, const CohClass& c, int middle_degree) {
    const auto& cx = a.complex();
    const int p = a.degree(), r = c.degree(), q = middle_degree;
    const int total = p + q + r - 1;
    cx->check_degree(total);
    std::vector<CohClass> gens;
    if (q + r - 1 >= 1)
        for (const auto& h : cohomology_basis(cx, q + r - 1)) gens.push_back(cup(a, h));
    if (p + q - 1 >= 1)
        for (const auto& h : cohomology_basis(cx, p + q - 1)) gens.push_back(cup(h, c));
    return span_of(gens, cx, total);
}

}  // namespace f2coh
