#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2coh/f2matrix.hpp"
#include "f2coh/group.hpp"
#include "f2coh/group_algebra.hpp"

namespace f2coh {

// Free resolution P_D -> ... -> P_0 -> F2 over F2[G]; diffs[i] is ∂_i : P_i -> P_{i-1}, diffs[0] unused.
struct Resolution {
    GroupPtr group;
    std::string builder;
    std::vector<std::size_t> ranks;
    std::vector<ModuleMap> diffs;

    int window() const { return static_cast<int>(ranks.size()) - 1; }
    const ModuleMap& differential(int i) const {
        if (i < 1 || i > window()) throw std::out_of_range("Resolution: differential index " + std::to_string(i) + " outside window");
        return diffs[static_cast<std::size_t>(i)];
    }
};

using ResolutionPtr = std::shared_ptr<const Resolution>;

namespace detail {

inline void check_window(int window) {
    if (window < 1 || window > 40) throw std::invalid_argument("resolution window must lie in [1, 40]");
}

}  // namespace detail

// Periodic resolution of Q_{2^n} with period 4.
inline ResolutionPtr quaternion_resolution(const GroupPtr& g, int window) {
    detail::check_window(window);
    if (!g->family() || g->family()->family != Family::Quaternion) throw std::invalid_argument("quaternion_resolution: group is not quaternion");
    const auto I = special_element(g, "I"), J = special_element(g, "J"), K = special_element(g, "K");
    const auto L = special_element(g, "L"), N = special_element(g, "N");
    auto res = std::make_shared<Resolution>();
    res->group = g;
    res->builder = "quaternion";
    res->diffs.resize(static_cast<std::size_t>(window) + 1);
    for (int i = 0; i <= window; ++i) res->ranks.push_back(i % 4 == 1 || i % 4 == 2 ? 2 : 1);
    for (int i = 1; i <= window; ++i) {
        ModuleMap d;
        switch (i % 4) {
            case 1: d = ModuleMap::from_elements(g, {{I, J}}); break;
            case 2: d = ModuleMap::from_elements(g, {{L, K}, {J, I}}); break;
            case 3: d = ModuleMap::from_elements(g, {{I}, {K}}); break;
            default: d = ModuleMap::from_elements(g, {{N}}); break;
        }
        res->diffs[static_cast<std::size_t>(i)] = std::move(d);
    }
    return res;
}

// Resolution of SD_{2^n} with P_i of rank i+1. The third entry of the top row of ∂_{2i+1}
// is the integer i read in F2.
inline ResolutionPtr semidihedral_resolution(const GroupPtr& g, int window) {
    detail::check_window(window);
    if (!g->family() || g->family()->family != Family::Semidihedral) throw std::invalid_argument("semidihedral_resolution: group is not semidihedral");
    const auto I = special_element(g, "I"), J = special_element(g, "J");
    const auto L = special_element(g, "L"), Nx = special_element(g, "N_x");
    const auto one = AlgebraElement::one(g);
    const auto t = AlgebraElement::generator(g, "t");
    auto res = std::make_shared<Resolution>();
    res->group = g;
    res->builder = "semidihedral";
    res->diffs.resize(static_cast<std::size_t>(window) + 1);
    for (int i = 0; i <= window; ++i) res->ranks.push_back(static_cast<std::size_t>(i) + 1);
    res->diffs[1] = ModuleMap::from_elements(g, {{I, J}});
    for (int k = 2; k <= window; ++k) {
        const int i = k / 2;
        const auto& below = res->diffs[static_cast<std::size_t>(k - 1)];
        ModuleMap d(g, static_cast<std::size_t>(k), static_cast<std::size_t>(k) + 1);
        d.set(0, 0, (k % 2 == 0 ? Nx : I).bits());
        d.set(0, 1, (one + t * L.pow(static_cast<std::uint64_t>(i))).bits());
        if (k % 2 == 1 && i % 2 == 1) d.set(0, 2, one.bits());
        for (std::size_t r = 0; r < below.dst_rank(); ++r)
            for (std::size_t c = 0; c < below.src_rank(); ++c) d.set(r + 1, c + 1, below.raw(r, c));
        res->diffs[static_cast<std::size_t>(k)] = std::move(d);
    }
    return res;
}

namespace detail {

inline F2Matrix augmentation_row(std::size_t order) {
    F2Matrix e(1, order);
    for (std::size_t k = 0; k < order; ++k) e.set(0, k, true);
    return e;
}

}  // namespace detail

// Minimal resolution: each ∂_{i+1} maps onto the kernel of ∂_i through a basis of K/IK,
// I the augmentation ideal; choices follow pivot order and are deterministic.
inline ResolutionPtr minimal_resolution(const GroupPtr& g, int window) {
    detail::check_window(window);
    require_algebra_group(*g);
    const std::size_t n = g->order();
    auto res = std::make_shared<Resolution>();
    res->group = g;
    res->builder = "minimal";
    res->ranks.push_back(1);
    res->diffs.resize(1);
    F2Matrix current = detail::augmentation_row(n);
    for (int i = 1; i <= window; ++i) {
        const std::size_t r_prev = res->ranks.back();
        const F2Matrix kernel = kernel_basis(current);  // rows are vectors of P_{i-1}
        std::vector<BitVector> ik;
        for (std::size_t k = 0; k < kernel.rows(); ++k) {
            const auto v = unflatten_vector(kernel.row(k), n);
            for (const auto& gen : g->generators()) {
                std::vector<std::uint64_t> w(v.size());
                for (std::size_t m = 0; m < v.size(); ++m) w[m] = v[m] ^ g->left_translate(gen.element, v[m]);
                ik.push_back(flatten_vector(w, n));
            }
        }
        IncrementalBasis span(r_prev * n);
        for (const auto& v : ik) span.insert(v);
        std::vector<BitVector> chosen;
        for (std::size_t k = 0; k < kernel.rows(); ++k)
            if (span.insert(kernel.row(k))) chosen.push_back(kernel.row(k));
        ModuleMap d(g, r_prev, chosen.size());
        for (std::size_t s = 0; s < chosen.size(); ++s) d.set_column(s, unflatten_vector(chosen[s], n));
        res->ranks.push_back(chosen.size());
        current = mm_to_f2(d);
        res->diffs.push_back(std::move(d));
    }
    return res;
}

struct ResolutionReport {
    bool ok = true;
    std::string message;
    std::optional<int> failing_index;  // i with ∂_i∘∂_{i+1} != 0 or inexact at P_i
    std::vector<std::size_t> flat_ranks;  // rank of flattened ∂_i, index i
};

// Checks ε∘∂_1 = 0, ∂_i∘∂_{i+1} = 0, and exactness at every P_i strictly inside the window.
inline ResolutionReport verify_resolution(const Resolution& r) {
    ResolutionReport rep;
    const std::size_t n = r.group->order();
    const int w = r.window();
    if (r.ranks.empty() || r.ranks[0] != 1) {
        rep.ok = false;
        rep.message = "P_0 must have rank 1";
        rep.failing_index = 0;
        return rep;
    }
    if (static_cast<int>(r.diffs.size()) != w + 1) {
        rep.ok = false;
        rep.message = "differential count does not match ranks";
        return rep;
    }
    for (int i = 1; i <= w; ++i) {
        const auto& d = r.diffs[static_cast<std::size_t>(i)];
        if (d.dst_rank() != r.ranks[static_cast<std::size_t>(i - 1)] || d.src_rank() != r.ranks[static_cast<std::size_t>(i)]) {
            rep.ok = false;
            rep.message = "∂_" + std::to_string(i) + " has the wrong shape";
            rep.failing_index = i;
            return rep;
        }
    }
    rep.flat_ranks.assign(static_cast<std::size_t>(w) + 1, 0);
    for (int i = 1; i <= w; ++i) rep.flat_ranks[static_cast<std::size_t>(i)] = f2coh::rank(mm_to_f2(r.diffs[static_cast<std::size_t>(i)]));
    if (w >= 1) {
        if (!r.diffs[1].augmentation().is_zero()) {
            rep.ok = false;
            rep.message = "ε∘∂_1 != 0";
            rep.failing_index = 0;
            return rep;
        }
        if (rep.flat_ranks[1] != n - 1) {
            rep.ok = false;
            rep.message = "not exact at P_0: rank ∂_1 = " + std::to_string(rep.flat_ranks[1]) + ", expected " + std::to_string(n - 1);
            rep.failing_index = 0;
            return rep;
        }
    }
    for (int i = 1; i < w; ++i) {
        if (!mm_compose(r.diffs[static_cast<std::size_t>(i)], r.diffs[static_cast<std::size_t>(i + 1)]).is_zero()) {
            rep.ok = false;
            rep.message = "∂_" + std::to_string(i) + "∘∂_" + std::to_string(i + 1) + " != 0";
            rep.failing_index = i;
            return rep;
        }
        const std::size_t nullity = r.ranks[static_cast<std::size_t>(i)] * n - rep.flat_ranks[static_cast<std::size_t>(i)];
        if (rep.flat_ranks[static_cast<std::size_t>(i + 1)] != nullity) {
            rep.ok = false;
            rep.message = "not exact at P_" + std::to_string(i) + ": rank ∂_" + std::to_string(i + 1) + " = " +
                          std::to_string(rep.flat_ranks[static_cast<std::size_t>(i + 1)]) + ", nullity ∂_" + std::to_string(i) +
                          " = " + std::to_string(nullity);
            rep.failing_index = i;
            return rep;
        }
    }
    rep.message = "exact through degree " + std::to_string(w);
    return rep;
}

inline bool is_minimal(const Resolution& r) {
    for (int i = 1; i <= r.window(); ++i)
        if (!r.diffs[static_cast<std::size_t>(i)].augmentation().is_zero()) return false;
    return true;
}

inline ResolutionPtr build_resolution(const GroupPtr& g, const std::string& builder, int window) {
    if (builder == "quaternion") return quaternion_resolution(g, window);
    if (builder == "semidihedral") return semidihedral_resolution(g, window);
    if (builder == "minimal") return minimal_resolution(g, window);
    throw std::invalid_argument("unknown resolution builder " + builder);
}

// Explicit resolution where one exists, minimal otherwise.
inline std::string default_builder(const Group& g) {
    if (g.family() && g.family()->family == Family::Quaternion) return "quaternion";
    if (g.family() && g.family()->family == Family::Semidihedral) return "semidihedral";
    return "minimal";
}

}  // namespace f2coh
