#pragma once

#include <map>
#include <string>
#include <vector>

#include "f2coh/group_algebra.hpp"
#include "f2coh/named_basis.hpp"
#include "f2coh/report.hpp"
#include "f2coh/resolution.hpp"
#include "f2coh/yoneda.hpp"

namespace f2coh {

// Identities among I = 1+x, J = 1+z, K = 1+xz, L, N_x, N in F2[Q_{2^n}].
inline ReportItems verify_quaternion_algebra(int n) {
    const auto g = make_group(Family::Quaternion, n);
    const auto I = special_element(g, "I"), J = special_element(g, "J"), K = special_element(g, "K");
    const auto L = special_element(g, "L"), Nx = special_element(g, "N_x"), N = special_element(g, "N");
    const auto zero = AlgebraElement::zero(g);
    const std::uint64_t q = std::uint64_t{1} << (n - 2), h = std::uint64_t{1} << (n - 1);
    const std::string tag = " Q" + std::to_string(1u << n);
    ReportItems items;
    items.push_back(make_item("QIJKLN L" + tag, "L = I^(2^(n-2)-1)", L == I.pow(q - 1)));
    items.push_back(make_item("QIJKLN Nx" + tag, "N_x = I^(2^(n-1)-1)", Nx == I.pow(h - 1)));
    items.push_back(make_item("QIJKLN squares" + tag, "I^(2^(n-2)) = J^2 = K^2", I.pow(q) == J * J && J * J == K * K));
    items.push_back(make_item("QIJKLN nilpotent" + tag, "I^(2^(n-1)) = J^4 = K^4 = 0",
                              I.pow(h) == zero && J.pow(4) == zero && K.pow(4) == zero));
    items.push_back(make_item("QIJKLN KI" + tag, "KI = IJ", K * I == I * J));
    items.push_back(make_item("QIJKLN K" + tag, "K = I + J + IJ", K == I + J + I * J));
    items.push_back(make_item("QIJKLN N" + tag, "N = J N_x = N_x J = K N_x = N_x K",
                              N == J * Nx && N == Nx * J && N == K * Nx && N == Nx * K));
    return items;
}

// Identities among I = 1+x, J = 1+t, L, N_x in F2[SD_{2^n}].
inline ReportItems verify_semidihedral_algebra(int n) {
    const auto g = make_group(Family::Semidihedral, n);
    const auto I = special_element(g, "I"), J = special_element(g, "J");
    const auto L = special_element(g, "L"), Nx = special_element(g, "N_x");
    const auto one = AlgebraElement::one(g), zero = AlgebraElement::zero(g);
    const auto x = AlgebraElement::of(g, g->generator("x")), t = AlgebraElement::of(g, g->generator("t"));
    const std::uint64_t q = std::uint64_t{1} << (n - 2), h = std::uint64_t{1} << (n - 1);
    const std::string tag = " SD" + std::to_string(1u << n);
    ReportItems items;
    items.push_back(make_item("SDIJKLN (a) L" + tag, "L = I^(2^(n-2)-1) + x^(2^(n-2)-1)", L == I.pow(q - 1) + x.pow(q - 1)));
    items.push_back(make_item("SDIJKLN (a) nilpotent" + tag, "I^(2^(n-1)) = J^2 = 0", I.pow(h) == zero && J * J == zero));
    items.push_back(make_item("SDIJKLN (b) IJ" + tag, "(1+tL) I = I J", (one + t * L) * I == I * J));
    bool shift = true;
    for (std::uint64_t i = 1; i <= 2 * h; ++i)
        shift = shift && (one + t * L.pow(i)) * I == I * (one + t * L.pow(i - 1));
    items.push_back(make_item("SDIJKLN (b) shift" + tag, "(1+tL^i) I = I (1+tL^(i-1)) for 1 <= i <= 2^n", shift));
    items.push_back(make_item("SDIJKLN (c) Nx" + tag, "t N_x = N_x t", t * Nx == Nx * t));
    const auto evens = I.pow(h - 2);
    items.push_back(make_item("SDIJKLN (c) evens" + tag, "t I^(2^(n-1)-2) = I^(2^(n-1)-2) t", t * evens == evens * t));
    const auto short_evens = I.pow(q - 2);
    const bool commutes = short_evens * t == t * short_evens;
    items.push_back(make_item("SDIJKLN (d)" + tag, "I^(2^(n-2)-2) t = t I^(2^(n-2)-2)", commutes,
                              commutes ? "" : "t conjugates x^2 to x^(2^(n-1)-2); I^(2^(n-2)-2) is not fixed"));
    bool squares = true;
    for (std::uint64_t i = 0; i < h; ++i) {
        const auto even = one + t * L.pow(2 * i), odd = one + t * L.pow(2 * i + 1);
        squares = squares && even * even == zero && odd * odd == Nx;
    }
    items.push_back(make_item("SDIJKLN (e) squares" + tag, "(1+tL^(2i))^2 = 0, (1+tL^(2i+1))^2 = N_x for 0 <= i < 2^(n-1)", squares));
    items.push_back(make_item("SDIJKLN (e) L" + tag, "L^(2^(n-1)) = 1", L.pow(h) == one));
    return items;
}

namespace detail {

inline ModuleMap module_map(const GroupPtr& g, const std::vector<std::vector<AlgebraElement>>& rows) {
    return ModuleMap::from_elements(g, rows);
}

// (0 | Id_{k}) : rank k+1 -> rank k.
inline ModuleMap shift_identity(const GroupPtr& g, std::size_t k) {
    ModuleMap m(g, k, k + 1);
    for (std::size_t i = 0; i < k; ++i) m.set(i, i + 1, 1);
    return m;
}

// Block matrix [[top row], [0 | inner]].
inline ModuleMap stack_below(const GroupPtr& g, const std::vector<AlgebraElement>& top, const ModuleMap& inner) {
    ModuleMap m(g, inner.dst_rank() + 1, inner.src_rank() + 1);
    for (std::size_t s = 0; s < top.size(); ++s) m.set(0, s, top[s].bits());
    for (std::size_t d = 0; d < inner.dst_rank(); ++d)
        for (std::size_t s = 0; s < inner.src_rank(); ++s) m.set(d + 1, s + 1, inner.raw(d, s));
    return m;
}

}  // namespace detail

// Degree-one representatives for the periodic quaternion resolution, levels 0..levels-1.
inline std::map<std::string, Cochain> printed_quaternion_representatives(const ComplexPtr& cx, std::size_t levels) {
    const GroupPtr& g = cx->group();
    if (cx->resolution().builder != "quaternion") throw std::invalid_argument("printed representatives need the quaternion resolution");
    const int n = g->family()->n;
    const auto I = special_element(g, "I"), J = special_element(g, "J"), Nx = special_element(g, "N_x");
    const auto one = AlgebraElement::one(g), zero = AlgebraElement::zero(g);
    const std::uint64_t q = std::uint64_t{1} << (n - 2), h = std::uint64_t{1} << (n - 1);
    levels = std::min(levels, cx->full_levels(1));
    const std::vector<ModuleMap> xs{
        detail::module_map(g, {{one, zero}}),
        detail::module_map(g, {{I.pow(q - 2), one}, {zero, one + I}}),  // I^0 = 1 covers Q8
        detail::module_map(g, {{one}, {one}}),
        detail::module_map(g, {{I.pow(h - 2) * J}}),
    };
    const std::vector<ModuleMap> ys{
        detail::module_map(g, {{zero, one}}),
        detail::module_map(g, {{zero, one}, {one, zero}}),
        detail::module_map(g, {{zero}, {one}}),
        detail::module_map(g, {{Nx}}),
    };
    std::vector<ModuleMap> xc, yc, vc;
    for (std::size_t i = 0; i < levels; ++i) {
        xc.push_back(xs[i % 4]);
        yc.push_back(ys[i % 4]);
    }
    const std::size_t vlevels = std::min(levels, cx->full_levels(4));
    for (std::size_t i = 0; i < vlevels; ++i) vc.push_back(ModuleMap::identity(g, cx->rank(static_cast<int>(i))));
    std::map<std::string, Cochain> out;
    out.emplace("X", Cochain(cx, 1, std::move(xc)));
    out.emplace("Y", Cochain(cx, 1, std::move(yc)));
    if (vlevels > 0) out.emplace("V", Cochain(cx, 4, std::move(vc)));
    return out;
}

// X on levels 0..3 and Y on the whole window, for the semidihedral resolution.
inline std::map<std::string, Cochain> printed_semidihedral_representatives(const ComplexPtr& cx) {
    const GroupPtr& g = cx->group();
    if (cx->resolution().builder != "semidihedral") throw std::invalid_argument("printed representatives need the semidihedral resolution");
    const int n = g->family()->n;
    const auto I = special_element(g, "I"), L = special_element(g, "L");
    const auto t = AlgebraElement::of(g, g->generator("t"));
    const auto one = AlgebraElement::one(g), zero = AlgebraElement::zero(g);
    const std::uint64_t q = std::uint64_t{1} << (n - 2), h = std::uint64_t{1} << (n - 1);
    const auto ev = I.pow(h - 2), tl = t * (L + I.pow(q - 2));
    std::vector<ModuleMap> xc;
    xc.push_back(detail::module_map(g, {{one, zero}}));
    xc.push_back(detail::stack_below(g, {ev, tl, zero}, xc[0]));
    xc.push_back(detail::stack_below(g, {one, tl, one, zero}, xc[1]));
    xc.push_back(detail::stack_below(g, {ev, zero, zero, zero, zero}, xc[2]));
    xc.resize(std::min<std::size_t>(4, cx->full_levels(1)), ModuleMap());
    std::vector<ModuleMap> yc;
    for (std::size_t i = 0; i < cx->full_levels(1); ++i) yc.push_back(detail::shift_identity(g, i + 1));
    std::map<std::string, Cochain> out;
    out.emplace("X", Cochain(cx, 1, std::move(xc)));
    out.emplace("Y", Cochain(cx, 1, std::move(yc)));
    return out;
}

namespace detail {

inline BitVector unit_functional(std::size_t size, std::size_t k) {
    BitVector f(size);
    f.set(k, true);
    return f;
}

}  // namespace detail

// Printed cochain representatives and functional liftings of the explicit resolutions.
inline ReportItems verify_printed_representatives(const NamedCohomology& nc) {
    const ComplexPtr& cx = nc.complex();
    const auto& spec = nc.spec();
    const std::string tag = " " + to_string(spec);
    ReportItems items;
    auto class_item = [&](const std::string& name, const Cochain& c, const std::string& want) {
        const bool cocycle = is_cocycle(c);
        std::string detail = std::to_string(c.levels()) + " levels";
        bool ok = cocycle;
        if (cocycle) {
            const auto lifted = lift_functional(cx, c.degree(), c.functional());
            const CohClass k = class_of(c);
            ok = lifted.has_value() && class_of(*lifted) == k && k == nc.evaluate(want);
            detail += ", class " + nc.name(k);
        } else {
            detail += ", not a cocycle";
        }
        items.push_back(make_item("printed " + name + tag, "printed cochain is a cocycle in the class " + want, ok, detail));
    };
    if (spec.family == Family::Quaternion) {
        const auto reps = printed_quaternion_representatives(cx, cx->full_levels(1));
        for (const auto& [name, c] : reps) class_item(name, c, name);
        return items;
    }
    if (spec.family != Family::Semidihedral) throw std::invalid_argument("verify_printed_representatives: quaternion or semidihedral groups only");

    const auto reps = printed_semidihedral_representatives(cx);
    for (const auto& [name, c] : reps) class_item(name, c, name);

    struct Probe { int degree; std::size_t slot; const char* expect; };
    // expect: a class expression, "none" (does not lift) or "0" (a coboundary).
    const std::vector<Probe> probes{{3, 0, "U"}, {3, 1, "none"}, {3, 2, "0"}, {3, 3, "Y3"},
                                    {4, 0, "V"}, {4, 1, "YU"}, {4, 2, "none"}, {4, 3, "0"}, {4, 4, "Y4"}};
    for (const auto& p : probes) {
        if (p.degree > cx->max_cohomology_degree()) continue;
        const BitVector f = detail::unit_functional(cx->rank(p.degree), p.slot);
        const auto lifted = lift_functional(cx, p.degree, f);
        const std::string label = "functional " + f.to_string() + " on P" + std::to_string(p.degree) + tag;
        const std::string want = p.expect;
        if (want == "none") {
            items.push_back(make_item(label, "functional does not lift", !lifted, lifted ? "lifts" : "no lift"));
            continue;
        }
        if (!lifted) {
            items.push_back(make_item(label, "functional lifts to " + want, false, "no lift"));
            continue;
        }
        const CohClass k = class_of(*lifted);
        const bool ok = want == "0" ? k.is_zero() : k == nc.evaluate(want);
        items.push_back(make_item(label, want == "0" ? "functional is a coboundary" : "functional lifts to " + want, ok, "class " + nc.name(k)));
    }
    return items;
}

}  // namespace f2coh
