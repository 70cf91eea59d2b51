#pragma once

#include <stdexcept>
#include <vector>

#include "f2coh/central_extension.hpp"
#include "f2coh/group.hpp"
#include "f2coh/yoneda.hpp"

namespace f2coh {

// Low-degree comparison with the normalised bar resolution B. With the contracting homotopy
// s(g0[g1|..]) = [g0|g1|..] the chain map κ : P -> B is κ_k(e) = s κ_{k-1}(∂e), so
//   κ_1(e_m) = Σ_{h in supp ∂_1[0][m], h != 1} [h]
//   κ_2(e_j) = Σ_m Σ_{g in supp ∂_2[m][j], g != 1} Σ_{h in supp ∂_1[0][m], h != 1} [g|h].

// Functional on P_1 of the homomorphism chi : G -> F2 (values indexed by element).
inline BitVector functional_from_hom(const YonedaComplex& cx, const std::vector<std::uint8_t>& chi) {
    if (chi.size() != cx.group()->order()) throw std::invalid_argument("functional_from_hom: wrong number of values");
    const ModuleMap& d1 = cx.resolution().differential(1);
    BitVector f(d1.src_rank());
    for (std::size_t m = 0; m < d1.src_rank(); ++m) {
        std::uint64_t supp = d1.raw(0, m);
        bool v = false;
        while (supp) {
            const Element h = static_cast<Element>(std::countr_zero(supp));
            supp &= supp - 1;
            if (chi[h] & 1) v = !v;
        }
        f.set(m, v);
    }
    return f;
}

inline CohClass class_from_hom(const ComplexPtr& cx, const std::vector<std::uint8_t>& chi) {
    auto c = CohClass::from_functional(cx, 1, functional_from_hom(*cx, chi));
    if (!c) throw std::invalid_argument("class_from_hom: values do not define a homomorphism");
    return std::move(*c);
}

// The homomorphism G -> F2 of a degree-one class: chi(g) = f(u_g) where ∂_1 u_g = 1 + g.
inline std::vector<std::uint8_t> hom_from_class(const CohClass& c) {
    if (c.degree() != 1) throw std::invalid_argument("hom_from_class: class must have degree 1");
    const YonedaComplex& cx = *c.complex();
    const Group& g = *cx.group();
    const BitVector f = c.functional();
    std::vector<std::uint8_t> values;
    for (const auto& gen : g.generators()) {
        auto u = cx.solve_boundary(1, {1u | (std::uint64_t{1} << gen.element)});
        if (!u) throw std::logic_error("hom_from_class: 1 + g is not a boundary");
        bool v = false;
        for (std::size_t m = 0; m < u->size(); ++m)
            if (f.get(m) && algebra_augmentation((*u)[m])) v = !v;
        values.push_back(v);
    }
    return hom_from_generator_values(g, values);
}

// Normalised 2-cocycle of a central extension by Z/2, from the section picking the
// least index in each fibre.
inline std::vector<std::uint8_t> extension_cocycle(const Group& g, const CentralExtension& ext) {
    const Group& e = *ext.extension;
    if (ext.projection.size() != e.order() || e.order() != 2 * g.order())
        throw std::invalid_argument("extension_cocycle: extension must have order 2|G|");
    std::vector<Element> section(g.order(), e.order());
    for (Element a = 0; a < e.order(); ++a) {
        const Element p = ext.projection[a];
        if (p >= g.order()) throw std::invalid_argument("extension_cocycle: projection out of range");
        if (section[p] == e.order()) section[p] = a;
    }
    if (section[0] != 0) throw std::invalid_argument("extension_cocycle: identity must project to the identity");
    for (Element a = 0; a < e.order(); ++a)
        if (e.mul(a, ext.central) != e.mul(ext.central, a)) throw std::invalid_argument("extension_cocycle: kernel is not central");
    for (Element a = 0; a < e.order(); ++a)
        for (Element b = 0; b < e.order(); ++b)
            if (ext.projection[e.mul(a, b)] != g.mul(ext.projection[a], ext.projection[b]))
                throw std::invalid_argument("extension_cocycle: projection is not a homomorphism");
    const std::size_t n = g.order();
    std::vector<std::uint8_t> f(n * n, 0);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element prod = e.mul(section[a], section[b]);
            const Element target = section[g.mul(a, b)];
            if (prod == target) continue;
            if (prod != e.mul(target, ext.central)) throw std::invalid_argument("extension_cocycle: kernel has order greater than 2");
            f[a * n + b] = 1;
        }
    return f;
}

// Transport of a normalised bar 2-cocycle (indexed a*|G|+b) to a functional on P_2.
inline BitVector functional_from_bar_cocycle(const YonedaComplex& cx, const std::vector<std::uint8_t>& f) {
    const std::size_t n = cx.group()->order();
    const ModuleMap& d1 = cx.resolution().differential(1);
    const ModuleMap& d2 = cx.resolution().differential(2);
    BitVector out(d2.src_rank());
    for (std::size_t j = 0; j < d2.src_rank(); ++j) {
        bool v = false;
        for (std::size_t m = 0; m < d2.dst_rank(); ++m) {
            const std::uint64_t gs = d2.raw(m, j) & ~std::uint64_t{1};
            const std::uint64_t hs = d1.raw(0, m) & ~std::uint64_t{1};
            for (std::uint64_t a = gs; a; a &= a - 1)
                for (std::uint64_t b = hs; b; b &= b - 1)
                    if (f[static_cast<std::size_t>(std::countr_zero(a)) * n + static_cast<std::size_t>(std::countr_zero(b))]) v = !v;
        }
        out.set(j, v);
    }
    return out;
}

// Class in H^2(G) of a central extension 1 -> Z/2 -> E -> G -> 1.
inline CohClass transport_extension_class(const ComplexPtr& cx, const CentralExtension& ext) {
    const auto f = extension_cocycle(*cx->group(), ext);
    auto c = CohClass::from_functional(cx, 2, functional_from_bar_cocycle(*cx, f));
    if (!c) throw std::logic_error("transport_extension_class: transported functional is not a cocycle");
    return std::move(*c);
}

// Central extension given by a surjection from a group of twice the order onto G.
inline CentralExtension extension_from_projection(GroupPtr e, std::vector<Element> projection) {
    CentralExtension ext;
    ext.extension = std::move(e);
    ext.projection = std::move(projection);
    Element central = 0;
    for (Element a = 1; a < ext.extension->order(); ++a)
        if (ext.projection[a] == 0) { central = a; break; }
    if (central == 0) throw std::invalid_argument("extension_from_projection: trivial kernel");
    ext.central = central;
    return ext;
}

// Standard surjection of the family member of order 2^(n+1) onto that of order 2^n:
// generators map to generators, the kernel is the central subgroup of order 2.
inline CentralExtension family_extension(const GroupPtr& big, const Group& small) {
    if (big->order() != 2 * small.order()) throw std::invalid_argument("family_extension: orders do not match");
    std::vector<Element> proj(big->order());
    const auto& bg = big->generators();
    const auto& sg = small.generators();
    if (bg.size() != sg.size()) throw std::invalid_argument("family_extension: generator counts differ");
    std::vector<bool> seen(big->order(), false);
    std::vector<Element> queue{0};
    seen[0] = true;
    proj[0] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t j = 0; j < bg.size(); ++j) {
            const Element a = big->mul(queue[i], bg[j].element);
            const Element pa = small.mul(proj[queue[i]], sg[j].element);
            if (!seen[a]) { seen[a] = true; proj[a] = pa; queue.push_back(a); }
            else if (proj[a] != pa) throw std::invalid_argument("family_extension: generator assignment is not a homomorphism");
        }
    return extension_from_projection(big, std::move(proj));
}

}  // namespace f2coh
