#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2coh/bar_comparison.hpp"
#include "f2coh/central_extension.hpp"
#include "f2coh/maxclass.hpp"
#include "f2coh/yoneda.hpp"

namespace f2coh {

// Homomorphism G -> Ubar(F2, m+1), given by lifts in U(F2, m+1) of the generator images.
struct UTHom {
    GroupPtr group;
    std::vector<F2Matrix> images;  // one per named generator of the group
    std::string origin;            // "witness-y", "exhaustive", ...

    std::size_t size() const { return images.front().rows(); }
    std::size_t length() const { return size() - 1; }
};

// Near-diagonal components phi_{i,i+1}, as value tables over the group elements.
// Over F2 the signs -X_i in the correspondence with defining systems are immaterial.
inline std::vector<std::vector<std::uint8_t>> near_diagonal(const UTHom& phi) {
    std::vector<std::vector<std::uint8_t>> out;
    for (std::size_t i = 0; i + 1 < phi.size(); ++i) {
        std::vector<std::uint8_t> gen_values;
        for (const auto& m : phi.images) gen_values.push_back(m.get(i, i + 1));
        out.push_back(hom_from_generator_values(*phi.group, gen_values));
    }
    return out;
}

namespace detail {

// Unitriangular matrices of size <= 8 packed one byte per row.
using SmallUT = std::uint64_t;

inline SmallUT small_mul(SmallUT a, SmallUT b, std::size_t s) {
    SmallUT r = 0;
    for (std::size_t i = 0; i < s; ++i) {
        const unsigned row = static_cast<unsigned>((a >> (8 * i)) & 0xffu);
        std::uint64_t acc = 0;
        for (unsigned bits = row; bits; bits &= bits - 1) acc ^= (b >> (8 * std::countr_zero(bits))) & 0xffu;
        r |= acc << (8 * i);
    }
    return r;
}

inline SmallUT small_identity(std::size_t s) {
    SmallUT r = 0;
    for (std::size_t i = 0; i < s; ++i) r |= SmallUT{1} << (8 * i + i);
    return r;
}

inline F2Matrix small_to_matrix(SmallUT a, std::size_t s) {
    F2Matrix m(s, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if ((a >> (8 * i + j)) & 1u) m.set(i, j, true);
    return m;
}

// Is generator j -> img[j] a homomorphism into Ubar? Breadth-first over the Cayley graph.
inline bool small_is_hom(const Group& g, const std::vector<SmallUT>& img, SmallUT corner_mask, std::vector<SmallUT>& scratch,
                         std::vector<std::uint8_t>& seen, std::vector<Element>& queue, std::size_t s) {
    std::fill(seen.begin(), seen.end(), 0);
    queue.clear();
    queue.push_back(0);
    seen[0] = 1;
    scratch[0] = small_identity(s);
    const auto& gens = g.generators();
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const Element a = queue[q];
        for (std::size_t j = 0; j < gens.size(); ++j) {
            const Element b = g.mul(a, gens[j].element);
            const SmallUT v = small_mul(scratch[a], img[j], s);
            if (!seen[b]) {
                seen[b] = 1;
                scratch[b] = v;
                queue.push_back(b);
            } else if (((scratch[b] ^ v) & ~corner_mask) != 0) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace detail

enum class HomSearchMode { Witness, Exhaustive };

struct ExhaustiveLimits {
    std::size_t max_group_order = 16;
    std::size_t max_free_bits = 24;
};

// Value tables of degree-one classes.
inline std::vector<std::vector<std::uint8_t>> hom_tables(const std::vector<CohClass>& classes) {
    std::vector<std::vector<std::uint8_t>> out;
    for (const auto& c : classes) out.push_back(hom_from_class(c));
    return out;
}

// Every homomorphism G -> Ubar(F2, n+1) with near-diagonal X_1..X_n. Unknown entries above the
// superdiagonal (corner excluded) of each generator image are enumerated.
inline std::vector<UTHom> exhaustive_homs(const GroupPtr& g, const std::vector<std::vector<std::uint8_t>>& tables,
                                          const ExhaustiveLimits& lim = {}) {
    const std::size_t n = tables.size();
    if (n < 1) throw std::invalid_argument("exhaustive_homs: at least one class required");
    const std::size_t s = n + 1;
    if (s > 8) throw std::invalid_argument("exhaustive_homs: matrices larger than 8x8 are not supported");
    if (g->order() > lim.max_group_order) throw std::invalid_argument("exhaustive_homs: group order above the exhaustive bound");
    const auto& gens = g->generators();
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 2; j < s; ++j)
            if (!(i == 0 && j == s - 1)) free.emplace_back(i, j);
    const std::size_t bits = free.size() * gens.size();
    if (bits > lim.max_free_bits) throw std::invalid_argument("exhaustive_homs: " + std::to_string(bits) + " free bits exceed the budget");

    std::vector<detail::SmallUT> base(gens.size(), detail::small_identity(s));
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (tables[i][gens[k].element] & 1u) base[k] |= detail::SmallUT{1} << (8 * i + i + 1);
    const detail::SmallUT corner = detail::SmallUT{1} << (s - 1);

    std::vector<UTHom> out;
    std::vector<detail::SmallUT> img(gens.size()), scratch(g->order());
    std::vector<std::uint8_t> seen(g->order());
    std::vector<Element> queue;
    queue.reserve(g->order());
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
            img[k] = base[k];
            for (std::size_t f = 0; f < free.size(); ++f)
                if ((code >> (k * free.size() + f)) & 1u) img[k] |= detail::SmallUT{1} << (8 * free[f].first + free[f].second);
        }
        if (!detail::small_is_hom(*g, img, corner, scratch, seen, queue, s)) continue;
        UTHom phi{g, {}, "exhaustive"};
        for (auto m : img) phi.images.push_back(detail::small_to_matrix(m, s));
        out.push_back(std::move(phi));
    }
    return out;
}

// The alternating tables X, X+Y, X, ... of length m for a group whose first two generators
// are x and the second generator s, with X dual to x and Y dual to s.
inline std::vector<std::vector<std::uint8_t>> alternating_tables(const Group& g, std::size_t m) {
    if (g.generators().size() != 2) throw std::invalid_argument("alternating_tables: two generators required");
    const auto X = hom_from_generator_values(g, {1, 0});
    const auto XY = hom_from_generator_values(g, {1, 1});
    std::vector<std::vector<std::uint8_t>> out;
    for (std::size_t i = 0; i < m; ++i) out.push_back(i % 2 == 0 ? X : XY);
    return out;
}

// Homomorphisms D_{2^n} -> Ubar(F2, 2^(n-1)+1) from the matrices x_{n-1} and y/z/t_{n-1}.
// Their pullbacks are the dihedral, quaternion and semidihedral groups of order 2^(n+1).
inline std::vector<UTHom> witness_homs(const GroupPtr& g, const std::vector<std::vector<std::uint8_t>>& tables) {
    const auto tag = classify_maxclass(*g);
    if (g->label().rfind("D", 0) != 0 || (tag.kind != MaxClassTag::Kind::Dihedral && tag.kind != MaxClassTag::Kind::ElementaryAbelian))
        throw std::invalid_argument("witness_homs: witnesses exist for dihedral groups only");
    const int n = std::countr_zero(g->order());
    if (n < 2 || n > 7) throw std::invalid_argument("witness_homs: dihedral order out of range");
    const std::size_t m = std::size_t{1} << (n - 1);
    if (tables != alternating_tables(*g, m))
        throw std::invalid_argument("witness_homs: classes must be X, X+Y, ... of length " + std::to_string(m));
    const auto a = build_appendix_a(n - 1);
    std::vector<UTHom> out;
    out.push_back({g, {a.x, a.y}, "witness-y"});
    if (a.z) out.push_back({g, {a.x, *a.z}, "witness-z"});
    if (a.t) out.push_back({g, {a.x, *a.t}, "witness-t"});
    return out;
}

inline std::vector<UTHom> hom_with_near_diagonal(const std::vector<CohClass>& classes, HomSearchMode mode,
                                                 const ExhaustiveLimits& lim = {}) {
    if (classes.empty()) throw std::invalid_argument("hom_with_near_diagonal: no classes");
    for (const auto& c : classes)
        if (c.degree() != 1) throw std::invalid_argument("hom_with_near_diagonal: classes must have degree 1");
    const GroupPtr& g = classes.front().complex()->group();
    const auto tables = hom_tables(classes);
    return mode == HomSearchMode::Witness ? witness_homs(g, tables) : exhaustive_homs(g, tables, lim);
}

inline CentralExtension pullback_extension(const UTHom& phi) { return central_pullback(*phi.group, phi.images); }

// Characteristic class of the pulled back extension: the degree-one Massey value of phi.
inline CohClass massey1_value(const ComplexPtr& cx, const UTHom& phi) {
    if (cx->group().get() != phi.group.get()) throw std::invalid_argument("massey1_value: resolution over a different group");
    return transport_extension_class(cx, pullback_extension(phi));
}

inline std::vector<CohClass> massey1_value_set(const ComplexPtr& cx, const std::vector<UTHom>& homs) {
    std::set<CohClass> values;
    for (const auto& phi : homs) values.insert(massey1_value(cx, phi));
    return {values.begin(), values.end()};
}

// A run X_i..X_{i+L-1} inside a defined m-fold product (L < m) gives a homomorphism into
// U(F2, L+1). If every X in the run is 1 on g, the image of g has a full superdiagonal and
// therefore order 2^ceil(log2(L+1)); exceeding ord(g) rules the product out.
struct OrderObstruction {
    std::size_t start = 0;   // 0-based index of the run
    std::size_t length = 0;
    Element element = 0;
    std::uint64_t element_order = 0;
    std::uint64_t forced_order = 0;
};

inline std::optional<OrderObstruction> order_obstruction(const Group& g, const std::vector<std::vector<std::uint8_t>>& tables) {
    const std::size_t m = tables.size();
    std::optional<OrderObstruction> best;
    for (Element e = 1; e < g.order(); ++e) {
        const std::uint64_t oe = element_order(g, e);
        std::size_t run = 0;
        for (std::size_t i = 0; i < m; ++i) {
            run = (tables[i][e] & 1u) ? run + 1 : 0;
            const std::size_t len = std::min(run, m - 1);
            if (len == 0) continue;
            const std::uint64_t forced = std::bit_ceil(static_cast<std::uint64_t>(len + 1));
            if (forced > oe && (!best || len < best->length))
                best = OrderObstruction{i + 1 - len, len, e, oe, forced};
        }
    }
    return best;
}

}  // namespace f2coh
