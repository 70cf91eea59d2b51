#pragma once

#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "f2coh/f2matrix.hpp"
#include "f2coh/group.hpp"

namespace f2coh {

inline bool is_unitriangular(const F2Matrix& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (m.get(i, j) != (i == j)) return false;
    return true;
}

// Equality in U(F2, m+1) modulo its centre, which is spanned by the top-right corner.
inline bool equal_mod_corner(const F2Matrix& a, const F2Matrix& b) {
    F2Matrix d = a + b;
    d.set(0, d.cols() - 1, false);
    return d.is_zero();
}

inline F2Matrix corner_matrix(std::size_t size) {
    F2Matrix c = F2Matrix::identity(size);
    c.set(0, size - 1, true);
    return c;
}

struct CentralExtension {
    GroupPtr extension;
    std::vector<Element> projection;  // E -> G
    Element central = 0;               // generator of the kernel
};

// Pullback of U(F2, m+1) -> Ubar(F2, m+1) along the homomorphism G -> Ubar given by
// lifted images of G's generators.
inline CentralExtension central_pullback(const Group& g, const std::vector<F2Matrix>& images) {
    if (images.size() != g.generators().size())
        throw std::invalid_argument("central_pullback: one image per generator required");
    const std::size_t size = images.front().rows();
    if (size < 2) throw std::invalid_argument("central_pullback: matrices must have size at least 2");
    for (const auto& m : images)
        if (m.rows() != size || !is_unitriangular(m)) throw std::invalid_argument("central_pullback: images must be unitriangular of equal size");

    struct Key {
        F2Matrix u;
        Element g;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const { return k.u.hash() * 31 + k.g; }
    };
    std::vector<std::pair<F2Matrix, Element>> gens;
    for (std::size_t j = 0; j < images.size(); ++j) gens.emplace_back(images[j], g.generators()[j].element);
    const F2Matrix c = corner_matrix(size);
    gens.emplace_back(c, g.identity());

    const std::size_t expected = 2 * g.order();
    std::vector<Key> elems{{F2Matrix::identity(size), g.identity()}};
    std::unordered_map<Key, std::size_t, KeyHash> index{{elems[0], 0}};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& [u, h] : gens) {
            Key k{elems[i].u * u, g.mul(elems[i].g, h)};
            if (index.count(k)) continue;
            if (elems.size() == expected)
                throw std::invalid_argument("central_pullback: generator images do not define a homomorphism into Ubar");
            index.emplace(k, elems.size());
            elems.push_back(std::move(k));
        }
    if (elems.size() != expected) throw std::logic_error("central_pullback: fibre product has unexpected order");

    const std::size_t n = elems.size();
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a * n + b] = static_cast<std::uint16_t>(index.at(Key{elems[a].u * elems[b].u, g.mul(elems[a].g, elems[b].g)}));
    std::vector<NamedGenerator> named;
    for (std::size_t j = 0; j < images.size(); ++j)
        named.push_back({g.generators()[j].name, index.at(Key{images[j], g.generators()[j].element})});
    const Element central = index.at(Key{c, g.identity()});
    named.push_back({"c", central});
    CentralExtension out;
    out.projection.resize(n);
    std::vector<F2Matrix> mats;
    for (std::size_t a = 0; a < n; ++a) {
        out.projection[a] = elems[a].g;
        mats.push_back(elems[a].u);
    }
    out.central = central;
    out.extension = std::make_shared<Group>("pullback(" + g.label() + ")", n, std::move(table), std::move(named),
                                            std::nullopt, std::move(mats));
    return out;
}

}  // namespace f2coh
