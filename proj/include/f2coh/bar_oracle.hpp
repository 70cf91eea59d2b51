#pragma once

#include <stdexcept>
#include <vector>

#include "f2coh/f2matrix.hpp"
#include "f2coh/group.hpp"

namespace f2coh {

namespace detail {

inline std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Transpose of δ^i on normalised inhomogeneous cochains: rows are i-tuples of non-identity
// elements, columns (i+1)-tuples; entry = parity of faces of the column equal to the row.
inline F2Matrix bar_coboundary_transpose(const Group& g, int i) {
    const std::size_t k = g.order() - 1;
    const std::size_t rows = ipow(k, i), cols = ipow(k, i + 1);
    F2Matrix m(rows, cols);
    std::vector<Element> s(static_cast<std::size_t>(i) + 1), face(static_cast<std::size_t>(i));
    auto index_of = [k](const std::vector<Element>& t) {
        std::size_t idx = 0;
        for (Element e : t) idx = idx * k + (e - 1);
        return idx;
    };
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t rem = c;
        for (int j = i; j >= 0; --j) {
            s[static_cast<std::size_t>(j)] = rem % k + 1;
            rem /= k;
        }
        if (i == 0) continue;  // δ^0 = 0 on constants
        for (int f = 0; f <= i + 1; ++f) {
            std::size_t w = 0;
            bool degenerate = false;
            for (int j = 0; j <= i; ++j) {
                if ((f == 0 && j == 0) || (f == i + 1 && j == i)) continue;
                if (f >= 1 && f <= i && j == f - 1) {
                    const Element p = g.mul(s[static_cast<std::size_t>(j)], s[static_cast<std::size_t>(j) + 1]);
                    degenerate = p == 0;
                    face[w++] = p;
                    ++j;
                } else {
                    face[w++] = s[static_cast<std::size_t>(j)];
                }
            }
            if (!degenerate) m.flip(index_of(face), c);
        }
    }
    return m;
}

}  // namespace detail

// dim H^i(G; F2) for i = 0..max_degree from normalised inhomogeneous cochains.
// Supported sizes: |G| <= 8 through degree 4, |G| <= 16 through degree 3, |G| <= 32 through degree 2.
inline std::vector<std::size_t> bar_betti_oracle(const Group& g, int max_degree) {
    const std::size_t n = g.order();
    const bool ok = max_degree >= 0 && ((n <= 8 && max_degree <= 4) || (n <= 16 && max_degree <= 3) || (n <= 32 && max_degree <= 2));
    if (!ok) throw std::invalid_argument("bar_betti_oracle: size bound exceeded (|G| <= 8: degree 4, <= 16: degree 3, <= 32: degree 2)");
    const std::size_t k = n - 1;
    std::vector<std::size_t> delta_rank(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int i = 1; i <= max_degree; ++i) delta_rank[static_cast<std::size_t>(i)] = rank(detail::bar_coboundary_transpose(g, i));
    std::vector<std::size_t> out;
    for (int i = 0; i <= max_degree; ++i) {
        const std::size_t dim = detail::ipow(k, i);
        const std::size_t below = i >= 1 ? delta_rank[static_cast<std::size_t>(i - 1)] : 0;
        out.push_back(dim - delta_rank[static_cast<std::size_t>(i)] - below);
    }
    return out;
}

}  // namespace f2coh
