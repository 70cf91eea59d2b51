#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2coh/central_extension.hpp"
#include "f2coh/f2matrix.hpp"
#include "f2coh/group.hpp"
#include "f2coh/report.hpp"

namespace f2coh {

inline F2Matrix matrix_power(F2Matrix base, std::uint64_t e) {
    F2Matrix r = F2Matrix::identity(base.rows());
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// Multiplicative order of an invertible matrix, 0 if it exceeds the cap.
inline std::uint64_t matrix_order(const F2Matrix& m, std::uint64_t cap = 1u << 20) {
    const F2Matrix id = F2Matrix::identity(m.rows());
    F2Matrix p = m;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (p == id) return k;
        p = p * m;
    }
    return 0;
}

inline F2Matrix superdiagonal_matrix(std::size_t m) {
    F2Matrix b = F2Matrix::identity(m);
    for (std::size_t i = 0; i + 1 < m; ++i) b.set(i, i + 1, true);
    return b;
}

namespace detail {

inline F2Matrix block2(const F2Matrix& a, const F2Matrix& b, const F2Matrix& d) {
    const std::size_t h = a.rows();
    F2Matrix m(2 * h, 2 * h);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            m.set(i, j, a.get(i, j));
            m.set(i, h + j, b.get(i, j));
            m.set(h + i, h + j, d.get(i, j));
        }
    return m;
}

inline F2Matrix bordered(const F2Matrix& inner, const std::vector<std::size_t>& first_row_ones) {
    const std::size_t s = inner.rows() + 1;
    F2Matrix m(s, s);
    m.set(0, 0, true);
    for (std::size_t j : first_row_ones) m.set(0, j, true);
    for (std::size_t i = 0; i < inner.rows(); ++i)
        for (std::size_t j = 0; j < inner.cols(); ++j) m.set(i + 1, j + 1, inner.get(i, j));
    return m;
}

inline F2Matrix delta_matrix(std::size_t size) {
    F2Matrix d(size, size);
    d.set(0, size - 1, true);
    return d;
}

}  // namespace detail

struct AppendixAMatrices {
    int n = 0;
    F2Matrix A, B, C, Delta;      // 2^n x 2^n
    F2Matrix x, y;                // 2^n + 1
    std::optional<F2Matrix> z, t; // n >= 2 only: the first-row entry of z needs a block of size >= 2
};

// A, B, C by their block recursions; B and C are re-checked against the entrywise description.
inline AppendixAMatrices build_appendix_a(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("build_appendix_a: n must lie in 0..6");
    F2Matrix A{{1}}, B{{1}}, C{{1}}, D{{1}};
    std::vector<F2Matrix> As{A}, Cs{C};
    for (int k = 1; k <= n; ++k) {
        const std::size_t h = A.rows();
        const F2Matrix id = F2Matrix::identity(h);
        A = detail::block2(A, A, A);
        B = detail::block2(B, D.transpose(), B);
        C = detail::block2(id, D, id);
        D = detail::delta_matrix(2 * h);
        As.push_back(A);
        Cs.push_back(C);
    }
    const std::size_t s = A.rows();
    if (!(B == superdiagonal_matrix(s))) throw std::logic_error("build_appendix_a: B recursion disagrees with its entries");
    F2Matrix c_closed = F2Matrix::identity(s);
    c_closed.set(0, s - 1, true);
    if (!(C == c_closed)) throw std::logic_error("build_appendix_a: C recursion disagrees with its entries");

    AppendixAMatrices out{n, A, B, C, D, detail::bordered(B, {1}), detail::bordered(A, {}), std::nullopt, std::nullopt};
    if (n >= 2) {
        const F2Matrix& a = As[static_cast<std::size_t>(n - 1)];
        const F2Matrix inner = detail::block2(a, a * Cs[static_cast<std::size_t>(n - 1)], a);
        out.t = detail::bordered(inner, {});
        out.z = detail::bordered(inner, {s - 1});
    }
    return out;
}

inline ReportItems verify_abc_identities(int n) {
    const auto m = build_appendix_a(n);
    const std::size_t s = m.A.rows();
    const F2Matrix id = F2Matrix::identity(s);
    const std::string tag = " n=" + std::to_string(n);
    ReportItems items;
    items.push_back(make_item("ABC(a)" + tag, "A_n^2 = Id", m.A * m.A == id));

    const F2Matrix adt = m.A * m.Delta.transpose() * m.A;
    bool all_ones = true;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) all_ones = all_ones && adt.get(i, j);
    items.push_back(make_item("ABC(b)" + tag, "A_n Delta_n^T A_n has all entries 1", all_ones));

    const F2Matrix aba = m.A * m.B * m.A;
    bool above = true;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) above = above && aba.get(i, j);
    items.push_back(make_item("ABC(c)" + tag, "A_n B_n A_n has all entries above the diagonal 1", above));

    const F2Matrix ab = m.A * m.B;
    items.push_back(make_item("ABC(d)" + tag, "(A_n B_n)^2 = Id", ab * ab == id));

    BitVector e1(s);
    e1.set(0, true);
    items.push_back(make_item("ABC(e)" + tag, "first row of A_n B_n is (1 0 ... 0)", ab.row(0) == e1));

    // Elementary matrices Id + E_ij (i < j) generate the unitriangular group.
    bool central = m.C * m.A == m.A * m.C && m.C * m.B == m.B * m.C;
    for (std::size_t i = 0; i < s && central; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            F2Matrix e = id;
            e.set(i, j, true);
            if (!(m.C * e == e * m.C)) { central = false; break; }
        }
    items.push_back(make_item("ABC(f)" + tag, "C_n is central in the unitriangular group", central));
    return items;
}

inline ReportItems verify_representations(int n) {
    if (n < 1) throw std::invalid_argument("verify_representations: n must be at least 1");
    const auto m = build_appendix_a(n);
    const std::uint64_t half = std::uint64_t{1} << n;  // 2^n
    const std::string tag = " n=" + std::to_string(n);
    ReportItems items;

    const std::uint64_t ox = matrix_order(m.x);
    items.push_back(make_item("rep(a)" + tag, "x_n has order 2^(n+1)", ox == 2 * half, "order " + std::to_string(ox)));
    const F2Matrix xinv = matrix_power(m.x, 2 * half - 1);
    items.push_back(make_item("rep(b)" + tag, "y_n has order 2", matrix_order(m.y) == 2));
    items.push_back(make_item("rep(c)" + tag, "y_n x_n y_n = x_n^-1", m.y * m.x * m.y == xinv));

    // Generated subgroups have order 2^(n+2); the classifier stops at 128.
    auto classify_item = [&](const std::string& label, const F2Matrix& other, const std::string& name, MaxClassTag::Kind want) {
        if (n + 2 > 7) return;
        const auto g = group_from_matrix_generators({m.x, other}, {"x", name}, 512, "<x," + name + ">");
        const auto tagc = classify_maxclass(*g);
        const bool ok = tagc.kind == want && tagc.n == n + 2;
        items.push_back(make_item(label + tag, "<x_n," + name + "_n> is the family member of order 2^(n+2)", ok, to_string(tagc)));
    };
    classify_item("rep(D)", m.y, "y", MaxClassTag::Kind::Dihedral);

    if (m.z) {
        const F2Matrix& z = *m.z;
        const F2Matrix zinv = matrix_power(z, 3);
        items.push_back(make_item("rep(d)" + tag, "z_n^2 = x_n^(2^n), z_n of order 4",
                                  z * z == matrix_power(m.x, half) && matrix_order(z) == 4));
        items.push_back(make_item("rep(e)" + tag, "z_n x_n z_n^-1 = x_n^-1", z * m.x * zinv == xinv));
        classify_item("rep(Q)", z, "z", MaxClassTag::Kind::Quaternion);
    }
    if (m.t) {
        const F2Matrix& t = *m.t;
        items.push_back(make_item("rep(f)" + tag, "t_n has order 2", matrix_order(t) == 2));
        items.push_back(make_item("rep(g)" + tag, "t_n x_n t_n^-1 = x_n^(2^n - 1)", t * m.x * t == matrix_power(m.x, half - 1)));
        classify_item("rep(SD)", t, "t", MaxClassTag::Kind::Semidihedral);
    }
    return items;
}

struct OrderOfB {
    std::uint64_t order = 0;
    bool pattern_ok = false;  // B^(2^l) = Id + superdiagonal at distance 2^l whenever 2^l < order
};

inline OrderOfB order_of_B(std::size_t m) {
    if (m < 1) throw std::invalid_argument("order_of_B: m must be positive");
    const F2Matrix b = superdiagonal_matrix(m);
    OrderOfB out;
    out.order = matrix_order(b);
    out.pattern_ok = true;
    F2Matrix p = b;
    for (std::uint64_t step = 1; step < out.order; step *= 2) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (p.get(i, j) != (j == i || j == i + step)) out.pattern_ok = false;
        p = p * p;
    }
    return out;
}

// Largest order of a 2-element of GL_m(F2), by exhaustion.
inline std::uint64_t min_degree_scan(std::size_t m) {
    if (m < 1 || m > 4) throw std::invalid_argument("min_degree_scan: m must lie in 1..4");
    const std::size_t bits = m * m;
    std::uint64_t best = 1;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        F2Matrix a(m, m);
        for (std::size_t k = 0; k < bits; ++k)
            if ((code >> k) & 1u) a.set(k / m, k % m, true);
        if (rank(a) != m) continue;
        const std::uint64_t o = matrix_order(a, 1024);
        best = std::max<std::uint64_t>(best, o & (~o + 1));
    }
    return best;
}

inline ReportItems verify_appendix_a(int n) {
    ReportItems items = verify_abc_identities(n);
    if (n >= 1) append(items, verify_representations(n));
    return items;
}

}  // namespace f2coh
