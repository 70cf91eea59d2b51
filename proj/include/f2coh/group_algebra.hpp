#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2coh/f2matrix.hpp"
#include "f2coh/group.hpp"

namespace f2coh {

// Elements of F2[G] for |G| <= 64 are subsets of G packed into one word.
inline std::uint64_t algebra_mul(const Group& g, std::uint64_t a, std::uint64_t b) {
    std::uint64_t c = 0;
    while (a && b) {
        const Element e = static_cast<Element>(std::countr_zero(a));
        a &= a - 1;
        c ^= g.left_translate(e, b);
    }
    return c;
}

inline bool algebra_augmentation(std::uint64_t a) { return std::popcount(a) & 1; }

inline void require_algebra_group(const Group& g) {
    if (!g.has_translations()) throw std::invalid_argument("group algebra requires |G| <= 64, got " + std::to_string(g.order()));
}

class AlgebraElement {
public:
    AlgebraElement(GroupPtr g, std::uint64_t bits) : group_(std::move(g)), bits_(bits) { require_algebra_group(*group_); }

    static AlgebraElement zero(GroupPtr g) { return {std::move(g), 0}; }
    static AlgebraElement one(GroupPtr g) { return {std::move(g), 1}; }
    static AlgebraElement of(GroupPtr g, Element e) { return {std::move(g), std::uint64_t{1} << e}; }
    static AlgebraElement generator(GroupPtr g, std::string_view name) {
        const Element e = g->generator(name);
        return of(std::move(g), e);
    }

    const GroupPtr& group() const { return group_; }
    std::uint64_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }
    bool augmentation() const { return algebra_augmentation(bits_); }
    bool contains(Element e) const { return (bits_ >> e) & 1u; }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        check(o);
        bits_ ^= o.bits_;
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        a.check(b);
        return {a.group_, algebra_mul(*a.group_, a.bits_, b.bits_)};
    }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.group_.get() == b.group_.get() && a.bits_ == b.bits_;
    }

    AlgebraElement pow(std::uint64_t k) const {
        AlgebraElement r = one(group_);
        for (std::uint64_t i = 0; i < k; ++i) r = r * *this;
        return r;
    }

private:
    void check(const AlgebraElement& o) const {
        if (group_.get() != o.group_.get()) throw std::invalid_argument("AlgebraElement: different groups");
    }
    GroupPtr group_;
    std::uint64_t bits_;
};

// Named elements of F2[G] for quaternion and semidihedral groups:
// I = 1+x, J = 1+(second generator), K = 1+xz, L, N_x = sum of powers of x, N = sum of G.
inline AlgebraElement special_element(const GroupPtr& g, std::string_view name) {
    require_algebra_group(*g);
    if (!g->family() || (g->family()->family != Family::Quaternion && g->family()->family != Family::Semidihedral))
        throw std::invalid_argument("special_element: group must be quaternion or semidihedral");
    const bool quaternion = g->family()->family == Family::Quaternion;
    const int n = g->family()->n;
    const Element x = g->generator("x");
    const Element s = g->generators()[1].element;
    auto x_powers = [&](std::uint64_t count) {
        std::uint64_t bits = 0;
        for (Element p = 0, k = 0; k < count; ++k, p = g->mul(p, x)) bits |= std::uint64_t{1} << p;
        return AlgebraElement(g, bits);
    };
    const AlgebraElement one = AlgebraElement::one(g);
    if (name == "I") return one + AlgebraElement::of(g, x);
    if (name == "J") return one + AlgebraElement::of(g, s);
    if (name == "N_x" || name == "Nx") return x_powers(std::uint64_t{1} << (n - 1));
    if (name == "L") return quaternion ? x_powers(std::uint64_t{1} << (n - 2)) : x_powers((std::uint64_t{1} << (n - 2)) - 1);
    if (quaternion && name == "K") return one + AlgebraElement::of(g, g->mul(x, s));
    if (quaternion && name == "N") {
        const std::uint64_t all = g->order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g->order()) - 1;
        return AlgebraElement(g, all);
    }
    throw std::invalid_argument("special_element: unknown name " + std::string(name));
}

// Homomorphism of free left F2[G]-modules F2[G]^src -> F2[G]^dst, stored dst x src.
// Entry p acts on coefficients by right multiplication a -> a*p; column s is the image of e_s.
class ModuleMap {
public:
    ModuleMap() = default;
    ModuleMap(GroupPtr g, std::size_t dst, std::size_t src)
        : group_(std::move(g)), dst_(dst), src_(src), entries_(dst * src, 0) {
        require_algebra_group(*group_);
    }

    static ModuleMap identity(GroupPtr g, std::size_t r) {
        ModuleMap m(std::move(g), r, r);
        for (std::size_t i = 0; i < r; ++i) m.set(i, i, 1);
        return m;
    }
    static ModuleMap from_elements(GroupPtr g, const std::vector<std::vector<AlgebraElement>>& rows) {
        const std::size_t dst = rows.size(), src = dst ? rows.front().size() : 0;
        ModuleMap m(std::move(g), dst, src);
        for (std::size_t d = 0; d < dst; ++d) {
            if (rows[d].size() != src) throw std::invalid_argument("ModuleMap: ragged rows");
            for (std::size_t s = 0; s < src; ++s) m.set(d, s, rows[d][s].bits());
        }
        return m;
    }

    const GroupPtr& group() const { return group_; }
    std::size_t dst_rank() const { return dst_; }
    std::size_t src_rank() const { return src_; }
    std::uint64_t raw(std::size_t d, std::size_t s) const { return entries_[d * src_ + s]; }
    void set(std::size_t d, std::size_t s, std::uint64_t bits) { entries_[d * src_ + s] = bits; }
    AlgebraElement at(std::size_t d, std::size_t s) const { return {group_, raw(d, s)}; }
    const std::vector<std::uint64_t>& entries() const { return entries_; }

    bool is_zero() const {
        for (auto e : entries_) if (e) return false;
        return true;
    }
    ModuleMap& operator+=(const ModuleMap& o) {
        if (o.dst_ != dst_ || o.src_ != src_) throw std::invalid_argument("ModuleMap: shape mismatch in sum");
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] ^= o.entries_[i];
        return *this;
    }
    friend ModuleMap operator+(ModuleMap a, const ModuleMap& b) { return a += b; }
    friend bool operator==(const ModuleMap& a, const ModuleMap& b) {
        return a.dst_ == b.dst_ && a.src_ == b.src_ && a.entries_ == b.entries_;
    }

    // Image of e_s as dst entries of F2[G].
    std::vector<std::uint64_t> column(std::size_t s) const {
        std::vector<std::uint64_t> c(dst_);
        for (std::size_t d = 0; d < dst_; ++d) c[d] = raw(d, s);
        return c;
    }
    void set_column(std::size_t s, const std::vector<std::uint64_t>& c) {
        for (std::size_t d = 0; d < dst_; ++d) set(d, s, c[d]);
    }

    // Augmentation of every entry: the induced map F2^src -> F2^dst.
    F2Matrix augmentation() const {
        F2Matrix m(dst_, src_);
        for (std::size_t d = 0; d < dst_; ++d)
            for (std::size_t s = 0; s < src_; ++s)
                if (algebra_augmentation(raw(d, s))) m.set(d, s, true);
        return m;
    }

private:
    GroupPtr group_;
    std::size_t dst_ = 0, src_ = 0;
    std::vector<std::uint64_t> entries_;
};

// A after B.
inline ModuleMap mm_compose(const ModuleMap& a, const ModuleMap& b) {
    if (a.src_rank() != b.dst_rank()) throw std::invalid_argument("mm_compose: incompatible ranks");
    if (a.group().get() != b.group().get()) throw std::invalid_argument("mm_compose: different groups");
    const Group& g = *a.group();
    ModuleMap c(a.group(), a.dst_rank(), b.src_rank());
    for (std::size_t d = 0; d < a.dst_rank(); ++d)
        for (std::size_t s = 0; s < b.src_rank(); ++s) {
            std::uint64_t acc = 0;
            for (std::size_t m = 0; m < a.src_rank(); ++m) {
                const std::uint64_t bm = b.raw(m, s), am = a.raw(d, m);
                if (bm && am) acc ^= algebra_mul(g, bm, am);
            }
            c.set(d, s, acc);
        }
    return c;
}

// Coordinates of an element of F2[G]^r: index m*|G| + k for coefficient of g_k in slot m.
inline BitVector flatten_vector(const std::vector<std::uint64_t>& v, std::size_t order) {
    BitVector out(v.size() * order);
    for (std::size_t m = 0; m < v.size(); ++m)
        for (std::size_t k = 0; k < order; ++k)
            if ((v[m] >> k) & 1u) out.set(m * order + k, true);
    return out;
}

inline std::vector<std::uint64_t> unflatten_vector(const BitVector& v, std::size_t order) {
    std::vector<std::uint64_t> out(v.size() / order, 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) out[i / order] |= std::uint64_t{1} << (i % order);
    return out;
}

// The F2-linear map underlying a module map, in column convention: flatten(A∘B) = flatten(A)*flatten(B).
inline F2Matrix mm_to_f2(const ModuleMap& a) {
    const Group& g = *a.group();
    const std::size_t n = g.order();
    F2Matrix m(a.dst_rank() * n, a.src_rank() * n);
    for (std::size_t d = 0; d < a.dst_rank(); ++d)
        for (std::size_t s = 0; s < a.src_rank(); ++s) {
            const std::uint64_t p = a.raw(d, s);
            if (!p) continue;
            for (Element h = 0; h < n; ++h) {
                std::uint64_t img = g.left_translate(h, p);
                while (img) {
                    const std::size_t k = static_cast<std::size_t>(std::countr_zero(img));
                    img &= img - 1;
                    m.set(d * n + k, s * n + h, true);
                }
            }
        }
    return m;
}

}  // namespace f2coh
