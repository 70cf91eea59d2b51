#pragma once

#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2coh/f2matrix.hpp"
#include "f2coh/group_algebra.hpp"
#include "f2coh/resolution.hpp"

namespace f2coh {

// Linear algebra attached to a fixed resolution: solvers for every ∂_n and the
// Hom(P_*, F2) cohomology with a chosen basis in each degree.
class YonedaComplex {
public:
    explicit YonedaComplex(ResolutionPtr r) : res_(std::move(r)) {
        const int w = res_->window();
        solvers_.resize(static_cast<std::size_t>(w) + 1);
        eps_.resize(static_cast<std::size_t>(w) + 1);
        for (int n = 1; n <= w; ++n) {
            solvers_[static_cast<std::size_t>(n)] = LinearSolver(mm_to_f2(res_->differential(n)));
            eps_[static_cast<std::size_t>(n)] = res_->differential(n).augmentation();
        }
        for (int i = 0; i < w; ++i) degrees_.push_back(build_degree(i));
    }

    const Resolution& resolution() const { return *res_; }
    const ResolutionPtr& resolution_ptr() const { return res_; }
    const GroupPtr& group() const { return res_->group; }
    int window() const { return res_->window(); }
    int max_cohomology_degree() const { return window() - 1; }
    std::size_t rank(int i) const { return res_->ranks.at(static_cast<std::size_t>(i)); }
    // Components of a degree-i cochain with all levels available in the window.
    std::size_t full_levels(int degree) const { return static_cast<std::size_t>(window() - degree + 1); }

    // ε(∂_n) as an r_{n-1} x r_n matrix over F2.
    const F2Matrix& epsilon_differential(int n) const { return eps_.at(static_cast<std::size_t>(n)); }

    // v in P_n with ∂_n v = target.
    std::optional<std::vector<std::uint64_t>> solve_boundary(int n, const std::vector<std::uint64_t>& target) const {
        const std::size_t order = group()->order();
        auto x = solvers_.at(static_cast<std::size_t>(n)).solve(flatten_vector(target, order));
        if (!x) return std::nullopt;
        return unflatten_vector(*x, order);
    }

    // X : P_src -> P_n with ∂_n∘X = rhs.
    std::optional<ModuleMap> solve_through(int n, const ModuleMap& rhs) const {
        ModuleMap x(group(), rank(n), rhs.src_rank());
        for (std::size_t s = 0; s < rhs.src_rank(); ++s) {
            auto v = solve_boundary(n, rhs.column(s));
            if (!v) return std::nullopt;
            x.set_column(s, *v);
        }
        return x;
    }

    void check_degree(int i) const {
        if (i < 0 || i > max_cohomology_degree())
            throw std::out_of_range("cohomology degree " + std::to_string(i) + " outside window " + std::to_string(window()));
    }
    std::size_t dim(int i) const { check_degree(i); return degrees_[static_cast<std::size_t>(i)].basis.size(); }
    const std::vector<BitVector>& basis(int i) const { check_degree(i); return degrees_[static_cast<std::size_t>(i)].basis; }

    bool is_cocycle_functional(int i, const BitVector& f) const {
        check_degree(i);
        return (degrees_[static_cast<std::size_t>(i)].cocycle_test * f).is_zero();
    }
    bool is_coboundary_functional(int i, const BitVector& f) const {
        check_degree(i);
        return degrees_[static_cast<std::size_t>(i)].coboundaries.contains(f);
    }
    // Coordinates of the class of f in the chosen basis; nullopt if f is not a cocycle.
    std::optional<BitVector> coordinates(int i, const BitVector& f) const {
        if (!is_cocycle_functional(i, f)) return std::nullopt;
        const auto& d = degrees_[static_cast<std::size_t>(i)];
        auto c = d.coordinate_solver.solve(f);
        if (!c) throw std::logic_error("coordinates: cocycle outside span of basis and coboundaries");
        BitVector out(d.basis.size());
        for (std::size_t k = 0; k < d.basis.size(); ++k) if (c->get(d.boundary_dim + k)) out.set(k, true);
        return out;
    }
    BitVector functional_of(int i, const BitVector& coords) const {
        BitVector f(rank(i));
        const auto& b = basis(i);
        for (std::size_t k = 0; k < b.size(); ++k) if (coords.get(k)) f ^= b[k];
        return f;
    }

private:
    struct Degree {
        F2Matrix cocycle_test;  // f is a cocycle iff cocycle_test * f = 0
        IncrementalBasis coboundaries{0};
        std::size_t boundary_dim = 0;
        std::vector<BitVector> basis;
        LinearSolver coordinate_solver;  // columns: coboundary basis, then cohomology basis
    };

    Degree build_degree(int i) const {
        Degree d;
        const std::size_t r = rank(i);
        d.cocycle_test = eps_[static_cast<std::size_t>(i) + 1].transpose();
        d.coboundaries = IncrementalBasis(r);
        if (i >= 1) {
            const F2Matrix& e = eps_[static_cast<std::size_t>(i)];
            for (std::size_t row = 0; row < e.rows(); ++row) d.coboundaries.insert(e.row(row));
        }
        d.boundary_dim = d.coboundaries.size();
        IncrementalBasis span = d.coboundaries;
        const F2Matrix z = kernel_basis(d.cocycle_test);
        for (std::size_t k = 0; k < z.rows(); ++k)
            if (span.insert(z.row(k))) d.basis.push_back(z.row(k));
        F2Matrix cols(r, d.boundary_dim + d.basis.size());
        std::size_t c = 0;
        for (const auto& v : d.coboundaries.rows()) {
            for (std::size_t j = 0; j < r; ++j) if (v.get(j)) cols.set(j, c, true);
            ++c;
        }
        for (const auto& v : d.basis) {
            for (std::size_t j = 0; j < r; ++j) if (v.get(j)) cols.set(j, c, true);
            ++c;
        }
        d.coordinate_solver = LinearSolver(cols);
        return d;
    }

    ResolutionPtr res_;
    std::vector<LinearSolver> solvers_;
    std::vector<F2Matrix> eps_;
    std::vector<Degree> degrees_;
};

using ComplexPtr = std::shared_ptr<const YonedaComplex>;

inline ComplexPtr make_complex(ResolutionPtr r) { return std::make_shared<const YonedaComplex>(std::move(r)); }

// Degree-i cochain: components φ_n : P_{n+i} -> P_n for n = 0 .. levels-1.
class Cochain {
public:
    Cochain(ComplexPtr cx, int degree, std::vector<ModuleMap> comps)
        : cx_(std::move(cx)), degree_(degree), comps_(std::move(comps)) {
        if (degree_ < 0) throw std::invalid_argument("Cochain: negative degree");
        for (std::size_t n = 0; n < comps_.size(); ++n) {
            const int idx = static_cast<int>(n);
            if (idx + degree_ > cx_->window()) throw std::invalid_argument("Cochain: component beyond resolution window");
            if (comps_[n].dst_rank() != cx_->rank(idx) || comps_[n].src_rank() != cx_->rank(idx + degree_))
                throw std::invalid_argument("Cochain: component " + std::to_string(n) + " has the wrong shape");
        }
    }

    static Cochain zero(const ComplexPtr& cx, int degree, std::size_t levels) {
        std::vector<ModuleMap> comps;
        for (std::size_t n = 0; n < levels; ++n)
            comps.emplace_back(cx->group(), cx->rank(static_cast<int>(n)), cx->rank(static_cast<int>(n) + degree));
        return {cx, degree, std::move(comps)};
    }

    const ComplexPtr& complex() const { return cx_; }
    int degree() const { return degree_; }
    std::size_t levels() const { return comps_.size(); }
    const ModuleMap& component(std::size_t n) const { return comps_.at(n); }
    const std::vector<ModuleMap>& components() const { return comps_; }

    Cochain truncated(std::size_t levels) const {
        if (levels > comps_.size()) throw std::invalid_argument("Cochain::truncated: not enough levels");
        return {cx_, degree_, std::vector<ModuleMap>(comps_.begin(), comps_.begin() + static_cast<std::ptrdiff_t>(levels))};
    }

    // ε∘φ_0 as a functional on P_degree.
    BitVector functional() const {
        if (comps_.empty()) throw std::logic_error("Cochain::functional: no components");
        BitVector f(cx_->rank(degree_));
        for (std::size_t s = 0; s < f.size(); ++s) if (algebra_augmentation(comps_[0].raw(0, s))) f.set(s, true);
        return f;
    }

    bool is_zero() const {
        for (const auto& c : comps_) if (!c.is_zero()) return false;
        return true;
    }

    Cochain& operator+=(const Cochain& o) {
        if (o.degree_ != degree_ || o.cx_.get() != cx_.get()) throw std::invalid_argument("Cochain: incompatible sum");
        const std::size_t l = std::min(levels(), o.levels());
        comps_.resize(l);
        for (std::size_t n = 0; n < l; ++n) comps_[n] += o.comps_[n];
        return *this;
    }
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.cx_.get() == b.cx_.get() && a.degree_ == b.degree_ && a.comps_ == b.comps_;
    }

private:
    ComplexPtr cx_;
    int degree_;
    std::vector<ModuleMap> comps_;
};

// (δφ)_n = ∂_{n+1}φ_{n+1} + φ_n∂_{n+i+1}; P_{-1} = 0.
inline Cochain differential(const Cochain& phi) {
    const auto& cx = phi.complex();
    const int i = phi.degree();
    std::vector<ModuleMap> out;
    for (std::size_t n = 0; n + 1 < phi.levels(); ++n) {
        const int idx = static_cast<int>(n);
        ModuleMap m = mm_compose(cx->resolution().differential(idx + 1), phi.component(n + 1));
        m += mm_compose(phi.component(n), cx->resolution().differential(idx + i + 1));
        out.push_back(std::move(m));
    }
    return {cx, i + 1, std::move(out)};
}

inline bool is_cocycle(const Cochain& phi) { return differential(phi).is_zero(); }

// Yoneda product a·b: apply a first, then b; (a·b)_n = b_n∘a_{n+deg b}.
inline Cochain compose(const Cochain& a, const Cochain& b, std::size_t max_levels = ~std::size_t{0}) {
    if (a.complex().get() != b.complex().get()) throw std::invalid_argument("compose: cochains over different resolutions");
    const std::size_t q = static_cast<std::size_t>(b.degree());
    std::size_t levels = a.levels() > q ? std::min(b.levels(), a.levels() - q) : 0;
    levels = std::min(levels, max_levels);
    std::vector<ModuleMap> out;
    for (std::size_t n = 0; n < levels; ++n) out.push_back(mm_compose(b.component(n), a.component(n + q)));
    return {a.complex(), a.degree() + b.degree(), std::move(out)};
}

// Chain map lifting the functional f on P_degree; fails exactly when f is not a cocycle.
inline std::optional<Cochain> lift_functional(const ComplexPtr& cx, int degree, const BitVector& f,
                                              std::size_t levels = ~std::size_t{0}) {
    if (degree < 0 || degree > cx->window()) throw std::out_of_range("lift_functional: degree outside window");
    if (f.size() != cx->rank(degree)) throw std::invalid_argument("lift_functional: functional has the wrong length");
    levels = std::min(levels, cx->full_levels(degree));
    std::vector<ModuleMap> comps;
    ModuleMap phi0(cx->group(), 1, cx->rank(degree));
    for (std::size_t s = 0; s < f.size(); ++s) if (f.get(s)) phi0.set(0, s, 1);
    comps.push_back(std::move(phi0));
    for (std::size_t n = 1; n < levels; ++n) {
        const int idx = static_cast<int>(n);
        auto next = cx->solve_through(idx, mm_compose(comps.back(), cx->resolution().differential(idx + degree)));
        if (!next) return std::nullopt;
        comps.push_back(std::move(*next));
    }
    return Cochain(cx, degree, std::move(comps));
}

// ψ with δψ = c, for a cocycle c of degree >= 1; nullopt when the class of c is nonzero.
inline std::optional<Cochain> solve_coboundary(const Cochain& c, std::size_t levels = ~std::size_t{0}) {
    const auto& cx = c.complex();
    const int d = c.degree();
    if (d < 1) throw std::invalid_argument("solve_coboundary: degree must be at least 1");
    if (c.levels() == 0) throw std::invalid_argument("solve_coboundary: empty cochain");
    const int e = d - 1;
    levels = std::min({levels, c.levels() + 1, cx->full_levels(e)});
    const F2Matrix& eps = cx->epsilon_differential(d);
    auto g = solve(eps.transpose(), c.functional());
    if (!g) return std::nullopt;
    std::vector<ModuleMap> comps;
    ModuleMap psi0(cx->group(), 1, cx->rank(e));
    for (std::size_t s = 0; s < g->size(); ++s) if (g->get(s)) psi0.set(0, s, 1);
    comps.push_back(std::move(psi0));
    for (std::size_t m = 0; m + 1 < levels; ++m) {
        const int idx = static_cast<int>(m);
        ModuleMap rhs = c.component(m) + mm_compose(comps.back(), cx->resolution().differential(idx + d));
        auto next = cx->solve_through(idx + 1, rhs);
        if (!next) throw std::invalid_argument("solve_coboundary: argument is not a cocycle");
        comps.push_back(std::move(*next));
    }
    return Cochain(cx, e, std::move(comps));
}

inline Cochain random_cochain(const ComplexPtr& cx, int degree, std::size_t levels, std::mt19937_64& rng) {
    const std::size_t order = cx->group()->order();
    const std::uint64_t mask = order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
    Cochain z = Cochain::zero(cx, degree, std::min(levels, cx->full_levels(degree)));
    std::vector<ModuleMap> comps = z.components();
    for (auto& m : comps)
        for (std::size_t d = 0; d < m.dst_rank(); ++d)
            for (std::size_t s = 0; s < m.src_rank(); ++s) m.set(d, s, rng() & mask);
    return {cx, degree, std::move(comps)};
}

// Cohomology class, stored by its coordinates in the complex's basis of H^degree.
class CohClass {
public:
    CohClass(ComplexPtr cx, int degree, BitVector coords) : cx_(std::move(cx)), degree_(degree), coords_(std::move(coords)) {
        if (coords_.size() != cx_->dim(degree_)) throw std::invalid_argument("CohClass: coordinate vector has the wrong length");
    }
    static CohClass zero(const ComplexPtr& cx, int degree) { return {cx, degree, BitVector(cx->dim(degree))}; }
    static std::optional<CohClass> from_functional(const ComplexPtr& cx, int degree, const BitVector& f) {
        auto c = cx->coordinates(degree, f);
        if (!c) return std::nullopt;
        return CohClass(cx, degree, std::move(*c));
    }

    const ComplexPtr& complex() const { return cx_; }
    int degree() const { return degree_; }
    const BitVector& coordinates() const { return coords_; }
    bool is_zero() const { return coords_.is_zero(); }
    BitVector functional() const { return cx_->functional_of(degree_, coords_); }
    Cochain representative(std::size_t levels = ~std::size_t{0}) const {
        auto c = lift_functional(cx_, degree_, functional(), levels);
        if (!c) throw std::logic_error("CohClass::representative: basis functional failed to lift");
        return std::move(*c);
    }

    CohClass& operator+=(const CohClass& o) {
        if (o.degree_ != degree_ || o.cx_.get() != cx_.get()) throw std::invalid_argument("CohClass: incompatible sum");
        coords_ ^= o.coords_;
        return *this;
    }
    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend bool operator==(const CohClass& a, const CohClass& b) {
        return a.cx_.get() == b.cx_.get() && a.degree_ == b.degree_ && a.coords_ == b.coords_;
    }
    friend bool operator<(const CohClass& a, const CohClass& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
        return a.coords_ < b.coords_;
    }

private:
    ComplexPtr cx_;
    int degree_;
    BitVector coords_;
};

// Class of a cochain from its level-0 functional; the caller guarantees it is a cocycle.
inline CohClass class_of(const Cochain& c) {
    auto k = CohClass::from_functional(c.complex(), c.degree(), c.functional());
    if (!k) throw std::invalid_argument("class_of: level-0 functional is not a cocycle");
    return std::move(*k);
}

// Like class_of, but checks the cocycle condition on every available level.
inline CohClass identify_class(const Cochain& c) {
    if (!is_cocycle(c)) throw std::invalid_argument("identify_class: cochain is not a cocycle");
    return class_of(c);
}

inline std::vector<CohClass> cohomology_basis(const ComplexPtr& cx, int degree) {
    std::vector<CohClass> out;
    const std::size_t h = cx->dim(degree);
    for (std::size_t k = 0; k < h; ++k) {
        BitVector e(h);
        e.set(k, true);
        out.emplace_back(cx, degree, std::move(e));
    }
    return out;
}

inline CohClass cup(const CohClass& a, const CohClass& b) {
    const int total = a.degree() + b.degree();
    a.complex()->check_degree(total);
    const std::size_t q = static_cast<std::size_t>(b.degree());
    return class_of(compose(a.representative(q + 1), b.representative(1)));
}

// Comparison chain map src -> dst over the identity of F2, components c_k : P_k -> P'_k.
inline std::vector<ModuleMap> comparison_map(const YonedaComplex& src, const YonedaComplex& dst, int max_degree) {
    if (src.group().get() != dst.group().get()) throw std::invalid_argument("comparison_map: resolutions over different groups");
    if (max_degree > src.window() || max_degree > dst.window()) throw std::out_of_range("comparison_map: degree outside window");
    std::vector<ModuleMap> c{ModuleMap::identity(src.group(), 1)};
    for (int k = 1; k <= max_degree; ++k) {
        auto next = dst.solve_through(k, mm_compose(c.back(), src.resolution().differential(k)));
        if (!next) throw std::logic_error("comparison_map: lifting failed");
        c.push_back(std::move(*next));
    }
    return c;
}

// f' on P'_k pulled back along c_k.
inline BitVector pullback_functional(const ModuleMap& ck, const BitVector& f) {
    BitVector out(ck.src_rank());
    for (std::size_t s = 0; s < ck.src_rank(); ++s) {
        bool v = false;
        for (std::size_t m = 0; m < ck.dst_rank(); ++m)
            if (f.get(m) && algebra_augmentation(ck.raw(m, s))) v = !v;
        out.set(s, v);
    }
    return out;
}

}  // namespace f2coh
