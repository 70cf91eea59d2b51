#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "f2coh/bar_comparison.hpp"
#include "f2coh/group.hpp"
#include "f2coh/resolution.hpp"
#include "f2coh/yoneda.hpp"

namespace f2coh {

struct NamedGeneratorClass {
    std::string name;
    int degree;
};

using Monomial = std::vector<int>;  // exponents, aligned with the generator list

// Ring generators with fixed names and the monomial bases used to print classes.
//   X, Y : degree one, X(x) = 1, X(s) = 0, Y(x) = 0, Y(s) = 1 for the second generator s.
//   W    : class of the family surjection from the group of twice the order (dihedral, cyclic).
//   U, V : on the semidihedral resolution the classes of (1,0,0,0) and (1,0,0,0,0); transported
//          along a comparison map for other resolutions.
//   V    : for quaternion groups the nonzero class of degree four.
class NamedCohomology {
public:
    explicit NamedCohomology(ComplexPtr cx, int named_degree = 4) : cx_(std::move(cx)) {
        const Group& g = *cx_->group();
        if (!g.family()) throw std::invalid_argument("NamedCohomology: group has no family tag");
        spec_ = *g.family();
        build_generators();
        const int top = std::min(named_degree, cx_->max_cohomology_degree());
        for (int d = 1; d <= top; ++d) build_basis(d);
    }

    const ComplexPtr& complex() const { return cx_; }
    const FamilySpec& spec() const { return spec_; }
    const std::vector<NamedGeneratorClass>& generators() const { return gens_; }
    int named_degree() const { return static_cast<int>(bases_.size()); }

    const CohClass& generator(std::string_view name) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return classes_[i];
        throw std::invalid_argument("no generator named " + std::string(name) + " for " + to_string(spec_));
    }
    bool has_generator(std::string_view name) const {
        for (const auto& g : gens_) if (g.name == name) return true;
        return false;
    }

    int degree_of(const Monomial& m) const {
        int d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * gens_[i].degree;
        return d;
    }

    std::string monomial_name(const Monomial& m) const {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            s += gens_[i].name;
            if (m[i] > 1) s += std::to_string(m[i]);
        }
        return s.empty() ? "1" : s;
    }

    CohClass monomial_class(const Monomial& m) const {
        const int total = degree_of(m);
        if (total == 0) throw std::invalid_argument("monomial_class: degree zero");
        cx_->check_degree(total);
        std::vector<std::size_t> factors;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) factors.push_back(i);
        if (factors.size() == 1) return classes_[factors[0]];
        // levels needed by each left partial product so that level 0 of the whole survives
        std::vector<std::size_t> need(factors.size());
        need.back() = 1;
        for (std::size_t j = factors.size() - 1; j > 0; --j)
            need[j - 1] = need[j] + static_cast<std::size_t>(gens_[factors[j]].degree);
        Cochain acc = cochains_[factors[0]].truncated(need[0]);
        for (std::size_t j = 1; j < factors.size(); ++j) acc = compose(acc, cochains_[factors[j]], need[j]);
        return class_of(acc);
    }

    const std::vector<Monomial>& basis_monomials(int degree) const {
        if (degree < 1 || degree > named_degree()) throw std::out_of_range("basis_monomials: degree outside named range");
        return bases_[static_cast<std::size_t>(degree) - 1].monomials;
    }

    // Coordinates of c in the monomial basis of its degree.
    BitVector monomial_coordinates(const CohClass& c) const {
        if (c.degree() < 1 || c.degree() > named_degree()) throw std::out_of_range("monomial_coordinates: degree outside named range");
        const auto& b = bases_[static_cast<std::size_t>(c.degree()) - 1];
        auto x = b.solver.solve(c.coordinates());
        if (!x) throw std::logic_error("monomial_coordinates: monomials do not span");
        return *x;
    }

    std::string name(const CohClass& c) const {
        if (c.is_zero()) return "0";
        if (c.degree() < 1 || c.degree() > named_degree()) {
            std::string s = "H" + std::to_string(c.degree()) + "[";
            s += c.coordinates().to_string();
            return s + "]";
        }
        const BitVector x = monomial_coordinates(c);
        const auto& mons = bases_[static_cast<std::size_t>(c.degree()) - 1].monomials;
        std::string s;
        for (std::size_t k = 0; k < mons.size(); ++k) {
            if (!x.get(k)) continue;
            if (!s.empty()) s += "+";
            s += monomial_name(mons[k]);
        }
        return s;
    }

    Monomial parse_monomial(std::string_view term) const {
        Monomial m(gens_.size(), 0);
        std::size_t i = 0;
        if (term.empty()) throw std::invalid_argument("empty monomial");
        while (i < term.size()) {
            std::size_t g = gens_.size();
            for (std::size_t k = 0; k < gens_.size(); ++k)
                if (term.substr(i, gens_[k].name.size()) == gens_[k].name) { g = k; break; }
            if (g == gens_.size())
                throw std::invalid_argument("unknown class name '" + std::string(term.substr(i)) + "' for " + to_string(spec_));
            i += gens_[g].name.size();
            int e = 0;
            while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) e = e * 10 + (term[i++] - '0');
            m[g] += e == 0 ? 1 : e;
        }
        return m;
    }

    // "U+Y3", "X2", "XY+Y2"; a bare "0" needs an explicit degree.
    CohClass evaluate(std::string_view expr, std::optional<int> degree = std::nullopt) const {
        std::vector<std::string> terms;
        std::string cur;
        for (char ch : expr) {
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            if (ch == '+') { terms.push_back(cur); cur.clear(); }
            else cur += ch;
        }
        terms.push_back(cur);
        std::optional<CohClass> sum;
        for (const auto& t : terms) {
            if (t == "0") continue;
            const Monomial m = parse_monomial(t);
            const int d = degree_of(m);
            if (degree && *degree != d) throw std::invalid_argument("class expression mixes degrees: " + std::string(expr));
            degree = d;
            CohClass c = monomial_class(m);
            if (sum) *sum += c; else sum = c;
        }
        if (!sum) {
            if (!degree) throw std::invalid_argument("class expression '0' needs a degree");
            return CohClass::zero(cx_, *degree);
        }
        return *sum;
    }

private:
    struct DegreeBasis {
        std::vector<Monomial> monomials;
        LinearSolver solver;  // monomial coordinates -> cohomology coordinates
    };

    void add_generator(std::string name, int degree, const BitVector& functional) {
        auto c = CohClass::from_functional(cx_, degree, functional);
        if (!c) throw std::logic_error("NamedCohomology: generator " + name + " is not a cocycle");
        gens_.push_back({name, degree});
        cochains_.push_back(c->representative());
        classes_.push_back(std::move(*c));
    }

    void build_generators() {
        const GroupPtr& g = cx_->group();
        const bool two_gens = g->generators().size() == 2;
        add_generator("X", 1, functional_from_hom(*cx_, hom_from_generator_values(*g, two_gens ? std::vector<std::uint8_t>{1, 0} : std::vector<std::uint8_t>{1})));
        if (two_gens) add_generator("Y", 1, functional_from_hom(*cx_, hom_from_generator_values(*g, {0, 1})));
        const int top = cx_->max_cohomology_degree();
        const bool w_family = (spec_.family == Family::Dihedral && spec_.n >= 3) || (spec_.family == Family::Cyclic && spec_.n >= 2);
        if (w_family && top >= 2) {
            const auto big = make_group(spec_.family, spec_.n + 1);
            const auto ext = family_extension(big, *g);
            add_generator("W", 2, functional_from_bar_cocycle(*cx_, extension_cocycle(*g, ext)));
        }
        if (spec_.family == Family::Quaternion && top >= 4) {
            if (cx_->resolution().builder == "quaternion") {
                add_generator("V", 4, BitVector{1});
            } else {
                if (cx_->dim(4) != 1) throw std::logic_error("NamedCohomology: H^4 of a quaternion group should be one-dimensional");
                add_generator("V", 4, cx_->basis(4)[0]);
            }
        }
        if (spec_.family == Family::Semidihedral && top >= 3) {
            BitVector u(4), v(5);
            u.set(0, true);
            v.set(0, true);
            if (cx_->resolution().builder == "semidihedral") {
                add_generator("U", 3, u);
                if (top >= 4) add_generator("V", 4, v);
            } else {
                const int reach = std::min(top, 4);
                auto wall = make_complex(semidihedral_resolution(g, 5));
                const auto c = comparison_map(*cx_, *wall, reach);
                add_generator("U", 3, pullback_functional(c[3], u));
                if (reach >= 4) add_generator("V", 4, pullback_functional(c[4], v));
            }
        }
    }

    std::vector<Monomial> all_monomials(int degree) const {
        std::vector<Monomial> out;
        Monomial m(gens_.size(), 0);
        auto rec = [&](auto&& self, std::size_t i, int left) -> void {
            if (i == gens_.size()) {
                if (left == 0) out.push_back(m);
                return;
            }
            for (int e = left / gens_[i].degree; e >= 0; --e) {
                m[i] = e;
                self(self, i + 1, left - e * gens_[i].degree);
            }
            m[i] = 0;
        };
        rec(rec, 0, degree);
        return out;
    }

    std::vector<std::string> preferred(int degree) const {
        const Family f = spec_.family;
        if (f == Family::Dihedral && spec_.n >= 3) {
            switch (degree) {
                case 2: return {"X2", "Y2", "W"};
                case 3: return {"X3", "Y3", "XW", "YW"};
                case 4: return {"X4", "Y4", "X2W", "Y2W", "W2"};
                default: break;
            }
        }
        if (f == Family::Quaternion) {
            switch (degree) {
                case 2: return {"X2", "Y2"};
                case 3: return {"X2Y"};
                case 4: return {"V"};
                default: break;
            }
        }
        if (f == Family::Semidihedral) {
            switch (degree) {
                case 2: return {"X2", "Y2"};
                case 3: return {"U", "Y3"};
                case 4: return {"Y4", "YU", "V"};
                default: break;
            }
        }
        return {};
    }

    void build_basis(int degree) {
        const std::size_t dim = cx_->dim(degree);
        std::vector<Monomial> candidates;
        for (const auto& s : preferred(degree)) candidates.push_back(parse_monomial(s));
        for (auto& m : all_monomials(degree)) candidates.push_back(std::move(m));
        DegreeBasis b;
        IncrementalBasis span(dim);
        std::vector<BitVector> coords;
        for (const auto& m : candidates) {
            if (span.size() == dim) break;
            const CohClass c = monomial_class(m);
            if (span.insert(c.coordinates())) {
                b.monomials.push_back(m);
                coords.push_back(c.coordinates());
            }
        }
        if (span.size() != dim)
            throw std::logic_error("NamedCohomology: generators do not span degree " + std::to_string(degree) + " for " + to_string(spec_));
        const auto pref = preferred(degree);
        for (std::size_t k = 0; k < pref.size(); ++k)
            if (k >= b.monomials.size() || b.monomials[k] != parse_monomial(pref[k]))
                throw std::logic_error("NamedCohomology: " + pref[k] + " is not part of a basis in degree " + std::to_string(degree));
        F2Matrix cols(dim, dim);
        for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t j = 0; j < dim; ++j) if (coords[k].get(j)) cols.set(j, k, true);
        b.solver = LinearSolver(cols);
        bases_.push_back(std::move(b));
    }

    ComplexPtr cx_;
    FamilySpec spec_;
    std::vector<NamedGeneratorClass> gens_;
    std::vector<CohClass> classes_;
    std::vector<Cochain> cochains_;
    std::vector<DegreeBasis> bases_;
};

}  // namespace f2coh
