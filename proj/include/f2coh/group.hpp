#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "f2coh/f2matrix.hpp"

namespace f2coh {

using Element = std::size_t;

enum class Family { Dihedral, Quaternion, Semidihedral, Cyclic };

struct FamilySpec {
    Family family;
    int n;  // order 2^n
    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Dihedral: return "dihedral";
        case Family::Quaternion: return "quaternion";
        case Family::Semidihedral: return "semidihedral";
        case Family::Cyclic: return "cyclic";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
    if (s == "dihedral") return Family::Dihedral;
    if (s == "quaternion") return Family::Quaternion;
    if (s == "semidihedral") return Family::Semidihedral;
    if (s == "cyclic") return Family::Cyclic;
    return std::nullopt;
}

inline std::string family_prefix(Family f) {
    switch (f) {
        case Family::Dihedral: return "D";
        case Family::Quaternion: return "Q";
        case Family::Semidihedral: return "SD";
        case Family::Cyclic: return "C";
    }
    return "?";
}

inline std::string to_string(const FamilySpec& s) {
    return family_prefix(s.family) + std::to_string(std::uint64_t{1} << s.n);
}

inline bool valid_spec(const FamilySpec& s) {
    switch (s.family) {
        case Family::Dihedral: return s.n >= 2 && s.n <= 7;
        case Family::Quaternion: return s.n >= 3 && s.n <= 7;
        case Family::Semidihedral: return s.n >= 4 && s.n <= 7;
        case Family::Cyclic: return s.n >= 1 && s.n <= 7;
    }
    return false;
}

// "D8", "Q16", "SD32", "C4"
inline std::optional<FamilySpec> parse_group_spec(std::string_view s) {
    Family f;
    std::size_t skip = 1;
    if (s.starts_with("SD")) { f = Family::Semidihedral; skip = 2; }
    else if (s.starts_with("D")) f = Family::Dihedral;
    else if (s.starts_with("Q")) f = Family::Quaternion;
    else if (s.starts_with("C")) f = Family::Cyclic;
    else return std::nullopt;
    const std::string_view digits = s.substr(skip);
    if (digits.empty() || digits.size() > 4) return std::nullopt;
    std::uint64_t order = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') return std::nullopt;
        order = order * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (order < 2 || !std::has_single_bit(order)) return std::nullopt;
    FamilySpec spec{f, std::countr_zero(order)};
    if (!valid_spec(spec)) return std::nullopt;
    return spec;
}

struct NamedGenerator {
    std::string name;
    Element element;
};

// Finite group given by its multiplication table; element 0 is the identity.
class Group {
public:
    Group(std::string label, std::size_t order, std::vector<std::uint16_t> table,
          std::vector<NamedGenerator> generators, std::optional<FamilySpec> family = std::nullopt,
          std::vector<F2Matrix> matrices = {})
        : label_(std::move(label)), order_(order), table_(std::move(table)),
          generators_(std::move(generators)), family_(family), matrices_(std::move(matrices)) {
        if (order_ == 0 || table_.size() != order_ * order_)
            throw std::invalid_argument("Group: table size does not match order");
        inverse_.assign(order_, order_);
        for (Element a = 0; a < order_; ++a) {
            if (mul(0, a) != a || mul(a, 0) != a) throw std::invalid_argument("Group: element 0 is not the identity");
            for (Element b = 0; b < order_; ++b)
                if (mul(a, b) == 0) { inverse_[a] = b; break; }
            if (inverse_[a] == order_) throw std::invalid_argument("Group: element without inverse");
        }
        if (order_ <= 64) build_translations();
    }

    const std::string& label() const { return label_; }
    std::size_t order() const { return order_; }
    Element identity() const { return 0; }
    Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
    Element inverse(Element a) const { return inverse_[a]; }
    Element pow(Element a, std::uint64_t k) const {
        Element r = 0;
        for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }
    Element conjugate(Element g, Element a) const { return mul(mul(g, a), inverse(g)); }
    const std::vector<NamedGenerator>& generators() const { return generators_; }
    Element generator(std::string_view name) const {
        for (const auto& g : generators_) if (g.name == name) return g.element;
        throw std::invalid_argument("Group " + label_ + ": no generator named " + std::string(name));
    }
    const std::optional<FamilySpec>& family() const { return family_; }
    const std::vector<F2Matrix>& matrices() const { return matrices_; }

    bool is_abelian() const {
        for (Element a = 0; a < order_; ++a)
            for (Element b = a + 1; b < order_; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    // Support of a left translate g*b, where b is a subset of G packed in a word (|G| <= 64).
    std::uint64_t left_translate(Element g, std::uint64_t b) const {
        const auto& t = translations_[g];
        std::uint64_t r = 0;
        for (int byte = 0; byte < 8 && b; ++byte, b >>= 8) r |= t[byte][b & 0xff];
        return r;
    }
    bool has_translations() const { return !translations_.empty(); }

private:
    void build_translations() {
        translations_.resize(order_);
        for (Element g = 0; g < order_; ++g)
            for (int byte = 0; byte < 8; ++byte)
                for (unsigned v = 0; v < 256; ++v) {
                    std::uint64_t r = 0;
                    for (int bit = 0; bit < 8; ++bit) {
                        const std::size_t h = static_cast<std::size_t>(byte * 8 + bit);
                        if ((v >> bit) & 1u && h < order_) r |= std::uint64_t{1} << mul(g, h);
                    }
                    translations_[g][byte][v] = r;
                }
    }

    std::string label_;
    std::size_t order_;
    std::vector<std::uint16_t> table_;
    std::vector<Element> inverse_;
    std::vector<NamedGenerator> generators_;
    std::optional<FamilySpec> family_;
    std::vector<F2Matrix> matrices_;
    std::vector<std::array<std::array<std::uint64_t, 256>, 8>> translations_;
};

using GroupPtr = std::shared_ptr<const Group>;

// Normal form x^a s^e has index e*2^(n-1) + a. The second generator is y, z or t.
inline GroupPtr make_group(Family family, int n) {
    const FamilySpec spec{family, n};
    if (!valid_spec(spec)) throw std::invalid_argument("make_group: unsupported parameters for " + family_name(family) + " n=" + std::to_string(n));
    const std::size_t order = std::size_t{1} << n;
    std::vector<std::uint16_t> table(order * order);
    if (family == Family::Cyclic) {
        for (std::size_t a = 0; a < order; ++a)
            for (std::size_t b = 0; b < order; ++b) table[a * order + b] = static_cast<std::uint16_t>((a + b) % order);
        return std::make_shared<Group>(to_string(spec), order, std::move(table),
                                       std::vector<NamedGenerator>{{"x", 1}}, spec);
    }
    const std::int64_t m = static_cast<std::int64_t>(order / 2);  // order of x
    std::int64_t r = m - 1;                                      // s x s^-1 = x^r
    std::int64_t square = 0;                                     // s^2 = x^square
    std::string second = "y";
    if (family == Family::Quaternion) { square = m / 2; second = "z"; }
    if (family == Family::Semidihedral) { r = m / 2 - 1; second = "t"; }
    auto index = [m](std::int64_t a, int e) { return static_cast<std::uint16_t>(e * m + ((a % m) + m) % m); };
    for (std::size_t u = 0; u < order; ++u)
        for (std::size_t v = 0; v < order; ++v) {
            const int e = static_cast<int>(u / static_cast<std::size_t>(m)), f = static_cast<int>(v / static_cast<std::size_t>(m));
            const std::int64_t a = static_cast<std::int64_t>(u) % m, b = static_cast<std::int64_t>(v) % m;
            std::int64_t c = a + (e ? b * r : b);
            if (e && f) c += square;
            table[u * order + v] = index(c, (e + f) % 2);
        }
    return std::make_shared<Group>(to_string(spec), order, std::move(table),
                                   std::vector<NamedGenerator>{{"x", 1}, {second, static_cast<Element>(m)}}, spec);
}

inline GroupPtr make_group(const FamilySpec& s) { return make_group(s.family, s.n); }

inline std::uint64_t element_order(const Group& g, Element a) {
    std::uint64_t k = 1;
    for (Element p = a; p != g.identity(); p = g.mul(p, a)) ++k;
    return k;
}

inline std::map<std::uint64_t, std::size_t> order_histogram(const Group& g) {
    std::map<std::uint64_t, std::size_t> h;
    for (Element a = 0; a < g.order(); ++a) ++h[element_order(g, a)];
    return h;
}

// Exhaustive axiom check; intended for small groups.
inline std::optional<std::string> check_group_axioms(const Group& g) {
    if (g.order() > 64) throw std::invalid_argument("check_group_axioms: order above 64");
    for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b)
            for (Element c = 0; c < g.order(); ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    return std::nullopt;
}

inline GroupPtr direct_product(const Group& a, const Group& b, std::string label = {}) {
    const std::size_t n = a.order() * b.order();
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            table[u * n + v] = static_cast<std::uint16_t>(a.mul(u / b.order(), v / b.order()) * b.order() +
                                                          b.mul(u % b.order(), v % b.order()));
    std::vector<NamedGenerator> gens;
    for (const auto& g : a.generators()) gens.push_back({"a" + g.name, g.element * b.order()});
    for (const auto& g : b.generators()) gens.push_back({g.name, g.element});
    if (label.empty()) label = a.label() + "x" + b.label();
    return std::make_shared<Group>(label, n, std::move(table), std::move(gens));
}

inline GroupPtr elementary_abelian(int rank) {
    if (rank < 1 || rank > 6) throw std::invalid_argument("elementary_abelian: rank out of range");
    const std::size_t n = std::size_t{1} << rank;
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) table[u * n + v] = static_cast<std::uint16_t>(u ^ v);
    std::vector<NamedGenerator> gens;
    for (int i = 0; i < rank; ++i) gens.push_back({"e" + std::to_string(i + 1), std::size_t{1} << i});
    return std::make_shared<Group>("E" + std::to_string(n), n, std::move(table), std::move(gens));
}

// Closure of matrix generators; elements are discovered breadth first by right multiplication,
// generators taken in the given order.
inline GroupPtr group_from_matrix_generators(const std::vector<F2Matrix>& gens, const std::vector<std::string>& names,
                                             std::size_t size_cap = 4096, std::string label = "matrix-group") {
    if (gens.empty()) throw std::invalid_argument("group_from_matrix_generators: no generators");
    const std::size_t dim = gens.front().rows();
    for (const auto& g : gens) {
        if (g.rows() != dim || g.cols() != dim) throw std::invalid_argument("group_from_matrix_generators: generators must be square of equal size");
        if (rank(g) != dim) throw std::invalid_argument("group_from_matrix_generators: singular generator");
    }
    if (names.size() != gens.size()) throw std::invalid_argument("group_from_matrix_generators: one name per generator required");
    std::vector<F2Matrix> elems{F2Matrix::identity(dim)};
    std::unordered_map<F2Matrix, std::size_t, F2MatrixHash> index{{elems[0], 0}};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : gens) {
            F2Matrix p = elems[i] * g;
            if (index.count(p)) continue;
            if (elems.size() >= size_cap) throw std::runtime_error("group_from_matrix_generators: closure exceeds size cap " + std::to_string(size_cap));
            index.emplace(p, elems.size());
            elems.push_back(std::move(p));
        }
    const std::size_t n = elems.size();
    if (n > 65535) throw std::runtime_error("group_from_matrix_generators: group too large");
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<std::uint16_t>(index.at(elems[a] * elems[b]));
    std::vector<NamedGenerator> named;
    for (std::size_t i = 0; i < gens.size(); ++i) named.push_back({names[i], index.at(gens[i])});
    return std::make_shared<Group>(std::move(label), n, std::move(table), std::move(named), std::nullopt, std::move(elems));
}

// Homomorphism G -> F2 from its values on the named generators; throws if inconsistent.
inline std::vector<std::uint8_t> hom_from_generator_values(const Group& g, const std::vector<std::uint8_t>& values) {
    const auto& gens = g.generators();
    if (values.size() != gens.size()) throw std::invalid_argument("hom_from_generator_values: one value per generator required");
    std::vector<int> val(g.order(), -1);
    val[0] = 0;
    std::deque<Element> queue{0};
    while (!queue.empty()) {
        const Element a = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < gens.size(); ++j) {
            const Element b = g.mul(a, gens[j].element);
            const int v = val[a] ^ (values[j] & 1);
            if (val[b] < 0) { val[b] = v; queue.push_back(b); }
            else if (val[b] != v) throw std::invalid_argument("hom_from_generator_values: values do not define a homomorphism");
        }
    }
    std::vector<std::uint8_t> out(g.order());
    for (Element a = 0; a < g.order(); ++a) {
        if (val[a] < 0) throw std::invalid_argument("hom_from_generator_values: generators do not generate");
        out[a] = static_cast<std::uint8_t>(val[a]);
    }
    return out;
}

struct MaxClassTag {
    enum class Kind { Dihedral, Quaternion, Semidihedral, Cyclic, ElementaryAbelian, Other };
    Kind kind = Kind::Other;
    int n = 0;
    std::optional<std::array<Element, 2>> witness;  // (a, b) satisfying the defining relations
    std::map<std::uint64_t, std::size_t> histogram;

    std::optional<FamilySpec> spec() const {
        switch (kind) {
            case Kind::Dihedral: return FamilySpec{Family::Dihedral, n};
            case Kind::Quaternion: return FamilySpec{Family::Quaternion, n};
            case Kind::Semidihedral: return FamilySpec{Family::Semidihedral, n};
            case Kind::Cyclic: return FamilySpec{Family::Cyclic, n};
            default: return std::nullopt;
        }
    }
};

inline std::string to_string(const MaxClassTag& t) {
    switch (t.kind) {
        case MaxClassTag::Kind::Dihedral: return "Dihedral(" + std::to_string(t.n) + ")";
        case MaxClassTag::Kind::Quaternion: return "Quaternion(" + std::to_string(t.n) + ")";
        case MaxClassTag::Kind::Semidihedral: return "Semidihedral(" + std::to_string(t.n) + ")";
        case MaxClassTag::Kind::Cyclic: return "Cyclic(" + std::to_string(t.n) + ")";
        case MaxClassTag::Kind::ElementaryAbelian: return "ElementaryAbelian(" + std::to_string(t.n) + ")";
        case MaxClassTag::Kind::Other: break;
    }
    std::string s = "Other(";
    bool first = true;
    for (auto [o, c] : t.histogram) {
        if (!first) s += ",";
        s += std::to_string(o) + ":" + std::to_string(c);
        first = false;
    }
    return s + ")";
}

// Recognises 2-groups of maximal class, cyclic and elementary abelian 2-groups up to order 128.
// A positive answer for the three maximal class families carries a generating pair (a, b) with
// a of order 2^(n-1) and b satisfying the family's relations.
inline MaxClassTag classify_maxclass(const Group& g) {
    if (g.order() > 128) throw std::invalid_argument("classify_maxclass: order above 128");
    MaxClassTag tag;
    tag.histogram = order_histogram(g);
    if (!std::has_single_bit(g.order())) return tag;
    const int n = std::countr_zero(g.order());
    const std::uint64_t top = tag.histogram.rbegin()->first;
    if (top == g.order()) {
        for (Element a = 0; a < g.order(); ++a)
            if (element_order(g, a) == g.order()) { tag.witness = std::array<Element, 2>{a, 0}; break; }
        tag.kind = MaxClassTag::Kind::Cyclic;
        tag.n = n;
        return tag;
    }
    if (top <= 2) {
        tag.kind = MaxClassTag::Kind::ElementaryAbelian;
        tag.n = n;
        return tag;
    }
    if (n < 3 || top != g.order() / 2) return tag;
    const std::size_t involutions = tag.histogram.count(2) ? tag.histogram.at(2) : 0;
    const std::uint64_t m = g.order() / 2;
    struct Candidate { MaxClassTag::Kind kind; std::uint64_t r; std::uint64_t square; };
    std::vector<Candidate> candidates;
    if (involutions == m + 1) candidates.push_back({MaxClassTag::Kind::Dihedral, m - 1, 0});
    if (n >= 4 && involutions == m / 2 + 1) candidates.push_back({MaxClassTag::Kind::Semidihedral, m / 2 - 1, 0});
    if (involutions == 1) candidates.push_back({MaxClassTag::Kind::Quaternion, m - 1, m / 2});
    for (const auto& c : candidates)
        for (Element a = 0; a < g.order(); ++a) {
            if (element_order(g, a) != m) continue;
            std::vector<bool> in_a(g.order(), false);
            for (Element p = 0, k = 0; k < m; ++k, p = g.mul(p, a)) in_a[p] = true;
            const Element target_sq = g.pow(a, c.square);
            const Element target_conj = g.pow(a, c.r);
            for (Element b = 0; b < g.order(); ++b) {
                if (in_a[b]) continue;
                if (g.mul(b, b) != target_sq) continue;
                if (g.conjugate(b, a) != target_conj) continue;
                tag.kind = c.kind;
                tag.n = n;
                tag.witness = std::array<Element, 2>{a, b};
                return tag;
            }
        }
    return tag;
}

}  // namespace f2coh
