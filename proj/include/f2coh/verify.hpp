#pragma once

#include <bit>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "f2coh/appendix_b.hpp"
#include "f2coh/dwyer.hpp"
#include "f2coh/massey.hpp"
#include "f2coh/maxclass.hpp"
#include "f2coh/named_basis.hpp"
#include "f2coh/relations.hpp"
#include "f2coh/report.hpp"
#include "f2coh/resolution.hpp"

namespace f2coh {

using ResolutionSource = std::function<ResolutionPtr(const GroupPtr&, const std::string& builder, int window)>;

inline ResolutionSource direct_source() {
    return [](const GroupPtr& g, const std::string& b, int w) { return build_resolution(g, b, w); };
}

inline std::string names_of(const NamedCohomology& nc, const std::vector<CohClass>& cs) {
    std::string s = "{";
    for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? ", " : "") + nc.name(cs[i]);
    return s + "}";
}

inline std::vector<CohClass> classes_of(const NamedCohomology& nc, const std::vector<std::string>& names) {
    std::vector<CohClass> out;
    for (const auto& n : names) out.push_back(nc.evaluate(n));
    return out;
}

inline bool same_set(std::vector<CohClass> a, std::vector<CohClass> b) {
    std::set<CohClass> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    return sa == sb;
}

inline ReportItems verify_appendix_a_scope(int lo, int hi) {
    ReportItems items;
    for (int n = lo; n <= hi; ++n) append(items, verify_appendix_a(n));
    bool closed = true, pattern = true;
    std::string first_bad;
    for (std::size_t m = 1; m <= 33; ++m) {
        const auto o = order_of_B(m);
        if (o.order != std::bit_ceil(m) && first_bad.empty()) first_bad = "m=" + std::to_string(m);
        closed = closed && o.order == std::bit_ceil(m);
        pattern = pattern && o.pattern_ok;
    }
    items.push_back(make_item("orderB(a) m=1..33", "superdiagonal B of size m has order 2^ceil(log2 m)", closed, first_bad));
    items.push_back(make_item("orderB(b) m=1..33", "B^(2^l) = Id + ones at distance 2^l", pattern));
    for (std::size_t m = 1; m <= 4; ++m) {
        const auto best = min_degree_scan(m);
        items.push_back(make_item("minima GL" + std::to_string(m), "largest 2-power element order in GL_m(F2) is 2^ceil(log2 m)",
                                  best == std::bit_ceil(m), "found " + std::to_string(best)));
    }
    return items;
}

inline ReportItems verify_appendix_b_scope(int lo, int hi, const ResolutionSource& source, int window = 10) {
    ReportItems items;
    for (int n = lo; n <= hi; ++n) {
        if (n >= 3 && n <= 6) {
            append(items, verify_quaternion_algebra(n));
            const auto g = make_group(Family::Quaternion, n);
            NamedCohomology nc(make_complex(source(g, "quaternion", window)));
            append(items, verify_printed_representatives(nc));
        }
        if (n >= 4 && n <= 6) {
            append(items, verify_semidihedral_algebra(n));
            const auto g = make_group(Family::Semidihedral, n);
            NamedCohomology nc(make_complex(source(g, "semidihedral", window)));
            append(items, verify_printed_representatives(nc));
        }
    }
    return items;
}

namespace detail {

inline ReportItem massey_item(const NamedCohomology& nc, const std::vector<std::string>& args, const std::vector<std::string>& expected) {
    const auto vs = massey_value_set(classes_of(nc, args));
    std::string label = "<";
    for (std::size_t i = 0; i < args.size(); ++i) label += (i ? "," : "") + args[i];
    label += "> " + to_string(nc.spec());
    std::string want = "{";
    for (std::size_t i = 0; i < expected.size(); ++i) want += (i ? ", " : "") + expected[i];
    want += "}";
    const bool ok = vs.defined && same_set(vs.values, classes_of(nc, expected));
    return make_item(label, label.substr(0, label.find(' ')) + " = " + want, ok,
                     "found " + names_of(nc, vs.values) + " over " + std::to_string(vs.systems) + " systems");
}

// Does any Massey product of degree-one classes of length 2..max_len contain one of the targets?
inline std::optional<std::string> short_product_hit(const ComplexPtr& cx, const NamedCohomology& nc, std::size_t max_len,
                                                    const std::vector<CohClass>& targets) {
    const auto h1 = cohomology_basis(cx, 1);
    std::vector<CohClass> all{CohClass::zero(cx, 1)};
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << h1.size()); ++mask) {
        CohClass c = CohClass::zero(cx, 1);
        for (std::size_t k = 0; k < h1.size(); ++k) if ((mask >> k) & 1u) c += h1[k];
        all.push_back(c);
    }
    for (std::size_t len = 2; len <= max_len; ++len) {
        std::vector<std::size_t> idx(len, 0);
        while (true) {
            std::vector<CohClass> args;
            for (auto i : idx) args.push_back(all[i]);
            for (const auto& v : massey1_value_set(cx, hom_with_near_diagonal(args, HomSearchMode::Exhaustive)))
                for (const auto& t : targets)
                    if (v == t) return names_of(nc, args) + " contains " + nc.name(v);
            std::size_t p = 0;
            while (p < len && ++idx[p] == all.size()) idx[p++] = 0;
            if (p == len) break;
        }
    }
    return std::nullopt;
}

}  // namespace detail

inline ReportItems verify_massey_scope(int lo, int hi, const ResolutionSource& source, int window = 10) {
    ReportItems items;
    for (int n = lo; n <= hi; ++n) {
        const std::uint64_t half = std::uint64_t{1} << (n - 1);
        if (n >= 3 && n <= 6) {
            const auto g = make_group(Family::Dihedral, n);
            const auto cx = make_complex(source(g, default_builder(*g), std::min(window, 6)));
            NamedCohomology nc(cx);
            const std::string grp = " D" + std::to_string(1u << n);
            const auto args = classes_of(nc, [&] {
                std::vector<std::string> a;
                for (std::uint64_t i = 0; i < half; ++i) a.push_back(i % 2 ? "X+Y" : "X");
                return a;
            }());
            const std::vector<std::pair<std::string, MaxClassTag::Kind>> want{
                {"W", MaxClassTag::Kind::Dihedral}, {"W+Y2", MaxClassTag::Kind::Quaternion}, {"W+X2", MaxClassTag::Kind::Semidihedral}};
            const auto homs = hom_with_near_diagonal(args, HomSearchMode::Witness);
            for (std::size_t k = 0; k < homs.size() && k < want.size(); ++k) {
                const auto ext = pullback_extension(homs[k]);
                const auto tag = classify_maxclass(*ext.extension);
                const auto value = massey1_value(cx, homs[k]);
                const bool ok = tag.kind == want[k].second && tag.n == n + 1 && value == nc.evaluate(want[k].first);
                items.push_back(make_item("ProdD(b) " + homs[k].origin + grp,
                                          "witness pulls back to the family member of order 2^(n+1) with class " + want[k].first, ok,
                                          to_string(tag) + ", value " + nc.name(value)));
            }
            if (n == 3) {
                const auto miss = detail::short_product_hit(cx, nc, half - 1, classes_of(nc, {"W", "W+Y2", "W+X2"}));
                items.push_back(make_item("ProdD(a)" + grp + " search-proved",
                                          "W, W+Y2, W+X2 lie in no degree-one product of length < 2^(n-1)", !miss, miss.value_or("lengths 2..3 exhausted")));
            }
        }
        for (Family f : {Family::Dihedral, Family::Quaternion, Family::Semidihedral}) {
            const FamilySpec spec{f, n};
            if (!valid_spec(spec) || n < 3 || n > 6) continue;
            const auto g = make_group(spec);
            const std::string grp = " " + to_string(spec);
            const auto tables = alternating_tables(*g, half + 1);
            const auto ob = order_obstruction(*g, tables);
            items.push_back(make_item("ProdG(b)" + grp + " obstruction-proved",
                                      "<X,X+Y,...> of length 2^(n-1)+1 is not defined", ob.has_value(),
                                      ob ? "run of length " + std::to_string(ob->length) + " forces order " + std::to_string(ob->forced_order) +
                                               " on an element of order " + std::to_string(ob->element_order)
                                         : "no certificate"));
            if (n == 3 && f != Family::Semidihedral) {
                const auto cx = make_complex(source(g, default_builder(*g), std::min(window, 6)));
                NamedCohomology nc(cx);
                std::vector<std::string> names;
                for (std::uint64_t i = 0; i < half; ++i) names.push_back(i % 2 ? "X+Y" : "X");
                const auto args = classes_of(nc, names);
                const auto values = massey1_value_set(cx, hom_with_near_diagonal(args, HomSearchMode::Exhaustive));
                bool has_zero = false;
                for (const auto& v : values) has_zero = has_zero || v.is_zero();
                const bool nonempty_expected = f == Family::Dihedral;
                items.push_back(make_item("ProdG(a)" + grp + " search-proved", "<X,X+Y,X,X+Y> does not contain 0",
                                          !has_zero && (!nonempty_expected || !values.empty()), "values " + names_of(nc, values)));
                if (f == Family::Dihedral) {
                    const auto ds = massey_value_set(args);
                    items.push_back(make_item("Dwyer cross-check" + grp, "defining systems and homomorphisms give the same values",
                                              same_set(ds.values, values), "defining systems " + names_of(nc, ds.values)));
                    auto longer = args;
                    longer.push_back(nc.evaluate("X"));
                    const auto homs5 = hom_with_near_diagonal(longer, HomSearchMode::Exhaustive);
                    items.push_back(make_item("ProdG(b)" + grp + " search-proved", "<X,X+Y,X,X+Y,X> is not defined", homs5.empty(),
                                              std::to_string(homs5.size()) + " homomorphisms"));
                }
            }
        }
        if (n >= 3 && n <= 6) {
            const auto g = make_group(Family::Quaternion, n);
            NamedCohomology nc(make_complex(source(g, default_builder(*g), window)));
            items.push_back(detail::massey_item(nc, {"Y", "Y2", "Y", "Y2"}, {"V"}));
        }
        if (n >= 4 && n <= 6) {
            const auto g = make_group(Family::Semidihedral, n);
            NamedCohomology nc(make_complex(source(g, default_builder(*g), window)));
            items.push_back(detail::massey_item(nc, {"X", "X2", "Y"}, {"U", "U+Y3"}));
            items.push_back(detail::massey_item(nc, {"X", "X2", "X", "X2"}, {"V", "V+YU"}));
        }
    }
    return items;
}

}  // namespace f2coh
