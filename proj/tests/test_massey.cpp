#include <gtest/gtest.h>

#include "f2coh/bar_comparison.hpp"
#include "f2coh/dwyer.hpp"
#include "f2coh/massey.hpp"
#include "f2coh/verify.hpp"
#include "support/fixtures.hpp"

using namespace f2coh;
using fixtures::named;

namespace {

std::vector<CohClass> args(const NamedCohomology& nc, const std::vector<std::string>& names) { return classes_of(nc, names); }

std::vector<CohClass> alternating(const NamedCohomology& nc, std::size_t len) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < len; ++i) names.push_back(i % 2 ? "X+Y" : "X");
    return classes_of(nc, names);
}

}  // namespace

TEST(DefiningSystem, QuaternionFourFold) {
    const auto& nc = named("Q16");
    const auto a = args(nc, {"Y", "Y2", "Y", "Y2"});
    const auto ds = build_defining_system(a);
    ASSERT_TRUE(ds);
    EXPECT_TRUE(check_defining_system(*ds));
    EXPECT_EQ(ds->value_degree(), 4);
    EXPECT_EQ(nc.name(massey_value(*ds)), "V");
    const auto vs = massey_value_set(a);
    EXPECT_TRUE(vs.defined);
    EXPECT_TRUE(same_set(vs.values, args(nc, {"V"})));
}

TEST(DefiningSystem, CyclicOfOrderTwoTripleIsNotDefined) {
    const auto& nc = named("C2");
    const auto x = nc.generator("X");
    EXPECT_FALSE(build_defining_system({x, x, x}));
    const auto vs = massey_value_set({x, x, x});
    EXPECT_FALSE(vs.defined);
    EXPECT_TRUE(vs.values.empty());
    EXPECT_GT(vs.obstructed, 0u);
}

TEST(DefiningSystem, SemidihedralTriple) {
    const auto& nc = named("SD16");
    const auto ds = build_defining_system(args(nc, {"X", "X2", "Y"}));
    ASSERT_TRUE(ds);
    EXPECT_TRUE(check_defining_system(*ds));
    const auto v = massey_value(*ds);
    EXPECT_EQ(v.degree(), 3);
    const auto allowed = args(nc, {"U", "U+Y3"});
    EXPECT_NE(std::find(allowed.begin(), allowed.end(), v), allowed.end()) << nc.name(v);
}

TEST(DefiningSystem, ZeroArgumentsGiveZero) {
    const auto& nc = named("D8");
    const auto z = CohClass::zero(nc.complex(), 1);
    const auto ds = build_defining_system({z, z, z});
    ASSERT_TRUE(ds);
    EXPECT_TRUE(massey_value(*ds).is_zero());
}

TEST(DefiningSystem, ShapeValidation) {
    const auto& nc = named("Q16");
    EXPECT_THROW(DefiningSystem(nc.complex(), {1}), std::invalid_argument);
    EXPECT_THROW(DefiningSystem(nc.complex(), {1, 0}), std::invalid_argument);
    DefiningSystem ds(nc.complex(), {1, 2, 1});
    EXPECT_EQ(ds.entry_degree(1, 3), 2);
    EXPECT_EQ(ds.value_degree(), 3);
    EXPECT_THROW(ds.set(1, 4, Cochain::zero(nc.complex(), 3, 1)), std::invalid_argument);
    EXPECT_THROW(ds.set(1, 2, Cochain::zero(nc.complex(), 2, 1)), std::invalid_argument);
    EXPECT_THROW(ds.entry(1, 2), std::out_of_range);
    EXPECT_THROW(massey_value_set({nc.generator("X")}), std::invalid_argument);
}

TEST(DefiningSystem, DegreeLaw) {
    const auto& nc = named("SD16");
    for (const auto& names : std::vector<std::vector<std::string>>{{"X", "Y"}, {"X", "X2", "Y"}, {"Y", "X", "Y"}, {"X", "X2", "X", "X2"}}) {
        const auto a = args(nc, names);
        int want = 0;
        for (const auto& c : a) want += c.degree();
        want -= static_cast<int>(a.size()) - 2;
        const auto vs = massey_value_set(a);
        for (const auto& v : vs.values) EXPECT_EQ(v.degree(), want);
    }
}

// The four-fold product on the semidihedral group of order 16 and larger, compared with the
// value set {V, V+YU} as stated.
TEST(ValueSet, SemidihedralFourFoldAsStated) {
    for (const auto* label : {"SD16", "SD32"}) {
        const auto& nc = named(label);
        const auto vs = massey_value_set(args(nc, {"X", "X2", "X", "X2"}));
        EXPECT_TRUE(vs.defined);
        EXPECT_TRUE(same_set(vs.values, args(nc, {"V", "V+YU"}))) << label << ": found " << names_of(nc, vs.values);
    }
}

TEST(ValueSet, SemidihedralTripleIsACosetOfTheIndeterminacy) {
    const auto& nc = named("SD16");
    const auto vs = massey_value_set(args(nc, {"X", "X2", "Y"}));
    EXPECT_TRUE(same_set(vs.values, args(nc, {"U", "U+Y3"})));
    const auto ind = triple_indeterminacy(nc.generator("X"), nc.generator("Y"), 2);
    ASSERT_EQ(ind.size(), vs.values.size());
    for (const auto& i : ind)
        EXPECT_NE(std::find(vs.values.begin(), vs.values.end(), vs.values.front() + i), vs.values.end());
}

TEST(ValueSet, TripleIndeterminacyExamples) {
    const auto& sd = named("SD16");
    EXPECT_TRUE(same_set(triple_indeterminacy(sd.generator("X"), sd.generator("Y"), 2), {sd.evaluate("0", 3), sd.evaluate("Y3")}));
    const auto& q = named("Q16");
    const auto y = q.generator("Y");
    // Y·H^2 = {0, Y·X^2} and X^2·Y = XY^2 spans H^3
    EXPECT_TRUE(same_set(triple_indeterminacy(y, y, 2), {q.evaluate("0", 3), q.evaluate("XY2")}));
    EXPECT_TRUE(same_set(triple_indeterminacy(y, y, 1), {q.evaluate("0", 2), q.evaluate("XY"), q.evaluate("Y2"), q.evaluate("XY+Y2")}));
    const auto& c2 = named("C2");
    const auto x = c2.generator("X");
    EXPECT_EQ(triple_indeterminacy(x, x, 1).size(), 2u);
}

TEST(ValueSet, SampledPolicyNeverEnlargesTheSet) {
    for (const auto& [label, names] : std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"SD16", {"X", "X2", "Y"}}, {"Q16", {"Y", "Y2", "Y", "Y2"}}, {"D8", {"X", "X+Y", "X"}}}) {
        const auto& nc = named(label);
        const auto base = massey_value_set(args(nc, names));
        for (std::uint64_t seed : {1u, 7u, 99u}) {
            ValueSetOptions opt;
            opt.policy = EnumerationPolicy::SampledCoboundaries;
            opt.seed = seed;
            const auto sampled = massey_value_set(args(nc, names), opt);
            EXPECT_TRUE(same_set(sampled.values, base.values)) << label << " seed " << seed;
        }
    }
}

TEST(Dwyer, DihedralCrossValidation) {
    const auto& nc = named("D8", 6);
    for (std::size_t len : {2u, 3u, 4u}) {
        const auto a = alternating(nc, len);
        const auto ds = massey_value_set(a);
        const auto homs = hom_with_near_diagonal(a, HomSearchMode::Exhaustive);
        EXPECT_EQ(ds.defined, !homs.empty()) << len;
        EXPECT_TRUE(same_set(ds.values, massey1_value_set(nc.complex(), homs))) << len;
    }
}

TEST(Dwyer, FourFoldDihedralAndQuaternion) {
    const auto& d8 = named("D8", 6);
    const auto dv = massey1_value_set(d8.complex(), hom_with_near_diagonal(alternating(d8, 4), HomSearchMode::Exhaustive));
    EXPECT_TRUE(same_set(dv, args(d8, {"W", "W+X2", "W+Y2", "W+X2+Y2"}))) << names_of(d8, dv);

    const auto& q8 = named("Q8", 6);
    // X(X+Y) = Y^2 is nonzero, so the inner triple products are not defined
    EXPECT_FALSE(cup(q8.generator("X"), q8.evaluate("X+Y")).is_zero());
    EXPECT_EQ(cup(q8.generator("X"), q8.evaluate("X+Y")), q8.evaluate("Y2"));
    EXPECT_TRUE(hom_with_near_diagonal(alternating(q8, 4), HomSearchMode::Exhaustive).empty());
    EXPECT_FALSE(massey_value_set(alternating(q8, 4)).defined);
}

TEST(Dwyer, WitnessHomomorphisms) {
    for (int n : {3, 4}) {
        const std::string label = "D" + std::to_string(1 << n);
        const auto& nc = named(label, 6);
        const auto homs = hom_with_near_diagonal(alternating(nc, std::size_t{1} << (n - 1)), HomSearchMode::Witness);
        ASSERT_EQ(homs.size(), 3u) << label;
        const std::vector<std::pair<std::string, MaxClassTag::Kind>> want{
            {"W", MaxClassTag::Kind::Dihedral}, {"W+Y2", MaxClassTag::Kind::Quaternion}, {"W+X2", MaxClassTag::Kind::Semidihedral}};
        for (std::size_t k = 0; k < 3; ++k) {
            const auto tag = classify_maxclass(*pullback_extension(homs[k]).extension);
            EXPECT_EQ(tag.kind, want[k].second) << label;
            EXPECT_EQ(tag.n, n + 1);
            EXPECT_EQ(massey1_value(nc.complex(), homs[k]), nc.evaluate(want[k].first)) << label << " " << homs[k].origin;
        }
    }
}

TEST(Dwyer, CyclicOfOrderFourTriple) {
    const auto& nc = named("C4", 6);
    const auto x = nc.generator("X");
    const auto homs = hom_with_near_diagonal({x, x, x}, HomSearchMode::Exhaustive);
    EXPECT_FALSE(homs.empty());
    EXPECT_TRUE(massey_value_set({x, x, x}).defined);
}

TEST(Dwyer, OrderObstruction) {
    for (int n = 3; n <= 6; ++n) {
        for (Family f : {Family::Dihedral, Family::Quaternion, Family::Semidihedral}) {
            if (!valid_spec({f, n})) continue;
            const auto g = make_group(f, n);
            const std::size_t half = std::size_t{1} << (n - 1);
            const auto ob = order_obstruction(*g, alternating_tables(*g, half + 1));
            ASSERT_TRUE(ob) << to_string(FamilySpec{f, n});
            EXPECT_GT(ob->forced_order, ob->element_order);
            EXPECT_FALSE(order_obstruction(*g, alternating_tables(*g, 2)));
        }
    }
    const auto& d8 = named("D8", 6);
    EXPECT_TRUE(hom_with_near_diagonal(alternating(d8, 5), HomSearchMode::Exhaustive).empty());
}

TEST(Dwyer, RejectsHigherDegreeClasses) {
    const auto& nc = named("Q16");
    EXPECT_THROW(hom_with_near_diagonal({nc.generator("X"), nc.evaluate("Y2")}, HomSearchMode::Exhaustive), std::invalid_argument);
}

TEST(Transport, DihedralFamilyExtension) {
    const auto& d8 = named("D8", 6);
    const auto ext = family_extension(make_group(Family::Dihedral, 4), *d8.complex()->group());
    EXPECT_EQ(d8.name(transport_extension_class(d8.complex(), ext)), "W");
}

TEST(Transport, SplitExtensionIsZero) {
    for (const auto* label : {"D8", "Q8"}) {
        const auto& nc = named(label, 6);
        const auto& g = *nc.complex()->group();
        auto e = direct_product(*make_group(Family::Cyclic, 1), g);
        std::vector<Element> proj(e->order());
        for (Element u = 0; u < e->order(); ++u) proj[u] = u % g.order();
        EXPECT_TRUE(transport_extension_class(nc.complex(), extension_from_projection(e, proj)).is_zero()) << label;
    }
}

TEST(Transport, QuaternionOverKleinFour) {
    const auto& d4 = named("D4", 6);
    const auto q8 = make_group(Family::Quaternion, 3);
    // x^a z^e -> x^(a mod 2) y^e
    std::vector<Element> proj(q8->order());
    for (Element u = 0; u < q8->order(); ++u) proj[u] = (u / 4) * 2 + (u % 4) % 2;
    const auto c = transport_extension_class(d4.complex(), extension_from_projection(q8, proj));
    EXPECT_EQ(c, d4.evaluate("X2+XY+Y2"));
}
