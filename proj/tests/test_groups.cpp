#include <gtest/gtest.h>

#include "f2coh/central_extension.hpp"
#include "f2coh/group.hpp"
#include "f2coh/maxclass.hpp"

using namespace f2coh;

namespace {

std::vector<FamilySpec> family_members(int max_n) {
    std::vector<FamilySpec> out;
    for (Family f : {Family::Dihedral, Family::Quaternion, Family::Semidihedral, Family::Cyclic})
        for (int n = 1; n <= max_n; ++n)
            if (valid_spec({f, n})) out.push_back({f, n});
    return out;
}

std::size_t involutions(const Group& g) {
    std::size_t k = 0;
    for (Element a = 1; a < g.order(); ++a) k += element_order(g, a) == 2;
    return k;
}

}  // namespace

TEST(Presentations, DihedralInversion) {
    const auto g = make_group(Family::Dihedral, 3);
    EXPECT_EQ(g->order(), 8u);
    const Element x = g->generator("x"), y = g->generator("y");
    EXPECT_EQ(g->conjugate(y, x), g->inverse(x));
    EXPECT_EQ(g->mul(y, y), g->identity());
    EXPECT_EQ(element_order(*g, x), 4u);
}

TEST(Presentations, QuaternionHasOneInvolution) {
    const auto g = make_group(Family::Quaternion, 3);
    EXPECT_EQ(involutions(*g), 1u);
    const Element x = g->generator("x"), z = g->generator("z");
    EXPECT_EQ(g->mul(z, z), g->pow(x, 2));
    EXPECT_EQ(g->conjugate(z, x), g->inverse(x));
}

TEST(Presentations, SemidihedralConjugation) {
    const auto g = make_group(Family::Semidihedral, 4);
    const Element x = g->generator("x"), t = g->generator("t");
    EXPECT_EQ(g->conjugate(t, x), g->pow(x, 3));
    EXPECT_EQ(g->mul(t, t), g->identity());
}

TEST(Presentations, OutOfRangeParametersAreRejected) {
    EXPECT_THROW(make_group(Family::Dihedral, 1), std::invalid_argument);
    EXPECT_THROW(make_group(Family::Quaternion, 2), std::invalid_argument);
    EXPECT_THROW(make_group(Family::Semidihedral, 3), std::invalid_argument);
}

TEST(Presentations, AxiomsAndRelationsForEveryMember) {
    for (const auto& s : family_members(6)) {
        SCOPED_TRACE(to_string(s));
        const auto g = make_group(s);
        EXPECT_EQ(g->order(), std::size_t{1} << s.n);
        EXPECT_FALSE(check_group_axioms(*g));
        for (Element a = 0; a < g->order(); ++a) EXPECT_EQ(g->mul(a, g->inverse(a)), g->identity());
        const Element x = g->generator("x");
        const std::uint64_t m = s.family == Family::Cyclic ? g->order() : g->order() / 2;
        EXPECT_EQ(element_order(*g, x), m);
        if (s.family == Family::Cyclic) continue;
        const Element u = g->generators()[1].element;
        const std::uint64_t r = s.family == Family::Semidihedral ? m / 2 - 1 : m - 1;
        EXPECT_EQ(g->conjugate(u, x), g->pow(x, r));
        EXPECT_EQ(g->mul(u, u), s.family == Family::Quaternion ? g->pow(x, m / 2) : g->identity());
    }
}

TEST(Presentations, ElementIndexingIsNormalForm) {
    const auto g = make_group(Family::Dihedral, 4);
    const Element x = g->generator("x"), y = g->generator("y");
    for (std::uint64_t a = 0; a < 8; ++a) {
        EXPECT_EQ(g->pow(x, a), a);
        EXPECT_EQ(g->mul(g->pow(x, a), y), 8 + a);
    }
}

TEST(ElementOrder, Examples) {
    const auto d16 = make_group(Family::Dihedral, 4);
    EXPECT_EQ(element_order(*d16, d16->identity()), 1u);
    EXPECT_EQ(element_order(*d16, d16->generator("x")), 8u);
    EXPECT_EQ(matrix_order(build_appendix_a(3).x), 16u);
}

TEST(Classification, RoundTripForEveryMember) {
    for (const auto& s : family_members(6)) {
        SCOPED_TRACE(to_string(s));
        const auto tag = classify_maxclass(*make_group(s));
        if (s == FamilySpec{Family::Dihedral, 2}) {
            EXPECT_EQ(tag.kind, MaxClassTag::Kind::ElementaryAbelian);
            EXPECT_EQ(tag.n, 2);
            continue;
        }
        if (s == FamilySpec{Family::Cyclic, 1}) {
            EXPECT_TRUE(tag.kind == MaxClassTag::Kind::Cyclic || tag.kind == MaxClassTag::Kind::ElementaryAbelian);
            continue;
        }
        ASSERT_TRUE(tag.spec());
        EXPECT_EQ(*tag.spec(), s);
    }
}

TEST(Classification, InvolutionCounts) {
    for (int n = 3; n <= 6; ++n) {
        EXPECT_EQ(involutions(*make_group(Family::Dihedral, n)), (std::size_t{1} << (n - 1)) + 1);
        EXPECT_EQ(involutions(*make_group(Family::Quaternion, n)), 1u);
        if (n >= 4) EXPECT_EQ(involutions(*make_group(Family::Semidihedral, n)), (std::size_t{1} << (n - 2)) + 1);
    }
}

TEST(Classification, WitnessSatisfiesRelations) {
    const auto g = make_group(Family::Semidihedral, 5);
    const auto tag = classify_maxclass(*g);
    ASSERT_TRUE(tag.witness);
    const auto [a, b] = *tag.witness;
    EXPECT_EQ(element_order(*g, a), 16u);
    EXPECT_EQ(g->conjugate(b, a), g->pow(a, 7));
    EXPECT_EQ(g->mul(b, b), g->identity());
}

TEST(Classification, KleinFourGroup) {
    const auto c2 = make_group(Family::Cyclic, 1);
    const auto k = direct_product(*c2, *c2);
    const auto tag = classify_maxclass(*k);
    EXPECT_EQ(tag.kind, MaxClassTag::Kind::ElementaryAbelian);
    EXPECT_EQ(tag.n, 2);
}

TEST(Classification, OtherCarriesHistogram) {
    const auto g = direct_product(*make_group(Family::Cyclic, 2), *make_group(Family::Cyclic, 1));
    const auto tag = classify_maxclass(*g);
    EXPECT_EQ(tag.kind, MaxClassTag::Kind::Other);
    EXPECT_EQ(tag.histogram, order_histogram(*g));
}

TEST(MatrixGroups, IdentityGeneratesTrivialGroup) {
    const auto g = group_from_matrix_generators({F2Matrix::identity(3)}, {"e"});
    EXPECT_EQ(g->order(), 1u);
}

TEST(MatrixGroups, SmallestRepresentationsGiveD8) {
    const auto a = build_appendix_a(1);
    const auto g = group_from_matrix_generators({a.x, a.y}, {"x", "y"});
    EXPECT_EQ(g->order(), 8u);
    const auto tag = classify_maxclass(*g);
    EXPECT_EQ(tag.kind, MaxClassTag::Kind::Dihedral);
    EXPECT_EQ(tag.n, 3);
}

TEST(MatrixGroups, SemidihedralClosures) {
    for (int n : {2, 3}) {
        const auto a = build_appendix_a(n);
        ASSERT_TRUE(a.t);
        const auto tag = classify_maxclass(*group_from_matrix_generators({a.x, *a.t}, {"x", "t"}));
        EXPECT_EQ(tag.kind, MaxClassTag::Kind::Semidihedral);
        EXPECT_EQ(tag.n, n + 2);
    }
}

TEST(MatrixGroups, QuaternionClosure) {
    const auto a = build_appendix_a(3);
    const auto tag = classify_maxclass(*group_from_matrix_generators({a.x, *a.z}, {"x", "z"}));
    EXPECT_EQ(tag.kind, MaxClassTag::Kind::Quaternion);
    EXPECT_EQ(tag.n, 5);
}

TEST(MatrixGroups, SuperdiagonalMatrixGeneratesCyclicGroup) {
    const auto g = group_from_matrix_generators({superdiagonal_matrix(4)}, {"b"});
    EXPECT_EQ(g->order(), 4u);
    const auto tag = classify_maxclass(*g);
    EXPECT_EQ(tag.kind, MaxClassTag::Kind::Cyclic);
    EXPECT_EQ(tag.n, 2);
}

TEST(MatrixGroups, BreadthFirstOrderAndCap) {
    const auto a = build_appendix_a(2);
    const auto g = group_from_matrix_generators({a.x, a.y}, {"x", "y"});
    ASSERT_EQ(g->matrices().size(), g->order());
    EXPECT_EQ(g->matrices()[0], F2Matrix::identity(5));
    EXPECT_EQ(g->matrices()[1], a.x);
    EXPECT_EQ(g->matrices()[2], a.y);
    EXPECT_THROW(group_from_matrix_generators({a.x, a.y}, {"x", "y"}, 8), std::runtime_error);
}

TEST(CentralPullback, WitnessImagesOverD8) {
    const auto d8 = make_group(Family::Dihedral, 3);
    const auto a = build_appendix_a(2);
    const std::vector<std::pair<F2Matrix, MaxClassTag::Kind>> cases{
        {a.y, MaxClassTag::Kind::Dihedral}, {*a.z, MaxClassTag::Kind::Quaternion}, {*a.t, MaxClassTag::Kind::Semidihedral}};
    for (const auto& [second, kind] : cases) {
        const auto ext = central_pullback(*d8, {a.x, second});
        const auto& e = *ext.extension;
        EXPECT_EQ(e.order(), 16u);
        const auto tag = classify_maxclass(e);
        EXPECT_EQ(tag.kind, kind);
        EXPECT_EQ(tag.n, 4);
        // kernel {1, central} is central and the projection is a surjective homomorphism
        std::size_t kernel = 0;
        std::vector<bool> hit(d8->order(), false);
        for (Element u = 0; u < e.order(); ++u) {
            kernel += ext.projection[u] == d8->identity();
            hit[ext.projection[u]] = true;
            EXPECT_EQ(e.mul(u, ext.central), e.mul(ext.central, u));
            for (Element v = 0; v < e.order(); ++v) EXPECT_EQ(ext.projection[e.mul(u, v)], d8->mul(ext.projection[u], ext.projection[v]));
        }
        EXPECT_EQ(kernel, 2u);
        EXPECT_EQ(std::count(hit.begin(), hit.end(), true), 8);
        EXPECT_EQ(ext.projection[ext.central], d8->identity());
        EXPECT_NE(ext.central, e.identity());
    }
}

TEST(CentralPullback, NonHomomorphismIsRejected) {
    const auto d8 = make_group(Family::Dihedral, 3);
    const auto a = build_appendix_a(2);
    // x_2 has order 8 but x in D8 has order 4: fails even modulo the corner
    EXPECT_THROW(central_pullback(*d8, {a.x, a.x}), std::invalid_argument);
}

TEST(Parsing, GroupSpecs) {
    EXPECT_EQ(parse_group_spec("Q16"), (FamilySpec{Family::Quaternion, 4}));
    EXPECT_EQ(parse_group_spec("SD32"), (FamilySpec{Family::Semidihedral, 5}));
    EXPECT_EQ(parse_group_spec("C2"), (FamilySpec{Family::Cyclic, 1}));
    EXPECT_FALSE(parse_group_spec("Q4"));
    EXPECT_FALSE(parse_group_spec("SD8"));
    EXPECT_FALSE(parse_group_spec("D12"));
    EXPECT_FALSE(parse_group_spec("X8"));
    EXPECT_FALSE(parse_group_spec("D"));
}
