#include <gtest/gtest.h>

#include <random>

#include "f2coh/appendix_b.hpp"
#include "f2coh/named_basis.hpp"
#include "f2coh/relations.hpp"
#include "f2coh/yoneda.hpp"
#include "support/fixtures.hpp"
#include "support/presented_ring.hpp"

using namespace f2coh;
using fixtures::complex;
using fixtures::named;

namespace {

Cochain identity_cochain(const ComplexPtr& cx) { return *lift_functional(cx, 0, BitVector{1}); }

std::vector<std::string> corpus_labels() { return {"C2", "C4", "D4", "D8", "D16", "Q8", "Q16", "SD16"}; }

}  // namespace

TEST(Differential, SquaresToZeroOnRandomCochains) {
    std::mt19937_64 rng(21);
    for (const auto& label : corpus_labels()) {
        const auto cx = complex(label, 8);
        for (int d = 0; d <= 4; ++d)
            for (int t = 0; t < 3; ++t) {
                const auto c = random_cochain(cx, d, 8, rng);
                EXPECT_TRUE(differential(differential(c)).is_zero()) << label << " degree " << d;
            }
    }
}

TEST(Differential, IdentityIsACocycle) {
    const auto cx = complex("Q16");
    EXPECT_TRUE(is_cocycle(identity_cochain(cx)));
}

TEST(Compose, LeibnizRule) {
    std::mt19937_64 rng(17);
    for (const auto& label : {"D8", "Q16", "SD16"}) {
        const auto cx = complex(label, 9);
        for (int t = 0; t < 4; ++t) {
            const auto a = random_cochain(cx, 1 + t % 2, 9, rng);
            const auto b = random_cochain(cx, 1 + (t / 2) % 2, 9, rng);
            const auto lhs = differential(compose(a, b));
            auto rhs = compose(differential(a), b) + compose(a, differential(b));
            const std::size_t l = std::min(lhs.levels(), rhs.levels());
            ASSERT_GT(l, 0u);
            EXPECT_EQ(lhs.truncated(l), rhs.truncated(l)) << label;
        }
    }
}

TEST(Compose, IdentityIsNeutral) {
    std::mt19937_64 rng(3);
    const auto cx = complex("SD16", 8);
    const auto id = identity_cochain(cx);
    const auto c = random_cochain(cx, 2, 8, rng);
    const auto left = compose(id, c), right = compose(c, id);
    EXPECT_EQ(left, c.truncated(left.levels()));
    EXPECT_EQ(right, c.truncated(right.levels()));
}

TEST(Compose, QuaternionYSquared) {
    const auto& nc = named("Q16");
    const auto y = nc.generator("Y").representative();
    const auto y2 = compose(y, y);
    EXPECT_TRUE(is_cocycle(y2));
    EXPECT_EQ(y2.functional(), (BitVector{1, 0}));
    EXPECT_EQ(class_of(y2), nc.evaluate("Y2"));
}

TEST(Compose, QuaternionRelationIsACoboundary) {
    const auto& nc = named("Q16");
    const auto x = nc.generator("X").representative(), y = nc.generator("Y").representative();
    const auto rel = compose(x, x) + compose(x, y);
    const auto psi = solve_coboundary(rel);
    ASSERT_TRUE(psi);
    const auto d = differential(*psi);
    EXPECT_EQ(d, rel.truncated(d.levels()));
    EXPECT_FALSE(solve_coboundary(compose(y, y)));
}

TEST(LiftFunctional, QuaternionXFromUnitFunctional) {
    const auto& nc = named("Q16");
    const auto cx = nc.complex();
    const auto x = lift_functional(cx, 1, BitVector{1, 0});
    ASSERT_TRUE(x);
    EXPECT_TRUE(is_cocycle(*x));
    EXPECT_EQ(identify_class(*x), nc.generator("X"));
    EXPECT_EQ(nc.name(identify_class(*x)), "X");
}

TEST(LiftFunctional, ZeroLiftsToZero) {
    const auto cx = complex("SD16");
    const auto z = lift_functional(cx, 3, BitVector(4));
    ASSERT_TRUE(z);
    EXPECT_TRUE(z->is_zero());
}

TEST(LiftFunctional, SemidihedralDegreeThreeObstruction) {
    const auto cx = complex("SD16");
    EXPECT_FALSE(lift_functional(cx, 3, BitVector{0, 1, 0, 0}));
    EXPECT_TRUE(lift_functional(cx, 3, BitVector{1, 0, 0, 0}));
}

TEST(CohomologyBasis, Dimensions) {
    const auto q = complex("Q16");
    std::vector<std::size_t> dims;
    for (int d = 0; d <= 4; ++d) dims.push_back(cohomology_basis(q, d).size());
    EXPECT_EQ(dims, (std::vector<std::size_t>{1, 2, 2, 1, 1}));
    const auto sd = complex("SD16");
    EXPECT_EQ(cohomology_basis(sd, 3).size(), 2u);
    EXPECT_EQ(cohomology_basis(sd, 4).size(), 3u);
    for (const auto& label : corpus_labels()) EXPECT_EQ(complex(label)->dim(0), 1u);
}

TEST(CohomologyBasis, MinimalResolutionUsesAllFunctionals) {
    const auto cx = complex("D16", 7);
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(cx->dim(d), cx->rank(d));
}

TEST(CohomologyBasis, DimensionsMatchPresentedRings) {
    const std::vector<std::pair<std::string, std::pair<char, int>>> cases{
        {"D8", {'D', 3}}, {"Q16", {'Q', 4}}, {"SD16", {'S', 4}}, {"SD32", {'S', 5}}, {"C4", {'C', 2}}};
    for (const auto& [label, p] : cases) {
        const auto cx = complex(label, 10);
        const auto want = ring_oracle::dimensions(p.first, p.second, 8);
        for (int d = 0; d <= 8; ++d) EXPECT_EQ(cx->dim(d), want[static_cast<std::size_t>(d)]) << label << " degree " << d;
    }
}

TEST(NamedBasis, SemidihedralMonomials) {
    const auto& nc = named("SD16");
    auto names = [&](int d) {
        std::vector<std::string> out;
        for (const auto& m : nc.basis_monomials(d)) out.push_back(nc.monomial_name(m));
        std::sort(out.begin(), out.end());
        return out;
    };
    EXPECT_EQ(names(3), (std::vector<std::string>{"U", "Y3"}));
    EXPECT_EQ(names(4), (std::vector<std::string>{"V", "Y4", "YU"}));
}

TEST(NamedBasis, GeneratorConvention) {
    for (const auto& label : {"D8", "Q16", "SD16"}) {
        const auto& nc = named(label);
        const auto g = nc.complex()->group();
        const auto x = hom_from_class(nc.generator("X")), y = hom_from_class(nc.generator("Y"));
        const Element gx = g->generator("x"), gs = g->generators()[1].element;
        EXPECT_EQ(x[gx], 1);
        EXPECT_EQ(x[gs], 0);
        EXPECT_EQ(y[gx], 0);
        EXPECT_EQ(y[gs], 1);
    }
}

TEST(NamedBasis, ParsingAndNaming) {
    const auto& nc = named("SD16");
    EXPECT_EQ(nc.name(nc.evaluate("U+Y3")), "U+Y3");
    EXPECT_EQ(nc.name(nc.evaluate("YU+V")), "YU+V");
    EXPECT_EQ(nc.name(nc.evaluate("X2+XY")), "0");
    EXPECT_TRUE(nc.evaluate("0", 3).is_zero());
    EXPECT_THROW(nc.evaluate("Z"), std::invalid_argument);
    EXPECT_THROW(nc.evaluate("X+U"), std::invalid_argument);
    EXPECT_THROW(nc.evaluate("0"), std::invalid_argument);
}

TEST(Cup, QuaternionRelations) {
    const auto& q16 = named("Q16");
    const auto X = q16.generator("X"), Y = q16.generator("Y");
    EXPECT_TRUE((cup(X, X) + cup(X, Y)).is_zero());
    EXPECT_TRUE(cup(cup(Y, Y), Y).is_zero());
    EXPECT_FALSE(cup(Y, Y).is_zero());
    const auto& q8 = named("Q8");
    const auto X8 = q8.generator("X"), Y8 = q8.generator("Y");
    EXPECT_TRUE((cup(cup(X8, X8), Y8) + cup(X8, cup(Y8, Y8))).is_zero());
    EXPECT_TRUE((cup(X8, X8) + cup(X8, Y8) + cup(Y8, Y8)).is_zero());
}

TEST(Cup, AssociativeAndCommutativeOnBasisClasses) {
    for (const auto& label : {"D8", "Q16", "SD16"}) {
        const auto cx = complex(label, 10);
        std::vector<CohClass> basis;
        for (int d = 1; d <= 4; ++d)
            for (const auto& c : cohomology_basis(cx, d)) basis.push_back(c);
        for (const auto& a : basis)
            for (const auto& b : basis) {
                if (a.degree() + b.degree() > 6) continue;
                EXPECT_EQ(cup(a, b), cup(b, a)) << label;
                for (const auto& c : basis)
                    if (a.degree() + b.degree() + c.degree() <= 6) EXPECT_EQ(cup(cup(a, b), c), cup(a, cup(b, c))) << label;
            }
    }
}

TEST(Relations, HoldForEveryFamilyMember) {
    for (const auto& label : {"C2", "C4", "C8", "D4", "D8", "D16", "D32", "Q8", "Q16", "Q32", "SD16", "SD32"}) {
        const auto& nc = named(label);
        for (const auto& item : check_ring_relations(nc)) EXPECT_TRUE(item.passed) << item.label << " " << item.detail;
    }
}

TEST(IdentifyClass, Examples) {
    const auto& q = named("Q16");
    const auto v = lift_functional(q.complex(), 4, BitVector{1});
    ASSERT_TRUE(v);
    EXPECT_EQ(q.name(identify_class(*v)), "V");
    EXPECT_TRUE(identify_class(Cochain::zero(q.complex(), 2, 3)).is_zero());

    const auto& sd = named("SD16");
    const auto u = lift_functional(sd.complex(), 3, BitVector{1, 0, 0, 0});
    ASSERT_TRUE(u);
    EXPECT_EQ(sd.name(identify_class(*u)), "U");
}

TEST(IdentifyClass, RejectsNonCocycles) {
    std::mt19937_64 rng(1);
    const auto cx = complex("D8", 6);
    Cochain c = random_cochain(cx, 1, 5, rng);
    while (is_cocycle(c)) c = random_cochain(cx, 1, 5, rng);
    EXPECT_THROW(identify_class(c), std::invalid_argument);
}

TEST(IdentifyClass, LinearInTheCochain) {
    const auto& nc = named("SD16");
    const auto a = nc.evaluate("U").representative(), b = nc.evaluate("Y3").representative();
    EXPECT_EQ(identify_class(a + b), nc.evaluate("U+Y3"));
}

TEST(PrintedRepresentatives, QuaternionAndSemidihedral) {
    for (const auto& label : {"Q8", "Q16", "Q32", "SD16", "SD32"})
        for (const auto& item : verify_printed_representatives(named(label))) EXPECT_TRUE(item.passed) << item.label << " " << item.detail;
}

TEST(Comparison, NamesAgreeAcrossResolutions) {
    // V on the minimal resolution of SD16 is transported; products of the degree-one classes agree.
    const auto minimal = NamedCohomology(complex("SD16", 8, "minimal"));
    const auto& explicit_nc = named("SD16");
    for (int d = 1; d <= 4; ++d)
        EXPECT_EQ(minimal.basis_monomials(d).size(), explicit_nc.basis_monomials(d).size()) << d;
    EXPECT_EQ(minimal.name(cup(minimal.generator("X"), minimal.generator("U"))), "0");
}
