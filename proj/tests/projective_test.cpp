#include <assoc/generate.hpp>
#include <assoc/projective.hpp>

#include <gtest/gtest.h>

using namespace assoc;

namespace {

ProjectivePoint pt(std::initializer_list<long> c) { return ProjectivePoint::of(c); }

/// Point of P^1 at affine parameter t, or infinity.
ProjectivePoint param(long t) { return pt({1, t}); }
ProjectivePoint infinity_point() { return pt({0, 1}); }

ProjectiveMap random_invertible_map(Rng& rng, std::size_t n) {
    for (;;) {
        Matrix m(n + 1, n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= n; ++j) m(i, j) = rng.uniform(-5, 5);
        if (sgn(determinant(m)) != 0) return ProjectiveMap(m);
    }
}

}  // namespace

TEST(Canonicalize, Examples) {
    EXPECT_EQ(canonicalize({2, 4, 6}).coords(), (IntegerVector{1, 2, 3}));
    EXPECT_EQ(canonicalize({0, ratio(-1, 2), -1}).coords(), (IntegerVector{0, 1, 2}));
    EXPECT_THROW(canonicalize({0, 0, 0}), Error);
}

TEST(Canonicalize, IdempotentAndScaleInvariant) {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        RationalVector v(4);
        for (auto& x : v) x = ratio(rng.uniform(-20, 20), rng.uniform(1, 9));
        if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; })) continue;
        ProjectivePoint p = canonicalize(v);
        EXPECT_EQ(canonicalize(p.rational()), p);
        Rational lambda = ratio(rng.uniform(1, 30) * (trial % 2 ? -1 : 1), rng.uniform(1, 30));
        RationalVector scaled = v;
        for (auto& x : scaled) x *= lambda;
        EXPECT_EQ(canonicalize(scaled), p);
    }
}

TEST(FrameTransform, StandardFrameGivesIdentity) {
    PointConfiguration c(2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 1})});
    EXPECT_EQ(frame_transform(c).matrix(), Matrix::identity(3));
}

TEST(FrameTransform, LineExampleIsDiagonal) {
    PointConfiguration c(1, {pt({1, 0}), pt({0, 1}), pt({1, 2})});
    EXPECT_EQ(frame_transform(c).matrix(), (Matrix{{2, 0}, {0, 1}}));
}

TEST(FrameTransform, CollinearFrameIsRejected) {
    PointConfiguration c(2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0}), pt({1, 2, 3})});
    try {
        frame_transform(c);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("{1,2,3}"), std::string::npos) << e.what();
    }
}

TEST(FrameTransform, ReproducesStandardFrame) {
    Rng rng(5);
    for (std::size_t n = 1; n <= 5; ++n) {
        PointConfiguration c = generate_config(rng, n, n + 4);
        PointConfiguration normal = frame_normal_form(c);
        for (std::size_t i = 0; i <= n; ++i) EXPECT_EQ(normal[i], ProjectivePoint::coordinate(n, i));
        EXPECT_EQ(normal[n + 1], ProjectivePoint::unit(n));
    }
}

TEST(Equivalent, ImageUnderMapIsEquivalent) {
    Rng rng(6);
    for (std::size_t n = 1; n <= 4; ++n) {
        PointConfiguration c = generate_config(rng, n, n + 4);
        EXPECT_TRUE(equivalent(c, random_invertible_map(rng, n)(c)));
    }
}

TEST(Equivalent, RandomConfigurationsDiffer) {
    Rng rng(7);
    PointConfiguration a = generate_config(rng, 2, 5);
    PointConfiguration b = generate_config(rng, 2, 5);
    EXPECT_NE(frame_normal_form(a), frame_normal_form(b));
    EXPECT_FALSE(equivalent(a, b));
}

TEST(Equivalent, DoubleTranspositionOnLine) {
    PointConfiguration a(1, {param(0), infinity_point(), param(1), param(2)});
    PointConfiguration b(1, {param(1), param(2), param(0), infinity_point()});
    EXPECT_TRUE(equivalent(a, b));
    EXPECT_EQ(cross_ratio(a), cross_ratio(b));
}

TEST(Equivalent, IsAnEquivalenceRelation) {
    Rng rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 1 + trial % 3;
        PointConfiguration a = generate_config(rng, n, n + 3);
        PointConfiguration b = random_invertible_map(rng, n)(a);
        PointConfiguration c = random_invertible_map(rng, n)(b);
        EXPECT_TRUE(equivalent(a, a));
        EXPECT_EQ(equivalent(a, b), equivalent(b, a));
        EXPECT_TRUE(equivalent(a, c));
    }
}

TEST(CrossRatio, Convention) {
    for (long lambda : {2L, 3L, -4L, 7L})
        EXPECT_EQ(cross_ratio(param(0), infinity_point(), param(1), param(lambda)), Rational(lambda));
    EXPECT_EQ(cross_ratio(param(0), infinity_point(), param(1), param(2)), Rational(2));
}

TEST(CrossRatio, DoubleTranspositionInvariance) {
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        PointConfiguration c = generate_config(rng, 1, 4);
        EXPECT_EQ(cross_ratio(c[0], c[1], c[2], c[3]), cross_ratio(c[1], c[0], c[3], c[2]));
        Rational cr = cross_ratio(c);
        EXPECT_NE(cr, Rational(0));
        EXPECT_NE(cr, Rational(1));
    }
}

TEST(CrossRatio, CoincidentPointsRejected) {
    EXPECT_THROW(cross_ratio(param(0), param(0), param(1), param(2)), Error);
}

TEST(CrossRatio, EquivalentConfigurationsAgree) {
    Rng rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        PointConfiguration a = generate_config(rng, 1, 4);
        PointConfiguration b = random_invertible_map(rng, 1)(a);
        ASSERT_TRUE(equivalent(a, b));
        EXPECT_EQ(cross_ratio(a), cross_ratio(b));
    }
}

TEST(Veronese, Examples) {
    EXPECT_EQ(veronese(pt({1, 0}), 4), pt({1, 0, 0, 0, 0}));
    EXPECT_EQ(veronese(pt({1, 2}), 4), pt({1, 2, 4, 8, 16}));
    EXPECT_EQ(veronese(pt({1, 1, 1}), 2), pt({1, 1, 1, 1, 1, 1}));
    // (x^2, xy, xz, y^2, yz, z^2)
    EXPECT_EQ(veronese(pt({1, 2, 3}), 2), pt({1, 2, 3, 4, 6, 9}));
}

TEST(PointConfiguration, RejectsRepeatedPoints) {
    EXPECT_THROW(PointConfiguration(1, {pt({1, 2}), pt({2, 4})}), Error);
}
