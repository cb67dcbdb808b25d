#include <assoc/gale.hpp>
#include <assoc/generate.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace assoc;

namespace {

ProjectivePoint pt(std::initializer_list<long> c) { return ProjectivePoint::of(c); }

PointConfiguration conic_points(const std::vector<long>& params) {
    std::vector<ProjectivePoint> pts;
    for (long t : params) pts.push_back(pt({1, t, t * t}));
    return {2, pts};
}

}  // namespace

TEST(Associate, LineExampleMatchesHandNullspace) {
    PointConfiguration source(1, {pt({1, 0}), pt({0, 1}), pt({1, 1}), pt({1, 2})});
    AssociationResult r = associate(source);
    // Nullspace rows (-1,-1,1,0), (-1,-2,0,1); columns read as points.
    EXPECT_EQ(r.certificate, (Matrix{{-1, -1, 1, 0}, {-1, -2, 0, 1}}));
    PointConfiguration expected(1, {pt({1, 1}), pt({1, 2}), pt({1, 0}), pt({0, 1})});
    EXPECT_EQ(r.target, expected);
    // The target is the source reordered by (13)(24).
    EXPECT_EQ(r.target, source.permuted({2, 3, 0, 1}));
    EXPECT_EQ(cross_ratio(r.target), cross_ratio(source));
    EXPECT_TRUE((source.coordinate_matrix() * r.certificate.transpose()).is_zero());
}

TEST(Associate, RepeatedPointIsRejected) {
    EXPECT_THROW(associate(PointConfiguration(1, {pt({1, 0}), pt({0, 1}), pt({1, 1}), pt({2, 2})})), Error);
}

TEST(Associate, NonSpanningIsRejected) {
    PointConfiguration c(2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0}), pt({1, 2, 0}), pt({1, 3, 0})});
    try {
        associate(c);
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("do not span"), std::string::npos);
    }
}

TEST(Associate, SpecialPositionIsRejected) {
    // (0,0,1) is outside the line spanned by the other four points.
    PointConfiguration c(2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0}), pt({1, 2, 0}), pt({0, 0, 1})});
    try {
        associate(c);
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("special position"), std::string::npos);
    }
}

TEST(Associate, CoincidentTargetIsRejected) {
    // Three collinear points force the last two associated points together.
    PointConfiguration c(2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0}), pt({0, 0, 1}), pt({1, 1, 1})});
    EXPECT_THROW(associate(c), Error);
}

TEST(Associate, TooFewPoints) {
    EXPECT_THROW(associate(PointConfiguration(2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 1})})),
                 Error);
}

TEST(Associate, IsAnInvolution) {
    Rng rng(100);
    const std::vector<std::pair<std::size_t, std::size_t>> shapes{{1, 5}, {2, 6}, {2, 7}, {3, 7}, {2, 9}, {5, 9}};
    for (auto [n, m] : shapes)
        for (int trial = 0; trial < 4; ++trial) {
            PointConfiguration c = generate_config(rng, n, m);
            AssociationResult once = associate(c);
            EXPECT_EQ(once.target.ambient_dim(), m - n - 2);
            EXPECT_EQ(rank(once.target.coordinate_matrix()), m - n - 1);
            EXPECT_TRUE(equivalent(associate(once.target).target, c)) << "n=" << n << " m=" << m;
        }
}

TEST(Associate, IndependentOfNullspaceBasis) {
    Rng rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        PointConfiguration c = generate_config(rng, 2, 7);
        AssociationResult r = associate(c);
        const std::size_t k = r.certificate.rows();
        Matrix change(k, k);
        do {
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) change(i, j) = rng.uniform(-4, 4);
        } while (sgn(determinant(change)) == 0);
        Matrix other = change * r.certificate;
        std::vector<ProjectivePoint> pts;
        for (std::size_t j = 0; j < other.cols(); ++j) pts.push_back(canonicalize(other.column(j)));
        EXPECT_TRUE(equivalent(PointConfiguration(r.target.ambient_dim(), pts), r.target));
    }
}

TEST(Associate, EquivariantUnderReordering) {
    Rng rng(102);
    for (int trial = 0; trial < 10; ++trial) {
        PointConfiguration c = generate_config(rng, 2, 7);
        std::vector<std::size_t> perm(c.size());
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = perm.size() - 1; i > 0; --i)
            std::swap(perm[i], perm[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i)))]);
        PointConfiguration permuted = c.permuted(perm);
        if (!first_frame_general(permuted)) continue;
        PointConfiguration lhs = associate(permuted).target;
        PointConfiguration rhs = associate(c).target.permuted(perm);
        if (!first_frame_general(lhs)) continue;
        EXPECT_TRUE(equivalent(lhs, rhs));
    }
}

TEST(SelfAssociation, SixPointsOnConic) {
    EXPECT_TRUE(is_self_associated(conic_points({0, 1, 2, 3, 4, 5})));
    EXPECT_TRUE(is_self_associated(conic_points({-3, 1, 4, 7, 9, 12})));
}

TEST(SelfAssociation, RandomSixPointsAreNot) {
    Rng rng(103);
    for (int trial = 0; trial < 5; ++trial) EXPECT_FALSE(is_self_associated(generate_config(rng, 2, 6)));
}

TEST(SelfAssociation, WrongCountIsRejected) {
    Rng rng(104);
    EXPECT_THROW(is_self_associated(generate_config(rng, 2, 5)), Error);
}
