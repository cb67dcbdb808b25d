#include <assoc/generate.hpp>
#include <assoc/quadric_model.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace assoc;

namespace {

ProjectivePoint pt(std::initializer_list<long> c) { return ProjectivePoint::of(c); }

std::vector<ProjectivePoint> line_points(Rng& rng, std::size_t count) {
    return generate_config(rng, 1, count).points();
}

RationalVector random_quadratic(Rng& rng) {
    return {rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(1, 9)};
}

/// A member with no zero coordinate, retrying G until it avoids every q_i.
ProjectivePoint generic_member(Rng& rng, const QuadricModel& model, const std::vector<ProjectivePoint>& q) {
    for (;;) {
        ProjectivePoint y = member_from_quadratic(model, q, random_quadratic(rng));
        if (std::none_of(y.coords().begin(), y.coords().end(), [](const Integer& z) { return z == 0; })) return y;
    }
}

}  // namespace

TEST(Hyperplanes, RowsAreQuarticVeronese) {
    auto arr = hyperplanes_from_points({pt({1, 0}), pt({1, 1}), pt({1, 2}), pt({0, 1}), pt({1, -1})});
    EXPECT_EQ(arr.rows.row_vector(0), (RationalVector{1, 0, 0, 0, 0}));
    EXPECT_EQ(arr.rows.row_vector(1), (RationalVector{1, 1, 1, 1, 1}));
    EXPECT_EQ(arr.rows.row_vector(2), (RationalVector{1, 2, 4, 8, 16}));
    EXPECT_THROW(hyperplanes_from_points({pt({1, 0}), pt({1, 1}), pt({2, 2}), pt({0, 1}), pt({1, 3})}), Error);
}

TEST(Normalize, AlreadyNormalizedIsUnchanged) {
    Matrix rows(7, 5);
    for (std::size_t i = 0; i < 5; ++i) rows(i, i) = 1;
    rows(5, 0) = 3;
    rows(5, 4) = ratio(-1, 2);
    rows(6, 2) = 7;
    HyperplaneArrangement arr{rows};
    EXPECT_EQ(normalize_arrangement(arr).rows, rows);
}

TEST(Normalize, TopBlockBecomesIdentity) {
    std::vector<ProjectivePoint> q{pt({1, 0}), pt({0, 1}), pt({1, 1}), pt({1, -1}), pt({1, 2}), pt({1, 3}), pt({2, 5})};
    HyperplaneArrangement raw = hyperplanes_from_points(q);
    HyperplaneArrangement norm = normalize_arrangement(raw);
    EXPECT_EQ(norm.rows.row_block(0, 5), Matrix::identity(5));
    // rows * T^{-1} = normalized, so normalized * T reproduces the raw rows.
    EXPECT_EQ(norm.rows * raw.rows.row_block(0, 5), raw.rows);
}

TEST(Normalize, DependentTopBlockFails) {
    Matrix rows(6, 5);
    for (std::size_t i = 0; i < 4; ++i) rows(i, i) = 1;
    rows(4, 0) = 1;
    rows(4, 1) = 1;
    rows(5, 4) = 1;
    EXPECT_THROW(normalize_arrangement({rows}), Error);
}

TEST(BuildModel, QuadricCounts) {
    Rng rng(500);
    for (std::size_t n : {3UL, 5UL, 7UL}) {
        QuadricModel model = build_model(line_points(rng, n + 3));
        EXPECT_EQ(model.quadrics.size(), n - 2);
        EXPECT_EQ(model.variables(), n + 3);
        for (const auto& f : model.quadrics) {
            EXPECT_EQ(f.degree(), 2);
            EXPECT_EQ(f.variables(), n + 3);
            // Diagonal: only squares occur.
            for (const auto& [e, c] : f.terms()) EXPECT_EQ(std::count(e.begin(), e.end(), 2), 1);
        }
    }
    EXPECT_TRUE(build_model(line_points(rng, 5)).quadrics.empty());
}

TEST(Membership, ConstructedMembersAndSigns) {
    Rng rng(501);
    for (std::size_t n : {3UL, 4UL, 5UL}) {
        auto q = line_points(rng, n + 3);
        QuadricModel model = build_model(q);
        ProjectivePoint y = generic_member(rng, model, q);
        EXPECT_TRUE(membership(model, y));
        IntegerVector flipped = y.coords();
        flipped[1] = -flipped[1];
        flipped.back() = -flipped.back();
        EXPECT_TRUE(membership(model, ProjectivePoint::canonicalize(flipped)));
    }
}

TEST(Membership, RandomPointIsNotMember) {
    Rng rng(502);
    auto q = line_points(rng, 8);
    QuadricModel model = build_model(q);
    for (int trial = 0; trial < 10; ++trial) EXPECT_FALSE(membership(model, random_point(rng, 7, kDefaultBound)));
    EXPECT_THROW(membership(model, random_point(rng, 6, kDefaultBound)), Error);
}

TEST(SignOrbit, FullOrbitOfGenericMember) {
    Rng rng(503);
    for (std::size_t n : {3UL, 5UL}) {
        auto q = line_points(rng, n + 3);
        QuadricModel model = build_model(q);
        ProjectivePoint y = generic_member(rng, model, q);
        auto orbit = sign_orbit(model, y);
        EXPECT_EQ(orbit.size(), 1UL << (n + 2));
        EXPECT_EQ(std::set<ProjectivePoint>(orbit.begin(), orbit.end()).size(), orbit.size());
        ProjectivePoint t = cover_image(model, y);
        for (const auto& z : orbit) {
            EXPECT_TRUE(membership(model, z));
            EXPECT_EQ(cover_image(model, z), t);
        }
    }
}

TEST(SignOrbit, ZeroCoordinateIsBranch) {
    Rng rng(504);
    auto q = line_points(rng, 6);
    QuadricModel model = build_model(q);
    // G vanishes at q_1, so y_0 = 0.
    RationalVector g{Rational(q[0][1]) * q[0][1], -Rational(q[0][0]) * q[0][1], 0};
    if (q[0][1] == 0) g = {0, 0, 1};
    ProjectivePoint y = member_from_quadratic(model, q, g);
    ASSERT_EQ(y[0], 0);
    try {
        sign_orbit(model, y);
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("branch locus"), std::string::npos);
    }
    EXPECT_EQ(cover_image(model, y)[0], 0);
}

TEST(CoverImage, RoundTripsGeneratingParameter) {
    Rng rng(505);
    for (int trial = 0; trial < 10; ++trial) {
        auto q = line_points(rng, 7);
        QuadricModel model = build_model(q);
        RationalVector g = random_quadratic(rng);
        ProjectivePoint y = member_from_quadratic(model, q, g);
        // The parameter is F = G^2 evaluated at the first five points.
        RationalVector t;
        for (std::size_t s = 0; s < 5; ++s) {
            Rational v = g[0] * q[s][0] * q[s][0] + g[1] * q[s][0] * q[s][1] + g[2] * q[s][1] * q[s][1];
            t.push_back(v * v);
        }
        EXPECT_EQ(cover_image(model, y), canonicalize(t));
    }
}

TEST(CoverImage, NonMemberRejected) {
    Rng rng(506);
    QuadricModel model = build_model(line_points(rng, 7));
    EXPECT_THROW(cover_image(model, pt({1, 2, 3, 4, 5, 6, 7})), Error);
}

TEST(Smoothness, GenericMembersAreSmooth) {
    Rng rng(507);
    for (std::size_t n : {3UL, 5UL, 7UL}) {
        auto q = line_points(rng, n + 3);
        QuadricModel model = build_model(q);
        for (int trial = 0; trial < 3; ++trial) EXPECT_TRUE(is_smooth_at(model, generic_member(rng, model, q)));
    }
}

TEST(Smoothness, RepeatedHyperplaneGivesSingularPoint) {
    // Rows 6 and 7 coincide, so the two quadrics have equal gradients where y_5 = y_6 = 0.
    Matrix rows(7, 5);
    for (std::size_t i = 0; i < 5; ++i) rows(i, i) = 1;
    for (std::size_t r : {5UL, 6UL}) {
        rows(r, 0) = 1;
        rows(r, 1) = 1;
        rows(r, 2) = -1;
        rows(r, 3) = -1;
    }
    QuadricModel model = model_from_arrangement({rows});
    ProjectivePoint y = pt({1, 1, 1, 1, 1, 0, 0});
    ASSERT_TRUE(membership(model, y));
    EXPECT_FALSE(is_smooth_at(model, y));
    EXPECT_THROW(is_smooth_at(model, pt({1, 1, 1, 1, 1, 1, 1})), Error);
}
