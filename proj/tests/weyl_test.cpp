#include <assoc/generate.hpp>
#include <assoc/weyl.hpp>

#include <gtest/gtest.h>

using namespace assoc;

namespace {

DivisorClass cls(std::size_t n, std::vector<long> coeffs) { return {n, coeffs.size() - 1, std::move(coeffs)}; }

/// w_J as a product of pair elements, pairing the first index with the last.
WeylElement nested_pairing(const IndexSet& j, std::size_t n) {
    std::vector<std::size_t> items(j.begin(), j.end());
    WeylElement w = WeylElement::identity(n, n + 3);
    for (std::size_t a = 0, b = items.size(); a + 1 < b; ++a, --b) w = w * w_element({items[a], items[b - 1]}, n);
    return w;
}

}  // namespace

TEST(Generator, ReflectionOnPlane) {
    WeylElement s0 = generator(0, 2, 9);
    EXPECT_EQ(s0.image(0), cls(2, {2, -1, -1, -1, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(s0.image(1), cls(2, {1, 0, -1, -1, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(s0.image(4), DivisorClass::basis(2, 9, 4));
}

TEST(Generator, TranspositionSwapsNeighbours) {
    WeylElement s3 = generator(3, 2, 9);
    EXPECT_EQ(s3.image(3), DivisorClass::basis(2, 9, 4));
    EXPECT_EQ(s3.image(4), DivisorClass::basis(2, 9, 3));
    EXPECT_EQ(s3.image(0), DivisorClass::basis(2, 9, 0));
}

TEST(Generator, RangeChecks) {
    EXPECT_THROW(generator(9, 2, 9), Error);
    EXPECT_THROW(generator(0, 3, 4), Error);
}

TEST(Generator, InvolutionsFixingFormAndAnticanonical) {
    for (std::size_t n = 1; n <= 7; ++n)
        for (std::size_t m = n + 2; m <= 10; ++m) {
            DivisorClass k = anticanonical(n, m);
            for (std::size_t i = 0; i < m; ++i) {
                WeylElement s = generator(i, n, m);
                EXPECT_EQ(s * s, WeylElement::identity(n, m));
                EXPECT_TRUE(preserves_form(s)) << "n=" << n << " m=" << m << " i=" << i;
                EXPECT_EQ(apply(s, k), k);
            }
        }
}

TEST(Anticanonical, Examples) {
    EXPECT_EQ(anticanonical(2, 9), cls(2, {3, -1, -1, -1, -1, -1, -1, -1, -1, -1}));
    EXPECT_EQ(anticanonical(5, 8), cls(5, {6, -4, -4, -4, -4, -4, -4, -4, -4}));
}

TEST(Apply, IdentityAndMismatch) {
    DivisorClass c = cls(2, {3, 1, -2, 0, 5, 0});
    EXPECT_EQ(apply(WeylElement::identity(2, 5), c), c);
    EXPECT_THROW(apply(WeylElement::identity(2, 6), c), Error);
}

TEST(DClass, Examples) {
    EXPECT_EQ(d_class({1}, 3), DivisorClass::basis(3, 6, 1));
    EXPECT_EQ(d_class({1, 2, 3}, 3), cls(3, {1, 0, 0, 0, -1, -1, -1}));
    EXPECT_EQ(d_class({1, 2, 3, 4, 5}, 2), cls(2, {2, -1, -1, -1, -1, -1}));
    EXPECT_THROW(d_class({1, 2}, 3), Error);
}

TEST(WElement, Examples) {
    EXPECT_EQ(w_element({}, 4), WeylElement::identity(4, 7));
    for (std::size_t n = 2; n <= 7; ++n) {
        WeylElement w = w_element({n + 2, n + 3}, n);
        DivisorClass expected = DivisorClass::zero(n, n + 3);
        expected.coeffs[0] = static_cast<long>(n);
        for (std::size_t i = 1; i <= n + 1; ++i) expected.coeffs[i] = -static_cast<long>(n - 1);
        EXPECT_EQ(w.image(0), expected);
        // s_{n+2} is applied first.
        EXPECT_EQ(w, generator(0, n, n + 3) * generator(n + 2, n, n + 3));
    }
    EXPECT_EQ(w_element({1, 2, 3, 4, 5, 6}, 3).image(0), cls(3, {7, -4, -4, -4, -4, -4, -4}));
    EXPECT_THROW(w_element({1, 2, 3}, 3), Error);
}

TEST(WElement, LemmaOnDClassesExhaustive) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const std::size_t m = n + 3;
        std::vector<WeylElement> ws;
        auto evens = subsets_with_parity(m, false);
        for (const auto& j : evens) ws.push_back(w_element(j, n));
        for (const auto& i : subsets_with_parity(m, true)) {
            DivisorClass d = d_class(i, n);
            for (std::size_t t = 0; t < evens.size(); ++t)
                ASSERT_EQ(apply(ws[t], d), d_class(symmetric_difference(i, evens[t]), n)) << "n=" << n;
        }
    }
}

TEST(WElement, ClosedFormForImageOfE0) {
    for (std::size_t n = 2; n <= 6; ++n)
        for (const auto& j : subsets_with_parity(n + 3, false)) {
            WeylElement w = w_element(j, n);
            EXPECT_EQ(w.image(0), w_image_of_e0(j, n));
            EXPECT_EQ(curve_pairing(w.image(0)), static_cast<long>(n + 1));
            for (std::size_t e = 1; e <= n + 3; ++e) EXPECT_EQ(curve_pairing(w.image(e)), 1);
        }
}

TEST(WElement, ElementaryAbelianExhaustive) {
    for (std::size_t n = 2; n <= 5; ++n) {
        auto evens = subsets_with_parity(n + 3, false);
        EXPECT_EQ(evens.size(), 1UL << (n + 2));
        std::vector<WeylElement> ws;
        for (const auto& j : evens) ws.push_back(w_element(j, n));
        const WeylElement id = WeylElement::identity(n, n + 3);
        for (std::size_t a = 0; a < ws.size(); ++a) {
            EXPECT_EQ(ws[a] * ws[a], id);
            EXPECT_TRUE(preserves_form(ws[a]));
            EXPECT_EQ(apply(ws[a], anticanonical(n, n + 3)), anticanonical(n, n + 3));
            for (std::size_t b = 0; b < ws.size(); ++b)
                ASSERT_EQ(ws[a] * ws[b], w_element(symmetric_difference(evens[a], evens[b]), n));
        }
        // Distinct subsets give distinct elements, so the group has order 2^{n+2}.
        for (std::size_t a = 0; a < ws.size(); ++a)
            for (std::size_t b = a + 1; b < ws.size(); ++b) EXPECT_NE(ws[a], ws[b]);
    }
}

TEST(WElement, ElementaryAbelianSampled) {
    Rng rng(300);
    for (std::size_t n : {6UL, 7UL}) {
        auto evens = subsets_with_parity(n + 3, false);
        for (int trial = 0; trial < 40; ++trial) {
            const auto& a = evens[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(evens.size()) - 1))];
            const auto& b = evens[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(evens.size()) - 1))];
            WeylElement wa = w_element(a, n);
            EXPECT_EQ(wa * wa, WeylElement::identity(n, n + 3));
            EXPECT_EQ(wa * w_element(b, n), w_element(symmetric_difference(a, b), n));
        }
    }
}

TEST(WElement, IndependentOfPairing) {
    for (std::size_t n = 2; n <= 6; ++n)
        for (const auto& j : subsets_with_parity(n + 3, false)) ASSERT_EQ(w_element(j, n), nested_pairing(j, n));
}

TEST(WElement, FullSetSwapsComplementaryClasses) {
    for (std::size_t g = 2; g <= 4; ++g) {
        const std::size_t n = 2 * g - 1, m = n + 3;
        IndexSet all = complement({}, m);
        WeylElement w = w_element(all, n);
        DivisorClass half = DivisorClass::zero(n, m);
        half.coeffs[0] = static_cast<long>(g);
        for (std::size_t i = 1; i <= m; ++i) half.coeffs[i] = -static_cast<long>(g - 1);
        EXPECT_EQ(half + half, anticanonical(n, m));
        EXPECT_EQ(w.image(0), w_image_of_e0(all, n));
        for (const auto& i : subsets_with_parity(m, true)) {
            IndexSet bar = complement(i, m);
            EXPECT_EQ(apply(w, d_class(i, n)), d_class(bar, n));
            EXPECT_EQ(d_class(i, n) + d_class(bar, n), half);
        }
    }
}

TEST(WElement, GenusThreeFormula) {
    // (2g^2 - 1) e_0 - 2g(g-1) sum e_i for n = 2g - 1.
    for (long g = 2; g <= 4; ++g) {
        const std::size_t n = static_cast<std::size_t>(2 * g - 1);
        DivisorClass img = w_element(complement({}, n + 3), n).image(0);
        EXPECT_EQ(img.coeffs[0], 2 * g * g - 1);
        for (std::size_t i = 1; i <= n + 3; ++i) EXPECT_EQ(img.coeffs[i], -2 * g * (g - 1));
    }
}

TEST(CurvePairing, Values) {
    for (std::size_t n = 1; n <= 8; ++n) {
        EXPECT_EQ(curve_pairing(DivisorClass::basis(n, n + 3, 0)), static_cast<long>(n + 1));
        EXPECT_EQ(curve_pairing(anticanonical(n, n + 3)), 4);
    }
}

TEST(Parsing, WordsAndSets) {
    EXPECT_EQ(parse_word("s0 s3 s0"), (std::vector<std::size_t>{0, 3, 0}));
    EXPECT_EQ(parse_word("1,2"), (std::vector<std::size_t>{1, 2}));
    EXPECT_THROW(parse_word("t1"), Error);
    EXPECT_EQ(parse_index_set("1,4"), (IndexSet{1, 4}));
    EXPECT_THROW(parse_index_set("1,x"), Error);
}

TEST(WordElement, FirstLetterActsFirst) {
    WeylElement w = word_element({1, 2}, 2, 5);
    EXPECT_EQ(w, generator(2, 2, 5) * generator(1, 2, 5));
    // e_1 -> e_2 -> e_3
    EXPECT_EQ(w.image(1), DivisorClass::basis(2, 5, 3));
}
