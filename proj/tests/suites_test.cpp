#include <assoc/suites.hpp>

#include <gtest/gtest.h>

using namespace assoc;

namespace {

suites::Options small(std::uint64_t seed, std::size_t trials) {
    suites::Options opt;
    opt.seed = seed;
    opt.trials = trials;
    return opt;
}

}  // namespace

TEST(Suites, RegistryOrderAndLookup) {
    const auto& reg = suites::registry();
    ASSERT_EQ(reg.size(), 10U);
    EXPECT_STREQ(reg.front().name, "association-involution");
    EXPECT_EQ(suites::index_of("quadrics"), 9U);
    EXPECT_THROW(suites::run("nonsense", {}), Error);
}

TEST(Suites, SameSeedSameReport) {
    auto a = suites::run("association-involution", small(7, 6)).dump();
    auto b = suites::run("association-involution", small(7, 6)).dump();
    auto c = suites::run("association-involution", small(8, 6)).dump();
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
}

TEST(Suites, CaseSeedReproducesCase) {
    auto report = suites::run("association-involution", small(3, 5));
    ASSERT_TRUE(report["passed"].get<bool>());
    const auto& last = report["cases"].back();
    Rng rng(last["seed"].get<std::uint64_t>());
    PointConfiguration source = generate_config(rng, last["n"].get<std::size_t>(), last["m"].get<std::size_t>());
    EXPECT_EQ(json_io::to_json(source), last["source"]);
}

TEST(Suites, LemmaTableForFour) {
    suites::Options opt;
    opt.n = 4;
    auto report = suites::run("lemma-wj", opt);
    EXPECT_TRUE(report["passed"].get<bool>());
    const auto& table = report["tables"][0]["table"];
    ASSERT_EQ(table.size(), 64U);
    EXPECT_EQ(table[0].size(), 64U);
    for (const auto& row : table)
        for (const auto& v : row) EXPECT_GE(v.get<long>(), 0);
}

TEST(Suites, SmallRunsPass) {
    for (const char* name : {"self-assoc", "coble", "weddle", "quintic", "curve-pairing"}) {
        auto report = suites::run(name, small(11, 2));
        EXPECT_TRUE(report["passed"].get<bool>()) << name << "\n" << report.dump(1);
        EXPECT_GT(report["total_cases"].get<std::size_t>(), 0U);
    }
}

TEST(Suites, HalfKRecordsDimension) {
    suites::Options opt = small(5, 2);
    opt.n = 3;
    auto report = suites::run("halfK", opt);
    EXPECT_TRUE(report["passed"].get<bool>());
    EXPECT_EQ(report["dimensions"]["3"], nlohmann::json({4, 4}));
    EXPECT_TRUE(report["cases"][0].contains("basis"));
    opt.n = 4;
    EXPECT_THROW(suites::run("halfK", opt), Error);
}

TEST(Suites, CremonaAndQuadricsSmall) {
    suites::Options opt = small(9, 2);
    opt.n = 3;
    EXPECT_TRUE(suites::run("cremona-kernel", opt)["passed"].get<bool>());
    auto q = suites::run("quadrics", opt);
    EXPECT_TRUE(q["passed"].get<bool>()) << q.dump(1);
    EXPECT_EQ(q["cases"][1]["fibre_size"].get<std::size_t>(), 32U);
}
