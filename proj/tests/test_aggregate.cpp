#include <random>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "tritree/aggregate.hpp"
#include "tritree/errors.hpp"
#include "tritree/weights.hpp"

using namespace tritree;

TEST_CASE("weight tables") {
    auto w = weight_table::affine("20", "2", 4);
    CHECK(w.size() == 9);
    CHECK(w.weight(-4) == 12);
    CHECK(w.scaled(1) == 22);
    CHECK_THROWS_AS(w.weight(5), missing_weight);

    auto d = weight_table::affine("0.1", "0.25", 2);
    CHECK(d.scale() == 2);
    CHECK(d.scaled(2) == 60);
    CHECK(d.format(60) == "0.6");
    CHECK(d.format(-125) == "-1.25");

    auto f = weight_table::affine(0.1, 0.2, 1);
    CHECK(f.scaled(1) == 3);
    CHECK(f.scale() == 1);

    std::istringstream csv("level,weight\n-1,1.5\n0,2\n1,1e-3\n");
    auto c = weight_table::from_csv(csv);
    CHECK(c.scale() == 3);
    CHECK(c.scaled(-1) == 1500);
    CHECK(c.weight(1) == doctest::Approx(0.001));

    std::istringstream bad_header("lvl,w\n0,1\n");
    CHECK_THROWS_AS(weight_table::from_csv(bad_header), parse_error);
    std::istringstream dup("level,weight\n0,1\n0,2\n");
    CHECK_THROWS_AS(weight_table::from_csv(dup), parse_error);
    std::istringstream junk("level,weight\n0,abc\n");
    CHECK_THROWS_AS(weight_table::from_csv(junk), parse_error);

    weight_table r;
    r.set(0, "0.1234567891234");
    CHECK(r.scale() == weight_table::max_scale);
    CHECK(r.scaled(0) == 123456789);
}

TEST_CASE("path_sum_distribution") {
    auto w = weight_table::affine("20", "2", 4);
    auto d = path_sum_distribution(4, 0, w);
    CHECK(d.count_at(102) == 3);
    CHECK(d.total() == 19);

    auto any = weight_table::affine("3", "7", 1);
    auto one = path_sum_distribution(1, 1, any);
    REQUIRE(one.entries.size() == 1);
    CHECK(one.entries.begin()->first == 3 + 10);
    CHECK(one.entries.begin()->second == 1);

    auto w6 = weight_table::affine("1", "1", 6);
    CHECK(path_sum_distribution(6, 0, w6).total() == dfs_collect(6, 0).size());
    CHECK_THROWS_AS(path_sum_distribution(2, 3, w6), tritree::out_of_range);
}

TEST_CASE("lebesgue_average") {
    auto w = weight_table::affine("5", "1", 0);
    CHECK(lebesgue_average(0, 0, w) == 5);

    auto w4 = weight_table::affine("20", "2", 4);
    double sum = 0;
    auto paths = dfs_collect(4, 0);
    for (const auto& p : paths)
        for (int k : p) sum += w4.weight(k);
    double mean = sum / static_cast<double>(paths.size());
    CHECK(std::abs(lebesgue_average(4, 0, w4) - mean) <= 1e-12 * std::abs(mean));

    for (int d = 1; d <= 8; ++d) {
        auto a = weight_table::affine("1.5", "0.5", d), b = weight_table::affine("4", "0.5", d);
        CHECK(lebesgue_average(d, 1, b) == doctest::Approx(lebesgue_average(d, 1, a) + (d + 1) * 2.5));
    }
    value_distribution empty;
    CHECK_THROWS_AS(lebesgue_average(empty), empty_terminal);
}

TEST_CASE("class_aggregate") {
    class_table single{{{0, {1, 1, 1, 1, 1}}, 1}};
    auto lin = weight_table::affine("0", "1", 4);
    auto v = class_aggregate(single, lin);
    REQUIRE(v.entries.size() == 1);
    CHECK(v.entries.begin()->first == 10);
    CHECK(v.entries.begin()->second == 1);

    auto w = weight_table::affine("20", "2", 4);
    CHECK(class_aggregate(oracle_classes(4, 0), w) == path_sum_distribution(4, 0, w));

    // symmetric weights send a tuple and its mirror to the same value
    auto sym = weight_table::from_map({{-1, 2.0}, {0, 1.0}, {1, 2.0}});
    class_table pair{{{-1, {0, 2, 1}}, 1}, {{-1, {1, 2, 0}}, 1}};
    auto merged = class_aggregate(pair, sym);
    REQUIRE(merged.entries.size() == 1);
    CHECK(merged.entries.begin()->second == 2);
    weight_table partial;
    partial.set(0, "1");
    CHECK_THROWS_AS(class_aggregate(single, partial), missing_weight);
}

TEST_CASE("aggregation engines agree") {
    for (int d = 0; d <= 8; ++d) {
        auto w = weight_table::affine("20", "2", d);
        auto z = weight_table::affine("0", "0", d);
        for (int k = -d; k <= d; ++k) {
            auto dp = path_sum_distribution(d, k, w);
            CHECK(dp == class_aggregate(oracle_classes(d, k), w));
            CHECK(dp == brute_force_distribution(d, k, w));
            CHECK(dp.total() == path_sum_distribution(d, k, z).total());
        }
    }
}

TEST_CASE("path sums depend only on the histogram") {
    std::mt19937_64 rng(17);
    auto w = weight_table::affine("-3.5", "1.25", 12);
    for (int t = 0; t < 1000; ++t) {
        auto p = test::random_path(rng, static_cast<int>(rng() % 13));
        std::int64_t direct = 0;
        for (int k : p) direct += w.scaled(k);
        CHECK(weighted_sum_scaled(histogram(p), w) == direct);
    }
}
