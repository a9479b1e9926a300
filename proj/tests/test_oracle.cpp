#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "frozen.hpp"
#include "support.hpp"
#include "tritree/errors.hpp"
#include "tritree/oracle.hpp"

using namespace tritree;

TEST_CASE("dfs_enumerate") {
    CHECK(dfs_collect(4, 4) == std::vector<position_seq>{{0, 1, 2, 3, 4}});
    CHECK(dfs_collect(2, 0) == std::vector<position_seq>{{0, -1, 0}, {0, 0, 0}, {0, 1, 0}});
    long long total = 0;
    for (int k = -4; k <= 4; ++k) total += static_cast<long long>(dfs_collect(4, k).size());
    CHECK(total == 81);
    CHECK_THROWS_AS(dfs_collect(15, 0), depth_cap);
    CHECK_THROWS_AS(dfs_collect(3, 4), tritree::out_of_range);
    CHECK(dfs_collect(0, 0) == std::vector<position_seq>{{0}});
}

TEST_CASE("dfs emits in child order -1, 0, +1") {
    auto paths = dfs_collect(6, 1);
    CHECK(std::is_sorted(paths.begin(), paths.end()));
    for (const auto& p : paths) CHECK(validate_path(p, 6, 1));
}

TEST_CASE("memo variant yields the same multiset") {
    int n = 0;
    dfs_enumerate_memo(4, 4, [&](const position_seq&) { ++n; });
    CHECK(n == 1);
    for (int d = 0; d <= 8; ++d)
        for (int k = -d; k <= d; ++k) {
            std::vector<position_seq> memo;
            dfs_enumerate_memo(d, k, [&](const position_seq& p) { memo.push_back(p); });
            auto plain = dfs_collect(d, k);
            std::sort(memo.begin(), memo.end());
            std::sort(plain.begin(), plain.end());
            CHECK(memo == plain);
        }
    CHECK_THROWS_AS(dfs_enumerate_memo(20, 0, [](const position_seq&) {}), depth_cap);
}

TEST_CASE("oracle_classes") {
    auto c44 = oracle_classes(4, 4);
    REQUIRE(c44.size() == 1);
    CHECK(c44.begin()->first == cardinality_tuple{0, {1, 1, 1, 1, 1}});
    CHECK(c44.begin()->second == 1);

    auto c72 = oracle_classes(7, 2);
    CHECK(c72.at({-2, {0, 0, 1, 1, 2, 3, 1}}) == 2);
    CHECK(c72.at({-2, {0, 0, 1, 1, 2, 2, 2}}) == 1);
    CHECK(c72.size() == 76);

    CHECK(oracle_classes(5, 3).size() == 12);
    CHECK(oracle_classes(10, 0).size() == 324);
}

TEST_CASE("frozen class counts") {
    const long long* rows[] = {test::classes_d4, test::classes_d5, test::classes_d6, test::classes_d7,
                               test::classes_d8};
    for (int d = 4; d <= 8; ++d)
        for (int k = 0; k <= d; ++k) CHECK(static_cast<long long>(oracle_classes(d, k).size()) == rows[d - 4][k]);
    for (int d = 1; d <= 10; ++d) {
        CHECK(static_cast<long long>(oracle_classes(d, 0).size()) == test::classes_k0[d - 1]);
        long long all = 0;
        for (int k = -d; k <= d; ++k) all += static_cast<long long>(oracle_classes(d, k).size());
        CHECK(all == test::classes_all[d - 1]);
    }
}

TEST_CASE("count law") {
    for (int d = 0; d <= 10; ++d) {
        long long total = 0;
        for (int k = -d; k <= d; ++k) dfs_enumerate(d, k, [&](const position_seq&) { ++total; });
        CHECK(total == test::pow3(d));
    }
}

TEST_CASE("partition law") {
    for (int d = 0; d <= 9; ++d)
        for (int k = -d; k <= d; ++k) {
            auto classes = oracle_classes(d, k);
            unsigned long long sum = 0;
            for (const auto& [t, n] : classes) {
                CHECK(n > 0);
                CHECK(validate_tuple(t, d, k));
                CHECK(t.total() == d + 1);
                sum += n;
            }
            CHECK(sum == dfs_collect(d, k).size());
        }
}

TEST_CASE("class tables mirror under reflection") {
    for (int d = 0; d <= 9; ++d)
        for (int k = 1; k <= d; ++k) {
            class_table mirrored;
            for (const auto& [t, n] : oracle_classes(d, k)) mirrored[mirror(t)] = n;
            CHECK(mirrored == oracle_classes(d, -k));
        }
}

TEST_CASE("histogram is invariant under visit reordering") {
    // Closed paths (ending at 0) can be reversed, or rotated to start at any
    // later visit of 0; both keep validity and the multiset of levels.
    std::mt19937_64 rng(21);
    int rotations = 0;
    std::map<int, class_table> tables;
    for (int d = 2; d <= 12; ++d) tables[d] = oracle_classes(d, 0);
    for (int t = 0; t < 2000; ++t) {
        int d = 2 + static_cast<int>(rng() % 11);
        auto p = test::random_path(rng, d);
        if (p.back() != 0) continue;
        auto b = position_bounds(d, 0);
        auto key = histogram(p, b);
        const auto& classes = tables[d];
        position_seq rev(p.rbegin(), p.rend());
        REQUIRE(validate_path(rev, d, 0));
        CHECK(histogram(rev, b) == key);
        for (int j = 1; j < d; ++j) {
            if (p[j] != 0) continue;
            position_seq rot(p.begin() + j, p.end());
            rot.insert(rot.end(), p.begin() + 1, p.begin() + j + 1);
            REQUIRE(validate_path(rot, d, 0));
            CHECK(histogram(rot, b) == key);
            ++rotations;
        }
        CHECK(classes.count(key) == 1);
    }
    CHECK(rotations > 0);
}
