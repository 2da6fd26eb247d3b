#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "csp/qanalog.hpp"
#include "csp/signed_tableau.hpp"
#include "oracles.hpp"

using namespace csp;
using oracle::poly;

namespace {

SignedTableau example_signed() {
    // 1 2 4 / ~3 5 / ~6 7
    return SignedTableau(
        StandardTableau(Partition::parse("3,2,2"), {1, 2, 4, 3, 5, 6, 7}), {3, 6});
}

}  // namespace

TEST_CASE("cyclic shift on subsets") {
    CHECK(cyc_subset({1, 3}, 4) == std::vector<int>{2, 4});
    CHECK(cyc_subset({}, 4).empty());
    CHECK_THROWS_AS(cyc_subset({0}, 4), std::domain_error);
    CHECK_THROWS_AS(cyc_subset({5}, 4), std::domain_error);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        std::vector<int> d;
        for (int v = 1; v <= n; ++v)
            if (rng() % 2) d.push_back(v);
        std::vector<int> cur = d;
        for (int i = 0; i < n; ++i) cur = cyc_subset(cur, n);
        CHECK(cur == d);  // full rotation is the identity
    }
}

TEST_CASE("k-subsets enumeration") {
    auto subsets = k_subsets(4, 2);
    REQUIRE(subsets.size() == 6);
    CHECK(subsets.front() == std::vector<int>{1, 2});
    CHECK(subsets.back() == std::vector<int>{3, 4});
    CHECK(std::is_sorted(subsets.begin(), subsets.end()));
    CHECK(k_subsets(5, 0).size() == 1);
    CHECK(k_subsets(3, 5).empty());
}

TEST_CASE("signed tableau validation and rendering") {
    auto t = example_signed();
    CHECK(t.to_string() == "1 2 4\n~3 5\n~6 7");
    CHECK_THROWS_AS(SignedTableau(t.plus, {0}), std::domain_error);
    CHECK_THROWS_AS(SignedTableau(t.plus, {8}), std::domain_error);
    CHECK_THROWS_AS(SignedTableau(t.plus, {2, 2}), std::domain_error);
}

TEST_CASE("super descents of the worked example") {
    auto t = example_signed();
    CHECK(super_descent_set(t) == std::vector<int>{3, 4, 6});
    CHECK(super_maj(t) == 13);
}

TEST_CASE("super descents reduce to classical descents without negatives") {
    for (const auto& t : enumerate_syt(Partition::parse("3,2"))) {
        SignedTableau st(t, {});
        CHECK(super_descent_set(st) == descent_set(t));
        CHECK(super_maj(st) == maj(t));
    }
}

TEST_CASE("fully negative single row has every super descent") {
    auto row = enumerate_syt(Partition::parse("5")).front();
    SignedTableau st(row, {1, 2, 3, 4, 5});
    CHECK(super_descent_set(st) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("single cell never has super descents") {
    auto cell = enumerate_syt(Partition::parse("1")).front();
    CHECK(super_maj(SignedTableau(cell, {})) == 0);
    CHECK(super_maj(SignedTableau(cell, {1})) == 0);
}

TEST_CASE("signed promotion acts componentwise") {
    auto row = enumerate_syt(Partition::parse("4")).front();
    SignedTableau st(row, {1, 3});
    auto image = signed_promotion(st);
    CHECK(image.plus == row);
    CHECK(image.negatives == std::vector<int>{2, 4});
    CHECK(image.negatives.size() == st.negatives.size());
}

TEST_CASE("signed promotion repeats to the identity") {
    for (const auto& shape_text : {"2,2", "3,1", "2,1"}) {
        Partition shape = Partition::parse(shape_text);
        long long period = std::lcm(promotion_order(shape),
                                    static_cast<long long>(shape.size()));
        for (const auto& t : enumerate_syt(shape)) {
            SignedTableau start(t, {1});
            SignedTableau cur = start;
            for (long long i = 0; i < period; ++i) cur = signed_promotion(cur);
            CHECK(cur.plus == start.plus);
            CHECK(cur.negatives == start.negatives);
        }
    }
}

TEST_CASE("signed promotion permutes the signed tableaux of fixed k") {
    for (const auto& shape_text : {"2,1", "3,2", "2,2"}) {
        Partition shape = Partition::parse(shape_text);
        for (int k = 0; k <= shape.size(); ++k) {
            std::set<std::pair<std::vector<int>, std::vector<int>>> domain, image;
            for (const auto& t : enumerate_syt(shape)) {
                for (const auto& d : k_subsets(shape.size(), k)) {
                    domain.insert({t.entries(), d});
                    auto next = signed_promotion(SignedTableau(t, d));
                    CHECK(next.plus.shape() == shape);
                    CHECK(next.negatives.size() == static_cast<size_t>(k));
                    image.insert({next.plus.entries(), next.negatives});
                }
            }
            CHECK(domain == image);
        }
    }
}

TEST_CASE("brute-force super generating function worked values") {
    CHECK(super_gf_bruteforce(Partition::parse("3,3"), 1) ==
          poly({{2, 1}, {3, 2}, {4, 3}, {5, 4}, {6, 5}, {7, 5}, {8, 4}, {9, 3},
                {10, 2}, {11, 1}}));
    Partition shape = Partition::parse("3,2");
    CHECK(super_gf_bruteforce(shape, 0) == maj_gf_hook(shape));
    CHECK_THROWS_AS(super_gf_bruteforce(shape, 9), std::domain_error);
}

TEST_CASE("product formula grades") {
    Partition shape = Partition::parse("3,3");
    SuperGF gf(shape);
    CHECK(gf.grade(0) == maj_gf_hook(shape));
    long long content_sum = 0;
    for (Cell c : shape.cells()) content_sum += content(c);
    CHECK(gf.grade(6) == maj_gf_hook(shape).shifted(content_sum));
    CHECK_THROWS_AS(gf.grade(7), std::domain_error);
    CHECK_THROWS_AS(gf.grade(-1), std::domain_error);
}

TEST_CASE("product formula matches brute force") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& shape : partitions_of(n)) {
            SuperGF gf(shape);
            for (int k = 0; k <= n; ++k)
                CHECK(gf.grade(k) == super_gf_bruteforce(shape, k));
        }
    }
}

TEST_CASE("grades count signed tableaux at q = 1") {
    for (const auto& shape_text : {"3,2", "4,1", "2,2,1"}) {
        Partition shape = Partition::parse(shape_text);
        SuperGF gf(shape);
        for (int k = 0; k <= shape.size(); ++k) {
            CHECK(gf.grade(k).has_nonnegative_coefficients());
            CHECK(gf.grade(k).value_at_one() ==
                  syt_count_hook(shape) * binomial(shape.size(), k));
        }
    }
}
