#include <doctest.h>

#include <cmath>
#include <sstream>

#include "rainbow/bounds.hpp"
#include "rainbow/errors.hpp"

using namespace rainbow;

TEST_CASE("integer logs") {
    CHECK(floor_log2(1) == 0);
    CHECK(ceil_log2(1) == 0);
    CHECK(floor_log2(8) == 3);
    CHECK(ceil_log2(8) == 3);
    CHECK(floor_log2(9) == 3);
    CHECK(ceil_log2(9) == 4);
    CHECK(ceil_log2(std::int64_t{1} << 40) == 40);
}

TEST_CASE("lemma1_upper") {
    CHECK(lemma1_upper(8) == 20);
    CHECK(lemma1_upper(20) == 91);
    CHECK(lemma1_upper(2) == 2);
    CHECK_THROWS_AS(lemma1_upper(1), invalid_input);
    // long double has a 64-bit mantissa, enough to evaluate the formula exactly here.
    for (std::int64_t n = 2; n <= (std::int64_t{1} << 40); n = n * 3 / 2 + 1) {
        const long double lg = std::log2l(static_cast<long double>(n));
        const long double c = std::ceil(lg - 1e-15L);
        const long double f = std::floor(lg + 1e-15L);
        const long double expected = static_cast<long double>(n) * c - (f - 1) * (f - 1);
        CHECK(static_cast<long double>(lemma1_upper(n)) == expected);
    }
}

TEST_CASE("lemma2_lower") {
    auto a = lemma2_lower(1024);
    CHECK(a.lower_i == 5120.0);
    CHECK_FALSE(a.lower_ii);
    auto b = lemma2_lower(std::int64_t{1} << 17);
    REQUIRE(b.lower_ii);
    CHECK(*b.lower_ii == 1966080.0);
    CHECK(lemma2_lower(4).lower_i == -8.0);
}

TEST_CASE("ratio_table closed forms") {
    std::vector<std::int64_t> ns{std::int64_t{1} << 20, 1000000, std::int64_t{1} << 17};
    auto rows = ratio_table(ns);
    CHECK(rows[0].lower_ratio == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(rows[0].upper_ratio == doctest::Approx(1.0 - 361.0 / (20.0 * 1048576.0)).epsilon(1e-14));
    CHECK(rows[1].upper_ratio == doctest::Approx(19999676.0 / (1e6 * std::log2(1e6))).epsilon(1e-14));
    CHECK(rows[1].upper_ratio == doctest::Approx(1.0034).epsilon(1e-4));
    CHECK(std::abs(rows[2].lower_ratio - 15.0 / 17.0) < 1e-12);
    std::vector<std::int64_t> tiny{2};
    CHECK_THROWS_AS(ratio_table(tiny), invalid_input);
}

TEST_CASE("sandwich_check") {
    std::vector<std::int64_t> ok{std::int64_t{1} << 17, std::int64_t{1} << 20, 1000000, std::int64_t{1} << 30};
    CHECK(sandwich_check(ok));
    std::vector<std::int64_t> single{std::int64_t{1} << 17};
    CHECK(sandwich_check(single));
    std::vector<std::int64_t> bad{std::int64_t{1} << 16, std::int64_t{1} << 17};
    CHECK_THROWS_AS(sandwich_check(bad), invalid_input);
}

TEST_CASE("bounds row invariants") {
    for (std::int64_t n = 3; n <= 5000; ++n) {
        auto row = ratio_table(std::span<const std::int64_t>(&n, 1))[0];
        CHECK(row.lower_i <= static_cast<double>(row.upper));
    }
    for (int e = 17; e <= 40; ++e) {
        std::int64_t n = std::int64_t{1} << e;
        auto row = ratio_table(std::span<const std::int64_t>(&n, 1))[0];
        REQUIRE(row.lower_ii);
        CHECK(*row.lower_ii <= static_cast<double>(row.upper));
    }
}

TEST_CASE("csv output") {
    std::vector<std::int64_t> ns{1024, std::int64_t{1} << 17};
    std::ostringstream out;
    write_bounds_csv(out, ratio_table(ns));
    std::istringstream in(out.str());
    std::string header, first, second;
    std::getline(in, header);
    std::getline(in, first);
    std::getline(in, second);
    CHECK(header == "n,upper,lower_i,lower_ii,upper_ratio,lower_ratio");
    CHECK(first == "1024,10159,5120.000000,NA,0.992089843750,0.500000000000");
    CHECK(second.rfind("131072,2227968,1114112.000000,1966080.000000,", 0) == 0);
    CHECK(second.substr(second.size() - 14) == "0.882352941176");
}
