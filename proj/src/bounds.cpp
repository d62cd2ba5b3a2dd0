#include "rainbow/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

int floor_log2(std::int64_t n) {
    if (n < 1) throw invalid_input("floor_log2: n must be positive");
    return std::bit_width(static_cast<std::uint64_t>(n)) - 1;
}

int ceil_log2(std::int64_t n) {
    if (n < 1) throw invalid_input("ceil_log2: n must be positive");
    return n == 1 ? 0 : std::bit_width(static_cast<std::uint64_t>(n - 1));
}

std::int64_t lemma1_upper(std::int64_t n) {
    if (n < 2) throw invalid_input("lemma1_upper: n must be at least 2");
    const std::int64_t f = floor_log2(n) - 1;
    return n * ceil_log2(n) - f * f;
}

lemma2_bounds lemma2_lower(std::int64_t n) {
    if (n < 2) throw invalid_input("lemma2_lower: n must be at least 2");
    const double nd = static_cast<double>(n);
    const double lg = std::log2(nd);
    lemma2_bounds b;
    b.lower_i = std::min(nd / 2.0 * lg, nd * lg - 4.0 * nd);
    if (n >= kLemma2iiThreshold) b.lower_ii = nd * lg - 2.0 * nd;
    return b;
}

std::vector<bounds_row> ratio_table(std::span<const std::int64_t> ns) {
    std::vector<bounds_row> rows;
    rows.reserve(ns.size());
    for (std::int64_t n : ns) {
        if (n < 3) throw invalid_input("ratio_table: n must be at least 3, got " + std::to_string(n));
        bounds_row row;
        row.n = n;
        row.upper = lemma1_upper(n);
        auto low = lemma2_lower(n);
        row.lower_i = low.lower_i;
        row.lower_ii = low.lower_ii;
        const double scale = static_cast<double>(n) * std::log2(static_cast<double>(n));
        row.upper_ratio = static_cast<double>(row.upper) / scale;
        row.lower_ratio = std::max(row.lower_i, row.lower_ii.value_or(row.lower_i)) / scale;
        rows.push_back(row);
    }
    return rows;
}

bool sandwich_check(std::span<const std::int64_t> ns) {
    for (std::int64_t n : ns)
        if (n < kLemma2iiThreshold)
            throw invalid_input("sandwich_check: n = " + std::to_string(n) + " is below 2^17");
    for (const auto& row : ratio_table(ns)) {
        const double lg = std::log2(static_cast<double>(row.n));
        if (row.lower_ratio > row.upper_ratio) return false;
        if (row.lower_ratio < 1.0 - 2.0 / lg - 1e-12) return false;
        if (row.upper_ratio > 1.0 + 1.0 / lg) return false;
    }
    return true;
}

void write_bounds_csv(std::ostream& out, std::span<const bounds_row> rows) {
    out << "n,upper,lower_i,lower_ii,upper_ratio,lower_ratio\n";
    char buf[256];
    for (const auto& r : rows) {
        std::string lower_ii = "NA";
        if (r.lower_ii) {
            std::snprintf(buf, sizeof buf, "%.6f", *r.lower_ii);
            lower_ii = buf;
        }
        std::snprintf(buf, sizeof buf, "%lld,%lld,%.6f,%s,%.12f,%.12f\n", static_cast<long long>(r.n),
                      static_cast<long long>(r.upper), r.lower_i, lower_ii.c_str(), r.upper_ratio,
                      r.lower_ratio);
        out << buf;
    }
}

} // namespace rainbow
