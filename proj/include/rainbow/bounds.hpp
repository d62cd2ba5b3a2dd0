#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace rainbow {

inline constexpr std::int64_t kLemma2iiThreshold = std::int64_t{1} << 17;

struct lemma2_bounds {
    double lower_i = 0.0;
    std::optional<double> lower_ii; // defined for n >= 2^17
};

struct bounds_row {
    std::int64_t n = 0;
    std::int64_t upper = 0;
    double lower_i = 0.0;
    std::optional<double> lower_ii;
    double upper_ratio = 0.0;
    double lower_ratio = 0.0;
};

int floor_log2(std::int64_t n);
int ceil_log2(std::int64_t n);

/// n*ceil(log2 n) - (floor(log2 n) - 1)^2, integer exact.
std::int64_t lemma1_upper(std::int64_t n);
lemma2_bounds lemma2_lower(std::int64_t n);

std::vector<bounds_row> ratio_table(std::span<const std::int64_t> ns);

/// Requires every n >= 2^17 (invalid_input otherwise).
bool sandwich_check(std::span<const std::int64_t> ns);

void write_bounds_csv(std::ostream& out, std::span<const bounds_row> rows);

} // namespace rainbow
