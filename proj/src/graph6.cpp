#include "rainbow/graph6.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

constexpr int kBias = 63;

bool printable(char ch) { return ch >= 63 && ch <= 126; }

} // namespace

std::string graph6_encode(const graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

graph graph6_decode(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw invalid_input("graph6: empty input");
    for (char ch : text)
        if (!printable(ch)) throw invalid_input("graph6: character outside 63..126");

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] != 126) {
        n = text[0] - kBias;
        pos = 1;
    } else if (text.size() >= 2 && text[1] == 126) {
        if (text.size() < 8) throw invalid_input("graph6: truncated 8-byte length header");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | (text[i] - kBias);
        if (n <= 258047) throw invalid_input("graph6: non-minimal length header");
        pos = 8;
    } else {
        if (text.size() < 4) throw invalid_input("graph6: truncated 4-byte length header");
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | (text[i] - kBias);
        if (n <= 62) throw invalid_input("graph6: non-minimal length header");
        pos = 4;
    }
    if (n < 1) throw invalid_input("graph6: order 0 is not a graph here");
    if (n > graph::kMaxOrder)
        throw capacity_error("graph6: order " + std::to_string(n) + " exceeds cap " +
                             std::to_string(graph::kMaxOrder));

    const long long bits = n * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    if (static_cast<long long>(text.size() - pos) != bytes)
        throw invalid_input("graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                            std::to_string(text.size() - pos));

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + static_cast<std::size_t>(k / 6)] - kBias;
            if ((byte >> (5 - k % 6)) & 1) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
        }
    }
    if (bits % 6 != 0) {
        const int last = text.back() - kBias;
        const int pad = static_cast<int>(6 - bits % 6);
        if (last & ((1 << pad) - 1)) throw invalid_input("graph6: nonzero padding bits");
    }
    return graph::from_rows(static_cast<int>(n), rows);
}

} // namespace rainbow
