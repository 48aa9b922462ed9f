#include "cpg/graph6.hpp"

#include <stdexcept>

namespace cpg {

std::string encode_graph6(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    }
    int bit = 5;
    int acc = 0;
    for (int col = 1; col < g.n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (g.has_edge(row, col)) acc |= 1 << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bit = 5;
            }
        }
    }
    if (g.n > 1 && bit != 5) out.push_back(static_cast<char>(acc + 63));
    return out;
}

Graph decode_graph6(std::string_view s) {
    auto fail = [](const char* why) -> int { throw std::invalid_argument(std::string("graph6: ") + why); };
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) fail("truncated input");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) fail("byte out of range");
        return c - 63;
    };

    int n;
    if (!s.empty() && s[0] == '~') {
        ++pos;
        if (pos < s.size() && s[pos] == '~') fail("order too large");
        int b1 = next(), b2 = next(), b3 = next();
        n = (b1 << 12) | (b2 << 6) | b3;
    } else {
        n = next();
    }
    if (n > kMaxN) fail("order too large");

    Graph g(n);
    int bit = -1;
    int acc = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (bit < 0) {
                acc = next();
                bit = 5;
            }
            if ((acc >> bit) & 1) {
                if (g.deg[row] >= 3 || g.deg[col] >= 3) fail("degree exceeds 3");
                g.add_edge(row, col);
            }
            --bit;
        }
    }
    // Trailing padding bits must be zero and nothing may follow.
    while (bit >= 0) {
        if ((acc >> bit) & 1) fail("nonzero padding bits");
        --bit;
    }
    if (pos != s.size()) fail("trailing bytes");
    return g;
}

}  // namespace cpg
