#include "xspec/graph6.hpp"

#include <vector>

namespace xspec {

namespace {

constexpr int kShortMax = 62;

void append_order(std::string& out, int n) {
    if (n <= kShortMax) {
        out.push_back(static_cast<char>(63 + n));
        return;
    }
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
}

int char_value(char c) {
    int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63) throw Graph6Error(std::string("invalid graph6 character '") + c + "'");
    return v;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) throw Graph6Error("order exceeds graph6 limit");
    std::string out;
    append_order(out, n);
    int acc = 0;
    int bits = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

Graph graph6_decode(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw Graph6Error("empty graph6 record");

    std::size_t pos = 0;
    int n = 0;
    if (text[0] == 126) {
        if (text.size() >= 2 && text[1] == 126) throw Graph6Error("8-byte graph6 size form is not supported");
        if (text.size() < 4) throw Graph6Error("truncated graph6 size prefix");
        for (int i = 1; i <= 3; ++i) n = (n << 6) | char_value(text[i]);
        pos = 4;
    } else {
        n = char_value(text[0]);
        pos = 1;
    }

    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t need = (pairs + 5) / 6;
    if (text.size() - pos != need)
        throw Graph6Error("graph6 bit stream has " + std::to_string(text.size() - pos) +
                          " characters, expected " + std::to_string(need));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int v = char_value(text[pos + k / 6]);
            if ((v >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (pairs % 6 != 0) {
        int last = char_value(text.back());
        if (last & ((1 << (6 - pairs % 6)) - 1)) throw Graph6Error("nonzero graph6 padding bits");
    }
    return Graph(n, edges);
}

}  // namespace xspec
