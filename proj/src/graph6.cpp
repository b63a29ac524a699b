#include "wmp/graph6.hpp"

namespace wmp {

namespace {

int byte_value(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw ParseError("truncated graph6 string", pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw ParseError("graph6 byte out of range", pos);
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view s) {
    std::size_t pos = 0;
    long n;
    if (byte_value(s, 0) == 63) {  // '~': three-byte size header
        n = (long{byte_value(s, 1)} << 12) | (byte_value(s, 2) << 6) |
            byte_value(s, 3);
        pos = 4;
    } else {
        n = byte_value(s, 0);
        pos = 1;
    }
    if (n < 1 || n > Graph::max_vertices)
        throw SizeOutOfRange("graph6 vertex count must be in 1..64, got " +
                             std::to_string(n));

    std::vector<std::uint64_t> rows(n, 0);
    int group = 0, have = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i) {
            if (have == 0) {
                group = byte_value(s, pos++);
                have = 6;
            }
            if (group >> --have & 1) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
        }
    while (have-- > 0)
        if (group >> have & 1)
            throw ParseError("nonzero padding bits", pos - 1);
    if (pos != s.size()) throw ParseError("trailing characters", pos);
    return Graph::from_rows(std::move(rows));
}

std::string encode_graph6(const Graph& g) {
    int n = g.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>((n >> 12 & 63) + 63));
        out.push_back(static_cast<char>((n >> 6 & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int group = 0, have = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = group << 1 | (g.adjacent(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = have = 0;
            }
        }
    if (have > 0)
        out.push_back(static_cast<char>((group << (6 - have)) + 63));
    return out;
}

}  // namespace wmp
