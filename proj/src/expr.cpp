#include "wmp/expr.hpp"

#include <cctype>
#include <optional>

namespace wmp {

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    void expect(char c, const char* what) {
        if (!peek_is(c)) throw ParseError(std::string("expected ") + what, pos);
        ++pos;
    }

    long integer() {
        skip_ws();
        std::size_t start = pos;
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > Graph::max_vertices + 1) v = Graph::max_vertices + 1;
            ++pos;
        }
        if (pos == start) throw ParseError("expected an integer", pos);
        if (v < 1) throw ParseError("integer parameter must be at least 1", start);
        return v;
    }

    std::optional<long> try_integer() {
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            return integer();
        return std::nullopt;
    }

    Graph atom() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("expected a graph atom", pos);
        char c = s[pos];
        if (c == 'K' || c == 'E' || c == 'P' || c == 'C') {
            std::size_t save = pos++;
            if (auto a = try_integer()) {
                int m = static_cast<int>(*a);
                if (c == 'K' && peek_is(',')) {
                    ++pos;
                    return complete_bipartite_graph(m, static_cast<int>(integer()));
                }
                switch (c) {
                    case 'K': return complete_graph(m);
                    case 'E': return empty_graph(m);
                    case 'P': return path_graph(m);
                    default:  return cycle_graph(m);
                }
            }
            pos = save;  // not a family atom; fall through to a name
        }
        std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])))
            ++pos;
        std::string_view name = s.substr(start, pos - start);
        if (name == "paw" || name == "Y") return paw_graph();
        if (name == "diamond") return diamond_graph();
        if (name == "cricket") return cricket_graph();
        if (name == "dart") return dart_graph();
        if (name == "hourglass") return hourglass_graph();
        throw ParseError("unknown graph name '" + std::string(name) + "'", start);
    }

    Graph term() {
        if (auto count = try_integer()) {
            expect('*', "'*' after repetition count");
            Graph a = atom();
            Graph out = a;
            for (long i = 1; i < *count; ++i) out = disjoint_union(out, a);
            return out;
        }
        return atom();
    }

    Graph expr() {
        Graph out = term();
        while (peek_is('+')) {
            ++pos;
            out = disjoint_union(out, term());
        }
        skip_ws();
        if (pos != s.size()) throw ParseError("unexpected character", pos);
        return out;
    }
};

}  // namespace

Graph parse_expr(std::string_view s) {
    Parser p{s};
    return p.expr();
}

}  // namespace wmp
