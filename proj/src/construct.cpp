#include "gwalk/graph.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace gwalk {

namespace {

// Recursive-descent parser for the construction-expression grammar.
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Graph parse() {
        Graph g = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after expression");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("construction expression: " + what + " at offset " +
                         std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string identifier() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected a constructor name");
        std::string name(text_.substr(start, pos_ - start));
        for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return name;
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    std::vector<long> integer_list(char separator) {
        std::vector<long> vals;
        vals.push_back(integer());
        while (eat(separator)) vals.push_back(integer());
        return vals;
    }

    std::string quoted_string() {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '"') fail("expected '\"'");
        ++pos_;
        size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
        if (pos_ >= text_.size()) fail("unterminated string literal");
        std::string s(text_.substr(start, pos_ - start));
        ++pos_;
        return s;
    }

    static int narrow(long v, const char* what) {
        if (v < 0 || v > 1'000'000) throw ParseError(std::string(what) + " out of range");
        return static_cast<int>(v);
    }

    Graph expression() {
        std::string name = identifier();
        if (name == "graph6") {
            expect(':');
            return parse_graph6(quoted_string());
        }
        expect('(');
        Graph g = dispatch(name);
        expect(')');
        return g;
    }

    Graph dispatch(const std::string& name) {
        if (name == "cycle") return cycle(narrow(integer(), "cycle order"));
        if (name == "complete") return complete(narrow(integer(), "complete order"));
        if (name == "complete_multipartite") {
            auto parts_l = integer_list(',');
            std::vector<int> parts;
            for (long p : parts_l) parts.push_back(narrow(p, "part size"));
            return complete_multipartite(parts);
        }
        if (name == "hamming") {
            int d = narrow(integer(), "hamming dimension");
            expect(',');
            int q = narrow(integer(), "hamming alphabet");
            return hamming(d, q);
        }
        if (name == "cay") {
            int n = narrow(integer(), "circulant order");
            expect(';');
            auto conn_l = integer_list(',');
            std::vector<int> conn;
            for (long s : conn_l) conn.push_back(static_cast<int>(s));
            return circulant(n, conn);
        }
        if (name == "line") return line_graph(expression());
        if (name == "complement") return complement(expression());
        if (name == "coclique") {
            Graph g = expression();
            expect(',');
            int m = narrow(integer(), "coclique multiplicity");
            if (m < 1) throw std::domain_error("coclique(g,m) requires m >= 1");
            return coclique_extension(g, m);
        }
        if (name == "cartesian") {
            Graph a = expression();
            expect(',');
            Graph b = expression();
            return cartesian_product(a, b);
        }
        fail("unknown constructor '" + name + "'");
    }

    std::string_view text_;
    size_t pos_ = 0;
};

} // namespace

Graph construct(std::string_view expr) { return ExprParser(expr).parse(); }

} // namespace gwalk
