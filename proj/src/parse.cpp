#include "dloc/parse.hpp"

#include <algorithm>
#include <cctype>

namespace dloc {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Ring& ring, int n_comm)
        : text_(text), ring_(ring), n_comm_(n_comm) {}

    Poly parse() {
        Poly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return p;
    }

private:
    std::string_view text_;
    const Ring& ring_;
    int n_comm_; // 0 = plain polynomial; >0 = normal-form operator mode
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Poly parse_expr() {
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        Poly sum = parse_term();
        if (negate) sum = -sum;
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Poly t = parse_term();
                sum = (c == '+') ? sum + t : sum - t;
            } else {
                break;
            }
        }
        return sum;
    }

    static bool starts_factor(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '_' || c == '(';
    }

    Poly parse_term() {
        int max_var_seen = -1; // normal-form tracking
        Poly prod = parse_factor(max_var_seen);
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                prod = prod * parse_factor(max_var_seen);
            } else if (starts_factor(c)) {
                prod = prod * parse_factor(max_var_seen); // juxtaposition
            } else {
                break;
            }
        }
        return prod;
    }

    Poly parse_factor(int& max_var_seen) {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            if (n_comm_ > 0) {
                for (const auto& t : inner.terms())
                    for (int i = n_comm_; i < inner.arity(); ++i)
                        if (t.mono[i] != 0) fail("derivation symbol inside parentheses");
            }
            unsigned e = parse_optional_exponent();
            return inner.pow(e);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_variable(max_var_seen);
        fail("expected factor");
    }

    unsigned parse_optional_exponent() {
        if (peek() != '^') return 1;
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent");
        return static_cast<unsigned>(std::stoul(parse_digits()));
    }

    std::string parse_digits() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Poly parse_rational() {
        std::string num = parse_digits();
        std::string den;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            // only a fraction if digits follow immediately
            size_t save = pos_;
            ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                den = parse_digits();
                if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
            } else {
                pos_ = save;
            }
        }
        Rational r = rational_from_string(den.empty() ? num : num + "/" + den);
        return Poly::constant(ring_, r);
    }

    Poly parse_variable(int& max_var_seen) {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto idx = ring_->index_of(name);
        if (!idx) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        if (n_comm_ > 0) {
            if (*idx < n_comm_ && max_var_seen >= n_comm_)
                fail("operator term not in normal form: variable after derivation symbol");
            max_var_seen = std::max(max_var_seen, *idx);
        }
        unsigned e = parse_optional_exponent();
        return Poly::variable(ring_, *idx, static_cast<int32_t>(e));
    }
};

} // namespace

Poly parse_poly(std::string_view text, const Ring& ring) {
    return Parser(text, ring, 0).parse();
}

Poly parse_poly_ordered(std::string_view text, const Ring& ring, int n_comm) {
    return Parser(text, ring, n_comm).parse();
}

} // namespace dloc
