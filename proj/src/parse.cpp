#include "lazcad/parse.hpp"

#include <cctype>

namespace lazcad {

namespace {

class Parser {
public:
    Parser(const std::string& text, const VarOrderPtr& order) : text_(text), order_(order) {}

    MultiPoly run() {
        skip_ws();
        MultiPoly p = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    MultiPoly parse_sum() {
        MultiPoly acc = parse_term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc = acc + parse_term();
            } else if (peek() == '-') {
                ++pos_;
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            std::string digits = read_digits();
            if (digits.empty()) throw ParseError("expected exponent", at);
            unsigned long e = 0;
            try {
                e = std::stoul(digits);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", at);
            }
            return base.pow(static_cast<std::uint32_t>(e));
        }
        return base;
    }

    MultiPoly parse_base() {
        skip_ws();
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -parse_factor();
        }
        if (c == '+') {
            ++pos_;
            return parse_factor();
        }
        if (c == '(') {
            ++pos_;
            MultiPoly inner = parse_sum();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_variable();
        throw ParseError("expected polynomial term", pos_);
    }

    MultiPoly parse_number() {
        std::size_t at = pos_;
        std::string num = read_digits();
        std::string text = num;
        std::size_t save = pos_;
        skip_ws();
        if (peek() == '/') {
            // Rational literal: integer '/' integer, no general division.
            ++pos_;
            skip_ws();
            std::string den = read_digits();
            if (den.empty()) throw ParseError("expected denominator", pos_);
            text += "/" + den;
        } else {
            pos_ = save;
        }
        auto r = rat_from_string(text);
        if (!r) throw ParseError("bad numeric literal '" + text + "'", at);
        return MultiPoly::constant(order_, *r);
    }

    MultiPoly parse_variable() {
        std::size_t at = pos_;
        std::string name;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name += c;
                ++pos_;
            } else {
                break;
            }
        }
        auto idx = order_->index_of(name);
        if (!idx) throw ParseError("undeclared variable '" + name + "'", at, true);
        return MultiPoly::variable(order_, *idx);
    }

    std::string read_digits() {
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            out += text_[pos_];
            ++pos_;
        }
        return out;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    const VarOrderPtr& order_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const VarOrderPtr& order) {
    return Parser(text, order).run();
}

}  // namespace lazcad
