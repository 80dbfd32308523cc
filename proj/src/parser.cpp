#include "supercurve/parser.hpp"

#include <cctype>

namespace supercurve {

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    char get() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input", line, col);
        ++col;
        return text[pos++];
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }
};

struct Parser {
    Lexer lex;
    const AlgebraSignature& sig;

    Parser(const std::string& t, const AlgebraSignature& s) : lex(t), sig(s) {}

    Rational integer() {
        if (!std::isdigit(static_cast<unsigned char>(lex.peek()))) lex.fail("expected integer");
        std::string digits;
        while (lex.pos < lex.text.size() && std::isdigit(static_cast<unsigned char>(lex.text[lex.pos]))) {
            digits += lex.text[lex.pos++];
            ++lex.col;
        }
        return Rational(boost::multiprecision::cpp_int(digits));
    }

    int small_int(const char* what) {
        bool neg = false;
        if (lex.peek() == '-') {
            lex.get();
            neg = true;
        }
        Rational v = integer();
        if (v > 1000000) lex.fail(std::string(what) + " out of range");
        int r = static_cast<int>(numerator(v).convert_to<long>());
        return neg ? -r : r;
    }

    SuperElement atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.get();
            SuperElement e = expr();
            if (lex.peek() != ')') lex.fail("expected ')'");
            lex.get();
            return e;
        }
        if (c == '-') {
            lex.get();
            return -factor();
        }
        if (c == '+') {
            lex.get();
            return factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational num = integer();
            if (lex.peek() == '/') {
                lex.get();
                Rational den = integer();
                if (den == 0) lex.fail("zero denominator");
                return SuperElement::scalar(sig, GaussianRational(num / den));
            }
            return SuperElement::scalar(sig, GaussianRational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (lex.pos < lex.text.size() &&
                   (std::isalnum(static_cast<unsigned char>(lex.text[lex.pos])))) {
                id += lex.text[lex.pos++];
                ++lex.col;
            }
            if (id == "i") return SuperElement::scalar(sig, GaussianRational::i());
            if (id == "z" || id == "t") return SuperElement::even_var(sig);
            if (id.rfind("th", 0) == 0) {
                int k = parse_index(id.substr(2));
                if (k < 1 || k > sig.N) lex.fail("unknown odd coordinate " + id);
                return SuperElement::gen(sig, k - 1);
            }
            if (id.rfind("eta", 0) == 0) {
                int k = parse_index(id.substr(3));
                if (k < 1 || k > sig.M) lex.fail("unknown odd parameter " + id);
                return SuperElement::gen(sig, sig.N + k - 1);
            }
            lex.fail("unknown identifier " + id);
        }
        lex.fail(std::string("unexpected character '") + c + "'");
    }

    int parse_index(const std::string& s) {
        if (s.empty()) return -1;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
        return std::stoi(s);
    }

    SuperElement factor() {
        SuperElement base = atom();
        if (lex.peek() == '^') {
            lex.get();
            int e = small_int("exponent");
            return base.pow(e);
        }
        return base;
    }

    SuperElement term() {
        SuperElement r = factor();
        while (lex.peek() == '*') {
            lex.get();
            r *= factor();
        }
        return r;
    }

    SuperElement expr() {
        SuperElement r = term();
        while (true) {
            char c = lex.peek();
            if (c == '+') {
                lex.get();
                r += term();
            } else if (c == '-') {
                lex.get();
                r -= term();
            } else {
                break;
            }
        }
        return r;
    }

    SuperElement run() {
        SuperElement e = expr();
        if (!lex.eof()) lex.fail("trailing input");
        return e;
    }
};

} // namespace

SuperElement parse_expression(const std::string& text, const AlgebraSignature& sig) {
    Parser p(text, sig);
    return p.run();
}

} // namespace supercurve
