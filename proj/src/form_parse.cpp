#include "curvex/form_parse.hpp"

#include <cctype>
#include <vector>

#include "curvex/numeric.hpp"

namespace curvex {

namespace {

struct Token {
    enum Kind { integer, name, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::end, "end of input"};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::integer, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Token::name, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::plus; break;
            case '-': k = Token::minus; break;
            case '*': k = Token::star; break;
            case '/': k = Token::slash; break;
            case '^': k = Token::caret; break;
            case '(': k = Token::lparen; break;
            case ')': k = Token::rparen; break;
            default:
                throw UsageError(std::string("unexpected character '") + c + "' in expression");
        }
        tok_ = {k, std::string(1, c)};
        ++i_;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;
};

Int parse_nat(Lexer& lx) {
    Token t = lx.take();
    if (t.kind != Token::integer)
        throw UsageError("expected a number, got '" + t.text + "'");
    return Int(t.text);
}

unsigned parse_exponent(Lexer& lx) {
    Int e = parse_nat(lx);
    if (e > 1000) throw UsageError("exponent out of range");
    return e.convert_to<unsigned>();
}

Poly parse_factor(Lexer& lx, const std::map<std::string, Rat>& params) {
    Token t = lx.take();
    if (t.kind != Token::name)
        throw UsageError("expected a variable or parameter name, got '" + t.text + "'");
    Poly base;
    if (t.text == "z" || t.text == "w") {
        base = Poly::variable(t.text);
    } else {
        auto it = params.find(t.text);
        if (it == params.end()) throw UsageError("unbound parameter '" + t.text + "'");
        base = Poly(it->second);
    }
    if (lx.peek().kind == Token::caret) {
        lx.take();
        base = base.pow(parse_exponent(lx));
    }
    return base;
}

Rat parse_coeff_tail(Lexer& lx, const Int& num) {
    if (lx.peek().kind != Token::slash) return Rat(num);
    lx.take();
    Int den = parse_nat(lx);
    if (den == 0) throw UsageError("zero denominator in coefficient");
    return Rat(num, den);
}

Poly parse_term(Lexer& lx, const std::map<std::string, Rat>& params) {
    Poly acc;
    if (lx.peek().kind == Token::integer) {
        acc = Poly(parse_coeff_tail(lx, parse_nat(lx)));
        if (lx.peek().kind != Token::star) return acc;
        lx.take();
        acc *= parse_factor(lx, params);
    } else {
        acc = parse_factor(lx, params);
    }
    while (lx.peek().kind == Token::star) {
        lx.take();
        acc *= parse_factor(lx, params);
    }
    return acc;
}

Rat parse_signed_rational(Lexer& lx) {
    bool neg = lx.peek().kind == Token::minus;
    if (neg) lx.take();
    Rat c = parse_coeff_tail(lx, parse_nat(lx));
    return neg ? -c : c;
}

}  // namespace

BinaryForm parse_form(const std::string& text, const std::map<std::string, Rat>& params) {
    Lexer lx(text);
    bool neg = lx.peek().kind == Token::minus;
    if (neg) lx.take();
    Poly acc = parse_term(lx, params);
    if (neg) acc = -acc;
    while (lx.peek().kind == Token::plus || lx.peek().kind == Token::minus) {
        bool minus = lx.take().kind == Token::minus;
        Poly t = parse_term(lx, params);
        if (minus)
            acc -= t;
        else
            acc += t;
    }
    if (lx.peek().kind != Token::end)
        throw UsageError("unexpected token '" + lx.peek().text + "' in form");
    return BinaryForm::from_poly(acc);
}

ParamValue parse_param_value(const std::string& text, unsigned digits) {
    Lexer lx(text);
    std::vector<std::pair<Rat, Rat>> factors;
    while (true) {
        Rat base = parse_signed_rational(lx);
        Rat e(1);
        if (lx.peek().kind == Token::caret) {
            lx.take();
            if (lx.peek().kind == Token::lparen) {
                lx.take();
                e = parse_signed_rational(lx);
                if (lx.take().kind != Token::rparen)
                    throw UsageError("missing ')' in parameter exponent");
            } else {
                e = parse_signed_rational(lx);
            }
        }
        factors.emplace_back(base, e);
        if (lx.peek().kind != Token::star) break;
        lx.take();
    }
    if (lx.peek().kind != Token::end)
        throw UsageError("unexpected token '" + lx.peek().text + "' in parameter value");
    bool exact = true;
    for (const auto& [base, e] : factors) {
        if (rat_den(e) != 1) exact = false;
        if (abs(rat_num(e)) > 1000) throw UsageError("parameter exponent out of range");
    }
    if (exact) {
        Rat acc(1);
        for (const auto& [base, e] : factors)
            acc *= rat_pow(base, rat_num(e).convert_to<long>());
        return acc;
    }
    PrecisionGuard guard(digits + 30);
    Ball acc = Ball::exact(1);
    for (const auto& [base, e] : factors) {
        if (rat_den(e) == 1) {
            acc = acc * Ball::from_rat(base).pow_int(rat_num(e).convert_to<long>());
        } else {
            Ball b = Ball::from_rat(base);
            if (!b.is_positive())
                throw std::domain_error("fractional power of a non-positive base");
            acc = acc * b.pow_rat(e);
        }
    }
    return CBall(acc);
}

std::pair<std::string, Rat> parse_param_binding(const std::string& text) {
    std::size_t eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
        throw UsageError("expected name=value in --param, got '" + text + "'");
    std::string name = text.substr(0, eq);
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw UsageError("bad parameter name '" + name + "'");
    if (name == "z" || name == "w")
        throw UsageError("parameter name '" + name + "' collides with a form variable");
    try {
        return {name, parse_rational(text.substr(eq + 1))};
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace curvex
