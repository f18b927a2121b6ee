#pragma once

// Exact scalar expression grammar:
//
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := "-"? atom
//   atom   := INT | INT "/" INT | "i" | "sqrt" "(" INT ")"
//           | "e" "(" INT "," INT ")" | "(" expr ")"
//
// e(p,q) denotes exp(2*pi*i*p/q).  INT "/" INT binds as a rational literal;
// a general quotient with an integer divisor prints with the divisor
// parenthesized so that parse(print(x)) is structurally x.

#include "modinv/scalar.hpp"

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modinv {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
  public:
    enum class Kind { Int, Rat, ImagUnit, Sqrt, RootOfUnity, Neg, Add, Sub, Mul, Div };

    Kind kind;
    long long a = 0, b = 1;  // Int: a; Rat: a/b; Sqrt: a; RootOfUnity: e(a,b)
    ExprPtr lhs, rhs;        // Neg uses lhs only

    static ExprPtr integer(long long v) { return node(Kind::Int, v, 1); }
    static ExprPtr rational(long long p, long long q) {
        if (q < 1) throw Error("rational denominator must be >= 1");
        return node(Kind::Rat, p, q);
    }
    static ExprPtr imag_unit() { return node(Kind::ImagUnit, 0, 0); }
    static ExprPtr sqrt_nat(long long n) {
        if (n < 0) throw Error("sqrt argument must be a natural number");
        return node(Kind::Sqrt, n, 0);
    }
    static ExprPtr root(long long p, long long q) {
        if (q < 1) throw Error("e(p,q) requires q >= 1");
        return node(Kind::RootOfUnity, p, q);
    }
    static ExprPtr neg(ExprPtr x) { return node(Kind::Neg, std::move(x), nullptr); }
    static ExprPtr add(ExprPtr x, ExprPtr y) { return node(Kind::Add, std::move(x), std::move(y)); }
    static ExprPtr sub(ExprPtr x, ExprPtr y) { return node(Kind::Sub, std::move(x), std::move(y)); }
    static ExprPtr mul(ExprPtr x, ExprPtr y) { return node(Kind::Mul, std::move(x), std::move(y)); }
    static ExprPtr div(ExprPtr x, ExprPtr y) { return node(Kind::Div, std::move(x), std::move(y)); }

    friend bool operator==(const Expr& x, const Expr& y) {
        if (x.kind != y.kind || x.a != y.a || x.b != y.b) return false;
        if (bool(x.lhs) != bool(y.lhs) || bool(x.rhs) != bool(y.rhs)) return false;
        if (x.lhs && !(*x.lhs == *y.lhs)) return false;
        if (x.rhs && !(*x.rhs == *y.rhs)) return false;
        return true;
    }

  private:
    static ExprPtr node(Kind k, long long a, long long b) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->a = a;
        e->b = b;
        return e;
    }
    static ExprPtr node(Kind k, ExprPtr l, ExprPtr r) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }
};

inline bool structurally_equal(const ExprPtr& x, const ExprPtr& y) { return *x == *y; }

namespace detail {

class ExprParser {
  public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

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
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    long long integer_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer", start);
        long long v = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            if (v > 922337203685477580LL) throw ParseError("integer literal too large", start);
            v = v * 10 + (text_[i] - '0');
        }
        return v;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (eat('+'))
                e = Expr::add(e, term());
            else if (eat('-'))
                e = Expr::sub(e, term());
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            if (eat('*'))
                e = Expr::mul(e, factor());
            else if (eat('/'))
                e = Expr::div(e, factor());
            else
                return e;
        }
    }

    ExprPtr factor() {
        if (eat('-')) return Expr::neg(atom());
        return atom();
    }

    ExprPtr atom() {
        skip_ws();
        std::size_t start = pos_;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long p = integer_literal();
            // INT "/" INT is a rational literal; it binds tighter than term
            // division, so "1/2/3" is Rat(1,2) divided by 3.
            std::size_t save = pos_;
            if (eat('/')) {
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    long long q = integer_literal();
                    if (q < 1) throw ParseError("rational denominator must be >= 1", save);
                    return Expr::rational(p, q);
                }
                pos_ = save;  // general division, handled by term()
            }
            return Expr::integer(p);
        }
        if (c == '(') {
            eat('(');
            ExprPtr e = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t p = pos_;
            while (p < text_.size() && std::isalpha(static_cast<unsigned char>(text_[p]))) ++p;
            std::string_view name = text_.substr(pos_, p - pos_);
            if (name == "i") {
                pos_ = p;
                return Expr::imag_unit();
            }
            if (name == "sqrt") {
                pos_ = p;
                if (!eat('(')) throw ParseError("expected '(' after sqrt", pos_);
                long long n = integer_literal();
                if (!eat(')')) throw ParseError("expected ')'", pos_);
                return Expr::sqrt_nat(n);
            }
            if (name == "e") {
                pos_ = p;
                if (!eat('(')) throw ParseError("expected '(' after e", pos_);
                bool negp = eat('-');
                long long pnum = integer_literal();
                if (negp) pnum = -pnum;
                if (!eat(',')) throw ParseError("expected ',' in e(p,q)", pos_);
                long long q = integer_literal();
                if (!eat(')')) throw ParseError("expected ')'", pos_);
                if (q < 1) throw ParseError("e(p,q) requires q >= 1", start);
                return Expr::root(pnum, q);
            }
            throw ParseError("unknown atom '" + std::string(name) + "'", start);
        }
        throw ParseError("expected atom", start);
    }
};

// Precedence levels for printing: 0 additive, 1 multiplicative, 2 atom.
inline int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 0;
        case Expr::Kind::Mul:
        case Expr::Kind::Div:
        case Expr::Kind::Neg: return 1;
        default: return 2;
    }
}

inline void print_to(const Expr& e, std::string& out) {
    auto child = [&out](const Expr& c, int min_prec) {
        if (precedence(c) < min_prec) {
            out += '(';
            print_to(c, out);
            out += ')';
        } else {
            print_to(c, out);
        }
    };
    switch (e.kind) {
        case Expr::Kind::Int: out += std::to_string(e.a); break;
        case Expr::Kind::Rat:
            out += std::to_string(e.a);
            out += '/';
            out += std::to_string(e.b);
            break;
        case Expr::Kind::ImagUnit: out += 'i'; break;
        case Expr::Kind::Sqrt:
            out += "sqrt(";
            out += std::to_string(e.a);
            out += ')';
            break;
        case Expr::Kind::RootOfUnity:
            out += "e(";
            out += std::to_string(e.a);
            out += ',';
            out += std::to_string(e.b);
            out += ')';
            break;
        case Expr::Kind::Neg:
            out += '-';
            child(*e.lhs, 2);
            break;
        case Expr::Kind::Add:
            child(*e.lhs, 0);
            out += '+';
            child(*e.rhs, 1);
            break;
        case Expr::Kind::Sub:
            child(*e.lhs, 0);
            out += '-';
            child(*e.rhs, 1);
            break;
        case Expr::Kind::Mul:
            child(*e.lhs, 1);
            out += '*';
            child(*e.rhs, 2);
            break;
        case Expr::Kind::Div: {
            child(*e.lhs, 1);
            out += '/';
            // An integer or rational divisor must be parenthesized so the
            // result does not re-parse as a rational literal.
            const Expr& r = *e.rhs;
            bool parens = precedence(r) < 2 || r.kind == Expr::Kind::Int || r.kind == Expr::Kind::Rat;
            if (parens) {
                out += '(';
                print_to(r, out);
                out += ')';
            } else {
                print_to(r, out);
            }
            break;
        }
    }
}

}  // namespace detail

inline ExprPtr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

inline std::string print_expr(const ExprPtr& e) {
    std::string out;
    detail::print_to(*e, out);
    return out;
}

// Evaluates at the current working precision.  Division by a value of
// modulus below `eps` reports a singular expression.
inline Cplx eval_expr(const ExprPtr& e, double eps = 1e-24) {
    switch (e->kind) {
        case Expr::Kind::Int: return Cplx(Real(e->a));
        case Expr::Kind::Rat: return Cplx(Real(e->a) / Real(e->b));
        case Expr::Kind::ImagUnit: return Cplx(Real(0), Real(1));
        case Expr::Kind::Sqrt: return Cplx(sqrt(Real(e->a)));
        case Expr::Kind::RootOfUnity: return root_of_unity(e->a, e->b);
        case Expr::Kind::Neg: return -eval_expr(e->lhs, eps);
        case Expr::Kind::Add: return eval_expr(e->lhs, eps) + eval_expr(e->rhs, eps);
        case Expr::Kind::Sub: return eval_expr(e->lhs, eps) - eval_expr(e->rhs, eps);
        case Expr::Kind::Mul: return eval_expr(e->lhs, eps) * eval_expr(e->rhs, eps);
        case Expr::Kind::Div: {
            Cplx d = eval_expr(e->rhs, eps);
            if (d.abs() < eps) throw ComputationError("singular expression: division by ~0");
            return eval_expr(e->lhs, eps) / d;
        }
    }
    throw Error("unreachable expression kind");
}

inline Cplx eval_expr(std::string_view text, double eps = 1e-24) {
    return eval_expr(parse_expr(text), eps);
}

}  // namespace modinv
