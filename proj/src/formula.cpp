#include "preserver/formula.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace preserver {

struct Formula::Node {
    enum Kind { Num, Var, Add, Sub, Mul, Div, Neg, Pow } kind;
    Rat value;        // Num
    unsigned exp = 0; // Pow
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;

NodePtr make(Formula::Node::Kind k, NodePtr l = nullptr, NodePtr r = nullptr,
             Rat value = Rat(0), unsigned exp = 0) {
    auto n = std::make_shared<Formula::Node>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    n->value = std::move(value);
    n->exp = exp;
    return n;
}

struct Token {
    enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
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
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::End, ""};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '.')
                throw std::invalid_argument("formula: decimal literals are not supported, use fractions");
            tok_ = {Token::Int, s_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Ident, s_.substr(start, pos_ - start)};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': tok_ = {Token::Plus, "+"}; return;
            case '-': tok_ = {Token::Minus, "-"}; return;
            case '*': tok_ = {Token::Star, "*"}; return;
            case '/': tok_ = {Token::Slash, "/"}; return;
            case '^': tok_ = {Token::Caret, "^"}; return;
            case '(': tok_ = {Token::LParen, "("}; return;
            case ')': tok_ = {Token::RParen, ")"}; return;
            default:
                throw std::invalid_argument(std::string("formula: unexpected character '") + c + "'");
        }
    }

    const std::string& s_;
    size_t pos_ = 0;
    Token tok_;
};

class Parser {
  public:
    explicit Parser(const std::string& s) : lex_(s) {}

    NodePtr parse(std::string* var_out) {
        NodePtr e = expr();
        if (lex_.peek().kind != Token::End)
            throw std::invalid_argument("formula: trailing input after expression");
        *var_out = var_;
        return e;
    }

  private:
    NodePtr expr() {
        NodePtr e = term();
        for (;;) {
            if (lex_.peek().kind == Token::Plus) {
                lex_.take();
                e = make(Formula::Node::Add, e, term());
            } else if (lex_.peek().kind == Token::Minus) {
                lex_.take();
                e = make(Formula::Node::Sub, e, term());
            } else {
                return e;
            }
        }
    }

    bool starts_primary(Token::Kind k) const {
        return k == Token::Int || k == Token::Ident || k == Token::LParen;
    }

    NodePtr term() {
        NodePtr e = unary();
        for (;;) {
            Token::Kind k = lex_.peek().kind;
            if (k == Token::Star) {
                lex_.take();
                e = make(Formula::Node::Mul, e, unary());
            } else if (k == Token::Slash) {
                lex_.take();
                e = make(Formula::Node::Div, e, unary());
            } else if (starts_primary(k)) {
                e = make(Formula::Node::Mul, e, unary());  // implicit multiplication
            } else {
                return e;
            }
        }
    }

    NodePtr unary() {
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            return make(Formula::Node::Neg, unary());
        }
        if (lex_.peek().kind == Token::Plus) {
            lex_.take();
            return unary();
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (lex_.peek().kind != Token::Caret)
            return base;
        lex_.take();
        Token e = lex_.take();
        if (e.kind != Token::Int)
            throw std::invalid_argument("formula: exponent must be a non-negative integer literal");
        mpz_class z(e.text);
        if (!z.fits_uint_p())
            throw std::invalid_argument("formula: exponent too large");
        return make(Formula::Node::Pow, base, nullptr, Rat(0), static_cast<unsigned>(z.get_ui()));
    }

    NodePtr primary() {
        Token t = lex_.take();
        if (t.kind == Token::Int)
            return make(Formula::Node::Num, nullptr, nullptr, Rat(mpz_class(t.text)));
        if (t.kind == Token::Ident) {
            if (var_.empty())
                var_ = t.text;
            else if (var_ != t.text)
                throw std::invalid_argument("formula: multiple variables ('" + var_ + "', '" +
                                            t.text + "')");
            return make(Formula::Node::Var);
        }
        if (t.kind == Token::LParen) {
            NodePtr e = expr();
            if (lex_.take().kind != Token::RParen)
                throw std::invalid_argument("formula: missing ')'");
            return e;
        }
        throw std::invalid_argument("formula: expected a number, variable or '('");
    }

    Lexer lex_;
    std::string var_;
};

Rat eval_rat(const Formula::Node& n, const Rat& x) {
    using K = Formula::Node;
    switch (n.kind) {
        case K::Num: return n.value;
        case K::Var: return x;
        case K::Add: return eval_rat(*n.lhs, x) + eval_rat(*n.rhs, x);
        case K::Sub: return eval_rat(*n.lhs, x) - eval_rat(*n.rhs, x);
        case K::Mul: return eval_rat(*n.lhs, x) * eval_rat(*n.rhs, x);
        case K::Div: return eval_rat(*n.lhs, x) / eval_rat(*n.rhs, x);
        case K::Neg: return -eval_rat(*n.lhs, x);
        case K::Pow: return eval_rat(*n.lhs, x).pow(n.exp);
    }
    throw std::logic_error("formula: bad node");
}

RatPoly eval_poly(const Formula::Node& n) {
    using K = Formula::Node;
    switch (n.kind) {
        case K::Num: return RatPoly::constant(n.value);
        case K::Var: return RatPoly::x();
        case K::Add: return eval_poly(*n.lhs) + eval_poly(*n.rhs);
        case K::Sub: return eval_poly(*n.lhs) - eval_poly(*n.rhs);
        case K::Mul: return eval_poly(*n.lhs) * eval_poly(*n.rhs);
        case K::Div: {
            RatPoly d = eval_poly(*n.rhs);
            if (d.degree() > 0)
                throw std::domain_error("formula: polynomial division by a non-constant");
            if (d.is_zero())
                throw std::domain_error("formula: division by zero");
            return eval_poly(*n.lhs) / d.lc();
        }
        case K::Neg: return -eval_poly(*n.lhs);
        case K::Pow: return eval_poly(*n.lhs).pow(n.exp);
    }
    throw std::logic_error("formula: bad node");
}

}  // namespace

Formula Formula::parse(const std::string& text) {
    Formula f;
    Parser p(text);
    f.root_ = p.parse(&f.var_);
    return f;
}

Rat Formula::eval_at(const Rat& value) const { return eval_rat(*root_, value); }

RatPoly Formula::as_poly() const { return eval_poly(*root_); }

}  // namespace preserver
