/*
   Copyright 2026 The qgwa Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qgwa/parser.hpp"

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "qgwa/errors.hpp"

namespace qgwa {

namespace {

struct Node {
    enum class Kind { Number, Symbol, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind;
    std::size_t pos;
    Integer number;
    char symbol = 0;
    std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr leaf(Node::Kind k, std::size_t pos) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->pos = pos;
    return n;
}

NodePtr binary(Node::Kind k, std::size_t pos, NodePtr l, NodePtr r) {
    auto n = leaf(k, pos);
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

class Parser {
   public:
    explicit Parser(std::string_view text) : s_(text) {}

    NodePtr parse() {
        NodePtr n = expr();
        skip();
        if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return n;
    }

   private:
    std::string_view s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError("syntax error at position " + std::to_string(i_) + ": " + what);
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool accept(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr n = term();
        for (;;) {
            skip();
            std::size_t pos = i_;
            if (accept('+'))
                n = binary(Node::Kind::Add, pos, std::move(n), term());
            else if (accept('-'))
                n = binary(Node::Kind::Sub, pos, std::move(n), term());
            else
                return n;
        }
    }

    NodePtr term() {
        NodePtr n = unary();
        for (;;) {
            skip();
            std::size_t pos = i_;
            if (accept('*'))
                n = binary(Node::Kind::Mul, pos, std::move(n), unary());
            else if (accept('/'))
                n = binary(Node::Kind::Div, pos, std::move(n), unary());
            else
                return n;
        }
    }

    NodePtr unary() {
        skip();
        std::size_t pos = i_;
        if (accept('-')) {
            auto n = leaf(Node::Kind::Neg, pos);
            n->lhs = unary();
            return n;
        }
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        skip();
        std::size_t pos = i_;
        if (!accept('^')) return base;
        // Signed exponent; recursion makes ^ right associative.
        skip();
        std::size_t sign_pos = i_;
        NodePtr exponent;
        if (accept('-')) {
            exponent = leaf(Node::Kind::Neg, sign_pos);
            exponent->lhs = power();
        } else {
            accept('+');
            exponent = power();
        }
        return binary(Node::Kind::Pow, pos, std::move(base), std::move(exponent));
    }

    NodePtr primary() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        std::size_t pos = i_;
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            auto n = leaf(Node::Kind::Number, pos);
            n->number = Integer(std::string(s_.substr(pos, i_ - pos)));
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            std::string_view name = s_.substr(pos, i_ - pos);
            if (name.size() != 1 || std::string_view("qzhxy").find(name[0]) == std::string_view::npos)
                throw UnknownSymbol("unknown symbol '" + std::string(name) + "' at position " + std::to_string(pos));
            auto n = leaf(Node::Kind::Symbol, pos);
            n->symbol = name[0];
            return n;
        }
        if (accept('(')) {
            NodePtr n = expr();
            if (!accept(')')) fail("expected ')'");
            return n;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

std::string at(const Node& n) { return " at position " + std::to_string(n.pos); }

// ---------------------------------------------------------------------------
// Evaluation into K[h^{+-1}]

LaurentPoly eval_laurent(const Node& n, const Field& field);

long eval_exponent(const Node& n, const Field& field) {
    LaurentPoly p = eval_laurent(n, field);
    if (p.is_zero()) return 0;
    if (!p.is_constant()) throw SyntaxError("exponent must be an integer" + at(n));
    auto r = p.coefficient(0).as_rational();
    if (!r || r->get_den() != 1 || !r->get_num().fits_slong_p())
        throw SyntaxError("exponent must be an integer" + at(n));
    return r->get_num().get_si();
}

LaurentPoly invert_unit(const LaurentPoly& p, const Node& where) {
    if (p.is_zero()) throw DivisionByZero("division by zero" + at(where));
    if (!p.is_monomial()) throw HInDenominator("h may not remain in a denominator" + at(where));
    const auto& [k, c] = *p.terms().begin();
    return LaurentPoly::monomial(c.inverse(), -k);
}

LaurentPoly eval_laurent(const Node& n, const Field& field) {
    switch (n.kind) {
        case Node::Kind::Number:
            return LaurentPoly::constant(field.rational(Rational(n.number)));
        case Node::Kind::Symbol:
            switch (n.symbol) {
                case 'q': return LaurentPoly::constant(field.q());
                case 'z': return LaurentPoly::constant(field.zeta());
                case 'h': return LaurentPoly::h_power(field, 1);
                default:
                    throw UnknownSymbol(std::string("generator '") + n.symbol +
                                        "' is not allowed in a Laurent polynomial" + at(n));
            }
        case Node::Kind::Add: return eval_laurent(*n.lhs, field) + eval_laurent(*n.rhs, field);
        case Node::Kind::Sub: return eval_laurent(*n.lhs, field) - eval_laurent(*n.rhs, field);
        case Node::Kind::Mul: return eval_laurent(*n.lhs, field) * eval_laurent(*n.rhs, field);
        case Node::Kind::Div: return eval_laurent(*n.lhs, field) * invert_unit(eval_laurent(*n.rhs, field), n);
        case Node::Kind::Neg: return -eval_laurent(*n.lhs, field);
        case Node::Kind::Pow: {
            LaurentPoly base = eval_laurent(*n.lhs, field);
            long k = eval_exponent(*n.rhs, field);
            if (k < 0) {
                base = invert_unit(base, n);
                k = -k;
            }
            LaurentPoly r = LaurentPoly::h_power(field, 0);
            for (long i = 0; i < k; ++i) r = r * base;
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Evaluation into A(a(h), q)

GWAElement invert_element(const GWAElement& u, const Node& where) {
    if (u.is_zero()) throw DivisionByZero("division by zero" + at(where));
    if (!u.is_homogeneous() || u.components().begin()->first != 0)
        throw HInDenominator("only units of K[h^{+-1}] can be inverted" + at(where));
    return GWAElement::homogeneous(u.algebra(), 0, invert_unit(u.components().begin()->second, where));
}

GWAElement eval_element(const Node& n, const Algebra& alg) {
    const Field& field = alg.field();
    switch (n.kind) {
        case Node::Kind::Number:
            return GWAElement::scalar(alg, field.rational(Rational(n.number)));
        case Node::Kind::Symbol:
            switch (n.symbol) {
                case 'x': return GWAElement::x(alg);
                case 'y': return GWAElement::y(alg);
                default: return GWAElement::homogeneous(alg, 0, eval_laurent(n, field));
            }
        case Node::Kind::Add: return eval_element(*n.lhs, alg) + eval_element(*n.rhs, alg);
        case Node::Kind::Sub: return eval_element(*n.lhs, alg) - eval_element(*n.rhs, alg);
        case Node::Kind::Mul: return eval_element(*n.lhs, alg) * eval_element(*n.rhs, alg);
        case Node::Kind::Neg: return -eval_element(*n.lhs, alg);
        case Node::Kind::Div: return eval_element(*n.lhs, alg) * invert_element(eval_element(*n.rhs, alg), n);
        case Node::Kind::Pow: {
            GWAElement base = eval_element(*n.lhs, alg);
            long k = eval_exponent(*n.rhs, field);
            if (k < 0) {
                base = invert_element(base, n);
                k = -k;
            }
            return power(base, static_cast<int>(k));
        }
    }
    throw std::logic_error("unreachable");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

LaurentPoly parse_laurent(std::string_view text, const Field& field) {
    NodePtr ast = Parser(text).parse();
    return eval_laurent(*ast, field);
}

FieldElement parse_scalar(std::string_view text, const Field& field) {
    LaurentPoly p = parse_laurent(text, field);
    if (!p.is_constant()) throw SyntaxError("expected a scalar, got " + to_string(p));
    return p.coefficient(0);
}

GWAElement parse_element(std::string_view text, const Algebra& alg) {
    NodePtr ast = Parser(text).parse();
    return eval_element(*ast, alg);
}

GeneralImages parse_images(std::string_view text, const Algebra& alg) {
    GeneralImages imgs{GWAElement::h(alg), GWAElement::x(alg), GWAElement::y(alg)};
    bool seen[3] = {false, false, false};
    while (!trim(text).empty()) {
        std::size_t semi = text.find(';');
        std::string_view item = trim(text.substr(0, semi));
        text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
        if (item.empty()) continue;
        std::size_t arrow = item.find("->");
        if (arrow == std::string_view::npos) throw SyntaxError("expected 'generator -> image' in '" + std::string(item) + "'");
        std::string_view gen = trim(item.substr(0, arrow));
        std::string_view rhs = item.substr(arrow + 2);
        int slot = gen == "h" ? 0 : gen == "x" ? 1 : gen == "y" ? 2 : -1;
        if (slot < 0) throw UnknownSymbol("images are given for h, x and y, not '" + std::string(gen) + "'");
        if (seen[slot]) throw SyntaxError("image of " + std::string(gen) + " given twice");
        seen[slot] = true;
        GWAElement img = parse_element(rhs, alg);
        (slot == 0 ? imgs.h : slot == 1 ? imgs.x : imgs.y) = std::move(img);
    }
    return imgs;
}

bool mentions_symbol(std::string_view text, char symbol) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != symbol) continue;
        bool left = i > 0 && (std::isalnum(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '_');
        bool right = i + 1 < text.size() && (std::isalnum(static_cast<unsigned char>(text[i + 1])) || text[i + 1] == '_');
        if (!left && !right) return true;
    }
    return false;
}

}  // namespace qgwa
