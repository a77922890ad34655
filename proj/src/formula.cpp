#include "rough/formula.hpp"

#include <cassert>
#include <vector>

#include "rough/errors.hpp"

namespace rough {

Formula Formula::truth() {
    return Formula(std::make_shared<Node>(Node{Kind::truth, {}, {}, nullptr, nullptr}));
}

Formula Formula::falsity() {
    return Formula(std::make_shared<Node>(Node{Kind::falsity, {}, {}, nullptr, nullptr}));
}

Formula Formula::atom(std::string attribute, std::string value) {
    return Formula(std::make_shared<Node>(
        Node{Kind::atom, std::move(attribute), std::move(value), nullptr, nullptr}));
}

Formula Formula::negation(Formula f) {
    return Formula(std::make_shared<Node>(
        Node{Kind::negation, {}, {}, std::move(f.node_), nullptr}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<Node>(
        Node{Kind::conjunction, {}, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<Node>(
        Node{Kind::disjunction, {}, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
    return disjunction(negation(std::move(lhs)), std::move(rhs));
}

Formula Formula::box(Formula f) {
    return Formula(std::make_shared<Node>(Node{Kind::box, {}, {}, std::move(f.node_), nullptr}));
}

Formula Formula::diamond(Formula f) {
    return Formula(std::make_shared<Node>(
        Node{Kind::diamond, {}, {}, std::move(f.node_), nullptr}));
}

bool Formula::is_modal() const {
    switch (kind()) {
    case Kind::box:
    case Kind::diamond:
        return true;
    case Kind::negation:
        return child().is_modal();
    case Kind::conjunction:
    case Kind::disjunction:
        return left().is_modal() || right().is_modal();
    default:
        return false;
    }
}

bool Formula::operator==(const Formula& o) const {
    if (node_ == o.node_) return true;
    if (kind() != o.kind()) return false;
    switch (kind()) {
    case Kind::truth:
    case Kind::falsity:
        return true;
    case Kind::atom:
        return attribute() == o.attribute() && value() == o.value();
    case Kind::negation:
    case Kind::box:
    case Kind::diamond:
        return child() == o.child();
    case Kind::conjunction:
    case Kind::disjunction:
        return left() == o.left() && right() == o.right();
    }
    return false;
}

namespace {

// Precedence levels for printing: or < and < prefix operators < primary.
int precedence(Formula::Kind kind) {
    switch (kind) {
    case Formula::Kind::disjunction:
        return 1;
    case Formula::Kind::conjunction:
        return 2;
    case Formula::Kind::negation:
    case Formula::Kind::box:
    case Formula::Kind::diamond:
        return 3;
    default:
        return 4;
    }
}

void print(const Formula& f, int context, std::string& out) {
    const int own = precedence(f.kind());
    const bool parens = own < context;
    if (parens) out += '(';
    switch (f.kind()) {
    case Formula::Kind::truth:
        out += "true";
        break;
    case Formula::Kind::falsity:
        out += "false";
        break;
    case Formula::Kind::atom:
        out += f.attribute();
        out += '=';
        out += f.value();
        break;
    case Formula::Kind::negation:
        out += "not ";
        print(f.child(), own, out);
        break;
    case Formula::Kind::box:
        out += "box ";
        print(f.child(), own, out);
        break;
    case Formula::Kind::diamond:
        out += "dia ";
        print(f.child(), own, out);
        break;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
        // Left-associative: the right operand needs parentheses at equal
        // precedence so that e.g. Or(a, Or(b, c)) does not flatten.
        print(f.left(), own, out);
        out += f.kind() == Formula::Kind::conjunction ? " and " : " or ";
        print(f.right(), own + 1, out);
        break;
    }
    if (parens) out += ')';
}

enum class TokenKind { ident, keyword, equals, lparen, rparen, end };

struct Token {
    TokenKind kind;
    std::string_view text;
    std::size_t offset;
};

bool ident_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_';
}

class Parser {
public:
    Parser(std::string_view text, bool modal) : text_(text), modal_(modal) { advance(); }

    Formula parse() {
        Formula f = or_expr();
        if (current_.kind != TokenKind::end)
            throw ParseError("unexpected " + describe(current_), current_.offset);
        return f;
    }

private:
    bool is_keyword(std::string_view word) const {
        if (word == "and" || word == "or" || word == "not" || word == "true" ||
            word == "false")
            return true;
        return modal_ && (word == "box" || word == "dia");
    }

    static std::string describe(const Token& t) {
        switch (t.kind) {
        case TokenKind::end:
            return "end of input";
        case TokenKind::equals:
            return "'='";
        case TokenKind::lparen:
            return "'('";
        case TokenKind::rparen:
            return "')'";
        case TokenKind::keyword:
            return "keyword '" + std::string(t.text) + "'";
        default:
            return "'" + std::string(t.text) + "'";
        }
    }

    void advance() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            ++pos_;
        if (pos_ >= text_.size()) {
            current_ = {TokenKind::end, {}, text_.size()};
            return;
        }
        const std::size_t start = pos_;
        const char c = text_[pos_];
        if (c == '=') {
            ++pos_;
            current_ = {TokenKind::equals, text_.substr(start, 1), start};
        } else if (c == '(') {
            ++pos_;
            current_ = {TokenKind::lparen, text_.substr(start, 1), start};
        } else if (c == ')') {
            ++pos_;
            current_ = {TokenKind::rparen, text_.substr(start, 1), start};
        } else if (ident_char(c)) {
            while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
            std::string_view word = text_.substr(start, pos_ - start);
            current_ = {is_keyword(word) ? TokenKind::keyword : TokenKind::ident, word, start};
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    bool at_keyword(std::string_view word) const {
        return current_.kind == TokenKind::keyword && current_.text == word;
    }

    Formula or_expr() {
        Formula f = and_expr();
        while (at_keyword("or")) {
            advance();
            f = Formula::disjunction(std::move(f), and_expr());
        }
        return f;
    }

    Formula and_expr() {
        Formula f = not_expr();
        while (at_keyword("and")) {
            advance();
            f = Formula::conjunction(std::move(f), not_expr());
        }
        return f;
    }

    Formula not_expr() {
        if (at_keyword("not")) {
            advance();
            return Formula::negation(not_expr());
        }
        if (at_keyword("box")) {
            advance();
            return Formula::box(not_expr());
        }
        if (at_keyword("dia")) {
            advance();
            return Formula::diamond(not_expr());
        }
        return primary();
    }

    Formula primary() {
        if (at_keyword("true")) {
            advance();
            return Formula::truth();
        }
        if (at_keyword("false")) {
            advance();
            return Formula::falsity();
        }
        if (current_.kind == TokenKind::lparen) {
            advance();
            Formula f = or_expr();
            if (current_.kind != TokenKind::rparen)
                throw ParseError("expected ')' but found " + describe(current_),
                                 current_.offset);
            advance();
            return f;
        }
        if (current_.kind == TokenKind::ident) {
            std::string attribute(current_.text);
            advance();
            if (current_.kind != TokenKind::equals)
                throw ParseError("expected '=' after '" + attribute + "' but found " +
                                     describe(current_),
                                 current_.offset);
            advance();
            if (current_.kind != TokenKind::ident)
                throw ParseError("expected a value identifier but found " + describe(current_),
                                 current_.offset);
            std::string value(current_.text);
            advance();
            return Formula::atom(std::move(attribute), std::move(value));
        }
        throw ParseError("expected a formula but found " + describe(current_),
                         current_.offset);
    }

    std::string_view text_;
    bool modal_;
    std::size_t pos_ = 0;
    Token current_{TokenKind::end, {}, 0};
};

}  // namespace

std::string Formula::str() const {
    std::string out;
    print(*this, 0, out);
    return out;
}

Formula parse_formula(std::string_view text) { return Parser(text, false).parse(); }

Formula parse_modal_formula(std::string_view text) { return Parser(text, true).parse(); }

}  // namespace rough
