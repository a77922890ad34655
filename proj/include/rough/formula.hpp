#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace rough {

// Immutable descriptor-language AST with the modal extension. Leaves are
// (attribute, value) atoms plus the constants; inner nodes are the Boolean
// connectives and the modal operators box/diamond. Attribute and value are
// raw tokens; whether they exist in a concrete table is checked at
// evaluation time.
//
// Concrete syntax:
//   formula  := or_expr
//   or_expr  := and_expr { "or" and_expr }
//   and_expr := not_expr { "and" not_expr }
//   not_expr := "not" not_expr | "box" not_expr | "dia" not_expr | primary
//   primary  := "true" | "false" | atom | "(" formula ")"
//   atom     := IDENT "=" IDENT
//   IDENT    := [A-Za-z0-9_]+
// Keywords are reserved, lowercase, case-sensitive. "box"/"dia" exist only
// in the modal grammar; the plain grammar treats them as identifiers.
class Formula {
public:
    enum class Kind : unsigned char {
        truth,
        falsity,
        atom,
        negation,
        conjunction,
        disjunction,
        box,
        diamond,
    };

    static Formula truth();
    static Formula falsity();
    static Formula atom(std::string attribute, std::string value);
    static Formula negation(Formula f);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);
    // not lhs or rhs
    static Formula implication(Formula lhs, Formula rhs);
    static Formula box(Formula f);
    static Formula diamond(Formula f);

    Kind kind() const { return node_->kind; }

    // Atom accessors.
    const std::string& attribute() const { return node_->attribute; }
    const std::string& value() const { return node_->value; }

    // negation / box / diamond operand.
    Formula child() const { return Formula(node_->lhs); }

    // conjunction / disjunction operands.
    Formula left() const { return Formula(node_->lhs); }
    Formula right() const { return Formula(node_->rhs); }

    // True when a box or diamond occurs anywhere in the tree.
    bool is_modal() const;

    // Structural equality.
    bool operator==(const Formula& o) const;
    bool operator!=(const Formula& o) const { return !(*this == o); }

    // Canonical text with minimal parentheses; parsing it back yields a
    // structurally equal formula.
    std::string str() const;

private:
    struct Node {
        Kind kind;
        std::string attribute;
        std::string value;
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
    };

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// Parses the plain descriptor grammar (no modal operators). Throws
// ParseError with a byte offset on malformed input.
Formula parse_formula(std::string_view text);

// Parses the modal grammar ("box"/"dia" prefix operators allowed).
Formula parse_modal_formula(std::string_view text);

}  // namespace rough
