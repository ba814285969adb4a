#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Propositional formulas for logics with the "later" modality:
//   atoms, T, F, &, |, ->, ~> (irreflexive implication), @ (later).
// Formulas are immutable values backed by shared nodes; copying is cheap.

namespace laterproof {

enum class Kind {
    Atom,
    Top,
    Bot,
    And,
    Or,
    Imp,   // ->
    Simp,  // ~>  (implication over strict successors only)
    Later  // @   (true at all strict successors)
};

class Formula {
public:
    // Construction through factories only; a Formula is never null.
    static Formula atom(const std::string& name);
    static Formula top();
    static Formula bot();
    static Formula conj(Formula l, Formula r);
    static Formula disj(Formula l, Formula r);
    static Formula imp(Formula l, Formula r);
    static Formula simp(Formula l, Formula r);
    static Formula later(Formula body);
    static Formula neg(Formula f);  // sugar: f -> F

    Kind kind() const { return node_->kind; }
    bool is(Kind k) const { return node_->kind == k; }

    // Atom only.
    const std::string& atom_name() const;
    // Binary connectives only.
    Formula left() const;
    Formula right() const;
    // Later only.
    Formula body() const;

    // Number of AST nodes; every atom, constant, and connective counts 1.
    int length() const { return node_->length; }

    // Minimal-parenthesis rendering; parsing it back yields this formula.
    const std::string& text() const { return node_->text; }

    // Structural equality. The printer is injective, so cached text decides.
    bool operator==(const Formula& o) const {
        return node_ == o.node_ || node_->text == o.node_->text;
    }
    bool operator!=(const Formula& o) const { return !(*this == o); }

    // Total order by (length, text); used everywhere determinism is needed.
    bool operator<(const Formula& o) const {
        if (node_ == o.node_) return false;
        if (node_->length != o.node_->length) return node_->length < o.node_->length;
        return node_->text < o.node_->text;
    }

private:
    struct Node {
        Kind kind;
        std::string name;                // Atom
        std::shared_ptr<const Node> a;   // left child or Later body
        std::shared_ptr<const Node> b;   // right child
        int length = 1;
        std::string text;
    };

    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Formula make(Kind k, std::string name, const Formula* l, const Formula* r);

    std::shared_ptr<const Node> node_;
};

// Error raised by parse(); pos is a 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, std::string found, std::vector<std::string> expected,
               const std::string& detail = "");
    std::size_t pos;
    std::string found;
    std::vector<std::string> expected;
};

// Grammar, loosest to tightest:
//   formula := or_term (('->' | '~>') formula)?    right-associative,
//              '->' and '~>' may not be mixed at one level without parentheses
//   or_term := and_term ('|' and_term)*            right-associative
//   and_term := unary ('&' unary)*                 right-associative
//   unary := '@' unary | '!' unary | primary       '!f' parses as 'f -> F'
//   primary := atom | 'T' | 'F' | '(' formula ')'
//   atom := [a-z][a-zA-Z0-9_]*
Formula parse(const std::string& text);

// Same as f.text(); kept as a free function for symmetry with parse.
std::string print(const Formula& f);

// All subformulas of f, including f itself.
class FormulaSet;
FormulaSet subformulas(const Formula& f);

// subformulas(f) plus 'a ~> b' for every 'a -> b' among them. This closure
// bounds everything backward proof search can ever generate from f.
FormulaSet closure(const Formula& f);

// Names of the atoms occurring in f.
std::set<std::string> atom_names(const Formula& f);

// True iff s matches [a-z][a-zA-Z0-9_]*.
bool is_valid_atom_name(const std::string& s);

// A set of formulas: sorted by the (length, text) order, no duplicates.
class FormulaSet {
public:
    FormulaSet() = default;
    FormulaSet(std::initializer_list<Formula> fs);

    bool insert(const Formula& f);
    bool erase(const Formula& f);
    bool contains(const Formula& f) const;

    bool empty() const { return v_.empty(); }
    std::size_t size() const { return v_.size(); }
    const Formula& operator[](std::size_t i) const { return v_[i]; }
    std::vector<Formula>::const_iterator begin() const { return v_.begin(); }
    std::vector<Formula>::const_iterator end() const { return v_.end(); }

    // Functional helpers; premise construction reads naturally with these.
    FormulaSet with(const Formula& f) const;
    FormulaSet without(const Formula& f) const;
    FormulaSet union_with(const FormulaSet& o) const;
    FormulaSet intersection(const FormulaSet& o) const;
    bool intersects(const FormulaSet& o) const;
    bool subset_of(const FormulaSet& o) const;

    bool operator==(const FormulaSet& o) const { return v_ == o.v_; }
    bool operator!=(const FormulaSet& o) const { return !(v_ == o.v_); }
    bool operator<(const FormulaSet& o) const;  // lexicographic, for containers

    // Members joined by sep, in order.
    std::string text(const std::string& sep = ", ") const;

private:
    std::vector<Formula> v_;
};

}  // namespace laterproof
