#include "laterproof/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace laterproof {

namespace {

// Binding strength; higher binds tighter. Imp and Simp share a level and are
// kept apart by an explicit mixing check instead of a precedence gap.
int prec(Kind k) {
    switch (k) {
        case Kind::Atom:
        case Kind::Top:
        case Kind::Bot: return 5;
        case Kind::Later: return 4;
        case Kind::And: return 3;
        case Kind::Or: return 2;
        case Kind::Imp:
        case Kind::Simp: return 1;
    }
    return 0;
}

const char* op_token(Kind k) {
    switch (k) {
        case Kind::And: return "&";
        case Kind::Or: return "|";
        case Kind::Imp: return "->";
        case Kind::Simp: return "~>";
        default: return "";
    }
}

bool valid_atom_name(const std::string& s) {
    if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

Formula Formula::make(Kind k, std::string name, const Formula* l, const Formula* r) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->name = std::move(name);
    if (l) n->a = l->node_;
    if (r) n->b = r->node_;
    n->length = 1 + (l ? l->length() : 0) + (r ? r->length() : 0);

    switch (k) {
        case Kind::Atom: n->text = n->name; break;
        case Kind::Top: n->text = "T"; break;
        case Kind::Bot: n->text = "F"; break;
        case Kind::Later:
            // Parenthesize any binary body; '@' binds tighter than all infixes.
            n->text = prec(l->kind()) < prec(Kind::Later) ? "@(" + l->text() + ")"
                                                          : "@" + l->text();
            break;
        default: {
            int p = prec(k);
            bool pl = prec(l->kind()) <= p;  // right-associative: left same-level needs parens
            bool pr = prec(r->kind()) < p ||
                      (prec(r->kind()) == p && r->kind() != k);  // keep -> and ~> apart
            n->text = (pl ? "(" + l->text() + ")" : l->text());
            n->text += std::string(" ") + op_token(k) + " ";
            n->text += (pr ? "(" + r->text() + ")" : r->text());
        }
    }
    return Formula(std::move(n));
}

Formula Formula::atom(const std::string& name) {
    if (!valid_atom_name(name))
        throw std::invalid_argument("invalid atom name: '" + name + "'");
    return make(Kind::Atom, name, nullptr, nullptr);
}

Formula Formula::top() {
    static const Formula t = make(Kind::Top, "", nullptr, nullptr);
    return t;
}

Formula Formula::bot() {
    static const Formula f = make(Kind::Bot, "", nullptr, nullptr);
    return f;
}

Formula Formula::conj(Formula l, Formula r) { return make(Kind::And, "", &l, &r); }
Formula Formula::disj(Formula l, Formula r) { return make(Kind::Or, "", &l, &r); }
Formula Formula::imp(Formula l, Formula r) { return make(Kind::Imp, "", &l, &r); }
Formula Formula::simp(Formula l, Formula r) { return make(Kind::Simp, "", &l, &r); }
Formula Formula::later(Formula b) { return make(Kind::Later, "", &b, nullptr); }
Formula Formula::neg(Formula f) { return imp(std::move(f), bot()); }

const std::string& Formula::atom_name() const {
    if (node_->kind != Kind::Atom) throw std::logic_error("atom_name on non-atom");
    return node_->name;
}

Formula Formula::left() const {
    if (!node_->a || !node_->b) throw std::logic_error("left on non-binary formula");
    return Formula(node_->a);
}

Formula Formula::right() const {
    if (!node_->b) throw std::logic_error("right on non-binary formula");
    return Formula(node_->b);
}

Formula Formula::body() const {
    if (node_->kind != Kind::Later) throw std::logic_error("body on non-later formula");
    return Formula(node_->a);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

std::string describe(const std::vector<std::string>& expected) {
    std::string out;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) out += expected.size() == 2 && i == 1 ? " or " : ", ";
        out += expected[i];
    }
    return out;
}

struct Token {
    enum Type { Ident, Top, Bot, LParen, RParen, AndOp, OrOp, ImpOp, SimpOp, LaterOp, NotOp, End };
    Type type;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (c >= 'a' && c <= 'z') {
            std::size_t j = i + 1;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Ident, s.substr(i, j - i), start});
            i = j;
        } else if (c >= 'A' && c <= 'Z') {
            std::size_t j = i + 1;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            std::string word = s.substr(i, j - i);
            if (word == "T")
                out.push_back({Token::Top, word, start});
            else if (word == "F")
                out.push_back({Token::Bot, word, start});
            else
                throw ParseError(start, quoted(word), {"'T'", "'F'", "atom"},
                                 "atoms start with a lowercase letter");
            i = j;
        } else if (c == '(') {
            out.push_back({Token::LParen, "(", start});
            ++i;
        } else if (c == ')') {
            out.push_back({Token::RParen, ")", start});
            ++i;
        } else if (c == '&') {
            out.push_back({Token::AndOp, "&", start});
            ++i;
        } else if (c == '|') {
            out.push_back({Token::OrOp, "|", start});
            ++i;
        } else if (c == '@') {
            out.push_back({Token::LaterOp, "@", start});
            ++i;
        } else if (c == '!') {
            out.push_back({Token::NotOp, "!", start});
            ++i;
        } else if (c == '-') {
            if (i + 1 < s.size() && s[i + 1] == '>') {
                out.push_back({Token::ImpOp, "->", start});
                i += 2;
            } else {
                throw ParseError(start, quoted(s.substr(i, 1)), {"'->'"});
            }
        } else if (c == '~') {
            if (i + 1 < s.size() && s[i + 1] == '>') {
                out.push_back({Token::SimpOp, "~>", start});
                i += 2;
            } else {
                throw ParseError(start, quoted(s.substr(i, 1)), {"'~>'"});
            }
        } else {
            throw ParseError(start, quoted(s.substr(i, 1)),
                             {"atom", "'T'", "'F'", "'('", "'@'", "'!'"});
        }
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& s) : toks_(tokenize(s)) {}

    Formula run() {
        Formula f = arrow();
        if (peek().type != Token::End)
            throw ParseError(peek().pos, quoted(peek().text), {"end of input", "operator"});
        return f;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    Token take() { return toks_[i_++]; }

    Formula arrow() {
        // Collect the whole chain first so mixing '->' with '~>' is caught
        // before any tree is built.
        std::vector<Formula> terms;
        std::vector<Token> ops;
        terms.push_back(or_term());
        while (peek().type == Token::ImpOp || peek().type == Token::SimpOp) {
            ops.push_back(take());
            terms.push_back(or_term());
        }
        for (std::size_t i = 1; i < ops.size(); ++i) {
            if (ops[i].type != ops[0].type)
                throw ParseError(ops[i].pos, quoted(ops[i].text), {quoted(ops[0].text)},
                                 "mixing '->' and '~>' requires parentheses");
        }
        Formula f = terms.back();
        for (std::size_t i = terms.size() - 1; i-- > 0;)
            f = ops[0].type == Token::ImpOp ? Formula::imp(terms[i], f)
                                            : Formula::simp(terms[i], f);
        return f;
    }

    Formula or_term() {
        std::vector<Formula> terms{and_term()};
        while (peek().type == Token::OrOp) {
            take();
            terms.push_back(and_term());
        }
        Formula f = terms.back();
        for (std::size_t i = terms.size() - 1; i-- > 0;) f = Formula::disj(terms[i], f);
        return f;
    }

    Formula and_term() {
        std::vector<Formula> terms{unary()};
        while (peek().type == Token::AndOp) {
            take();
            terms.push_back(unary());
        }
        Formula f = terms.back();
        for (std::size_t i = terms.size() - 1; i-- > 0;) f = Formula::conj(terms[i], f);
        return f;
    }

    Formula unary() {
        if (peek().type == Token::LaterOp) {
            take();
            return Formula::later(unary());
        }
        if (peek().type == Token::NotOp) {
            take();
            return Formula::neg(unary());
        }
        return primary();
    }

    Formula primary() {
        Token t = take();
        switch (t.type) {
            case Token::Ident: return Formula::atom(t.text);
            case Token::Top: return Formula::top();
            case Token::Bot: return Formula::bot();
            case Token::LParen: {
                Formula f = arrow();
                if (peek().type != Token::RParen)
                    throw ParseError(peek().pos, quoted(peek().text), {"')'"});
                take();
                return f;
            }
            default:
                throw ParseError(t.pos, t.type == Token::End ? "end of input" : quoted(t.text),
                                 {"atom", "'T'", "'F'", "'('", "'@'", "'!'"});
        }
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t pos_, std::string found_, std::vector<std::string> expected_,
                       const std::string& detail)
    : std::runtime_error("parse error at position " + std::to_string(pos_) + ": found " + found_ +
                         ", expected " + describe(expected_) +
                         (detail.empty() ? "" : " (" + detail + ")")),
      pos(pos_),
      found(std::move(found_)),
      expected(std::move(expected_)) {}

Formula parse(const std::string& text) { return Parser(text).run(); }

std::string print(const Formula& f) { return f.text(); }

// ---------------------------------------------------------------------------
// Measures

namespace {

void collect_subformulas(const Formula& f, FormulaSet& out) {
    if (!out.insert(f)) return;
    switch (f.kind()) {
        case Kind::And:
        case Kind::Or:
        case Kind::Imp:
        case Kind::Simp:
            collect_subformulas(f.left(), out);
            collect_subformulas(f.right(), out);
            break;
        case Kind::Later: collect_subformulas(f.body(), out); break;
        default: break;
    }
}

}  // namespace

FormulaSet subformulas(const Formula& f) {
    FormulaSet out;
    collect_subformulas(f, out);
    return out;
}

FormulaSet closure(const Formula& f) {
    FormulaSet out = subformulas(f);
    FormulaSet extra;
    for (const Formula& g : out)
        if (g.is(Kind::Imp)) extra.insert(Formula::simp(g.left(), g.right()));
    return out.union_with(extra);
}

std::set<std::string> atom_names(const Formula& f) {
    std::set<std::string> out;
    for (const Formula& g : subformulas(f))
        if (g.is(Kind::Atom)) out.insert(g.atom_name());
    return out;
}

bool is_valid_atom_name(const std::string& s) { return valid_atom_name(s); }

// ---------------------------------------------------------------------------
// FormulaSet

FormulaSet::FormulaSet(std::initializer_list<Formula> fs) {
    for (const Formula& f : fs) insert(f);
}

bool FormulaSet::insert(const Formula& f) {
    auto it = std::lower_bound(v_.begin(), v_.end(), f);
    if (it != v_.end() && *it == f) return false;
    v_.insert(it, f);
    return true;
}

bool FormulaSet::erase(const Formula& f) {
    auto it = std::lower_bound(v_.begin(), v_.end(), f);
    if (it == v_.end() || !(*it == f)) return false;
    v_.erase(it);
    return true;
}

bool FormulaSet::contains(const Formula& f) const {
    auto it = std::lower_bound(v_.begin(), v_.end(), f);
    return it != v_.end() && *it == f;
}

FormulaSet FormulaSet::with(const Formula& f) const {
    FormulaSet out = *this;
    out.insert(f);
    return out;
}

FormulaSet FormulaSet::without(const Formula& f) const {
    FormulaSet out = *this;
    out.erase(f);
    return out;
}

FormulaSet FormulaSet::union_with(const FormulaSet& o) const {
    FormulaSet out = *this;
    for (const Formula& f : o) out.insert(f);
    return out;
}

FormulaSet FormulaSet::intersection(const FormulaSet& o) const {
    FormulaSet out;
    for (const Formula& f : v_)
        if (o.contains(f)) out.insert(f);
    return out;
}

bool FormulaSet::intersects(const FormulaSet& o) const {
    const FormulaSet& small = size() <= o.size() ? *this : o;
    const FormulaSet& big = size() <= o.size() ? o : *this;
    for (const Formula& f : small)
        if (big.contains(f)) return true;
    return false;
}

bool FormulaSet::subset_of(const FormulaSet& o) const {
    for (const Formula& f : v_)
        if (!o.contains(f)) return false;
    return true;
}

bool FormulaSet::operator<(const FormulaSet& o) const {
    return std::lexicographical_compare(v_.begin(), v_.end(), o.v_.begin(), o.v_.end());
}

std::string FormulaSet::text(const std::string& sep) const {
    std::string out;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) out += sep;
        out += v_[i].text();
    }
    return out;
}

}  // namespace laterproof
