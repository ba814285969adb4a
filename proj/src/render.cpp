#include "laterproof/render.hpp"

#include <sstream>

namespace laterproof {

namespace {

int latex_prec(Kind k) {
    switch (k) {
        case Kind::Atom:
        case Kind::Top:
        case Kind::Bot: return 5;
        case Kind::Later: return 4;
        case Kind::And: return 3;
        case Kind::Or: return 2;
        default: return 1;
    }
}

std::string latex_atom(const std::string& name) {
    if (name.size() == 1) return name;
    std::string body;
    for (char c : name) {
        if (c == '_') body += "\\_";
        else body += c;
    }
    return "\\mathit{" + body + "}";
}

std::string latex_rec(const Formula& f) {
    switch (f.kind()) {
        case Kind::Atom: return latex_atom(f.atom_name());
        case Kind::Top: return "\\top";
        case Kind::Bot: return "\\bot";
        case Kind::Later: {
            std::string body = latex_rec(f.body());
            if (latex_prec(f.body().kind()) < latex_prec(Kind::Later))
                body = "(" + body + ")";
            return "\\blacktriangleright " + body;
        }
        default: {
            const char* op = f.is(Kind::And)    ? " \\wedge "
                             : f.is(Kind::Or)   ? " \\vee "
                             : f.is(Kind::Imp)  ? " \\rightarrow "
                                                : " \\vartriangleright ";
            int p = latex_prec(f.kind());
            std::string l = latex_rec(f.left()), r = latex_rec(f.right());
            if (latex_prec(f.left().kind()) <= p) l = "(" + l + ")";
            if (latex_prec(f.right().kind()) < p ||
                (latex_prec(f.right().kind()) == p && f.right().kind() != f.kind()))
                r = "(" + r + ")";
            return l + op + r;
        }
    }
}

void latex_postfix(const Derivation& d, std::ostringstream& out) {
    for (const Derivation& p : d.premises) latex_postfix(p, out);
    out << "\\infer" << d.premises.size() << "[\\textsf{" << rule_name_text(d.rule) << "}]{"
        << latex_sequent(d.conclusion) << "}\n";
}

void text_tree(const Derivation& d, int depth, std::ostringstream& out) {
    for (int i = 0; i < depth; ++i) out << "  ";
    out << d.conclusion.text() << "  [" << rule_name_text(d.rule);
    if (!d.principal.empty()) out << " on " << d.principal.text();
    out << "]\n";
    for (const Derivation& p : d.premises) text_tree(p, depth + 1, out);
}

}  // namespace

std::string latex_formula(const Formula& f) { return latex_rec(f); }

std::string latex_sequent(const Sequent& s) {
    std::string out;
    for (std::size_t i = 0; i < s.ante.size(); ++i) {
        if (i) out += ", ";
        out += latex_formula(s.ante[i]);
    }
    out += out.empty() ? "\\Rightarrow" : " \\Rightarrow";
    for (std::size_t i = 0; i < s.succ.size(); ++i) {
        out += i ? ", " : " ";
        out += latex_formula(s.succ[i]);
    }
    return out;
}

std::string render_latex(const Derivation& d) {
    std::ostringstream out;
    out << "\\begin{prooftree}\n";
    latex_postfix(d, out);
    out << "\\end{prooftree}\n";
    return out.str();
}

std::string render_text(const Derivation& d) {
    std::ostringstream out;
    text_tree(d, 0, out);
    return out.str();
}

std::string render_text(const KripkeModel& m, int refuting_world) {
    std::ostringstream out;
    out << "worlds:";
    for (int w : m.worlds) out << " " << w;
    out << "\nrel:";
    if (m.rel.empty()) out << " (none)";
    for (const auto& [a, b] : m.rel) out << " (" << a << "," << b << ")";
    out << "\nvaluation:";
    if (m.valuation.empty()) out << " (no atoms)";
    out << "\n";
    for (const auto& [atom, ext] : m.valuation) {
        out << "  " << atom << ":";
        if (ext.empty()) out << " (nowhere)";
        for (int w : ext) out << " " << w;
        out << "\n";
    }
    out << "refuting world: " << refuting_world << "\n";
    return out.str();
}

}  // namespace laterproof
