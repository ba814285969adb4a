#pragma once

#include <string>

#include "laterproof/calculus.hpp"
#include "laterproof/semantics.hpp"

// Human-facing output: indented derivation trees and countermodel summaries
// for terminals, and proof trees as LaTeX. The LaTeX output is a prooftree
// environment built from postfix \infer<n>[label]{sequent} lines (ebproof
// macros), which carry rules of any arity; the transition rule routinely has
// more premises than bussproofs-style packages accept.

namespace laterproof {

// Formula in math notation; '@' becomes a filled triangle operator, '~>' an
// open one, so the two modal arrows stay visually distinct.
std::string latex_formula(const Formula& f);

std::string latex_sequent(const Sequent& s);

std::string render_latex(const Derivation& d);

// Conclusion-first indented tree, one node per line:
//   => p -> p  [imp-right on p -> p]
//     p => p  [id on p]
std::string render_text(const Derivation& d);

// Multi-line world/relation/valuation listing plus the refuting world.
std::string render_text(const KripkeModel& m, int refuting_world);

}  // namespace laterproof
