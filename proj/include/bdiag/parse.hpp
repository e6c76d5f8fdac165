// Text grammar for diagrams and elements.
//
//   factor  := point | '[' factor ',' factor ']'
//   point   := integer optionally suffixed '*'
//   diagram := factor ('.' factor)*      (odd mode)
//            | factor ('^' factor)*      (even mode)
//   element := [coef ['*']] diagram (('+'|'-') [coef ['*']] diagram)*
//
// Whitespace is ignored.  Printing always emits the canonical form.

#pragma once

#include <string>

#include "bdiag/element.hpp"

namespace bdiag {

// Parse a single diagram into a raw expression (not yet canonicalized).
Expr parse_diagram_expr(const std::string& text, Parity mode);

// Parse and canonicalize a single diagram.
Element parse_diagram(const std::string& text, Parity mode);

// Parse a linear combination of diagrams.
Element parse_element(const std::string& text, Parity mode);

std::string format_mono(const Mono& m, Parity mode);
std::string format_element(const Element& e);
std::string format_element(const ElementQ& e);

}  // namespace bdiag
