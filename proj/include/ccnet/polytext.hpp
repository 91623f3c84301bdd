#pragma once
#include <string>
#include <vector>

#include "ccnet/poly.hpp"

namespace ccnet {

// Scalar variable names: X3 (slot 3, one-dimensional cells), X3_2 (slot 3,
// component 2), l1 (first parameter).
std::string var_name(const Signature& sig, int v);

std::string poly_str(const Signature& sig, const Poly& p);
// One-dimensional maps print as a bare polynomial, higher-dimensional ones as
// a component tuple "(p1, p2)".
std::string polymap_str(const PolyMap& f);

// Parses the expression grammar
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' natural]
//   atom   := rational | variable | '(' expr ')'
// against a signature. Rationals are "3" or "3/4"; variables must exist in
// the signature and use the underscore form exactly when a slot has dimension
// greater than one. Errors carry 1-based line and column.
Poly parse_poly(const std::string& text, const Signature& sig);

// Parses the components of a polynomial map; texts.size() must equal out_dim.
PolyMap parse_polymap(const std::vector<std::string>& texts, const Signature& sig);

} // namespace ccnet
