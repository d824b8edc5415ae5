#ifndef LIEB_IO_HPP
#define LIEB_IO_HPP

#include <string>

#include "lieb/algebra.hpp"
#include "lieb/matrix.hpp"
#include "lieb/rational_function.hpp"

namespace lieb {

// Algebra file format: JSON with fields
//   name            optional string
//   dim             integer >= 1
//   basis           dim distinct labels
//   skew_complete   optional bool; mirrors each product with left index <
//                   right index to the negated swapped product
//   products        optional list of {left, right, out: {label: rational}}
// Unlisted products are zero; rationals are strings like "2" or "-1/3".
StructureConstants parse_algebra(const std::string& bytes);

// Canonical rendering: keys sorted, rationals reduced, products in index
// order, skew_complete used exactly when the table is antisymmetric.
// parse(render(a)) reproduces a bit-exactly.
std::string render_algebra(const StructureConstants& a);

// Expression over Q(t): integers, t, + - * / ^, parentheses.
RatFunc parse_ratfunc(const std::string& text,
                      const std::string& locus = "expression");

// Path file: JSON {"matrix": [[expr, ...], ...]}, square, entries in the
// expression grammar above.
FuncMatrix parse_path_file(const std::string& bytes);

}  // namespace lieb

#endif
