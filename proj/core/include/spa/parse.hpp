/*
   Copyright 2026 The spa authors

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

#ifndef SPA_PARSE_HPP
#define SPA_PARSE_HPP

#include <iosfwd>
#include <string_view>

#include "spa/algebra.hpp"

namespace spa {

/// Coefficient grammar: integers, the symbol q, operators + - * / ^ with
/// integer (possibly negative) exponents, parentheses.
FieldElement parse_coefficient(std::string_view text, const QMode& mode);

/// Polynomial grammar:
///   poly   := ['-'] term (('+'|'-') term)*
///   term   := unit ('*' unit)*
///   unit   := coefficient-atom ('/' coefficient-atom)* | factor
///   factor := name '[' int ',' int ']' ('^' posint)?
/// Generator factors may appear in any order; the word is canonicalized to
/// standard form through the rewriting engine at parse time.
Element parse_polynomial(std::string_view text, const Algebra& A, Budget& budget);

/// Ideal file: UTF-8, one polynomial per line, '#' starts a comment,
/// blank lines ignored.
std::vector<Element> parse_ideal_file(std::istream& in, const Algebra& A, Budget& budget);

/// Algebra specifiers: "uq+ N", "uq- N", "gr(<spec>)" and
/// "<spec> (x) <spec>" (binary tensor product).
Algebra parse_algebra_spec(std::string_view text, const QMode& qmode);

/// Ordering names: paper | lexword | graded | elim:<name,name,...> (kept
/// generators) | tensor (valid only when the algebra's own ordering is a
/// tensor ordering).
OrderingSpec parse_ordering_name(std::string_view text, const Algebra& A);

/// Splits "x[1,3],x[2,3]" into generator names (commas inside brackets are
/// part of the name).
std::vector<std::string> split_generator_list(std::string_view text);

} // namespace spa

#endif // SPA_PARSE_HPP
