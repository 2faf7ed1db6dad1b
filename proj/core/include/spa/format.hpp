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

#ifndef SPA_FORMAT_HPP
#define SPA_FORMAT_HPP

#include <string>

#include "spa/groebner.hpp"

namespace spa {

/// Everything printed here re-parses to an equal value through parse.hpp.

std::string to_string(const LaurentPoly& p);
std::string to_string(const FieldElement& c);
std::string to_string(const Algebra& A, const Monomial& m);
std::string to_string(const Algebra& A, const Element& f);

/// "x[2,3]*x[1,2] = q^2*x[1,2]*x[2,3] - q*x[1,3]"
std::string rule_to_string(const Algebra& A, std::size_t lo, std::size_t hi);

/// Header comment recording algebra, ordering, side and q-mode; safe to
/// feed back as an ideal-file comment line.
std::string gb_header(const Algebra& A, const GroebnerBasis& basis, const std::string& algebra_name);

} // namespace spa

#endif // SPA_FORMAT_HPP
