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

#ifndef SPA_RATIONAL_HPP
#define SPA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "spa/errors.hpp"

namespace spa {

/// Exact big-integer rational. All coefficient arithmetic in the library
/// bottoms out here; there is no floating point anywhere.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "n" or "n/d" with optional leading minus. Throws ParseError.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

/// r^e with e possibly negative (throws DivisionByZero on 0^negative).
Rational pow_rational(const Rational& base, long exponent);

} // namespace spa

#endif // SPA_RATIONAL_HPP
