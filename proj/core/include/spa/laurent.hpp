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

#ifndef SPA_LAURENT_HPP
#define SPA_LAURENT_HPP

#include <map>
#include <utility>

#include "spa/rational.hpp"

namespace spa {

/// Laurent polynomial in the formal parameter q over the rationals.
/// Invariant: no stored coefficient is zero; zero is the empty map.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly constant(const Rational& c) { return term(c, 0); }
    static LaurentPoly q_power(long k) { return term(1, k); }
    static LaurentPoly term(const Rational& c, long k);

    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const;
    bool is_constant() const;

    /// Lowest / highest exponent with nonzero coefficient. Pre: nonzero.
    long min_exp() const;
    long max_exp() const;

    Rational coeff(long k) const;
    Rational leading_coeff() const; // coefficient of max_exp; pre: nonzero
    const std::map<long, Rational>& terms() const { return coeff_; }
    std::size_t term_count() const { return coeff_.size(); }

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly shifted(long k) const; // multiply by q^k

    bool operator==(const LaurentPoly& rhs) const { return coeff_ == rhs.coeff_; }

    /// Exact evaluation at q = v. Negative exponents require v != 0.
    Rational eval(const Rational& v) const;

    void add_term(long k, const Rational& c); // accumulate, keeping the invariant

  private:
    std::map<long, Rational> coeff_;
};

/// Euclidean helpers on honest polynomials (min_exp >= 0).
/// Quotient/remainder of a by b; pre: b nonzero polynomial.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Monic gcd of two polynomials; gcd(0,0) = 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

/// Exact quotient; pre: b divides a.
LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b);

} // namespace spa

#endif // SPA_LAURENT_HPP
