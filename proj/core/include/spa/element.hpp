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

#ifndef SPA_ELEMENT_HPP
#define SPA_ELEMENT_HPP

#include <functional>
#include <vector>

#include "spa/field.hpp"
#include "spa/monomial.hpp"
#include "spa/ordering.hpp"

namespace spa {

struct Term {
    Monomial mono;
    FieldElement coeff;
};

/// Finite K-linear combination of standard monomials in canonical form:
/// terms sorted strictly descending under an ordering, no zero coefficients.
/// All elements flowing through one algebra are sorted under its ordering,
/// so the leading term is terms()[0].
class Element {
  public:
    Element() = default; // zero

    static Element zero() { return Element(); }
    static Element from_term(Monomial m, FieldElement c);
    /// Sorts, merges equal monomials, drops zeros.
    static Element from_terms(const OrderingSpec& spec, std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading_term() const;          // pre: nonzero
    const Monomial& leading_monomial() const;  // pre: nonzero
    const FieldElement& leading_coeff() const; // pre: nonzero

    /// Maximum total degree over the support; pre: nonzero.
    unsigned degree() const;

    static Element add(const OrderingSpec& spec, const Element& a, const Element& b);
    static Element sub(const OrderingSpec& spec, const Element& a, const Element& b);
    Element negated() const;
    Element scaled(const FieldElement& c) const; // zero if c = 0
    Element monic() const;                       // pre: nonzero
    Element resorted(const OrderingSpec& spec) const;

    /// Structural equality (same terms), independent of sort order.
    bool equals(const Element& rhs) const;

    /// Coefficient-wise specialization at q = value; terms whose
    /// coefficient vanishes at the value are dropped.
    Element specialize(const Rational& value) const;

  private:
    std::vector<Term> terms_;
};

} // namespace spa

#endif // SPA_ELEMENT_HPP
