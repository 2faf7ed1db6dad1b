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

#ifndef SPA_GROEBNER_HPP
#define SPA_GROEBNER_HPP

#include <optional>
#include <span>

#include "spa/algebra.hpp"

namespace spa {

enum class Side { Left, TwoSided };

const char* to_string(Side s);

struct GroebnerBasis {
    std::vector<Element> elements; // monic, sorted ascending by leading monomial
    Side side = Side::Left;
    OrderingSpec ordering = OrderingSpec::paper();
    bool reduced = false;
    /// Events recorded when a specialization watch value was supplied:
    /// leading coefficients that vanish or blow up at that value.
    std::vector<std::string> specialization_events;
};

/// Completion budget exhausted; carries the partial basis computed so far.
class BuchbergerLimit : public NontermLimit {
  public:
    BuchbergerLimit(std::uint64_t steps, std::vector<Element> partial)
        : NontermLimit(steps), partial_(std::move(partial)) {}
    const std::vector<Element>& partial() const { return partial_; }

  private:
    std::vector<Element> partial_;
};

/// Remainder of left division of f by the basis: no monomial of the result
/// is divisible (as exponent vectors) by any basis leading monomial, and
/// f minus the result lies in the left ideal of the basis. Deterministic:
/// among applicable reducers the one with the smallest leading monomial
/// (ties by list position) is chosen.
Element normal_form(const Algebra& A, Element f, std::span<const Element> basis, Budget& budget);

/// S-polynomial at the componentwise max w of the leading monomials:
/// the leading terms of the two left cofactor multiples cancel, so the
/// result is below w. f = g gives 0.
Element s_polynomial(const Algebra& A, const Element& f, const Element& g, Budget& budget);

/// Buchberger completion for the left ideal (Side::Left) or, with
/// additional right-multiplication saturation, the two-sided ideal
/// (Side::TwoSided) generated by gens. Zero generators are rejected.
/// specialization_watch records leading coefficients that degenerate at
/// the given rational value (see GroebnerBasis::specialization_events).
GroebnerBasis buchberger(const Algebra& A, const std::vector<Element>& gens, Side side, Budget& budget,
                         const std::optional<Rational>& specialization_watch = std::nullopt);

/// Minimal, tail-reduced, monic basis; unique for a fixed ordering and side.
GroebnerBasis reduce_basis(const Algebra& A, GroebnerBasis basis, Budget& budget);

/// Membership via normal form; pre: basis is a Groebner basis of its side.
bool ideal_membership(const Algebra& A, const Element& f, const GroebnerBasis& basis, Budget& budget);

struct OverlapFailure {
    std::size_t a, b, c; // slots, a > b > c
    Element left_first;  // resolve the (a,b) inversion first, then normalize
    Element right_first; // resolve the (b,c) inversion first, then normalize
};

struct ConsistencyReport {
    std::size_t triples_checked = 0;
    std::vector<OverlapFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Diamond-lemma overlap check: for every generator triple a > b > c
/// (slot order), the word x_a x_b x_c is rewritten both ways and the
/// normal forms must agree. A full pass certifies the rewriting system
/// confluent with leading words x_a x_b.
ConsistencyReport pbw_consistency(const Algebra& A, Budget& budget);

} // namespace spa

#endif // SPA_GROEBNER_HPP
