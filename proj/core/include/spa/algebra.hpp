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

#ifndef SPA_ALGEBRA_HPP
#define SPA_ALGEBRA_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spa/budget.hpp"
#include "spa/element.hpp"

namespace spa {

struct Generator {
    std::string name;
    GenLabel label; // (0,0) for generic generators
};

/// Rewriting rule for one unordered generator pair (lo < hi as slots):
///   x_hi * x_lo = lambda * (x_lo x_hi) + tail,
/// with lambda nonzero and, in a solvable presentation, LM(tail) below
/// the standard monomial x_lo x_hi.
struct CommutationRule {
    FieldElement lambda;
    Element tail;
};

enum class SolvabilityIssue { ZeroLambda, TailNotSmaller };

struct SolvabilityViolation {
    std::size_t lo = 0, hi = 0;
    SolvabilityIssue issue;
    std::string detail;
};

struct SolvabilityReport {
    std::vector<SolvabilityViolation> violations;
    std::vector<std::string> notes; // assumptions worth surfacing (e.g. mirrored U_q^- schema)
    bool ok() const { return violations.empty(); }
};

/// A solvable polynomial algebra presentation: generators, one commutation
/// rule per generator pair, a monomial ordering and a q-mode. Immutable
/// after construction; all operations are const.
class Algebra {
  public:
    Algebra(std::vector<Generator> generators, std::vector<CommutationRule> rules,
            OrderingSpec ordering, QMode qmode, std::vector<std::string> notes = {});

    std::size_t ngens() const { return gens_.size(); }
    const Generator& generator(std::size_t slot) const { return gens_[slot]; }
    const std::vector<Generator>& generators() const { return gens_; }
    std::optional<std::size_t> find_generator(std::string_view name) const;

    const OrderingSpec& ordering() const { return ordering_; }
    const QMode& qmode() const { return qmode_; }

    /// Rule for the pair lo < hi (slot indices).
    const CommutationRule& rule(std::size_t lo, std::size_t hi) const;

    /// Copy with a different ordering (same rules; re-verify as needed).
    Algebra with_ordering(OrderingSpec spec) const;
    /// Copy with one rule replaced (for corrupted-presentation fixtures).
    Algebra with_rule(std::size_t lo, std::size_t hi, CommutationRule r) const;

    std::strong_ordering compare(const Monomial& u, const Monomial& v) const {
        return compare_monomials(ordering_, u, v);
    }

    FieldElement coeff_zero() const { return FieldElement::zero(qmode_); }
    FieldElement coeff_one() const { return FieldElement::one(qmode_); }
    FieldElement coeff_q(long power = 1) const { return FieldElement::q_power(qmode_, power); }

    Element gen_element(std::size_t slot) const;

    /// Fully rewrites an arbitrary word (sequence of slot indices) into the
    /// PBW basis. Budget is charged per rule application.
    Element normalize_word(std::span<const std::size_t> word, Budget& budget) const;
    /// One rule application at position pos (pre: word[pos] > word[pos+1]);
    /// returns the branch words with coefficients.
    std::vector<std::pair<std::vector<std::size_t>, FieldElement>>
    expand_once(std::span<const std::size_t> word, std::size_t pos) const;

    /// Product of two standard monomials, expanded in the PBW basis.
    Element multiply_monomials(const Monomial& u, const Monomial& v, Budget& budget) const;
    /// Bilinear products.
    Element multiply(const Element& f, const Element& g, Budget& budget) const;
    Element multiply_mono_elem(const Monomial& m, const Element& f, Budget& budget) const;

    /// (LM, LC) under this algebra's ordering; throws ZeroElement.
    std::pair<Monomial, FieldElement> leading_data(const Element& f) const;

    /// Definition 2.2 check: every lambda nonzero and every rule tail below
    /// its main monomial under the current ordering.
    SolvabilityReport check_solvable() const;

    /// True when check_solvable passed at construction time.
    bool solvable_verified() const { return solvable_verified_; }

    const std::vector<std::string>& notes() const { return notes_; }

  private:
    std::size_t rule_index(std::size_t lo, std::size_t hi) const;

    std::vector<Generator> gens_;
    std::vector<CommutationRule> rules_; // indexed by pair (lo, hi), lo < hi
    OrderingSpec ordering_;
    QMode qmode_;
    std::vector<std::string> notes_;
    bool solvable_verified_ = false;
};

} // namespace spa

#endif // SPA_ALGEBRA_HPP
