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

#ifndef SPA_VERIFY_HPP
#define SPA_VERIFY_HPP

#include <cstdint>

#include "spa/algebra.hpp"

namespace spa {

/// Sampled evidence for the monomial-ordering axioms. A pass is evidence,
/// not proof: the conditions quantify over the whole PBW basis and only
/// finitely many tuples are checked.
struct OrderingAxiomReport {
    std::uint64_t order_tuples_checked = 0;   // totality/antisymmetry/transitivity
    std::uint64_t cond2_checked = 0;          // factor below the leading monomial
    std::uint64_t cond3_checked = 0;          // multiplication monotone on leading monomials
    std::uint64_t descent_chains_checked = 0; // random words normalize within budget
    std::size_t monotonicity_triples_checked = 0; // exhaustive generator triples
    std::vector<std::string> violations;
    bool empty_budget_warning = false;
    bool ok() const { return violations.empty(); }
};

/// Checks the ordering axioms on sampled monomial tuples (products are
/// computed with the algebra's rewriting engine and leading monomials under
/// spec), plus the exhaustive generator-triple monotonicity check.
OrderingAxiomReport verify_ordering_axioms(const Algebra& A, const OrderingSpec& spec,
                                           std::uint64_t sample_budget, std::uint64_t seed = 1);

} // namespace spa

#endif // SPA_VERIFY_HPP
