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

#ifndef SPA_DIMS_HPP
#define SPA_DIMS_HPP

#include "spa/groebner.hpp"

namespace spa {

/// Minimal generating set of the leading-monomial ideal: an antichain
/// under componentwise divisibility.
class Staircase {
  public:
    static Staircase from_basis(const GroebnerBasis& basis);
    static Staircase from_monomials(std::vector<Monomial> monos);

    const std::vector<Monomial>& generators() const { return gens_; }
    /// True iff some staircase generator divides m (m is in the LM ideal).
    bool covers(const Monomial& m) const;

  private:
    std::vector<Monomial> gens_;
};

/// GK dimension of A/L read off the staircase: the largest size of a
/// variable subset containing the support of no staircase generator.
/// For the zero ideal this is the generator count; for the unit ideal 0.
int gk_dimension(const Algebra& A, const GroebnerBasis& basis);

/// Number of standard monomials outside the leading-monomial ideal,
/// per total degree 0..dmax.
std::vector<long long> hilbert_truncated(const Algebra& A, const GroebnerBasis& basis, int dmax);

/// Growth-degree estimate from per-degree counts by finite differences:
/// the least k whose k-th difference vanishes identically past tail_from.
/// Diagnostic only; -1 when dmax is too small to decide.
int growth_degree_estimate(const std::vector<long long>& counts, std::size_t tail_from);

enum class ElimMethod { EliminationOrdering, KernelSearch };

struct EliminationResult {
    std::vector<Element> elements; // verified members of the ideal inside V(T)
    ElimMethod method = ElimMethod::EliminationOrdering;
    /// With the elimination-ordering route an empty result certifies that
    /// the intersection is zero. The kernel-search fallback (used when no
    /// elimination ordering keeps the presentation solvable) only certifies
    /// found elements; an empty result is then inconclusive.
    bool certified_empty() const {
        return elements.empty() && method == ElimMethod::EliminationOrdering;
    }
};

/// Intersection of the ideal generated by gens with the span V(T) of the
/// monomials in the kept variables. keep must be a nonempty proper subset.
EliminationResult eliminate(const Algebra& A, const std::vector<Element>& gens,
                            const std::vector<bool>& keep, Side side, Budget& budget,
                            int fallback_degree_cap = 8);

struct SubsetFinding {
    std::vector<std::size_t> subset; // kept slots
    bool found_nonzero = false;
    ElimMethod method = ElimMethod::EliminationOrdering;
};

struct EliminationLemmaReport {
    int gk_dim = 0;
    std::vector<SubsetFinding> subsets;
    bool ok() const {
        for (const auto& s : subsets)
            if (!s.found_nonzero) return false;
        return true;
    }
};

/// For d = gk_dimension(A, basis), runs eliminate on every (d+1)-subset of
/// the generators and reports whether a nonzero intersection element was
/// found (the elimination lemma guarantees one for proper ideals).
/// Throws NontermLimit if the subset count exceeds subset_budget.
EliminationLemmaReport check_elimination_lemma(const Algebra& A, const GroebnerBasis& basis,
                                               Budget& budget, std::size_t subset_budget = 100000);

} // namespace spa

#endif // SPA_DIMS_HPP
