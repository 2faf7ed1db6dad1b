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

#include "spa/verify.hpp"

#include <algorithm>
#include <random>

#include "spa/format.hpp"

namespace spa {

namespace {

Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> slot(0, nvars - 1);
    std::vector<unsigned> exps(nvars, 0);
    unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) ++exps[slot(rng)];
    return Monomial(std::move(exps));
}

/// Leading monomial of f under an arbitrary spec (f may be sorted under a
/// different one).
const Monomial* lm_under(const OrderingSpec& spec, const Element& f) {
    const Monomial* best = nullptr;
    for (const auto& t : f.terms())
        if (!best || compare_monomials(spec, t.mono, *best) == std::strong_ordering::greater)
            best = &t.mono;
    return best;
}

} // namespace

OrderingAxiomReport verify_ordering_axioms(const Algebra& A, const OrderingSpec& spec,
                                           std::uint64_t sample_budget, std::uint64_t seed) {
    OrderingAxiomReport report;
    if (sample_budget == 0) {
        report.empty_budget_warning = true;
        return report;
    }

    std::mt19937_64 rng(seed);
    const std::size_t n = A.ngens();
    auto mono_name = [&](const Monomial& m) { return to_string(A, m); };
    auto note = [&](std::string v) {
        if (report.violations.size() < 32) report.violations.push_back(std::move(v));
    };

    const std::uint64_t quarter = std::max<std::uint64_t>(1, sample_budget / 4);

    // Strict total order on sampled triples.
    for (std::uint64_t k = 0; k < quarter; ++k) {
        Monomial u = random_monomial(rng, n, 4);
        Monomial v = random_monomial(rng, n, 4);
        Monomial w = random_monomial(rng, n, 4);
        ++report.order_tuples_checked;
        if (compare_monomials(spec, u, u) != std::strong_ordering::equal)
            note("irreflexive: " + mono_name(u));
        auto uv = compare_monomials(spec, u, v);
        auto vu = compare_monomials(spec, v, u);
        if ((uv == std::strong_ordering::equal) != (u == v))
            note("equality mismatch: " + mono_name(u) + " vs " + mono_name(v));
        if ((uv == std::strong_ordering::less) != (vu == std::strong_ordering::greater))
            note("antisymmetry: " + mono_name(u) + " vs " + mono_name(v));
        auto vw = compare_monomials(spec, v, w);
        if (uv != std::strong_ordering::greater && vw != std::strong_ordering::greater &&
            compare_monomials(spec, u, w) == std::strong_ordering::greater)
            note("transitivity: " + mono_name(u) + ", " + mono_name(v) + ", " + mono_name(w));
    }

    Budget engine(std::max<std::uint64_t>(sample_budget * 200, 10'000'000));

    // Condition (2): any factor of a product sits below its leading monomial.
    for (std::uint64_t k = 0; k < quarter; ++k) {
        Monomial a = random_monomial(rng, n, 3);
        Monomial b = random_monomial(rng, n, 3);
        Monomial e = random_monomial(rng, n, 3);
        std::vector<std::size_t> w = a.word();
        for (std::size_t s : b.word()) w.push_back(s);
        for (std::size_t s : e.word()) w.push_back(s);
        Element p = A.normalize_word(w, engine);
        ++report.cond2_checked;
        if (p.is_zero()) continue;
        const Monomial& gamma = *lm_under(spec, p);
        if (gamma.is_unit() || gamma == b) continue;
        if (compare_monomials(spec, b, gamma) != std::strong_ordering::less)
            note("condition (2): beta = " + mono_name(b) + " not below LM(alpha*beta*eta) = " +
                 mono_name(gamma) + " for alpha = " + mono_name(a) + ", eta = " + mono_name(e));
    }

    // Condition (3): multiplication is monotone on leading monomials.
    for (std::uint64_t k = 0; k < quarter; ++k) {
        Monomial a = random_monomial(rng, n, 3);
        Monomial b = random_monomial(rng, n, 3);
        auto c = compare_monomials(spec, a, b);
        if (c == std::strong_ordering::equal) continue;
        if (c == std::strong_ordering::greater) std::swap(a, b);
        Monomial g = random_monomial(rng, n, 2);
        Monomial e = random_monomial(rng, n, 2);
        auto triple = [&](const Monomial& mid) {
            std::vector<std::size_t> w = g.word();
            for (std::size_t s : mid.word()) w.push_back(s);
            for (std::size_t s : e.word()) w.push_back(s);
            return A.normalize_word(w, engine);
        };
        Element pa = triple(a);
        Element pb = triple(b);
        ++report.cond3_checked;
        if (pa.is_zero() || pb.is_zero()) continue;
        const Monomial& la = *lm_under(spec, pa);
        const Monomial& lb = *lm_under(spec, pb);
        if (lb.is_unit()) continue;
        if (compare_monomials(spec, la, lb) != std::strong_ordering::less)
            note("condition (3): LM(gamma*alpha*eta) = " + mono_name(la) + " not below LM(gamma*beta*eta) = " +
                 mono_name(lb) + " for alpha = " + mono_name(a) + " below beta = " + mono_name(b));
    }

    // No-descent evidence: random shuffled words normalize within a bound.
    for (std::uint64_t k = 0; k < quarter; ++k) {
        Monomial m = random_monomial(rng, n, 6);
        std::vector<std::size_t> w = m.word();
        std::shuffle(w.begin(), w.end(), rng);
        Budget chain(20'000);
        ++report.descent_chains_checked;
        try {
            A.normalize_word(w, chain);
        } catch (const NontermLimit&) {
            note("descending-chain bound exceeded while normalizing a word of " + mono_name(m));
        }
    }

    // Exhaustive generator-triple monotonicity (assertion (5) style).
    for (std::size_t gij = 0; gij < n; ++gij) {
        for (std::size_t gmn = 0; gmn < n; ++gmn) {
            for (std::size_t gkl = 0; gkl < n; ++gkl) {
                if (gmn == gkl) continue;
                Monomial mij = Monomial::generator(n, gij);
                Monomial mmn = Monomial::generator(n, gmn);
                Monomial mkl = Monomial::generator(n, gkl);
                if (compare_monomials(spec, mmn, mkl) != std::strong_ordering::less) continue;
                ++report.monotonicity_triples_checked;
                Element right_small = A.multiply_monomials(mij, mmn, engine);
                Element right_large = A.multiply_monomials(mij, mkl, engine);
                Element left_small = A.multiply_monomials(mmn, mij, engine);
                Element left_large = A.multiply_monomials(mkl, mij, engine);
                if (compare_monomials(spec, *lm_under(spec, right_small), *lm_under(spec, right_large)) !=
                    std::strong_ordering::less)
                    note("monotonicity: LM(" + mono_name(mij) + "*" + mono_name(mmn) + ") not below LM(" +
                         mono_name(mij) + "*" + mono_name(mkl) + ")");
                if (compare_monomials(spec, *lm_under(spec, left_small), *lm_under(spec, left_large)) !=
                    std::strong_ordering::less)
                    note("monotonicity: LM(" + mono_name(mmn) + "*" + mono_name(mij) + ") not below LM(" +
                         mono_name(mkl) + "*" + mono_name(mij) + ")");
            }
        }
    }

    return report;
}

} // namespace spa
