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

#include "spa/dims.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace spa {

Staircase Staircase::from_basis(const GroebnerBasis& basis) {
    std::vector<Monomial> lms;
    lms.reserve(basis.elements.size());
    for (const Element& g : basis.elements)
        if (!g.is_zero()) lms.push_back(g.leading_monomial());
    return from_monomials(std::move(lms));
}

Staircase Staircase::from_monomials(std::vector<Monomial> monos) {
    std::sort(monos.begin(), monos.end(),
              [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    Staircase s;
    for (const Monomial& m : monos) {
        bool covered = false;
        for (const Monomial& g : s.gens_)
            if (g.divides(m)) {
                covered = true;
                break;
            }
        if (!covered) s.gens_.push_back(m);
    }
    std::sort(s.gens_.begin(), s.gens_.end());
    return s;
}

bool Staircase::covers(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

int gk_dimension(const Algebra& A, const GroebnerBasis& basis) {
    const std::size_t n = A.ngens();
    if (n > 24) throw BadArgument("exhaustive subset search limited to 24 generators");
    Staircase st = Staircase::from_basis(basis);

    // The unit ideal: A/L = 0.
    for (const Monomial& g : st.generators())
        if (g.is_unit()) return 0;

    std::vector<std::uint32_t> supports;
    supports.reserve(st.generators().size());
    for (const Monomial& g : st.generators()) {
        std::uint32_t mask = 0;
        for (std::size_t s : g.support()) mask |= (1u << s);
        supports.push_back(mask);
    }

    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (std::uint32_t sup : supports)
            if ((sup & mask) == sup) {
                independent = false;
                break;
            }
        if (independent) best = std::max(best, static_cast<int>(std::popcount(mask)));
    }
    return best;
}

namespace {

void count_by_degree(const Staircase& st, std::vector<unsigned>& exps, std::size_t slot,
                     unsigned remaining, std::vector<long long>& out, unsigned degree) {
    if (slot == exps.size()) {
        if (!st.covers(Monomial(exps))) ++out[degree];
        return;
    }
    if (slot == exps.size() - 1) {
        exps[slot] = remaining;
        if (!st.covers(Monomial(exps))) ++out[degree];
        exps[slot] = 0;
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        exps[slot] = e;
        count_by_degree(st, exps, slot + 1, remaining - e, out, degree);
    }
    exps[slot] = 0;
}

} // namespace

std::vector<long long> hilbert_truncated(const Algebra& A, const GroebnerBasis& basis, int dmax) {
    if (dmax < 0) throw BadArgument("dmax must be non-negative");
    Staircase st = Staircase::from_basis(basis);
    std::vector<long long> counts(static_cast<std::size_t>(dmax) + 1, 0);
    std::vector<unsigned> exps(A.ngens(), 0);
    for (int d = 0; d <= dmax; ++d) {
        if (A.ngens() == 0) {
            if (d == 0) counts[0] = 1;
            continue;
        }
        count_by_degree(st, exps, 0, static_cast<unsigned>(d), counts, static_cast<unsigned>(d));
    }
    return counts;
}

int growth_degree_estimate(const std::vector<long long>& counts, std::size_t tail_from) {
    std::vector<long long> diff = counts;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (diff.size() <= tail_from) return -1; // not enough data past the tail start
        bool zero_tail = true;
        for (std::size_t i = tail_from; i < diff.size(); ++i)
            if (diff[i] != 0) {
                zero_tail = false;
                break;
            }
        if (zero_tail) return static_cast<int>(k);
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
    }
    return -1;
}

namespace {

bool supported_in(const Monomial& m, const std::vector<bool>& keep) {
    for (std::size_t s : m.support())
        if (!keep[s]) return false;
    return true;
}

bool element_supported_in(const Element& f, const std::vector<bool>& keep) {
    for (const auto& t : f.terms())
        if (!supported_in(t.mono, keep)) return false;
    return true;
}

void kept_monomials_rec(std::vector<unsigned>& exps, const std::vector<std::size_t>& slots,
                        std::size_t idx, unsigned remaining, std::vector<Monomial>& out) {
    if (idx == slots.size()) {
        if (remaining == 0) out.push_back(Monomial(exps));
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        exps[slots[idx]] = e;
        kept_monomials_rec(exps, slots, idx + 1, remaining - e, out);
    }
    exps[slots[idx]] = 0;
}

/// All monomials supported in the kept slots with total degree exactly d.
std::vector<Monomial> kept_monomials(std::size_t nvars, const std::vector<bool>& keep, unsigned d) {
    std::vector<std::size_t> slots;
    for (std::size_t s = 0; s < nvars; ++s)
        if (keep[s]) slots.push_back(s);
    std::vector<Monomial> out;
    std::vector<unsigned> exps(nvars, 0);
    kept_monomials_rec(exps, slots, 0, d, out);
    return out;
}

/// Nontrivial K-linear combinations of the rows that vanish: row-reduce
/// the matrix augmented with the identity and read combinations off the
/// rows whose matrix part became zero.
std::vector<std::vector<FieldElement>> row_kernel(std::vector<std::vector<FieldElement>> rows,
                                                  std::vector<std::vector<FieldElement>> tracker) {
    const std::size_t nrows = rows.size();
    if (nrows == 0) return {};
    const std::size_t ncols = rows[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < nrows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < nrows && rows[sel][col].is_zero()) ++sel;
        if (sel == nrows) continue;
        std::swap(rows[sel], rows[pivot_row]);
        std::swap(tracker[sel], tracker[pivot_row]);
        FieldElement inv = rows[pivot_row][col].inverse();
        for (std::size_t c = 0; c < ncols; ++c) rows[pivot_row][c] = rows[pivot_row][c] * inv;
        for (std::size_t c = 0; c < tracker[pivot_row].size(); ++c)
            tracker[pivot_row][c] = tracker[pivot_row][c] * inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) continue;
            FieldElement factor = rows[r][col];
            for (std::size_t c = 0; c < ncols; ++c)
                rows[r][c] = rows[r][c] - factor * rows[pivot_row][c];
            for (std::size_t c = 0; c < tracker[r].size(); ++c)
                tracker[r][c] = tracker[r][c] - factor * tracker[pivot_row][c];
        }
        ++pivot_row;
    }
    std::vector<std::vector<FieldElement>> kernel;
    for (std::size_t r = 0; r < nrows; ++r) {
        bool zero = true;
        for (std::size_t c = 0; c < ncols; ++c)
            if (!rows[r][c].is_zero()) {
                zero = false;
                break;
            }
        if (zero) kernel.push_back(tracker[r]);
    }
    return kernel;
}

} // namespace

EliminationResult eliminate(const Algebra& A, const std::vector<Element>& gens,
                            const std::vector<bool>& keep, Side side, Budget& budget,
                            int fallback_degree_cap) {
    if (keep.size() != A.ngens()) throw BadArgument("keep mask size must match the generator count");
    OrderingSpec elim = OrderingSpec::elimination(keep, A.ordering());
    Algebra Ae = A.with_ordering(elim);

    if (Ae.check_solvable().ok()) {
        try {
            GroebnerBasis G = reduce_basis(Ae, buchberger(Ae, gens, side, budget), budget);
            EliminationResult res;
            res.method = ElimMethod::EliminationOrdering;
            for (const Element& g : G.elements)
                if (element_supported_in(g, keep)) res.elements.push_back(g);
            return res;
        } catch (const OrderingIncompatible&) {
            // Rule-level solvability held but a deeper product lost its
            // leading monomial under the block ordering; use the fallback.
        }
    }

    // No elimination ordering keeps this presentation solvable for the
    // requested block (possible: solvability pins some eliminated
    // generator below a kept monomial). Fall back to a degree-truncated
    // kernel search over normal forms; found elements are verified members
    // of the intersection, but emptiness is not certified.
    EliminationResult res;
    res.method = ElimMethod::KernelSearch;
    GroebnerBasis G = reduce_basis(A, buchberger(A, gens, side, budget), budget);

    std::vector<Monomial> ts;
    std::vector<Element> nfs;
    for (int d = 0; d <= fallback_degree_cap; ++d) {
        for (Monomial& m : kept_monomials(A.ngens(), keep, static_cast<unsigned>(d))) {
            Element nf = normal_form(A, Element::from_term(m, A.coeff_one()), G.elements, budget);
            ts.push_back(std::move(m));
            nfs.push_back(std::move(nf));
        }
        // Columns: every monomial appearing in some normal form.
        std::vector<Monomial> cols;
        for (const Element& nf : nfs)
            for (const auto& t : nf.terms()) cols.push_back(t.mono);
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

        std::vector<std::vector<FieldElement>> rows, tracker;
        for (std::size_t r = 0; r < nfs.size(); ++r) {
            std::vector<FieldElement> row(cols.size(), A.coeff_zero());
            for (const auto& t : nfs[r].terms()) {
                auto it = std::lower_bound(cols.begin(), cols.end(), t.mono);
                row[static_cast<std::size_t>(it - cols.begin())] = t.coeff;
            }
            rows.push_back(std::move(row));
            std::vector<FieldElement> id(nfs.size(), A.coeff_zero());
            id[r] = A.coeff_one();
            tracker.push_back(std::move(id));
        }
        budget.charge(rows.size() * (cols.size() + 1));

        for (const auto& combo : row_kernel(std::move(rows), std::move(tracker))) {
            std::vector<Term> terms;
            for (std::size_t r = 0; r < combo.size(); ++r)
                if (!combo[r].is_zero()) terms.push_back({ts[r], combo[r]});
            Element candidate = Element::from_terms(A.ordering(), std::move(terms));
            if (candidate.is_zero()) continue;
            if (!normal_form(A, candidate, G.elements, budget).is_zero())
                throw Error("kernel-search candidate failed the membership check");
            res.elements.push_back(candidate.monic());
        }
        if (!res.elements.empty()) return res;
    }
    return res;
}

EliminationLemmaReport check_elimination_lemma(const Algebra& A, const GroebnerBasis& basis,
                                               Budget& budget, std::size_t subset_budget) {
    EliminationLemmaReport report;
    report.gk_dim = gk_dimension(A, basis);
    const std::size_t n = A.ngens();
    const std::size_t r = static_cast<std::size_t>(report.gk_dim) + 1;
    if (r > n) return report; // no (d+1)-subsets; vacuous

    // C(n, r) subsets, guarded by the combinatorial budget.
    std::vector<std::size_t> idx(r);
    for (std::size_t k = 0; k < r; ++k) idx[k] = k;
    std::size_t count = 0;
    while (true) {
        if (++count > subset_budget) throw NontermLimit(count);
        std::vector<bool> keep(n, false);
        for (std::size_t s : idx) keep[s] = true;
        EliminationResult res = eliminate(A, basis.elements, keep, basis.side, budget);
        report.subsets.push_back({idx, !res.elements.empty(), res.method});

        // Next combination.
        std::size_t k = r;
        while (k > 0 && idx[k - 1] == n - r + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t t = k; t < r; ++t) idx[t] = idx[t - 1] + 1;
    }
    return report;
}

} // namespace spa
