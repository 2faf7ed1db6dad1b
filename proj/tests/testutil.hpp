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

#ifndef SPA_TESTS_TESTUTIL_HPP
#define SPA_TESTS_TESTUTIL_HPP

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "spa/dims.hpp"
#include "spa/format.hpp"
#include "spa/parse.hpp"
#include "spa/quantum.hpp"

namespace spatest {

using namespace spa;

inline Element parse(const Algebra& A, const std::string& text) {
    Budget b;
    return parse_polynomial(text, A, b);
}

inline Element product(const Algebra& A, const std::string& lhs, const std::string& rhs) {
    Budget b;
    return A.multiply(parse(A, lhs), parse(A, rhs), b);
}

inline std::vector<Monomial> monomials_up_to(std::size_t nvars, int dmax) {
    std::vector<Monomial> out;
    std::vector<unsigned> exps(nvars, 0);
    auto rec = [&](auto&& self, std::size_t slot, unsigned remaining) -> void {
        if (slot + 1 == nvars) {
            exps[slot] = remaining;
            out.push_back(Monomial(exps));
            exps[slot] = 0;
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            exps[slot] = e;
            self(self, slot + 1, remaining - e);
        }
        exps[slot] = 0;
    };
    for (int d = 0; d <= dmax; ++d) rec(rec, 0, static_cast<unsigned>(d));
    return out;
}

/// Incremental row-echelon rank over the coefficient field.
class RankAccumulator {
  public:
    explicit RankAccumulator(std::size_t ncols) : ncols_(ncols) {}

    void add_row(std::vector<FieldElement> row) {
        for (auto& [pivot, basis_row] : rows_) {
            if (row[pivot].is_zero()) continue;
            FieldElement factor = row[pivot];
            for (std::size_t c = 0; c < ncols_; ++c) row[c] = row[c] - factor * basis_row[c];
        }
        for (std::size_t c = 0; c < ncols_; ++c) {
            if (row[c].is_zero()) continue;
            FieldElement inv = row[c].inverse();
            for (std::size_t k = c; k < ncols_; ++k) row[k] = row[k] * inv;
            rows_.emplace_back(c, std::move(row));
            std::sort(rows_.begin(), rows_.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            return;
        }
    }

    std::size_t rank() const { return rows_.size(); }

  private:
    std::size_t ncols_;
    std::vector<std::pair<std::size_t, std::vector<FieldElement>>> rows_;
};

/// Brute-force truncated oracle, independent of the Buchberger path:
/// per degree d, the dimension of the complement of
/// span{ m * g_i : d(m) + deg(g_i) <= d } inside the span of all standard
/// monomials of degree <= d.
inline std::vector<long long> oracle_complement_dims(const Algebra& A,
                                                     const std::vector<Element>& gens, int dmax) {
    const std::size_t n = A.ngens();
    std::vector<Monomial> cols = monomials_up_to(n, dmax);
    std::sort(cols.begin(), cols.end());
    auto col_of = [&](const Monomial& m) {
        return static_cast<std::size_t>(
            std::lower_bound(cols.begin(), cols.end(), m) - cols.begin());
    };

    struct Row {
        unsigned level;
        std::vector<FieldElement> entries;
    };
    std::vector<Row> rows;
    Budget budget(100'000'000);
    for (const Element& g : gens) {
        if (g.is_zero()) continue;
        const unsigned dg = g.degree();
        for (const Monomial& m : monomials_up_to(n, dmax)) {
            if (m.degree() + dg > static_cast<unsigned>(dmax)) continue;
            Element prod = A.multiply_mono_elem(m, g, budget);
            std::vector<FieldElement> row(cols.size(), A.coeff_zero());
            for (const auto& t : prod.terms()) row[col_of(t.mono)] = t.coeff;
            rows.push_back({m.degree() + dg, std::move(row)});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.level < b.level; });

    std::vector<long long> complement(static_cast<std::size_t>(dmax) + 1, 0);
    RankAccumulator acc(cols.size());
    std::size_t next = 0;
    long long monos_so_far = 0;
    for (int d = 0; d <= dmax; ++d) {
        while (next < rows.size() && rows[next].level <= static_cast<unsigned>(d))
            acc.add_row(std::move(rows[next++].entries));
        for (const Monomial& m : cols)
            if (m.degree() == static_cast<unsigned>(d)) ++monos_so_far;
        complement[static_cast<std::size_t>(d)] = monos_so_far - static_cast<long long>(acc.rank());
    }
    return complement;
}

/// Cumulative staircase complement counts (degrees <= d), for comparing
/// against the oracle.
inline std::vector<long long> staircase_complement_dims(const Algebra& A, const GroebnerBasis& basis,
                                                        int dmax) {
    std::vector<long long> per_degree = hilbert_truncated(A, basis, dmax);
    std::vector<long long> cumulative(per_degree.size(), 0);
    long long sum = 0;
    for (std::size_t k = 0; k < per_degree.size(); ++k) {
        sum += per_degree[k];
        cumulative[k] = sum;
    }
    return cumulative;
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree,
                                bool allow_unit = true) {
    std::uniform_int_distribution<unsigned> deg(allow_unit ? 0 : 1, max_degree);
    std::uniform_int_distribution<std::size_t> slot(0, nvars - 1);
    std::vector<unsigned> exps(nvars, 0);
    unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) ++exps[slot(rng)];
    return Monomial(std::move(exps));
}

inline FieldElement random_coeff(std::mt19937_64& rng, const QMode& mode) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<long> qexp(-2, 2);
    std::uniform_int_distribution<int> nterms(1, 2);
    if (!mode.is_symbolic()) {
        int n = num(rng);
        if (n == 0) n = 1;
        return FieldElement::from_rational(mode, rational(n, den(rng)));
    }
    LaurentPoly p;
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        int c = num(rng);
        if (c == 0) c = 1;
        p.add_term(qexp(rng), rational(c, den(rng)));
    }
    if (p.is_zero()) p = LaurentPoly::constant(1);
    return FieldElement::from_laurent(mode, p);
}

inline Element random_element(const Algebra& A, std::mt19937_64& rng, unsigned max_terms,
                              unsigned max_degree) {
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::vector<Term> terms;
    unsigned count = nterms(rng);
    for (unsigned k = 0; k < count; ++k)
        terms.push_back({random_monomial(rng, A.ngens(), max_degree), random_coeff(rng, A.qmode())});
    Element e = Element::from_terms(A.ordering(), std::move(terms));
    if (e.is_zero()) e = A.gen_element(0);
    return e;
}

inline std::vector<Element> random_ideal(const Algebra& A, std::mt19937_64& rng, unsigned max_gens,
                                         unsigned max_degree) {
    std::uniform_int_distribution<unsigned> ngens(1, max_gens);
    std::vector<Element> gens;
    unsigned count = ngens(rng);
    for (unsigned k = 0; k < count; ++k) gens.push_back(random_element(A, rng, 3, max_degree));
    return gens;
}

inline bool same_basis(const std::vector<Element>& a, const std::vector<Element>& b) {
    if (a.size() != b.size()) return false;
    for (const Element& x : a) {
        bool found = false;
        for (const Element& y : b)
            if (x.equals(y)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

} // namespace spatest

#endif // SPA_TESTS_TESTUTIL_HPP
