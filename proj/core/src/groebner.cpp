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

#include "spa/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace spa {

const char* to_string(Side s) {
    return s == Side::Left ? "left" : "twosided";
}

namespace {

/// Reducer choice: smallest leading monomial first, then lowest index.
std::ptrdiff_t pick_reducer(const Algebra& A, const Monomial& target, std::span<const Element> basis) {
    std::ptrdiff_t best = -1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].is_zero()) continue;
        const Monomial& lm = basis[k].leading_monomial();
        if (!lm.divides(target)) continue;
        if (best < 0 || A.compare(lm, basis[static_cast<std::size_t>(best)].leading_monomial()) ==
                            std::strong_ordering::less)
            best = static_cast<std::ptrdiff_t>(k);
    }
    return best;
}

} // namespace

Element normal_form(const Algebra& A, Element f, std::span<const Element> basis, Budget& budget) {
    std::vector<Term> remainder;
    while (!f.is_zero()) {
        budget.charge();
        const Term lt = f.leading_term();
        std::ptrdiff_t k = pick_reducer(A, lt.mono, basis);
        if (k < 0) {
            remainder.push_back(lt);
            f = Element::sub(A.ordering(), f, Element::from_term(lt.mono, lt.coeff));
            continue;
        }
        const Element& g = basis[static_cast<std::size_t>(k)];
        Monomial cofactor = lt.mono / g.leading_monomial();
        Element h = A.multiply_mono_elem(cofactor, g, budget);
        if (h.is_zero() || !(h.leading_monomial() == lt.mono))
            throw OrderingIncompatible("reduction step lost the leading monomial; "
                                       "the ordering is incompatible with the presentation");
        f = Element::sub(A.ordering(), f, h.scaled(lt.coeff / h.leading_coeff()));
    }
    // Leading monomials strictly decrease, so the collected terms are
    // already descending; from_terms re-sorts defensively.
    return Element::from_terms(A.ordering(), std::move(remainder));
}

Element s_polynomial(const Algebra& A, const Element& f, const Element& g, Budget& budget) {
    if (f.is_zero() || g.is_zero()) throw ZeroElement();
    Monomial w = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Element hf = A.multiply_mono_elem(w / f.leading_monomial(), f, budget);
    Element hg = A.multiply_mono_elem(w / g.leading_monomial(), g, budget);
    return Element::sub(A.ordering(), hf.scaled(hf.leading_coeff().inverse()),
                        hg.scaled(hg.leading_coeff().inverse()));
}

namespace {

struct PairEntry {
    Monomial w;
    std::size_t i, j;
};

struct PairLess {
    const Algebra* A;
    bool operator()(const PairEntry& a, const PairEntry& b) const {
        if (auto c = A->compare(a.w, b.w); c != 0) return c == std::strong_ordering::less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

void record_specialization_event(const Element& candidate, const Rational& value,
                                 std::vector<std::string>& events) {
    const FieldElement& lc = candidate.leading_coeff();
    if (!lc.mode().is_symbolic()) return;
    Rational den = lc.den().eval(value);
    if (den == 0) {
        events.push_back("leading coefficient has a pole at q = " + to_string(value));
        return;
    }
    if (lc.num().eval(value) == 0)
        events.push_back("leading coefficient vanishes at q = " + to_string(value));
}

} // namespace

GroebnerBasis buchberger(const Algebra& A, const std::vector<Element>& gens, Side side, Budget& budget,
                         const std::optional<Rational>& specialization_watch) {
    GroebnerBasis result;
    result.side = side;
    result.ordering = A.ordering();

    std::vector<Element>& G = result.elements;
    std::set<PairEntry, PairLess> pairs{PairLess{&A}};
    std::deque<std::pair<std::size_t, std::size_t>> extensions; // (element, generator slot)

    auto insert_element = [&](Element h) {
        if (specialization_watch) record_specialization_event(h, *specialization_watch, result.specialization_events);
        h = h.monic();
        std::size_t idx = G.size();
        G.push_back(std::move(h));
        for (std::size_t k = 0; k < idx; ++k)
            pairs.insert({Monomial::lcm(G[k].leading_monomial(), G[idx].leading_monomial()), k, idx});
        if (side == Side::TwoSided)
            for (std::size_t s = 0; s < A.ngens(); ++s) extensions.emplace_back(idx, s);
    };

    try {
        for (const Element& gen : gens) {
            if (gen.is_zero()) continue;
            Element r = normal_form(A, gen.resorted(A.ordering()), G, budget);
            if (!r.is_zero()) insert_element(std::move(r));
        }
        while (!pairs.empty() || !extensions.empty()) {
            budget.charge();
            if (!pairs.empty()) {
                PairEntry p = *pairs.begin();
                pairs.erase(pairs.begin());
                Element s = s_polynomial(A, G[p.i], G[p.j], budget);
                Element r = normal_form(A, std::move(s), G, budget);
                if (!r.is_zero()) insert_element(std::move(r));
            } else {
                auto [idx, slot] = extensions.front();
                extensions.pop_front();
                Element h = A.multiply(G[idx], A.gen_element(slot), budget);
                Element r = normal_form(A, std::move(h), G, budget);
                if (!r.is_zero()) insert_element(std::move(r));
            }
        }
    } catch (const NontermLimit& e) {
        throw BuchbergerLimit(e.steps(), G);
    }

    std::sort(G.begin(), G.end(), [&](const Element& a, const Element& b) {
        return A.compare(a.leading_monomial(), b.leading_monomial()) == std::strong_ordering::less;
    });
    return result;
}

GroebnerBasis reduce_basis(const Algebra& A, GroebnerBasis basis, Budget& budget) {
    std::vector<Element> work = std::move(basis.elements);
    std::sort(work.begin(), work.end(), [&](const Element& a, const Element& b) {
        return A.compare(a.leading_monomial(), b.leading_monomial()) == std::strong_ordering::less;
    });

    // Minimal generating set of the leading-monomial ideal.
    std::vector<Element> kept;
    for (Element& g : work) {
        if (g.is_zero()) continue;
        bool redundant = false;
        for (const Element& h : kept)
            if (h.leading_monomial().divides(g.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(g.monic());
    }

    // Tail reduction to the unique reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        budget.charge();
        for (std::size_t k = 0; k < kept.size(); ++k) {
            std::vector<Element> others;
            others.reserve(kept.size() - 1);
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != k) others.push_back(kept[j]);
            Element r = normal_form(A, kept[k], others, budget);
            if (r.is_zero()) {
                kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(k));
                changed = true;
                break;
            }
            r = r.monic();
            if (!r.equals(kept[k])) {
                kept[k] = std::move(r);
                changed = true;
            }
        }
    }

    basis.elements = std::move(kept);
    basis.reduced = true;
    return basis;
}

bool ideal_membership(const Algebra& A, const Element& f, const GroebnerBasis& basis, Budget& budget) {
    return normal_form(A, f.resorted(A.ordering()), basis.elements, budget).is_zero();
}

ConsistencyReport pbw_consistency(const Algebra& A, Budget& budget) {
    ConsistencyReport report;
    const std::size_t n = A.ngens();
    for (std::size_t a = 2; a < n; ++a) {
        for (std::size_t b = 1; b < a; ++b) {
            for (std::size_t c = 0; c < b; ++c) {
                const std::size_t word[3] = {a, b, c};
                auto resolve = [&](std::size_t pos) {
                    Element sum;
                    for (auto& [w, coeff] : A.expand_once(word, pos)) {
                        Element part = A.normalize_word(w, budget).scaled(coeff);
                        sum = Element::add(A.ordering(), sum, part);
                    }
                    return sum;
                };
                Element left = resolve(0);
                Element right = resolve(1);
                ++report.triples_checked;
                if (!left.equals(right)) report.failures.push_back({a, b, c, left, right});
            }
        }
    }
    return report;
}

} // namespace spa
