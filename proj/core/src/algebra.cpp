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

#include "spa/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace spa {

Algebra::Algebra(std::vector<Generator> generators, std::vector<CommutationRule> rules,
                 OrderingSpec ordering, QMode qmode, std::vector<std::string> notes)
    : gens_(std::move(generators)),
      rules_(std::move(rules)),
      ordering_(std::move(ordering)),
      qmode_(std::move(qmode)),
      notes_(std::move(notes)) {
    const std::size_t n = gens_.size();
    if (rules_.size() != n * (n - 1) / 2)
        throw BadArgument("rule table must hold exactly one rule per generator pair");
    solvable_verified_ = check_solvable().ok();
}

std::optional<std::size_t> Algebra::find_generator(std::string_view name) const {
    for (std::size_t s = 0; s < gens_.size(); ++s)
        if (gens_[s].name == name) return s;
    return std::nullopt;
}

std::size_t Algebra::rule_index(std::size_t lo, std::size_t hi) const {
    assert(lo < hi && hi < gens_.size());
    return hi * (hi - 1) / 2 + lo;
}

const CommutationRule& Algebra::rule(std::size_t lo, std::size_t hi) const {
    return rules_[rule_index(lo, hi)];
}

Algebra Algebra::with_ordering(OrderingSpec spec) const {
    std::vector<CommutationRule> rules = rules_;
    for (auto& r : rules)
        if (!r.tail.is_zero()) r.tail = r.tail.resorted(spec);
    return Algebra(gens_, std::move(rules), std::move(spec), qmode_, notes_);
}

Algebra Algebra::with_rule(std::size_t lo, std::size_t hi, CommutationRule r) const {
    std::vector<CommutationRule> rules = rules_;
    rules[rule_index(lo, hi)] = std::move(r);
    return Algebra(gens_, std::move(rules), ordering_, qmode_, notes_);
}

Element Algebra::gen_element(std::size_t slot) const {
    return Element::from_term(Monomial::generator(ngens(), slot), coeff_one());
}

std::vector<std::pair<std::vector<std::size_t>, FieldElement>>
Algebra::expand_once(std::span<const std::size_t> word, std::size_t pos) const {
    assert(pos + 1 < word.size());
    assert(word[pos] > word[pos + 1]);
    const CommutationRule& r = rule(word[pos + 1], word[pos]);

    std::vector<std::pair<std::vector<std::size_t>, FieldElement>> branches;
    std::vector<std::size_t> swapped(word.begin(), word.end());
    std::swap(swapped[pos], swapped[pos + 1]);
    branches.emplace_back(std::move(swapped), r.lambda);

    for (const auto& t : r.tail.terms()) {
        std::vector<std::size_t> w(word.begin(), word.begin() + pos);
        for (std::size_t s : t.mono.word()) w.push_back(s);
        w.insert(w.end(), word.begin() + pos + 2, word.end());
        branches.emplace_back(std::move(w), t.coeff);
    }
    return branches;
}

Element Algebra::normalize_word(std::span<const std::size_t> word, Budget& budget) const {
    std::map<Monomial, FieldElement> acc;
    std::vector<std::pair<std::vector<std::size_t>, FieldElement>> stack;
    stack.emplace_back(std::vector<std::size_t>(word.begin(), word.end()), coeff_one());

    while (!stack.empty()) {
        auto [w, c] = std::move(stack.back());
        stack.pop_back();

        std::size_t pos = 0;
        bool standard = true;
        for (; pos + 1 < w.size(); ++pos)
            if (w[pos] > w[pos + 1]) {
                standard = false;
                break;
            }
        if (standard) {
            std::vector<unsigned> exps(ngens(), 0);
            for (std::size_t s : w) ++exps[s];
            Monomial m(std::move(exps));
            auto [it, inserted] = acc.emplace(std::move(m), c);
            if (!inserted) it->second = it->second + c;
            continue;
        }

        budget.charge();
        for (auto& [bw, bc] : expand_once(w, pos)) {
            FieldElement coeff = c * bc;
            if (!coeff.is_zero()) stack.emplace_back(std::move(bw), std::move(coeff));
        }
    }

    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms.push_back({m, c});
    return Element::from_terms(ordering_, std::move(terms));
}

Element Algebra::multiply_monomials(const Monomial& u, const Monomial& v, Budget& budget) const {
    std::vector<std::size_t> w = u.word();
    for (std::size_t s : v.word()) w.push_back(s);
    return normalize_word(w, budget);
}

Element Algebra::multiply(const Element& f, const Element& g, Budget& budget) const {
    Element sum;
    for (const auto& tf : f.terms())
        for (const auto& tg : g.terms()) {
            Element p = multiply_monomials(tf.mono, tg.mono, budget).scaled(tf.coeff * tg.coeff);
            sum = Element::add(ordering_, sum, p);
        }
    return sum;
}

Element Algebra::multiply_mono_elem(const Monomial& m, const Element& f, Budget& budget) const {
    Element sum;
    for (const auto& t : f.terms()) {
        Element p = multiply_monomials(m, t.mono, budget).scaled(t.coeff);
        sum = Element::add(ordering_, sum, p);
    }
    return sum;
}

std::pair<Monomial, FieldElement> Algebra::leading_data(const Element& f) const {
    const Term& lt = f.leading_term(); // throws ZeroElement
    return {lt.mono, lt.coeff};
}

SolvabilityReport Algebra::check_solvable() const {
    SolvabilityReport report;
    report.notes = notes_;
    const std::size_t n = gens_.size();
    for (std::size_t hi = 1; hi < n; ++hi) {
        for (std::size_t lo = 0; lo < hi; ++lo) {
            const CommutationRule& r = rule(lo, hi);
            if (r.lambda.is_zero()) {
                report.violations.push_back({lo, hi, SolvabilityIssue::ZeroLambda,
                                             gens_[hi].name + "*" + gens_[lo].name + ": lambda = 0"});
                continue;
            }
            if (r.tail.is_zero()) continue;
            Monomial main = Monomial::generator(n, lo) * Monomial::generator(n, hi);
            const Monomial lm = r.tail.resorted(ordering_).leading_monomial();
            if (compare_monomials(ordering_, lm, main) != std::strong_ordering::less) {
                report.violations.push_back({lo, hi, SolvabilityIssue::TailNotSmaller,
                                             gens_[hi].name + "*" + gens_[lo].name +
                                                 ": tail leading monomial not below " +
                                                 gens_[lo].name + "*" + gens_[hi].name});
            }
        }
    }
    return report;
}

} // namespace spa
