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

#include "spa/element.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace spa {

Element Element::from_term(Monomial m, FieldElement c) {
    Element e;
    if (!c.is_zero()) e.terms_.push_back({std::move(m), std::move(c)});
    return e;
}

Element Element::from_terms(const OrderingSpec& spec, std::vector<Term> terms) {
    std::map<Monomial, FieldElement> acc;
    for (auto& t : terms) {
        auto it = acc.find(t.mono);
        if (it == acc.end())
            acc.emplace(std::move(t.mono), std::move(t.coeff));
        else
            it->second = it->second + t.coeff;
    }
    Element e;
    for (auto& [m, c] : acc)
        if (!c.is_zero()) e.terms_.push_back({m, c});
    std::sort(e.terms_.begin(), e.terms_.end(), [&](const Term& a, const Term& b) {
        return compare_monomials(spec, a.mono, b.mono) == std::strong_ordering::greater;
    });
    return e;
}

const Term& Element::leading_term() const {
    if (terms_.empty()) throw ZeroElement();
    return terms_.front();
}

const Monomial& Element::leading_monomial() const { return leading_term().mono; }
const FieldElement& Element::leading_coeff() const { return leading_term().coeff; }

unsigned Element::degree() const {
    if (terms_.empty()) throw ZeroElement();
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

Element Element::add(const OrderingSpec& spec, const Element& a, const Element& b) {
    Element r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        auto c = compare_monomials(spec, a.terms_[i].mono, b.terms_[j].mono);
        if (c == std::strong_ordering::greater) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            FieldElement s = a.terms_[i].coeff + b.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

Element Element::sub(const OrderingSpec& spec, const Element& a, const Element& b) {
    return add(spec, a, b.negated());
}

Element Element::negated() const {
    Element r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Element Element::scaled(const FieldElement& c) const {
    if (c.is_zero()) return Element();
    Element r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
}

Element Element::monic() const {
    return scaled(leading_coeff().inverse());
}

Element Element::resorted(const OrderingSpec& spec) const {
    return from_terms(spec, terms_);
}

bool Element::equals(const Element& rhs) const {
    if (terms_.size() != rhs.terms_.size()) return false;
    std::map<Monomial, const FieldElement*> mine;
    for (const auto& t : terms_) mine.emplace(t.mono, &t.coeff);
    for (const auto& t : rhs.terms_) {
        auto it = mine.find(t.mono);
        if (it == mine.end() || !(*it->second == t.coeff)) return false;
    }
    return true;
}

Element Element::specialize(const Rational& value) const {
    Element r;
    for (const auto& t : terms_) {
        FieldElement c = t.coeff.specialize(value);
        if (!c.is_zero()) r.terms_.push_back({t.mono, std::move(c)});
    }
    return r;
}

} // namespace spa
