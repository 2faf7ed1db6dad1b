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

#include "spa/laurent.hpp"

#include <cassert>

namespace spa {

LaurentPoly LaurentPoly::term(const Rational& c, long k) {
    LaurentPoly p;
    if (c != 0) p.coeff_[k] = c;
    return p;
}

bool LaurentPoly::is_one() const {
    return coeff_.size() == 1 && coeff_.begin()->first == 0 && coeff_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
    return coeff_.empty() || (coeff_.size() == 1 && coeff_.begin()->first == 0);
}

long LaurentPoly::min_exp() const {
    assert(!coeff_.empty());
    return coeff_.begin()->first;
}

long LaurentPoly::max_exp() const {
    assert(!coeff_.empty());
    return coeff_.rbegin()->first;
}

Rational LaurentPoly::coeff(long k) const {
    auto it = coeff_.find(k);
    return it == coeff_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::leading_coeff() const {
    assert(!coeff_.empty());
    return coeff_.rbegin()->second;
}

void LaurentPoly::add_term(long k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = coeff_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeff_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly r = *this;
    for (const auto& [k, c] : rhs.coeff_) r.add_term(k, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    LaurentPoly r = *this;
    for (const auto& [k, c] : rhs.coeff_) r.add_term(k, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly r;
    for (const auto& [ka, ca] : coeff_)
        for (const auto& [kb, cb] : rhs.coeff_) r.add_term(ka + kb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : coeff_) r.coeff_[k] = -c;
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [k, v] : coeff_) r.coeff_[k] = v * c;
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeff_) r.coeff_[e + k] = c;
    return r;
}

Rational LaurentPoly::eval(const Rational& v) const {
    Rational sum = 0;
    for (const auto& [k, c] : coeff_) sum += c * pow_rational(v, k);
    return sum;
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
    assert(!b.is_zero());
    assert(b.min_exp() >= 0);
    assert(a.is_zero() || a.min_exp() >= 0);
    LaurentPoly quot;
    LaurentPoly rem = a;
    const long db = b.max_exp();
    const Rational lb = b.leading_coeff();
    while (!rem.is_zero() && rem.max_exp() >= db) {
        long k = rem.max_exp() - db;
        Rational c = rem.leading_coeff() / lb;
        quot.add_term(k, c);
        rem = rem - b.scaled(c).shifted(k);
    }
    return {quot, rem};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.scaled(1 / a.leading_coeff()); // monic
}

LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    auto [q, r] = poly_divmod(a, b);
    assert(r.is_zero());
    return q;
}

} // namespace spa
