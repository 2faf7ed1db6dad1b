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

#include "spa/field.hpp"

#include <cassert>

namespace spa {

QMode QMode::specialized(const Rational& value) {
    if (value == 0 || value == 1 || value == -1)
        throw IllegalQ("q = " + spa::to_string(value) + " is excluded (q must be nonzero with q^8 != 1)");
    QMode m;
    m.value_ = value;
    return m;
}

const Rational& QMode::value() const {
    assert(!is_symbolic());
    return *value_;
}

std::string QMode::to_string() const {
    return is_symbolic() ? "symbolic" : spa::to_string(*value_);
}

FieldElement FieldElement::zero(const QMode& mode) {
    return FieldElement(mode, LaurentPoly(), LaurentPoly::constant(1));
}

FieldElement FieldElement::one(const QMode& mode) {
    return FieldElement(mode, LaurentPoly::constant(1), LaurentPoly::constant(1));
}

FieldElement FieldElement::from_rational(const QMode& mode, const Rational& value) {
    return FieldElement(mode, LaurentPoly::constant(value), LaurentPoly::constant(1));
}

FieldElement FieldElement::q(const QMode& mode) {
    return q_power(mode, 1);
}

FieldElement FieldElement::q_power(const QMode& mode, long k) {
    if (mode.is_symbolic())
        return FieldElement(mode, LaurentPoly::q_power(k), LaurentPoly::constant(1));
    return from_rational(mode, pow_rational(mode.value(), k));
}

FieldElement FieldElement::from_laurent(const QMode& mode, const LaurentPoly& num) {
    if (mode.is_symbolic()) return FieldElement(mode, num, LaurentPoly::constant(1));
    return from_rational(mode, num.eval(mode.value()));
}

FieldElement FieldElement::fraction(const QMode& mode, const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw DivisionByZero();
    if (mode.is_symbolic()) return make_canonical(mode, num, den);
    Rational d = den.eval(mode.value());
    if (d == 0) throw PoleAtQ("denominator vanishes at q = " + spa::to_string(mode.value()));
    return from_rational(mode, num.eval(mode.value()) / d);
}

FieldElement FieldElement::make_canonical(const QMode& mode, LaurentPoly num, LaurentPoly den) {
    assert(!den.is_zero());
    if (num.is_zero()) return zero(mode);
    // Clear q-powers from the denominator.
    long s = den.min_exp();
    den = den.shifted(-s);
    num = num.shifted(-s);
    // Cancel the polynomial parts.
    long t = num.min_exp();
    LaurentPoly p = num.shifted(-t);
    LaurentPoly g = poly_gcd(p, den);
    if (!g.is_one()) {
        p = poly_divexact(p, g);
        den = poly_divexact(den, g);
    }
    // Monic denominator.
    Rational lc = den.leading_coeff();
    if (lc != 1) {
        den = den.scaled(1 / lc);
        p = p.scaled(1 / lc);
    }
    return FieldElement(mode, p.shifted(t), den);
}

bool FieldElement::is_one() const {
    return num_.is_one() && den_.is_one();
}

Rational FieldElement::rational_value() const {
    if (mode_.is_symbolic()) throw ModeMismatch("rational_value on a symbolic element");
    return num_.is_zero() ? Rational(0) : num_.coeff(0);
}

void FieldElement::require_same_mode(const FieldElement& rhs) const {
    if (mode_ != rhs.mode_) throw ModeMismatch("operands have different q-modes");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_mode(rhs);
    return make_canonical(mode_, num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    require_same_mode(rhs);
    return make_canonical(mode_, num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_mode(rhs);
    return make_canonical(mode_, num_ * rhs.num_, den_ * rhs.den_);
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    return *this * rhs.inverse();
}

FieldElement FieldElement::operator-() const {
    return FieldElement(mode_, -num_, den_);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return make_canonical(mode_, den_, num_);
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    return mode_ == rhs.mode_ && num_ == rhs.num_ && den_ == rhs.den_;
}

FieldElement FieldElement::specialize(const Rational& value) const {
    if (!mode_.is_symbolic()) throw ModeMismatch("element is already specialized");
    QMode target = QMode::specialized(value); // throws IllegalQ for 0, 1, -1
    Rational d = den_.eval(value);
    if (d == 0) throw PoleAtQ("denominator vanishes at q = " + spa::to_string(value));
    return from_rational(target, num_.eval(value) / d);
}

} // namespace spa
