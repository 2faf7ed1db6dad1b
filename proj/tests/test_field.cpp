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

#include <doctest.h>

#include <random>

#include "testutil.hpp"

using namespace spa;

namespace {

const QMode sym = QMode::symbolic();

FieldElement coeff(const std::string& text) { return parse_coefficient(text, sym); }

} // namespace

TEST_CASE("additive inverse and cancellation") {
    CHECK((coeff("q^2") + coeff("-q^2")).is_zero());
    CHECK(coeff("(q^2 - q^-2) + q^-2") == coeff("q^2"));
}

TEST_CASE("sum of simple fractions, cross-multiplication oracle") {
    FieldElement sum = coeff("1/(q-1)") + coeff("1/(q+1)");
    // Oracle: s * (q-1)(q+1) must equal 2q exactly.
    CHECK(sum * coeff("(q-1)*(q+1)") == coeff("2*q"));
    // Canonical form 2q/(q^2-1).
    CHECK(sum == coeff("2*q/(q^2-1)"));
    CHECK(sum.den() == (LaurentPoly::q_power(2) - LaurentPoly::constant(1)));
    CHECK(sum.num() == LaurentPoly::term(2, 1));
}

TEST_CASE("products") {
    CHECK(coeff("(q^2 - q^-2) * q^2") == coeff("q^4 - 1"));
    CHECK((coeff("q^3 - 7") * FieldElement::zero(sym)).is_zero());
    CHECK(coeff("(q^2 - q^-2) * 1/(q^2 - q^-2)").is_one());
}

TEST_CASE("inverses") {
    CHECK(coeff("q").inverse() == coeff("q^-1"));
    FieldElement inv = coeff("q^2 - q^-2").inverse();
    CHECK(inv == coeff("q^2/(q^4 - 1)"));
    CHECK((coeff("q^2 - q^-2") * inv).is_one());
    CHECK_THROWS_AS(FieldElement::zero(sym).inverse(), DivisionByZero);
}

TEST_CASE("specialization") {
    CHECK(coeff("q^2 - q^-2").specialize(2) ==
          FieldElement::from_rational(QMode::specialized(2), rational(15, 4)));
    CHECK_THROWS_AS(coeff("q").specialize(1), IllegalQ);
    CHECK_THROWS_AS(coeff("q").specialize(-1), IllegalQ);
    CHECK_THROWS_AS(coeff("q").specialize(0), IllegalQ);
    CHECK_THROWS_AS(coeff("1/(q-2)").specialize(2), PoleAtQ);
}

TEST_CASE("mode mismatch is rejected") {
    FieldElement a = FieldElement::q(sym);
    FieldElement b = FieldElement::q(QMode::specialized(2));
    CHECK_THROWS_AS(a + b, ModeMismatch);
    FieldElement c = FieldElement::q(QMode::specialized(3));
    CHECK_THROWS_AS(b * c, ModeMismatch);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> small(-4, 4);
    std::uniform_int_distribution<long> qe(-3, 3);
    auto sample = [&]() {
        LaurentPoly num, den;
        num.add_term(qe(rng), small(rng));
        num.add_term(qe(rng), small(rng));
        den.add_term(qe(rng), small(rng));
        if (den.is_zero()) den = LaurentPoly::constant(1);
        if (num.is_zero()) return FieldElement::zero(sym);
        return FieldElement::fraction(sym, num, den);
    };
    for (int k = 0; k < 200; ++k) {
        FieldElement a = sample(), b = sample(), c = sample();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + (-a)).is_zero());
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("canonical form is idempotent and equality is structural") {
    // Build un-reduced fractions and confirm a single canonical result.
    LaurentPoly num = (LaurentPoly::q_power(2) - LaurentPoly::constant(1)) * LaurentPoly::q_power(-3);
    LaurentPoly den = (LaurentPoly::q_power(1) - LaurentPoly::constant(1)) * LaurentPoly::q_power(2);
    FieldElement a = FieldElement::fraction(sym, num, den);
    // (q^2-1)q^-3 / (q-1)q^2 = (q+1) * q^-5
    CHECK(a == coeff("(q+1) * q^-5"));
    FieldElement again = FieldElement::fraction(sym, a.num(), a.den());
    CHECK(again == a);
    CHECK(again.num() == a.num());
    CHECK(again.den() == a.den());
    // Denominator constraints: monic with nonzero constant term.
    FieldElement f = coeff("(3*q^2 + 3)/(2*q^3 - 2*q)");
    CHECK(f.den().coeff(0) != 0);
    CHECK(f.den().leading_coeff() == 1);
}

TEST_CASE("specialization is a field homomorphism away from poles") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> small(-4, 4);
    std::uniform_int_distribution<long> qe(-2, 2);
    const Rational at(3, 2);
    int checked = 0;
    while (checked < 100) {
        LaurentPoly na, nb, da, db;
        na.add_term(qe(rng), small(rng));
        nb.add_term(qe(rng), small(rng));
        da.add_term(qe(rng), small(rng));
        da.add_term(0, 1);
        db.add_term(qe(rng), small(rng));
        db.add_term(1, 1);
        if (da.is_zero() || db.is_zero()) continue;
        FieldElement a = FieldElement::fraction(sym, na, da);
        FieldElement b = FieldElement::fraction(sym, nb, db);
        try {
            FieldElement sum = (a + b).specialize(at);
            FieldElement prod = (a * b).specialize(at);
            CHECK(sum == a.specialize(at) + b.specialize(at));
            CHECK(prod == a.specialize(at) * b.specialize(at));
            ++checked;
        } catch (const PoleAtQ&) {
            // skip pole configurations
        }
    }
}

TEST_CASE("q-mode guards") {
    CHECK_THROWS_AS(QMode::specialized(0), IllegalQ);
    CHECK_THROWS_AS(QMode::specialized(1), IllegalQ);
    CHECK_THROWS_AS(QMode::specialized(-1), IllegalQ);
    CHECK(QMode::specialized(2).value() == 2);
    CHECK(QMode::symbolic().is_symbolic());
}
