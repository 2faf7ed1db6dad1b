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

#include "spa/format.hpp"

namespace spa {

namespace {

/// One Laurent term, descending-exponent convention: "q^2", "-q^-2",
/// "5/4*q^3", "3". sign_out carries the sign separately when requested.
std::string laurent_term(const Rational& c, long k, bool lead_sign) {
    std::string s;
    Rational a = c;
    if (c < 0) {
        a = -c;
        s += lead_sign ? "-" : "- ";
    } else if (!lead_sign) {
        s += "+ ";
    }
    if (k == 0) {
        s += to_string(a);
        return s;
    }
    if (a != 1) s += to_string(a) + "*";
    s += "q";
    if (k != 1) s += "^" + std::to_string(k);
    return s;
}

bool needs_parens(const std::string& s) {
    for (char c : s)
        if (c == ' ' || c == '+' || c == '/' || c == '-') return true;
    return false;
}

} // namespace

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) s += " ";
        s += laurent_term(it->second, it->first, first);
        first = false;
    }
    return s;
}

std::string to_string(const FieldElement& c) {
    if (c.den().is_one()) return to_string(c.num());
    std::string num = to_string(c.num());
    std::string den = to_string(c.den());
    if (needs_parens(num)) num = "(" + num + ")";
    if (needs_parens(den)) den = "(" + den + ")";
    return num + "/" + den;
}

std::string to_string(const Algebra& A, const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    for (std::size_t slot = 0; slot < m.nvars(); ++slot) {
        if (m[slot] == 0) continue;
        if (!s.empty()) s += "*";
        s += A.generator(slot).name;
        if (m[slot] > 1) s += "^" + std::to_string(m[slot]);
    }
    return s;
}

namespace {

/// Coefficient as (sign, magnitude) where magnitude re-parses as one
/// multiplicative unit. Only single-term numerators expose their sign.
std::pair<bool, std::string> signed_coeff(const FieldElement& c) {
    if (c.den().is_one() && c.num().term_count() == 1) {
        auto [k, v] = *c.num().terms().begin();
        bool negative = v < 0;
        Rational a = negative ? Rational(-v) : v;
        std::string s;
        if (k == 0) {
            s = to_string(a);
        } else {
            if (a != 1) s += to_string(a) + "*";
            s += "q";
            if (k != 1) s += "^" + std::to_string(k);
        }
        // "5/4*q^3" survives as a unit ('/' binds inside a unit).
        return {negative, s};
    }
    std::string s = to_string(c);
    if (needs_parens(s)) s = "(" + s + ")";
    return {false, s};
}

} // namespace

std::string to_string(const Algebra& A, const Element& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        auto [negative, mag] = signed_coeff(t.coeff);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string mono = to_string(A, t.mono);
        bool coeff_is_one = mag == "1";
        if (mono == "1") {
            out += mag;
        } else if (coeff_is_one) {
            out += mono;
        } else {
            out += mag + "*" + mono;
        }
    }
    return out;
}

std::string rule_to_string(const Algebra& A, std::size_t lo, std::size_t hi) {
    const CommutationRule& r = A.rule(lo, hi);
    Monomial main = Monomial::generator(A.ngens(), lo) * Monomial::generator(A.ngens(), hi);
    Element rhs = Element::add(A.ordering(), Element::from_term(main, r.lambda), r.tail);
    return A.generator(hi).name + "*" + A.generator(lo).name + " = " + to_string(A, rhs);
}

std::string gb_header(const Algebra& A, const GroebnerBasis& basis, const std::string& algebra_name) {
    std::string s = "# algebra: " + algebra_name + " | ordering: " + basis.ordering.name() +
                    " | side: " + std::string(to_string(basis.side)) + " | q: " + A.qmode().to_string() +
                    " | reduced: " + (basis.reduced ? "yes" : "no");
    return s;
}

} // namespace spa
