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

#include "spa/rational.hpp"

#include <cctype>

namespace spa {

Rational parse_rational(const std::string& text) {
    std::size_t pos = 0;
    auto fail = [&](const char* what) -> Rational { throw ParseError(what, pos); };

    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto read_digits = [&]() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return text.substr(start, pos - start);
    };
    mpz_class num(read_digits());
    mpz_class den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = mpz_class(read_digits());
        if (den == 0) throw DivisionByZero();
    }
    if (pos != text.size()) fail("trailing characters in rational");
    Rational r(negative ? mpz_class(-num) : num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
}

Rational pow_rational(const Rational& base, long exponent) {
    if (exponent == 0) return 1;
    if (base == 0) {
        if (exponent < 0) throw DivisionByZero();
        return 0;
    }
    bool invert = exponent < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    r.canonicalize();
    if (invert) {
        Rational inv(r.get_den(), r.get_num());
        inv.canonicalize();
        return inv;
    }
    return r;
}

} // namespace spa
