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

#include "spa/parse.hpp"

#include <cctype>
#include <istream>

#include "spa/quantum.hpp"

namespace spa {

namespace {

constexpr long kMaxExponent = 1'000'000;

class Cursor {
  public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected ") + what);
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    std::size_t position() const { return pos_; }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > kMaxExponent * 1000) {
                pos_ = start;
                fail("integer literal too large");
            }
            ++pos_;
        }
        return neg ? -v : v;
    }

    mpz_class bigint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    bool starts_identifier() {
        skip_ws();
        return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_' || text_[pos_] == '+' || text_[pos_] == '-')) {
            // '+'/'-' only continue an identifier for algebra names like "uq+".
            if ((text_[pos_] == '+' || text_[pos_] == '-') && !algebra_names_) break;
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void set_algebra_names(bool on) { algebra_names_ = on; }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    bool algebra_names_ = false;
};

/// Coefficient grammar.
class CoeffParser {
  public:
    CoeffParser(Cursor& cur, const QMode& mode) : cur_(cur), mode_(mode) {}

    FieldElement expression() {
        bool neg = false;
        if (cur_.accept('-')) neg = true;
        else cur_.accept('+');
        FieldElement v = product();
        if (neg) v = -v;
        while (true) {
            if (cur_.accept('+')) v = v + product();
            else if (cur_.accept('-')) v = v - product();
            else return v;
        }
    }

    FieldElement product() {
        FieldElement v = power();
        while (true) {
            if (cur_.accept('*')) v = v * power();
            else if (cur_.accept('/')) {
                FieldElement d = power();
                if (d.is_zero()) cur_.fail("division by zero in coefficient");
                v = v / d;
            } else
                return v;
        }
    }

    FieldElement power() {
        FieldElement base = primary();
        if (cur_.accept('^')) {
            long e = cur_.integer();
            if (e > kMaxExponent || e < -kMaxExponent) cur_.fail("exponent overflow");
            if (e == 0) return FieldElement::one(mode_);
            FieldElement b = e < 0 ? base.inverse() : base;
            unsigned long count = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
            FieldElement r = FieldElement::one(mode_);
            while (count) {
                if (count & 1) r = r * b;
                count >>= 1;
                if (count) b = b * b;
            }
            return r;
        }
        return base;
    }

    FieldElement primary() {
        if (cur_.accept('(')) {
            FieldElement v = expression();
            cur_.expect(')', "')'");
            return v;
        }
        if (cur_.peek() == 'q') {
            cur_.accept('q');
            return FieldElement::q(mode_);
        }
        char c = cur_.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class n = cur_.bigint();
            return FieldElement::from_rational(mode_, Rational(n));
        }
        cur_.fail("expected coefficient");
    }

  private:
    Cursor& cur_;
    const QMode& mode_;
};

/// Polynomial grammar. Units of a term are separated by '*'; a unit is
/// either a generator factor name[i,j](^k) or a coefficient atom (number,
/// q-power or parenthesized coefficient expression, possibly chained
/// with '/').
class PolyParser {
  public:
    PolyParser(Cursor& cur, const Algebra& A, Budget& budget)
        : cur_(cur), A_(A), budget_(budget), coeff_(cur, A.qmode()) {}

    Element polynomial() {
        Element sum = Element::zero();
        bool negative = cur_.accept('-');
        while (true) {
            Element term = parse_term(negative);
            sum = Element::add(A_.ordering(), sum, term);
            if (cur_.accept('+')) negative = false;
            else if (cur_.accept('-')) negative = true;
            else break;
        }
        if (!cur_.eof()) cur_.fail("unexpected trailing input");
        return sum;
    }

  private:
    bool at_generator() {
        // Lookahead: identifier immediately followed by '['; 'q' alone or
        // 'q^'/'q*' is a coefficient.
        Cursor probe = cur_;
        if (!probe.starts_identifier()) return false;
        (void)probe.identifier();
        return probe.peek() == '[';
    }

    Element parse_term(bool negative) {
        FieldElement coeff = negative ? -A_.coeff_one() : A_.coeff_one();
        std::vector<std::size_t> word;
        bool any = false;
        while (true) {
            if (at_generator()) {
                parse_generator_factor(word);
            } else {
                coeff = coeff * coeff_unit();
            }
            any = true;
            if (!cur_.accept('*')) break;
        }
        if (!any) cur_.fail("empty term");
        Element mono = A_.normalize_word(word, budget_);
        return mono.scaled(coeff);
    }

    /// A coefficient unit: atom ('/' atom)*, where atoms are numbers,
    /// q-powers or parenthesized coefficient expressions. '/' binds within
    /// the unit so that 2/3*x[1,2] reads as (2/3)*x[1,2].
    FieldElement coeff_unit() {
        FieldElement v = coeff_.power();
        while (cur_.accept('/')) {
            FieldElement d = coeff_.power();
            if (d.is_zero()) cur_.fail("division by zero in coefficient");
            v = v / d;
        }
        return v;
    }

    void parse_generator_factor(std::vector<std::size_t>& word) {
        std::string name = cur_.identifier();
        cur_.expect('[', "'['");
        long i = cur_.integer();
        cur_.expect(',', "','");
        long j = cur_.integer();
        cur_.expect(']', "']'");
        std::string full = name + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
        auto slot = A_.find_generator(full);
        if (!slot) throw UnknownGenerator("unknown generator " + full);
        long e = 1;
        if (cur_.accept('^')) {
            e = cur_.integer();
            if (e < 1) cur_.fail("expected positive integer exponent");
            if (e > kMaxExponent) cur_.fail("exponent overflow");
        }
        for (long k = 0; k < e; ++k) word.push_back(*slot);
    }

    Cursor& cur_;
    const Algebra& A_;
    Budget& budget_;
    CoeffParser coeff_;
};

} // namespace

FieldElement parse_coefficient(std::string_view text, const QMode& mode) {
    Cursor cur(text);
    CoeffParser p(cur, mode);
    FieldElement v = p.expression();
    if (!cur.eof()) cur.fail("unexpected trailing input");
    return v;
}

Element parse_polynomial(std::string_view text, const Algebra& A, Budget& budget) {
    Cursor cur(text);
    PolyParser p(cur, A, budget);
    return p.polynomial();
}

std::vector<Element> parse_ideal_file(std::istream& in, const Algebra& A, Budget& budget) {
    std::vector<Element> gens;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        if (blank) continue;
        gens.push_back(parse_polynomial(line, A, budget));
    }
    return gens;
}

namespace {

Algebra parse_algebra_term(Cursor& cur, const QMode& qmode) {
    cur.set_algebra_names(true);
    std::string name = cur.identifier();
    cur.set_algebra_names(false);
    if (name == "gr") {
        cur.expect('(', "'('");
        cur.set_algebra_names(true);
        std::string inner_name = cur.identifier();
        cur.set_algebra_names(false);
        long n = cur.integer();
        cur.expect(')', "')'");
        if (inner_name == "uq+") return associated_graded(build_uq_plus(static_cast<int>(n), qmode));
        if (inner_name == "uq-") return associated_graded(build_uq_minus(static_cast<int>(n), qmode));
        cur.fail("expected uq+ or uq- inside gr(...)");
    }
    if (name == "uq+" || name == "uq-") {
        long n = cur.integer();
        if (n < 1) cur.fail("N must be a positive integer");
        return name == "uq+" ? build_uq_plus(static_cast<int>(n), qmode)
                             : build_uq_minus(static_cast<int>(n), qmode);
    }
    cur.fail("unknown algebra specifier '" + name + "'");
}

} // namespace

std::vector<std::string> split_generator_list(std::string_view text) {
    // Commas inside [..] belong to generator names like x[1,3].
    std::vector<std::string> names;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            if (!current.empty()) names.push_back(current);
            current.clear();
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) current += c;
    }
    if (!current.empty()) names.push_back(current);
    if (names.empty()) throw BadArgument("empty generator list");
    return names;
}

Algebra parse_algebra_spec(std::string_view text, const QMode& qmode) {
    Cursor cur(text);
    Algebra a = parse_algebra_term(cur, qmode);
    if (cur.eof()) return a;
    // Tensor product: "<spec> (x) <spec>".
    cur.expect('(', "'(x)' or end of input");
    cur.expect('x', "'(x)'");
    cur.expect(')', "'(x)'");
    Algebra b = parse_algebra_term(cur, qmode);
    if (!cur.eof()) cur.fail("unexpected trailing input after tensor product");
    return tensor_product(a, b);
}

OrderingSpec parse_ordering_name(std::string_view text, const Algebra& A) {
    if (text == "paper") return OrderingSpec::paper();
    if (text == "lexword") return OrderingSpec::lexword();
    if (text == "graded") return OrderingSpec::graded_paper();
    if (text == "tensor") {
        if (A.ordering().kind() != OrderKind::Tensor)
            throw BadArgument("ordering 'tensor' is only valid for tensor-product algebras");
        return A.ordering();
    }
    constexpr std::string_view prefix = "elim:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::vector<bool> keep(A.ngens(), false);
        for (const std::string& name : split_generator_list(text.substr(prefix.size()))) {
            auto slot = A.find_generator(name);
            if (!slot) throw UnknownGenerator("unknown generator " + name + " in elim:<vars>");
            keep[*slot] = true;
        }
        return OrderingSpec::elimination(std::move(keep), A.ordering());
    }
    throw BadArgument("unknown ordering '" + std::string(text) +
                      "' (expected paper, lexword, graded, elim:<vars> or tensor)");
}

} // namespace spa
