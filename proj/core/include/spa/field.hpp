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

#ifndef SPA_FIELD_HPP
#define SPA_FIELD_HPP

#include <optional>
#include <string>

#include "spa/laurent.hpp"

namespace spa {

/// Either the formal parameter q (Symbolic) or a rational specialization.
/// A specialized value must avoid 0 and the rational roots of q^8 = 1,
/// i.e. value not in {0, 1, -1}.
class QMode {
  public:
    static QMode symbolic() { return QMode(); }
    static QMode specialized(const Rational& value);

    bool is_symbolic() const { return !value_.has_value(); }
    const Rational& value() const; // pre: specialized

    bool operator==(const QMode& rhs) const { return value_ == rhs.value_; }
    bool operator!=(const QMode& rhs) const { return !(*this == rhs); }

    std::string to_string() const; // "symbolic" or the rational value

  private:
    QMode() = default;
    std::optional<Rational> value_;
};

/// An element of the coefficient field K: a rational function in q over Q
/// in symbolic mode, or a plain rational in specialized mode.
///
/// Canonical form (symbolic): den is a monic polynomial with nonzero
/// constant term (lowest q-exponent 0), num is a Laurent polynomial whose
/// polynomial part is coprime to den; zero is 0/1. Equality is structural.
/// Specialized mode stores the value as a constant num with den = 1.
class FieldElement {
  public:
    static FieldElement zero(const QMode& mode);
    static FieldElement one(const QMode& mode);
    static FieldElement from_rational(const QMode& mode, const Rational& value);
    /// The element q itself (its value in specialized mode).
    static FieldElement q(const QMode& mode);
    static FieldElement q_power(const QMode& mode, long k);
    /// num as a coefficient; evaluated in specialized mode.
    static FieldElement from_laurent(const QMode& mode, const LaurentPoly& num);
    /// num/den; throws DivisionByZero if den = 0, PoleAtQ if den vanishes
    /// at a specialized value.
    static FieldElement fraction(const QMode& mode, const LaurentPoly& num, const LaurentPoly& den);

    const QMode& mode() const { return mode_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    /// Pre: specialized mode.
    Rational rational_value() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const; // DivisionByZero
    FieldElement operator-() const;
    FieldElement inverse() const; // DivisionByZero

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    /// Evaluate a symbolic element at q = value. Throws IllegalQ for
    /// value in {0, 1, -1}, PoleAtQ if the denominator vanishes,
    /// ModeMismatch if already specialized.
    FieldElement specialize(const Rational& value) const;

  private:
    FieldElement(QMode mode, LaurentPoly num, LaurentPoly den)
        : mode_(std::move(mode)), num_(std::move(num)), den_(std::move(den)) {}
    static FieldElement make_canonical(const QMode& mode, LaurentPoly num, LaurentPoly den);
    void require_same_mode(const FieldElement& rhs) const;

    QMode mode_;
    LaurentPoly num_;
    LaurentPoly den_; // 1 in specialized mode
};

} // namespace spa

#endif // SPA_FIELD_HPP
