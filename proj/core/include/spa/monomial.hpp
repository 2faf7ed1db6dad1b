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

#ifndef SPA_MONOMIAL_HPP
#define SPA_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "spa/errors.hpp"

namespace spa {

/// Index label (i, j) of a quantum generator x_ij, 1 <= i < j <= N+1.
/// Generic (non-quantum) generators carry the null label (0, 0).
struct GenLabel {
    int i = 0;
    int j = 0;

    bool is_null() const { return i == 0 && j == 0; }
    bool operator==(const GenLabel&) const = default;
    /// Index-lexicographic order on the label pairs.
    std::strong_ordering operator<=>(const GenLabel& rhs) const {
        if (auto c = i <=> rhs.i; c != 0) return c;
        return j <=> rhs.j;
    }
};

/// PBW standard monomial as an exponent vector. Generator slots are fixed
/// by the owning algebra and sorted by <_lex on the labels, so the vector
/// is the unique standard representative x_{i_1 j_1} ... x_{i_k j_k}.
/// The all-zero vector is the monomial 1.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exponents) : exp_(std::move(exponents)) {}

    static Monomial unit(std::size_t nvars) { return Monomial(nvars); }
    static Monomial generator(std::size_t nvars, std::size_t slot, unsigned power = 1);

    std::size_t nvars() const { return exp_.size(); }
    unsigned operator[](std::size_t slot) const { return exp_[slot]; }
    const std::vector<unsigned>& exponents() const { return exp_; }

    unsigned degree() const;
    bool is_unit() const;

    /// Exponent-vector sum (the leading monomial of the actual product).
    Monomial operator*(const Monomial& rhs) const;
    /// Componentwise <=; the left cofactor of a reduction is rhs - *this.
    bool divides(const Monomial& rhs) const;
    /// Componentwise difference; pre: rhs.divides(*this).
    Monomial operator/(const Monomial& rhs) const;
    static Monomial lcm(const Monomial& a, const Monomial& b); // componentwise max

    bool operator==(const Monomial& rhs) const { return exp_ == rhs.exp_; }
    /// Structural (container) order, unrelated to any monomial ordering.
    std::strong_ordering operator<=>(const Monomial& rhs) const { return exp_ <=> rhs.exp_; }

    /// Letter sequence: slot indices with multiplicity, ascending. This is
    /// the word x_{i_1 j_1} ... x_{i_k j_k} of the PBW basis element.
    std::vector<std::size_t> word() const;
    std::vector<std::size_t> support() const;

  private:
    std::vector<unsigned> exp_;
};

} // namespace spa

#endif // SPA_MONOMIAL_HPP
