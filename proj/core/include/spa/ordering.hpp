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

#ifndef SPA_ORDERING_HPP
#define SPA_ORDERING_HPP

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "spa/monomial.hpp"

namespace spa {

enum class OrderKind {
    Paper,       // generator order of the U_q construction, word-extended;
                 // equals lexicographic comparison of exponent vectors
                 // (earlier slot more significant, larger exponent larger)
    LexWord,     // word comparison with letters in index-lex order; the
                 // designated counterexample ordering (not solvable on C5)
    GradedPaper, // total degree first, ties by Paper
    Elimination, // block ordering exposing the ideal's part inside a kept subset
    Tensor       // left factor first, then right factor
};

/// Value-semantic description of a monomial ordering on a fixed slot set.
class OrderingSpec {
  public:
    static OrderingSpec paper();
    static OrderingSpec lexword();
    static OrderingSpec graded_paper();
    /// keep[slot] = true marks the small block (the probed subalgebra);
    /// monomials touching the complement dominate all kept monomials.
    static OrderingSpec elimination(std::vector<bool> keep, OrderingSpec inner);
    static OrderingSpec tensor(OrderingSpec left, OrderingSpec right, std::size_t split);

    OrderKind kind() const { return kind_; }
    const std::vector<bool>& keep() const { return keep_; }
    const OrderingSpec& inner() const { return *inner_; }
    std::size_t split() const { return split_; }
    const OrderingSpec& left() const { return *left_; }
    const OrderingSpec& right() const { return *right_; }

    /// CLI name: paper | lexword | graded | elim:<k0,k1,...> | tensor.
    std::string name() const;

    bool operator==(const OrderingSpec& rhs) const;

  private:
    explicit OrderingSpec(OrderKind k) : kind_(k) {}

    OrderKind kind_;
    std::vector<bool> keep_;                      // Elimination
    std::shared_ptr<const OrderingSpec> inner_;   // Elimination
    std::size_t split_ = 0;                       // Tensor
    std::shared_ptr<const OrderingSpec> left_, right_;
};

/// The generator ordering of the quantum construction on labels:
/// x_lk precedes x_ij iff l > i, or l = i and k > j. This is the reverse
/// of <_lex on the label pairs, making slot 0 the largest generator.
std::strong_ordering compare_generators(const GenLabel& a, const GenLabel& b);

/// Total comparison of standard monomials over the same slot set.
std::strong_ordering compare_monomials(const OrderingSpec& spec, const Monomial& u, const Monomial& v);

} // namespace spa

#endif // SPA_ORDERING_HPP
