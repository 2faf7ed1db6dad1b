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

#include "spa/ordering.hpp"

#include <cassert>

namespace spa {

OrderingSpec OrderingSpec::paper() { return OrderingSpec(OrderKind::Paper); }
OrderingSpec OrderingSpec::lexword() { return OrderingSpec(OrderKind::LexWord); }
OrderingSpec OrderingSpec::graded_paper() { return OrderingSpec(OrderKind::GradedPaper); }

OrderingSpec OrderingSpec::elimination(std::vector<bool> keep, OrderingSpec inner) {
    std::size_t kept = 0;
    for (bool b : keep)
        if (b) ++kept;
    if (kept == 0 || kept == keep.size())
        throw BadArgument("elimination subset must be a nonempty proper subset of the generators");
    OrderingSpec s(OrderKind::Elimination);
    s.keep_ = std::move(keep);
    s.inner_ = std::make_shared<OrderingSpec>(std::move(inner));
    return s;
}

OrderingSpec OrderingSpec::tensor(OrderingSpec left, OrderingSpec right, std::size_t split) {
    OrderingSpec s(OrderKind::Tensor);
    s.split_ = split;
    s.left_ = std::make_shared<OrderingSpec>(std::move(left));
    s.right_ = std::make_shared<OrderingSpec>(std::move(right));
    return s;
}

std::string OrderingSpec::name() const {
    switch (kind_) {
    case OrderKind::Paper: return "paper";
    case OrderKind::LexWord: return "lexword";
    case OrderKind::GradedPaper: return "graded";
    case OrderKind::Elimination: {
        std::string s = "elim:";
        bool first = true;
        for (std::size_t i = 0; i < keep_.size(); ++i) {
            if (!keep_[i]) continue;
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
        return s;
    }
    case OrderKind::Tensor: return "tensor";
    }
    return "?";
}

bool OrderingSpec::operator==(const OrderingSpec& rhs) const {
    if (kind_ != rhs.kind_) return false;
    switch (kind_) {
    case OrderKind::Elimination: return keep_ == rhs.keep_ && *inner_ == *rhs.inner_;
    case OrderKind::Tensor: return split_ == rhs.split_ && *left_ == *rhs.left_ && *right_ == *rhs.right_;
    default: return true;
    }
}

std::strong_ordering compare_generators(const GenLabel& a, const GenLabel& b) {
    // x_lk precedes x_ij iff l > i, or l = i and k > j: the reverse of <_lex.
    return (b <=> a);
}

namespace {

// Word extension of the generator ordering. With slots sorted by <_lex on
// the labels the generator ordering is the reverse of the slot order, and
// the word comparison collapses to exponent-vector lex: at the first slot
// where the exponents differ, the monomial with the larger exponent is the
// larger one (a proper prefix is smaller than any extension).
std::strong_ordering cmp_paper(const Monomial& u, const Monomial& v) {
    const auto& a = u.exponents();
    const auto& b = v.exponents();
    assert(a.size() == b.size());
    for (std::size_t s = 0; s < a.size(); ++s)
        if (a[s] != b[s]) return a[s] <=> b[s];
    return std::strong_ordering::equal;
}

std::strong_ordering cmp_graded(const Monomial& u, const Monomial& v) {
    if (auto c = u.degree() <=> v.degree(); c != 0) return c;
    return cmp_paper(u, v);
}

// Word comparison with letters ordered by <_lex (slot order). At the first
// difference the word whose next letter is the smaller slot is the smaller
// word; a word that runs out while matching is a proper prefix and smaller.
std::strong_ordering cmp_lexword(const Monomial& u, const Monomial& v) {
    const auto& a = u.exponents();
    const auto& b = v.exponents();
    assert(a.size() == b.size());
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (a[s] == b[s]) continue;
        // Words agree up to v_s (resp. u_s) copies of letter s. The word
        // holding more copies of s continues with s; the other continues
        // with its next populated slot t > s, or ends.
        bool u_more = a[s] > b[s];
        const auto& shorter = u_more ? b : a;
        for (std::size_t t = s + 1; t < a.size(); ++t)
            if (shorter[t] > 0) {
                // Letter s vs letter t, s < t: slot order makes s smaller.
                return u_more ? std::strong_ordering::less : std::strong_ordering::greater;
            }
        // The other word is a proper prefix.
        return u_more ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

Monomial project(const Monomial& m, const std::vector<bool>& mask, bool inside) {
    std::vector<unsigned> e(m.nvars(), 0);
    for (std::size_t s = 0; s < m.nvars(); ++s)
        if (mask[s] == inside) e[s] = m[s];
    return Monomial(std::move(e));
}

Monomial slice(const Monomial& m, std::size_t from, std::size_t to) {
    std::vector<unsigned> e;
    e.reserve(to - from);
    for (std::size_t s = from; s < to; ++s) e.push_back(m[s]);
    return Monomial(std::move(e));
}

} // namespace

std::strong_ordering compare_monomials(const OrderingSpec& spec, const Monomial& u, const Monomial& v) {
    switch (spec.kind()) {
    case OrderKind::Paper: return cmp_paper(u, v);
    case OrderKind::GradedPaper: return cmp_graded(u, v);
    case OrderKind::LexWord: return cmp_lexword(u, v);
    case OrderKind::Elimination: {
        // Monomials touching the eliminated block dominate everything
        // supported in the kept block; ties on the eliminated part are
        // broken inside the kept part.
        Monomial uo = project(u, spec.keep(), false);
        Monomial vo = project(v, spec.keep(), false);
        if (auto c = compare_monomials(spec.inner(), uo, vo); c != 0) return c;
        return compare_monomials(spec.inner(), project(u, spec.keep(), true),
                                 project(v, spec.keep(), true));
    }
    case OrderKind::Tensor: {
        std::size_t n = u.nvars();
        assert(v.nvars() == n && spec.split() <= n);
        Monomial ul = slice(u, 0, spec.split());
        Monomial vl = slice(v, 0, spec.split());
        if (auto c = compare_monomials(spec.left(), ul, vl); c != 0) return c;
        return compare_monomials(spec.right(), slice(u, spec.split(), n), slice(v, spec.split(), n));
    }
    }
    throw BadArgument("unknown ordering kind");
}

} // namespace spa
