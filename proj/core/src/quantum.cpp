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

#include "spa/quantum.hpp"

#include <cassert>
#include <map>

namespace spa {

const char* to_string(PairClass c) {
    switch (c) {
    case PairClass::C1: return "C1";
    case PairClass::C2: return "C2";
    case PairClass::C3: return "C3";
    case PairClass::C4: return "C4";
    case PairClass::C5: return "C5";
    case PairClass::C6: return "C6";
    }
    return "?";
}

std::vector<GenLabel> build_lambda(int N) {
    if (N < 1) throw BadArgument("N must be a positive integer");
    std::vector<GenLabel> lambda;
    lambda.reserve(static_cast<std::size_t>(N) * (N + 1) / 2);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N + 1; ++j) lambda.push_back({i, j});
    return lambda;
}

PairClass classify_pair(const GenLabel& p, const GenLabel& r) {
    if (!((p <=> r) == std::strong_ordering::less))
        throw BadArgument("classify_pair requires (i,j) <_lex (m,n)");
    const int i = p.i, j = p.j, m = r.i, n = r.j;
    if (i == m) return PairClass::C1; // i=m<j<n
    // i < m from here on
    if (m < j) {
        if (n < j) return PairClass::C2;  // i<m<n<j
        if (n == j) return PairClass::C3; // i<m<j=n
        return PairClass::C4;             // i<m<j<n
    }
    if (m == j) return PairClass::C5; // i<j=m<n
    return PairClass::C6;             // i<j<m<n
}

namespace {

std::size_t slot_of(const std::vector<GenLabel>& lambda, const GenLabel& g) {
    for (std::size_t s = 0; s < lambda.size(); ++s)
        if (lambda[s] == g) return s;
    throw BadArgument("label outside Lambda_N");
}

} // namespace

CommutationRule jimbo_rule(int N, const GenLabel& p, const GenLabel& r, const QMode& qmode) {
    const std::vector<GenLabel> lambda = build_lambda(N);
    const std::size_t n = lambda.size();
    const PairClass cls = classify_pair(p, r);

    CommutationRule rule{FieldElement::one(qmode), Element::zero()};
    switch (cls) {
    case PairClass::C1:
    case PairClass::C3:
        rule.lambda = FieldElement::q_power(qmode, -2);
        break;
    case PairClass::C2:
    case PairClass::C6:
        break;
    case PairClass::C4: {
        // x_mn x_ij = x_ij x_mn - (q^2 - q^-2) x_in x_mj, i<m<j<n
        Monomial t = Monomial::generator(n, slot_of(lambda, {p.i, r.j})) *
                     Monomial::generator(n, slot_of(lambda, {r.i, p.j}));
        FieldElement c = -(FieldElement::q_power(qmode, 2) - FieldElement::q_power(qmode, -2));
        rule.tail = Element::from_term(std::move(t), std::move(c));
        break;
    }
    case PairClass::C5: {
        // x_mn x_ij = q^2 x_ij x_mn - q x_in, i<j=m<n
        rule.lambda = FieldElement::q_power(qmode, 2);
        Monomial t = Monomial::generator(n, slot_of(lambda, {p.i, r.j}));
        rule.tail = Element::from_term(std::move(t), -FieldElement::q(qmode));
        break;
    }
    }
    return rule;
}

namespace {

Algebra build_uq(int N, const QMode& qmode, const std::string& gen_prefix,
                 std::vector<std::string> notes) {
    const std::vector<GenLabel> lambda = build_lambda(N);
    std::vector<Generator> gens;
    gens.reserve(lambda.size());
    for (const GenLabel& g : lambda)
        gens.push_back({gen_prefix + "[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]", g});

    std::vector<CommutationRule> rules;
    rules.reserve(lambda.size() * (lambda.size() - 1) / 2);
    for (std::size_t hi = 1; hi < lambda.size(); ++hi)
        for (std::size_t lo = 0; lo < hi; ++lo)
            rules.push_back(jimbo_rule(N, lambda[lo], lambda[hi], qmode));

    return Algebra(std::move(gens), std::move(rules), OrderingSpec::paper(), qmode, std::move(notes));
}

} // namespace

Algebra build_uq_plus(int N, const QMode& qmode) {
    return build_uq(N, qmode, "x", {});
}

Algebra build_uq_minus(int N, const QMode& qmode) {
    return build_uq(N, qmode, "y",
                    {"U_q^-(A_N) built with the Jimbo rule schema mirrored onto y-generators"});
}

Algebra tensor_product(const Algebra& a, const Algebra& b) {
    if (a.qmode() != b.qmode()) throw ModeMismatch("tensor factors have different q-modes");
    const std::size_t na = a.ngens(), nb = b.ngens(), n = na + nb;

    std::vector<Generator> gens;
    gens.reserve(n);
    for (const auto& g : a.generators()) gens.push_back(g);
    for (const auto& g : b.generators()) {
        if (a.find_generator(g.name))
            throw BadArgument("tensor factors share the generator name " + g.name);
        gens.push_back(g);
    }

    auto widen = [&](const Element& tail, std::size_t offset) {
        std::vector<Term> terms;
        for (const auto& t : tail.terms()) {
            std::vector<unsigned> e(n, 0);
            for (std::size_t s = 0; s < t.mono.nvars(); ++s) e[s + offset] = t.mono[s];
            terms.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Element::from_terms(OrderingSpec::paper(), std::move(terms));
    };

    std::vector<CommutationRule> rules;
    rules.reserve(n * (n - 1) / 2);
    for (std::size_t hi = 1; hi < n; ++hi) {
        for (std::size_t lo = 0; lo < hi; ++lo) {
            if (hi < na) {
                const auto& r = a.rule(lo, hi);
                rules.push_back({r.lambda, widen(r.tail, 0)});
            } else if (lo >= na) {
                const auto& r = b.rule(lo - na, hi - na);
                rules.push_back({r.lambda, widen(r.tail, na)});
            } else {
                // Cross-block pairs commute: the K-algebra tensor product.
                rules.push_back({FieldElement::one(a.qmode()), Element::zero()});
            }
        }
    }

    std::vector<std::string> notes = a.notes();
    notes.insert(notes.end(), b.notes().begin(), b.notes().end());
    return Algebra(std::move(gens), std::move(rules),
                   OrderingSpec::tensor(a.ordering(), b.ordering(), na), a.qmode(), std::move(notes));
}

Algebra associated_graded(const Algebra& a) {
    const std::size_t n = a.ngens();
    std::vector<CommutationRule> rules;
    rules.reserve(n * (n - 1) / 2);
    for (std::size_t hi = 1; hi < n; ++hi) {
        for (std::size_t lo = 0; lo < hi; ++lo) {
            const auto& r = a.rule(lo, hi);
            std::vector<Term> kept;
            for (const auto& t : r.tail.terms())
                if (t.mono.degree() == 2) kept.push_back(t);
            rules.push_back({r.lambda, Element::from_terms(OrderingSpec::graded_paper(), std::move(kept))});
        }
    }
    return Algebra(a.generators(), std::move(rules), OrderingSpec::graded_paper(), a.qmode(), a.notes());
}

} // namespace spa
