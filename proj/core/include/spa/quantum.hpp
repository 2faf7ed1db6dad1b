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

#ifndef SPA_QUANTUM_HPP
#define SPA_QUANTUM_HPP

#include "spa/algebra.hpp"

namespace spa {

/// Class of an ordered index pair ((i,j),(m,n)) with (i,j) <_lex (m,n):
///   C1: i=m<j<n   C2: i<m<n<j   C3: i<m<j=n
///   C4: i<m<j<n   C5: i<j=m<n   C6: i<j<m<n
enum class PairClass { C1, C2, C3, C4, C5, C6 };

const char* to_string(PairClass c);

/// All (i,j) with 1 <= i < j <= N+1, sorted by <_lex. Size N(N+1)/2.
std::vector<GenLabel> build_lambda(int N);

/// Pre: p <_lex r; throws BadArgument otherwise.
PairClass classify_pair(const GenLabel& p, const GenLabel& r);

/// Rewriting rule for x_r x_p (p <_lex r) in U_q^+(A_N):
///   C1/C3: q^-2 swap, C2/C6: plain swap,
///   C4: swap - (q^2 - q^-2) x_in x_mj, C5: q^2 swap - q x_in.
CommutationRule jimbo_rule(int N, const GenLabel& p, const GenLabel& r, const QMode& qmode);

/// The (+)-part of the quantum group on generators x[i,j], paper ordering.
Algebra build_uq_plus(int N, const QMode& qmode);
/// The (-)-part on generators y[i,j]; same rule schema.
Algebra build_uq_minus(int N, const QMode& qmode);

/// K-algebra tensor product: disjoint generator blocks, cross pairs commute,
/// ordering compares the left block first. Generator names must not clash.
Algebra tensor_product(const Algebra& a, const Algebra& b);

/// Associated graded algebra of the degree filtration: every rule tail is
/// truncated to its degree-2 homogeneous part and the ordering becomes
/// GradedPaper. Idempotent.
Algebra associated_graded(const Algebra& a);

} // namespace spa

#endif // SPA_QUANTUM_HPP
