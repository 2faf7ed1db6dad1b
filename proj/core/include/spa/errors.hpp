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

#ifndef SPA_ERRORS_HPP
#define SPA_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spa {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Inversion or division by the zero field element.
class DivisionByZero : public Error {
  public:
    DivisionByZero() : Error("division by zero") {}
};

/// Mixing coefficients with different q-modes (symbolic vs. specialized,
/// or two different specialized values).
class ModeMismatch : public Error {
  public:
    using Error::Error;
};

/// q specialized to 0, 1 or -1 (the excluded rational values of q^8 = 1).
class IllegalQ : public Error {
  public:
    using Error::Error;
};

/// Denominator vanishes at the requested specialization value.
class PoleAtQ : public Error {
  public:
    using Error::Error;
};

/// An operation that requires a nonzero element received zero.
class ZeroElement : public Error {
  public:
    ZeroElement() : Error("zero element") {}
};

/// Generator name or index not present in the algebra.
class UnknownGenerator : public Error {
  public:
    using Error::Error;
};

/// Malformed argument other than a parse error (bad N, unordered pair, ...).
class BadArgument : public Error {
  public:
    using Error::Error;
};

/// Syntax error with a 0-based input position.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// A reduction step failed to reproduce the expected leading monomial:
/// the active ordering is not compatible with the presentation's rewriting.
class OrderingIncompatible : public Error {
  public:
    using Error::Error;
};

/// Step budget exhausted. For a verified solvable presentation this signals
/// a genuinely large computation; for an unverified one, likely nontermination.
class NontermLimit : public Error {
  public:
    explicit NontermLimit(std::uint64_t steps)
        : Error("step budget exhausted after " + std::to_string(steps) + " steps"), steps_(steps) {}
    std::uint64_t steps() const { return steps_; }

  private:
    std::uint64_t steps_;
};

} // namespace spa

#endif // SPA_ERRORS_HPP
