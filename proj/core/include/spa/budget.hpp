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

#ifndef SPA_BUDGET_HPP
#define SPA_BUDGET_HPP

#include <cstdint>

#include "spa/errors.hpp"

namespace spa {

/// Shared step counter threaded through every potentially long loop
/// (rewriting, reduction, completion). Exhaustion throws NontermLimit,
/// so no command can hang.
class Budget {
  public:
    static constexpr std::uint64_t kDefaultSteps = 10'000'000;

    explicit Budget(std::uint64_t limit = kDefaultSteps) : limit_(limit) {}

    void charge(std::uint64_t n = 1) {
        used_ += n;
        if (used_ > limit_) throw NontermLimit(used_);
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }
    std::uint64_t remaining() const { return used_ >= limit_ ? 0 : limit_ - used_; }

  private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

} // namespace spa

#endif // SPA_BUDGET_HPP
