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

#include "spa/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace spa {

Monomial Monomial::generator(std::size_t nvars, std::size_t slot, unsigned power) {
    assert(slot < nvars);
    Monomial m(nvars);
    m.exp_[slot] = power;
    return m;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (unsigned e : exp_) d += e;
    return d;
}

bool Monomial::is_unit() const {
    return std::all_of(exp_.begin(), exp_.end(), [](unsigned e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    assert(nvars() == rhs.nvars());
    Monomial r(nvars());
    for (std::size_t s = 0; s < exp_.size(); ++s) r.exp_[s] = exp_[s] + rhs.exp_[s];
    return r;
}

bool Monomial::divides(const Monomial& rhs) const {
    assert(nvars() == rhs.nvars());
    for (std::size_t s = 0; s < exp_.size(); ++s)
        if (exp_[s] > rhs.exp_[s]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
    assert(rhs.divides(*this));
    Monomial r(nvars());
    for (std::size_t s = 0; s < exp_.size(); ++s) r.exp_[s] = exp_[s] - rhs.exp_[s];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r(a.nvars());
    for (std::size_t s = 0; s < a.exp_.size(); ++s) r.exp_[s] = std::max(a.exp_[s], b.exp_[s]);
    return r;
}

std::vector<std::size_t> Monomial::word() const {
    std::vector<std::size_t> w;
    w.reserve(degree());
    for (std::size_t s = 0; s < exp_.size(); ++s)
        for (unsigned k = 0; k < exp_[s]; ++k) w.push_back(s);
    return w;
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > 0) s.push_back(i);
    return s;
}

} // namespace spa
