/*
   Copyright 2026 The qgwa Authors

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

#include "qgwa/rational.hpp"

namespace qgwa {

namespace {

std::optional<Integer> integer_root(const Integer& n, unsigned g) {
    Integer r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), g) == 0) return std::nullopt;
    return r;
}

}  // namespace

std::optional<Rational> rational_root(const Rational& c, unsigned g) {
    if (g == 0) return std::nullopt;
    if (sgn(c) == 0) return Rational(0);
    if (sgn(c) < 0 && g % 2 == 0) return std::nullopt;

    Integer num = abs(c.get_num());
    auto rn = integer_root(num, g);
    if (!rn) return std::nullopt;
    auto rd = integer_root(c.get_den(), g);
    if (!rd) return std::nullopt;

    Rational r(*rn, *rd);
    r.canonicalize();
    if (sgn(c) < 0) r = -r;
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qgwa
