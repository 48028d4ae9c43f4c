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

#ifndef QGWA_RATIONAL_HPP
#define QGWA_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qgwa {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool coeff_is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

/// Exact g-th root of c in Q, if one exists. For even g the nonnegative root is returned.
std::optional<Rational> rational_root(const Rational& c, unsigned g);

std::string to_string(const Rational& r);

}  // namespace qgwa

#endif  // QGWA_RATIONAL_HPP
