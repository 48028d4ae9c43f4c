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

#ifndef QGWA_PARSER_HPP
#define QGWA_PARSER_HPP

#include <string_view>

#include "qgwa/endo.hpp"
#include "qgwa/gwa.hpp"
#include "qgwa/laurent.hpp"

namespace qgwa {

/*
 * Expressions over integer literals, q, z (the adjoined root of unity), h and,
 * inside algebra elements, x and y; with + - * / ^ and parentheses. Precedence:
 * ^ (right associative, signed integer exponents such as h^-1) binds tighter than
 * unary minus, which binds tighter than * and /, then + and -.
 *
 * Errors are SyntaxError (with the character position), UnknownSymbol, and
 * HInDenominator when a division or negative power would leave h in a denominator.
 */
LaurentPoly parse_laurent(std::string_view text, const Field& field);

/// An expression that must evaluate to a constant of K.
FieldElement parse_scalar(std::string_view text, const Field& field);

/// An element of A; products follow the order written, e.g. "y*h^-1*x".
GWAElement parse_element(std::string_view text, const Algebra& alg);

/// Generator images such as "h->1; x->0; y->0". Omitted generators map to themselves.
GeneralImages parse_images(std::string_view text, const Algebra& alg);

/// True if the identifier `symbol` occurs anywhere in the expression text.
bool mentions_symbol(std::string_view text, char symbol);

}  // namespace qgwa

#endif  // QGWA_PARSER_HPP
