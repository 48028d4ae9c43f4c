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

#ifndef QGWA_ERRORS_HPP
#define QGWA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qgwa {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Input could not be parsed. The CLI maps these to exit status 2.
class ParseError : public Error {
   public:
    using Error::Error;
};

/// A documented precondition was violated. The CLI maps these to exit status 3.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

#define QGWA_DEFINE_ERROR(Name, Base)  \
    class Name : public Base {         \
       public:                         \
        using Base::Base;              \
    };

QGWA_DEFINE_ERROR(DivisionByZero, PreconditionError)
QGWA_DEFINE_ERROR(ModulusMismatch, PreconditionError)
QGWA_DEFINE_ERROR(ZeroSubstitution, PreconditionError)
QGWA_DEFINE_ERROR(ZeroPolynomial, PreconditionError)
QGWA_DEFINE_ERROR(InvalidAlgebra, PreconditionError)
QGWA_DEFINE_ERROR(SpecMismatch, PreconditionError)
QGWA_DEFINE_ERROR(NotRootOfUnity, PreconditionError)
QGWA_DEFINE_ERROR(NotCommonRoot, PreconditionError)
QGWA_DEFINE_ERROR(RelationViolation, PreconditionError)
QGWA_DEFINE_ERROR(ZeroAlpha, PreconditionError)
QGWA_DEFINE_ERROR(NotAnEndomorphism, PreconditionError)
QGWA_DEFINE_ERROR(UnclassifiableImages, Error)

QGWA_DEFINE_ERROR(SyntaxError, ParseError)
QGWA_DEFINE_ERROR(HInDenominator, ParseError)
QGWA_DEFINE_ERROR(UnknownSymbol, ParseError)

#undef QGWA_DEFINE_ERROR

}  // namespace qgwa

#endif  // QGWA_ERRORS_HPP
