/*
   Copyright 2026 the qwolst authors

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

#ifndef QWOLST_ERRORS_HPP
#define QWOLST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qwolst {

// Base for every library error. kind() is a stable short tag that report
// entries and the C API surface verbatim.
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

  private:
    std::string kind_;
};

#define QWOLST_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                          \
      public:                                                            \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}     \
    }

QWOLST_DEFINE_ERROR(ZeroDenominator);
QWOLST_DEFINE_ERROR(DivisionByZeroPoly);
QWOLST_DEFINE_ERROR(BothZero);
QWOLST_DEFINE_ERROR(BadModulus);
QWOLST_DEFINE_ERROR(ModulusMismatch);
QWOLST_DEFINE_ERROR(NotInvertible);
QWOLST_DEFINE_ERROR(ZeroElement);
QWOLST_DEFINE_ERROR(NotPrime);
QWOLST_DEFINE_ERROR(PrimeTooSmall);
QWOLST_DEFINE_ERROR(NotOdd);
QWOLST_DEFINE_ERROR(PoleAtSample);
QWOLST_DEFINE_ERROR(NotDeflatable);
QWOLST_DEFINE_ERROR(DomainZ);
QWOLST_DEFINE_ERROR(ConfigError);
QWOLST_DEFINE_ERROR(IoError);

#undef QWOLST_DEFINE_ERROR

}  // namespace qwolst

#endif
