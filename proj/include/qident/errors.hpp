// Copyright 2026 The qident Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qident {

// Root of every error thrown by the library. The CLI maps all of these to
// exit code 1 (computational failure).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QIDENT_DEFINE_ERROR(Name)   \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  };

QIDENT_DEFINE_ERROR(DimensionError)
QIDENT_DEFINE_ERROR(EmptyInputError)
QIDENT_DEFINE_ERROR(InvalidInputError)
QIDENT_DEFINE_ERROR(InvalidParameterError)
QIDENT_DEFINE_ERROR(UnambiguousImpossibleError)
QIDENT_DEFINE_ERROR(InvalidEnsembleError)
QIDENT_DEFINE_ERROR(InvalidGameError)
QIDENT_DEFINE_ERROR(StrategyError)
QIDENT_DEFINE_ERROR(UnsupportedError)
QIDENT_DEFINE_ERROR(TooLargeError)
QIDENT_DEFINE_ERROR(InfeasibleError)

#undef QIDENT_DEFINE_ERROR

}  // namespace qident
