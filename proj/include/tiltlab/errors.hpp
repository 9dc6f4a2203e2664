/*
 *   Copyright 2026 The tiltlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TILTLAB_ERRORS_HPP
#define TILTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tiltlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TILTLAB_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

TILTLAB_DEFINE_ERROR(DimensionMismatch);
TILTLAB_DEFINE_ERROR(FieldMismatch);
TILTLAB_DEFINE_ERROR(InfiniteDimensional);
TILTLAB_DEFINE_ERROR(MalformedRelation);
TILTLAB_DEFINE_ERROR(NonCommutativeBase);
TILTLAB_DEFINE_ERROR(RelationViolated);
TILTLAB_DEFINE_ERROR(ShapeMismatch);
TILTLAB_DEFINE_ERROR(ZeroModule);
TILTLAB_DEFINE_ERROR(AlgebraMismatch);
TILTLAB_DEFINE_ERROR(DecompositionInconclusive);
TILTLAB_DEFINE_ERROR(NonSplitEndomorphismRing);
TILTLAB_DEFINE_ERROR(NotAMember);
TILTLAB_DEFINE_ERROR(NotExact);
TILTLAB_DEFINE_ERROR(BadSetup);
TILTLAB_DEFINE_ERROR(SyntaxError);
TILTLAB_DEFINE_ERROR(ValidationError);

#undef TILTLAB_DEFINE_ERROR

}  // namespace tiltlab

#endif  // TILTLAB_ERRORS_HPP
