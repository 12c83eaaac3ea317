// include/sdst/error.h

// Copyright 2026 The sdst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SDST_ERROR_H_
#define SDST_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdst {

// Every failure raised by the library carries one of these codes. The CLI
// maps them all to exit status 1.
enum class ErrorCode {
  kIo,
  kParse,
  kDuplicateId,
  kSchemaViolation,
  kStructureError,
  kDanglingReference,
  kUnserializableValue,
  kMalformedSegment,
  kUnknownSlot,
  kMissingVariant,
  kEmptyReference,
  kEmptyValue,
  kStaleSpan,
  kEmptyCorpus,
  kSpanOverlap,
  kWrongSlotKind,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  // `subject` is the offending item (slot name, turn index, path ...) and
  // may be empty.
  Error(ErrorCode code, std::string subject, const std::string &message);

  ErrorCode code() const { return code_; }
  const std::string &subject() const { return subject_; }

  // Returns a copy whose message is prefixed with "<where>: ".
  Error WithLocation(const std::string &where) const;

 private:
  Error(ErrorCode code, std::string subject, std::string full, bool);

  ErrorCode code_;
  std::string subject_;
};

}  // namespace sdst

#endif  // SDST_ERROR_H_
