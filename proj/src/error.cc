// src/error.cc

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

#include "sdst/error.h"

namespace sdst {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kStructureError: return "StructureError";
    case ErrorCode::kDanglingReference: return "DanglingReference";
    case ErrorCode::kUnserializableValue: return "UnserializableValue";
    case ErrorCode::kMalformedSegment: return "MalformedSegment";
    case ErrorCode::kUnknownSlot: return "UnknownSlot";
    case ErrorCode::kMissingVariant: return "MissingVariant";
    case ErrorCode::kEmptyReference: return "EmptyReference";
    case ErrorCode::kEmptyValue: return "EmptyValue";
    case ErrorCode::kStaleSpan: return "StaleSpan";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kSpanOverlap: return "SpanOverlap";
    case ErrorCode::kWrongSlotKind: return "WrongSlotKind";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

static std::string Compose(ErrorCode code, const std::string &subject,
                           const std::string &message) {
  std::string out(ErrorCodeName(code));
  if (!subject.empty()) out += "(" + subject + ")";
  if (!message.empty()) out += ": " + message;
  return out;
}

Error::Error(ErrorCode code, std::string subject, const std::string &message)
    : std::runtime_error(Compose(code, subject, message)),
      code_(code),
      subject_(std::move(subject)) {}

Error::Error(ErrorCode code, std::string subject, std::string full, bool)
    : std::runtime_error(full), code_(code), subject_(std::move(subject)) {}

Error Error::WithLocation(const std::string &where) const {
  return Error(code_, subject_, where + ": " + what(), true);
}

}  // namespace sdst
