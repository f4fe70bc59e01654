/*
 * Copyright 2026 The qforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qforge/error.hpp"

namespace qforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConflictingRegister: return "ConflictingRegister";
    case ErrorCode::ControlTargetsOverlap: return "ControlTargetsOverlap";
    case ErrorCode::DuplicateControlConflict: return "DuplicateControlConflict";
    case ErrorCode::BadLadderGeometry: return "BadLadderGeometry";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DuplicateOperand: return "DuplicateOperand";
    case ErrorCode::UnresolvableQubit: return "UnresolvableQubit";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownGate: return "UnknownGate";
    case ErrorCode::UndeclaredRegister: return "UndeclaredRegister";
    case ErrorCode::CompileError: return "CompileError";
    case ErrorCode::AncillaGrowthDisabled: return "AncillaGrowthDisabled";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::Truncated: return "Truncated";
    case ErrorCode::BadOpcode: return "BadOpcode";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NonIntegerToken: return "NonIntegerToken";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::TrailingTokens: return "TrailingTokens";
    case ErrorCode::BasisOutOfRange: return "BasisOutOfRange";
    case ErrorCode::UnloweredSwap: return "UnloweredSwap";
    case ErrorCode::NonLogicGate: return "NonLogicGate";
    case ErrorCode::InvalidSpecialization: return "InvalidSpecialization";
    case ErrorCode::UnsupportedForSemanticReduction: return "UnsupportedForSemanticReduction";
    case ErrorCode::EntangledSpecialization: return "EntangledSpecialization";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::SemanticCapExceeded: return "SemanticCapExceeded";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::SuiteFormat: return "SuiteFormat";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

SyntaxError::SyntaxError(ErrorCode code, std::size_t line, std::size_t column,
                         const std::string& message)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace qforge
