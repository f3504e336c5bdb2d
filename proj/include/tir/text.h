// Copyright 2026 The TIR Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
// Human-readable IR: `.tir` files, UTF-8, LF line endings, one op per line.

#ifndef TIR_TEXT_H_
#define TIR_TEXT_H_

#include <string>
#include <vector>

#include "tir/errors.h"
#include "tir/ir.h"
#include "tir/verify.h"

namespace tir {

class SyntaxError : public Error {
 public:
  SyntaxError(SourceLocation loc, const std::string& message)
      : Error(std::to_string(loc.line) + ":" + std::to_string(loc.column) +
              ": " + message),
        loc_(loc) {}
  SourceLocation loc() const { return loc_; }

 private:
  SourceLocation loc_;
};

class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(std::vector<Diagnostic> diags)
      : Error("verification failed:\n" + format_diagnostics(diags)),
        diags_(std::move(diags)) {}
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

// Parses a module and verifies it. Unknown opcodes are syntax errors.
// Throws SyntaxError with the offending location, or VerificationFailed
// wrapping the verifier diagnostics.
ProgramModule parse_module(const std::string& text);

// Deterministic printing; parse_module(print_module(m)) is structurally
// identical to m (value names are renumbered densely).
std::string print_module(const ProgramModule& module);

// Shared formatting helpers (used by the printer and reports).
std::string format_type(const Type& t);
std::string format_tensor_type(const TensorType& t);
std::string format_affine_map(const AffineMap& m);
std::string format_f32(float value);

}  // namespace tir

#endif  // TIR_TEXT_H_
