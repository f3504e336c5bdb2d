// Copyright 2026 The TIR Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TIR_VERIFY_H_
#define TIR_VERIFY_H_

#include <string>
#include <vector>

#include "tir/ir.h"

namespace tir {

struct Diagnostic {
  SourceLocation loc;
  std::string message;
};

// Structural verification: SSA dominance, dense value ids, type agreement
// per opcode signature, attribute well-formedness, generic-op rules, and a
// single entry function named `main`. Never throws; all problems are
// returned as diagnostics. A pure function of the module.
std::vector<Diagnostic> verify_module(const ProgramModule& module);

// Infers the result tensor type of a frontend op from its operand types and
// attributes. Result dims are static iff every dim they depend on is static.
// Throws IncompatibleShapes when static extents conflict and NotSupported
// for arities/attributes outside the opcode's contract.
TensorType shape_infer(Opcode op, const std::vector<TensorType>& operands,
                       const AttrMap& attrs,
                       const TensorType* declared_result = nullptr);

std::string format_diagnostics(const std::vector<Diagnostic>& diags);

}  // namespace tir

#endif  // TIR_VERIFY_H_
