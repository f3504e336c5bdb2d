// Copyright 2026 The TIR Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TIR_REFINTERP_H_
#define TIR_REFINTERP_H_

#include <vector>

#include "tir/ir.h"
#include "tir/tensor_data.h"

namespace tir {

// Reference interpreter over the frontend IR: naive nested loops in program
// order, reductions accumulating in ascending index order. Deliberately
// simple; every other executor must match it bit-for-bit. conv2d is
// evaluated directly, including non-1x1 forms.
//
// Inputs must match the `main` signature with every dimension resolved;
// ShapeMismatch is raised at bind time otherwise.
std::vector<TensorData> interpret(const ProgramModule& module,
                                  const std::vector<TensorData>& inputs);

}  // namespace tir

#endif  // TIR_REFINTERP_H_
