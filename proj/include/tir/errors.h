// Copyright 2026 The TIR Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TIR_ERRORS_H_
#define TIR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tir {

// Base class for every error raised by the compiler and the runtime.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define TIR_DEFINE_ERROR(NAME)                                \
  class NAME : public Error {                                 \
   public:                                                    \
    explicit NAME(const std::string& what) : Error(what) {}   \
  }

// Compiler-side errors.
TIR_DEFINE_ERROR(IncompatibleShapes);
TIR_DEFINE_ERROR(NotSupported);
TIR_DEFINE_ERROR(InconsistentShapes);
TIR_DEFINE_ERROR(InvalidTileSpec);
TIR_DEFINE_ERROR(CompileError);

// Module container errors. Each reader failure mode is distinct.
TIR_DEFINE_ERROR(BadMagic);
TIR_DEFINE_ERROR(UnsupportedVersion);
TIR_DEFINE_ERROR(CorruptSectionTable);
TIR_DEFINE_ERROR(TruncatedPayload);
TIR_DEFINE_ERROR(MalformedBytecode);

// Runtime errors.
TIR_DEFINE_ERROR(SignatureMismatch);
TIR_DEFINE_ERROR(PermissionDenied);
TIR_DEFINE_ERROR(OutOfMemory);
TIR_DEFINE_ERROR(KernelTrap);
TIR_DEFINE_ERROR(MissingKernel);
TIR_DEFINE_ERROR(DoubleRelease);
TIR_DEFINE_ERROR(CycleDetected);
TIR_DEFINE_ERROR(ShapeMismatch);

#undef TIR_DEFINE_ERROR

}  // namespace tir

#endif  // TIR_ERRORS_H_
