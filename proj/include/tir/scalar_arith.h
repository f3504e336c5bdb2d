// Copyright 2026 The TIR Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
// Normative scalar semantics. Every executor (reference interpreter,
// generic-op evaluator, kernel interpreter) uses exactly these definitions
// so results agree bit-for-bit: f32 is round-to-nearest-even with no FMA
// contraction, integers wrap (two's complement).

#ifndef TIR_SCALAR_ARITH_H_
#define TIR_SCALAR_ARITH_H_

#include <cstdint>

namespace tir {

inline float addf32(float a, float b) { return a + b; }
inline float subf32(float a, float b) { return a - b; }
inline float mulf32(float a, float b) { return a * b; }
inline float maxf32(float a, float b) { return a > b ? a : b; }

inline int32_t addi32(int32_t a, int32_t b) {
  return static_cast<int32_t>(static_cast<uint32_t>(a) + static_cast<uint32_t>(b));
}
inline int32_t subi32(int32_t a, int32_t b) {
  return static_cast<int32_t>(static_cast<uint32_t>(a) - static_cast<uint32_t>(b));
}
inline int32_t muli32(int32_t a, int32_t b) {
  return static_cast<int32_t>(static_cast<uint32_t>(a) * static_cast<uint32_t>(b));
}
inline int32_t maxi32(int32_t a, int32_t b) { return a > b ? a : b; }

inline int8_t addi8(int8_t a, int8_t b) {
  return static_cast<int8_t>(static_cast<uint8_t>(a) + static_cast<uint8_t>(b));
}
inline int8_t subi8(int8_t a, int8_t b) {
  return static_cast<int8_t>(static_cast<uint8_t>(a) - static_cast<uint8_t>(b));
}
inline int8_t muli8(int8_t a, int8_t b) {
  return static_cast<int8_t>(static_cast<uint8_t>(a) * static_cast<uint8_t>(b));
}
inline int8_t maxi8(int8_t a, int8_t b) { return a > b ? a : b; }

}  // namespace tir

#endif  // TIR_SCALAR_ARITH_H_
