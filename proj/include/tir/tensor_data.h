// Copyright 2026 The TIR Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TIR_TENSOR_DATA_H_
#define TIR_TENSOR_DATA_H_

#include <cstdint>
#include <cstring>
#include <iosfwd>
#include <string>
#include <vector>

#include "tir/types.h"

namespace tir {

// A concrete tensor: fully static type plus a row-major flat payload.
// Row-major ordering is normative system-wide.
struct TensorData {
  TensorType type;
  std::vector<uint8_t> bytes;

  TensorData() = default;
  explicit TensorData(TensorType t)
      : type(std::move(t)), bytes(static_cast<size_t>(type.byte_length()), 0) {}

  int64_t element_count() const { return type.element_count(); }

  float* f32() { return reinterpret_cast<float*>(bytes.data()); }
  const float* f32() const { return reinterpret_cast<const float*>(bytes.data()); }
  int32_t* i32() { return reinterpret_cast<int32_t*>(bytes.data()); }
  const int32_t* i32() const { return reinterpret_cast<const int32_t*>(bytes.data()); }
  int8_t* i8() { return reinterpret_cast<int8_t*>(bytes.data()); }
  const int8_t* i8() const { return reinterpret_cast<const int8_t*>(bytes.data()); }

  friend bool operator==(const TensorData& a, const TensorData& b) {
    return a.type == b.type && a.bytes == b.bytes;
  }
};

TensorData tensor_from_f32(std::vector<int64_t> dims, std::vector<float> values);
TensorData tensor_from_i32(std::vector<int64_t> dims, std::vector<int32_t> values);
TensorData tensor_from_i8(std::vector<int64_t> dims, std::vector<int8_t> values);

// Row-major strides for a static shape.
std::vector<int64_t> row_major_strides(const std::vector<int64_t>& dims);

// Tensor file format: header line `TNSR1 <dtype> <rank> <d0> ... <dn>\n`
// followed by the raw little-endian payload.
void write_tnsr(std::ostream& os, const TensorData& t);
TensorData read_tnsr(std::istream& is);
void write_tnsr_file(const std::string& path, const TensorData& t);
TensorData read_tnsr_file(const std::string& path);

}  // namespace tir

#endif  // TIR_TENSOR_DATA_H_
