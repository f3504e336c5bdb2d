// Copyright 2026 The TIR Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tir/tensor_data.h"

#include <fstream>
#include <sstream>

#include "tir/errors.h"

namespace tir {

namespace {

template <typename T>
TensorData tensor_from(std::vector<int64_t> dims, const std::vector<T>& values,
                       ElementType elem) {
  TensorData t(make_tensor(std::move(dims), elem));
  if (static_cast<int64_t>(values.size()) != t.element_count())
    throw ShapeMismatch("tensor literal element count does not match shape");
  std::memcpy(t.bytes.data(), values.data(), values.size() * sizeof(T));
  return t;
}

}  // namespace

TensorData tensor_from_f32(std::vector<int64_t> dims, std::vector<float> values) {
  return tensor_from(std::move(dims), values, ElementType::kF32);
}

TensorData tensor_from_i32(std::vector<int64_t> dims, std::vector<int32_t> values) {
  return tensor_from(std::move(dims), values, ElementType::kI32);
}

TensorData tensor_from_i8(std::vector<int64_t> dims, std::vector<int8_t> values) {
  return tensor_from(std::move(dims), values, ElementType::kI8);
}

std::vector<int64_t> row_major_strides(const std::vector<int64_t>& dims) {
  std::vector<int64_t> strides(dims.size(), 1);
  for (size_t i = dims.size(); i-- > 1;)
    strides[i - 1] = strides[i] * dims[i];
  return strides;
}

void write_tnsr(std::ostream& os, const TensorData& t) {
  os << "TNSR1 " << element_type_name(t.type.element) << " " << t.type.rank();
  for (const Dim& d : t.type.shape) os << " " << d.extent;
  os << "\n";
  os.write(reinterpret_cast<const char*>(t.bytes.data()),
           static_cast<std::streamsize>(t.bytes.size()));
}

TensorData read_tnsr(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ShapeMismatch("empty tensor file");
  std::istringstream hs(line);
  std::string magic, dtype;
  int64_t rank = -1;
  hs >> magic >> dtype >> rank;
  ElementType elem;
  if (magic != "TNSR1" || !element_type_from_name(dtype, &elem) || rank < 0 ||
      rank > static_cast<int64_t>(TensorType::kMaxRank))
    throw ShapeMismatch("malformed tensor header: " + line);
  std::vector<int64_t> dims(static_cast<size_t>(rank));
  for (int64_t& d : dims) {
    hs >> d;
    if (!hs || d < 0) throw ShapeMismatch("malformed tensor dims: " + line);
  }
  TensorData t(make_tensor(dims, elem));
  is.read(reinterpret_cast<char*>(t.bytes.data()),
          static_cast<std::streamsize>(t.bytes.size()));
  if (is.gcount() != static_cast<std::streamsize>(t.bytes.size()))
    throw ShapeMismatch("tensor payload shorter than header promises");
  return t;
}

void write_tnsr_file(const std::string& path, const TensorData& t) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open for writing: " + path);
  write_tnsr(os, t);
}

TensorData read_tnsr_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open for reading: " + path);
  return read_tnsr(is);
}

}  // namespace tir
