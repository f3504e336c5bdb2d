// Copyright 2026 The TIR Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TIR_TYPES_H_
#define TIR_TYPES_H_

#include <cstdint>
#include <string>
#include <vector>

namespace tir {

// Element types supported by the whole stack. Storage widths are fixed;
// i8 is storage-only arithmetic (wrapping), no quantization semantics.
enum class ElementType : uint8_t {
  kF32 = 0,
  kI32 = 1,
  kI8 = 2,
};

inline size_t byte_width(ElementType t) {
  switch (t) {
    case ElementType::kF32:
    case ElementType::kI32:
      return 4;
    case ElementType::kI8:
      return 1;
  }
  return 0;
}

const char* element_type_name(ElementType t);
bool element_type_from_name(const std::string& name, ElementType* out);

// One tensor dimension: a non-negative extent or the dynamic marker,
// printed as `?`.
struct Dim {
  static constexpr int64_t kDynamic = -1;

  int64_t extent = kDynamic;

  Dim() = default;
  explicit Dim(int64_t e) : extent(e) {}
  static Dim dynamic() { return Dim(kDynamic); }
  bool is_dynamic() const { return extent == kDynamic; }
  bool is_static() const { return extent >= 0; }

  friend bool operator==(const Dim& a, const Dim& b) {
    return a.extent == b.extent;
  }
};

// Shaped tensor type. Rank is capped at 4 to keep the kernel interpreter
// and the serialized formats small.
struct TensorType {
  static constexpr size_t kMaxRank = 4;

  std::vector<Dim> shape;
  ElementType element = ElementType::kF32;

  TensorType() = default;
  TensorType(std::vector<Dim> s, ElementType e)
      : shape(std::move(s)), element(e) {}

  size_t rank() const { return shape.size(); }

  bool fully_static() const {
    for (const Dim& d : shape)
      if (d.is_dynamic()) return false;
    return true;
  }

  // Element count of a fully static type; -1 when any dim is dynamic.
  int64_t element_count() const {
    int64_t n = 1;
    for (const Dim& d : shape) {
      if (d.is_dynamic()) return -1;
      n *= d.extent;
    }
    return n;
  }

  int64_t byte_length() const {
    int64_t n = element_count();
    return n < 0 ? -1 : n * static_cast<int64_t>(byte_width(element));
  }

  friend bool operator==(const TensorType& a, const TensorType& b) {
    return a.shape == b.shape && a.element == b.element;
  }
};

// Convenience constructor: static_tensor({2, 3}, kF32). Use Dim::kDynamic
// entries for dynamic dims.
TensorType make_tensor(std::vector<int64_t> dims, ElementType elem);

// Scalar SSA types: tensor element scalars inside generic-op bodies plus
// the i64 index scalars used by host-level code.
enum class ScalarKind : uint8_t {
  kF32 = 0,
  kI32 = 1,
  kI8 = 2,
  kIndex = 3,  // i64
};

ScalarKind scalar_kind_of(ElementType t);
const char* scalar_kind_name(ScalarKind k);

struct ScalarType {
  ScalarKind kind = ScalarKind::kF32;

  ScalarType() = default;
  explicit ScalarType(ScalarKind k) : kind(k) {}

  friend bool operator==(const ScalarType& a, const ScalarType& b) {
    return a.kind == b.kind;
  }
};

// A value type is either a tensor or a scalar.
struct Type {
  enum class Tag : uint8_t { kTensor, kScalar } tag = Tag::kTensor;
  TensorType tensor;
  ScalarType scalar;

  Type() = default;
  Type(TensorType t) : tag(Tag::kTensor), tensor(std::move(t)) {}
  Type(ScalarType s) : tag(Tag::kScalar), scalar(s) {}

  bool is_tensor() const { return tag == Tag::kTensor; }
  bool is_scalar() const { return tag == Tag::kScalar; }

  friend bool operator==(const Type& a, const Type& b) {
    if (a.tag != b.tag) return false;
    return a.is_tensor() ? a.tensor == b.tensor : a.scalar == b.scalar;
  }
};

}  // namespace tir

#endif  // TIR_TYPES_H_
