// Copyright 2026 The TIR Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
// SSA program representation shared by the frontend (fe.*) and mid-level
// generic (lg.*) dialect levels. Operations are a uniform container:
// opcode + operands + results + attributes + nested regions.

#ifndef TIR_IR_H_
#define TIR_IR_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tir/types.h"

namespace tir {

// Values are dense per-function ids. Function arguments come first.
using ValueId = uint32_t;
constexpr ValueId kInvalidValue = 0xffffffffu;

// Loop dependence class of one iteration dim of a generic op.
enum class IteratorKind : uint8_t {
  kParallel = 0,
  kReduction = 1,
};

const char* iterator_kind_name(IteratorKind k);

// A projected permutation: every result is a single domain dim index.
// Maps may drop dims (broadcast) or permute them; no affine arithmetic.
struct AffineMap {
  uint32_t num_dims = 0;
  std::vector<uint32_t> results;

  AffineMap() = default;
  AffineMap(uint32_t dims, std::vector<uint32_t> res)
      : num_dims(dims), results(std::move(res)) {}

  static AffineMap identity(uint32_t dims) {
    std::vector<uint32_t> r(dims);
    for (uint32_t i = 0; i < dims; ++i) r[i] = i;
    return AffineMap(dims, std::move(r));
  }

  size_t num_results() const { return results.size(); }

  bool well_formed() const {
    for (uint32_t r : results)
      if (r >= num_dims) return false;
    return true;
  }

  // True when the map is a permutation of its domain (every dim appears
  // exactly once in the results).
  bool is_permutation() const;

  // Inverse of a permutation map.
  AffineMap inverse() const;

  // this ∘ inner: (this ∘ inner)(x) = this(inner(x)). `inner` supplies the
  // domain; each result of `this` selects one result of `inner`.
  AffineMap compose(const AffineMap& inner) const;

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.num_dims == b.num_dims && a.results == b.results;
  }
};

// Attribute storage: a small closed set of kinds.
struct AttrValue {
  enum class Kind : uint8_t {
    kInt,
    kIntList,
    kAffineMapList,
    kIteratorKindList,
    kBlob,  // raw element bytes of a constant tensor
  };

  Kind kind = Kind::kInt;
  int64_t i = 0;
  std::vector<int64_t> int_list;
  std::vector<AffineMap> maps;
  std::vector<IteratorKind> iterators;
  std::vector<uint8_t> blob;

  static AttrValue make_int(int64_t v);
  static AttrValue make_int_list(std::vector<int64_t> v);
  static AttrValue make_maps(std::vector<AffineMap> v);
  static AttrValue make_iterators(std::vector<IteratorKind> v);
  static AttrValue make_blob(std::vector<uint8_t> v);

  friend bool operator==(const AttrValue& a, const AttrValue& b);
};

// Keyed attribute map with unique keys; ordered for deterministic printing.
using AttrMap = std::map<std::string, AttrValue>;

// Opcodes across all dialect levels handled by this IR.
enum class Opcode : uint8_t {
  // Frontend tensor ops.
  kFeAdd,
  kFeSub,
  kFeMul,
  kFeMax,
  kFeBroadcast,
  kFeMatmul,
  kFeConv2d,
  kFeConstant,
  kFeReduceSum,
  // Mid-level ops.
  kLgGeneric,
  kLgZero,
  // Scalar body ops.
  kScAddf,
  kScSubf,
  kScMulf,
  kScMaxf,
  kScAddi,
  kScSubi,
  kScMuli,
  kScMaxi,
  kScConst,
  kScYield,
  // Function terminator.
  kReturn,
};

struct OpcodeInfo {
  const char* name;        // dialect-qualified, e.g. "fe.add"
  int num_operands;        // -1 = variadic
  int num_results;         // -1 = variadic
  bool has_region;
  bool is_pure;            // eligible for CSE/DCE
};

const OpcodeInfo& opcode_info(Opcode op);
bool opcode_from_name(const std::string& name, Opcode* out);

bool is_frontend_tensor_op(Opcode op);
bool is_elementwise_binary(Opcode op);
bool is_scalar_op(Opcode op);

struct SourceLocation {
  uint32_t line = 0;  // 1-based; 0 = unknown
  uint32_t column = 0;

  friend bool operator==(const SourceLocation& a, const SourceLocation& b) {
    return a.line == b.line && a.column == b.column;
  }
};

struct Region;

struct Operation {
  Opcode opcode = Opcode::kReturn;
  std::vector<ValueId> operands;
  std::vector<ValueId> results;
  AttrMap attributes;
  std::vector<Region> regions;
  SourceLocation loc;

  const AttrValue* attr(const std::string& key) const;
  int64_t int_attr(const std::string& key, int64_t fallback = 0) const;
};

// Single-block region; block arguments carry their own value ids.
struct Block {
  std::vector<ValueId> args;
  std::vector<Operation> ops;
};

struct Region {
  Block block;
};

// A function: single body block ending in a terminator. Value types are
// stored densely, indexed by ValueId; argument values come first.
struct FuncOp {
  std::string name;
  std::vector<Type> arg_types;
  std::vector<Type> result_types;
  Block body;
  std::vector<Type> value_types;

  size_t num_args() const { return arg_types.size(); }
  const Type& type_of(ValueId v) const { return value_types[v]; }
};

struct ProgramModule {
  std::vector<FuncOp> funcs;

  FuncOp* main();
  const FuncOp* main() const;
};

// Builder that keeps value ids dense and types recorded.
class FuncBuilder {
 public:
  FuncBuilder(std::string name, std::vector<Type> arg_types,
              std::vector<Type> result_types);

  ValueId arg(size_t i) const { return static_cast<ValueId>(i); }

  // Appends an op with `num_results` fresh result values of the given types.
  // Returns the first result id (kInvalidValue when no results).
  ValueId add_op(Opcode op, std::vector<ValueId> operands,
                 std::vector<Type> result_types, AttrMap attrs = {},
                 std::vector<Region> regions = {});

  void add_return(std::vector<ValueId> operands);

  // Fresh value for a nested block argument.
  ValueId add_block_arg(Block* block, Type type);

  // Fresh result value for an op being built inside a nested block.
  ValueId add_nested_op(Block* block, Opcode op, std::vector<ValueId> operands,
                        std::vector<Type> result_types, AttrMap attrs = {});

  FuncOp take();
  FuncOp& func() { return func_; }

 private:
  FuncOp func_;
  ValueId next_ = 0;
};

// Renumbers all values of a function densely in definition order
// (args, then op results / block args in pre-order). Keeps types in sync.
void renumber_func(FuncOp* func);

// Structural equality modulo value numbering: same op order, opcodes,
// attributes, types, and operand wiring.
bool structurally_equal(const FuncOp& a, const FuncOp& b);
bool structurally_equal(const ProgramModule& a, const ProgramModule& b);

// Structural equality of two ops within one function (same value ids).
bool same_op_shape(const Operation& a, const Operation& b);

}  // namespace tir

#endif  // TIR_IR_H_
