// Copyright 2026 The TIR Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tir/ir.h"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "tir/errors.h"

namespace tir {

const char* element_type_name(ElementType t) {
  switch (t) {
    case ElementType::kF32:
      return "f32";
    case ElementType::kI32:
      return "i32";
    case ElementType::kI8:
      return "i8";
  }
  return "?";
}

bool element_type_from_name(const std::string& name, ElementType* out) {
  if (name == "f32") *out = ElementType::kF32;
  else if (name == "i32") *out = ElementType::kI32;
  else if (name == "i8") *out = ElementType::kI8;
  else return false;
  return true;
}

TensorType make_tensor(std::vector<int64_t> dims, ElementType elem) {
  std::vector<Dim> shape;
  shape.reserve(dims.size());
  for (int64_t d : dims) shape.emplace_back(d);
  return TensorType(std::move(shape), elem);
}

ScalarKind scalar_kind_of(ElementType t) {
  switch (t) {
    case ElementType::kF32:
      return ScalarKind::kF32;
    case ElementType::kI32:
      return ScalarKind::kI32;
    case ElementType::kI8:
      return ScalarKind::kI8;
  }
  return ScalarKind::kF32;
}

const char* scalar_kind_name(ScalarKind k) {
  switch (k) {
    case ScalarKind::kF32:
      return "f32";
    case ScalarKind::kI32:
      return "i32";
    case ScalarKind::kI8:
      return "i8";
    case ScalarKind::kIndex:
      return "index";
  }
  return "?";
}

const char* iterator_kind_name(IteratorKind k) {
  return k == IteratorKind::kParallel ? "parallel" : "reduction";
}

bool AffineMap::is_permutation() const {
  if (results.size() != num_dims) return false;
  std::vector<bool> seen(num_dims, false);
  for (uint32_t r : results) {
    if (r >= num_dims || seen[r]) return false;
    seen[r] = true;
  }
  return true;
}

AffineMap AffineMap::inverse() const {
  assert(is_permutation());
  std::vector<uint32_t> inv(num_dims, 0);
  for (uint32_t i = 0; i < results.size(); ++i) inv[results[i]] = i;
  return AffineMap(num_dims, std::move(inv));
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  assert(num_dims == inner.num_results());
  std::vector<uint32_t> res;
  res.reserve(results.size());
  for (uint32_t r : results) res.push_back(inner.results[r]);
  return AffineMap(inner.num_dims, std::move(res));
}

AttrValue AttrValue::make_int(int64_t v) {
  AttrValue a;
  a.kind = Kind::kInt;
  a.i = v;
  return a;
}

AttrValue AttrValue::make_int_list(std::vector<int64_t> v) {
  AttrValue a;
  a.kind = Kind::kIntList;
  a.int_list = std::move(v);
  return a;
}

AttrValue AttrValue::make_maps(std::vector<AffineMap> v) {
  AttrValue a;
  a.kind = Kind::kAffineMapList;
  a.maps = std::move(v);
  return a;
}

AttrValue AttrValue::make_iterators(std::vector<IteratorKind> v) {
  AttrValue a;
  a.kind = Kind::kIteratorKindList;
  a.iterators = std::move(v);
  return a;
}

AttrValue AttrValue::make_blob(std::vector<uint8_t> v) {
  AttrValue a;
  a.kind = Kind::kBlob;
  a.blob = std::move(v);
  return a;
}

bool operator==(const AttrValue& a, const AttrValue& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case AttrValue::Kind::kInt:
      return a.i == b.i;
    case AttrValue::Kind::kIntList:
      return a.int_list == b.int_list;
    case AttrValue::Kind::kAffineMapList:
      return a.maps == b.maps;
    case AttrValue::Kind::kIteratorKindList:
      return a.iterators == b.iterators;
    case AttrValue::Kind::kBlob:
      return a.blob == b.blob;
  }
  return false;
}

namespace {

struct OpcodeTableEntry {
  Opcode op;
  OpcodeInfo info;
};

const OpcodeTableEntry kOpcodeTable[] = {
    {Opcode::kFeAdd, {"fe.add", 2, 1, false, true}},
    {Opcode::kFeSub, {"fe.sub", 2, 1, false, true}},
    {Opcode::kFeMul, {"fe.mul", 2, 1, false, true}},
    {Opcode::kFeMax, {"fe.max", 2, 1, false, true}},
    {Opcode::kFeBroadcast, {"fe.broadcast", 1, 1, false, true}},
    {Opcode::kFeMatmul, {"fe.matmul", 2, 1, false, true}},
    {Opcode::kFeConv2d, {"fe.conv2d", 2, 1, false, true}},
    {Opcode::kFeConstant, {"fe.constant", 0, 1, false, true}},
    {Opcode::kFeReduceSum, {"fe.reduce_sum", 1, 1, false, true}},
    {Opcode::kLgGeneric, {"lg.generic", -1, -1, true, true}},
    {Opcode::kLgZero, {"lg.zero", 0, 1, false, true}},
    {Opcode::kScAddf, {"addf", 2, 1, false, true}},
    {Opcode::kScSubf, {"subf", 2, 1, false, true}},
    {Opcode::kScMulf, {"mulf", 2, 1, false, true}},
    {Opcode::kScMaxf, {"maxf", 2, 1, false, true}},
    {Opcode::kScAddi, {"addi", 2, 1, false, true}},
    {Opcode::kScSubi, {"subi", 2, 1, false, true}},
    {Opcode::kScMuli, {"muli", 2, 1, false, true}},
    {Opcode::kScMaxi, {"maxi", 2, 1, false, true}},
    {Opcode::kScConst, {"const", 0, 1, false, true}},
    {Opcode::kScYield, {"yield", -1, 0, false, false}},
    {Opcode::kReturn, {"return", -1, 0, false, false}},
};

}  // namespace

const OpcodeInfo& opcode_info(Opcode op) {
  for (const auto& e : kOpcodeTable)
    if (e.op == op) return e.info;
  assert(false && "unknown opcode");
  return kOpcodeTable[0].info;
}

bool opcode_from_name(const std::string& name, Opcode* out) {
  for (const auto& e : kOpcodeTable) {
    if (name == e.info.name) {
      *out = e.op;
      return true;
    }
  }
  return false;
}

bool is_frontend_tensor_op(Opcode op) {
  switch (op) {
    case Opcode::kFeAdd:
    case Opcode::kFeSub:
    case Opcode::kFeMul:
    case Opcode::kFeMax:
    case Opcode::kFeBroadcast:
    case Opcode::kFeMatmul:
    case Opcode::kFeConv2d:
    case Opcode::kFeConstant:
    case Opcode::kFeReduceSum:
      return true;
    default:
      return false;
  }
}

bool is_elementwise_binary(Opcode op) {
  return op == Opcode::kFeAdd || op == Opcode::kFeSub ||
         op == Opcode::kFeMul || op == Opcode::kFeMax;
}

bool is_scalar_op(Opcode op) {
  switch (op) {
    case Opcode::kScAddf:
    case Opcode::kScSubf:
    case Opcode::kScMulf:
    case Opcode::kScMaxf:
    case Opcode::kScAddi:
    case Opcode::kScSubi:
    case Opcode::kScMuli:
    case Opcode::kScMaxi:
    case Opcode::kScConst:
    case Opcode::kScYield:
      return true;
    default:
      return false;
  }
}

const AttrValue* Operation::attr(const std::string& key) const {
  auto it = attributes.find(key);
  return it == attributes.end() ? nullptr : &it->second;
}

int64_t Operation::int_attr(const std::string& key, int64_t fallback) const {
  const AttrValue* a = attr(key);
  return (a && a->kind == AttrValue::Kind::kInt) ? a->i : fallback;
}

FuncOp* ProgramModule::main() {
  for (FuncOp& f : funcs)
    if (f.name == "main") return &f;
  return nullptr;
}

const FuncOp* ProgramModule::main() const {
  for (const FuncOp& f : funcs)
    if (f.name == "main") return &f;
  return nullptr;
}

FuncBuilder::FuncBuilder(std::string name, std::vector<Type> arg_types,
                         std::vector<Type> result_types) {
  func_.name = std::move(name);
  func_.arg_types = arg_types;
  func_.result_types = std::move(result_types);
  for (const Type& t : arg_types) {
    func_.body.args.push_back(next_);
    func_.value_types.push_back(t);
    ++next_;
  }
}

ValueId FuncBuilder::add_op(Opcode op, std::vector<ValueId> operands,
                            std::vector<Type> result_types, AttrMap attrs,
                            std::vector<Region> regions) {
  Operation o;
  o.opcode = op;
  o.operands = std::move(operands);
  o.attributes = std::move(attrs);
  o.regions = std::move(regions);
  ValueId first = kInvalidValue;
  for (Type& t : result_types) {
    if (first == kInvalidValue) first = next_;
    o.results.push_back(next_);
    func_.value_types.push_back(std::move(t));
    ++next_;
  }
  func_.body.ops.push_back(std::move(o));
  return first;
}

void FuncBuilder::add_return(std::vector<ValueId> operands) {
  Operation o;
  o.opcode = Opcode::kReturn;
  o.operands = std::move(operands);
  func_.body.ops.push_back(std::move(o));
}

ValueId FuncBuilder::add_block_arg(Block* block, Type type) {
  block->args.push_back(next_);
  func_.value_types.push_back(std::move(type));
  return next_++;
}

ValueId FuncBuilder::add_nested_op(Block* block, Opcode op,
                                   std::vector<ValueId> operands,
                                   std::vector<Type> result_types,
                                   AttrMap attrs) {
  Operation o;
  o.opcode = op;
  o.operands = std::move(operands);
  o.attributes = std::move(attrs);
  ValueId first = kInvalidValue;
  for (Type& t : result_types) {
    if (first == kInvalidValue) first = next_;
    o.results.push_back(next_);
    func_.value_types.push_back(std::move(t));
    ++next_;
  }
  block->ops.push_back(std::move(o));
  return first;
}

FuncOp FuncBuilder::take() { return std::move(func_); }

namespace {

void renumber_block(Block* block, std::vector<ValueId>* remap,
                    const std::vector<Type>& old_types,
                    std::vector<Type>* new_types, ValueId* next) {
  auto assign = [&](ValueId old) {
    if ((*remap)[old] == kInvalidValue) {
      (*remap)[old] = *next;
      new_types->push_back(old_types[old]);
      ++(*next);
    }
  };
  for (ValueId& a : block->args) assign(a);
  for (Operation& op : block->ops) {
    for (ValueId& r : op.results) assign(r);
    for (Region& region : op.regions)
      renumber_block(&region.block, remap, old_types, new_types, next);
  }
}

void apply_remap(Block* block, const std::vector<ValueId>& remap) {
  for (ValueId& a : block->args) a = remap[a];
  for (Operation& op : block->ops) {
    for (ValueId& o : op.operands) o = remap[o];
    for (ValueId& r : op.results) r = remap[r];
    for (Region& region : op.regions) apply_remap(&region.block, remap);
  }
}

}  // namespace

void renumber_func(FuncOp* func) {
  std::vector<ValueId> remap(func->value_types.size(), kInvalidValue);
  std::vector<Type> new_types;
  new_types.reserve(func->value_types.size());
  ValueId next = 0;
  for (ValueId a : func->body.args) {
    remap[a] = next++;
    new_types.push_back(func->value_types[a]);
  }
  // Visit op results and nested block args in pre-order. Operand-only
  // references to undefined values are left to the verifier; they map to
  // fresh trailing ids so renumbering never crashes on invalid programs.
  for (Operation& op : func->body.ops) {
    for (ValueId r : op.results) {
      if (remap[r] == kInvalidValue) {
        remap[r] = next++;
        new_types.push_back(func->value_types[r]);
      }
    }
    for (Region& region : op.regions)
      renumber_block(&region.block, &remap, func->value_types, &new_types,
                     &next);
  }
  for (ValueId v = 0; v < remap.size(); ++v) {
    if (remap[v] == kInvalidValue) {
      remap[v] = next++;
      new_types.push_back(func->value_types[v]);
    }
  }
  for (ValueId& a : func->body.args) a = remap[a];
  apply_remap(&func->body, remap);
  func->value_types = std::move(new_types);
}

namespace {

// Structural comparison with a value correspondence built on the fly.
struct Matcher {
  std::unordered_map<ValueId, ValueId> a_to_b;

  bool match_value(ValueId a, ValueId b) {
    auto it = a_to_b.find(a);
    if (it != a_to_b.end()) return it->second == b;
    a_to_b.emplace(a, b);
    return true;
  }

  bool match_block(const Block& a, const Block& b) {
    if (a.args.size() != b.args.size() || a.ops.size() != b.ops.size())
      return false;
    for (size_t i = 0; i < a.args.size(); ++i)
      if (!match_value(a.args[i], b.args[i])) return false;
    for (size_t i = 0; i < a.ops.size(); ++i)
      if (!match_op(a.ops[i], b.ops[i])) return false;
    return true;
  }

  bool match_op(const Operation& a, const Operation& b) {
    if (a.opcode != b.opcode) return false;
    if (a.operands.size() != b.operands.size()) return false;
    if (a.results.size() != b.results.size()) return false;
    if (!(a.attributes == b.attributes)) return false;
    if (a.regions.size() != b.regions.size()) return false;
    for (size_t i = 0; i < a.operands.size(); ++i)
      if (!match_value(a.operands[i], b.operands[i])) return false;
    for (size_t i = 0; i < a.results.size(); ++i)
      if (!match_value(a.results[i], b.results[i])) return false;
    for (size_t i = 0; i < a.regions.size(); ++i)
      if (!match_block(a.regions[i].block, b.regions[i].block)) return false;
    return true;
  }
};

bool types_match(const FuncOp& a, const FuncOp& b,
                 const std::unordered_map<ValueId, ValueId>& map) {
  for (const auto& [va, vb] : map) {
    if (va >= a.value_types.size() || vb >= b.value_types.size()) return false;
    if (!(a.value_types[va] == b.value_types[vb])) return false;
  }
  return true;
}

}  // namespace

bool structurally_equal(const FuncOp& a, const FuncOp& b) {
  if (a.name != b.name) return false;
  if (!(a.arg_types == b.arg_types)) return false;
  if (!(a.result_types == b.result_types)) return false;
  Matcher m;
  if (!m.match_block(a.body, b.body)) return false;
  return types_match(a, b, m.a_to_b);
}

bool structurally_equal(const ProgramModule& a, const ProgramModule& b) {
  if (a.funcs.size() != b.funcs.size()) return false;
  for (size_t i = 0; i < a.funcs.size(); ++i)
    if (!structurally_equal(a.funcs[i], b.funcs[i])) return false;
  return true;
}

bool same_op_shape(const Operation& a, const Operation& b) {
  if (a.opcode != b.opcode || a.operands != b.operands) return false;
  if (a.results.size() != b.results.size()) return false;
  if (!(a.attributes == b.attributes)) return false;
  if (a.regions.size() != b.regions.size()) return false;
  // Regions are compared structurally with independent numbering.
  Matcher m;
  for (size_t i = 0; i < a.regions.size(); ++i)
    if (!m.match_block(a.regions[i].block, b.regions[i].block)) return false;
  return true;
}

}  // namespace tir
