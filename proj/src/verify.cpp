// Copyright 2026 The TIR Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tir/verify.h"

#include <cassert>
#include <set>
#include <sstream>
#include <unordered_set>

#include "tir/errors.h"

namespace tir {

namespace {

bool dim_compat(Dim a, Dim b) {
  if (a.is_dynamic() || b.is_dynamic()) return true;
  return a.extent == b.extent;
}

Dim dim_join(Dim a, Dim b) { return a.is_static() ? a : b; }

bool tensor_compat(const TensorType& a, const TensorType& b) {
  if (a.element != b.element || a.rank() != b.rank()) return false;
  for (size_t i = 0; i < a.rank(); ++i)
    if (!dim_compat(a.shape[i], b.shape[i])) return false;
  return true;
}

TensorType tensor_join(const TensorType& a, const TensorType& b) {
  TensorType r = a;
  for (size_t i = 0; i < a.rank(); ++i) r.shape[i] = dim_join(a.shape[i], b.shape[i]);
  return r;
}

std::string shape_str(const TensorType& t) {
  std::ostringstream os;
  os << "tensor<";
  for (size_t i = 0; i < t.rank(); ++i) {
    if (t.shape[i].is_dynamic()) os << "?";
    else os << t.shape[i].extent;
    os << "x";
  }
  os << element_type_name(t.element) << ">";
  return os.str();
}

const std::vector<int64_t>* int_list_attr(const AttrMap& attrs,
                                          const char* key) {
  auto it = attrs.find(key);
  if (it == attrs.end() || it->second.kind != AttrValue::Kind::kIntList)
    return nullptr;
  return &it->second.int_list;
}

}  // namespace

TensorType shape_infer(Opcode op, const std::vector<TensorType>& operands,
                       const AttrMap& attrs,
                       const TensorType* declared_result) {
  switch (op) {
    case Opcode::kFeAdd:
    case Opcode::kFeSub:
    case Opcode::kFeMul:
    case Opcode::kFeMax: {
      if (operands.size() != 2) throw NotSupported("elementwise op needs 2 operands");
      const TensorType& a = operands[0];
      const TensorType& b = operands[1];
      if (!tensor_compat(a, b))
        throw IncompatibleShapes("elementwise operand types differ: " +
                                 shape_str(a) + " vs " + shape_str(b));
      return tensor_join(a, b);
    }
    case Opcode::kFeMatmul: {
      if (operands.size() != 2) throw NotSupported("matmul needs 2 operands");
      const TensorType& a = operands[0];
      const TensorType& b = operands[1];
      if (a.rank() != 2 || b.rank() != 2)
        throw NotSupported("matmul operands must be 2-D");
      if (a.element != b.element)
        throw IncompatibleShapes("matmul element types differ");
      if (!dim_compat(a.shape[1], b.shape[0]))
        throw IncompatibleShapes("matmul inner dims differ: " + shape_str(a) +
                                 " vs " + shape_str(b));
      return TensorType({a.shape[0], b.shape[1]}, a.element);
    }
    case Opcode::kFeBroadcast: {
      if (operands.size() != 1) throw NotSupported("broadcast needs 1 operand");
      if (!declared_result)
        throw NotSupported("broadcast requires a declared result type");
      const TensorType& in = operands[0];
      const TensorType& out = *declared_result;
      const std::vector<int64_t>* dims = int_list_attr(attrs, "dims");
      if (!dims || dims->size() != in.rank())
        throw NotSupported("broadcast dims attribute must map every input dim");
      if (in.element != out.element)
        throw IncompatibleShapes("broadcast element type mismatch");
      std::set<int64_t> seen;
      TensorType result = out;
      for (size_t p = 0; p < dims->size(); ++p) {
        int64_t d = (*dims)[p];
        if (d < 0 || d >= static_cast<int64_t>(out.rank()) || !seen.insert(d).second)
          throw NotSupported("broadcast dims must be distinct result dims");
        if (!dim_compat(in.shape[p], out.shape[d]))
          throw IncompatibleShapes("broadcast mapped extent mismatch");
        result.shape[d] = dim_join(in.shape[p], out.shape[d]);
      }
      return result;
    }
    case Opcode::kFeConv2d: {
      if (operands.size() != 2) throw NotSupported("conv2d needs 2 operands");
      const TensorType& in = operands[0];   // NHWC
      const TensorType& filt = operands[1]; // HWCF
      if (in.rank() != 4 || filt.rank() != 4)
        throw NotSupported("conv2d operands must be 4-D (NHWC, HWCF)");
      if (in.element != filt.element)
        throw IncompatibleShapes("conv2d element types differ");
      const std::vector<int64_t>* strides = int_list_attr(attrs, "strides");
      const std::vector<int64_t>* pads = int_list_attr(attrs, "pads");
      if (!strides || strides->size() != 2 || (*strides)[0] < 1 || (*strides)[1] < 1)
        throw NotSupported("conv2d strides attribute must be two positive ints");
      if (!pads || pads->size() != 2 || (*pads)[0] < 0 || (*pads)[1] < 0)
        throw NotSupported("conv2d pads attribute must be two non-negative ints");
      if (!dim_compat(in.shape[3], filt.shape[2]))
        throw IncompatibleShapes("conv2d channel dims differ");
      auto out_spatial = [](Dim in_d, Dim k_d, int64_t pad, int64_t stride) {
        if (in_d.is_dynamic() || k_d.is_dynamic()) return Dim::dynamic();
        int64_t span = in_d.extent + 2 * pad - k_d.extent;
        if (span < 0) throw IncompatibleShapes("conv2d kernel larger than padded input");
        return Dim(span / stride + 1);
      };
      Dim oh = out_spatial(in.shape[1], filt.shape[0], (*pads)[0], (*strides)[0]);
      Dim ow = out_spatial(in.shape[2], filt.shape[1], (*pads)[1], (*strides)[1]);
      return TensorType({in.shape[0], oh, ow, filt.shape[3]}, in.element);
    }
    case Opcode::kFeReduceSum: {
      if (operands.size() != 1) throw NotSupported("reduce_sum needs 1 operand");
      const TensorType& in = operands[0];
      auto it = attrs.find("axis");
      if (it == attrs.end() || it->second.kind != AttrValue::Kind::kInt)
        throw NotSupported("reduce_sum requires an integer axis attribute");
      int64_t axis = it->second.i;
      if (axis < 0 || axis >= static_cast<int64_t>(in.rank()))
        throw NotSupported("reduce_sum axis out of range");
      TensorType result(std::vector<Dim>{}, in.element);
      for (size_t i = 0; i < in.rank(); ++i)
        if (static_cast<int64_t>(i) != axis) result.shape.push_back(in.shape[i]);
      return result;
    }
    case Opcode::kFeConstant:
    case Opcode::kLgZero: {
      if (!declared_result)
        throw NotSupported("constant-like op requires a declared result type");
      return *declared_result;
    }
    default:
      throw NotSupported(std::string("shape_infer: unsupported opcode ") +
                         opcode_info(op).name);
  }
}

namespace {

class Verifier {
 public:
  explicit Verifier(const ProgramModule& module) : module_(module) {}

  std::vector<Diagnostic> run() {
    size_t mains = 0;
    for (const FuncOp& f : module_.funcs)
      if (f.name == "main") ++mains;
    if (mains != 1)
      error({}, "module must contain exactly one function named 'main'");
    for (const FuncOp& f : module_.funcs) verify_func(f);
    return std::move(diags_);
  }

 private:
  void error(SourceLocation loc, const std::string& msg) {
    diags_.push_back({loc, msg});
  }

  bool check_value(const FuncOp& f, const Operation& op, ValueId v,
                   const std::unordered_set<ValueId>& defined) {
    if (v >= f.value_types.size()) {
      error(op.loc, "operand references unknown value id");
      return false;
    }
    if (!defined.count(v)) {
      error(op.loc, "use of value before its definition");
      return false;
    }
    return true;
  }

  const TensorType* tensor_type(const FuncOp& f, ValueId v) {
    if (v >= f.value_types.size()) return nullptr;
    const Type& t = f.value_types[v];
    return t.is_tensor() ? &t.tensor : nullptr;
  }

  void check_tensor_rank(SourceLocation loc, const TensorType& t) {
    if (t.rank() > TensorType::kMaxRank)
      error(loc, "tensor rank exceeds the supported maximum of 4");
    for (const Dim& d : t.shape)
      if (d.is_static() && d.extent < 0)
        error(loc, "negative static extent");
  }

  void verify_func(const FuncOp& f) {
    // Dense ids: every value defined exactly once.
    std::vector<int> def_count(f.value_types.size(), 0);
    auto count_defs = [&](const Block& b, auto&& self) -> void {
      for (ValueId a : b.args)
        if (a < def_count.size()) ++def_count[a];
      for (const Operation& op : b.ops) {
        for (ValueId r : op.results)
          if (r < def_count.size()) ++def_count[r];
        for (const Region& region : op.regions) self(region.block, self);
      }
    };
    count_defs(f.body, count_defs);
    for (size_t v = 0; v < def_count.size(); ++v)
      if (def_count[v] != 1) {
        error({}, "value ids must be dense and defined exactly once");
        break;
      }

    for (const Type& t : f.arg_types)
      if (t.is_tensor()) check_tensor_rank({}, t.tensor);

    if (f.body.args.size() != f.arg_types.size()) {
      error({}, "function block argument count does not match signature");
      return;
    }

    if (f.body.ops.empty() || f.body.ops.back().opcode != Opcode::kReturn) {
      error({}, "function body must end in a return terminator");
      return;
    }

    std::unordered_set<ValueId> defined(f.body.args.begin(), f.body.args.end());
    for (size_t i = 0; i < f.body.ops.size(); ++i) {
      const Operation& op = f.body.ops[i];
      if (op.opcode == Opcode::kReturn && i + 1 != f.body.ops.size()) {
        error(op.loc, "return must be the last operation in the body");
        continue;
      }
      verify_op(f, op, defined);
      for (ValueId r : op.results) defined.insert(r);
    }
  }

  void verify_op(const FuncOp& f, const Operation& op,
                 const std::unordered_set<ValueId>& defined) {
    const OpcodeInfo& info = opcode_info(op.opcode);
    if (is_scalar_op(op.opcode)) {
      error(op.loc, "scalar op outside a generic body");
      return;
    }
    if (info.num_operands >= 0 &&
        op.operands.size() != static_cast<size_t>(info.num_operands)) {
      error(op.loc, std::string(info.name) + ": wrong operand count");
      return;
    }
    if (info.num_results >= 0 &&
        op.results.size() != static_cast<size_t>(info.num_results)) {
      error(op.loc, std::string(info.name) + ": wrong result count");
      return;
    }
    bool operands_ok = true;
    for (ValueId v : op.operands)
      operands_ok &= check_value(f, op, v, defined);
    if (!operands_ok) return;

    if (op.opcode == Opcode::kReturn) {
      if (op.operands.size() != f.result_types.size()) {
        error(op.loc, "return operand count does not match function results");
        return;
      }
      for (size_t i = 0; i < op.operands.size(); ++i) {
        if (!(f.value_types[op.operands[i]] == f.result_types[i]))
          error(op.loc, "return operand type does not match function result");
      }
      return;
    }

    if (op.opcode == Opcode::kLgGeneric) {
      verify_generic(f, op);
      return;
    }

    // Frontend ops and lg.zero: tensor operands/results, inferred shapes.
    std::vector<TensorType> operand_types;
    for (ValueId v : op.operands) {
      const TensorType* t = tensor_type(f, v);
      if (!t) {
        error(op.loc, std::string(info.name) + ": operand must be a tensor");
        return;
      }
      operand_types.push_back(*t);
    }
    if (op.results.size() != 1) {
      error(op.loc, std::string(info.name) + ": expected a single result");
      return;
    }
    const TensorType* declared = tensor_type(f, op.results[0]);
    if (!declared) {
      error(op.loc, std::string(info.name) + ": result must be a tensor");
      return;
    }
    check_tensor_rank(op.loc, *declared);
    for (const TensorType& t : operand_types) check_tensor_rank(op.loc, t);

    TensorType inferred;
    try {
      inferred = shape_infer(op.opcode, operand_types, op.attributes, declared);
    } catch (const Error& e) {
      error(op.loc, std::string(info.name) + ": " + e.what());
      return;
    }
    if (!(inferred == *declared)) {
      error(op.loc, std::string(info.name) + ": declared result type " +
                        shape_str(*declared) + " differs from inferred " +
                        shape_str(inferred));
    }

    if (op.opcode == Opcode::kFeConstant) {
      const AttrValue* blob = op.attr("value");
      if (!blob || blob->kind != AttrValue::Kind::kBlob) {
        error(op.loc, "fe.constant requires a blob value attribute");
        return;
      }
      if (!declared->fully_static()) {
        error(op.loc, "fe.constant result type must be fully static");
        return;
      }
      if (static_cast<int64_t>(blob->blob.size()) != declared->byte_length())
        error(op.loc, "fe.constant blob size does not match result type");
    }
  }

  void verify_generic(const FuncOp& f, const Operation& op) {
    const AttrValue* iters_attr = op.attr("iterator_types");
    const AttrValue* maps_attr = op.attr("indexing_maps");
    const AttrValue* ins_attr = op.attr("ins");
    if (!iters_attr || iters_attr->kind != AttrValue::Kind::kIteratorKindList ||
        !maps_attr || maps_attr->kind != AttrValue::Kind::kAffineMapList ||
        !ins_attr || ins_attr->kind != AttrValue::Kind::kInt) {
      error(op.loc, "lg.generic requires iterator_types, indexing_maps and ins");
      return;
    }
    const auto& iters = iters_attr->iterators;
    const auto& maps = maps_attr->maps;
    int64_t num_ins = ins_attr->i;
    size_t num_operands = op.operands.size();
    if (num_ins < 0 || static_cast<size_t>(num_ins) > num_operands) {
      error(op.loc, "lg.generic: ins count out of range");
      return;
    }
    size_t num_outs = num_operands - static_cast<size_t>(num_ins);
    if (num_outs < 1) {
      error(op.loc, "lg.generic: at least one out operand required");
      return;
    }
    if (op.results.size() != num_outs) {
      error(op.loc, "lg.generic: one result per out operand required");
      return;
    }
    if (maps.size() != num_operands) {
      error(op.loc, "lg.generic: one indexing map per operand required");
      return;
    }
    uint32_t rank = static_cast<uint32_t>(iters.size());
    // Reduction iterators must follow all parallel iterators; kernel
    // generation and the normative evaluation order rely on this.
    bool seen_reduction = false;
    for (IteratorKind k : iters) {
      if (k == IteratorKind::kReduction) seen_reduction = true;
      else if (seen_reduction) {
        error(op.loc, "lg.generic: parallel iterators must precede reductions");
        return;
      }
    }
    std::vector<uint32_t> parallel_dims;
    for (uint32_t d = 0; d < rank; ++d)
      if (iters[d] == IteratorKind::kParallel) parallel_dims.push_back(d);

    std::vector<TensorType> operand_types;
    for (ValueId v : op.operands) {
      const TensorType* t = tensor_type(f, v);
      if (!t) {
        error(op.loc, "lg.generic: operands must be tensors");
        return;
      }
      operand_types.push_back(*t);
    }
    for (size_t i = 0; i < maps.size(); ++i) {
      const AffineMap& m = maps[i];
      if (m.num_dims != rank || !m.well_formed()) {
        error(op.loc, "lg.generic: indexing map dims do not match iterators");
        return;
      }
      if (m.num_results() != operand_types[i].rank()) {
        error(op.loc, "lg.generic: indexing map results do not match operand rank");
        return;
      }
    }
    // Out maps: a permutation of the parallel dims. This keeps every output
    // element written exactly once per tile.
    for (size_t i = static_cast<size_t>(num_ins); i < num_operands; ++i) {
      const AffineMap& m = maps[i];
      std::vector<bool> seen(rank, false);
      bool ok = m.num_results() == parallel_dims.size();
      for (uint32_t r : m.results) {
        if (r >= rank || iters[r] != IteratorKind::kParallel || seen[r]) ok = false;
        else seen[r] = true;
      }
      if (!ok) {
        error(op.loc,
              "lg.generic: out indexing maps must be permutations of the "
              "parallel dims");
        return;
      }
    }
    // Result types equal their out operand types.
    for (size_t i = 0; i < num_outs; ++i) {
      const TensorType* rt = tensor_type(f, op.results[i]);
      if (!rt || !(*rt == operand_types[num_ins + i])) {
        error(op.loc, "lg.generic: result type must equal its out operand type");
        return;
      }
    }
    // Static extents implied for the same iteration dim must agree.
    std::vector<int64_t> dim_extent(rank, Dim::kDynamic);
    for (size_t i = 0; i < maps.size(); ++i) {
      for (size_t p = 0; p < maps[i].results.size(); ++p) {
        const Dim& d = operand_types[i].shape[p];
        if (d.is_dynamic()) continue;
        int64_t& slot = dim_extent[maps[i].results[p]];
        if (slot == Dim::kDynamic) slot = d.extent;
        else if (slot != d.extent) {
          error(op.loc, "lg.generic: operand extents conflict for one "
                        "iteration dim");
          return;
        }
      }
    }

    // Body block: one scalar argument per operand, scalar ops only, a single
    // yield of one scalar per out operand.
    if (op.regions.size() != 1) {
      error(op.loc, "lg.generic requires exactly one body region");
      return;
    }
    const Block& body = op.regions[0].block;
    if (body.args.size() != num_operands) {
      error(op.loc, "lg.generic body must take one scalar per operand");
      return;
    }
    for (size_t i = 0; i < body.args.size(); ++i) {
      const Type& t = f.value_types[body.args[i]];
      if (!t.is_scalar() ||
          t.scalar.kind != scalar_kind_of(operand_types[i].element)) {
        error(op.loc, "lg.generic body argument type mismatch");
        return;
      }
    }
    if (body.ops.empty() || body.ops.back().opcode != Opcode::kScYield) {
      error(op.loc, "lg.generic body must end in yield");
      return;
    }
    std::unordered_set<ValueId> defined(body.args.begin(), body.args.end());
    for (size_t i = 0; i < body.ops.size(); ++i) {
      const Operation& s = body.ops[i];
      if (s.opcode == Opcode::kScYield) {
        if (i + 1 != body.ops.size()) {
          error(s.loc, "yield must terminate the body");
          return;
        }
        if (s.operands.size() != num_outs) {
          error(s.loc, "yield must produce one scalar per out operand");
          return;
        }
        for (size_t j = 0; j < s.operands.size(); ++j) {
          if (!defined.count(s.operands[j])) {
            error(s.loc, "yield of undefined value");
            return;
          }
          const Type& t = f.value_types[s.operands[j]];
          ScalarKind want = scalar_kind_of(operand_types[num_ins + j].element);
          if (!t.is_scalar() || t.scalar.kind != want) {
            error(s.loc, "yield scalar type does not match out element type");
            return;
          }
        }
        continue;
      }
      if (!is_scalar_op(s.opcode)) {
        error(s.loc, "lg.generic body may contain only scalar ops");
        return;
      }
      const OpcodeInfo& sinfo = opcode_info(s.opcode);
      if (s.operands.size() != static_cast<size_t>(sinfo.num_operands) ||
          s.results.size() != static_cast<size_t>(sinfo.num_results)) {
        error(s.loc, std::string(sinfo.name) + ": wrong arity in body");
        return;
      }
      for (ValueId v : s.operands) {
        if (!defined.count(v)) {
          error(s.loc, "use of value before its definition in body");
          return;
        }
      }
      // Scalar op typing: float ops on f32, integer ops on i32/i8, with all
      // operands and the result of one kind.
      auto kind_of = [&](ValueId v) { return f.value_types[v].scalar.kind; };
      if (!s.results.empty()) {
        ScalarKind rk = kind_of(s.results[0]);
        bool is_float_op = s.opcode == Opcode::kScAddf || s.opcode == Opcode::kScSubf ||
                           s.opcode == Opcode::kScMulf || s.opcode == Opcode::kScMaxf;
        bool is_int_op = s.opcode == Opcode::kScAddi || s.opcode == Opcode::kScSubi ||
                         s.opcode == Opcode::kScMuli || s.opcode == Opcode::kScMaxi;
        if (is_float_op && rk != ScalarKind::kF32) {
          error(s.loc, "float scalar op must produce f32");
          return;
        }
        if (is_int_op && rk != ScalarKind::kI32 && rk != ScalarKind::kI8) {
          error(s.loc, "integer scalar op must produce i32 or i8");
          return;
        }
        for (ValueId v : s.operands) {
          if (kind_of(v) != rk) {
            error(s.loc, "scalar op operand kind mismatch");
            return;
          }
        }
        if (s.opcode == Opcode::kScConst) {
          const AttrValue* val = s.attr("value");
          if (!val || val->kind != AttrValue::Kind::kInt) {
            error(s.loc, "const requires an integer-encoded value attribute");
            return;
          }
        }
      }
      for (ValueId r : s.results) defined.insert(r);
    }
  }

  const ProgramModule& module_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Diagnostic> verify_module(const ProgramModule& module) {
  Verifier v(module);
  std::vector<Diagnostic> diags = v.run();

  // lg.zero results may only be used as generic out operands: the host
  // program has no way to materialize a standalone zero tensor.
  for (const FuncOp& f : module.funcs) {
    std::unordered_set<ValueId> zero_results;
    for (const Operation& op : f.body.ops)
      if (op.opcode == Opcode::kLgZero && !op.results.empty())
        zero_results.insert(op.results[0]);
    if (zero_results.empty()) continue;
    for (const Operation& op : f.body.ops) {
      if (op.opcode == Opcode::kLgGeneric) {
        size_t num_ins = static_cast<size_t>(op.int_attr("ins"));
        for (size_t i = 0; i < op.operands.size() && i < num_ins; ++i)
          if (zero_results.count(op.operands[i]))
            diags.push_back({op.loc, "lg.zero may only be used as a generic "
                                     "out operand"});
      } else {
        for (ValueId v : op.operands)
          if (zero_results.count(v))
            diags.push_back({op.loc, "lg.zero may only be used as a generic "
                                     "out operand"});
      }
    }
  }
  return diags;
}

std::string format_diagnostics(const std::vector<Diagnostic>& diags) {
  std::ostringstream os;
  for (const Diagnostic& d : diags) {
    if (d.loc.line > 0) os << d.loc.line << ":" << d.loc.column << ": ";
    os << d.message << "\n";
  }
  return os.str();
}

}  // namespace tir
