// Copyright 2026 The TIR Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include <bit>
#include <cassert>
#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <unordered_map>

#include "tir/text.h"

namespace tir {

namespace {

// Iteration dims print as i, j, k, l in order (rank <= 4).
const char* kDimNames[] = {"i", "j", "k", "l"};

}  // namespace

std::string format_tensor_type(const TensorType& t) {
  std::ostringstream os;
  os << "tensor<";
  for (const Dim& d : t.shape) {
    if (d.is_dynamic()) os << "?";
    else os << d.extent;
    os << "x";
  }
  os << element_type_name(t.element) << ">";
  return os.str();
}

std::string format_type(const Type& t) {
  if (t.is_tensor()) return format_tensor_type(t.tensor);
  return scalar_kind_name(t.scalar.kind);
}

std::string format_affine_map(const AffineMap& m) {
  assert(m.num_dims <= 4);
  std::ostringstream os;
  os << "affine_map<(";
  for (uint32_t d = 0; d < m.num_dims; ++d) {
    if (d) os << ", ";
    os << kDimNames[d];
  }
  os << ") -> (";
  for (size_t r = 0; r < m.results.size(); ++r) {
    if (r) os << ", ";
    os << kDimNames[m.results[r]];
  }
  os << ")>";
  return os.str();
}

std::string format_f32(float value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", static_cast<double>(value));
  std::string s(buf);
  // Mark the literal as a float so it parses back to f32 bits.
  if (s.find_first_of(".eE") == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
    s += ".0";
  return s;
}

namespace {

class Printer {
 public:
  explicit Printer(const ProgramModule& module) : module_(module) {}

  std::string run() {
    os_ << "module {\n";
    for (const FuncOp& f : module_.funcs) print_func(f);
    os_ << "}\n";
    return os_.str();
  }

 private:
  void print_func(const FuncOp& f) {
    names_.clear();
    next_result_ = 0;
    os_ << "  func @" << f.name << "(";
    for (size_t i = 0; i < f.body.args.size(); ++i) {
      if (i) os_ << ", ";
      std::string name = "%arg" + std::to_string(i);
      names_[f.body.args[i]] = name;
      os_ << name << ": " << format_type(f.arg_types[i]);
    }
    os_ << ") -> (";
    for (size_t i = 0; i < f.result_types.size(); ++i) {
      if (i) os_ << ", ";
      os_ << format_type(f.result_types[i]);
    }
    os_ << ") {\n";
    for (const Operation& op : f.body.ops) print_op(f, op);
    os_ << "  }\n";
  }

  std::string name_results(const Operation& op, const char* prefix,
                           int* counter) {
    std::string joined;
    for (size_t i = 0; i < op.results.size(); ++i) {
      std::string name = std::string("%") + prefix + std::to_string((*counter)++);
      names_[op.results[i]] = name;
      if (i) joined += ", ";
      joined += name;
    }
    return joined;
  }

  void print_attr(const FuncOp& f, const Operation& op, const std::string& key,
                  const AttrValue& a) {
    os_ << key << " = ";
    switch (a.kind) {
      case AttrValue::Kind::kInt: {
        // Scalar f32 consts encode IEEE bits; print them as a float literal.
        if (op.opcode == Opcode::kScConst && key == "value" &&
            !op.results.empty() &&
            f.value_types[op.results[0]].is_scalar() &&
            f.value_types[op.results[0]].scalar.kind == ScalarKind::kF32) {
          os_ << format_f32(std::bit_cast<float>(static_cast<uint32_t>(a.i)));
        } else {
          os_ << a.i;
        }
        break;
      }
      case AttrValue::Kind::kIntList: {
        os_ << "[";
        for (size_t i = 0; i < a.int_list.size(); ++i) {
          if (i) os_ << ", ";
          os_ << a.int_list[i];
        }
        os_ << "]";
        break;
      }
      case AttrValue::Kind::kAffineMapList: {
        os_ << "[";
        for (size_t i = 0; i < a.maps.size(); ++i) {
          if (i) os_ << ", ";
          os_ << format_affine_map(a.maps[i]);
        }
        os_ << "]";
        break;
      }
      case AttrValue::Kind::kIteratorKindList: {
        os_ << "[";
        for (size_t i = 0; i < a.iterators.size(); ++i) {
          if (i) os_ << ", ";
          os_ << "\"" << iterator_kind_name(a.iterators[i]) << "\"";
        }
        os_ << "]";
        break;
      }
      case AttrValue::Kind::kBlob: {
        print_blob(f, op, a);
        break;
      }
    }
  }

  void print_blob(const FuncOp& f, const Operation& op, const AttrValue& a) {
    // Constants print as a flat row-major list.
    ElementType elem = ElementType::kF32;
    if (!op.results.empty() && f.value_types[op.results[0]].is_tensor())
      elem = f.value_types[op.results[0]].tensor.element;
    os_ << "dense<[";
    size_t width = byte_width(elem);
    size_t count = a.blob.size() / (width ? width : 1);
    for (size_t i = 0; i < count; ++i) {
      if (i) os_ << ", ";
      const uint8_t* p = a.blob.data() + i * width;
      switch (elem) {
        case ElementType::kF32: {
          uint32_t bits;
          std::memcpy(&bits, p, 4);
          os_ << format_f32(std::bit_cast<float>(bits));
          break;
        }
        case ElementType::kI32: {
          int32_t v;
          std::memcpy(&v, p, 4);
          os_ << v;
          break;
        }
        case ElementType::kI8:
          os_ << static_cast<int>(static_cast<int8_t>(*p));
          break;
      }
    }
    os_ << "]>";
  }

  void print_op_signature(const FuncOp& f, const Operation& op) {
    os_ << " : (";
    for (size_t i = 0; i < op.operands.size(); ++i) {
      if (i) os_ << ", ";
      os_ << format_type(f.value_types[op.operands[i]]);
    }
    os_ << ") -> ";
    if (op.results.size() == 1) {
      os_ << format_type(f.value_types[op.results[0]]);
    } else {
      os_ << "(";
      for (size_t i = 0; i < op.results.size(); ++i) {
        if (i) os_ << ", ";
        os_ << format_type(f.value_types[op.results[i]]);
      }
      os_ << ")";
    }
  }

  void print_op(const FuncOp& f, const Operation& op) {
    os_ << "    ";
    if (op.opcode == Opcode::kReturn) {
      os_ << "return";
      for (size_t i = 0; i < op.operands.size(); ++i)
        os_ << (i ? ", " : " ") << names_[op.operands[i]];
      os_ << "\n";
      return;
    }
    std::string results = name_results(op, "", &next_result_);
    if (!results.empty()) os_ << results << " = ";
    os_ << opcode_info(op.opcode).name << "(";
    for (size_t i = 0; i < op.operands.size(); ++i) {
      if (i) os_ << ", ";
      os_ << names_[op.operands[i]];
    }
    os_ << ")";
    if (!op.attributes.empty()) {
      os_ << " {";
      bool first = true;
      for (const auto& [key, value] : op.attributes) {
        if (!first) os_ << ", ";
        first = false;
        print_attr(f, op, key, value);
      }
      os_ << "}";
    }
    if (!op.regions.empty()) {
      os_ << " {\n";
      print_body(f, op.regions[0].block);
      os_ << "    }";
    }
    print_op_signature(f, op);
    os_ << "\n";
  }

  void print_body(const FuncOp& f, const Block& body) {
    os_ << "      ^bb0(";
    for (size_t i = 0; i < body.args.size(); ++i) {
      if (i) os_ << ", ";
      std::string name = "%a" + std::to_string(i);
      names_[body.args[i]] = name;
      os_ << name << ": " << format_type(f.value_types[body.args[i]]);
    }
    os_ << "):\n";
    int temp = 0;
    for (const Operation& s : body.ops) {
      os_ << "        ";
      if (s.opcode == Opcode::kScYield) {
        os_ << "yield";
        for (size_t i = 0; i < s.operands.size(); ++i)
          os_ << (i ? ", " : " ") << names_[s.operands[i]];
        os_ << "\n";
        continue;
      }
      std::string results = name_results(s, "t", &temp);
      if (!results.empty()) os_ << results << " = ";
      os_ << opcode_info(s.opcode).name << "(";
      for (size_t i = 0; i < s.operands.size(); ++i) {
        if (i) os_ << ", ";
        os_ << names_[s.operands[i]];
      }
      os_ << ")";
      if (!s.attributes.empty()) {
        os_ << " {";
        bool first = true;
        for (const auto& [key, value] : s.attributes) {
          if (!first) os_ << ", ";
          first = false;
          print_attr(f, s, key, value);
        }
        os_ << "}";
      }
      if (!s.results.empty())
        os_ << " : " << format_type(f.value_types[s.results[0]]);
      os_ << "\n";
    }
  }

  const ProgramModule& module_;
  std::ostringstream os_;
  std::unordered_map<ValueId, std::string> names_;
  int next_result_ = 0;
};

}  // namespace

std::string print_module(const ProgramModule& module) {
  return Printer(module).run();
}

}  // namespace tir
