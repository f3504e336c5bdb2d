// Copyright 2026 The TIR Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include <bit>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <set>
#include <unordered_map>

#include "tir/text.h"

namespace tir {

namespace {

enum class Tok : uint8_t {
  kEof,
  kIdent,     // bare identifier, possibly dotted (fe.add)
  kNumber,    // integer or float lexeme
  kString,    // "..."
  kPercent,   // %name
  kAt,        // @name
  kCaret,     // ^name
  kArrow,     // ->
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kLBracket,
  kRBracket,
  kLess,
  kGreater,
  kComma,
  kColon,
  kEquals,
  kQuestion,
};

struct Token {
  Tok kind = Tok::kEof;
  std::string text;
  SourceLocation loc;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    Token t;
    t.loc = loc();
    if (pos_ >= text_.size()) {
      t.kind = Tok::kEof;
      return t;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::kIdent;
      t.text = take_ident(true);
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::kNumber;
      t.text = take_number();
      return t;
    }
    switch (c) {
      case '%':
        advance();
        t.kind = Tok::kPercent;
        t.text = take_ident(false);
        return t;
      case '@':
        advance();
        t.kind = Tok::kAt;
        t.text = take_ident(false);
        return t;
      case '^':
        advance();
        t.kind = Tok::kCaret;
        t.text = take_ident(false);
        return t;
      case '"': {
        advance();
        t.kind = Tok::kString;
        while (pos_ < text_.size() && text_[pos_] != '"') t.text += take_char();
        if (pos_ >= text_.size()) throw SyntaxError(t.loc, "unterminated string");
        advance();
        return t;
      }
      case '-': {
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          advance();
          advance();
          t.kind = Tok::kArrow;
          return t;
        }
        if (pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
          t.kind = Tok::kNumber;
          t.text = take_number();
          return t;
        }
        throw SyntaxError(t.loc, "unexpected '-'");
      }
      case '(': advance(); t.kind = Tok::kLParen; return t;
      case ')': advance(); t.kind = Tok::kRParen; return t;
      case '{': advance(); t.kind = Tok::kLBrace; return t;
      case '}': advance(); t.kind = Tok::kRBrace; return t;
      case '[': advance(); t.kind = Tok::kLBracket; return t;
      case ']': advance(); t.kind = Tok::kRBracket; return t;
      case '<': advance(); t.kind = Tok::kLess; return t;
      case '>': advance(); t.kind = Tok::kGreater; return t;
      case ',': advance(); t.kind = Tok::kComma; return t;
      case ':': advance(); t.kind = Tok::kColon; return t;
      case '=': advance(); t.kind = Tok::kEquals; return t;
      case '?': advance(); t.kind = Tok::kQuestion; return t;
      default:
        throw SyntaxError(t.loc, std::string("unexpected character '") + c + "'");
    }
  }

  // Raw read of a tensor-type body up to the closing '>': e.g. "2x?xf32".
  std::string take_tensor_body() {
    std::string s;
    while (pos_ < text_.size() && text_[pos_] != '>') {
      char c = text_[pos_];
      if (c == '\n') throw SyntaxError(loc(), "unterminated tensor type");
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
      advance();
    }
    if (pos_ >= text_.size()) throw SyntaxError(loc(), "unterminated tensor type");
    advance();  // consume '>'
    return s;
  }

  SourceLocation loc() const { return {line_, col_}; }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }

  char take_char() {
    char c = text_[pos_];
    advance();
    return c;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string take_ident(bool allow_dot) {
    std::string s;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
                (allow_dot && c == '.');
      if (!ok) break;
      s += take_char();
    }
    return s;
  }

  std::string take_number() {
    std::string s;
    if (text_[pos_] == '-') s += take_char();
    auto digits = [&] {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        s += take_char();
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      s += take_char();
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      s += take_char();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
        s += take_char();
      digits();
    }
    return s;
  }

  const std::string& text_;
  size_t pos_ = 0;
  uint32_t line_ = 1;
  uint32_t col_ = 1;
};

bool is_float_lexeme(const std::string& s) {
  return s.find_first_of(".eE") != std::string::npos;
}

// Attribute value with its numeric lexemes preserved: blobs and scalar
// consts are finalized only once the op's result type is known.
struct PendingAttr {
  enum class Kind { kValue, kDense, kNumber } kind = Kind::kValue;
  AttrValue value;
  std::vector<std::string> dense;
  std::string number;
  SourceLocation loc;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { advance(); }

  ProgramModule parse() {
    ProgramModule module;
    expect_ident("module");
    expect(Tok::kLBrace);
    while (cur_.kind == Tok::kIdent && cur_.text == "func")
      module.funcs.push_back(parse_func());
    expect(Tok::kRBrace);
    if (cur_.kind != Tok::kEof) throw err("expected end of input");
    for (FuncOp& f : module.funcs) renumber_func(&f);
    return module;
  }

 private:
  [[noreturn]] void fail(SourceLocation loc, const std::string& msg) {
    throw SyntaxError(loc, msg);
  }

  SyntaxError err(const std::string& msg) { return SyntaxError(cur_.loc, msg); }

  void advance() { cur_ = lexer_.next(); }

  Token expect(Tok kind) {
    if (cur_.kind != kind) throw err("unexpected token, expected " + tok_name(kind));
    Token t = cur_;
    advance();
    return t;
  }

  static std::string tok_name(Tok k) {
    switch (k) {
      case Tok::kLParen: return "'('";
      case Tok::kRParen: return "')'";
      case Tok::kLBrace: return "'{'";
      case Tok::kRBrace: return "'}'";
      case Tok::kLBracket: return "'['";
      case Tok::kRBracket: return "']'";
      case Tok::kLess: return "'<'";
      case Tok::kGreater: return "'>'";
      case Tok::kComma: return "','";
      case Tok::kColon: return "':'";
      case Tok::kEquals: return "'='";
      case Tok::kArrow: return "'->'";
      case Tok::kIdent: return "identifier";
      case Tok::kNumber: return "number";
      case Tok::kPercent: return "value name";
      case Tok::kAt: return "symbol name";
      default: return "token";
    }
  }

  void expect_ident(const std::string& word) {
    if (cur_.kind != Tok::kIdent || cur_.text != word)
      throw err("expected '" + word + "'");
    advance();
  }

  bool accept_ident(const std::string& word) {
    if (cur_.kind == Tok::kIdent && cur_.text == word) {
      advance();
      return true;
    }
    return false;
  }

  int64_t parse_int(const Token& t) {
    if (t.kind != Tok::kNumber || is_float_lexeme(t.text))
      fail(t.loc, "expected integer");
    return std::strtoll(t.text.c_str(), nullptr, 10);
  }

  TensorType parse_tensor_body(SourceLocation loc) {
    // cur_ currently holds the first token *inside* the angle brackets; we
    // must instead consume raw text. Reconstruct from the token stream:
    // simplest is to re-lex pieces token by token.
    std::vector<Dim> dims;
    std::string elem_name;
    // Accept tokens of the form: (number|'?') 'x'-joined, ending with the
    // element name and '>'. The lexer splits "2x3xf32" oddly, so gather raw.
    std::string body = pending_tensor_body_;
    pending_tensor_body_.clear();
    std::vector<std::string> pieces;
    size_t start = 0;
    while (true) {
      size_t x = body.find('x', start);
      if (x == std::string::npos) {
        pieces.push_back(body.substr(start));
        break;
      }
      pieces.push_back(body.substr(start, x - start));
      start = x + 1;
    }
    if (pieces.empty()) fail(loc, "empty tensor type");
    ElementType elem;
    // Element name may itself contain no 'x'; it is the final piece. A piece
    // like "f32" in the middle is malformed.
    std::string last = pieces.back();
    pieces.pop_back();
    if (!element_type_from_name(last, &elem))
      fail(loc, "unknown element type '" + last + "'");
    for (const std::string& p : pieces) {
      if (p == "?") {
        dims.push_back(Dim::dynamic());
      } else if (!p.empty() &&
                 p.find_first_not_of("0123456789") == std::string::npos) {
        dims.push_back(Dim(std::strtoll(p.c_str(), nullptr, 10)));
      } else {
        fail(loc, "malformed tensor dimension '" + p + "'");
      }
    }
    return TensorType(std::move(dims), elem);
  }

  // Tensor-type bodies are read raw from the lexer: "2x?xf32" does not
  // tokenize cleanly with the general rules.
  Type parse_type_raw() {
    if (cur_.kind != Tok::kIdent) throw err("expected a type");
    Token t = cur_;
    if (t.text == "tensor") {
      advance();  // 'tensor'
      if (cur_.kind != Tok::kLess) throw err("expected '<' after tensor");
      pending_tensor_body_ = lexer_.take_tensor_body();
      TensorType tt = parse_tensor_body(t.loc);
      advance();  // refill cur_ after the raw read
      return Type(tt);
    }
    advance();
    if (t.text == "index") return Type(ScalarType(ScalarKind::kIndex));
    ElementType elem;
    if (element_type_from_name(t.text, &elem))
      return Type(ScalarType(scalar_kind_of(elem)));
    fail(t.loc, "unknown type '" + t.text + "'");
  }

  AffineMap parse_affine_map() {
    expect_ident("affine_map");
    expect(Tok::kLess);
    expect(Tok::kLParen);
    std::unordered_map<std::string, uint32_t> dims;
    while (cur_.kind == Tok::kIdent) {
      uint32_t index = static_cast<uint32_t>(dims.size());
      if (!dims.emplace(cur_.text, index).second)
        throw err("duplicate dim name in affine map");
      advance();
      if (cur_.kind == Tok::kComma) advance();
      else break;
    }
    expect(Tok::kRParen);
    expect(Tok::kArrow);
    expect(Tok::kLParen);
    std::vector<uint32_t> results;
    while (cur_.kind == Tok::kIdent) {
      auto it = dims.find(cur_.text);
      if (it == dims.end()) throw err("unknown dim in affine map result");
      results.push_back(it->second);
      advance();
      if (cur_.kind == Tok::kComma) advance();
      else break;
    }
    expect(Tok::kRParen);
    expect(Tok::kGreater);
    return AffineMap(static_cast<uint32_t>(dims.size()), std::move(results));
  }

  PendingAttr parse_attr_value() {
    PendingAttr p;
    p.loc = cur_.loc;
    if (cur_.kind == Tok::kNumber) {
      p.kind = PendingAttr::Kind::kNumber;
      p.number = cur_.text;
      advance();
      return p;
    }
    if (cur_.kind == Tok::kIdent && cur_.text == "dense") {
      advance();
      expect(Tok::kLess);
      expect(Tok::kLBracket);
      p.kind = PendingAttr::Kind::kDense;
      while (cur_.kind == Tok::kNumber) {
        p.dense.push_back(cur_.text);
        advance();
        if (cur_.kind == Tok::kComma) advance();
        else break;
      }
      expect(Tok::kRBracket);
      expect(Tok::kGreater);
      return p;
    }
    if (cur_.kind == Tok::kIdent && cur_.text == "affine_map") {
      p.value = AttrValue::make_maps({parse_affine_map()});
      return p;
    }
    if (cur_.kind == Tok::kLBracket) {
      advance();
      if (cur_.kind == Tok::kRBracket) {
        advance();
        p.value = AttrValue::make_int_list({});
        return p;
      }
      if (cur_.kind == Tok::kString) {
        std::vector<IteratorKind> kinds;
        while (cur_.kind == Tok::kString) {
          if (cur_.text == "parallel") kinds.push_back(IteratorKind::kParallel);
          else if (cur_.text == "reduction") kinds.push_back(IteratorKind::kReduction);
          else throw err("unknown iterator kind '" + cur_.text + "'");
          advance();
          if (cur_.kind == Tok::kComma) advance();
          else break;
        }
        expect(Tok::kRBracket);
        p.value = AttrValue::make_iterators(std::move(kinds));
        return p;
      }
      if (cur_.kind == Tok::kIdent && cur_.text == "affine_map") {
        std::vector<AffineMap> maps;
        while (cur_.kind == Tok::kIdent) {
          maps.push_back(parse_affine_map());
          if (cur_.kind == Tok::kComma) advance();
          else break;
        }
        expect(Tok::kRBracket);
        p.value = AttrValue::make_maps(std::move(maps));
        return p;
      }
      if (cur_.kind == Tok::kNumber) {
        std::vector<int64_t> ints;
        while (cur_.kind == Tok::kNumber) {
          ints.push_back(parse_int(cur_));
          advance();
          if (cur_.kind == Tok::kComma) advance();
          else break;
        }
        expect(Tok::kRBracket);
        p.value = AttrValue::make_int_list(std::move(ints));
        return p;
      }
      throw err("malformed list attribute");
    }
    throw err("malformed attribute value");
  }

  // Entries of an attribute dict; the opening '{' is already consumed.
  std::map<std::string, PendingAttr> parse_attr_entries() {
    std::map<std::string, PendingAttr> attrs;
    while (cur_.kind == Tok::kIdent) {
      std::string key = cur_.text;
      advance();
      expect(Tok::kEquals);
      PendingAttr value = parse_attr_value();
      if (!attrs.emplace(key, std::move(value)).second)
        throw err("duplicate attribute key '" + key + "'");
      if (cur_.kind == Tok::kComma) advance();
      else break;
    }
    expect(Tok::kRBrace);
    return attrs;
  }

  // Finalizes pending attrs now that the result element type is known.
  AttrMap finalize_attrs(std::map<std::string, PendingAttr>& pending,
                         std::optional<ElementType> result_elem,
                         std::optional<ScalarKind> scalar_kind) {
    AttrMap out;
    for (auto& [key, p] : pending) {
      switch (p.kind) {
        case PendingAttr::Kind::kValue:
          out.emplace(key, std::move(p.value));
          break;
        case PendingAttr::Kind::kNumber: {
          if (is_float_lexeme(p.number)) {
            if (scalar_kind != ScalarKind::kF32)
              fail(p.loc, "float attribute on a non-f32 value");
            float f = std::strtof(p.number.c_str(), nullptr);
            out.emplace(key, AttrValue::make_int(std::bit_cast<uint32_t>(f)));
          } else if (scalar_kind == ScalarKind::kF32 && key == "value") {
            // Integer-looking literal on an f32 const still means a float.
            float f = std::strtof(p.number.c_str(), nullptr);
            out.emplace(key, AttrValue::make_int(std::bit_cast<uint32_t>(f)));
          } else {
            out.emplace(key, AttrValue::make_int(
                                 std::strtoll(p.number.c_str(), nullptr, 10)));
          }
          break;
        }
        case PendingAttr::Kind::kDense: {
          if (!result_elem)
            fail(p.loc, "dense attribute requires a tensor-typed result");
          std::vector<uint8_t> blob;
          for (const std::string& lex : p.dense) {
            switch (*result_elem) {
              case ElementType::kF32: {
                float f = std::strtof(lex.c_str(), nullptr);
                uint32_t bits = std::bit_cast<uint32_t>(f);
                for (int b = 0; b < 4; ++b)
                  blob.push_back(static_cast<uint8_t>(bits >> (8 * b)));
                break;
              }
              case ElementType::kI32: {
                if (is_float_lexeme(lex)) fail(p.loc, "float literal in i32 dense");
                int64_t v = std::strtoll(lex.c_str(), nullptr, 10);
                uint32_t u = static_cast<uint32_t>(static_cast<int32_t>(v));
                for (int b = 0; b < 4; ++b)
                  blob.push_back(static_cast<uint8_t>(u >> (8 * b)));
                break;
              }
              case ElementType::kI8: {
                if (is_float_lexeme(lex)) fail(p.loc, "float literal in i8 dense");
                int64_t v = std::strtoll(lex.c_str(), nullptr, 10);
                blob.push_back(static_cast<uint8_t>(static_cast<int8_t>(v)));
                break;
              }
            }
          }
          out.emplace(key, AttrValue::make_blob(std::move(blob)));
          break;
        }
      }
    }
    return out;
  }

  FuncOp parse_func() {
    expect_ident("func");
    Token name = expect(Tok::kAt);
    expect(Tok::kLParen);
    std::vector<Type> arg_types;
    std::vector<std::string> arg_names;
    while (cur_.kind == Tok::kPercent) {
      arg_names.push_back(cur_.text);
      advance();
      expect(Tok::kColon);
      arg_types.push_back(parse_type_raw());
      if (cur_.kind == Tok::kComma) advance();
      else break;
    }
    expect(Tok::kRParen);
    expect(Tok::kArrow);
    expect(Tok::kLParen);
    std::vector<Type> result_types;
    while (cur_.kind == Tok::kIdent) {
      result_types.push_back(parse_type_raw());
      if (cur_.kind == Tok::kComma) advance();
      else break;
    }
    expect(Tok::kRParen);
    expect(Tok::kLBrace);

    builder_.emplace(name.text, arg_types, result_types);
    scope_.clear();
    for (size_t i = 0; i < arg_names.size(); ++i) {
      if (!scope_.emplace(arg_names[i], builder_->arg(i)).second)
        fail(name.loc, "duplicate argument name %" + arg_names[i]);
    }

    while (!(cur_.kind == Tok::kRBrace)) parse_op();
    expect(Tok::kRBrace);
    FuncOp f = builder_->take();
    builder_.reset();
    return f;
  }

  ValueId lookup(const Token& t) {
    auto it = scope_.find(t.text);
    if (it == scope_.end()) fail(t.loc, "unknown value %" + t.text);
    return it->second;
  }

  std::vector<ValueId> parse_operand_list_parens() {
    expect(Tok::kLParen);
    std::vector<ValueId> operands;
    while (cur_.kind == Tok::kPercent) {
      operands.push_back(lookup(cur_));
      advance();
      if (cur_.kind == Tok::kComma) advance();
      else break;
    }
    expect(Tok::kRParen);
    return operands;
  }

  void parse_op() {
    SourceLocation loc = cur_.loc;
    if (accept_ident("return")) {
      std::vector<ValueId> operands;
      while (cur_.kind == Tok::kPercent) {
        operands.push_back(lookup(cur_));
        advance();
        if (cur_.kind == Tok::kComma) advance();
        else break;
      }
      Operation op;
      op.opcode = Opcode::kReturn;
      op.operands = std::move(operands);
      op.loc = loc;
      builder_->func().body.ops.push_back(std::move(op));
      return;
    }

    std::vector<std::string> result_names;
    if (cur_.kind != Tok::kPercent) throw err("expected an operation");
    while (cur_.kind == Tok::kPercent) {
      result_names.push_back(cur_.text);
      advance();
      if (cur_.kind == Tok::kComma) advance();
      else break;
    }
    expect(Tok::kEquals);
    Token opname = expect(Tok::kIdent);
    Opcode opcode;
    if (!opcode_from_name(opname.text, &opcode) || is_scalar_op(opcode) ||
        opcode == Opcode::kReturn)
      fail(opname.loc, "unknown opcode '" + opname.text + "'");

    std::vector<ValueId> operands = parse_operand_list_parens();
    std::map<std::string, PendingAttr> pending;
    Region region;
    bool has_region = false;
    // Up to two braced groups follow: an attribute dict (`ident =`) and,
    // for generic ops, the body region (starts with '^').
    for (int group = 0; group < 2 && cur_.kind == Tok::kLBrace; ++group) {
      advance();
      if (cur_.kind == Tok::kCaret) {
        if (has_region) throw err("multiple regions on one op");
        has_region = true;
        parse_body(&region.block);
      } else {
        if (!pending.empty() || has_region)
          throw err("attribute dict must precede the region");
        pending = parse_attr_entries();
      }
    }
    expect(Tok::kColon);
    expect(Tok::kLParen);
    std::vector<Type> operand_types;
    while (cur_.kind == Tok::kIdent) {
      operand_types.push_back(parse_type_raw());
      if (cur_.kind == Tok::kComma) advance();
      else break;
    }
    expect(Tok::kRParen);
    expect(Tok::kArrow);
    std::vector<Type> result_types;
    if (cur_.kind == Tok::kLParen) {
      advance();
      while (cur_.kind == Tok::kIdent) {
        result_types.push_back(parse_type_raw());
        if (cur_.kind == Tok::kComma) advance();
        else break;
      }
      expect(Tok::kRParen);
    } else {
      result_types.push_back(parse_type_raw());
    }
    if (operand_types.size() != operands.size())
      fail(loc, "operand type list does not match operand count");
    if (result_types.size() != result_names.size())
      fail(loc, "result type list does not match result count");

    std::optional<ElementType> result_elem;
    if (!result_types.empty() && result_types[0].is_tensor())
      result_elem = result_types[0].tensor.element;
    AttrMap attrs = finalize_attrs(pending, result_elem, std::nullopt);

    std::vector<Region> regions;
    if (has_region) regions.push_back(std::move(region));
    ValueId first =
        builder_->add_op(opcode, std::move(operands), result_types,
                         std::move(attrs), std::move(regions));
    Operation& op = builder_->func().body.ops.back();
    op.loc = loc;
    for (size_t i = 0; i < result_names.size(); ++i) {
      if (!scope_.emplace(result_names[i], first + static_cast<ValueId>(i)).second)
        fail(loc, "redefinition of %" + result_names[i]);
    }
  }

  // Body region; the opening '{' is consumed and cur_ holds '^bb0'.
  void parse_body(Block* block) {
    Token bb = expect(Tok::kCaret);
    if (bb.text != "bb0") fail(bb.loc, "expected ^bb0");
    expect(Tok::kLParen);
    std::vector<std::string> arg_names;
    std::vector<Type> arg_types;
    while (cur_.kind == Tok::kPercent) {
      arg_names.push_back(cur_.text);
      advance();
      expect(Tok::kColon);
      arg_types.push_back(parse_type_raw());
      if (cur_.kind == Tok::kComma) advance();
      else break;
    }
    expect(Tok::kRParen);
    expect(Tok::kColon);
    // Body value names are scoped to the body; sibling bodies may reuse them
    // and body names may shadow function-level names.
    auto outer_scope = scope_;
    body_names_.clear();
    for (size_t i = 0; i < arg_names.size(); ++i) {
      ValueId v = builder_->add_block_arg(block, arg_types[i]);
      if (!body_names_.insert(arg_names[i]).second)
        throw err("redefinition of %" + arg_names[i]);
      scope_.insert_or_assign(arg_names[i], v);
    }
    while (cur_.kind != Tok::kRBrace) parse_scalar_op(block);
    expect(Tok::kRBrace);
    scope_ = std::move(outer_scope);
  }

  void parse_scalar_op(Block* block) {
    SourceLocation loc = cur_.loc;
    if (accept_ident("yield")) {
      Operation op;
      op.opcode = Opcode::kScYield;
      while (cur_.kind == Tok::kPercent) {
        op.operands.push_back(lookup(cur_));
        advance();
        if (cur_.kind == Tok::kComma) advance();
        else break;
      }
      op.loc = loc;
      block->ops.push_back(std::move(op));
      return;
    }
    if (cur_.kind != Tok::kPercent) throw err("expected a scalar op or yield");
    std::string result_name = cur_.text;
    advance();
    expect(Tok::kEquals);
    Token opname = expect(Tok::kIdent);
    Opcode opcode;
    if (!opcode_from_name(opname.text, &opcode) || !is_scalar_op(opcode) ||
        opcode == Opcode::kScYield)
      fail(opname.loc, "unknown scalar opcode '" + opname.text + "'");
    std::vector<ValueId> operands = parse_operand_list_parens();
    std::map<std::string, PendingAttr> pending;
    if (cur_.kind == Tok::kLBrace) {
      advance();
      pending = parse_attr_entries();
    }
    expect(Tok::kColon);
    Type result_type = parse_type_raw();
    if (!result_type.is_scalar())
      fail(loc, "scalar op result must be a scalar type");
    AttrMap attrs =
        finalize_attrs(pending, std::nullopt, result_type.scalar.kind);
    ValueId v = builder_->add_nested_op(block, opcode, std::move(operands),
                                        {result_type}, std::move(attrs));
    block->ops.back().loc = loc;
    if (!body_names_.insert(result_name).second)
      fail(loc, "redefinition of %" + result_name);
    scope_.insert_or_assign(result_name, v);
  }

  Lexer lexer_;
  Token cur_;
  std::optional<FuncBuilder> builder_;
  std::unordered_map<std::string, ValueId> scope_;
  std::set<std::string> body_names_;
  std::string pending_tensor_body_;
};

}  // namespace

ProgramModule parse_module(const std::string& text) {
  Parser parser(text);
  ProgramModule module = parser.parse();
  std::vector<Diagnostic> diags = verify_module(module);
  if (!diags.empty()) throw VerificationFailed(std::move(diags));
  return module;
}

}  // namespace tir
