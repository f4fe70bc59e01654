/*
 * Copyright 2026 The qforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qforge/parser.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>
#include <vector>

#include "qforge/error.hpp"
#include "qforge/io.hpp"

namespace qforge {

namespace {

struct PendingOperand {
  QubitRef ref;
  std::size_t line;
  std::size_t column;
};

class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::size_t column() const { return pos_ + 1; }
  std::size_t line() const { return line_; }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected '") + c + "' " + what);
  }

  std::string identifier(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (start == pos_) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t integer(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail(std::string(what) + " out of range");
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& message, ErrorCode code = ErrorCode::SyntaxError) const {
    throw SyntaxError(code, line_, column(), message);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

Circuit parse_source(std::string_view text) {
  std::vector<Register> registers;
  std::vector<Gate> gates;
  std::vector<PendingOperand> operands;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    LineScanner scan(strip_comment(text.substr(start, end - start)), line_no);
    start = end + 1;

    if (scan.at_end()) continue;
    const std::size_t word_col = scan.column();
    const std::string word = scan.identifier("a declaration or gate name");

    if (word == "qreg") {
      scan.skip_space();
      const std::size_t label_col = scan.column();
      std::string label = scan.identifier("register label");
      const std::size_t size = scan.integer("register size");
      if (size == 0) scan.fail("register size must be positive");
      if (!scan.at_end()) scan.fail("unexpected text after declaration");
      for (const Register& r : registers) {
        if (r.label == label) {
          throw SyntaxError(ErrorCode::SyntaxError, line_no, label_col,
                            "duplicate register '" + label + "'");
        }
      }
      registers.push_back(Register{std::move(label), size});
      continue;
    }

    const auto kind = gate_from_name(word);
    if (!kind) {
      throw SyntaxError(ErrorCode::UnknownGate, line_no, word_col, "unknown gate '" + word + "'");
    }

    Gate gate;
    gate.kind = *kind;
    const std::size_t n_targets = target_arity(*kind);
    while (!scan.at_end()) {
      const std::size_t col = scan.column();
      const bool negative = scan.consume('!');
      std::string label = scan.identifier("register label");
      scan.expect('[', "after register label");
      const std::size_t offset = scan.integer("qubit offset");
      scan.expect(']', "after qubit offset");
      QubitRef ref = QubitRef::named(std::move(label), offset);
      operands.push_back(PendingOperand{ref, line_no, col});
      if (gate.targets.size() < n_targets) {
        if (negative) {
          throw SyntaxError(ErrorCode::SyntaxError, line_no, col, "target cannot be negated");
        }
        gate.targets.push_back(std::move(ref));
      } else {
        gate.controls.push_back(Control{std::move(ref), negative ? Polarity::Negative : Polarity::Positive});
      }
    }
    if (gate.targets.size() < n_targets) {
      scan.fail("gate '" + word + "' needs " + std::to_string(n_targets) + " target(s)");
    }
    gates.push_back(std::move(gate));
  }

  for (const PendingOperand& op : operands) {
    bool declared = false;
    for (const Register& r : registers) declared = declared || r.label == op.ref.label();
    if (!declared) {
      throw SyntaxError(ErrorCode::UndeclaredRegister, op.line, op.column,
                        "undeclared register '" + std::string(op.ref.label()) + "'");
    }
  }
  return Circuit(std::move(registers), std::move(gates));
}

std::string print_source(const Circuit& circuit) {
  std::vector<Register> registers = circuit.registers();
  const std::size_t covered = circuit.register_qubits();
  if (circuit.num_qubits() > covered) {
    std::string label = "anc";
    while (circuit.find_register(label) != nullptr) label += "_";
    registers.push_back(Register{label, circuit.num_qubits() - covered});
  }

  auto name_of = [&](const QubitRef& ref) -> std::string {
    if (ref.is_named()) return to_string(ref);
    std::size_t base = 0;
    for (const Register& r : registers) {
      if (ref.index() < base + r.size) return r.label + "[" + std::to_string(ref.index() - base) + "]";
      base += r.size;
    }
    // Out-of-range index; keep it visible rather than silently renaming.
    return "q[" + std::to_string(ref.index()) + "]";
  };

  std::ostringstream out;
  for (const Register& r : registers) out << "qreg " << r.label << ' ' << r.size << '\n';
  for (const Gate& g : circuit.gates()) {
    out << gate_name(g.kind);
    for (const QubitRef& t : g.targets) out << ' ' << name_of(t);
    for (const Control& c : g.controls) {
      out << ' ' << (c.polarity == Polarity::Negative ? "!" : "") << name_of(c.qubit);
    }
    out << '\n';
  }
  return out.str();
}

Circuit read_source_file(const std::string& path) { return parse_source(read_file(path)); }

}  // namespace qforge
