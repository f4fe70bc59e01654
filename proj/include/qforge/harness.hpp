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

#pragma once

// Circuit unit tests: prepare registers, run a backend, decode, compare.
//
// Suite files (.qtest) are line oriented:
//
//   circuit <path>                 # relative to the suite file
//   backend logic|sv
//   lower on|off                   # run the lowering passes first
//   case <name> prep a=1,b=2 expect b=3
//   case <name> prep a=1
//   expect amp <index> <re> <im> tol <t>
//
// circuit/backend/lower apply to every following case. `expect amp` lines
// attach to the most recent case.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qforge/ir.hpp"

namespace qforge {

enum class Backend { Logic, StateVector };

struct AmplitudeExpectation {
  std::uint64_t index = 0;
  std::complex<double> amplitude;
  double tolerance = 1e-9;
};

struct TestCase {
  std::string name;
  Circuit circuit;
  Backend backend = Backend::Logic;
  bool lower = false;
  /// Register label -> prepared value; unlisted registers start at 0.
  std::map<std::string, std::uint64_t> prep;
  /// Register label -> expected output value.
  std::map<std::string, std::uint64_t> expect;
  /// State-vector expectations; every unlisted index must stay below the
  /// smallest listed tolerance.
  std::vector<AmplitudeExpectation> amplitudes;
};

enum class Verdict { Pass, Fail, Error };

struct CaseResult {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string expected;
  std::string actual;
  std::string message;
};

struct TestReport {
  std::vector<CaseResult> results;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t errors = 0;

  bool all_passed() const noexcept { return passed == results.size(); }
};

/// Comma-separated `reg=value` pairs; values may be decimal or 0b-binary.
std::map<std::string, std::uint64_t> parse_assignments(std::string_view text);

/// Basis index with each listed register set to its value.
std::uint64_t prepare_basis(const Circuit& c, const std::map<std::string, std::uint64_t>& prep);

/// Register label -> value read from a basis index.
std::map<std::string, std::uint64_t> decode_registers(const Circuit& c, std::uint64_t basis);

CaseResult run_case(const TestCase& tc);
TestReport run_suite(const std::vector<TestCase>& suite);

/// Parses suite text; circuit paths resolve against base_dir.
std::vector<TestCase> parse_suite(std::string_view text, const std::filesystem::path& base_dir);
std::vector<TestCase> read_suite_file(const std::filesystem::path& path);

std::string_view to_string(Verdict v);

}  // namespace qforge
