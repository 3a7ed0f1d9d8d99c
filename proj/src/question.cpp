// Copyright 2026 The qrecon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrecon/question.hpp"

#include <algorithm>

namespace qrecon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AllZeroIndex: return "AllZeroIndex";
    case ErrorCode::SiteOutOfRange: return "SiteOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IncompatibleOperands: return "IncompatibleOperands";
    case ErrorCode::EqualOperands: return "EqualOperands";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitTrace: return "NotUnitTrace";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroProbabilityAnswer: return "ZeroProbabilityAnswer";
    case ErrorCode::WrongN: return "WrongN";
    case ErrorCode::EqualPentagons: return "EqualPentagons";
    case ErrorCode::BadLabel: return "BadLabel";
    case ErrorCode::MalformedConstraint: return "MalformedConstraint";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits)
    throw Error(ErrorCode::CapExceeded,
                "qubit count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxQubits) + "]");
}

std::size_t question_count(int n) { return (std::size_t{1} << (2 * n)) - 1; }

QuestionIndex make_index(const std::vector<int>& sites, int n) {
  if (static_cast<int>(sites.size()) != n)
    throw Error(ErrorCode::LengthMismatch,
                "expected " + std::to_string(n) + " sites, got " + std::to_string(sites.size()));
  check_qubit_count(n);
  std::vector<std::uint8_t> digits;
  digits.reserve(sites.size());
  for (int s : sites) {
    if (s < 0 || s > 3) throw Error(ErrorCode::SiteOutOfRange, "site value " + std::to_string(s));
    digits.push_back(static_cast<std::uint8_t>(s));
  }
  if (std::all_of(digits.begin(), digits.end(), [](std::uint8_t d) { return d == 0; }))
    throw Error(ErrorCode::AllZeroIndex, "the all-zero question is trivial");
  return QuestionIndex(std::move(digits));
}

QuestionIndex QuestionIndex::parse(std::string_view digits) {
  std::vector<int> sites;
  for (char c : digits) {
    if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "bad question digit in '" + std::string(digits) + "'");
    sites.push_back(c - '0');
  }
  if (sites.empty()) throw Error(ErrorCode::ParseError, "empty question string");
  return make_index(sites, static_cast<int>(sites.size()));
}

QuestionIndex QuestionIndex::from_position(int n, std::size_t position) {
  check_qubit_count(n);
  if (position >= question_count(n))
    throw Error(ErrorCode::SiteOutOfRange, "position " + std::to_string(position) + " out of range");
  std::size_t code = position + 1;
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(n));
  for (int site = n - 1; site >= 0; --site) {
    digits[static_cast<std::size_t>(site)] = static_cast<std::uint8_t>(code & 3u);
    code >>= 2;
  }
  return QuestionIndex(std::move(digits));
}

std::size_t QuestionIndex::position() const {
  std::size_t code = 0;
  for (auto d : sites_) code = (code << 2) | d;
  return code - 1;
}

int QuestionIndex::weight() const {
  return static_cast<int>(std::count_if(sites_.begin(), sites_.end(), [](std::uint8_t d) { return d != 0; }));
}

std::string QuestionIndex::str() const {
  std::string s;
  for (auto d : sites_) s.push_back(static_cast<char>('0' + d));
  return s;
}

std::strong_ordering operator<=>(const QuestionIndex& a, const QuestionIndex& b) {
  if (auto c = a.n() <=> b.n(); c != 0) return c;
  return a.position() <=> b.position();
}

std::vector<QuestionIndex> all_questions(int n) {
  check_qubit_count(n);
  std::vector<QuestionIndex> out;
  out.reserve(question_count(n));
  for (std::size_t p = 0; p < question_count(n); ++p) out.push_back(QuestionIndex::from_position(n, p));
  return out;
}

namespace {

void require_same_n(const QuestionIndex& a, const QuestionIndex& b) {
  if (a.n() != b.n())
    throw Error(ErrorCode::LengthMismatch, "questions " + a.str() + " and " + b.str() + " differ in qubit count");
}

}  // namespace

bool is_compatible(const QuestionIndex& a, const QuestionIndex& b) {
  require_same_n(a, b);
  int clashes = 0;
  for (int s = 0; s < a.n(); ++s)
    if (a[s] != 0 && b[s] != 0 && a[s] != b[s]) ++clashes;
  return clashes % 2 == 0;
}

std::complex<double> PauliPhase::value() const {
  switch (turns_) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::string to_string(PauliPhase phase) {
  switch (phase.quarter_turns()) {
    case 0: return "+1";
    case 1: return "+i";
    case 2: return "-1";
    default: return "-i";
  }
}

std::string_view to_string(CorrelationParity parity) {
  return parity == CorrelationParity::Even ? "even" : "odd";
}

PauliProduct pauli_product(const QuestionIndex& a, const QuestionIndex& b) {
  require_same_n(a, b);
  // sigma_1 sigma_2 = i sigma_3 and cyclic.
  int turns = 0;
  std::vector<int> sites(static_cast<std::size_t>(a.n()));
  for (int s = 0; s < a.n(); ++s) {
    const int x = a[s], y = b[s];
    int out = 0;
    if (x == 0) {
      out = y;
    } else if (y == 0) {
      out = x;
    } else if (x != y) {
      out = 6 - x - y;
      turns += ((y - x + 3) % 3 == 1) ? 1 : -1;
    }
    sites[static_cast<std::size_t>(s)] = out;
  }
  PauliProduct product;
  product.phase = PauliPhase::from_quarter_turns(turns);
  if (std::any_of(sites.begin(), sites.end(), [](int d) { return d != 0; }))
    product.index = make_index(sites, a.n());
  return product;
}

Composition xnor_compose(const QuestionIndex& a, const QuestionIndex& b) {
  require_same_n(a, b);
  if (a == b) throw Error(ErrorCode::EqualOperands, "cannot compose " + a.str() + " with itself");
  if (!is_compatible(a, b))
    throw Error(ErrorCode::IncompatibleOperands, a.str() + " and " + b.str() + " are complementary");
  auto product = pauli_product(a, b);
  return {*product.index, product.phase.sign() > 0 ? CorrelationParity::Even : CorrelationParity::Odd};
}

}  // namespace qrecon
