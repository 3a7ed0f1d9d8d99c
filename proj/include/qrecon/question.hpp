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

#pragma once

#include <Eigen/Dense>
#include <bit>
#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrecon/error.hpp"

#ifndef QRECON_MAX_QUBITS
#define QRECON_MAX_QUBITS 4
#endif

namespace qrecon {

/// Largest qubit count accepted anywhere in the library.
inline constexpr int kMaxQubits = QRECON_MAX_QUBITS;

/// Throws CapExceeded unless 1 <= n <= kMaxQubits.
void check_qubit_count(int n);

/// 4^n - 1: the number of non-trivial questions on n qubits.
std::size_t question_count(int n);

/// 2^n: Hilbert space dimension.
inline std::size_t hilbert_dim(int n) { return std::size_t{1} << n; }

/**
 * A question Q_{mu_1...mu_N}, one Pauli direction per site (0 = identity,
 * 1,2,3 = x,y,z).
 *
 * The linear position is the big-endian base-4 code of the sites minus one,
 * so the excluded all-zero question has no position and every valid index
 * maps into [0, 4^N - 2]. Bloch components, graph vertices and generator rows
 * all use this ordering.
 */
class QuestionIndex {
 public:
  /// Parses a digit string such as "11" or "302".
  static QuestionIndex parse(std::string_view digits);
  static QuestionIndex from_position(int n, std::size_t position);

  int n() const { return static_cast<int>(sites_.size()); }
  std::span<const std::uint8_t> sites() const { return sites_; }
  std::uint8_t operator[](int site) const { return sites_[static_cast<std::size_t>(site)]; }

  std::size_t position() const;
  /// Number of non-identity sites.
  int weight() const;
  std::string str() const;

  friend bool operator==(const QuestionIndex&, const QuestionIndex&) = default;
  friend std::strong_ordering operator<=>(const QuestionIndex& a, const QuestionIndex& b);

 private:
  explicit QuestionIndex(std::vector<std::uint8_t> sites) : sites_(std::move(sites)) {}
  friend QuestionIndex make_index(const std::vector<int>& sites, int n);

  std::vector<std::uint8_t> sites_;
};

/// Validating constructor: rejects wrong lengths, digits outside 0..3 and the
/// all-zero index.
QuestionIndex make_index(const std::vector<int>& sites, int n);

/// Every question on n qubits in linear order.
std::vector<QuestionIndex> all_questions(int n);

/**
 * Compatibility per the parity rule: count sites where both entries are
 * non-zero and different; compatible iff that count is even.
 */
bool is_compatible(const QuestionIndex& a, const QuestionIndex& b);

/// An element of {+1, +i, -1, -i}, stored as quarter turns.
class PauliPhase {
 public:
  constexpr PauliPhase() = default;
  static constexpr PauliPhase from_quarter_turns(int k) { return PauliPhase(((k % 4) + 4) % 4); }

  constexpr int quarter_turns() const { return turns_; }
  constexpr bool is_real() const { return turns_ % 2 == 0; }
  /// +1 or -1; only meaningful when is_real().
  constexpr int sign() const { return turns_ == 0 ? 1 : -1; }
  std::complex<double> value() const;

  friend constexpr PauliPhase operator*(PauliPhase a, PauliPhase b) {
    return from_quarter_turns(a.turns_ + b.turns_);
  }
  friend constexpr bool operator==(PauliPhase, PauliPhase) = default;

 private:
  constexpr explicit PauliPhase(int turns) : turns_(turns) {}
  int turns_ = 0;
};

std::string to_string(PauliPhase phase);

/// sigma_a * sigma_b = phase * sigma_index; index is empty for the identity.
struct PauliProduct {
  std::optional<QuestionIndex> index;
  PauliPhase phase;

  bool is_identity() const { return !index.has_value(); }
};

PauliProduct pauli_product(const QuestionIndex& a, const QuestionIndex& b);

/// Even: c = a <-> b.  Odd: c = not(a <-> b).
enum class CorrelationParity { Even, Odd };

std::string_view to_string(CorrelationParity parity);

struct Composition {
  QuestionIndex index;
  CorrelationParity parity;
};

/// The dependent third question of a compatible pair under the XNOR
/// convention. Throws IncompatibleOperands or EqualOperands.
Composition xnor_compose(const QuestionIndex& a, const QuestionIndex& b);

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

/// Single-site Pauli matrix; mu = 0 is the identity.
template <typename Scalar = double>
ComplexMatrix<Scalar> single_pauli(int mu) {
  using C = std::complex<Scalar>;
  ComplexMatrix<Scalar> m(2, 2);
  switch (mu) {
    case 0: m << C(1), C(0), C(0), C(1); break;
    case 1: m << C(0), C(1), C(1), C(0); break;
    case 2: m << C(0), C(0, -1), C(0, 1), C(0); break;
    case 3: m << C(1), C(0), C(0), C(-1); break;
    default: throw Error(ErrorCode::SiteOutOfRange, "Pauli label " + std::to_string(mu));
  }
  return m;
}

template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// sigma_{mu_1} (x) ... (x) sigma_{mu_N}; site 0 is the leftmost factor.
template <typename Scalar = double>
ComplexMatrix<Scalar> pauli_matrix(const QuestionIndex& q) {
  ComplexMatrix<Scalar> m = single_pauli<Scalar>(q[0]);
  for (int site = 1; site < q.n(); ++site) m = kron(m, single_pauli<Scalar>(q[site]));
  return m;
}

/**
 * Sparse action of a Pauli string on computational basis states:
 * sigma_q |c> = phase(c) |c ^ flip_mask>. Site 0 is the most significant bit.
 */
class PauliAction {
 public:
  explicit PauliAction(const QuestionIndex& q) {
    const int n = q.n();
    for (int site = 0; site < n; ++site) {
      const std::size_t bit = std::size_t{1} << (n - 1 - site);
      if (q[site] == 1 || q[site] == 2) flip_ |= bit;
      if (q[site] == 2 || q[site] == 3) sign_ |= bit;
      if (q[site] == 2) ++y_count_;
    }
  }

  std::size_t row(std::size_t col) const { return col ^ flip_; }

  template <typename Scalar = double>
  std::complex<Scalar> phase(std::size_t col) const {
    // i^{#y} * (-1)^{popcount(col & sign)}
    const int turns = y_count_ + 2 * (std::popcount(col & sign_) & 1);
    switch (turns % 4) {
      case 0: return {Scalar(1), Scalar(0)};
      case 1: return {Scalar(0), Scalar(1)};
      case 2: return {Scalar(-1), Scalar(0)};
      default: return {Scalar(0), Scalar(-1)};
    }
  }

 private:
  std::size_t flip_ = 0;
  std::size_t sign_ = 0;
  int y_count_ = 0;
};

}  // namespace qrecon
