// Copyright 2026 The torusflow Authors
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

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "torusflow/torus.hpp"

namespace torusflow {

/// Finitely supported integer vector indexing the character
/// exp(i * sum_k phi_k n_k). Zero entries are never stored.
class CharacterIndex {
 public:
  CharacterIndex() = default;  // the constant character
  explicit CharacterIndex(std::map<std::uint32_t, std::int64_t> support);
  /// Dense head (n_1, ..., n_N); zeros dropped.
  static CharacterIndex dense(const std::vector<std::int64_t>& n);

  const std::map<std::uint32_t, std::int64_t>& support() const { return support_; }
  bool trivial() const { return support_.empty(); }
  std::uint32_t max_circle() const;
  std::vector<std::pair<std::uint32_t, std::int64_t>> pairs() const;

  friend bool operator==(const CharacterIndex&, const CharacterIndex&) = default;

 private:
  std::map<std::uint32_t, std::int64_t> support_;
};

/// exp(i * sum theta_k n_k); modulus 1 by construction. The support must sit
/// within the truncation level of the point.
std::complex<double> char_eval(const PhasePoint& x, const CharacterIndex& n);
std::complex<double> char_eval(const std::vector<double>& theta, const CharacterIndex& n);

/// One circle factor of a cylindrical tensor product, as sparse Fourier
/// coefficients (harmonic m, coefficient).
using FourierFactor = std::vector<std::pair<std::int64_t, std::complex<double>>>;

/// Product of per-circle L2 norms: the H(T) norm of the tensor product.
/// Factors not listed are the constant 1. A factor of zero norm is an error.
double character_norm_product(const std::vector<FourierFactor>& factors);

}  // namespace torusflow
