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

#include "torusflow/character.hpp"

#include <cmath>
#include <stdexcept>

namespace torusflow {

CharacterIndex::CharacterIndex(std::map<std::uint32_t, std::int64_t> support) {
  for (auto& [k, n] : support) {
    if (k == 0) throw std::invalid_argument("CharacterIndex: circles are 1-based");
    if (n != 0) support_.emplace(k, n);
  }
}

CharacterIndex CharacterIndex::dense(const std::vector<std::int64_t>& n) {
  std::map<std::uint32_t, std::int64_t> support;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] != 0) support.emplace(static_cast<std::uint32_t>(i + 1), n[i]);
  }
  CharacterIndex c;
  c.support_ = std::move(support);
  return c;
}

std::uint32_t CharacterIndex::max_circle() const {
  return support_.empty() ? 0 : support_.rbegin()->first;
}

std::vector<std::pair<std::uint32_t, std::int64_t>> CharacterIndex::pairs() const {
  return {support_.begin(), support_.end()};
}

std::complex<double> char_eval(const std::vector<double>& theta, const CharacterIndex& n) {
  if (n.max_circle() > theta.size())
    throw std::invalid_argument("char_eval: character support outside the truncation level");
  double arg = 0.0;
  for (const auto& [k, nk] : n.support()) arg += static_cast<double>(nk) * theta[k - 1];
  return {std::cos(arg), std::sin(arg)};
}

std::complex<double> char_eval(const PhasePoint& x, const CharacterIndex& n) {
  return char_eval(x.theta(), n);
}

double character_norm_product(const std::vector<FourierFactor>& factors) {
  double product = 1.0;
  for (const auto& factor : factors) {
    double sq = 0.0;
    for (const auto& [m, c] : factor) {
      (void)m;
      sq += std::norm(c);
    }
    if (sq == 0.0) throw std::domain_error("character_norm_product: factor with zero norm");
    product *= std::sqrt(sq);
  }
  return product;
}

}  // namespace torusflow
