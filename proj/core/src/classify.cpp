/*
 * Copyright 2026 The OSP Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "osp/classify.hpp"

#include <algorithm>
#include <string>

#include "osp/error.hpp"

namespace osp {

namespace {

bool congruent(const BigInt& a, const BigInt& b, unsigned m) {
  BigInt d = (a - b) % m;
  return d == 0;
}

struct CoefficientSums {
  BigInt even;  // a_2 + a_4 + ...
  BigInt odd;   // a_3 + a_5 + ...
  BigInt all;   // a_1 + a_2 + ... + a_N
};

CoefficientSums sums(const Polynomial& p) {
  CoefficientSums s;
  const auto c = p.coeffs();
  for (std::size_t i = 1; i < c.size(); ++i) {
    s.all += c[i];
    if (i < 2) continue;
    (i % 2 == 0 ? s.even : s.odd) += c[i];
  }
  return s;
}

std::uint64_t ring_size(Width w, std::uint64_t budget) {
  if (w.bits() >= 64 || (std::uint64_t{1} << w.bits()) > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "2^" + std::to_string(w.bits()) +
                    " exceeds the exhaustive budget of " + std::to_string(budget));
  }
  return std::uint64_t{1} << w.bits();
}

bool bijective(const Evaluator& f, std::uint64_t n) {
  std::vector<bool> hit(n, false);
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t y = f.eval64(x);
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

void require_bijective(const Polynomial& p, const Evaluator& f, std::uint64_t n) {
  if (!bijective(f, n)) {
    throw Error(ErrorCode::kNotPermutation,
                "[" + p.to_string() + "] is not a permutation mod 2^" +
                    std::to_string(f.width().bits()));
  }
}

}  // namespace

std::string_view to_string(PermClass c) {
  switch (c) {
    case PermClass::kNotPermutation:
      return "not a permutation";
    case PermClass::kPermutationOnly:
      return "permutation (not one-stroke)";
    case PermClass::kOneStroke:
      return "one-stroke";
  }
  return "unknown";
}

bool is_permutation(const Polynomial& p) {
  const CoefficientSums s = sums(p);
  return congruent(p.coeff(1), 1, 2) && congruent(s.even, 0, 2) &&
         congruent(s.odd, 0, 2);
}

std::vector<ConditionCheck> one_stroke_conditions(const Polynomial& p) {
  const CoefficientSums s = sums(p);
  std::vector<ConditionCheck> out = {
      {"a0 odd", p.coeff(0), 1, 2, false},
      {"a1 odd", p.coeff(1), 1, 2, false},
      {"a2+a4+... even", s.even, 0, 2, false},
      {"a3+a5+... == 2*a2 (mod 4)", s.odd, 2 * p.coeff(2), 4, false},
      {"a1+a2+...+aN == 1 (mod 4)", s.all, 1, 4, false},
  };
  for (ConditionCheck& c : out) c.pass = congruent(c.lhs, c.rhs, c.modulus);
  return out;
}

bool is_one_stroke(const Polynomial& p) {
  const auto conds = one_stroke_conditions(p);
  return std::all_of(conds.begin(), conds.end(),
                     [](const ConditionCheck& c) { return c.pass; });
}

PermClass classify(const Polynomial& p) {
  if (is_one_stroke(p)) return PermClass::kOneStroke;
  if (is_permutation(p)) return PermClass::kPermutationOnly;
  return PermClass::kNotPermutation;
}

bool brute_force_is_permutation(const Polynomial& p, Width w,
                                std::uint64_t budget) {
  const std::uint64_t n = ring_size(w, budget);
  return bijective(Evaluator(p, w), n);
}

std::size_t OrbitReport::max_cycle_length() const noexcept {
  std::size_t best = 0;
  for (const auto& c : cycles) best = std::max(best, c.size());
  return best;
}

OrbitReport cycle_decomposition(const Polynomial& p, Width w,
                                std::uint64_t budget) {
  const std::uint64_t n = ring_size(w, budget);
  const Evaluator f(p, w);
  require_bijective(p, f, n);

  OrbitReport report{w, {}};
  std::vector<bool> seen(n, false);
  for (std::uint64_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint64_t> cycle;
    std::uint64_t x = start;
    do {
      seen[x] = true;
      cycle.push_back(x);
      x = f.eval64(x);
    } while (x != start);
    report.cycles.push_back(std::move(cycle));
  }
  return report;
}

bool brute_force_is_one_stroke(const Polynomial& p, Width w,
                               std::uint64_t budget) {
  const std::uint64_t n = ring_size(w, budget);
  const Evaluator f(p, w);
  require_bijective(p, f, n);
  std::uint64_t len = 1;
  for (std::uint64_t x = f.eval64(0); x != 0; x = f.eval64(x)) ++len;
  return len == n;
}

}  // namespace osp
