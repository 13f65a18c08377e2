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

#ifndef OSP_CLASSIFY_HPP_
#define OSP_CLASSIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "osp/polynomial.hpp"
#include "osp/types.hpp"

namespace osp {

enum class PermClass { kNotPermutation, kPermutationOnly, kOneStroke };

// "not a permutation", "permutation (not one-stroke)", "one-stroke".
std::string_view to_string(PermClass c);

// Coefficient tests. Both read the exact coefficients, so a polynomial
// reduced modulo 2 or 4 can change class; reduce with w >= 3 if at all.

// a_1 odd, a_2 + a_4 + ... even, a_3 + a_5 + ... even.
bool is_permutation(const Polynomial& p);

// a_0 odd, a_1 odd, a_2 + a_4 + ... even, a_3 + a_5 + ... == 2 a_2 (mod 4),
// a_1 + a_2 + ... + a_N == 1 (mod 4). Equivalent to a single 2^w-cycle at
// every width w.
bool is_one_stroke(const Polynomial& p);

PermClass classify(const Polynomial& p);

// One row of the one-stroke criterion, for reporting.
struct ConditionCheck {
  std::string name;      // e.g. "a3+a5+... == 2*a2 (mod 4)"
  BigInt lhs;            // exact left-hand side
  BigInt rhs;            // exact right-hand side
  unsigned modulus;      // 2 or 4
  bool pass;
};

// The five one-stroke conditions in order; the first three of them together
// with the odd-sum parity form the permutation criterion.
std::vector<ConditionCheck> one_stroke_conditions(const Polynomial& p);

// Default cap on ring size for the exhaustive routines below.
inline constexpr std::uint64_t kDefaultExhaustiveBudget = std::uint64_t{1} << 20;

// Exhaustive routines throw Error(kBudgetExceeded) when 2^w > budget.

// Marks all 2^w images.
bool brute_force_is_permutation(const Polynomial& p, Width w,
                                std::uint64_t budget = kDefaultExhaustiveBudget);

struct OrbitReport {
  Width width;
  // Each cycle starts at its minimal element; cycles sorted by that element.
  std::vector<std::vector<std::uint64_t>> cycles;

  std::size_t cycle_count() const noexcept { return cycles.size(); }
  std::size_t max_cycle_length() const noexcept;
};

// Throws Error(kNotPermutation) if p is not a bijection mod 2^w.
OrbitReport cycle_decomposition(const Polynomial& p, Width w,
                                std::uint64_t budget = kDefaultExhaustiveBudget);

// True iff the cycle through 0 has length 2^w. Throws
// Error(kNotPermutation) if p is not a bijection mod 2^w.
bool brute_force_is_one_stroke(const Polynomial& p, Width w,
                               std::uint64_t budget = kDefaultExhaustiveBudget);

}  // namespace osp

#endif  // OSP_CLASSIFY_HPP_
