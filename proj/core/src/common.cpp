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

#include <string>

#include "osp/error.hpp"
#include "osp/op_counter.hpp"
#include "osp/types.hpp"

namespace osp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid argument";
    case ErrorCode::kParse:
      return "parse error";
    case ErrorCode::kNotPermutation:
      return "not a permutation";
    case ErrorCode::kNotOneStroke:
      return "not one-stroke";
    case ErrorCode::kBudgetExceeded:
      return "exhaustive budget exceeded";
    case ErrorCode::kMalformed:
      return "malformed record";
    case ErrorCode::kVersionMismatch:
      return "version mismatch";
  }
  return "unknown error";
}

OpCounts& thread_op_counts() noexcept {
  thread_local OpCounts counts;
  return counts;
}

Width::Width(unsigned bits) : bits_(bits) {
  if (bits == 0 || bits > kMaxWidth) {
    throw Error(ErrorCode::kInvalidArgument,
                "width must be in [1, " + std::to_string(kMaxWidth) +
                    "], got " + std::to_string(bits));
  }
  mask_ = ~Word(0);
  if (bits < kMaxWidth) mask_ >>= (kMaxWidth - bits);
}

const Residue& Width::check(const Residue& x, const char* what) const {
  if (!contains(x)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " " + x.str() + " is not below 2^" +
                    std::to_string(bits_));
  }
  return x;
}

Residue Width::reduce(const BigInt& x) const {
  const BigInt m = modulus();
  BigInt r = x % m;
  if (r < 0) r += m;
  return static_cast<Word>(r);
}

}  // namespace osp
