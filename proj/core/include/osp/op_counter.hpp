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

#ifndef OSP_OP_COUNTER_HPP_
#define OSP_OP_COUNTER_HPP_

#include <cstdint>

namespace osp {

// Ring operations performed on the calling thread. Evaluation and
// composition kernels bump these; they are never reset by the library.
struct OpCounts {
  std::uint64_t multiplications = 0;
  std::uint64_t additions = 0;
};

OpCounts& thread_op_counts() noexcept;

// Measures the operations performed on this thread during its lifetime.
class OpCountScope {
 public:
  OpCountScope() noexcept : start_(thread_op_counts()) {}

  OpCounts elapsed() const noexcept {
    const OpCounts& now = thread_op_counts();
    return {now.multiplications - start_.multiplications,
            now.additions - start_.additions};
  }

 private:
  OpCounts start_;
};

namespace detail {
inline void count_ops(std::uint64_t muls, std::uint64_t adds) noexcept {
  OpCounts& c = thread_op_counts();
  c.multiplications += muls;
  c.additions += adds;
}
}  // namespace detail

}  // namespace osp

#endif  // OSP_OP_COUNTER_HPP_
