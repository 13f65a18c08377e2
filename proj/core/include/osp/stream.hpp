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

#ifndef OSP_STREAM_HPP_
#define OSP_STREAM_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "osp/ladder.hpp"
#include "osp/polynomial.hpp"
#include "osp/types.hpp"

namespace osp {

// Full-period residue stream x_{n+1} = f(x_n) mod 2^w for a one-stroke f.
//
// Every run of 2^w consecutive outputs contains each residue exactly once.
// Outputs are the raw w-bit state; the low k bits alone have period 2^k.
// Single owner: not safe for concurrent mutation.
class Stream {
 public:
  // Throws Error(kNotOneStroke) unless is_one_stroke(p), and
  // Error(kInvalidArgument) if seed >= 2^w.
  Stream(Polynomial p, const Residue& seed, Width w);

  // Advances one step and returns the new state.
  Residue next();
  // Positions the stream as if next() had been called n more times, via
  // the ladder (built on first use).
  void seek(const BigInt& n);

  const Polynomial& polynomial() const noexcept { return poly_; }
  Width width() const noexcept { return width_; }
  const Residue& current() const noexcept { return current_; }
  // Steps taken since the seed, mod 2^w.
  const Residue& emitted() const noexcept { return emitted_; }

  // "OSPS" record, version 1; the ladder is not stored.
  std::vector<std::uint8_t> serialize() const;
  // Throws Error(kMalformed), Error(kVersionMismatch) or Error(kNotOneStroke).
  static Stream deserialize(std::span<const std::uint8_t> bytes);

  friend bool operator==(const Stream& a, const Stream& b) {
    return a.width_ == b.width_ && a.current_ == b.current_ &&
           a.emitted_ == b.emitted_ && a.poly_ == b.poly_;
  }

 private:
  Polynomial poly_;
  Width width_;
  Evaluator eval_;
  Residue current_;
  Residue emitted_;
  std::shared_ptr<const Ladder> ladder_;
};

inline constexpr std::uint16_t kStreamFormatVersion = 1;

}  // namespace osp

#endif  // OSP_STREAM_HPP_
