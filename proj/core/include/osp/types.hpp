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

#ifndef OSP_TYPES_HPP_
#define OSP_TYPES_HPP_

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#ifndef OSP_MAX_WIDTH
#define OSP_MAX_WIDTH 256
#endif

namespace osp {

// Largest supported ring width. Residues live in a fixed-size word of this
// many bits.
inline constexpr unsigned kMaxWidth = OSP_MAX_WIDTH;
static_assert(kMaxWidth >= 64, "maximum width must be at least 64");

// Exact, signed, unbounded integer used for polynomial coefficients and
// iteration counts.
using BigInt = boost::multiprecision::cpp_int;

// Unsigned word of kMaxWidth bits. Arithmetic wraps modulo 2^kMaxWidth,
// which is a multiple of every supported modulus 2^w.
using Word = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    kMaxWidth, kMaxWidth, boost::multiprecision::unsigned_magnitude,
    boost::multiprecision::unchecked, void>>;

// An element of Z/2^w. The width is carried by context; see Width::contains.
using Residue = Word;

// The exponent w of the modulus 2^w, 1 <= w <= kMaxWidth.
class Width {
 public:
  // Throws Error(kInvalidArgument) outside [1, kMaxWidth].
  explicit Width(unsigned bits);

  unsigned bits() const noexcept { return bits_; }

  // 2^w - 1.
  const Word& mask() const noexcept { return mask_; }
  // 2^(w-1).
  Word half() const { return Word(1) << (bits_ - 1); }
  // 2^w as an exact integer (does not fit a Word when w == kMaxWidth).
  BigInt modulus() const { return BigInt(1) << bits_; }

  // True when the width fits the 64-bit fast path.
  bool narrow() const noexcept { return bits_ <= 64; }
  std::uint64_t mask64() const noexcept {
    return bits_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits_) - 1;
  }

  bool contains(const Residue& x) const { return (x & ~mask_) == 0; }

  // Throws Error(kInvalidArgument) when x >= 2^w. `what` names the argument.
  const Residue& check(const Residue& x, const char* what = "residue") const;

  Residue reduce(const Word& x) const { return x & mask_; }
  // Nonnegative residue of an arbitrary signed integer.
  Residue reduce(const BigInt& x) const;

  friend bool operator==(const Width& a, const Width& b) noexcept {
    return a.bits_ == b.bits_;
  }

 private:
  unsigned bits_;
  Word mask_;
};

}  // namespace osp

#endif  // OSP_TYPES_HPP_
