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

#ifndef OSP_POLYNOMIAL_HPP_
#define OSP_POLYNOMIAL_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "osp/types.hpp"

namespace osp {

// f(X) = a_0 + a_1 X + ... + a_N X^N with exact integer coefficients.
//
// Coefficients are stored as given (no modular reduction); trailing zeros
// above index 0 are dropped so that the degree is well defined. The zero
// polynomial is the single coefficient 0.
class Polynomial {
 public:
  // Throws Error(kInvalidArgument) on an empty sequence.
  explicit Polynomial(std::vector<BigInt> coeffs);
  Polynomial(std::initializer_list<BigInt> coeffs)
      : Polynomial(std::vector<BigInt>(coeffs)) {}

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  // a_i, or 0 for i > degree().
  const BigInt& coeff(std::size_t i) const noexcept;

  // "a0,a1,...,aN" in decimal.
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

Polynomial make_polynomial(std::span<const BigInt> coeffs);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// A polynomial bound to a width, with coefficients reduced mod 2^w.
//
// Evaluation uses Horner's rule with wrap-around arithmetic in the machine
// word (64 bits when w <= 64, kMaxWidth bits otherwise) and masks the result
// to w bits once at the end. Both word sizes are multiples of 2^w, so the
// result equals exact evaluation reduced mod 2^w.
class Evaluator {
 public:
  Evaluator(const Polynomial& p, Width w);

  Width width() const noexcept { return width_; }
  std::size_t degree() const noexcept { return wide_.size() - 1; }

  // Throws Error(kInvalidArgument) if x >= 2^w.
  Residue operator()(const Residue& x) const;
  // Unchecked; requires x < 2^w.
  Word eval_word(const Word& x) const;
  // Fast path; requires width().narrow() and x < 2^w.
  std::uint64_t eval64(std::uint64_t x) const noexcept;

 private:
  Width width_;
  std::vector<Word> wide_;
  std::vector<std::uint64_t> narrow_;
};

// f(x) mod 2^w. Throws Error(kInvalidArgument) if x >= 2^w.
Residue eval_mod(const Polynomial& p, const Residue& x, Width w);

// (outer o inner)(X) with coefficients reduced mod 2^w and every term of
// degree >= trunc discarded. Throws Error(kInvalidArgument) if trunc == 0.
Polynomial compose_mod(const Polynomial& outer, const Polynomial& inner,
                       Width w, std::size_t trunc);

// f^j(x) mod 2^w by j successive evaluations.
Residue iterate_naive(const Polynomial& p, const Residue& x, std::uint64_t j,
                      Width w);

namespace detail {

// Truncated composition on already-reduced coefficient words. Arithmetic
// wraps in W; the caller masks.
template <class W>
std::vector<W> compose_words(std::span<const W> outer, std::span<const W> inner,
                             std::size_t trunc, const W& mask);

std::vector<Word> reduce_coeffs(const Polynomial& p, Width w);
Polynomial words_to_polynomial(std::span<const Word> words);

}  // namespace detail

}  // namespace osp

#endif  // OSP_POLYNOMIAL_HPP_
