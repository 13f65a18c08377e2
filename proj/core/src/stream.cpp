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

#include "osp/stream.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "osp/classify.hpp"
#include "osp/error.hpp"

namespace osp {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'O', 'S', 'P', 'S'};

std::size_t residue_bytes(Width w) { return (w.bits() + 7) / 8; }

class Writer {
 public:
  void bytes(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v) {
    u8(static_cast<std::uint8_t>(v));
    u8(static_cast<std::uint8_t>(v >> 8));
  }
  void u32(std::uint32_t v) {
    for (int s = 0; s < 32; s += 8) u8(static_cast<std::uint8_t>(v >> s));
  }
  void word(Word v, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      u8(static_cast<std::uint8_t>(v & 0xff));
      v >>= 8;
    }
  }
  void bigint(const BigInt& c) {
    std::vector<std::uint8_t> mag;
    for (BigInt m = abs(c); m != 0; m >>= 8) {
      mag.push_back(static_cast<std::uint8_t>(m & 0xff));
    }
    u32(static_cast<std::uint32_t>(mag.size()));
    u8(c < 0 ? 1 : 0);
    bytes(mag);
  }
  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::kMalformed, "malformed stream record: " + why);
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  std::size_t remaining() const { return in_.size() - pos_; }

  std::span<const std::uint8_t> take(std::size_t n, const char* what) {
    if (remaining() < n) malformed(std::string("truncated ") + what);
    auto s = in_.subspan(pos_, n);
    pos_ += n;
    return s;
  }
  std::uint8_t u8(const char* what) { return take(1, what)[0]; }
  std::uint16_t u16(const char* what) {
    auto b = take(2, what);
    return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
  }
  std::uint32_t u32(const char* what) {
    auto b = take(4, what);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
    return v;
  }
  BigInt bigint() {
    const std::uint32_t len = u32("coefficient length");
    const std::uint8_t sign = u8("coefficient sign");
    if (sign > 1) malformed("bad sign byte");
    auto mag = take(len, "coefficient magnitude");
    if (len > 0 && mag.back() == 0) malformed("non-minimal coefficient magnitude");
    if (len == 0 && sign == 1) malformed("negative zero");
    BigInt v = 0;
    for (std::size_t i = len; i-- > 0;) v = (v << 8) | mag[i];
    return sign ? BigInt(-v) : v;
  }
  Word word(Width w, const char* what) {
    auto b = take(residue_bytes(w), what);
    Word v = 0;
    for (std::size_t i = b.size(); i-- > 0;) v = (v << 8) | b[i];
    if (!w.contains(v)) malformed(std::string(what) + " has bits above the width");
    return v;
  }

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

}  // namespace

Stream::Stream(Polynomial p, const Residue& seed, Width w)
    : poly_(std::move(p)), width_(w), eval_(poly_, w), current_(seed), emitted_(0) {
  if (!is_one_stroke(poly_)) {
    throw Error(ErrorCode::kNotOneStroke,
                "[" + poly_.to_string() +
                    "] is not one-stroke; its period would not be 2^w");
  }
  width_.check(seed, "seed");
}

Residue Stream::next() {
  current_ = eval_.eval_word(current_);
  emitted_ = width_.reduce(Word(emitted_ + 1));
  return current_;
}

void Stream::seek(const BigInt& n) {
  if (!ladder_) ladder_ = std::make_shared<const Ladder>(poly_, width_);
  current_ = jump(*ladder_, current_, n);
  emitted_ = width_.reduce(Word(emitted_ + width_.reduce(n)));
}

std::vector<std::uint8_t> Stream::serialize() const {
  Writer out;
  out.bytes(kMagic);
  out.u16(kStreamFormatVersion);
  out.u16(static_cast<std::uint16_t>(width_.bits()));
  out.u32(static_cast<std::uint32_t>(poly_.coeffs().size()));
  for (const BigInt& c : poly_.coeffs()) out.bigint(c);
  out.word(current_, residue_bytes(width_));
  out.word(emitted_, residue_bytes(width_));
  return out.take();
}

Stream Stream::deserialize(std::span<const std::uint8_t> bytes) {
  Reader in(bytes);
  auto magic = in.take(kMagic.size(), "magic");
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) malformed("bad magic");
  const std::uint16_t version = in.u16("version");
  if (version != kStreamFormatVersion) {
    throw Error(ErrorCode::kVersionMismatch,
                "stream record version " + std::to_string(version) +
                    ", expected " + std::to_string(kStreamFormatVersion));
  }
  const std::uint16_t bits = in.u16("width");
  if (bits == 0 || bits > kMaxWidth) malformed("width out of range");
  const Width w(bits);

  const std::uint32_t count = in.u32("coefficient count");
  // Each coefficient takes at least 5 bytes.
  if (count == 0 || count > in.remaining() / 5) malformed("bad coefficient count");
  std::vector<BigInt> coeffs;
  coeffs.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) coeffs.push_back(in.bigint());
  if (coeffs.size() > 1 && coeffs.back() == 0) malformed("trailing zero coefficient");

  const Word current = in.word(w, "current");
  const Word emitted = in.word(w, "emitted");
  if (in.remaining() != 0) malformed("trailing bytes");

  Stream s(Polynomial(std::move(coeffs)), current, w);
  s.emitted_ = emitted;
  return s;
}

}  // namespace osp
