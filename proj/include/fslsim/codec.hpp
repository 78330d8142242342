/*
 * Copyright 2026 The fslsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fslsim/topology.hpp"

namespace fslsim {

/// One 32-bit link word; the only thing the links carry.
using Word = std::uint32_t;

enum class CodecMode {
  Decimal,  // integer part + micro-scaled fraction, two words per value
  RawBits,  // IEEE-754 bit pattern of the double, two words per value
};

std::string to_string(CodecMode mode);
std::optional<CodecMode> codec_mode_from_string(std::string_view name);

/// A routed unit: header ids plus an arbitrary word payload.
struct Message {
  CoreId src = 0;
  CoreId dst = 0;
  std::vector<Word> payload;
  friend bool operator==(const Message&, const Message&) = default;
};

/// Micro-precision scale for the fractional word: fracWord in [0, 10^6].
inline constexpr Word kFracScale = 1'000'000u;

/// Sentinel int word for values in (-1, 0): sign-magnitude "-0" (sign bit
/// set, zero magnitude). trunc can never produce it, since encodable values
/// satisfy |v| < 2^31 - 1.
inline constexpr Word kNegativeZeroWord = 0x8000'0000u;

/// Splits v at the decimal point: the integer part as a two's-complement
/// word and the fraction rounded to micro precision as an unsigned word.
/// Values in (-1, 0) use kNegativeZeroWord as the integer part.
/// Throws CodecError for non-finite v or |v| >= 2^31 - 1.
std::pair<Word, Word> encode_real(double v);

/// Inverse of encode_real, within 5e-7 of the original value.
/// Throws CodecError if frac_word > kFracScale.
double decode_real(Word int_word, Word frac_word);

/// Wire form of a message: [src, dst] header followed by the payload.
std::vector<Word> frame_message(const Message& m);

/// Inverse of frame_message. Throws CodecError on frames shorter than the
/// two header words.
Message parse_message(std::span<const Word> words);

// --- value payloads -------------------------------------------------------
//
// Workload reals travel as a 2-word payload, one full value frame being the
// 4 words [src, dst, v0, v1]. In decimal mode v0/v1 are the encode_real
// words, with the workload phase tag packed into the fraction word's spare
// high bits (the fraction needs 20 bits; the tag gets the other 12). In
// raw-bits mode the two words are the double's bit pattern and no tag is
// carried. Both modes use the same payload length, so switching modes never
// changes message timing.

inline constexpr std::size_t kValuePayloadWords = 2;
inline constexpr std::uint32_t kTagShift = 20;
inline constexpr std::uint32_t kFracMask = (1u << kTagShift) - 1;  // kFracScale < 2^20
inline constexpr std::uint32_t kMaxValueTag = (1u << (32 - kTagShift)) - 1;

/// Appends one encoded value (tag word + two value words) to out.
void append_value(std::vector<Word>& out, double v, std::uint32_t tag, CodecMode mode);

struct DecodedValue {
  double value = 0.0;
  std::uint32_t tag = 0;
};

/// Decodes the value starting at payload[offset]; advances offset past it.
DecodedValue read_value(std::span<const Word> payload, std::size_t& offset, CodecMode mode);

/// Convenience for single-value payloads.
std::vector<Word> encode_value(double v, std::uint32_t tag, CodecMode mode);
DecodedValue decode_value(std::span<const Word> payload, CodecMode mode);

}  // namespace fslsim
