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

#include "fslsim/codec.hpp"

#include <bit>
#include <cmath>

#include "fslsim/error.hpp"

namespace fslsim {

std::string to_string(CodecMode mode) {
  return mode == CodecMode::Decimal ? "decimal" : "rawbits";
}

std::optional<CodecMode> codec_mode_from_string(std::string_view name) {
  if (name == "decimal") return CodecMode::Decimal;
  if (name == "rawbits") return CodecMode::RawBits;
  return std::nullopt;
}

std::pair<Word, Word> encode_real(double v) {
  if (!std::isfinite(v)) throw CodecError("cannot encode non-finite value");
  constexpr double kLimit = 2147483647.0;  // 2^31 - 1
  if (std::abs(v) >= kLimit) {
    throw CodecError("value magnitude " + std::to_string(v) + " exceeds the 32-bit integer part");
  }
  const double int_part = std::trunc(v);
  const double frac = std::abs(v - int_part);
  const Word frac_word = static_cast<Word>(std::llround(frac * static_cast<double>(kFracScale)));
  Word int_word;
  if (v < 0.0 && int_part == 0.0) {
    int_word = kNegativeZeroWord;
  } else {
    int_word = std::bit_cast<Word>(static_cast<std::int32_t>(int_part));
  }
  return {int_word, frac_word};
}

double decode_real(Word int_word, Word frac_word) {
  if (frac_word > kFracScale) {
    throw CodecError("fraction word " + std::to_string(frac_word) + " exceeds scale " +
                     std::to_string(kFracScale));
  }
  const double frac = static_cast<double>(frac_word) / static_cast<double>(kFracScale);
  if (int_word == kNegativeZeroWord) return -frac;
  const auto int_part = std::bit_cast<std::int32_t>(int_word);
  return int_part < 0 ? static_cast<double>(int_part) - frac : static_cast<double>(int_part) + frac;
}

std::vector<Word> frame_message(const Message& m) {
  std::vector<Word> words;
  words.reserve(2 + m.payload.size());
  words.push_back(m.src);
  words.push_back(m.dst);
  words.insert(words.end(), m.payload.begin(), m.payload.end());
  return words;
}

Message parse_message(std::span<const Word> words) {
  if (words.size() < 2) {
    throw CodecError("truncated frame: " + std::to_string(words.size()) + " of 2 header words");
  }
  Message m;
  m.src = words[0];
  m.dst = words[1];
  m.payload.assign(words.begin() + 2, words.end());
  return m;
}

void append_value(std::vector<Word>& out, double v, std::uint32_t tag, CodecMode mode) {
  FSLSIM_CHECK(tag <= kMaxValueTag, "value tag out of range");
  if (mode == CodecMode::Decimal) {
    const auto [int_word, frac_word] = encode_real(v);
    out.push_back(int_word);
    out.push_back(frac_word | (tag << kTagShift));
  } else {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    out.push_back(static_cast<Word>(bits >> 32));
    out.push_back(static_cast<Word>(bits & 0xffff'ffffu));
  }
}

DecodedValue read_value(std::span<const Word> payload, std::size_t& offset, CodecMode mode) {
  if (offset + kValuePayloadWords > payload.size()) {
    throw CodecError("value payload truncated at word " + std::to_string(offset));
  }
  DecodedValue out;
  if (mode == CodecMode::Decimal) {
    const Word frac_word = payload[offset + 1];
    out.tag = frac_word >> kTagShift;
    out.value = decode_real(payload[offset], frac_word & kFracMask);
  } else {
    const std::uint64_t bits =
        (static_cast<std::uint64_t>(payload[offset]) << 32) | payload[offset + 1];
    out.value = std::bit_cast<double>(bits);
    out.tag = 0;
  }
  offset += kValuePayloadWords;
  return out;
}

std::vector<Word> encode_value(double v, std::uint32_t tag, CodecMode mode) {
  std::vector<Word> payload;
  payload.reserve(kValuePayloadWords);
  append_value(payload, v, tag, mode);
  return payload;
}

DecodedValue decode_value(std::span<const Word> payload, CodecMode mode) {
  std::size_t offset = 0;
  DecodedValue out = read_value(payload, offset, mode);
  if (offset != payload.size()) throw CodecError("trailing words after value payload");
  return out;
}

}  // namespace fslsim
