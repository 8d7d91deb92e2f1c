// Copyright 2026 The biored-kit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// UTF-8 helpers. All annotation offsets in this toolkit count Unicode code
// points, so text is decoded to UTF-32 before any offset arithmetic.

#ifndef BIORED_TEXT_H_
#define BIORED_TEXT_H_

#include <string>
#include <string_view>

namespace biored {

// Decodes UTF-8. Invalid bytes decode to U+FFFD, one per byte, so the
// result is total and deterministic.
std::u32string DecodeUtf8(std::string_view utf8);

std::string EncodeUtf8(std::u32string_view text);

// Number of code points in a UTF-8 string.
size_t CodepointLength(std::string_view utf8);

bool IsSpace(char32_t c);
bool IsAsciiPunct(char32_t c);
bool IsUpperOrDigit(char32_t c);

// ASCII-only lowercasing; other code points pass through unchanged.
std::string AsciiLower(std::string_view s);

std::string_view Trim(std::string_view s);

// True for non-empty strings of ASCII digits.
bool IsDigits(std::string_view s);

}  // namespace biored

#endif  // BIORED_TEXT_H_
