//
// Copyright 2026 The bnfake Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef BNFAKE_TEXT_H_
#define BNFAKE_TEXT_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bnfake {

// Bengali full stop (U+0964), UTF-8 encoded.
inline constexpr std::string_view kDanda = "\xE0\xA5\xA4";

// Splits on runs of ASCII whitespace; never yields empty pieces.
std::vector<std::string> SplitWhitespace(std::string_view text);
std::size_t CountWhitespaceTokens(std::string_view text);

std::string JoinTokens(std::span<const std::string> tokens,
                       std::string_view separator = " ");

// Canonical composition (NFC) followed by collapsing whitespace runs to a
// single space and trimming. Throws Error on invalid UTF-8.
std::string NormalizeText(std::string_view text);

// Number of Unicode code points; text must be valid UTF-8.
std::size_t CodePointCount(std::string_view text);

// True if the token ends with '.', '?', '!' or the danda.
bool EndsSentence(std::string_view token);

// Splits after a terminator that is followed by whitespace or the end of the
// text. Sentences come back trimmed and in source order.
std::vector<std::string> SplitSentences(std::string_view text);

}  // namespace bnfake

#endif  // BNFAKE_TEXT_H_
