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

#ifndef SYLLO_TEXT_HPP
#define SYLLO_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace syllo::text {

/// ASCII-only lowercasing; bytes >= 0x80 pass through untouched so UTF-8
/// sequences are never corrupted.
std::string to_lower_ascii(std::string_view s);

std::string_view trim(std::string_view s);

/// Collapses runs of ASCII whitespace to a single space and trims the ends.
std::string collapse_whitespace(std::string_view s);

/// Splits on `delim`, dropping segments that are empty after trimming.
std::vector<std::string> split_non_empty(std::string_view s, char delim);

/// Whitespace-delimited tokens of an already-collapsed string.
std::vector<std::string> tokens(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace syllo::text

#endif  // SYLLO_TEXT_HPP
