// Copyright 2026 The CommaQA Toolkit Authors.
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace commaqa {

std::string lowercase(std::string_view s);
std::string trim(std::string_view s);

/// Collapses runs of whitespace to single spaces and trims the ends.
std::string collapse_whitespace(std::string_view s);

/// lowercase + collapse_whitespace + strip one trailing '?', '.' or '!'.
/// This is the normal form used for template matching.
std::string normalize_question(std::string_view s);

std::vector<std::string> split_whitespace(std::string_view s);

/// Splits on any non-alphanumeric character, lowercased. Used for lexical
/// overlap scoring and token-level F1.
std::vector<std::string> word_tokens(std::string_view s);

bool is_stopword(const std::string& token);

/// word_tokens with stopwords removed.
std::vector<std::string> content_tokens(std::string_view s);

size_t count_whitespace_tokens(std::string_view s);

/// Replaces every occurrence of `from` (non-empty) with `to`.
std::string replace_all(std::string s, std::string_view from, std::string_view to);

}  // namespace commaqa
