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

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace commaqa {

/// Structured agent output: a single string / number / boolean, a list of
/// answers (multiset semantics, duplicates allowed), or an ordered map from
/// strings to answers. Map entries preserve insertion order.
struct Answer {
  enum class Kind { kText, kNumber, kBool, kList, kMap };

  Kind kind = Kind::kText;
  std::string text;
  double number = 0.0;
  bool boolean = false;
  std::vector<Answer> items;                             // kList
  std::vector<std::pair<std::string, Answer>> entries;   // kMap

  static Answer Text(std::string value);
  static Answer Number(double value);
  static Answer Bool(bool value);
  static Answer List(std::vector<Answer> values);
  static Answer Map(std::vector<std::pair<std::string, Answer>> values);

  bool is_scalar() const {
    return kind == Kind::kText || kind == Kind::kNumber || kind == Kind::kBool;
  }
  bool is_list() const { return kind == Kind::kList; }
  bool is_map() const { return kind == Kind::kMap; }
  bool empty_container() const {
    return (kind == Kind::kList && items.empty()) ||
           (kind == Kind::kMap && entries.empty());
  }
};

bool operator==(const Answer& a, const Answer& b);
inline bool operator!=(const Answer& a, const Answer& b) { return !(a == b); }

/// Formats a number the way it appears in questions and answer spans:
/// integral values without a decimal point, everything else shortest-form.
std::string format_number(double value);

/// Renders a scalar answer as question text: Text/Number verbatim, Bool as
/// yes/no. Lists and maps cannot be fed to an agent; returns nullopt.
std::optional<std::string> render_scalar(const Answer& a);

/// Debug rendering of any answer (lists as [..], maps as {k: v, ..}).
std::string to_debug_string(const Answer& a);

/// Interprets an answer as a boolean, accepting Bool values and the textual
/// forms yes/no/true/false (case-insensitive). nullopt when not boolean-like.
std::optional<bool> as_boolean(const Answer& a);

}  // namespace commaqa
