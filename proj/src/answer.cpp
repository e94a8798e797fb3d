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

#include "commaqa/answer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "commaqa/strings.hpp"

namespace commaqa {

Answer Answer::Text(std::string value) {
  Answer a;
  a.kind = Kind::kText;
  a.text = std::move(value);
  return a;
}

Answer Answer::Number(double value) {
  Answer a;
  a.kind = Kind::kNumber;
  a.number = value;
  return a;
}

Answer Answer::Bool(bool value) {
  Answer a;
  a.kind = Kind::kBool;
  a.boolean = value;
  return a;
}

Answer Answer::List(std::vector<Answer> values) {
  Answer a;
  a.kind = Kind::kList;
  a.items = std::move(values);
  return a;
}

Answer Answer::Map(std::vector<std::pair<std::string, Answer>> values) {
  Answer a;
  a.kind = Kind::kMap;
  a.entries = std::move(values);
  return a;
}

bool operator==(const Answer& a, const Answer& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Answer::Kind::kText:
      return a.text == b.text;
    case Answer::Kind::kNumber:
      return a.number == b.number;
    case Answer::Kind::kBool:
      return a.boolean == b.boolean;
    case Answer::Kind::kList:
      return a.items == b.items;
    case Answer::Kind::kMap:
      return a.entries == b.entries;
  }
  return false;
}

std::string format_number(double value) {
  if (std::isfinite(value) && value == std::floor(value) &&
      std::abs(value) < 9.0e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.0f", value);
    return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

std::optional<std::string> render_scalar(const Answer& a) {
  switch (a.kind) {
    case Answer::Kind::kText:
      return a.text;
    case Answer::Kind::kNumber:
      return format_number(a.number);
    case Answer::Kind::kBool:
      return std::string(a.boolean ? "yes" : "no");
    default:
      return std::nullopt;
  }
}

std::string to_debug_string(const Answer& a) {
  switch (a.kind) {
    case Answer::Kind::kText:
    case Answer::Kind::kNumber:
    case Answer::Kind::kBool:
      return *render_scalar(a);
    case Answer::Kind::kList: {
      std::ostringstream out;
      out << "[";
      for (size_t i = 0; i < a.items.size(); ++i) {
        if (i) out << ", ";
        out << to_debug_string(a.items[i]);
      }
      out << "]";
      return out.str();
    }
    case Answer::Kind::kMap: {
      std::ostringstream out;
      out << "{";
      for (size_t i = 0; i < a.entries.size(); ++i) {
        if (i) out << ", ";
        out << a.entries[i].first << ": " << to_debug_string(a.entries[i].second);
      }
      out << "}";
      return out.str();
    }
  }
  return "";
}

std::optional<bool> as_boolean(const Answer& a) {
  if (a.kind == Answer::Kind::kBool) return a.boolean;
  if (a.kind == Answer::Kind::kText) {
    std::string t = lowercase(trim(a.text));
    if (t == "yes" || t == "true") return true;
    if (t == "no" || t == "false") return false;
  }
  return std::nullopt;
}

}  // namespace commaqa
