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

#include "commaqa/names.hpp"

#include <algorithm>

namespace commaqa {
namespace {

constexpr char kOnsets[] = {'b', 'd', 'f', 'g', 'h', 'j', 'k', 'l', 'm',
                            'n', 'p', 'r', 's', 't', 'v', 'w', 'z'};
constexpr char kVowels[] = {'a', 'e', 'i', 'o', 'u'};
constexpr char kCodas[] = {'n', 'r', 'l', 's', 'm'};

}  // namespace

std::string NameGenerator::next() {
  for (;;) {
    std::string name;
    int syllables = static_cast<int>(rng_.range(2, 4));
    for (int s = 0; s < syllables; ++s) {
      name.push_back(kOnsets[rng_.below(sizeof(kOnsets))]);
      name.push_back(kVowels[rng_.below(sizeof(kVowels))]);
      if (rng_.chance(0.25)) name.push_back(kCodas[rng_.below(sizeof(kCodas))]);
    }
    if (is_common_english_word(name)) continue;
    if (std::find(used_.begin(), used_.end(), name) != used_.end()) continue;
    used_.push_back(name);
    return name;
  }
}

std::vector<std::string> generate_entity_names(uint64_t seed,
                                               const std::string& entity_type,
                                               size_t n) {
  NameGenerator gen(mix64(seed, fnv1a(entity_type)));
  std::vector<std::string> names;
  names.reserve(n);
  for (size_t i = 0; i < n; ++i) names.push_back(gen.next());
  return names;
}

}  // namespace commaqa
