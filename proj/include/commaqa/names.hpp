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

#include <cstdint>
#include <string>
#include <vector>

#include "commaqa/rng.hpp"

namespace commaqa {

/// Bundled common-English wordlist used to reject generated names that
/// collide with real words.
bool is_common_english_word(const std::string& word);
size_t common_wordlist_size();

/// Streaming generator of pronounceable nonsense names: 2-4 consonant-vowel
/// syllables with an occasional coda consonant, rejected against the bundled
/// wordlist. Also rejects duplicates within this generator instance, so every
/// emitted name is unique.
class NameGenerator {
 public:
  explicit NameGenerator(uint64_t seed) : rng_(mix64(seed, 0x6e616d65)) {}

  std::string next();

 private:
  Rng rng_;
  std::vector<std::string> used_;
};

/// n distinct nonsense names for one entity type, deterministic in seed.
/// The type tag keeps streams for different types independent.
std::vector<std::string> generate_entity_names(uint64_t seed,
                                               const std::string& entity_type,
                                               size_t n);

}  // namespace commaqa
