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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace commaqa {

/// Raised for malformed or inconsistent configuration that should have been
/// caught by recipe validation.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class Direction { kForward, kReverse, kGrouped };
enum class AnswerShape { kSingle, kList, kMap };

std::string to_string(Direction d);
std::string to_string(AnswerShape s);

/// One question phrasing declared on a relation. Materialized into the
/// QuestionTemplate of every agent whose modality the relation allows.
struct RelationPattern {
  std::string text;  // one $1 slot ("Who directed the movie $1?")
  Direction direction = Direction::kForward;
  AnswerShape shape = AnswerShape::kList;
  std::string scope_type;  // grouped only: entity type of the vacuous slot
};

struct EntityTypeDecl {
  std::string name;
  int pool_min = 1;
  int pool_max = 1;
  bool numeric = false;
  int64_t value_min = 0;
  int64_t value_max = 0;
};

struct RelationDecl {
  std::string name;
  std::string subject_type;
  std::string object_type;
  std::vector<std::string> modalities;  // subset of {text, table, kb}
  int fanout_min = 1;
  int fanout_max = 1;
  std::map<std::string, std::string> verbalization;  // modality -> "$S ... $O"
  std::vector<RelationPattern> patterns;
};

struct KBSchema {
  std::vector<EntityTypeDecl> entity_types;
  std::vector<RelationDecl> relations;

  const EntityTypeDecl* find_type(const std::string& name) const;
  const RelationDecl* find_relation(const std::string& name) const;
};

struct Fact {
  int id = 0;
  std::string relation;
  std::string subject;
  std::string object;  // numeric objects rendered as decimal text
};

/// One sampled possible world: the per-question KB instance. Immutable after
/// construction; all lookups go through the prebuilt indexes.
struct World {
  std::string world_id;
  uint64_t seed = 0;
  // type -> entity names, in schema declaration order / sampling order.
  std::vector<std::pair<std::string, std::vector<std::string>>> entities;
  std::vector<Fact> facts;
  std::map<std::string, std::string> assignment;  // relation -> agent id

  struct RelationIndex {
    std::map<std::string, std::vector<int>> by_subject;
    std::map<std::string, std::vector<int>> by_object;
    std::vector<int> all;
  };
  std::map<std::string, RelationIndex> index;

  const std::vector<std::string>& entities_of(const std::string& type) const;
  bool has_entity_anywhere(const std::string& name) const;
  void build_index();
};

struct VerbalizedFact {
  std::string agent;
  std::string text;
  int fact_id = 0;
};

}  // namespace commaqa
