// Copyright 2026 The plstar Authors
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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plstar {

class FeatureModel;

/// Set of selected features of one model, as a bit mask over the model's
/// feature order (pre-order of the feature tree). Models are limited to
/// 64 features.
class Configuration {
 public:
  constexpr Configuration() = default;
  constexpr explicit Configuration(std::uint64_t mask) : mask_(mask) {}

  constexpr bool has(std::size_t feature) const { return (mask_ >> feature) & 1U; }
  constexpr void set(std::size_t feature, bool on = true) {
    if (on)
      mask_ |= (std::uint64_t{1} << feature);
    else
      mask_ &= ~(std::uint64_t{1} << feature);
  }
  constexpr std::uint64_t mask() const { return mask_; }
  std::size_t count() const;

  friend constexpr bool operator==(Configuration, Configuration) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Boolean guard over feature names: not / and / or / true.
///
/// Text syntax: `expr := term (('&'|'|') term)*`,
/// `term := '!' term | '(' expr ')' | name | 'true'`; '&' binds tighter than '|'.
class FeatureExpr {
 public:
  enum class Op : std::uint8_t { constant_true, feature, negation, conjunction, disjunction };

  /// The constant `true`.
  FeatureExpr();
  /// Throws Errc::parse_error.
  static FeatureExpr parse(std::string_view text);

  /// Resolves feature names against `model`; throws Errc::unknown_feature.
  FeatureExpr bind(const FeatureModel& model) const;
  bool is_bound() const { return bound_; }
  /// Requires a bound expression.
  bool evaluate(Configuration c) const;

  std::vector<std::string> feature_names() const;
  std::string to_string() const;

 private:
  struct Node {
    Op op;
    std::string name;       // feature nodes
    std::int32_t index = -1;
    std::int32_t lhs = -1;  // child node ids
    std::int32_t rhs = -1;
  };
  friend class ExprParser;

  bool eval_node(std::int32_t id, Configuration c) const;
  std::string render(std::int32_t id, int parent_prec) const;

  std::vector<Node> nodes_;
  std::int32_t root_ = 0;
  bool bound_ = false;
};

enum class FeatureKind { root, mandatory, optional, alternative, or_member };

struct Feature {
  std::string name;
  FeatureKind kind = FeatureKind::optional;
  std::int32_t parent = -1;
  /// Group label for alternative / or members; members sharing a parent and
  /// label form one group.
  std::string group;
  std::vector<std::size_t> children;
};

struct FeatureGroup {
  std::size_t parent;
  FeatureKind kind;  // alternative or or_member
  std::string label;
  std::vector<std::size_t> members;
};

/// Feature tree plus cross-tree constraints.
class FeatureModel {
 public:
  /// Maximum size for exhaustive enumeration of valid configurations.
  static constexpr std::size_t kEnumerationLimit = 30;

  /// `features` must be in pre-order with the root first; parent indices
  /// must point backwards. Throws Errc::validation_error for malformed
  /// trees (groups with fewer than two members, duplicate names, more than
  /// 64 features) and Errc::unknown_feature for constraints naming unknown
  /// features.
  FeatureModel(std::vector<Feature> features, std::vector<FeatureExpr> constraints);

  std::size_t size() const { return features_.size(); }
  const Feature& feature(std::size_t i) const { return features_[i]; }
  const std::vector<Feature>& features() const { return features_; }
  const std::vector<FeatureGroup>& groups() const { return groups_; }
  const std::vector<FeatureExpr>& constraints() const { return constraints_; }
  const std::string& root() const { return features_[0].name; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws Errc::unknown_feature.
  std::size_t require(std::string_view name) const;

  /// Root plus mandatory features whose parent is core; present in every
  /// configuration that satisfies the tree.
  bool is_core(std::size_t i) const;
  /// Features that are not core, in model order.
  std::vector<std::size_t> non_mandatory() const;

  /// Throws Errc::unknown_feature.
  Configuration configuration(const std::vector<std::string>& names) const;
  std::vector<std::string> names(Configuration c) const;
  /// Names of the selected non-mandatory features.
  std::vector<std::string> variable_names(Configuration c) const;

 private:
  std::vector<Feature> features_;
  std::vector<FeatureGroup> groups_;
  std::vector<FeatureExpr> constraints_;
  std::vector<bool> core_;
};

/// Membership test by rule checking: tree semantics (parents, mandatory
/// children, alternative = exactly one, or = at least one) plus every cross
/// constraint.
bool is_valid(const FeatureModel& fm, Configuration c);
bool is_valid(const FeatureModel& fm, const std::vector<std::string>& selected);

/// Every valid configuration, sorted by `configuration_less`. Throws
/// Errc::too_many_features above FeatureModel::kEnumerationLimit.
std::vector<Configuration> valid_configurations(const FeatureModel& fm);

/// Lexicographic order over the model's feature order where a selected
/// feature sorts before a deselected one.
bool configuration_less(Configuration a, Configuration b, std::size_t feature_count);

/// JSON document: {"features": <node>, "constraints": [<guard>...]} with
/// node = {"name", "kind", "group", "children": [<node>...]}.
FeatureModel parse_feature_model_json(std::string_view text);
FeatureModel load_feature_model(const std::string& path);

}  // namespace plstar
