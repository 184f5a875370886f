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

#include "plstar/feature_model.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <unordered_set>

#include "json.hpp"
#include "plstar/error.hpp"
#include "plstar/fsm_io.hpp"

namespace plstar {

std::size_t Configuration::count() const { return static_cast<std::size_t>(std::popcount(mask_)); }

// ---------------------------------------------------------------------------
// FeatureExpr

class ExprParser {
 public:
  ExprParser(std::string_view text, FeatureExpr& out) : text_(text), out_(out) {}

  std::int32_t parse() {
    std::int32_t id = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return id;
  }

 private:
  using Op = FeatureExpr::Op;

  // '|' has the lowest precedence, then '&', then '!'.
  std::int32_t expr() {
    std::int32_t lhs = conjunction();
    while (peek('|')) {
      ++pos_;
      lhs = add({Op::disjunction, {}, -1, lhs, conjunction()});
    }
    return lhs;
  }

  std::int32_t conjunction() {
    std::int32_t lhs = term();
    while (peek('&')) {
      ++pos_;
      lhs = add({Op::conjunction, {}, -1, lhs, term()});
    }
    return lhs;
  }

  std::int32_t term() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '!') {
      ++pos_;
      return add({Op::negation, {}, -1, term(), -1});
    }
    if (c == '(') {
      ++pos_;
      std::int32_t inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a feature name");
    std::string name(text_.substr(start, pos_ - start));
    if (name == "true") return add({Op::constant_true, {}, -1, -1, -1});
    return add({Op::feature, std::move(name), -1, -1, -1});
  }

  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::int32_t add(FeatureExpr::Node n) {
    out_.nodes_.push_back(std::move(n));
    return static_cast<std::int32_t>(out_.nodes_.size() - 1);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::parse_error, "guard '" + std::string(text_) + "' at column " +
                                       std::to_string(pos_ + 1) + ": " + msg);
  }

  std::string_view text_;
  FeatureExpr& out_;
  std::size_t pos_ = 0;
};

FeatureExpr::FeatureExpr() : nodes_{Node{Op::constant_true, {}, -1, -1, -1}}, bound_(true) {}

FeatureExpr FeatureExpr::parse(std::string_view text) {
  FeatureExpr e;
  e.nodes_.clear();
  e.bound_ = false;
  ExprParser parser(text, e);
  e.root_ = parser.parse();
  return e;
}

FeatureExpr FeatureExpr::bind(const FeatureModel& model) const {
  FeatureExpr copy = *this;
  for (auto& n : copy.nodes_)
    if (n.op == Op::feature) n.index = static_cast<std::int32_t>(model.require(n.name));
  copy.bound_ = true;
  return copy;
}

bool FeatureExpr::evaluate(Configuration c) const {
  if (!bound_) throw Error(Errc::invalid_argument, "feature expression is not bound to a model");
  return eval_node(root_, c);
}

bool FeatureExpr::eval_node(std::int32_t id, Configuration c) const {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  switch (n.op) {
    case Op::constant_true: return true;
    case Op::feature: return c.has(static_cast<std::size_t>(n.index));
    case Op::negation: return !eval_node(n.lhs, c);
    case Op::conjunction: return eval_node(n.lhs, c) && eval_node(n.rhs, c);
    case Op::disjunction: return eval_node(n.lhs, c) || eval_node(n.rhs, c);
  }
  return false;
}

std::vector<std::string> FeatureExpr::feature_names() const {
  std::vector<std::string> out;
  for (const auto& n : nodes_)
    if (n.op == Op::feature && std::find(out.begin(), out.end(), n.name) == out.end())
      out.push_back(n.name);
  return out;
}

std::string FeatureExpr::render(std::int32_t id, int parent_prec) const {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  switch (n.op) {
    case Op::constant_true: return "true";
    case Op::feature: return n.name;
    case Op::negation: return "!" + render(n.lhs, 3);
    case Op::conjunction: {
      std::string s = render(n.lhs, 2) + " & " + render(n.rhs, 2);
      return parent_prec > 2 ? "(" + s + ")" : s;
    }
    case Op::disjunction: {
      std::string s = render(n.lhs, 1) + " | " + render(n.rhs, 1);
      return parent_prec > 1 ? "(" + s + ")" : s;
    }
  }
  return {};
}

std::string FeatureExpr::to_string() const { return render(root_, 0); }

// ---------------------------------------------------------------------------
// FeatureModel

FeatureModel::FeatureModel(std::vector<Feature> features, std::vector<FeatureExpr> constraints)
    : features_(std::move(features)) {
  if (features_.empty()) throw Error(Errc::validation_error, "feature model has no root");
  if (features_.size() > 64)
    throw Error(Errc::validation_error, "feature models are limited to 64 features");
  std::unordered_set<std::string> names;
  for (std::size_t i = 0; i < features_.size(); ++i) {
    auto& f = features_[i];
    f.children.clear();
    if (!names.insert(f.name).second)
      throw Error(Errc::validation_error, "duplicate feature '" + f.name + "'");
    if (i == 0) {
      if (f.parent != -1) throw Error(Errc::validation_error, "root must not have a parent");
      f.kind = FeatureKind::root;
      continue;
    }
    if (f.parent < 0 || static_cast<std::size_t>(f.parent) >= i)
      throw Error(Errc::validation_error, "feature '" + f.name + "' must follow its parent");
    if (f.kind == FeatureKind::root)
      throw Error(Errc::validation_error, "only the first feature may be the root");
    features_[static_cast<std::size_t>(f.parent)].children.push_back(i);
  }

  std::map<std::tuple<std::size_t, int, std::string>, std::size_t> group_ids;
  for (std::size_t i = 1; i < features_.size(); ++i) {
    const auto& f = features_[i];
    if (f.kind != FeatureKind::alternative && f.kind != FeatureKind::or_member) continue;
    auto key = std::make_tuple(static_cast<std::size_t>(f.parent), static_cast<int>(f.kind), f.group);
    auto [it, inserted] = group_ids.try_emplace(key, groups_.size());
    if (inserted) groups_.push_back({static_cast<std::size_t>(f.parent), f.kind, f.group, {}});
    groups_[it->second].members.push_back(i);
  }
  for (const auto& g : groups_) {
    if (g.members.size() < 2)
      throw Error(Errc::validation_error,
                  "group under '" + features_[g.parent].name + "' needs at least two members");
  }

  core_.assign(features_.size(), false);
  core_[0] = true;
  for (std::size_t i = 1; i < features_.size(); ++i) {
    const auto& f = features_[i];
    core_[i] = f.kind == FeatureKind::mandatory && core_[static_cast<std::size_t>(f.parent)];
  }

  for (auto& c : constraints) constraints_.push_back(c.bind(*this));
}

std::optional<std::size_t> FeatureModel::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < features_.size(); ++i)
    if (features_[i].name == name) return i;
  return std::nullopt;
}

std::size_t FeatureModel::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw Error(Errc::unknown_feature, "unknown feature '" + std::string(name) + "'");
  return *i;
}

bool FeatureModel::is_core(std::size_t i) const { return core_[i]; }

std::vector<std::size_t> FeatureModel::non_mandatory() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < features_.size(); ++i)
    if (!core_[i]) out.push_back(i);
  return out;
}

Configuration FeatureModel::configuration(const std::vector<std::string>& names) const {
  Configuration c;
  for (const auto& n : names) c.set(require(n));
  return c;
}

std::vector<std::string> FeatureModel::names(Configuration c) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < features_.size(); ++i)
    if (c.has(i)) out.push_back(features_[i].name);
  return out;
}

std::vector<std::string> FeatureModel::variable_names(Configuration c) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < features_.size(); ++i)
    if (c.has(i) && !core_[i]) out.push_back(features_[i].name);
  return out;
}

bool is_valid(const FeatureModel& fm, Configuration c) {
  if (c.mask() >> fm.size()) return false;
  if (!c.has(0)) return false;
  for (std::size_t i = 1; i < fm.size(); ++i) {
    const auto& f = fm.feature(i);
    bool parent_on = c.has(static_cast<std::size_t>(f.parent));
    if (c.has(i) && !parent_on) return false;
    if (f.kind == FeatureKind::mandatory && parent_on && !c.has(i)) return false;
  }
  for (const auto& g : fm.groups()) {
    std::size_t on = 0;
    for (auto m : g.members) on += c.has(m);
    if (!c.has(g.parent)) continue;  // members already forced off above
    if (g.kind == FeatureKind::alternative && on != 1) return false;
    if (g.kind == FeatureKind::or_member && on == 0) return false;
  }
  for (const auto& e : fm.constraints())
    if (!e.evaluate(c)) return false;
  return true;
}

bool is_valid(const FeatureModel& fm, const std::vector<std::string>& selected) {
  return is_valid(fm, fm.configuration(selected));
}

namespace {

using Masks = std::vector<std::uint64_t>;

Masks cross(const Masks& a, const Masks& b) {
  Masks out;
  out.reserve(a.size() * b.size());
  for (auto x : a)
    for (auto y : b) out.push_back(x | y);
  return out;
}

// All subtree selections of `node`, given that `node` itself is selected.
Masks subtree_options(const FeatureModel& fm, std::size_t node) {
  Masks result{std::uint64_t{1} << node};
  std::vector<bool> grouped_done(fm.groups().size(), false);
  for (auto child : fm.feature(node).children) {
    const auto& f = fm.feature(child);
    if (f.kind == FeatureKind::mandatory) {
      result = cross(result, subtree_options(fm, child));
    } else if (f.kind == FeatureKind::optional) {
      Masks opts = subtree_options(fm, child);
      opts.push_back(0);
      result = cross(result, opts);
    } else {
      for (std::size_t g = 0; g < fm.groups().size(); ++g) {
        const auto& group = fm.groups()[g];
        if (grouped_done[g] || group.parent != node ||
            std::find(group.members.begin(), group.members.end(), child) == group.members.end())
          continue;
        grouped_done[g] = true;
        Masks opts;
        if (group.kind == FeatureKind::alternative) {
          for (auto m : group.members) {
            Masks sub = subtree_options(fm, m);
            opts.insert(opts.end(), sub.begin(), sub.end());
          }
        } else {
          const std::size_t n = group.members.size();
          for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
            Masks acc{0};
            for (std::size_t k = 0; k < n; ++k)
              if ((subset >> k) & 1U) acc = cross(acc, subtree_options(fm, group.members[k]));
            opts.insert(opts.end(), acc.begin(), acc.end());
          }
        }
        result = cross(result, opts);
      }
    }
  }
  return result;
}

}  // namespace

std::vector<Configuration> valid_configurations(const FeatureModel& fm) {
  if (fm.size() > FeatureModel::kEnumerationLimit)
    throw Error(Errc::too_many_features,
                "feature model has " + std::to_string(fm.size()) + " features; enumeration limit is " +
                    std::to_string(FeatureModel::kEnumerationLimit));
  std::vector<Configuration> out;
  for (auto mask : subtree_options(fm, 0)) {
    Configuration c(mask);
    bool ok = true;
    for (const auto& e : fm.constraints()) ok = ok && e.evaluate(c);
    if (ok) out.push_back(c);
  }
  const std::size_t n = fm.size();
  std::sort(out.begin(), out.end(),
            [n](Configuration a, Configuration b) { return configuration_less(a, b, n); });
  return out;
}

bool configuration_less(Configuration a, Configuration b, std::size_t feature_count) {
  for (std::size_t i = 0; i < feature_count; ++i)
    if (a.has(i) != b.has(i)) return a.has(i);
  return false;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

FeatureKind parse_kind(const std::string& kind, const std::string& name) {
  if (kind == "mandatory") return FeatureKind::mandatory;
  if (kind == "optional") return FeatureKind::optional;
  if (kind == "alternative") return FeatureKind::alternative;
  if (kind == "or") return FeatureKind::or_member;
  throw Error(Errc::parse_error, "feature '" + name + "' has unknown kind '" + kind + "'");
}

void collect(const nlohmann::json& node, std::int32_t parent, std::vector<Feature>& out) {
  if (!node.is_object() || !node.contains("name") || !node["name"].is_string())
    throw Error(Errc::parse_error, "feature node without a string 'name'");
  Feature f;
  f.name = node["name"].get<std::string>();
  f.parent = parent;
  if (parent < 0) {
    f.kind = FeatureKind::root;
  } else {
    f.kind = parse_kind(node.value("kind", std::string("optional")), f.name);
    f.group = node.value("group", std::string());
  }
  auto self = static_cast<std::int32_t>(out.size());
  out.push_back(std::move(f));
  if (node.contains("children")) {
    if (!node["children"].is_array())
      throw Error(Errc::parse_error, "'children' of '" + out.back().name + "' must be an array");
    for (const auto& child : node["children"]) collect(child, self, out);
  }
}

}  // namespace

FeatureModel parse_feature_model_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("feature model JSON: ") + e.what());
  }
  if (!doc.contains("features")) throw Error(Errc::parse_error, "feature model lacks 'features'");
  std::vector<Feature> features;
  collect(doc["features"], -1, features);
  std::vector<FeatureExpr> constraints;
  if (doc.contains("constraints")) {
    for (const auto& c : doc["constraints"]) {
      if (!c.is_string()) throw Error(Errc::parse_error, "constraints must be strings");
      constraints.push_back(FeatureExpr::parse(c.get<std::string>()));
    }
  }
  return FeatureModel(std::move(features), std::move(constraints));
}

FeatureModel load_feature_model(const std::string& path) {
  try {
    return parse_feature_model_json(read_text_file(path));
  } catch (const Error& e) {
    if (e.code() == Errc::io_error) throw;
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace plstar
