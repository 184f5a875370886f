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

#include "plstar/fsm_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "plstar/error.hpp"

namespace plstar {
namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& msg) {
  throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

MealyMachine read_fsm(std::string_view text) {
  std::optional<MealyBuilder> builder;
  std::optional<std::string> initial;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "inputs") {
      if (builder) parse_fail(line_no, "duplicate 'inputs' line");
      Word inputs;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        Symbol a(toks[i]);
        for (auto b : inputs)
          if (a == b) parse_fail(line_no, "duplicate input '" + toks[i] + "'");
        inputs.push_back(a);
      }
      builder.emplace(std::move(inputs));
    } else if (toks[0] == "initial") {
      if (toks.size() != 2) parse_fail(line_no, "expected 'initial <state>'");
      if (initial) parse_fail(line_no, "duplicate 'initial' line");
      initial = toks[1];
    } else {
      if (toks.size() != 6 || toks[2] != "/" || toks[4] != "->")
        parse_fail(line_no, "expected '<from> <input> / <output> -> <to>'");
      if (!builder) parse_fail(line_no, "transition before 'inputs' line");
      try {
        builder->add(toks[0], Symbol(toks[1]), Symbol(toks[3]), toks[5]);
      } catch (const Error& e) {
        parse_fail(line_no, e.what());
      }
    }
  }
  if (!builder) throw Error(Errc::parse_error, "missing 'inputs' line");
  if (!initial) throw Error(Errc::parse_error, "missing 'initial' line");
  builder->add_state(*initial);
  return builder->build(*initial);
}

MealyMachine read_fsm_file(const std::filesystem::path& path) {
  try {
    return read_fsm(read_text_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string write_fsm(const MealyMachine& m) {
  MealyMachine c = canonical(m);
  std::ostringstream out;
  out << "inputs";
  for (auto a : c.inputs()) out << ' ' << a.name();
  out << "\ninitial " << c.state_name(c.initial()) << '\n';
  for (StateId s = 0; s < c.state_count(); ++s) {
    for (std::size_t i = 0; i < c.input_count(); ++i) {
      const auto& t = c.step(s, i);
      out << c.state_name(s) << ' ' << c.inputs()[i].name() << " / " << t.output.name()
          << " -> " << c.state_name(t.target) << '\n';
    }
  }
  return out.str();
}

std::string to_dot(const MealyMachine& m, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n  __start [shape=point];\n";
  for (StateId s = 0; s < m.state_count(); ++s)
    out << "  s" << s << " [label=\"" << m.state_name(s) << "\"];\n";
  out << "  __start -> s" << m.initial() << ";\n";
  for (StateId s = 0; s < m.state_count(); ++s) {
    for (std::size_t i = 0; i < m.input_count(); ++i) {
      const auto& t = m.step(s, i);
      out << "  s" << s << " -> s" << t.target << " [label=\"" << m.inputs()[i].name() << '/'
          << t.output.name() << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace plstar
