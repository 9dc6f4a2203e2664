/*
 *   Copyright 2026 The tiltlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "tiltlab/cli/workbench.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "tiltlab/modrep/decompose.hpp"
#include "tiltlab/modrep/standard.hpp"

namespace tiltlab {

namespace {

struct Token {
  std::string text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

struct Section {
  std::string kind;
  std::string name;
  int line = 0;
  std::vector<Line> body;
};

std::string at(int line, int column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

std::string at(const Line& l, std::size_t token = 0) {
  return at(l.number, token < l.tokens.size() ? l.tokens[token].column : 1);
}

std::vector<Section> split_sections(const std::string& text) {
  std::vector<Section> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line line{number, {}};
    for (std::size_t i = 0; i < raw.size();) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      line.tokens.push_back(Token{raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (line.tokens.empty()) continue;
    const std::string& first = line.tokens.front().text;
    if (first.front() == '[') {
      std::string header;
      for (const auto& t : line.tokens) header += (header.empty() ? "" : " ") + t.text;
      if (header.back() != ']') throw SyntaxError(at(line) + "section header must end with ']'");
      std::istringstream h(header.substr(1, header.size() - 2));
      Section s;
      s.line = number;
      h >> s.kind >> s.name;
      std::string extra;
      if (h >> extra) throw SyntaxError(at(line) + "section header has extra words");
      if (s.kind == "algebra") {
        if (!s.name.empty()) throw SyntaxError(at(line) + "[algebra] takes no name");
      } else if (s.kind == "module" || s.kind == "bimodule" || s.kind == "setup") {
        if (s.name.empty()) throw SyntaxError(at(line) + "[" + s.kind + "] needs a name");
      } else {
        throw SyntaxError(at(line) + "unknown section [" + s.kind + "]");
      }
      out.push_back(std::move(s));
      continue;
    }
    if (out.empty()) throw SyntaxError(at(line) + "content before the first section");
    out.back().body.push_back(std::move(line));
  }
  return out;
}

bool is_row(const Line& l) {
  const char c = l.tokens.front().text.front();
  return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+';
}

void expect_arity(const Line& l, std::size_t n) {
  if (l.tokens.size() != n) {
    throw SyntaxError(at(l) + "'" + l.tokens.front().text + "' takes " + std::to_string(n - 1) + " argument(s)");
  }
}

Index parse_count(const Line& l, std::size_t i) {
  const std::string& t = l.tokens[i].text;
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw SyntaxError(at(l, i) + "'" + t + "' is not a non-negative integer");
  }
  return std::stoll(t);
}

template <class Scalar>
Scalar parse_scalar(const FieldSpec& f, const Line& l, std::size_t i) {
  try {
    return ScalarTraits<Scalar>::parse(f, l.tokens[i].text);
  } catch (const Error&) {
    throw SyntaxError(at(l, i) + "'" + l.tokens[i].text + "' is not an element of " + f.name());
  }
}

const Section& algebra_section(const std::vector<Section>& sections) {
  const Section* found = nullptr;
  for (const auto& s : sections) {
    if (s.kind != "algebra") continue;
    if (found) throw ValidationError(at(s.line, 1) + "second [algebra] section");
    found = &s;
  }
  if (!found) throw ValidationError("line 1, column 1: no [algebra] section");
  return *found;
}

FieldSpec field_of(const Section& s) {
  for (const auto& l : s.body) {
    if (l.tokens.front().text != "field") continue;
    expect_arity(l, 2);
    try {
      return FieldSpec::parse(l.tokens[1].text);
    } catch (const Error& e) {
      throw ValidationError(at(l, 1) + "bad field '" + l.tokens[1].text + "'");
    }
  }
  throw ValidationError(at(s.line, 1) + "[algebra] has no field");
}

Path parse_path(const Quiver& q, const Line& l, std::size_t i) {
  const std::string& label = l.tokens[i].text;
  std::vector<std::string> names;
  std::stringstream in(label);
  std::string part;
  while (std::getline(in, part, '*')) names.push_back(part);
  if (names.empty()) throw SyntaxError(at(l, i) + "empty path");
  Path p;
  for (auto it = names.rbegin(); it != names.rend(); ++it) {
    const int a = q.arrow_index(*it);
    if (a < 0) throw ValidationError(at(l, i) + "unknown arrow '" + *it + "' in '" + label + "'");
    if (!p.arrows.empty() && q.arrows[p.arrows.back()].target != q.arrows[a].source) {
      throw ValidationError(at(l, i) + "path '" + label + "' does not compose");
    }
    p.arrows.push_back(a);
  }
  p.source = q.arrows[p.arrows.front()].source;
  p.target = q.arrows[p.arrows.back()].target;
  return p;
}

template <class Scalar>
void read_algebra(const Section& s, WorkbenchFile<Scalar>& out) {
  const FieldSpec f = field_of(s);
  if (!ScalarTraits<Scalar>::compatible(f)) throw ValidationError(at(s.line, 1) + "field does not match the scalar type");
  for (const auto& l : s.body) {
    const std::string& key = l.tokens.front().text;
    if (key == "field") continue;
    if (key == "vertex") {
      if (l.tokens.size() < 2) throw SyntaxError(at(l) + "'vertex' needs at least one name");
      for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        if (out.quiver.vertex_index(l.tokens[i].text) >= 0) {
          throw ValidationError(at(l, i) + "duplicate vertex '" + l.tokens[i].text + "'");
        }
        out.quiver.vertices.push_back(l.tokens[i].text);
      }
    } else if (key == "arrow") {
      expect_arity(l, 4);
      if (out.quiver.arrow_index(l.tokens[1].text) >= 0) {
        throw ValidationError(at(l, 1) + "duplicate arrow '" + l.tokens[1].text + "'");
      }
      const int src = out.quiver.vertex_index(l.tokens[2].text);
      const int tgt = out.quiver.vertex_index(l.tokens[3].text);
      if (src < 0) throw ValidationError(at(l, 2) + "unknown vertex '" + l.tokens[2].text + "'");
      if (tgt < 0) throw ValidationError(at(l, 3) + "unknown vertex '" + l.tokens[3].text + "'");
      out.quiver.arrows.push_back(Arrow{l.tokens[1].text, src, tgt});
    } else if (key != "relation") {
      throw SyntaxError(at(l) + "unknown [algebra] key '" + key + "'");
    }
  }
  if (out.quiver.vertices.empty()) throw ValidationError(at(s.line, 1) + "[algebra] has no vertices");
  for (const auto& l : s.body) {
    if (l.tokens.front().text != "relation") continue;
    if (l.tokens.size() < 3 || l.tokens.size() % 2 == 0) {
      throw SyntaxError(at(l) + "'relation' takes coefficient/path pairs");
    }
    Relation<Scalar> r;
    for (std::size_t i = 1; i + 1 < l.tokens.size(); i += 2) {
      r.terms.emplace_back(parse_scalar<Scalar>(f, l, i), parse_path(out.quiver, l, i + 1));
    }
    out.relations.push_back(std::move(r));
  }
  try {
    out.algebra = build_path_algebra<Scalar>(out.quiver, out.relations, f);
  } catch (const Error& e) {
    throw ValidationError(at(s.line, 1) + e.what());
  }
}

template <class Scalar>
Rep<Scalar> read_module(const Section& s, const WorkbenchFile<Scalar>& file) {
  const Quiver& q = file.quiver;
  const FieldSpec& f = file.field();
  std::optional<std::vector<Index>> dims;
  std::vector<std::optional<Mat<Scalar>>> actions(q.arrows.size());
  std::vector<int> arrow_line(q.arrows.size(), s.line);
  for (std::size_t k = 0; k < s.body.size();) {
    const Line& l = s.body[k];
    const std::string& key = l.tokens.front().text;
    if (key == "dims") {
      expect_arity(l, static_cast<std::size_t>(q.num_vertices()) + 1);
      dims.emplace();
      for (int v = 0; v < q.num_vertices(); ++v) dims->push_back(parse_count(l, static_cast<std::size_t>(v) + 1));
      ++k;
    } else if (key == "arrow") {
      expect_arity(l, 2);
      if (!dims) throw ValidationError(at(l) + "module " + s.name + ": 'dims' must precede arrows");
      const int a = q.arrow_index(l.tokens[1].text);
      if (a < 0) throw ValidationError(at(l, 1) + "unknown arrow '" + l.tokens[1].text + "'");
      if (actions[a]) throw ValidationError(at(l, 1) + "arrow '" + l.tokens[1].text + "' given twice");
      const Index rows = (*dims)[q.arrows[a].source];
      const Index cols = (*dims)[q.arrows[a].target];
      const std::string shape = std::to_string(rows) + " x " + std::to_string(cols);
      Mat<Scalar> m = zeros<Scalar>(rows, cols);
      Index r = 0;
      ++k;
      for (; k < s.body.size() && is_row(s.body[k]); ++k, ++r) {
        const Line& row = s.body[k];
        if (r >= rows || static_cast<Index>(row.tokens.size()) != cols) {
          throw ValidationError(at(row) + "module " + s.name + ": arrow " + q.arrows[a].name + " needs a " + shape +
                                " matrix");
        }
        for (Index c = 0; c < cols; ++c) m(r, c) = parse_scalar<Scalar>(f, row, static_cast<std::size_t>(c));
      }
      if (r != rows) {
        throw ValidationError(at(l) + "module " + s.name + ": arrow " + q.arrows[a].name + " needs a " + shape +
                              " matrix");
      }
      actions[a] = std::move(m);
      arrow_line[a] = l.number;
    } else if (is_row(l)) {
      throw SyntaxError(at(l) + "matrix row outside an arrow block");
    } else {
      throw SyntaxError(at(l) + "unknown [module] key '" + key + "'");
    }
  }
  if (!dims) throw ValidationError(at(s.line, 1) + "module " + s.name + " has no dims");
  std::vector<Mat<Scalar>> arrows;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Index rows = (*dims)[q.arrows[a].source];
    const Index cols = (*dims)[q.arrows[a].target];
    if (!actions[a]) {
      if (rows * cols != 0) {
        throw ValidationError(at(s.line, 1) + "module " + s.name + ": arrow " + q.arrows[a].name + " is missing");
      }
      actions[a] = zeros<Scalar>(rows, cols);
    }
    arrows.push_back(*actions[a]);
  }
  try {
    return make_rep(file.algebra, *dims, arrows);
  } catch (const Error& e) {
    throw ValidationError(at(s.line, 1) + "module " + s.name + ": " + e.what());
  }
}

/// key -> (value, line) for the one-word keys of [bimodule] and [setup].
std::vector<std::pair<std::string, const Line*>> read_keys(const Section& s, const std::vector<std::string>& keys) {
  std::vector<std::pair<std::string, const Line*>> out(keys.size(), {"", nullptr});
  for (const auto& l : s.body) {
    const auto it = std::find(keys.begin(), keys.end(), l.tokens.front().text);
    if (it == keys.end()) throw SyntaxError(at(l) + "unknown [" + s.kind + "] key '" + l.tokens.front().text + "'");
    expect_arity(l, 2);
    auto& slot = out[static_cast<std::size_t>(it - keys.begin())];
    if (slot.second) throw ValidationError(at(l) + "'" + *it + "' given twice");
    slot = {l.tokens[1].text, &l};
  }
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!out[i].second) throw ValidationError(at(s.line, 1) + s.kind + " " + s.name + " has no '" + keys[i] + "'");
  }
  return out;
}

template <class Scalar>
void require_module(const WorkbenchFile<Scalar>& file, const std::string& name, const Line& l) {
  for (const auto& m : file.modules) {
    if (m.name == name) return;
  }
  throw ValidationError(at(l, 1) + "unknown module '" + name + "'");
}

template <class T>
const T& find_named(const std::vector<T>& items, const std::string& name, const char* what) {
  for (const auto& x : items) {
    if (x.name == name) return x;
  }
  throw ValidationError(std::string("unknown ") + what + " '" + name + "'");
}

template <class T>
void require_unique(const std::vector<T>& items, const std::string& name, int line) {
  for (const auto& x : items) {
    if (x.name == name) throw ValidationError(at(line, 1) + "duplicate name '" + name + "'");
  }
}

}  // namespace

template <class Scalar>
const Rep<Scalar>& WorkbenchFile<Scalar>::module(const std::string& name) const {
  return find_named(modules, name, "module").module;
}

template <class Scalar>
const BimoduleSpec& WorkbenchFile<Scalar>::bimodule(const std::string& name) const {
  return find_named(bimodules, name, "bimodule");
}

template <class Scalar>
const SetupSpec& WorkbenchFile<Scalar>::setup(const std::string& name) const {
  return find_named(setups, name, "setup");
}

FieldSpec peek_field(const std::string& text) { return field_of(algebra_section(split_sections(text))); }

template <class Scalar>
WorkbenchFile<Scalar> parse_workbench(const std::string& text) {
  const std::vector<Section> sections = split_sections(text);
  WorkbenchFile<Scalar> out;
  read_algebra(algebra_section(sections), out);
  for (const auto& s : sections) {
    if (s.kind != "module") continue;
    require_unique(out.modules, s.name, s.line);
    out.modules.push_back(NamedModule<Scalar>{s.name, read_module(s, out)});
  }
  for (const auto& s : sections) {
    if (s.kind == "bimodule") {
      require_unique(out.bimodules, s.name, s.line);
      const auto keys = read_keys(s, {"module", "left"});
      require_module(out, keys[0].first, *keys[0].second);
      BimoduleSpec b{s.name, keys[0].first, LeftAction::endomorphism};
      if (keys[1].first == "regular") {
        b.left = LeftAction::regular;
        if (!isomorphic(out.module(b.module), regular_module(out.algebra))) {
          throw ValidationError(at(*keys[1].second, 1) + "left regular needs the regular module, not '" + b.module +
                                "'");
        }
      } else if (keys[1].first != "endomorphism") {
        throw ValidationError(at(*keys[1].second, 1) + "left must be 'endomorphism' or 'regular'");
      }
      out.bimodules.push_back(std::move(b));
    } else if (s.kind == "setup") {
      require_unique(out.setups, s.name, s.line);
      const auto keys = read_keys(s, {"module", "role"});
      require_module(out, keys[0].first, *keys[0].second);
      SetupSpec spec{s.name, keys[0].first, SetupRole::tilting};
      if (keys[1].first == "cotilting") {
        spec.role = SetupRole::cotilting;
      } else if (keys[1].first != "tilting") {
        throw ValidationError(at(*keys[1].second, 1) + "role must be 'tilting' or 'cotilting'");
      }
      out.setups.push_back(std::move(spec));
    }
  }
  return out;
}

template <class Scalar>
const Mat<Scalar>& arrow_action(const Rep<Scalar>& m, int arrow) {
  const Algebra<Scalar>& a = m.alg();
  for (Index b = 0; b < a.dim(); ++b) {
    const Path& p = a.basis_paths()[b];
    if (p.arrows.size() == 1 && p.arrows.front() == arrow) return m.act[b];
  }
  throw ValidationError("arrow " + std::to_string(arrow) + " is not a basis element");
}

template <class Scalar>
std::string serialize_workbench(const WorkbenchFile<Scalar>& file) {
  std::ostringstream out;
  const Quiver& q = file.quiver;
  out << "[algebra]\nfield " << file.field().name() << "\nvertex";
  for (const auto& v : q.vertices) out << ' ' << v;
  out << '\n';
  for (const auto& a : q.arrows) out << "arrow " << a.name << ' ' << q.vertices[a.source] << ' ' << q.vertices[a.target] << '\n';
  for (const auto& r : file.relations) {
    out << "relation";
    for (const auto& [c, p] : r.terms) out << ' ' << to_string(c) << ' ' << path_label(q, p);
    out << '\n';
  }
  for (const auto& m : file.modules) {
    out << "\n[module " << m.name << "]\ndims";
    for (Index d : m.module.dims) out << ' ' << d;
    out << '\n';
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Mat<Scalar>& x = arrow_action(m.module, a);
      if (x.size() == 0) continue;
      out << "arrow " << q.arrows[a].name << '\n';
      for (Index r = 0; r < x.rows(); ++r) {
        out << ' ';
        for (Index c = 0; c < x.cols(); ++c) out << ' ' << to_string(x(r, c));
        out << '\n';
      }
    }
  }
  for (const auto& b : file.bimodules) {
    out << "\n[bimodule " << b.name << "]\nmodule " << b.module << "\nleft "
        << (b.left == LeftAction::regular ? "regular" : "endomorphism") << '\n';
  }
  for (const auto& s : file.setups) {
    out << "\n[setup " << s.name << "]\nmodule " << s.module << "\nrole "
        << (s.role == SetupRole::cotilting ? "cotilting" : "tilting") << '\n';
  }
  return out.str();
}

template <class Scalar>
bool same_workbench(const WorkbenchFile<Scalar>& a, const WorkbenchFile<Scalar>& b) {
  if (a.field() != b.field() || !(a.quiver == b.quiver) || a.relations.size() != b.relations.size() ||
      a.modules.size() != b.modules.size() || a.bimodules != b.bimodules || a.setups != b.setups) {
    return false;
  }
  for (std::size_t i = 0; i < a.relations.size(); ++i) {
    if (a.relations[i].terms != b.relations[i].terms) return false;
  }
  for (std::size_t i = 0; i < a.modules.size(); ++i) {
    const Rep<Scalar>& x = a.modules[i].module;
    const Rep<Scalar>& y = b.modules[i].module;
    if (a.modules[i].name != b.modules[i].name || x.dims != y.dims) return false;
    for (int k = 0; k < a.quiver.num_arrows(); ++k) {
      if (arrow_action(x, k) != arrow_action(y, k)) return false;
    }
  }
  return true;
}

#define TILTLAB_INSTANTIATE(S)                                                                  \
  template struct WorkbenchFile<S>;                                                             \
  template WorkbenchFile<S> parse_workbench<S>(const std::string&);                             \
  template std::string serialize_workbench<S>(const WorkbenchFile<S>&);                         \
  template bool same_workbench<S>(const WorkbenchFile<S>&, const WorkbenchFile<S>&);            \
  template const Mat<S>& arrow_action<S>(const Rep<S>&, int);

TILTLAB_INSTANTIATE(Fp)
TILTLAB_INSTANTIATE(Rational)

}  // namespace tiltlab
