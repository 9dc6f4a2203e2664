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

#include "tiltlab/algebra/quiver.hpp"

#include <set>

#include "tiltlab/errors.hpp"

namespace tiltlab {

int Quiver::vertex_index(const std::string& name) const {
  for (int i = 0; i < num_vertices(); ++i) {
    if (vertices[i] == name) return i;
  }
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (int i = 0; i < num_arrows(); ++i) {
    if (arrows[i].name == name) return i;
  }
  return -1;
}

void Quiver::validate() const {
  std::set<std::string> names;
  for (const auto& v : vertices) {
    if (!names.insert(v).second) throw MalformedRelation("duplicate vertex name '" + v + "'");
  }
  std::set<std::string> arrow_names;
  for (const auto& a : arrows) {
    if (!arrow_names.insert(a.name).second) throw MalformedRelation("duplicate arrow name '" + a.name + "'");
    if (a.source < 0 || a.source >= num_vertices() || a.target < 0 || a.target >= num_vertices()) {
      throw MalformedRelation("arrow '" + a.name + "' has an undeclared endpoint");
    }
  }
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm.
  std::vector<int> indegree(vertices.size(), 0);
  for (const auto& a : arrows) ++indegree[a.target];
  std::vector<int> ready;
  for (int v = 0; v < num_vertices(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : arrows) {
      if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
    }
  }
  return seen == num_vertices();
}

std::string path_label(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + q.vertices[p.source];
  std::string out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += q.arrows[*it].name;
  }
  return out;
}

}  // namespace tiltlab
