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

#ifndef TILTLAB_ALGEBRA_QUIVER_HPP
#define TILTLAB_ALGEBRA_QUIVER_HPP

#include <string>
#include <utility>
#include <vector>

namespace tiltlab {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite quiver with named vertices and arrows.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  /// -1 when absent.
  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;
  /// Throws MalformedRelation on duplicate names or dangling endpoints.
  void validate() const;
  bool is_acyclic() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// A path, arrows listed in traversal order. With right-to-left products the
/// path traversing a then b is written b*a.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  static Path trivial(int vertex) { return Path{vertex, vertex, {}}; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Right-to-left label: "e1" for trivial paths, "b*a" otherwise.
std::string path_label(const Quiver& q, const Path& p);

/// A linear combination of parallel paths.
template <class Scalar>
struct Relation {
  std::vector<std::pair<Scalar, Path>> terms;
};

}  // namespace tiltlab

#endif  // TILTLAB_ALGEBRA_QUIVER_HPP
