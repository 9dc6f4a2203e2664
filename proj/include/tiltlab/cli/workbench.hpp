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

/**
 * @file
 *
 * The line-oriented workbench file format.
 *
 *   # comment
 *   [algebra]
 *   field F2
 *   vertex 1 2 3
 *   arrow a1 1 2
 *   relation 1 a2*a1 -1 b2*b1
 *
 *   [module C]
 *   dims 1 1 2
 *   arrow a1
 *     1 0
 *
 *   [bimodule T]
 *   module C
 *   left endomorphism
 *
 *   [setup C]
 *   module C
 *   role cotilting
 *
 * A relation lists coefficient/path pairs; paths are right-to-left products
 * of arrow names. A module arrow block has dims[source] rows of dims[target]
 * entries; arrows with an empty matrix may be omitted, and an omitted arrow
 * with a nonempty shape is an error. Rationals are written p/q, F_p elements
 * as integers.
 */

#ifndef TILTLAB_CLI_WORKBENCH_HPP
#define TILTLAB_CLI_WORKBENCH_HPP

#include <string>
#include <vector>

#include "tiltlab/algebra/path_algebra.hpp"
#include "tiltlab/modrep/rep.hpp"

namespace tiltlab {

template <class Scalar>
struct NamedModule {
  std::string name;
  Rep<Scalar> module;
};

/// The left algebra of a bimodule: End(T_R), or R itself for T = R.
enum class LeftAction { endomorphism, regular };

struct BimoduleSpec {
  std::string name;
  std::string module;
  LeftAction left = LeftAction::endomorphism;

  friend bool operator==(const BimoduleSpec&, const BimoduleSpec&) = default;
};

enum class SetupRole { tilting, cotilting };

struct SetupSpec {
  std::string name;
  std::string module;
  SetupRole role = SetupRole::tilting;

  friend bool operator==(const SetupSpec&, const SetupSpec&) = default;
};

template <class Scalar>
struct WorkbenchFile {
  Quiver quiver;
  std::vector<Relation<Scalar>> relations;
  AlgebraPtr<Scalar> algebra;
  std::vector<NamedModule<Scalar>> modules;
  std::vector<BimoduleSpec> bimodules;
  std::vector<SetupSpec> setups;

  const FieldSpec& field() const { return algebra->field(); }
  /// Throw ValidationError for unknown names.
  const Rep<Scalar>& module(const std::string& name) const;
  const BimoduleSpec& bimodule(const std::string& name) const;
  const SetupSpec& setup(const std::string& name) const;
};

/// The field named in the [algebra] section. Throws SyntaxError or
/// ValidationError.
FieldSpec peek_field(const std::string& text);

/// Parses and validates; diagnostics carry "line L, column C".
template <class Scalar>
WorkbenchFile<Scalar> parse_workbench(const std::string& text);

template <class Scalar>
std::string serialize_workbench(const WorkbenchFile<Scalar>& file);

/// Same quiver, relations, modules (dims and arrow matrices) and specs.
template <class Scalar>
bool same_workbench(const WorkbenchFile<Scalar>& a, const WorkbenchFile<Scalar>& b);

/// Arrow matrix of a module at the basis element of a quiver arrow.
template <class Scalar>
const Mat<Scalar>& arrow_action(const Rep<Scalar>& m, int arrow);

}  // namespace tiltlab

#endif  // TILTLAB_CLI_WORKBENCH_HPP
