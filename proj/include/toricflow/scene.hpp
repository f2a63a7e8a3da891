#pragma once

#include "toricflow/cone.hpp"
#include "toricflow/lattice.hpp"
#include "toricflow/monoid.hpp"
#include "toricflow/orbitflow.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toricflow {

/// A named point, given either by torus coordinates t (one per lattice
/// direction) or directly by coordinates x_j aligned with the generators.
struct ScenePoint {
  std::optional<std::vector<Rational>> torus;
  std::optional<std::vector<Rational>> coords;

  friend bool operator==(const ScenePoint&, const ScenePoint&) = default;
};

/// Parsed scene document. Exactly one of cone_rays (sigma in N) and
/// monoid_generators (in M) is set.
struct Scene {
  std::size_t rank = 0;
  std::optional<std::vector<LatticeVector>> cone_rays;
  std::optional<std::vector<LatticeVector>> monoid_generators;
  std::map<std::string, ScenePoint> points;
  std::map<std::string, LatticeVector> subgroups;
  std::string digest;  // "sha256:<hex>" of the key-sorted compact JSON

  friend bool operator==(const Scene&, const Scene&) = default;
};

/// Malformed documents raise InvalidArgument, inconsistent ranks RankMismatch.
Scene parse_scene(const std::string& text);
Scene load_scene(const std::string& path);

/// "p/q", "p" or "-p/q"; zero denominators are rejected.
Rational parse_rational(const std::string& text);
/// Comma-separated integers, optionally wrapped in parentheses or brackets.
LatticeVector parse_vector(const std::string& text, Side side, std::size_t rank);

/// The cone the scene was given by: sigma for cone_rays, omega otherwise.
Cone input_cone(const Scene& scene);

/// cone_rays scenes yield the normal monoid of the dual cone; generator
/// scenes keep the generators in the order given.
AffineMonoid scene_monoid(const Scene& scene);

ToricPoint scene_point(const Scene& scene, const AffineMonoid& mon, const std::string& name);

/// A subgroup name from the scene, or a literal vector such as "1,0".
std::pair<std::string, LatticeVector> resolve_subgroup(const Scene& scene, const std::string& spec);

std::string sha256_hex(const std::string& data);

}  // namespace toricflow
