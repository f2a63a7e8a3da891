#pragma once

#include "toricflow/lattice.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toricflow {

// Serializable analysis results. Ray indices s and coordinate indices j are
// 1-based here, as printed; the library itself is 0-based.

struct FacetEntry {
  LatticeVector normal;
  std::vector<LatticeVector> rays;
  friend bool operator==(const FacetEntry&, const FacetEntry&) = default;
};

struct Geometry {
  std::string input;  // "cone_rays" or "monoid_generators"
  std::vector<LatticeVector> input_rays;
  std::vector<LatticeVector> dual_rays;
  std::vector<FacetEntry> facets;  // of the input cone
  std::optional<std::vector<LatticeVector>> generators;
  std::optional<std::vector<LatticeVector>> hilbert_basis;
  std::optional<bool> saturated;
  std::optional<LatticeVector> saturation_witness;
  friend bool operator==(const Geometry&, const Geometry&) = default;
};

struct ClassificationEntry {
  std::string subgroup;
  LatticeVector l;
  std::string kind;
  std::optional<std::vector<LatticeVector>> zero_face;
  std::optional<std::size_t> zero_face_dim;
  std::optional<std::size_t> fixed_divisor_s;
  std::optional<std::string> fixed_locus;
  Integer degree_gcd;
  bool effective = true;
  std::optional<std::size_t> invariant_trdeg;
  friend bool operator==(const ClassificationEntry&, const ClassificationEntry&) = default;
};

struct StraighteningEntry {
  std::size_t s = 0;
  LatticeVector subtorus;
  std::vector<LatticeVector> facet_rays;
  std::string fixed_locus;
  friend bool operator==(const StraighteningEntry&, const StraighteningEntry&) = default;
};

struct RootEntry {
  std::size_t s = 0;
  LatticeVector e;
  friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

struct GrowthEntry {
  std::size_t s = 0;
  long box1 = 0;
  std::size_t count1 = 0;
  long box2 = 0;
  std::size_t count2 = 0;
  friend bool operator==(const GrowthEntry&, const GrowthEntry&) = default;
};

struct RootsSection {
  long box = 0;
  std::optional<std::size_t> s;
  std::vector<RootEntry> roots;
  std::vector<GrowthEntry> growth;
  friend bool operator==(const RootsSection&, const RootsSection&) = default;
};

/// Algebra element as (exponent, coefficient) pairs in exponent order.
using ElementTerms = std::vector<std::pair<LatticeVector, Rational>>;

struct GeneratorImage {
  std::size_t j = 0;
  LatticeVector u;
  ElementTerms image;
  std::size_t nilpotency = 0;
  friend bool operator==(const GeneratorImage&, const GeneratorImage&) = default;
};

struct LndEntry {
  std::optional<std::string> subgroup;
  std::size_t s = 0;
  LatticeVector root;
  std::vector<GeneratorImage> generators;
  std::vector<std::size_t> kernel_generators;
  std::size_t kernel_rank = 0;
  friend bool operator==(const LndEntry&, const LndEntry&) = default;
};

struct FlowSection {
  std::string point;
  LatticeVector root;
  Rational parameter;
  std::vector<Rational> start;
  std::vector<Rational> image;
  friend bool operator==(const FlowSection&, const FlowSection&) = default;
};

struct LimitSection {
  std::string point;
  std::string subgroup;
  LatticeVector l;
  std::vector<Rational> start;
  std::optional<std::vector<Rational>> limit;
  friend bool operator==(const LimitSection&, const LimitSection&) = default;
};

struct CheckEntry {
  std::string name;
  bool passed = false;
  std::string detail;
  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

struct VerificationEntry {
  std::string subgroup;
  LatticeVector l;
  std::string point;
  std::vector<Rational> coords;
  std::string verdict;  // PASS, FAIL, or the error kind that stopped the check
  std::string message;
  std::optional<std::size_t> s;
  std::optional<LatticeVector> root;
  std::vector<std::size_t> invariant_generators;
  std::optional<std::vector<Rational>> limit;
  std::optional<Rational> flow_parameter;
  std::vector<CheckEntry> checks;
  friend bool operator==(const VerificationEntry&, const VerificationEntry&) = default;
};

struct DerivedFact {
  std::string statement;
  std::string label;  // always "derived consequence"
  std::string basis;  // the verification entry it rests on
  friend bool operator==(const DerivedFact&, const DerivedFact&) = default;
};

inline constexpr const char* kDerivedLabel = "derived consequence";

struct Report {
  std::string scene_digest;
  std::string command;
  std::optional<Geometry> geometry;
  std::optional<std::vector<ClassificationEntry>> classification;
  std::optional<std::vector<StraighteningEntry>> straightening;
  std::optional<RootsSection> roots;
  std::optional<std::vector<LndEntry>> witness_lnd;
  std::optional<FlowSection> flow;
  std::optional<LimitSection> limit;
  std::optional<std::vector<VerificationEntry>> verification;
  std::vector<std::string> warnings;
  std::vector<DerivedFact> derived_facts;
  friend bool operator==(const Report&, const Report&) = default;
};

/// Pretty-printed JSON with a fixed key order and a trailing newline.
std::string to_json(const Report& r);
/// Inverse of to_json; throws InvalidArgument on documents it did not write.
Report report_from_json(const std::string& text);
std::string to_text(const Report& r);

}  // namespace toricflow
