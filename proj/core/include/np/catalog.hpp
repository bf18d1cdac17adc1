#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "np/decompose.hpp"

namespace np {

/// Parameter values by key; scalar parameters are one-element lists.
using Parameters = std::map<std::string, std::vector<Integer>>;

enum class FactKind {
  Denominator,                // D(Delta)
  Degree,                     // n! V(Delta)
  FacetCount,                 // faces away from the origin
  AbsDeterminant,             // |det M| of a simplex support
  LargestInvariantFactor,     // d_n of a simplex support
  HodgeNumbers,               // nonzero H(k) as "k:H,..."
  OriginInterior,             // "true" when no facet passes through the origin
  FaceInvariantFactors,       // invariant factors of every face, sorted
  OrdinaryAt,                 // facial verdict at args[0]
  OrdinaryResidues,           // "modulus:{classes}" for all-diagonal faces
  OrdinaryAllPrimesBelow,     // "true" if ordinary at every valid p < args[0]
  Dstar,                      // lcm over faces of D*, strategy index args[0]
  CertifiedAt,                // generic certificate at args[0]
};

std::string_view to_string(FactKind k) noexcept;

/// Where an expected value comes from: a published statement, an independent
/// computation, or an immediate consequence of the definitions.
enum class Source { Published, Computed, Immediate };

std::string_view to_string(Source s) noexcept;

struct Fact {
  FactKind kind;
  std::vector<Integer> args;
  std::string expected;
  Source source;
};

struct NamedFamily {
  std::string name;
  Parameters parameters;
  Support support;
  std::vector<Integer> coefficients;  // one per support point, all 1
  std::vector<Fact> facts;
};

/// Throws DegenerateInput for unknown names, missing or extra keys, or
/// out-of-range values.
NamedFamily make_family(std::string_view name, const Parameters& parameters);

std::vector<std::string_view> family_names();

/// Canonical string of a fact recomputed from the support.
std::string compute_fact(const Support& support, FactKind kind, std::span<const Integer> args);

bool verify_fact(const NamedFamily& family, const Fact& fact);

/// "x1^2*x2^-1 + 3*x2" style rendering; unit coefficients are omitted.
std::string polynomial_string(const Support& support, std::span<const Integer> coefficients);

}  // namespace np
