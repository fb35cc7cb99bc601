#pragma once

#include "fewdist/orthopoly.hpp"

#include <optional>
#include <string>

namespace fewdist {

enum class Method {
  Harmonic,
  Conditional,
  RefinedGeneral,
  Ekr,
  ForbiddenIntersection,
  SingleMissingDistance,
  JohnsonPacking,
  Delsarte,
  Determinant,
  LrsFallback,
  Spherical,
};

const char* to_string(Method m);

struct BoundResult {
  Method method = Method::Harmonic;
  bool applicable = false;
  std::optional<Rational> value;
  std::optional<Integer> floored;
  std::string certificate;

  static BoundResult make(Method m, const Rational& v, std::string cert);
  static BoundResult not_applicable(Method m, std::string cert);
};

BoundResult harmonic_bound(const SpaceSpec& space, const DistanceSet& d);
BoundResult bm_conditional_bound(const SpaceSpec& space, const DistanceSet& d);
BoundResult refined_general_bound(int n, int w, int s);
BoundResult ekr_bound(int n, int w, int t);
BoundResult forbidden_intersection_bound(int n, int w, int l);
BoundResult single_missing_distance_value(int n, int w);
BoundResult johnson_packing_bound(int n, int w, int s);
Integer lower_bound_value(const SpaceSpec& space, int s);

}  // namespace fewdist
