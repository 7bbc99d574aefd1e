#pragma once

#include "fano/arith.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fano {

// E34 stands for a ray of type E3 or E4; the tables never separate them.
enum class RayType { C1, C2, D1, D2, D3, E1, E2, E34, E5 };

const std::array<RayType, 9>& all_ray_types();
std::string to_string(RayType t);
// Case-insensitive; accepts "E34" and "E3E4" for the merged tag.
RayType parse_ray_type(std::string_view text);

bool is_conic_type(RayType t);
bool is_del_pezzo_type(RayType t);
bool is_divisorial_type(RayType t);

int mu_of(RayType t);

struct RaySpec {
  RayType type = RayType::C1;
  int mu = 1;
  std::optional<Integer> r;
  std::optional<Integer> L3;
  std::optional<Integer> degB;
  std::optional<Integer> genus;
  std::optional<Integer> deg_delta;
  std::optional<Integer> d2;
  std::optional<Integer> e;
  std::optional<std::array<Integer, 2>> delta_bidegree;

  static RaySpec of(RayType t);
  // Throws a constraint error when a type invariant fails.
  void validate() const;
  bool operator==(const RaySpec& other) const = default;
};

Integer c2_dot_H(const RaySpec& s);

bool balance_check(const Integer& mu1, const Integer& mu2, const Integer& c2H1, const Integer& c2H2);

std::vector<Integer> l3_range(const Integer& r);

Rational degB_upper_bound(const Integer& r1, const Integer& mu2, const Integer& a, const Integer& L1_cubed);

// Values c_2.H can take for a ray of the given type when the lattice index is a;
// mu_other is the length of the other ray (used by the deg B bound for E1).
std::set<Integer> c2_dot_H_candidates(RayType t, int mu_other, const Integer& a);

// Lattice indices a >= 1 with -aK = mu2 H1 + mu1 H2 that survive every numerical test.
std::set<Integer> lattice_index_candidates(int mu1, int mu2, RayType type1, RayType type2);
// Union over the possible types of the second ray. A single pair may admit no
// index at all (the pair cannot occur); only an empty union is an error.
std::set<Integer> lattice_index_candidates(int mu1, int mu2, RayType type1, const std::vector<RayType>& type2_options);

}  // namespace fano
