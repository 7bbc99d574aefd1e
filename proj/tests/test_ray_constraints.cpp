#include "doctest.h"
#include "support.hpp"

#include "fano/ray_constraints.hpp"

using fano::ErrorKind;
using fano::Integer;
using fano::Rational;
using fano::RaySpec;
using fano::RayType;

namespace {

RaySpec e_ray(RayType t, int r) {
  RaySpec s = RaySpec::of(t);
  s.r = r;
  return s;
}

}  // namespace

TEST_CASE("ray lengths by type") {
  CHECK(fano::mu_of(RayType::C1) == 1);
  CHECK(fano::mu_of(RayType::C2) == 2);
  CHECK(fano::mu_of(RayType::D1) == 1);
  CHECK(fano::mu_of(RayType::D2) == 2);
  CHECK(fano::mu_of(RayType::D3) == 3);
  CHECK(fano::mu_of(RayType::E1) == 1);
  CHECK(fano::mu_of(RayType::E2) == 2);
  CHECK(fano::mu_of(RayType::E34) == 1);
  CHECK(fano::mu_of(RayType::E5) == 1);
}

TEST_CASE("ray type names parse case-insensitively") {
  CHECK(fano::parse_ray_type("e1") == RayType::E1);
  CHECK(fano::parse_ray_type("C2") == RayType::C2);
  CHECK(fano::parse_ray_type("E3E4") == RayType::E34);
  CHECK(fano::parse_ray_type("e34") == RayType::E34);
  CHECK(error_kind([] { fano::parse_ray_type("F1"); }) == ErrorKind::Usage);
  for (RayType t : fano::all_ray_types()) CHECK(fano::parse_ray_type(fano::to_string(t)) == t);
}

TEST_CASE("c2 against H by ray type") {
  RaySpec e1 = RaySpec::of(RayType::E1);
  e1.r = 4;
  e1.degB = 7;
  CHECK(fano::c2_dot_H(e1) == 13);
  CHECK(fano::c2_dot_H(RaySpec::of(RayType::D3)) == 3);
  CHECK(fano::c2_dot_H(RaySpec::of(RayType::D2)) == 4);
  CHECK(fano::c2_dot_H(RaySpec::of(RayType::C2)) == 6);
  CHECK(fano::c2_dot_H(e_ray(RayType::E5, 3)) == 15);
  CHECK(fano::c2_dot_H(e_ray(RayType::E2, 4)) == 6);
  CHECK(fano::c2_dot_H(e_ray(RayType::E34, 2)) == 12);

  RaySpec c1 = RaySpec::of(RayType::C1);
  c1.deg_delta = 5;
  CHECK(fano::c2_dot_H(c1) == 11);
  RaySpec d1 = RaySpec::of(RayType::D1);
  d1.d2 = 4;
  CHECK(fano::c2_dot_H(d1) == 8);
}

TEST_CASE("c2 against H reports missing fields and non-divisibility") {
  CHECK(error_kind([] { fano::c2_dot_H(RaySpec::of(RayType::C1)); }) == ErrorKind::IncompleteSpec);
  CHECK(error_kind([] { fano::c2_dot_H(RaySpec::of(RayType::E5)); }) == ErrorKind::IncompleteSpec);
  CHECK(error_kind([] { fano::c2_dot_H(e_ray(RayType::E5, 4)); }) == ErrorKind::Constraint);
  CHECK(error_kind([] { fano::c2_dot_H(e_ray(RayType::E2, 5)); }) == ErrorKind::Constraint);
}

TEST_CASE("property: c2 against H is positive and C1 values lie in [7, 17]") {
  for (int delta = 1; delta <= 11; ++delta) {
    RaySpec c1 = RaySpec::of(RayType::C1);
    c1.deg_delta = delta;
    const Integer v = fano::c2_dot_H(c1);
    CHECK(v >= 7);
    CHECK(v <= 17);
  }
  for (int r = 1; r <= 45; ++r) {
    for (RayType t : {RayType::E2, RayType::E34, RayType::E5}) {
      const auto kind = error_kind([&] { fano::c2_dot_H(e_ray(t, r)); });
      if (!kind) CHECK(fano::c2_dot_H(e_ray(t, r)) > 0);
    }
  }
}

TEST_CASE("ray spec invariants") {
  RaySpec e1 = RaySpec::of(RayType::E1);
  e1.r = 1;
  CHECK(error_kind([&] { e1.validate(); }) == ErrorKind::Constraint);
  RaySpec c1 = RaySpec::of(RayType::C1);
  c1.deg_delta = 0;
  CHECK(error_kind([&] { c1.validate(); }) == ErrorKind::Constraint);
  RaySpec wrong_length = RaySpec::of(RayType::C2);
  wrong_length.mu = 1;
  CHECK(error_kind([&] { wrong_length.validate(); }) == ErrorKind::Constraint);
  c1.deg_delta = 3;
  CHECK_FALSE(error_kind([&] { c1.validate(); }));
}

TEST_CASE("balance of c2 against -K") {
  CHECK(fano::balance_check(1, 1, 13, 11));
  CHECK(fano::balance_check(2, 3, 6, 3));
  CHECK_FALSE(fano::balance_check(2, 3, 6, 6));
  CHECK_FALSE(fano::balance_check(1, 1, 13, 12));
}

TEST_CASE("possible L^3 by index") {
  CHECK(fano::l3_range(4) == std::vector<Integer>{1});
  CHECK(fano::l3_range(3) == std::vector<Integer>{2});
  CHECK(fano::l3_range(2) == std::vector<Integer>{1, 2, 3, 4, 5});
  CHECK(error_kind([] { fano::l3_range(5); }) == ErrorKind::UnsupportedIndex);
  CHECK(error_kind([] { fano::l3_range(1); }) == ErrorKind::UnsupportedIndex);
}

TEST_CASE("upper bound on deg B") {
  CHECK(fano::degB_upper_bound(1, 1, 1, 4) == 0);
  CHECK(fano::degB_upper_bound(4, 2, 3, 1) == Rational(100, 9));
  CHECK(fano::degB_upper_bound(2, 1, 1, 5) == 5);
  CHECK(error_kind([] { fano::degB_upper_bound(2, 1, 0, 5); }) == ErrorKind::Division);
}

TEST_CASE("lattice index is one for the cited configurations") {
  using S = std::set<Integer>;
  CHECK(fano::lattice_index_candidates(1, 1, RayType::C1, {RayType::C1, RayType::D1, RayType::E34, RayType::E5}) == S{1});
  CHECK(fano::lattice_index_candidates(2, 2, RayType::C2, {RayType::E2, RayType::C2, RayType::D2}) == S{1});
  CHECK(fano::lattice_index_candidates(1, 3, RayType::C1, RayType::D3) == S{1});
  CHECK(fano::lattice_index_candidates(2, 2, RayType::C2, RayType::E2) == S{1});
  CHECK(fano::lattice_index_candidates(2, 2, RayType::C2, RayType::C2) == S{1});
}

TEST_CASE("pairs that cannot occur admit no lattice index") {
  // 24 a = 2 (6 + 4) and 24 a = 6 + 2 (24 / r) have no solutions.
  CHECK(error_kind([] { fano::lattice_index_candidates(2, 2, RayType::C2, RayType::D2); }) == ErrorKind::Inconsistency);
  CHECK(error_kind([] { fano::lattice_index_candidates(2, 1, RayType::C2, RayType::E34); }) ==
        ErrorKind::Inconsistency);
  CHECK(error_kind([] { fano::lattice_index_candidates(2, 2, RayType::C2, std::vector<RayType>{RayType::D2}); }) ==
        ErrorKind::Inconsistency);
}

TEST_CASE("lattice index rejects lengths that do not match the types") {
  CHECK(error_kind([] { fano::lattice_index_candidates(2, 1, RayType::C1, RayType::C1); }) == ErrorKind::Constraint);
}
