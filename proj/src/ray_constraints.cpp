#include "fano/ray_constraints.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace fano {

const std::array<RayType, 9>& all_ray_types() {
  static const std::array<RayType, 9> types{RayType::C1, RayType::C2, RayType::D1, RayType::D2, RayType::D3,
                                            RayType::E1, RayType::E2, RayType::E34, RayType::E5};
  return types;
}

std::string to_string(RayType t) {
  switch (t) {
    case RayType::C1: return "C1";
    case RayType::C2: return "C2";
    case RayType::D1: return "D1";
    case RayType::D2: return "D2";
    case RayType::D3: return "D3";
    case RayType::E1: return "E1";
    case RayType::E2: return "E2";
    case RayType::E34: return "E34";
    case RayType::E5: return "E5";
  }
  return "?";
}

RayType parse_ray_type(std::string_view text) {
  std::string upper;
  for (char c : text) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (upper == "E3E4" || upper == "E3/E4") return RayType::E34;
  for (RayType t : all_ray_types()) {
    if (to_string(t) == upper) return t;
  }
  throw Error(ErrorKind::Usage, "unknown ray type '" + std::string(text) + "'");
}

bool is_conic_type(RayType t) { return t == RayType::C1 || t == RayType::C2; }

bool is_del_pezzo_type(RayType t) { return t == RayType::D1 || t == RayType::D2 || t == RayType::D3; }

bool is_divisorial_type(RayType t) { return !is_conic_type(t) && !is_del_pezzo_type(t); }

int mu_of(RayType t) {
  switch (t) {
    case RayType::C1: return 1;
    case RayType::C2: return 2;
    case RayType::D1: return 1;
    case RayType::D2: return 2;
    case RayType::D3: return 3;
    case RayType::E1: return 1;
    case RayType::E2: return 2;
    case RayType::E34: return 1;
    case RayType::E5: return 1;
  }
  return 0;
}

RaySpec RaySpec::of(RayType t) {
  RaySpec s;
  s.type = t;
  s.mu = mu_of(t);
  return s;
}

void RaySpec::validate() const {
  if (mu != mu_of(type)) {
    throw Error(ErrorKind::Constraint, "length " + std::to_string(mu) + " does not match type " + to_string(type));
  }
  if (type == RayType::E1 && r && *r < 2) {
    throw Error(ErrorKind::Constraint, "an E1 ray contracts onto a Fano threefold of index at least 2");
  }
  if (type == RayType::C1 && deg_delta && *deg_delta < 1) {
    throw Error(ErrorKind::Constraint, "a C1 ray has a non-empty discriminant");
  }
  if (type == RayType::C2 && deg_delta && *deg_delta != 0) {
    throw Error(ErrorKind::Constraint, "a C2 ray has an empty discriminant");
  }
  if (e && *e != 1 && *e != 2) throw Error(ErrorKind::Constraint, "twist e must be 1 or 2");
}

namespace {

const Integer& need(const std::optional<Integer>& field, const char* name, RayType t) {
  if (!field) {
    throw Error(ErrorKind::IncompleteSpec, std::string("ray of type ") + to_string(t) + " needs field " + name);
  }
  return *field;
}

Integer exact_quotient(int numerator, const Integer& r) {
  if (r <= 0 || numerator % r != 0) {
    throw Error(ErrorKind::Constraint, "index " + r.str() + " does not divide " + std::to_string(numerator));
  }
  return numerator / r;
}

}  // namespace

Integer c2_dot_H(const RaySpec& s) {
  switch (s.type) {
    case RayType::C1: return 6 + need(s.deg_delta, "deg_delta", s.type);
    case RayType::C2: return 6;
    case RayType::D1: return 12 - need(s.d2, "d2", s.type);
    case RayType::D2: return 4;
    case RayType::D3: return 3;
    case RayType::E1: {
      const Integer& r = need(s.r, "r", s.type);
      const Integer& degB = need(s.degB, "degB", s.type);
      return exact_quotient(24, r) + degB;
    }
    case RayType::E2:
    case RayType::E34: return exact_quotient(24, need(s.r, "r", s.type));
    case RayType::E5: return exact_quotient(45, need(s.r, "r", s.type));
  }
  return 0;
}

bool balance_check(const Integer& mu1, const Integer& mu2, const Integer& c2H1, const Integer& c2H2) {
  return mu2 * c2H1 + mu1 * c2H2 == 24;
}

std::vector<Integer> l3_range(const Integer& r) {
  if (r == 4) return {1};
  if (r == 3) return {2};
  if (r == 2) return {1, 2, 3, 4, 5};
  throw Error(ErrorKind::UnsupportedIndex, "index " + r.str() + " is not in {2,3,4}");
}

Rational degB_upper_bound(const Integer& r1, const Integer& mu2, const Integer& a, const Integer& L1_cubed) {
  if (a == 0) throw Error(ErrorKind::Division, "lattice index a = 0");
  const Rational base = Rational(r1) - Rational(mu2, a);
  return base * base * Rational(L1_cubed);
}

namespace {

std::set<Integer> divisor_quotients(int numerator) {
  std::set<Integer> out;
  for (int r = 1; r <= numerator; ++r) {
    if (numerator % r == 0) out.insert(numerator / r);
  }
  return out;
}

// Upper bound on c_2.H for the type, independent of a.
Integer c2_cap(RayType t) {
  if (t == RayType::C1) return 17;
  if (t == RayType::E5) return 45;
  return 24;
}

}  // namespace

std::set<Integer> c2_dot_H_candidates(RayType t, int mu_other, const Integer& a) {
  std::set<Integer> out;
  switch (t) {
    case RayType::C1:
      for (int deg_delta = 1; deg_delta <= 11; ++deg_delta) out.insert(6 + deg_delta);
      break;
    case RayType::C2: out.insert(6); break;
    case RayType::D1:
      for (int d2 = 1; d2 <= 7; ++d2) out.insert(12 - d2);
      break;
    case RayType::D2: out.insert(4); break;
    case RayType::D3: out.insert(3); break;
    case RayType::E2:
    case RayType::E34: out = divisor_quotients(24); break;
    case RayType::E5: out = divisor_quotients(45); break;
    case RayType::E1:
      for (int r = 2; r <= 4; ++r) {
        for (const Integer& L3 : l3_range(r)) {
          const Rational bound = degB_upper_bound(r, mu_other, a, L3);
          for (Integer degB = 1; Rational(degB) <= bound; ++degB) {
            const Integer value = 24 / r + degB;
            if (value <= c2_cap(t)) out.insert(value);
          }
        }
      }
      break;
  }
  return out;
}

std::set<Integer> lattice_index_candidates(int mu1, int mu2, RayType type1, RayType type2) {
  if (mu1 != mu_of(type1) || mu2 != mu_of(type2)) {
    throw Error(ErrorKind::Constraint, "ray lengths do not match the ray types");
  }
  const Integer a_max = (mu2 * c2_cap(type1) + mu1 * c2_cap(type2)) / 24;
  std::set<Integer> out;
  for (Integer a = 1; a <= a_max; ++a) {
    // -aK = mu2 H1 + mu1 H2 with H1, H2 primitive: a unit coefficient on one
    // class forces gcd(a, other coefficient) = 1.
    if (mu1 == 1 && boost::multiprecision::gcd(a, Integer(mu2)) > 1) continue;
    if (mu2 == 1 && boost::multiprecision::gcd(a, Integer(mu1)) > 1) continue;

    // When neither ray is divisorial the form is fixed by the fibre classes:
    // H_C^3 = 0, H_C^2 = (2/mu_C) l_C, H_D^2 = 0, and H_other . l = a.
    if (!is_divisorial_type(type1) && !is_divisorial_type(type2)) {
      const Rational h112 = is_conic_type(type1) ? Rational(2 * a, mu1) : Rational(0);
      const Rational h122 = is_conic_type(type2) ? Rational(2 * a, mu2) : Rational(0);
      const Rational cube_times_a3 = 3 * Rational(mu2 * mu2 * mu1) * h112 + 3 * Rational(mu2 * mu1 * mu1) * h122;
      const Rational cube = cube_times_a3 / Rational(a * a * a);
      if (!is_integral(cube) || cube <= 0 || boost::multiprecision::numerator(cube) % 2 != 0) continue;
    }

    const std::set<Integer> s1 = c2_dot_H_candidates(type1, mu2, a);
    const std::set<Integer> s2 = c2_dot_H_candidates(type2, mu1, a);
    bool balanced = false;
    for (const Integer& c1 : s1) {
      const Integer rest = 24 * a - mu2 * c1;
      if (rest > 0 && rest % mu1 == 0 && s2.count(rest / mu1)) {
        balanced = true;
        break;
      }
    }
    if (balanced) out.insert(a);
  }
  if (out.empty()) {
    throw Error(ErrorKind::Inconsistency, "no lattice index survives for (" + to_string(type1) + ", " +
                                              to_string(type2) + ")");
  }
  return out;
}

std::set<Integer> lattice_index_candidates(int mu1, int mu2, RayType type1, const std::vector<RayType>& type2_options) {
  std::set<Integer> out;
  for (RayType type2 : type2_options) {
    try {
      const std::set<Integer> found = lattice_index_candidates(mu1, mu2, type1, type2);
      out.insert(found.begin(), found.end());
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::Inconsistency) throw;
    }
  }
  if (out.empty()) {
    throw Error(ErrorKind::Inconsistency, "no lattice index survives for " + to_string(type1) + " and any listed partner");
  }
  return out;
}

}  // namespace fano
