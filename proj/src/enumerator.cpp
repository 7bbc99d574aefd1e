#include "fano/enumerator.hpp"

#include "fano/chern_calculus.hpp"
#include "fano/table_oracle.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace fano {

std::vector<RayType> SolutionRecord::ray_types() const {
  std::vector<RayType> out;
  for (const auto& ray : rays) out.push_back(ray.type);
  return out;
}

bool table_id_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& id) {
    const auto dash = id.find('-');
    if (dash == std::string::npos) return std::make_tuple(0L, 0L, id);
    try {
      return std::make_tuple(std::stol(id.substr(0, dash)), std::stol(id.substr(dash + 1)), id);
    } catch (const std::exception&) {
      return std::make_tuple(0L, 0L, id);
    }
  };
  return split(a) < split(b);
}

void canonical_sort(std::vector<SolutionRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const SolutionRecord& x, const SolutionRecord& y) {
    if (x.kx3 != y.kx3) return x.kx3 < y.kx3;
    return table_id_less(x.table_id, y.table_id);
  });
}

std::string blowup_description(const RaySpec& e1) {
  if (e1.type != RayType::E1 || !e1.r || !e1.L3 || !e1.degB || !e1.genus) {
    throw Error(ErrorKind::IncompleteSpec, "blowup description needs an E1 ray with r, L3, degB and genus");
  }
  std::string target;
  if (*e1.r == 4) {
    target = "P^3";
  } else if (*e1.r == 3) {
    target = "Q";
  } else {
    target = "V_" + e1.L3->str();
  }
  const Integer& g = *e1.genus;
  const Integer& deg = *e1.degB;
  std::string curve;
  if (g == 0 && deg == 1) {
    curve = "a line";
  } else if (g == 0 && deg == 2) {
    curve = "a conic";
  } else if (g == 0 && deg == 3) {
    curve = "a cubic rational curve";
  } else if (g == 0) {
    curve = "a rational curve of degree " + deg.str();
  } else if (g == 1) {
    curve = "an elliptic curve of degree " + deg.str();
  } else {
    curve = "a curve of genus " + g.str() + " and degree " + deg.str();
  }
  return "blowup of " + target + " along " + curve;
}

void check_record(const SolutionRecord& record) {
  const Integer cube = triple_product(record.form, record.antican, record.antican, record.antican);
  if (cube != record.kx3) {
    throw Error(ErrorKind::Inconsistency, "(-K)^3 from the form is " + cube.str() + ", record has " + record.kx3.str());
  }
  if (record.kx3 <= 0 || record.kx3 > 72 || record.kx3 % 2 != 0) {
    throw Error(ErrorKind::Parity, "(-K)^3 = " + record.kx3.str() + " is not an even value in (0, 72]");
  }
  if (record.c2_basis.size() != record.antican.coords().size()) {
    throw Error(ErrorKind::Dimension, "c_2 values do not match the rank");
  }
  Integer balance = 0;
  for (size_t i = 0; i < record.c2_basis.size(); ++i) balance += record.antican.coords()[i] * record.c2_basis[i];
  if (balance != 24) throw Error(ErrorKind::Inconsistency, "-K . c_2 = " + balance.str() + ", expected 24");
  if (record.genus && *record.genus < 0) throw Error(ErrorKind::Constraint, "negative genus");
  for (const auto& ray : record.rays) {
    ray.validate();
    if (ray.genus && *ray.genus < 0) throw Error(ErrorKind::Constraint, "negative genus");
  }
}

namespace {

int type_rank(RayType t) {
  const auto& all = all_ray_types();
  return static_cast<int>(std::find(all.begin(), all.end(), t) - all.begin());
}

// Sort key: type tag, then larger (r, deg B, L^3) first among rays of the same type.
bool ray_before(const RaySpec& x, const RaySpec& y) {
  if (x.type != y.type) return type_rank(x.type) < type_rank(y.type);
  auto key = [](const RaySpec& s) {
    return std::make_tuple(s.r.value_or(0), s.degB.value_or(0), s.L3.value_or(0));
  };
  return key(x) > key(y);
}

Integer square(const Integer& x) { return x * x; }

// (-K)^2 . H_i for the basis class i (0-based).
Integer antican_sq_dot(const TrilinearForm& form, const DivisorClass& antican, int i) {
  std::vector<Integer> unit(static_cast<size_t>(form.rho()), 0);
  unit[static_cast<size_t>(i)] = 1;
  return triple_product(form, antican, antican, DivisorClass(unit));
}

// deg Delta = 12 - (-K)^2 . H for a conic bundle over P^2, where K_S . line = -3.
Integer discriminant_degree(const Integer& kx_sq_dot_h) {
  return conic_bundle_ksq_dot_pullback(-3, 0) - kx_sq_dot_h;
}

bool discriminant_admissible(const RaySpec& c) {
  if (c.type == RayType::C1) return *c.deg_delta >= 1 && *c.deg_delta <= 11;
  return *c.deg_delta == 0;
}

bool fibre_degree_admissible(const RaySpec& d) {
  if (d.type == RayType::D1) return *d.d2 >= 1 && *d.d2 <= 7;
  if (d.type == RayType::D2) return *d.d2 == 8;
  return *d.d2 == 9;
}

struct Draft {
  std::vector<RaySpec> rays;  // solver order: the basis class H_i belongs to rays[i]
  TrilinearForm form;
  std::vector<std::string> descriptions;
  std::optional<std::string> char_note;
  bool primitive = false;
};

std::string lookup_id(const SolutionRecord& record) {
  return lookup_table_id(record, ground_truth(record.rho, false));
}

// Completes a rank-2 draft: computes (-K)^3, genera and c_2 values, applies the
// parity, genus and balance tests, and moves to canonical ray order.
std::optional<SolutionRecord> finish_rank2(Draft draft) {
  const DivisorClass antican = anticanonical_class(draft.rays[0].mu, draft.rays[1].mu, 2);
  const Integer kx3 = triple_product(draft.form, antican, antican, antican);
  if (kx3 <= 0 || kx3 % 2 != 0) return std::nullopt;

  std::vector<Integer> c2;
  try {
    for (auto& ray : draft.rays) {
      if (ray.type == RayType::E1) {
        ray.genus = genus_from_blowup(kx3, target_antican_cube(*ray.r, *ray.L3), *ray.r, *ray.degB);
      }
      ray.validate();
      c2.push_back(c2_dot_H(ray));
    }
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::Constraint || err.kind() == ErrorKind::Parity) return std::nullopt;
    throw;
  }
  if (!balance_check(draft.rays[0].mu, draft.rays[1].mu, c2[0], c2[1])) return std::nullopt;

  std::vector<int> order{0, 1};
  if (ray_before(draft.rays[1], draft.rays[0])) order = {1, 0};

  SolutionRecord record;
  record.rho = 2;
  for (int i : order) {
    record.rays.push_back(draft.rays[static_cast<size_t>(i)]);
    record.c2_basis.push_back(c2[static_cast<size_t>(i)]);
  }
  record.form = draft.form.permuted(order);
  record.antican = anticanonical_class(record.rays[0].mu, record.rays[1].mu, 2);
  record.kx3 = kx3;
  for (const auto& ray : record.rays) {
    if (ray.type == RayType::E1) {
      if (!record.genus) record.genus = ray.genus;
      record.descriptions.push_back(blowup_description(ray));
    }
  }
  if (record.descriptions.empty()) record.descriptions = draft.descriptions;
  record.char_note = draft.char_note;
  record.primitive = draft.primitive;
  check_record(record);
  record.table_id = lookup_id(record);
  return record;
}

RaySpec e1_ray(const Integer& r, const Integer& L3, const Integer& degB) {
  RaySpec s = RaySpec::of(RayType::E1);
  s.r = r;
  s.L3 = L3;
  s.degB = degB;
  return s;
}

}  // namespace

std::vector<SolutionRecord> solve_E1_C(RayType sub) {
  if (!is_conic_type(sub)) throw Error(ErrorKind::Usage, "E1-C sub-case must be C1 or C2");
  const int mu2 = mu_of(sub);
  std::vector<SolutionRecord> out;
  for (int r1 = 2; r1 <= 4; ++r1) {
    for (const Integer& L1 : l3_range(r1)) {
      for (Integer degB = 1; degB <= 24; ++degB) {
        for (Integer deg_delta = 0; deg_delta <= 12; ++deg_delta) {
          if ((sub == RayType::C1) != (deg_delta >= 1)) continue;
          // (A) 18 = mu2 (24/r1 + deg B) + deg Delta
          if (mu2 * (Rational(24, r1) + Rational(degB)) + Rational(deg_delta) != 18) continue;
          // (B) (r1 - mu2) L1^3 = (8 - deg Delta) / mu2^2
          const Integer h112 = (r1 - mu2) * L1;
          if (Rational(h112) != Rational(8 - deg_delta, mu2 * mu2)) continue;
          // (C) (r1 - mu2)^2 L1^3 - deg B = 2 / mu2
          const Integer h122 = square(r1 - mu2) * L1 - degB;
          if (Rational(h122) != Rational(2, mu2)) continue;
          if (Rational(degB) > degB_upper_bound(r1, mu2, 1, L1)) continue;

          RaySpec c = RaySpec::of(sub);
          c.deg_delta = deg_delta;
          if (sub == RayType::C1 && !discriminant_admissible(c)) continue;
          Draft draft{{e1_ray(r1, L1, degB), c}, TrilinearForm::rank2(L1, h112, h122, 0), {}, {}, false};
          if (auto record = finish_rank2(std::move(draft))) out.push_back(std::move(*record));
        }
      }
    }
  }
  canonical_sort(out);
  return out;
}

std::vector<SolutionRecord> solve_E1_D(RayType sub) {
  if (!is_del_pezzo_type(sub)) throw Error(ErrorKind::Usage, "E1-D sub-case must be D1, D2 or D3");
  const int mu2 = mu_of(sub);
  std::vector<SolutionRecord> out;
  for (int r1 = 2; r1 <= 4; ++r1) {
    for (const Integer& L1 : l3_range(r1)) {
      for (Integer degB = 1; degB <= 24; ++degB) {
        for (Integer d2 = 1; d2 <= 9; ++d2) {
          RaySpec d = RaySpec::of(sub);
          d.d2 = d2;
          if (!fibre_degree_admissible(d)) continue;
          // (A) 12 = mu2 (24/r1 + deg B) - d2
          if (mu2 * (Rational(24, r1) + Rational(degB)) - Rational(d2) != 12) continue;
          // (B) (r1 - mu2) L1^3 = d2 / mu2^2
          const Integer h112 = (r1 - mu2) * L1;
          if (Rational(h112) != Rational(d2, mu2 * mu2)) continue;
          // (C) (r1 - mu2)^2 L1^3 - deg B = 0
          if (square(r1 - mu2) * L1 - degB != 0) continue;
          if (Rational(degB) > degB_upper_bound(r1, mu2, 1, L1)) continue;

          Draft draft{{e1_ray(r1, L1, degB), d}, TrilinearForm::rank2(L1, h112, 0, 0), {}, {}, false};
          if (auto record = finish_rank2(std::move(draft))) out.push_back(std::move(*record));
        }
      }
    }
  }
  canonical_sort(out);
  return out;
}

namespace {

// Data of a divisorial ray contracting D to a point, with -K = s H - c D and D . H = 0.
struct PointContraction {
  int numerator;       // c_2 . H = numerator / r
  Rational d_coeff;    // c
  Integer d_cube;      // D^3
  Integer self_square; // (K_D - D|_D)^2 on D
  std::optional<Integer> twist;
};

PointContraction point_contraction(RayType t) {
  switch (t) {
    case RayType::E2: return {24, Rational(2), 1, 4, Integer(1)};       // D = P^2, O_D(D) = O(-1)
    case RayType::E34: return {24, Rational(1), 2, 2, std::nullopt};    // D a quadric, O_D(D) = O_D(-1)
    case RayType::E5: return {45, Rational(1, 2), 4, 1, Integer(2)};    // D = P^2, O_D(D) = O(-2)
    default: break;
  }
  throw Error(ErrorKind::Usage, "not a point contraction type: " + to_string(t));
}

// The multiple s with -K = s H - c D; E5 targets carry a half-integral s.
Rational point_target_multiple(RayType t, const Integer& r) {
  return t == RayType::E5 ? Rational(r, 2) : Rational(r);
}

std::vector<Integer> positive_divisors(int n) {
  std::vector<Integer> out;
  for (int k = 1; k <= n; ++k) {
    if (n % k == 0) out.push_back(k);
  }
  return out;
}

std::vector<SolutionRecord> solve_E1_E1() {
  std::vector<SolutionRecord> out;
  for (int r1 = 2; r1 <= 4; ++r1) {
    for (const Integer& L1 : l3_range(r1)) {
      for (Integer degB1 = 1; degB1 <= 24; ++degB1) {
        for (int r2 = 2; r2 <= 4; ++r2) {
          for (const Integer& L2 : l3_range(r2)) {
            for (Integer degB2 = 1; degB2 <= 24; ++degB2) {
              if (std::make_tuple(Integer(r1), degB1, L1) < std::make_tuple(Integer(r2), degB2, L2)) continue;
              // (A) 24 = 24/r1 + deg B1 + 24/r2 + deg B2
              if (Rational(24, r1) + Rational(degB1) + Rational(24, r2) + Rational(degB2) != 24) continue;
              // (B) H1^2 H2 = (r1 - 1) L1^3 = (r2 - 1)^2 L2^3 - deg B2
              const Integer h112 = (r1 - 1) * L1;
              if (h112 != square(r2 - 1) * L2 - degB2) continue;
              // (C) H1 H2^2 = (r2 - 1) L2^3 = (r1 - 1)^2 L1^3 - deg B1
              const Integer h122 = (r2 - 1) * L2;
              if (h122 != square(r1 - 1) * L1 - degB1) continue;
              if (h112 <= 0 || h122 <= 0) continue;
              if (Rational(degB1) > degB_upper_bound(r1, 1, 1, L1)) continue;
              if (Rational(degB2) > degB_upper_bound(r2, 1, 1, L2)) continue;

              Draft draft{{e1_ray(r1, L1, degB1), e1_ray(r2, L2, degB2)},
                          TrilinearForm::rank2(L1, h112, h122, L2), {}, {}, false};
              if (auto record = finish_rank2(std::move(draft))) out.push_back(std::move(*record));
            }
          }
        }
      }
    }
  }
  canonical_sort(out);
  return out;
}

}  // namespace

std::vector<SolutionRecord> solve_E1_E(RayType sub) {
  if (sub == RayType::E1) return solve_E1_E1();
  const PointContraction pc = point_contraction(sub);
  const int mu2 = mu_of(sub);
  std::vector<SolutionRecord> out;
  for (int r1 = 2; r1 <= 4; ++r1) {
    for (const Integer& L1 : l3_range(r1)) {
      for (Integer degB = 1; degB <= 24; ++degB) {
        for (const Integer& r2 : positive_divisors(pc.numerator)) {
          // (A) 24 = mu2 (24/r1 + deg B) + c_2 . H2
          if (mu2 * (Rational(24, r1) + Rational(degB)) + Rational(pc.numerator, r2) != 24) continue;
          const Rational t = (point_target_multiple(sub, r2) - 1) / mu2;
          for (Integer L2 = 1; L2 <= 24; ++L2) {
            const Integer h112 = (r1 - mu2) * L1;
            const Integer h122 = square(r1 - mu2) * L1 - degB;
            // (B) t^2 L2^3 = (r1 - mu2) L1^3
            if (t * t * Rational(L2) != Rational(h112)) continue;
            // (C) t L2^3 = (r1 - mu2)^2 L1^3 - deg B
            if (t * Rational(L2) != Rational(h122)) continue;
            if (h112 <= 0 || h122 <= 0) continue;
            if (Rational(degB) > degB_upper_bound(r1, mu2, 1, L1)) continue;

            RaySpec e = RaySpec::of(sub);
            e.r = r2;
            e.L3 = L2;
            Draft draft{{e1_ray(r1, L1, degB), e}, TrilinearForm::rank2(L1, h112, h122, L2), {}, {}, false};
            if (auto record = finish_rank2(std::move(draft))) out.push_back(std::move(*record));
          }
        }
      }
    }
  }
  canonical_sort(out);
  return out;
}

std::vector<SolutionRecord> solve_C_C() {
  std::vector<SolutionRecord> out;
  for (int mu1 = 1; mu1 <= 2; ++mu1) {
    for (int mu2 = 1; mu2 <= 2; ++mu2) {
      for (int degree = 1; degree <= 2; ++degree) {
        // The image of X in P^2 x P^2 has bidegree (2/mu2, 2/mu1) / degree.
        const Rational b1 = Rational(2, mu2) / degree;
        const Rational b2 = Rational(2, mu1) / degree;
        if (!is_integral(b1) || !is_integral(b2)) continue;
        const Integer lo = std::min(to_integer(b1, "bidegree"), to_integer(b2, "bidegree"));
        const Integer hi = std::max(to_integer(b1, "bidegree"), to_integer(b2, "bidegree"));
        std::string description;
        if (degree == 2) {
          if (lo != 1 || hi != 1) continue;
          description = "a split double cover of W with L^2 = -K_W";
        } else if (lo == 1 && hi == 1) {
          description = "W, a divisor on P^2 x P^2 of bidegree (1,1)";
        } else if (lo == 2 && hi == 2) {
          description = "a smooth divisor on P^2 x P^2 of bidegree (2,2)";
        } else {
          description = "a divisor on P^2 x P^2 of bidegree (" + lo.str() + "," + hi.str() + ")";
        }

        const TrilinearForm form = TrilinearForm::rank2(0, 2 / mu1, 2 / mu2, 0);
        const DivisorClass antican = anticanonical_class(mu1, mu2, 2);
        std::vector<RaySpec> rays{RaySpec::of(mu1 == 1 ? RayType::C1 : RayType::C2),
                                  RaySpec::of(mu2 == 1 ? RayType::C1 : RayType::C2)};
        bool admissible = true;
        for (int i = 0; i < 2; ++i) {
          rays[static_cast<size_t>(i)].deg_delta = discriminant_degree(antican_sq_dot(form, antican, i));
          admissible = admissible && discriminant_admissible(rays[static_cast<size_t>(i)]);
        }
        if (!admissible) continue;

        std::optional<std::string> note;
        if (rays[0].type != rays[1].type) {
          note = "in characteristic 2 a wild conic bundle of this family exists";
        }
        auto record = finish_rank2(Draft{rays, form, {description}, note, true});
        if (!record) continue;
        auto same = std::find_if(out.begin(), out.end(), [&](const SolutionRecord& r) {
          return r.ray_types() == record->ray_types() && r.kx3 == record->kx3;
        });
        if (same == out.end()) {
          out.push_back(std::move(*record));
        } else if (std::find(same->descriptions.begin(), same->descriptions.end(), description) ==
                   same->descriptions.end()) {
          same->descriptions.push_back(description);
        }
      }
    }
  }
  canonical_sort(out);
  return out;
}

std::vector<SolutionRecord> solve_C_D() {
  std::vector<SolutionRecord> out;
  for (RayType ct : {RayType::C1, RayType::C2}) {
    for (RayType dt : {RayType::D1, RayType::D2, RayType::D3}) {
      const int mu1 = mu_of(ct);
      const int mu2 = mu_of(dt);
      // H1^2 = (2/mu1) l_1, H2^2 = 0, H1 . l_1 = 0, H2 . l_1 = 1.
      const Rational h112 = Rational(2, mu1);
      if (!is_integral(h112)) continue;
      const TrilinearForm form = TrilinearForm::rank2(0, to_integer(h112, "H1^2 H2"), 0, 0);
      const DivisorClass antican = anticanonical_class(mu1, mu2, 2);
      RaySpec c = RaySpec::of(ct);
      RaySpec d = RaySpec::of(dt);
      c.deg_delta = discriminant_degree(antican_sq_dot(form, antican, 0));
      d.d2 = antican_sq_dot(form, antican, 1);
      if (!discriminant_admissible(c) || !fibre_degree_admissible(d)) continue;

      // A degree-one map X -> P^2 x P^1 is an isomorphism, whose second projection
      // is of type D3; a double cover never has a D3 fibration.
      const bool isomorphic = (2 / mu1) == 1;
      if (isomorphic != (dt == RayType::D3)) {
        throw Error(ErrorKind::Inconsistency, "numerical solution " + to_string(ct) + "-" + to_string(dt) +
                                                  " contradicts the structure of P^2 x P^1");
      }
      const std::string description =
          isomorphic ? "P^2 x P^1"
                     : "a split double cover of P^2 x P^1 with L = O(" + std::to_string(3 - mu2) + ",1)";
      if (auto record = finish_rank2(Draft{{c, d}, form, {description}, {}, true})) out.push_back(std::move(*record));
    }
  }
  canonical_sort(out);
  return out;
}

std::vector<SolutionRecord> solve_C_E_primitive() {
  std::vector<SolutionRecord> out;
  for (RayType ct : {RayType::C1, RayType::C2}) {
    for (RayType et : {RayType::E2, RayType::E34, RayType::E5}) {
      const int mu1 = mu_of(ct);
      const int mu2 = mu_of(et);
      const PointContraction pc = point_contraction(et);
      // f_1 restricted to D has degree (K_D - D|_D)^2 / mu2^2, which must equal
      // (2/mu1)(D . l_1) for a positive integer D . l_1.
      const Rational restricted_degree = Rational(pc.self_square, mu2 * mu2);
      const Rational d_dot_fibre = restricted_degree * mu1 / 2;
      if (!is_integral(restricted_degree) || !is_integral(d_dot_fibre) || d_dot_fibre <= 0) continue;

      for (const Integer& r2 : positive_divisors(pc.numerator)) {
        const Rational t = point_target_multiple(et, r2) - mu1;
        if (t <= 0) continue;
        for (Integer L2 = 1; L2 <= 24; ++L2) {
          // mu2 H1 = t H2 - c D with D . H2 = 0, and H1^3 = 0 gives c^3 D^3 = t^3 L2^3.
          if (pc.d_coeff * pc.d_coeff * pc.d_coeff * Rational(pc.d_cube) != t * t * t * Rational(L2)) continue;
          const Rational h112 = t * t * Rational(L2) / (mu2 * mu2);
          const Rational h122 = t * Rational(L2) / mu2;
          if (!is_integral(h112) || !is_integral(h122) || h112 != Rational(2, mu1)) continue;

          const TrilinearForm form =
              TrilinearForm::rank2(0, to_integer(h112, "H1^2 H2"), to_integer(h122, "H1 H2^2"), L2);
          const DivisorClass antican = anticanonical_class(mu1, mu2, 2);
          RaySpec c = RaySpec::of(ct);
          c.deg_delta = discriminant_degree(antican_sq_dot(form, antican, 0));
          if (!discriminant_admissible(c)) continue;
          RaySpec e = RaySpec::of(et);
          e.r = r2;
          e.L3 = L2;

          std::string description;
          Integer model_cube;
          if (ct == RayType::C2) {
            // X = P(O + O(e)) over P^2 with the negative section D, D^3 = e^2.
            e.e = pc.twist;
            if (!e.e || square(*e.e) != pc.d_cube) continue;
            model_cube = antican_cube_p1_bundle_over_surface(split_bundle_on_p2({0, *e.e}, 0));
            description = (*e.e == 1 ? std::string("V_7 = ") : std::string()) + "P(O + O(" + e.e->str() + ")) over P^2";
          } else {
            // X is a member of |O(2)| in P(O + O(1) + O(2)) over P^2.
            model_cube = antican_cube_divisor_in_p2_bundle(split_bundle_on_p2({0, 1, 2}, 0));
            description = "a split double cover of V_7 = P(O + O(1)) with L^2 = -K_V7";
          }
          auto record = finish_rank2(Draft{{c, e}, form, {description}, {}, true});
          if (!record) continue;
          if (record->kx3 != model_cube) {
            throw Error(ErrorKind::Inconsistency, "(-K)^3 of the bundle model is " + model_cube.str() +
                                                      ", intersection form gives " + record->kx3.str());
          }
          out.push_back(std::move(*record));
        }
      }
    }
  }
  canonical_sort(out);
  return out;
}

namespace {

SolutionRecord finish_rank3(std::vector<RaySpec> rays, TrilinearForm form, DivisorClass antican,
                            std::vector<Integer> c2_basis, std::string description) {
  SolutionRecord record;
  record.rho = 3;
  record.rays = std::move(rays);
  record.kx3 = triple_product(form, antican, antican, antican);
  record.form = std::move(form);
  record.antican = std::move(antican);
  record.c2_basis = std::move(c2_basis);
  record.descriptions = {std::move(description)};
  record.primitive = true;
  check_record(record);
  record.table_id = lookup_id(record);
  return record;
}

// c_2 . D for an effective divisor D with chi(O_D) given; chi(O_D(D)) comes from
// Riemann-Roch on D: chi(O_D) + ((-K_X) . D^2) / 2.
Integer c2_of_divisor(const TrilinearForm& form, const DivisorClass& antican, const DivisorClass& d,
                      const Integer& chi_O_D) {
  const Integer kd2 = triple_product(form, antican, d, d);
  if (kd2 % 2 != 0) throw Error(ErrorKind::Parity, "(-K) . D^2 is odd");
  const Integer chi_O_D_D = chi_O_D + kd2 / 2;
  return c2_dot_divisor(chi_O_D, chi_O_D_D, triple_product(form, d, d, d), triple_product(form, antican, antican, d));
}

DivisorClass unit_class(int i) {
  std::vector<Integer> coords(3, 0);
  coords[static_cast<size_t>(i)] = 1;
  return DivisorClass(coords);
}

using Bidegree = std::array<Integer, 2>;

Integer dot(const Bidegree& x, const Bidegree& y) { return x[0] * y[1] + x[1] * y[0]; }

// Intersection numbers H1^a H2^b xi^c (a + b + c = dim P) on P(E) over P^1 x P^1,
// with H1 = O(1,0), H2 = O(0,1) pulled back and xi = O_P(1).
// Uses xi^n = c1 xi^(n-1) - c2 xi^(n-2) for E of rank n.
Integer bundle_monomial(int a, int b, int /*c*/, const Bidegree& c1, const Integer& c2) {
  if (a > 1 || b > 1) return 0;
  if (a == 1 && b == 1) return 1;
  if (a == 1) return dot(c1, {1, 0});
  if (b == 1) return dot(c1, {0, 1});
  return dot(c1, c1) - c2;
}

struct BundleOnP1xP1 {
  Bidegree c1{0, 0};
  Integer c2 = 0;
  int rank = 0;
};

BundleOnP1xP1 split_bundle(const std::vector<Bidegree>& summands) {
  BundleOnP1xP1 e;
  e.rank = static_cast<int>(summands.size());
  for (size_t i = 0; i < summands.size(); ++i) {
    e.c1[0] += summands[i][0];
    e.c1[1] += summands[i][1];
    for (size_t j = i + 1; j < summands.size(); ++j) e.c2 += dot(summands[i], summands[j]);
  }
  return e;
}

// Form in the basis (H1, H2, xi) on X = P(E) for E of rank 2.
TrilinearForm form_of_p1_bundle(const BundleOnP1xP1& e) {
  std::map<TrilinearForm::Key, Integer> entries;
  for (int i = 1; i <= 3; ++i) {
    for (int j = i; j <= 3; ++j) {
      for (int k = j; k <= 3; ++k) {
        int counts[3] = {0, 0, 0};
        for (int idx : {i, j, k}) ++counts[idx - 1];
        entries[{i, j, k}] = bundle_monomial(counts[0], counts[1], counts[2], e.c1, e.c2);
      }
    }
  }
  return TrilinearForm(3, entries);
}

// Form in the basis (H1, H2, xi) on X in |m xi + F| inside P(E) for E of rank 3.
TrilinearForm form_of_divisor_in_p2_bundle(const BundleOnP1xP1& e, const Integer& m, const Bidegree& f) {
  std::map<TrilinearForm::Key, Integer> entries;
  for (int i = 1; i <= 3; ++i) {
    for (int j = i; j <= 3; ++j) {
      for (int k = j; k <= 3; ++k) {
        int counts[3] = {0, 0, 0};
        for (int idx : {i, j, k}) ++counts[idx - 1];
        // X = m xi + f_0 H1 + f_1 H2 as a class (a, b) = a H1 + b H2.
        entries[{i, j, k}] = m * bundle_monomial(counts[0], counts[1], counts[2] + 1, e.c1, e.c2) +
                             f[0] * bundle_monomial(counts[0] + 1, counts[1], counts[2], e.c1, e.c2) +
                             f[1] * bundle_monomial(counts[0], counts[1] + 1, counts[2], e.c1, e.c2);
      }
    }
  }
  return TrilinearForm(3, entries);
}

}  // namespace

std::vector<SolutionRecord> solve_rho3_CCC() {
  std::vector<SolutionRecord> out;
  // X -> P^2 x P^2 x P^2 has degree d onto its image and d^2 (g - 1) = 24.
  for (int d = 1; d * d <= 24; ++d) {
    if (24 % (d * d) != 0) continue;
    const Integer g_minus_1 = 24 / (d * d);
    DivisorClass antican({0, 0, 0});
    try {
      antican = anticanonical_class(d, 0, 3);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::Constraint) continue;
      throw;
    }
    const TrilinearForm form(3, {{{1, 1, 1}, 0}, {{1, 1, 2}, 0}, {{1, 1, 3}, 0}, {{1, 2, 2}, 0}, {{1, 2, 3}, d},
                                 {{1, 3, 3}, 0}, {{2, 2, 2}, 0}, {{2, 2, 3}, 0}, {{2, 3, 3}, 0}, {{3, 3, 3}, 0}});
    const Integer kx3 = triple_product(form, antican, antican, antican);
    if (kx3 != 2 * g_minus_1 || kx3 % 2 != 0) continue;

    std::vector<RaySpec> rays;
    std::vector<Integer> c2;
    for (int i = 0; i < 3; ++i) {
      const Integer kx_sq_h = antican_sq_dot(form, antican, i);
      // On P^1 x P^1, K_S . O(1,0) = -2, so (-K)^2 . H_i = 8 - Delta . O(1,0).
      const Integer b = conic_bundle_ksq_dot_pullback(-2, 0) - kx_sq_h;
      if (b < 0) break;
      RaySpec ray = RaySpec::of(b == 0 ? RayType::C2 : RayType::C1);
      if (b > 0) ray.delta_bidegree = std::array<Integer, 2>{b, b};
      rays.push_back(ray);
      c2.push_back(c2_of_divisor(form, antican, unit_class(i), 1));
    }
    if (rays.size() != 3) continue;
    const std::string description =
        d == 1 ? "P^1 x P^1 x P^1" : "a split double cover of P^1 x P^1 x P^1 with L = O(1,1,1)";
    out.push_back(finish_rank3(rays, form, antican, c2, description));
  }
  canonical_sort(out);
  return out;
}

std::vector<SolutionRecord> solve_rho3_CE() {
  std::vector<SolutionRecord> out;
  const Bidegree minus_ks{2, 2};
  {
    // X = P(O + O(1,1)) over P^1 x P^1, basis (H1, H2, xi); -K = 2 xi + (-K_S - c1).
    const std::vector<Bidegree> summands{{0, 0}, {1, 1}};
    const BundleOnP1xP1 e = split_bundle(summands);
    const TrilinearForm form = form_of_p1_bundle(e);
    const DivisorClass antican({minus_ks[0] - e.c1[0], minus_ks[1] - e.c1[1], 2});
    std::vector<Integer> c2{c2_of_divisor(form, antican, unit_class(0), 1),
                            c2_of_divisor(form, antican, unit_class(1), 1),
                            c2_of_divisor(form, antican, unit_class(2), 1)};
    SolutionRecord record = finish_rank3({RaySpec::of(RayType::C2), RaySpec::of(RayType::E1)}, form, antican, c2,
                                         "P(O + O(1,1)) over P^1 x P^1");
    const Integer model = antican_cube_p1_bundle_over_surface(split_bundle_on_p1xp1(summands, {0, 0}));
    if (model != record.kx3) throw Error(ErrorKind::Inconsistency, "P^1-bundle model disagrees with the form");
    out.push_back(std::move(record));
  }
  {
    // X in |O_P(2) + (2,3)| on P = P(O + O(-1,-1)^2). Twisting by O(2,1) gives
    // E' = O(2,1) + O(1,0)^2 and X in |2 xi' + (-2,1)|, where -K_X = xi'.
    const std::vector<Bidegree> summands{{0, 0}, {-1, -1}, {-1, -1}};
    const Bidegree f{2, 3};
    const Bidegree twist{2, 1};
    std::vector<Bidegree> twisted;
    for (const auto& s : summands) twisted.push_back({s[0] + twist[0], s[1] + twist[1]});
    const Bidegree f_twisted{f[0] - 2 * twist[0], f[1] - 2 * twist[1]};
    const BundleOnP1xP1 e = split_bundle(twisted);
    const TrilinearForm form = form_of_divisor_in_p2_bundle(e, 2, f_twisted);
    // -K_X = xi' + (-K_S - c1(E') - F').
    const DivisorClass antican(
        {minus_ks[0] - e.c1[0] - f_twisted[0], minus_ks[1] - e.c1[1] - f_twisted[1], Integer(1)});
    // H1, H2 are rational conic-bundle surfaces; the anticanonical member is a K3 surface.
    std::vector<Integer> c2{c2_of_divisor(form, antican, unit_class(0), 1),
                            c2_of_divisor(form, antican, unit_class(1), 1),
                            c2_of_divisor(form, antican, unit_class(2), 2)};
    SolutionRecord record = finish_rank3(
        {RaySpec::of(RayType::C1), RaySpec::of(RayType::E1)}, form, antican, c2,
        "a smooth member of |O_P(2) + O(2,3)| on P = P(O + O(-1,-1)^2) over P^1 x P^1");
    const Integer model = antican_cube_divisor_in_p2_bundle(split_bundle_on_p1xp1(summands, f));
    if (model != record.kx3) throw Error(ErrorKind::Inconsistency, "P^2-bundle model disagrees with the form");
    out.push_back(std::move(record));
  }
  canonical_sort(out);
  return out;
}

std::vector<SolutionRecord> enumerate_all(int rho, bool primitive_only) {
  std::vector<SolutionRecord> out;
  if (rho == 3) {
    if (!primitive_only) {
      throw Error(ErrorKind::Scope, "only primitive Fano threefolds of Picard rank 3 are classified");
    }
    for (auto&& batch : {solve_rho3_CCC(), solve_rho3_CE()}) out.insert(out.end(), batch.begin(), batch.end());
    canonical_sort(out);
    return out;
  }
  if (rho != 2) throw Error(ErrorKind::Scope, "Picard rank must be 2 or 3, got " + std::to_string(rho));

  std::vector<std::vector<SolutionRecord>> batches{
      solve_E1_C(RayType::C1), solve_E1_C(RayType::C2), solve_E1_D(RayType::D1),  solve_E1_D(RayType::D2),
      solve_E1_D(RayType::D3), solve_E1_E(RayType::E1), solve_E1_E(RayType::E2),  solve_E1_E(RayType::E34),
      solve_E1_E(RayType::E5), solve_C_C(),             solve_C_D(),              solve_C_E_primitive()};
  for (auto& batch : batches) {
    for (auto& record : batch) {
      if (primitive_only && !record.primitive) continue;
      const bool duplicate = std::any_of(out.begin(), out.end(), [&](const SolutionRecord& r) {
        return r.ray_types() == record.ray_types() && r.kx3 == record.kx3 && r.rays == record.rays;
      });
      if (!duplicate) out.push_back(std::move(record));
    }
  }
  canonical_sort(out);
  return out;
}

}  // namespace fano
