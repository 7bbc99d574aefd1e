#include "fano/chern_calculus.hpp"

namespace fano {

namespace {

const Integer& need(const std::optional<Integer>& field, const char* name) {
  if (!field) throw Error(ErrorKind::IncompleteSpec, std::string("missing field ") + name);
  return *field;
}

}  // namespace

Integer antican_cube_p1_bundle_over_surface(const SurfaceBundleData& d) {
  return 2 * need(d.c1_sq, "c1_sq") - 8 * need(d.c2, "c2") + 6 * need(d.Ky_sq, "Ky_sq");
}

Integer xi_square_on_curve(const Integer& deg_E) { return deg_E; }

Integer antican_cube_divisor_in_p2_bundle(const SurfaceBundleData& d) {
  return 2 * need(d.c1_sq, "c1_sq") - 2 * need(d.c2, "c2") + 4 * need(d.c1_dot_F, "c1_dot_F") +
         6 * need(d.c1_dot_Ky, "c1_dot_Ky") + 9 * need(d.F_dot_Ky, "F_dot_Ky") + 6 * need(d.Ky_sq, "Ky_sq") +
         3 * need(d.F_sq, "F_sq");
}

Integer blowup_exceptional_cube(const BlowupData& d) { return need(d.deg_conormal, "deg_conormal"); }

Integer antican_sq_dot_exceptional(const BlowupData& d) {
  const Integer& g = need(d.genus, "genus");
  if (g < 0) throw Error(ErrorKind::Constraint, "genus must be non-negative");
  return need(d.ky_dot_C, "ky_dot_C") + 2 - 2 * g;
}

Integer conic_bundle_ksq_dot_pullback(const Integer& ks_dot_d, const Integer& delta_dot_d) {
  return -4 * ks_dot_d - delta_dot_d;
}

Integer genus_from_blowup(const Integer& kx3, const Integer& ky3, const Integer& r, const Integer& degB) {
  if (kx3 % 2 != 0) throw Error(ErrorKind::Parity, "(-K_X)^3 = " + kx3.str() + " is odd");
  if (ky3 % 2 != 0) throw Error(ErrorKind::Parity, "(-K_Y)^3 = " + ky3.str() + " is odd");
  Integer g = kx3 / 2 - ky3 / 2 + r * degB + 1;
  if (g < 0) throw Error(ErrorKind::Constraint, "negative genus " + g.str());
  return g;
}

Integer target_antican_cube(const Integer& r, const Integer& L3) {
  if (r == 4) return 64;
  if (r == 3) return 54;
  if (r == 2) return 8 * L3;
  throw Error(ErrorKind::UnsupportedIndex, "index " + r.str() + " is not in {2,3,4}");
}

Integer c2_dot_divisor(const Integer& chi_O_D, const Integer& chi_O_D_D, const Integer& d_cube,
                       const Integer& kx_sq_dot_d) {
  return 6 * chi_O_D + 6 * chi_O_D_D - 2 * d_cube - kx_sq_dot_d;
}

SurfaceBundleData split_bundle_on_p2(const std::vector<Integer>& degrees, const Integer& f) {
  Integer c1 = 0;
  Integer c2 = 0;
  for (size_t i = 0; i < degrees.size(); ++i) {
    c1 += degrees[i];
    for (size_t j = i + 1; j < degrees.size(); ++j) c2 += degrees[i] * degrees[j];
  }
  const Integer k = -3;
  return SurfaceBundleData{c1 * c1, c2, k * k, c1 * k, c1 * f, f * k, f * f};
}

SurfaceBundleData split_bundle_on_p1xp1(const std::vector<std::array<Integer, 2>>& bidegrees,
                                        const std::array<Integer, 2>& f) {
  auto dot = [](const std::array<Integer, 2>& x, const std::array<Integer, 2>& y) {
    return x[0] * y[1] + x[1] * y[0];
  };
  std::array<Integer, 2> c1{0, 0};
  Integer c2 = 0;
  for (size_t i = 0; i < bidegrees.size(); ++i) {
    c1[0] += bidegrees[i][0];
    c1[1] += bidegrees[i][1];
    for (size_t j = i + 1; j < bidegrees.size(); ++j) c2 += dot(bidegrees[i], bidegrees[j]);
  }
  const std::array<Integer, 2> k{-2, -2};
  return SurfaceBundleData{dot(c1, c1), c2, dot(k, k), dot(c1, k), dot(c1, f), dot(f, k), dot(f, f)};
}

}  // namespace fano
