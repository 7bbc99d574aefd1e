#pragma once

#include "fano/arith.hpp"

#include <array>
#include <optional>
#include <vector>

namespace fano {

// Intersection numbers of a bundle E (and a twisting class F) on a base surface Y.
struct SurfaceBundleData {
  std::optional<Integer> c1_sq;
  std::optional<Integer> c2;
  std::optional<Integer> Ky_sq;
  std::optional<Integer> c1_dot_Ky;
  std::optional<Integer> c1_dot_F;
  std::optional<Integer> F_dot_Ky;
  std::optional<Integer> F_sq;
};

// A smooth curve C on a threefold Y that is blown up.
struct BlowupData {
  std::optional<Integer> ky3;
  std::optional<Integer> ky_dot_C;
  std::optional<Integer> genus;
  std::optional<Integer> deg_conormal;
};

// (-K_X)^3 for X = P(E) with E of rank 2 over a surface.
Integer antican_cube_p1_bundle_over_surface(const SurfaceBundleData& d);

// xi^2 on P(E) for E of rank 2 over a curve equals deg E.
Integer xi_square_on_curve(const Integer& deg_E);

// (-K_X)^3 for X a member of |O(2) (x) F| in P(E) with E of rank 3 over a surface.
Integer antican_cube_divisor_in_p2_bundle(const SurfaceBundleData& d);

// D^3 for the exceptional divisor of a blowup along C.
Integer blowup_exceptional_cube(const BlowupData& d);

// (-K_X)^2 . D for the exceptional divisor of a blowup along C.
Integer antican_sq_dot_exceptional(const BlowupData& d);

// K_X^2 . f^*D for a conic bundle f: X -> S and a divisor D on S.
Integer conic_bundle_ksq_dot_pullback(const Integer& ks_dot_d, const Integer& delta_dot_d);

// Genus of the blown-up curve B from (-K_X)^3, (-K_Y)^3, the index r of Y and deg B.
Integer genus_from_blowup(const Integer& kx3, const Integer& ky3, const Integer& r, const Integer& degB);

// (-K_Y)^3 of a Fano threefold with Picard rank one from its index and L^3.
Integer target_antican_cube(const Integer& r, const Integer& L3);

// c_2(X) . D for an effective divisor D, from Riemann-Roch on X.
Integer c2_dot_divisor(const Integer& chi_O_D, const Integer& chi_O_D_D, const Integer& d_cube,
                       const Integer& kx_sq_dot_d);

// Bundle data for a split bundle O(a_1) + ... + O(a_n) on P^2 twisted by F = O(f).
SurfaceBundleData split_bundle_on_p2(const std::vector<Integer>& degrees, const Integer& f);

// Bundle data for a split bundle of bidegrees (a_i, b_i) on P^1 x P^1, twisted by F = O(f_1, f_2).
SurfaceBundleData split_bundle_on_p1xp1(const std::vector<std::array<Integer, 2>>& bidegrees,
                                        const std::array<Integer, 2>& f);

}  // namespace fano
