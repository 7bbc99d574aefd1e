#pragma once

#include "fano/picard_lattice.hpp"
#include "fano/ray_constraints.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fano {

struct SolutionRecord {
  int rho = 2;
  // Canonical order: by type tag, with two E1 rays ordered by (r, deg B, L^3) descending.
  std::vector<RaySpec> rays;
  Integer kx3;
  // Genus of the first blown-up curve when an E1 ray is present.
  std::optional<Integer> genus;
  // Form and -K are expressed in the basis matching `rays` for rank 2; for
  // rank 3 the basis is described by the solver.
  TrilinearForm form = TrilinearForm::rank2(0, 0, 0, 0);
  DivisorClass antican = DivisorClass({0, 0});
  // c_2 . H_i for each basis class H_i.
  std::vector<Integer> c2_basis;
  std::string table_id;
  std::vector<std::string> descriptions;
  std::optional<std::string> char_note;
  bool primitive = false;

  std::vector<RayType> ray_types() const;
};

std::vector<SolutionRecord> solve_E1_C(RayType sub);
std::vector<SolutionRecord> solve_E1_D(RayType sub);
std::vector<SolutionRecord> solve_E1_E(RayType sub);
std::vector<SolutionRecord> solve_C_C();
std::vector<SolutionRecord> solve_C_D();
std::vector<SolutionRecord> solve_C_E_primitive();
std::vector<SolutionRecord> solve_rho3_CCC();
std::vector<SolutionRecord> solve_rho3_CE();

std::vector<SolutionRecord> enumerate_all(int rho, bool primitive_only);

// Sort by (-K)^3, then by table number.
void canonical_sort(std::vector<SolutionRecord>& records);
bool table_id_less(const std::string& a, const std::string& b);

// Description of the blowup of the target of an E1 ray along its centre.
std::string blowup_description(const RaySpec& e1);

// Checks kx3 = (-K)^3 from the form, the c_2 balance, parity and genus; throws on failure.
void check_record(const SolutionRecord& record);

}  // namespace fano
