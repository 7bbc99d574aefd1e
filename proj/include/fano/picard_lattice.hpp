#pragma once

#include "fano/arith.hpp"

#include <array>
#include <map>
#include <vector>

namespace fano {

// Integer coordinates of a divisor class in the basis H_1, ..., H_rho.
class DivisorClass {
 public:
  explicit DivisorClass(std::vector<Integer> coords);

  int rho() const { return static_cast<int>(coords_.size()); }
  const std::vector<Integer>& coords() const { return coords_; }
  const Integer& operator[](int i) const { return coords_.at(static_cast<size_t>(i)); }

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator*(const Integer& k) const;
  bool operator==(const DivisorClass& other) const = default;

  // Coordinates in a reordered basis: new index t takes old index order[t].
  DivisorClass permuted(const std::vector<int>& order) const;

 private:
  std::vector<Integer> coords_;
};

// Symmetric trilinear intersection form. Keys are sorted 1-based index
// triples (i <= j <= k), so symmetry holds by construction.
class TrilinearForm {
 public:
  using Key = std::array<int, 3>;

  TrilinearForm(int rho, std::map<Key, Integer> entries);

  // Rank-2 form from H1^3, H1^2.H2, H1.H2^2, H2^3.
  static TrilinearForm rank2(Integer h111, Integer h112, Integer h122, Integer h222);

  int rho() const { return rho_; }
  const std::map<Key, Integer>& entries() const { return entries_; }
  // 1-based indices in any order.
  const Integer& entry(int i, int j, int k) const;

  TrilinearForm permuted(const std::vector<int>& order) const;
  bool operator==(const TrilinearForm& other) const = default;

 private:
  int rho_;
  std::map<Key, Integer> entries_;
};

TrilinearForm::Key sorted_key(int i, int j, int k);

Integer triple_product(const TrilinearForm& form, const DivisorClass& x, const DivisorClass& y,
                       const DivisorClass& z);

// rho = 2: returns (mu2, mu1). rho = 3: mu1 carries d and the result is
// (2/d, 2/d, 2/d); mu2 is ignored.
DivisorClass anticanonical_class(int mu1, int mu2, int rho);

}  // namespace fano
