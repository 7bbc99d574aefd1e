#include "fano/picard_lattice.hpp"

#include <algorithm>

namespace fano {

namespace {

void require_rank(int rho) {
  if (rho != 2 && rho != 3) {
    throw Error(ErrorKind::Dimension, "rank must be 2 or 3, got " + std::to_string(rho));
  }
}

void require_order(const std::vector<int>& order, int rho) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int t = 0; t < rho; ++t) {
    if (static_cast<int>(sorted.size()) != rho || sorted[t] != t) {
      throw Error(ErrorKind::Dimension, "basis reordering is not a permutation of the rank");
    }
  }
}

}  // namespace

DivisorClass::DivisorClass(std::vector<Integer> coords) : coords_(std::move(coords)) {
  require_rank(rho());
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  if (other.rho() != rho()) throw Error(ErrorKind::Dimension, "adding classes of different rank");
  std::vector<Integer> out = coords_;
  for (size_t i = 0; i < out.size(); ++i) out[i] += other.coords_[i];
  return DivisorClass(std::move(out));
}

DivisorClass DivisorClass::operator*(const Integer& k) const {
  std::vector<Integer> out = coords_;
  for (auto& c : out) c *= k;
  return DivisorClass(std::move(out));
}

DivisorClass DivisorClass::permuted(const std::vector<int>& order) const {
  require_order(order, rho());
  std::vector<Integer> out;
  for (int old_index : order) out.push_back(coords_[static_cast<size_t>(old_index)]);
  return DivisorClass(std::move(out));
}

TrilinearForm::Key sorted_key(int i, int j, int k) {
  TrilinearForm::Key key{i, j, k};
  std::sort(key.begin(), key.end());
  return key;
}

TrilinearForm::TrilinearForm(int rho, std::map<Key, Integer> entries)
    : rho_(rho), entries_(std::move(entries)) {
  require_rank(rho);
  size_t expected = 0;
  for (int i = 1; i <= rho; ++i) {
    for (int j = i; j <= rho; ++j) {
      for (int k = j; k <= rho; ++k) {
        ++expected;
        if (!entries_.count(Key{i, j, k})) {
          throw Error(ErrorKind::Dimension, "trilinear form is missing the entry H" + std::to_string(i) +
                                                ".H" + std::to_string(j) + ".H" + std::to_string(k));
        }
      }
    }
  }
  if (entries_.size() != expected) {
    throw Error(ErrorKind::Dimension, "trilinear form has entries outside the rank or unsorted keys");
  }
}

TrilinearForm TrilinearForm::rank2(Integer h111, Integer h112, Integer h122, Integer h222) {
  return TrilinearForm(2, {{{1, 1, 1}, std::move(h111)},
                           {{1, 1, 2}, std::move(h112)},
                           {{1, 2, 2}, std::move(h122)},
                           {{2, 2, 2}, std::move(h222)}});
}

const Integer& TrilinearForm::entry(int i, int j, int k) const {
  auto it = entries_.find(sorted_key(i, j, k));
  if (it == entries_.end()) throw Error(ErrorKind::Dimension, "index outside the rank of the form");
  return it->second;
}

TrilinearForm TrilinearForm::permuted(const std::vector<int>& order) const {
  require_order(order, rho_);
  std::map<Key, Integer> out;
  for (int i = 1; i <= rho_; ++i) {
    for (int j = i; j <= rho_; ++j) {
      for (int k = j; k <= rho_; ++k) {
        out[Key{i, j, k}] = entry(order[i - 1] + 1, order[j - 1] + 1, order[k - 1] + 1);
      }
    }
  }
  return TrilinearForm(rho_, std::move(out));
}

Integer triple_product(const TrilinearForm& form, const DivisorClass& x, const DivisorClass& y,
                       const DivisorClass& z) {
  const int rho = form.rho();
  if (x.rho() != rho || y.rho() != rho || z.rho() != rho) {
    throw Error(ErrorKind::Dimension, "classes and form must share the same rank");
  }
  Integer total = 0;
  for (int i = 0; i < rho; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rho; ++j) {
      if (y[j] == 0) continue;
      for (int k = 0; k < rho; ++k) {
        total += x[i] * y[j] * z[k] * form.entry(i + 1, j + 1, k + 1);
      }
    }
  }
  return total;
}

DivisorClass anticanonical_class(int mu1, int mu2, int rho) {
  if (rho == 2) {
    if (mu1 < 1 || mu1 > 3 || mu2 < 1 || mu2 > 3) {
      throw Error(ErrorKind::Constraint, "ray lengths must lie in {1,2,3}");
    }
    return DivisorClass({Integer(mu2), Integer(mu1)});
  }
  if (rho == 3) {
    const int d = mu1;
    if (d < 1 || 2 % d != 0) {
      throw Error(ErrorKind::Constraint, "d = " + std::to_string(d) + " does not divide 2");
    }
    const Integer c = 2 / d;
    return DivisorClass({c, c, c});
  }
  throw Error(ErrorKind::Dimension, "rank must be 2 or 3, got " + std::to_string(rho));
}

}  // namespace fano
