#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qrep {

// Integral lattice given by its Gram matrix G of the bilinear form
// (x, y) = Q(x + y) - Q(x) - Q(y), so Q(x) = x^T G x / 2. Diagonal entries
// must be even for Q to be integer valued.
class GramLattice {
 public:
  // Throws InvalidInput unless dimension is 3 or 4, G is symmetric with even
  // diagonal, and G is positive definite.
  GramLattice(std::string name, int dimension, std::vector<std::int64_t> gram);

  static GramLattice sum_of_squares(int dimension);
  // Z + Zi + Zj + Zk with the reduced norm.
  static GramLattice lipschitz();
  // Z + Zi + Zj + Z(1+i+j+k)/2, the maximal order of B(2).
  static GramLattice hurwitz();

  const std::string& name() const { return name_; }
  int dimension() const { return dim_; }
  std::int64_t gram(int i, int j) const { return gram_[static_cast<std::size_t>(i * dim_ + j)]; }
  std::int64_t determinant() const;
  bool is_diagonal() const;

  std::int64_t norm(std::span<const std::int64_t> x) const;

 private:
  std::string name_;
  int dim_;
  std::vector<std::int64_t> gram_;
};

}  // namespace qrep
