#include "qrep/lattice.hpp"

#include "qrep/errors.hpp"
#include "qrep/rational.hpp"

namespace qrep {
namespace {

// Leading principal minor of size k, by fraction-free elimination.
BigInt leading_minor(const std::vector<std::int64_t>& g, int n, int k) {
  std::vector<BigInt> a(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[static_cast<std::size_t>(i * k + j)] = big(g[static_cast<std::size_t>(i * n + j)]);
  // Bareiss
  BigInt prev = 1;
  for (int p = 0; p < k - 1; ++p) {
    auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i * k + j)]; };
    // A zero pivot means a smaller leading minor vanished.
    if (at(p, p) == 0) return 0;
    for (int i = p + 1; i < k; ++i) {
      for (int j = p + 1; j < k; ++j) {
        at(i, j) = (at(i, j) * at(p, p) - at(i, p) * at(p, j)) / prev;
      }
    }
    prev = at(p, p);
  }
  return a[static_cast<std::size_t>(k * k - 1)];
}

}  // namespace

GramLattice::GramLattice(std::string name, int dimension, std::vector<std::int64_t> gram)
    : name_(std::move(name)), dim_(dimension), gram_(std::move(gram)) {
  if (dim_ != 3 && dim_ != 4) throw InvalidInput("GramLattice: dimension must be 3 or 4");
  if (gram_.size() != static_cast<std::size_t>(dim_ * dim_)) {
    throw InvalidInput("GramLattice: Gram matrix has wrong size");
  }
  for (int i = 0; i < dim_; ++i) {
    if (this->gram(i, i) % 2 != 0) throw InvalidInput("GramLattice: diagonal must be even");
    for (int j = 0; j < dim_; ++j) {
      if (this->gram(i, j) != this->gram(j, i)) throw InvalidInput("GramLattice: not symmetric");
    }
  }
  for (int k = 1; k <= dim_; ++k) {
    if (leading_minor(gram_, dim_, k) <= 0) {
      throw InvalidInput("GramLattice: not positive definite");
    }
  }
}

GramLattice GramLattice::sum_of_squares(int dimension) {
  std::vector<std::int64_t> g(static_cast<std::size_t>(dimension * dimension), 0);
  for (int i = 0; i < dimension; ++i) g[static_cast<std::size_t>(i * dimension + i)] = 2;
  return {"sum-of-" + std::to_string(dimension) + "-squares", dimension, std::move(g)};
}

GramLattice GramLattice::lipschitz() {
  GramLattice l = sum_of_squares(4);
  l.name_ = "lipschitz";
  return l;
}

GramLattice GramLattice::hurwitz() {
  // basis 1, i, j, (1+i+j+k)/2; (x, y) = tr(x conj(y))
  return {"hurwitz", 4, {2, 0, 0, 1,  //
                         0, 2, 0, 1,  //
                         0, 0, 2, 1,  //
                         1, 1, 1, 2}};
}

std::int64_t GramLattice::determinant() const {
  return leading_minor(gram_, dim_, dim_).get_si();
}

bool GramLattice::is_diagonal() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (i != j && gram(i, j) != 0) return false;
  return true;
}

std::int64_t GramLattice::norm(std::span<const std::int64_t> x) const {
  std::int64_t twice = 0;
  for (int i = 0; i < dim_; ++i) {
    const std::int64_t xi = x[static_cast<std::size_t>(i)];
    twice += gram(i, i) * xi * xi;
    for (int j = i + 1; j < dim_; ++j) twice += 2 * gram(i, j) * xi * x[static_cast<std::size_t>(j)];
  }
  return twice / 2;
}

}  // namespace qrep
