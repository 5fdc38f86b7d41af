#include <string>

#include "qrep/arith.hpp"
#include "qrep/errors.hpp"
#include "qrep/whittaker.hpp"

namespace qrep::whittaker {
namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

std::vector<u64> coordinate_histogram(u64 coefficient, u64 modulus) {
  std::vector<u64> h(modulus, 0);
  for (u64 x = 0; x < modulus; ++x) {
    h[static_cast<std::size_t>(static_cast<u128>(coefficient) * x % modulus * x % modulus)] += 1;
  }
  return h;
}

struct Sparse {
  std::vector<u64> index;
  std::vector<u64> weight;
};

Sparse nonzero(const std::vector<u64>& h) {
  Sparse s;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i]) {
      s.index.push_back(i);
      s.weight.push_back(h[i]);
    }
  }
  return s;
}

std::vector<u64> cyclic_convolution(const Sparse& a, const Sparse& b, u64 modulus) {
  std::vector<u64> out(modulus, 0);
  const std::size_t na = a.index.size();
  const std::size_t nb = b.index.size();
  for (std::size_t i = 0; i < na; ++i) {
    const u64 ai = a.index[i];
    const u64 wa = a.weight[i];
    for (std::size_t j = 0; j < nb; ++j) {
      u64 k = ai + b.index[j];
      if (k >= modulus) k -= modulus;
      out[k] += wa * b.weight[j];
    }
  }
  return out;
}

}  // namespace

DensityTable::DensityTable(const GramLattice& lattice, std::uint64_t p, unsigned t,
                           DensityMethod method, std::uint64_t work_bound)
    : p_(p), t_(t), dim_(lattice.dimension()) {
  if (!is_prime(p)) throw InvalidInput("DensityTable: " + std::to_string(p) + " is not prime");
  if (t == 0) throw InvalidInput("DensityTable: precision must be positive");
  // modulus^2 must fit comfortably in 64 bits for the histogram products
  u128 mod = 1;
  for (unsigned i = 0; i < t; ++i) {
    mod *= p;
    if (mod > (static_cast<u128>(1) << 31)) {
      throw WorkBoundExceeded("DensityTable: modulus p^t too large");
    }
  }
  modulus_ = static_cast<u64>(mod);

  const bool diagonal = lattice.is_diagonal() && method == DensityMethod::automatic;
  if (diagonal) {
    std::vector<Sparse> coords;
    for (int i = 0; i < dim_; ++i) {
      const auto a = static_cast<u64>(lattice.gram(i, i) / 2);
      coords.push_back(nonzero(coordinate_histogram(a % modulus_, modulus_)));
    }
    const u128 work_left = static_cast<u128>(coords[0].index.size()) * coords[1].index.size();
    const u128 work_right =
        dim_ == 4 ? static_cast<u128>(coords[2].index.size()) * coords[3].index.size() : 0;
    if (work_left + work_right > work_bound) {
      throw WorkBoundExceeded("DensityTable: histogram convolution mod " + std::to_string(modulus_) +
                              " exceeds work bound");
    }
    left_ = cyclic_convolution(coords[0], coords[1], modulus_);
    if (dim_ == 3) {
      right_.assign(modulus_, 0);
      for (std::size_t j = 0; j < coords[2].index.size(); ++j) right_[coords[2].index[j]] = coords[2].weight[j];
    } else if (lattice.gram(2, 2) == lattice.gram(0, 0) && lattice.gram(3, 3) == lattice.gram(1, 1)) {
      right_ = left_;
    } else {
      right_ = cyclic_convolution(coords[2], coords[3], modulus_);
    }
    return;
  }

  u128 work = 1;
  for (int i = 0; i < dim_; ++i) work *= modulus_;
  if (work > work_bound) {
    throw WorkBoundExceeded("DensityTable: full enumeration of (Z/" + std::to_string(modulus_) + ")^" +
                            std::to_string(dim_) + " exceeds work bound");
  }
  left_.assign(modulus_, 0);
  std::vector<std::int64_t> x(static_cast<std::size_t>(dim_), 0);
  const auto M = static_cast<std::int64_t>(modulus_);
  while (true) {
    std::int64_t q = lattice.norm(x) % M;
    if (q < 0) q += M;
    left_[static_cast<std::size_t>(q)] += 1;
    int i = 0;
    while (i < dim_ && ++x[static_cast<std::size_t>(i)] == M) {
      x[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == dim_) break;
  }
}

BigInt DensityTable::count(std::int64_t m) const {
  const auto M = static_cast<std::int64_t>(modulus_);
  const auto target = static_cast<u64>(((m % M) + M) % M);
  if (right_.empty()) return big_u(left_[target]);
  u128 total = 0;
  for (u64 u = 0; u < modulus_; ++u) {
    if (!left_[u]) continue;
    const u64 v = target >= u ? target - u : target + modulus_ - u;
    total += static_cast<u128>(left_[u]) * right_[v];
  }
  const u64 hi = static_cast<u64>(total >> 64);
  const u64 lo = static_cast<u64>(total);
  BigInt r = big_u(hi);
  r <<= 64;
  r += big_u(lo);
  return r;
}

Rational DensityTable::density(std::int64_t m) const {
  BigInt denom;
  mpz_pow_ui(denom.get_mpz_t(), big_u(p_).get_mpz_t(), static_cast<unsigned long>(t_) * (dim_ - 1));
  return Rational(count(m), denom);
}

unsigned density_precision(const GramLattice& lattice, std::uint64_t p, std::int64_t m) {
  if (p == 2) return ord_p(m, p) + 3;
  return ord_p(m, p) + 1 + ord_p(lattice.determinant(), p);
}

Rational density_oracle(const GramLattice& lattice, std::uint64_t p, std::int64_t m, unsigned t,
                        std::uint64_t work_bound) {
  if (m <= 0) throw InvalidInput("density_oracle: m must be positive");
  if (t < density_precision(lattice, p, m)) {
    throw InvalidInput("density_oracle: precision " + std::to_string(t) + " below the stable range");
  }
  const Rational at_t = DensityTable(lattice, p, t, DensityMethod::automatic, work_bound).density(m);
  const Rational at_next = DensityTable(lattice, p, t + 1, DensityMethod::automatic, work_bound).density(m);
  if (at_t != at_next) {
    throw NumericalCheckFailed("density_oracle: not stabilized at p=" + std::to_string(p) +
                               ", m=" + std::to_string(m) + ": " + at_t.str() + " vs " + at_next.str());
  }
  return at_t;
}

}  // namespace qrep::whittaker
