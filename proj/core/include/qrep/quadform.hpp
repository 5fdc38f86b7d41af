#pragma once

#include <cstdint>
#include <vector>

#include "qrep/rational.hpp"

namespace qrep {
class MemoTables;
}

namespace qrep::quadform {

// Positive definite binary form a x^2 + b xy + c y^2.
struct ReducedForm {
  std::int64_t a;
  std::int64_t b;
  std::int64_t c;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  bool primitive() const;
  bool is_reduced() const;
  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

struct ClassData {
  std::int64_t d;
  std::int64_t h;
  int w;
};

// One reduced representative per proper equivalence class of discriminant D,
// imprimitive forms included. Throws InvalidInput unless D < 0, D = 0,1 mod 4.
std::vector<ReducedForm> reduced_forms(std::int64_t D);

// Throws InvalidInput for a non-fundamental d.
ClassData class_number(std::int64_t d);

// Closed form 2h(d)/w * sum_{l | f} l prod_{p | l} (1 - chi_d(p)/p), -m = d f^2.
Rational hurwitz_H(std::int64_t m, MemoTables* memo = nullptr);

// Weighted count of all reduced forms of discriminant -m.
Rational hurwitz_H_oracle(std::int64_t m);

// Partial sum of chi_d(n)/n for n = 1..terms.
double L_one_chi(std::int64_t d, std::uint64_t terms);

// 2 pi h / (w sqrt|d|)
double class_number_formula_L(std::int64_t d);

}  // namespace qrep::quadform
