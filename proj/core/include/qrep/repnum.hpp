#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrep/lattice.hpp"
#include "qrep/memo.hpp"
#include "qrep/rational.hpp"

namespace qrep::repnum {

// Largest m accepted by the brute-force counters.
inline constexpr std::int64_t kCountWorkBound = 10'000;

struct CountResult {
  std::int64_t m;
  std::uint64_t count;
  std::string lattice;
};

// #{x in Z^k : x_1^2 + ... + x_k^2 = m}, k in {3, 4}.
std::uint64_t count_squares(int k, std::int64_t m, std::int64_t work_bound = kCountWorkBound);
// counts[n] = count_squares(k, n) for 0 <= n <= max_m, from one pass over the
// ball of radius sqrt(max_m). Split over workers by the outermost coordinate.
std::vector<std::uint64_t> count_squares_upto(int k, std::int64_t max_m, unsigned workers = 1,
                                              std::int64_t work_bound = kCountWorkBound);

BigInt r4_closed(std::int64_t m);
BigInt r3_closed(std::int64_t m, MemoTables* memo = nullptr);

// Right-hand side of the three-squares / Hurwitz class number relation.
Rational hz_rhs(std::int64_t m, MemoTables* memo = nullptr);
bool hz_relations_check(std::int64_t m, MemoTables* memo = nullptr);

// Number of lattice vectors of norm m, enumerated with exact rational
// Fincke-Pohst bounds.
CountResult count_order(const GramLattice& lattice, std::int64_t m,
                        std::int64_t work_bound = kCountWorkBound);
std::vector<std::uint64_t> count_order_upto(const GramLattice& lattice, std::int64_t max_m,
                                            unsigned workers = 1,
                                            std::int64_t work_bound = kCountWorkBound);

}  // namespace qrep::repnum
