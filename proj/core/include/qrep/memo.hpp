#pragma once

#include <cstdint>
#include <map>

#include "qrep/arith.hpp"
#include "qrep/quadform.hpp"

namespace qrep {

// Memo for class numbers and factorizations, layered over an optional
// read-only base table shared between workers. Keys follow the cache file
// layout: a negative key d maps to h(d), a positive key n > 1 maps to the
// smallest prime factor of n. Not thread safe; one instance per worker.
class MemoTables {
 public:
  using Table = std::map<std::int64_t, std::int64_t>;

  explicit MemoTables(const Table* base = nullptr) : base_(base) {}

  quadform::ClassData class_number(std::int64_t d);
  Factorization factor(std::int64_t n);

  const Table& additions() const { return added_; }
  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }

 private:
  const std::int64_t* find(std::int64_t key) const;

  const Table* base_;
  Table added_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
};

// Structural check of a loaded table (fundamental keys, positive class
// numbers, prime divisors). Throws InvalidInput naming the first bad entry.
void validate_memo_table(const MemoTables::Table& table);

}  // namespace qrep
