#include "qrep/memo.hpp"

#include <string>

#include "qrep/errors.hpp"

namespace qrep {

const std::int64_t* MemoTables::find(std::int64_t key) const {
  if (auto it = added_.find(key); it != added_.end()) return &it->second;
  if (base_) {
    if (auto it = base_->find(key); it != base_->end()) return &it->second;
  }
  return nullptr;
}

quadform::ClassData MemoTables::class_number(std::int64_t d) {
  if (const std::int64_t* h = find(d)) {
    ++hits_;
    if (!is_fundamental_discriminant(d)) throw InvalidInput("memo: key " + std::to_string(d) + " is not fundamental");
    return {d, *h, unit_count(d)};
  }
  ++misses_;
  const quadform::ClassData cd = quadform::class_number(d);
  added_[d] = cd.h;
  return cd;
}

Factorization MemoTables::factor(std::int64_t n) {
  if (n <= 0) throw InvalidInput("memo factor: n must be positive");
  Factorization out;
  out.value = static_cast<std::uint64_t>(n);
  std::int64_t rest = n;
  while (rest > 1) {
    std::int64_t p;
    if (const std::int64_t* hit = find(rest)) {
      ++hits_;
      p = *hit;
    } else {
      ++misses_;
      p = static_cast<std::int64_t>(qrep::factor(rest).factors.front().prime);
      added_[rest] = p;
    }
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e == 0) throw InvalidInput("memo: cached factor " + std::to_string(p) + " does not divide");
    out.factors.push_back({static_cast<std::uint64_t>(p), e});
  }
  return out;
}

void validate_memo_table(const MemoTables::Table& table) {
  for (const auto& [key, value] : table) {
    const std::string where = "cache entry " + std::to_string(key) + "\t" + std::to_string(value);
    if (key < 0) {
      if (!is_fundamental_discriminant(key)) throw InvalidInput(where + ": key is not a fundamental discriminant");
      if (value < 1) throw InvalidInput(where + ": class number must be positive");
    } else if (key > 1) {
      if (value < 2 || key % value != 0 || !is_prime(static_cast<std::uint64_t>(value))) {
        throw InvalidInput(where + ": value is not a prime factor of the key");
      }
    } else {
      throw InvalidInput(where + ": key must be negative or at least 2");
    }
  }
}

}  // namespace qrep
