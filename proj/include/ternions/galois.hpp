#pragma once

#include <cstdint>
#include <vector>

#include "ternions/errors.hpp"

namespace ternions {

bool is_prime(unsigned long long n);

// Arithmetic context for the prime field GF(q).  Residues are the canonical
// integers 0..q-1 and every operation is a table lookup; the tables are
// filled and exhaustively usable right after construction.  Immutable, so
// unrestricted concurrent reads are fine.
class Field {
public:
  explicit Field(unsigned q);  // throws NonPrimeModulus unless q is prime

  unsigned q() const { return q_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }

  // throws ZeroInverse for a == 0
  unsigned inv(unsigned a) const {
    if (a == 0) throw ZeroInverse();
    return inv_[a];
  }

private:
  unsigned q_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
};

}  // namespace ternions
