#include "ternions/galois.hpp"

namespace ternions {

bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(unsigned q) : q_(q) {
  if (!is_prime(q)) throw NonPrimeModulus(q);

  add_.resize(std::size_t(q) * q);
  mul_.resize(std::size_t(q) * q);
  neg_.resize(q);
  inv_.resize(q);

  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      add_[a * q + b] = std::uint16_t((a + b) % q);
      mul_[a * q + b] = std::uint16_t((a * b) % q);
    }
    neg_[a] = std::uint16_t((q - a) % q);
  }

  inv_[0] = 0;  // never served; Field::inv throws on 0
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if ((a * b) % q == 1) {
        inv_[a] = std::uint16_t(b);
        break;
      }
}

}  // namespace ternions
