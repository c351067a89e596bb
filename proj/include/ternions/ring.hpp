#pragma once

#include <cstdint>
#include <vector>

#include "ternions/galois.hpp"

namespace ternions {

// Canonical encoding of a ring element, 0..q^3-1.
using Elem = std::uint32_t;

// One ternion: the upper triangular matrix [[a, b], [0, c]] over GF(q),
// stored by its three coordinates.
struct Ternion {
  unsigned a = 0;
  unsigned b = 0;
  unsigned c = 0;

  friend bool operator==(const Ternion&, const Ternion&) = default;
};

// The ring T(q) of upper triangular 2x2 matrices over GF(q).
//
// Elements are enumerated by the encoding a*q^2 + b*q + c.  Both operation
// tables are precomputed in full, as are per-element membership flags for
// the unit group, the two maximal ideals
//     I1 = { a = 0 },   I2 = { c = 0 },
// and the radical J = I1 ∩ I2 = { a = c = 0 }.  The unit flag (a != 0 and
// c != 0) is cross-checked once, at construction, against a table-based
// two-sided inverse search.  Immutable after construction.
class Ring {
public:
  explicit Ring(unsigned q);  // throws NonPrimeModulus / BudgetExceeded

  const Field& field() const { return field_; }
  unsigned q() const { return field_.q(); }
  Elem size() const { return size_; }  // q^3

  Elem encode(const Ternion& t) const {
    return Elem(t.a) * field_.q() * field_.q() + Elem(t.b) * field_.q() + t.c;
  }
  Ternion decode(Elem x) const {
    const unsigned q = field_.q();
    return Ternion{x / (q * q), (x / q) % q, x % q};
  }

  Elem add(Elem x, Elem y) const { return add_[std::size_t(x) * size_ + y]; }
  Elem mul(Elem x, Elem y) const { return mul_[std::size_t(x) * size_ + y]; }

  Elem zero() const { return 0; }
  Elem one() const { return one_; }

  bool is_unit(Elem x) const { return unit_[x] != 0; }
  bool in_ideal1(Elem x) const { return ideal1_[x] != 0; }
  bool in_ideal2(Elem x) const { return ideal2_[x] != 0; }
  bool in_radical(Elem x) const { return radical_[x] != 0; }

  const std::vector<Elem>& units() const { return units_; }
  const std::vector<Elem>& radical_elems() const { return radical_elems_; }

  // Transpose anti-automorphism (a, b, c) -> (c, b, a); swaps I1 and I2.
  Elem transpose(Elem x) const { return transpose_[x]; }

  // The 0-7 labelling of the order-8 ring; defined only for q = 2.
  bool has_labels() const { return q() == 2; }
  unsigned label_of(Elem x) const;        // throws LabelsUnavailable for q != 2
  Elem element_of_label(unsigned l) const;  // likewise

private:
  Field field_;
  Elem size_;
  Elem one_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint8_t> unit_, ideal1_, ideal2_, radical_;
  std::vector<Elem> transpose_;
  std::vector<Elem> units_;
  std::vector<Elem> radical_elems_;
};

}  // namespace ternions
