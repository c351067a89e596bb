#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ternions/ring.hpp"

namespace ternions {

// An (n+1)-tuple of ring elements, the generator candidate for a cyclic
// submodule.
using Tuple = std::vector<Elem>;

// Canonical base-q^3 encoding of a tuple, first entry most significant.
using TupleCode = std::uint64_t;

enum class Side { left, right };

const char* to_string(Side s);

// Tuples of length rank+1 over a fixed ring, with the operations that turn
// a tuple into a cyclic submodule: one-sided scaling, span generation,
// freeness, and the two unimodularity tests.
//
// All operations are pure reads of the immutable ring context; callers may
// evaluate them concurrently over disjoint tuple ranges.
class ModuleSpace {
public:
  ModuleSpace(const Ring& ring, unsigned rank);  // rank >= 1

  const Ring& ring() const { return *ring_; }
  unsigned rank() const { return rank_; }
  unsigned length() const { return rank_ + 1; }

  // q^{3(rank+1)}; throws BudgetExceeded if it does not fit in 64 bits.
  std::uint64_t tuple_count() const;

  TupleCode encode(const Tuple& t) const;
  Tuple decode(TupleCode code) const;

  // left: entry -> alpha * entry;  right: entry -> entry * alpha.
  Tuple scale(Side side, Elem alpha, const Tuple& t) const;

  // The cyclic submodule generated by t on the given side, as a sorted,
  // deduplicated list of tuple codes.  Cardinality is q^3 exactly when t
  // generates freely.
  std::vector<TupleCode> span(Side side, const Tuple& t) const;

  // True iff alpha -> scale(side, alpha, t) is injective.  Exits on the
  // first duplicate scaling result.
  bool is_free(Side side, const Tuple& t) const;

  // Like span, but bails out on the first duplicate: returns the full
  // sorted span when t generates freely, nullopt otherwise.
  std::optional<std::vector<TupleCode>> span_if_free(Side side,
                                                     const Tuple& t) const;

  // Fast unimodularity characterization: some entry has a != 0 and some
  // entry has c != 0, i.e. the tuple lies neither entirely in I1 nor
  // entirely in I2.  Validated against unimodular_witness by the tests.
  bool is_unimodular(const Tuple& t) const;

  // Brute-force witness search for sum_i t[i]*x[i] = 1 over all candidate
  // tuples x in canonical encoding order; returns the first hit.
  std::optional<Tuple> unimodular_witness(const Tuple& t) const;

  bool all_in_ideal1(const Tuple& t) const;
  bool all_in_ideal2(const Tuple& t) const;
  bool all_in_radical(const Tuple& t) const;

private:
  const Ring* ring_;
  unsigned rank_;
};

// Label-space views of a tuple; defined only for q = 2.
std::vector<unsigned> labels_of(const Ring& ring, const Tuple& t);
Tuple tuple_from_labels(const Ring& ring, const std::vector<unsigned>& labels);

}  // namespace ternions
