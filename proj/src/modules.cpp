#include "ternions/modules.hpp"

#include <algorithm>
#include <unordered_set>

namespace ternions {

const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

ModuleSpace::ModuleSpace(const Ring& ring, unsigned rank)
    : ring_(&ring), rank_(rank) {
  if (rank < 1) throw Error("module rank must be at least 1");
}

std::uint64_t ModuleSpace::tuple_count() const {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < length(); ++i) {
    if (n > UINT64_MAX / ring_->size())
      throw BudgetExceeded("tuple space does not fit in 64 bits");
    n *= ring_->size();
  }
  return n;
}

TupleCode ModuleSpace::encode(const Tuple& t) const {
  TupleCode code = 0;
  for (Elem e : t) code = code * ring_->size() + e;
  return code;
}

Tuple ModuleSpace::decode(TupleCode code) const {
  Tuple t(length());
  for (unsigned i = length(); i-- > 0;) {
    t[i] = Elem(code % ring_->size());
    code /= ring_->size();
  }
  return t;
}

Tuple ModuleSpace::scale(Side side, Elem alpha, const Tuple& t) const {
  Tuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    out[i] = side == Side::left ? ring_->mul(alpha, t[i])
                                : ring_->mul(t[i], alpha);
  return out;
}

std::vector<TupleCode> ModuleSpace::span(Side side, const Tuple& t) const {
  std::vector<TupleCode> codes;
  codes.reserve(ring_->size());
  for (Elem alpha = 0; alpha < ring_->size(); ++alpha)
    codes.push_back(encode(scale(side, alpha, t)));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

bool ModuleSpace::is_free(Side side, const Tuple& t) const {
  std::unordered_set<TupleCode> seen;
  seen.reserve(ring_->size() * 2);
  for (Elem alpha = 0; alpha < ring_->size(); ++alpha)
    if (!seen.insert(encode(scale(side, alpha, t))).second) return false;
  return true;
}

std::optional<std::vector<TupleCode>> ModuleSpace::span_if_free(
    Side side, const Tuple& t) const {
  std::unordered_set<TupleCode> seen;
  seen.reserve(ring_->size() * 2);
  std::vector<TupleCode> codes;
  codes.reserve(ring_->size());
  for (Elem alpha = 0; alpha < ring_->size(); ++alpha) {
    const TupleCode code = encode(scale(side, alpha, t));
    if (!seen.insert(code).second) return std::nullopt;
    codes.push_back(code);
  }
  std::sort(codes.begin(), codes.end());
  return codes;
}

bool ModuleSpace::is_unimodular(const Tuple& t) const {
  bool reaches_top = false, reaches_bottom = false;
  for (Elem e : t) {
    reaches_top |= !ring_->in_ideal1(e);     // some entry with a != 0
    reaches_bottom |= !ring_->in_ideal2(e);  // some entry with c != 0
  }
  return reaches_top && reaches_bottom;
}

std::optional<Tuple> ModuleSpace::unimodular_witness(const Tuple& t) const {
  // Depth-first odometer over witness tuples in canonical encoding order,
  // carrying partial sums so the innermost step is one product and one
  // addition.  Equivalent to scanning codes 0..q^{3(n+1)}-1 and returning
  // the first x with sum_i t[i]*x[i] = 1.
  const unsigned len = length();
  Tuple witness(len, 0);
  std::vector<Elem> prefix(len + 1, 0);  // prefix[i] = sum of first i terms

  unsigned i = 0;
  while (true) {
    if (i == len) {
      if (prefix[len] == ring_->one()) return witness;
      // step the last digit in place
      while (i > 0 && witness[i - 1] + 1 == ring_->size()) {
        witness[--i] = 0;
      }
      if (i == 0) return std::nullopt;
      ++witness[i - 1];
      prefix[i] = ring_->add(prefix[i - 1], ring_->mul(t[i - 1], witness[i - 1]));
      continue;
    }
    prefix[i + 1] = ring_->add(prefix[i], ring_->mul(t[i], witness[i]));
    ++i;
  }
}

bool ModuleSpace::all_in_ideal1(const Tuple& t) const {
  for (Elem e : t)
    if (!ring_->in_ideal1(e)) return false;
  return true;
}

bool ModuleSpace::all_in_ideal2(const Tuple& t) const {
  for (Elem e : t)
    if (!ring_->in_ideal2(e)) return false;
  return true;
}

bool ModuleSpace::all_in_radical(const Tuple& t) const {
  for (Elem e : t)
    if (!ring_->in_radical(e)) return false;
  return true;
}

std::vector<unsigned> labels_of(const Ring& ring, const Tuple& t) {
  std::vector<unsigned> out;
  out.reserve(t.size());
  for (Elem e : t) out.push_back(ring.label_of(e));
  return out;
}

Tuple tuple_from_labels(const Ring& ring, const std::vector<unsigned>& labels) {
  Tuple out;
  out.reserve(labels.size());
  for (unsigned l : labels) out.push_back(ring.element_of_label(l));
  return out;
}

}  // namespace ternions
