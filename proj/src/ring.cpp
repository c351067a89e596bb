#include "ternions/ring.hpp"

#include <array>

namespace ternions {

namespace {

// Largest table size we are willing to allocate: two q^3 x q^3 tables of
// 16-bit entries.  6e7 cells per table keeps the ring usable up to q = 19,
// the largest prime whose rank-1 module space fits the default tuple budget.
constexpr std::uint64_t kMaxTableCells = 60'000'000;

// label -> encoding for q = 2, per the 0-7 naming of the order-8 ring:
// 0=(0,0,0) 1=(1,0,1) 2=(1,1,1) 3=(1,1,0) 4=(0,0,1) 5=(1,0,0) 6=(0,1,0)
// 7=(0,1,1), with enc = 4a + 2b + c.
constexpr std::array<Elem, 8> kLabelToEnc = {0, 5, 7, 6, 1, 4, 2, 3};
constexpr std::array<unsigned, 8> kEncToLabel = {0, 4, 6, 7, 5, 1, 3, 2};

}  // namespace

Ring::Ring(unsigned q) : field_(q) {
  const std::uint64_t n = std::uint64_t(q) * q * q;
  if (n * n > kMaxTableCells)
    throw BudgetExceeded("ternion ring tables for q = " + std::to_string(q) +
                         " exceed the supported size (max q = 19)");
  size_ = Elem(n);
  one_ = encode(Ternion{1, 0, 1});

  add_.resize(std::size_t(size_) * size_);
  mul_.resize(std::size_t(size_) * size_);
  for (Elem x = 0; x < size_; ++x) {
    const Ternion s = decode(x);
    for (Elem y = 0; y < size_; ++y) {
      const Ternion t = decode(y);
      const Ternion sum{field_.add(s.a, t.a), field_.add(s.b, t.b),
                        field_.add(s.c, t.c)};
      // [[a,b],[0,c]] * [[a',b'],[0,c']] = [[aa', ab'+bc'], [0, cc']]
      const Ternion prod{field_.mul(s.a, t.a),
                         field_.add(field_.mul(s.a, t.b), field_.mul(s.b, t.c)),
                         field_.mul(s.c, t.c)};
      add_[std::size_t(x) * size_ + y] = std::uint16_t(encode(sum));
      mul_[std::size_t(x) * size_ + y] = std::uint16_t(encode(prod));
    }
  }

  unit_.resize(size_);
  ideal1_.resize(size_);
  ideal2_.resize(size_);
  radical_.resize(size_);
  transpose_.resize(size_);
  for (Elem x = 0; x < size_; ++x) {
    const Ternion t = decode(x);
    unit_[x] = (t.a != 0 && t.c != 0) ? 1 : 0;
    ideal1_[x] = (t.a == 0) ? 1 : 0;
    ideal2_[x] = (t.c == 0) ? 1 : 0;
    radical_[x] = (t.a == 0 && t.c == 0) ? 1 : 0;
    transpose_[x] = encode(Ternion{t.c, t.b, t.a});
    if (unit_[x]) units_.push_back(x);
    if (radical_[x]) radical_elems_.push_back(x);
  }

  // Cross-check the diagonal unit predicate against the tables: x is a unit
  // iff some y satisfies xy = yx = 1.
  for (Elem x = 0; x < size_; ++x) {
    bool invertible = false;
    for (Elem y = 0; y < size_; ++y)
      if (mul(x, y) == one_ && mul(y, x) == one_) {
        invertible = true;
        break;
      }
    if (invertible != (unit_[x] != 0))
      throw Error("unit predicate disagrees with table inverse search");
  }
}

unsigned Ring::label_of(Elem x) const {
  if (!has_labels()) throw LabelsUnavailable(q());
  return kEncToLabel[x];
}

Elem Ring::element_of_label(unsigned l) const {
  if (!has_labels()) throw LabelsUnavailable(q());
  if (l >= 8) throw Error("label out of range: " + std::to_string(l));
  return kLabelToEnc[l];
}

}  // namespace ternions
