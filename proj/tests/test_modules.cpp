#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <vector>

#include "ternions/golden.hpp"
#include "ternions/modules.hpp"

using namespace ternions;

namespace {

// Row rank of an m x 2 matrix over GF(q), by elimination.
unsigned rank2(const Field& f, std::vector<std::array<unsigned, 2>> rows) {
  unsigned rank = 0;
  for (unsigned col = 0; col < 2 && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const unsigned inv = f.inv(rows[rank][col]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const unsigned factor = f.mul(rows[r][col], inv);
      for (unsigned c = 0; c < 2; ++c)
        rows[r][c] = f.add(rows[r][c], f.mul(f.neg(factor), rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

// Freeness by linear algebra, independent of the span-counting path.
// Left scaling by (x, y, z) maps entry (a_i, b_i, c_i) to
// (x a_i, x b_i + y c_i, z c_i); the kernel of that map vanishes exactly
// when some c_i is nonzero and, in addition, either some a_i is nonzero or
// the (b_i, c_i) rows span GF(q)^2.  Right scaling is the mirrored case.
bool oracle_free(const Ring& ring, Side side, const Tuple& t) {
  bool diag_a = false, diag_c = false;
  std::vector<std::array<unsigned, 2>> rows;
  rows.reserve(t.size());
  for (Elem e : t) {
    const Ternion m = ring.decode(e);
    diag_a |= m.a != 0;
    diag_c |= m.c != 0;
    if (side == Side::left)
      rows.push_back({m.b, m.c});
    else
      rows.push_back({m.a, m.b});
  }
  if (side == Side::left)
    return diag_c && (diag_a || rank2(ring.field(), rows) == 2);
  return diag_a && (diag_c || rank2(ring.field(), rows) == 2);
}

// First witness by plain scan over all candidate tuples in code order.
std::optional<Tuple> naive_witness(const ModuleSpace& ms, const Tuple& t) {
  const Ring& ring = ms.ring();
  for (TupleCode code = 0; code < ms.tuple_count(); ++code) {
    const Tuple x = ms.decode(code);
    Elem sum = ring.zero();
    for (std::size_t i = 0; i < t.size(); ++i)
      sum = ring.add(sum, ring.mul(t[i], x[i]));
    if (sum == ring.one()) return x;
  }
  return std::nullopt;
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t out = 1;
  while (e--) out *= b;
  return out;
}

std::vector<TupleCode> codes_of_labels(
    const Ring& ring, const ModuleSpace& ms,
    const std::vector<std::vector<unsigned>>& labels) {
  std::vector<TupleCode> out;
  for (const auto& l : labels) out.push_back(ms.encode(tuple_from_labels(ring, l)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("side names") {
  CHECK(std::string(to_string(Side::left)) == "left");
  CHECK(std::string(to_string(Side::right)) == "right");
}

TEST_CASE("module space basics") {
  const Ring ring(2);
  CHECK_THROWS_AS(ModuleSpace(ring, 0), Error);

  const ModuleSpace ms(ring, 2);
  CHECK(ms.rank() == 2);
  CHECK(ms.length() == 3);
  CHECK(ms.tuple_count() == 512);

  const Ring r3(3);
  CHECK(ModuleSpace(r3, 1).tuple_count() == 729);
  CHECK_THROWS_AS(ModuleSpace(r3, 13).tuple_count(), BudgetExceeded);
}

TEST_CASE("tuple codes are a bijection") {
  for (unsigned q : {2u, 3u}) {
    const Ring ring(q);
    for (unsigned rank : {1u, 2u}) {
      const ModuleSpace ms(ring, rank);
      const TupleCode total = ms.tuple_count();
      for (TupleCode code = 0; code < total; ++code)
        CHECK(ms.encode(ms.decode(code)) == code);
    }
  }
  // first entry is the most significant digit
  const Ring ring(2);
  const ModuleSpace ms(ring, 2);
  CHECK(ms.encode(Tuple{1, 0, 0}) == 64);
  CHECK(ms.encode(Tuple{0, 0, 1}) == 1);
}

TEST_CASE("scaling in the 0-7 labelling") {
  const Ring ring(2);
  const ModuleSpace ms(ring, 2);
  const Tuple t = tuple_from_labels(ring, {4, 6, 7});

  const Tuple doubled = ms.scale(Side::left, ring.element_of_label(2), t);
  CHECK(labels_of(ring, doubled) == std::vector<unsigned>{7, 6, 4});
  CHECK(ms.scale(Side::left, ring.one(), t) == t);
  CHECK(ms.scale(Side::left, ring.zero(), t) == Tuple{0, 0, 0});
}

TEST_CASE("spans of selected generators") {
  const Ring ring(2);
  const ModuleSpace ms(ring, 2);

  // the span of (4,6,7) is the full eight-triple set of its submodule
  std::vector<std::vector<unsigned>> expected;
  for (const auto& e : golden::kSubmodules[0].elements)
    expected.push_back({e[0], e[1], e[2]});
  CHECK(ms.span(Side::left, tuple_from_labels(ring, {4, 6, 7})) ==
        codes_of_labels(ring, ms, expected));

  CHECK(ms.span(Side::left, tuple_from_labels(ring, {6, 6, 6})) ==
        codes_of_labels(ring, ms, {{0, 0, 0}, {6, 6, 6}}));
  CHECK(ms.span(Side::left, Tuple{0, 0, 0}) == std::vector<TupleCode>{0});
}

TEST_CASE("freeness of selected generators") {
  const Ring ring(2);
  const ModuleSpace ms(ring, 2);
  CHECK(ms.is_free(Side::left, tuple_from_labels(ring, {4, 6, 7})));
  CHECK_FALSE(ms.is_free(Side::left, tuple_from_labels(ring, {6, 6, 6})));
  CHECK(ms.is_free(Side::left, tuple_from_labels(ring, {1, 0, 0})));

  const Ring r3(3);
  const ModuleSpace ms3(r3, 2);
  CHECK(ms3.is_free(Side::left, Tuple{r3.one(), 0, 0}));

  // span_if_free returns the whole span exactly for free generators
  const auto span = ms.span_if_free(Side::left, tuple_from_labels(ring, {4, 6, 7}));
  REQUIRE(span.has_value());
  CHECK(*span == ms.span(Side::left, tuple_from_labels(ring, {4, 6, 7})));
  CHECK_FALSE(ms.span_if_free(Side::left, tuple_from_labels(ring, {6, 6, 6})));
}

TEST_CASE("unimodularity of selected tuples") {
  const Ring ring(2);
  const ModuleSpace ms(ring, 2);
  CHECK_FALSE(ms.is_unimodular(tuple_from_labels(ring, {4, 6, 7})));
  CHECK(ms.is_unimodular(tuple_from_labels(ring, {1, 0, 0})));
  CHECK(ms.is_unimodular(tuple_from_labels(ring, {3, 4, 0})));
}

TEST_CASE("witness search") {
  const Ring ring(2);
  const ModuleSpace ms(ring, 2);

  const auto w = ms.unimodular_witness(tuple_from_labels(ring, {1, 0, 0}));
  REQUIRE(w.has_value());
  CHECK(labels_of(ring, *w) == std::vector<unsigned>{1, 0, 0});

  CHECK_FALSE(ms.unimodular_witness(tuple_from_labels(ring, {4, 6, 7})));

  const Tuple t = tuple_from_labels(ring, {3, 4, 0});
  const auto w2 = ms.unimodular_witness(t);
  REQUIRE(w2.has_value());
  Elem sum = ring.zero();
  for (std::size_t i = 0; i < t.size(); ++i)
    sum = ring.add(sum, ring.mul(t[i], (*w2)[i]));
  CHECK(sum == ring.one());
}

TEST_CASE("witness search equals the plain scan on every tuple") {
  const Ring ring(2);
  const ModuleSpace ms(ring, 2);
  for (TupleCode code = 0; code < ms.tuple_count(); ++code) {
    const Tuple t = ms.decode(code);
    const auto fast = ms.unimodular_witness(t);
    const auto slow = naive_witness(ms, t);
    CHECK(fast.has_value() == slow.has_value());
    if (fast && slow) CHECK(*fast == *slow);
  }
}

TEST_CASE("fast unimodularity agrees with the witness oracle") {
  const Ring r2(2);
  const Ring r3(3);
  const std::vector<std::pair<const Ring*, unsigned>> cases = {
      {&r2, 1}, {&r2, 2}, {&r3, 1}};
  for (const auto& [ring, rank] : cases) {
    const ModuleSpace ms(*ring, rank);
    CAPTURE(ring->q());
    CAPTURE(rank);
    for (TupleCode code = 0; code < ms.tuple_count(); ++code) {
      const Tuple t = ms.decode(code);
      CHECK(ms.is_unimodular(t) == ms.unimodular_witness(t).has_value());
    }
  }
}

TEST_CASE("freeness agrees with the rank oracle on every tuple") {
  const Ring r2(2);
  const Ring r3(3);
  const std::vector<std::pair<const Ring*, unsigned>> cases = {
      {&r2, 1}, {&r2, 2}, {&r3, 1}, {&r3, 2}};
  for (const auto& [ring, rank] : cases) {
    const ModuleSpace ms(*ring, rank);
    CAPTURE(ring->q());
    CAPTURE(rank);
    for (TupleCode code = 0; code < ms.tuple_count(); ++code) {
      const Tuple t = ms.decode(code);
      for (Side side : {Side::left, Side::right}) {
        const bool free = ms.is_free(side, t);
        CHECK(free == oracle_free(*ring, side, t));
        if (ms.is_unimodular(t)) CHECK(free);  // unimodular implies free
      }
    }
  }
}

TEST_CASE("non-unimodular free generators are counted by column pairs") {
  // all such generators lie in the side ideal, so they are exactly the
  // tuples whose two free coordinate columns are linearly independent:
  // (q^{n+1} - 1)(q^{n+1} - q) of them
  for (unsigned q : {2u, 3u}) {
    const Ring ring(q);
    for (unsigned rank : {1u, 2u}) {
      const ModuleSpace ms(ring, rank);
      std::uint64_t found = 0;
      for (TupleCode code = 0; code < ms.tuple_count(); ++code) {
        const Tuple t = ms.decode(code);
        if (!ms.is_unimodular(t) && ms.is_free(Side::left, t)) ++found;
      }
      const std::uint64_t qn = pow_u64(q, rank + 1);
      CHECK(found == (qn - 1) * (qn - q));
      if (q == 2 && rank == 2) CHECK(found == 42);
    }
  }
}

TEST_CASE("entrywise transpose carries left spans to right spans") {
  const Ring ring(2);
  const ModuleSpace ms(ring, 2);
  for (TupleCode code = 0; code < ms.tuple_count(); ++code) {
    const Tuple t = ms.decode(code);
    Tuple mirrored(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) mirrored[i] = ring.transpose(t[i]);

    std::vector<TupleCode> image;
    for (TupleCode member : ms.span(Side::left, t)) {
      Tuple m = ms.decode(member);
      for (auto& e : m) e = ring.transpose(e);
      image.push_back(ms.encode(m));
    }
    std::sort(image.begin(), image.end());
    CHECK(image == ms.span(Side::right, mirrored));
  }
}

TEST_CASE("ideal membership of tuples") {
  const Ring ring(2);
  const ModuleSpace ms(ring, 2);
  CHECK(ms.all_in_ideal1(tuple_from_labels(ring, {4, 6, 7})));
  CHECK_FALSE(ms.all_in_ideal2(tuple_from_labels(ring, {4, 6, 7})));
  CHECK(ms.all_in_ideal2(tuple_from_labels(ring, {3, 5, 6})));
  CHECK(ms.all_in_radical(tuple_from_labels(ring, {6, 0, 6})));
  CHECK_FALSE(ms.all_in_radical(tuple_from_labels(ring, {4, 0, 6})));
}

TEST_CASE("label views of tuples") {
  const Ring ring(2);
  const Tuple t = tuple_from_labels(ring, {4, 6, 7});
  CHECK(labels_of(ring, t) == std::vector<unsigned>{4, 6, 7});

  const Ring r3(3);
  CHECK_THROWS_AS(labels_of(r3, Tuple{0, 0, 0}), LabelsUnavailable);
  CHECK_THROWS_AS(tuple_from_labels(r3, {0}), LabelsUnavailable);
}
