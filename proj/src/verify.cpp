#include "ternions/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ternions/golden.hpp"
#include "ternions/snowflake.hpp"

namespace ternions {

namespace {

using golden::LabelTriple;
using LabelSet = std::set<LabelTriple>;

std::string show(const LabelTriple& t) {
  std::ostringstream os;
  os << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
  return os.str();
}

std::string show(const LabelSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& t : s) {
    if (!first) os << ", ";
    os << show(t);
    first = false;
  }
  os << "}";
  return os.str();
}

LabelTriple as_triple(const Ring& ring, const ModuleSpace& ms, TupleCode code) {
  const Tuple t = ms.decode(code);
  return LabelTriple{ring.label_of(t[0]), ring.label_of(t[1]),
                     ring.label_of(t[2])};
}

LabelSet label_set(const Ring& ring, const ModuleSpace& ms,
                   const std::vector<TupleCode>& codes) {
  LabelSet out;
  for (TupleCode c : codes) out.insert(as_triple(ring, ms, c));
  return out;
}

template <std::size_t N>
LabelSet label_set(const std::array<LabelTriple, N>& arr) {
  return LabelSet(arr.begin(), arr.end());
}

template <std::size_t N>
std::set<unsigned> as_set(const std::array<unsigned, N>& labels) {
  return std::set<unsigned>(labels.begin(), labels.end());
}

GoldenCheck check_tables(const Ring& ring) {
  GoldenCheck c{"operation tables (128 cells)", true, "all cells match"};
  for (unsigned i = 0; i < 8 && c.pass; ++i)
    for (unsigned j = 0; j < 8 && c.pass; ++j) {
      const Elem x = ring.element_of_label(i);
      const Elem y = ring.element_of_label(j);
      const unsigned sum = ring.label_of(ring.add(x, y));
      const unsigned prod = ring.label_of(ring.mul(x, y));
      if (sum != golden::kAdditionTable[i][j]) {
        c.pass = false;
        c.detail = "addition " + std::to_string(i) + "+" + std::to_string(j) +
                   " = " + std::to_string(sum) + ", expected " +
                   std::to_string(golden::kAdditionTable[i][j]);
      } else if (prod != golden::kMultiplicationTable[i][j]) {
        c.pass = false;
        c.detail = "product " + std::to_string(i) + "*" + std::to_string(j) +
                   " = " + std::to_string(prod) + ", expected " +
                   std::to_string(golden::kMultiplicationTable[i][j]);
      }
    }
  return c;
}

GoldenCheck check_ideals(const Ring& ring) {
  GoldenCheck c{"maximal ideals and radical", true,
               "I1 = {0,4,6,7}, I2 = {0,3,5,6}, J = {0,6}"};
  std::set<unsigned> i1, i2, j;
  for (Elem x = 0; x < ring.size(); ++x) {
    if (ring.in_ideal1(x)) i1.insert(ring.label_of(x));
    if (ring.in_ideal2(x)) i2.insert(ring.label_of(x));
    if (ring.in_radical(x)) j.insert(ring.label_of(x));
  }
  if (i1 != as_set(golden::kIdeal1)) {
    c.pass = false;
    c.detail = "first maximal ideal mismatch";
  } else if (i2 != as_set(golden::kIdeal2)) {
    c.pass = false;
    c.detail = "second maximal ideal mismatch";
  } else if (j != as_set(golden::kRadical)) {
    c.pass = false;
    c.detail = "radical mismatch";
  }
  return c;
}

GoldenCheck check_element_classes(const Ring& ring) {
  GoldenCheck c{"units, nilpotents, idempotents", true,
               "units {1,2}, nilpotents {0,6}, idempotents {3,4,5,7}"};
  std::set<unsigned> units, nilpotents, idempotents;
  for (Elem x = 0; x < ring.size(); ++x) {
    const unsigned l = ring.label_of(x);
    if (ring.is_unit(x)) units.insert(l);
    if (ring.mul(x, x) == ring.zero()) nilpotents.insert(l);
    if (ring.mul(x, x) == x && x != ring.zero() && x != ring.one())
      idempotents.insert(l);
  }
  if (units != as_set(golden::kUnits)) {
    c.pass = false;
    c.detail = "unit set mismatch";
  } else if (nilpotents != as_set(golden::kNilpotents)) {
    c.pass = false;
    c.detail = "nilpotent set mismatch";
  } else if (idempotents != as_set(golden::kIdempotents)) {
    c.pass = false;
    c.detail = "idempotent set mismatch";
  }
  return c;
}

GoldenCheck check_submodules(const Ring& ring, const ModuleSpace& ms,
                            const Classification& left) {
  GoldenCheck c{"the 21 submodules and their 42 generators", true,
               "42 generators, 21 element sets, all listed sets found"};
  if (left.nonunimodular_free_generators != 42) {
    c.pass = false;
    c.detail = "found " + std::to_string(left.nonunimodular_free_generators) +
               " non-unimodular free generators, expected 42";
    return c;
  }
  if (left.submodules.size() != 21) {
    c.pass = false;
    c.detail = "found " + std::to_string(left.submodules.size()) +
               " distinct submodules, expected 21";
    return c;
  }
  std::map<LabelSet, LabelSet> computed;  // element set -> generator set
  for (const Submodule& sub : left.submodules)
    computed[label_set(ring, ms, sub.elements)] =
        label_set(ring, ms, sub.generators);
  for (const golden::SubmoduleData& gold : golden::kSubmodules) {
    LabelSet elements(gold.elements.begin(), gold.elements.end());
    LabelSet generators(gold.generators.begin(), gold.generators.end());
    auto it = computed.find(elements);
    if (it == computed.end()) {
      c.pass = false;
      c.detail = "listed element set " + show(elements) + " not found";
      return c;
    }
    if (it->second != generators) {
      c.pass = false;
      c.detail = "generator set for " + show(elements) + " is " +
                 show(it->second) + ", expected " + show(generators);
      return c;
    }
  }
  return c;
}

GoldenCheck check_degree_profile(const Ring& ring, const ModuleSpace& ms,
                                const Snowflake& sf) {
  GoldenCheck c{"degree profile of the snowflake", true,
               "histogram {9:7, 3:14, 1:42}, zero tuple in all 21"};
  const std::map<std::uint32_t, std::uint64_t> expected{{9, 7}, {3, 14}, {1, 42}};
  if (sf.histogram != expected) {
    std::ostringstream os;
    os << "histogram {";
    for (const auto& [d, n] : sf.histogram) os << d << ":" << n << " ";
    os << "}, expected {9:7, 3:14, 1:42}";
    c.pass = false;
    c.detail = os.str();
    return c;
  }
  if (sf.zero_tuple_degree != 21) {
    c.pass = false;
    c.detail = "zero tuple lies in " + std::to_string(sf.zero_tuple_degree) +
               " submodules, expected 21";
    return c;
  }
  LabelSet deg9, deg3;
  for (const auto& [code, d] : sf.degrees) {
    if (d == 9) deg9.insert(as_triple(ring, ms, code));
    if (d == 3) deg3.insert(as_triple(ring, ms, code));
  }
  if (deg9 != label_set(golden::kDegree9Triples)) {
    c.pass = false;
    c.detail = "degree-9 triples are " + show(deg9);
    return c;
  }
  if (deg3 != label_set(golden::kDegree3Triples)) {
    c.pass = false;
    c.detail = "degree-3 triples are " + show(deg3);
    return c;
  }
  return c;
}

GoldenCheck check_fano_core(const Ring& ring, const ModuleSpace& ms,
                           const CoreGeometry& core) {
  GoldenCheck c{"Fano core", true,
               "7 points, 7 lines, multiplicity 3, plane of order 2"};
  if (core.points.size() != 7) {
    c.pass = false;
    c.detail = std::to_string(core.points.size()) + " core points, expected 7";
    return c;
  }
  std::vector<TupleCode> reps;
  for (const CorePoint& p : core.points) reps.push_back(p.representative);
  if (label_set(ring, ms, reps) != label_set(golden::kDegree9Triples)) {
    c.pass = false;
    c.detail = "core points differ from the seven radical triples";
    return c;
  }
  if (core.lines.size() != 7) {
    c.pass = false;
    c.detail = std::to_string(core.lines.size()) + " core lines, expected 7";
    return c;
  }
  for (std::uint32_t m : core.multiplicities)
    if (m != 3) {
      c.pass = false;
      c.detail = "a core line is carried by " + std::to_string(m) +
                 " submodules, expected 3";
      return c;
    }
  if (!core.verdict || !core.verdict->is_projective_plane ||
      core.verdict->order != 2) {
    c.pass = false;
    c.detail = core.verdict && !core.verdict->failures.empty()
                   ? "plane axioms failed: " + core.verdict->failures.front()
                   : "plane verdict missing or wrong order";
    return c;
  }
  return c;
}

GoldenCheck check_second_ideal_exclusion(const Ring& ring) {
  GoldenCheck c{"no free left submodule from the second ideal", true,
               "all 64 second-ideal triples checked"};
  const ModuleSpace ms(ring, 2);
  std::vector<Elem> ideal2;
  for (Elem x = 0; x < ring.size(); ++x)
    if (ring.in_ideal2(x)) ideal2.push_back(x);
  for (Elem a : ideal2)
    for (Elem b : ideal2)
      for (Elem d : ideal2) {
        const Tuple t{a, b, d};
        if (!ms.is_unimodular(t) && ms.is_free(Side::left, t)) {
          c.pass = false;
          c.detail = "triple " + show(as_triple(ring, ms, ms.encode(t))) +
                     " generates a free left submodule";
          return c;
        }
      }
  return c;
}

GoldenCheck check_right_twin(const Ring& ring, const ModuleSpace& ms,
                            const Snowflake& left_sf,
                            const CoreGeometry& left_core) {
  GoldenCheck c{"right-side twin", true,
               "21 submodules over the second ideal, same histogram and core"};
  const Snowflake right_sf = build_snowflake(ring, 2, Side::right);
  if (right_sf.classification.submodules.size() != 21) {
    c.pass = false;
    c.detail =
        std::to_string(right_sf.classification.submodules.size()) +
        " right submodules, expected 21";
    return c;
  }
  for (const Submodule& sub : right_sf.classification.submodules)
    for (TupleCode gen : sub.generators)
      if (!ms.all_in_ideal2(ms.decode(gen))) {
        c.pass = false;
        c.detail = "right generator " + show(as_triple(ring, ms, gen)) +
                   " outside the second ideal";
        return c;
      }
  if (right_sf.histogram != left_sf.histogram ||
      right_sf.zero_tuple_degree != left_sf.zero_tuple_degree) {
    c.pass = false;
    c.detail = "left and right degree histograms differ";
    return c;
  }
  const CoreGeometry right_core = extract_core(ring, right_sf);
  bool points_equal = right_core.points.size() == left_core.points.size();
  if (points_equal)
    for (std::size_t i = 0; i < right_core.points.size(); ++i)
      points_equal &= right_core.points[i].representative ==
                      left_core.points[i].representative;
  if (!points_equal) {
    c.pass = false;
    c.detail = "left and right core points differ";
    return c;
  }
  if (right_core.lines != left_core.lines) {
    c.pass = false;
    c.detail = "left and right core lines differ";
    return c;
  }
  return c;
}

}  // namespace

std::vector<GoldenCheck> verify_golden() {
  const Ring ring(2);
  const ModuleSpace ms(ring, 2);
  const Classification left = classify(ring, 2, Side::left);
  const Snowflake left_sf = build_snowflake(left);
  const CoreGeometry left_core = extract_core(ring, left_sf);

  std::vector<GoldenCheck> checks;
  checks.push_back(check_tables(ring));
  checks.push_back(check_ideals(ring));
  checks.push_back(check_element_classes(ring));
  checks.push_back(check_submodules(ring, ms, left));
  checks.push_back(check_degree_profile(ring, ms, left_sf));
  checks.push_back(check_fano_core(ring, ms, left_core));
  checks.push_back(check_second_ideal_exclusion(ring));
  checks.push_back(check_right_twin(ring, ms, left_sf, left_core));
  return checks;
}

bool all_passed(const std::vector<GoldenCheck>& checks) {
  for (const GoldenCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace ternions
