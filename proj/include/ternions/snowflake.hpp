#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ternions/modules.hpp"

namespace ternions {

struct EnumerationConfig {
  std::uint64_t budget = 100'000'000;  // tuple cap for one exhaustive run
  unsigned threads = 0;                // 0 = hardware concurrency
};

// A deduplicated free cyclic submodule found during classification.
struct Submodule {
  Side side;
  TupleCode canonical_generator = 0;   // minimum-code generator
  std::vector<TupleCode> generators;   // all non-unimodular generators, sorted
  std::vector<TupleCode> elements;     // the full span, sorted; size q^3
};

// Exhaustive classification of every tuple in R^{n+1} by unimodularity and
// freeness, together with the deduplicated submodule list and the two facts
// the tool computes rather than assumes: whether all non-unimodular free
// generators lie in the ideal power for this side, and whether the union of
// the submodules covers that ideal power exactly.
struct Classification {
  unsigned q = 0;
  unsigned rank = 0;
  Side side = Side::left;
  std::uint64_t total_tuples = 0;
  std::uint64_t unimodular = 0;
  std::uint64_t nonunimodular_free_generators = 0;
  std::uint64_t nonunimodular_nonfree = 0;
  std::vector<Submodule> submodules;   // ordered by canonical generator code
  bool generators_in_ideal = false;    // I1^{n+1} for left, I2^{n+1} for right
  bool union_equals_ideal_power = false;

  std::uint64_t distinct_submodules() const { return submodules.size(); }
};

// The snowflake incidence structure: how the free cyclic submodules of the
// classification overlap, as a degree map over the nonzero tuples they
// contain.  The zero tuple lies in every submodule and is tracked apart.
struct Snowflake {
  Classification classification;
  std::vector<std::pair<TupleCode, std::uint32_t>> degrees;  // sorted by code
  std::map<std::uint32_t, std::uint64_t> histogram;          // degree -> count
  std::uint64_t zero_tuple_degree = 0;
};

struct PlaneVerdict {
  bool is_projective_plane = false;
  unsigned order = 0;                  // set iff verified
  std::vector<std::string> failures;   // empty when verified
};

// One point of the core geometry: a GF(q)*-scaling class of nonzero tuples
// whose entries all lie in the radical, named by the member whose first
// nonzero radical coordinate is 1.
struct CorePoint {
  TupleCode representative = 0;
  std::vector<TupleCode> members;      // sorted; size q-1
};

// The point/line structure carried by the radical tuples: each submodule
// contributes the line of core points it contains; identical lines are
// merged with a multiplicity count.
struct CoreGeometry {
  std::vector<CorePoint> points;                   // sorted by representative
  std::vector<std::vector<std::uint32_t>> lines;   // point indices, each sorted
  std::vector<std::uint32_t> multiplicities;       // parallel to lines
  std::optional<PlaneVerdict> verdict;             // filled for rank 2 runs
};

// Left/right comparison: equal degree histograms and identical cores make
// the two snowflakes twins.
struct TwinReport {
  Snowflake left;
  Snowflake right;
  CoreGeometry left_core;
  CoreGeometry right_core;
  bool histograms_equal = false;
  bool core_points_equal = false;
  bool core_lines_equal = false;

  bool all_equal() const {
    return histograms_equal && core_points_equal && core_lines_equal;
  }
};

// Exhaustively classify all q^{3(rank+1)} tuples.  Throws BudgetExceeded
// when the tuple space is larger than cfg.budget; nothing partial is ever
// returned.  Deterministic for every thread count.
Classification classify(const Ring& ring, unsigned rank, Side side,
                        const EnumerationConfig& cfg = {});

std::vector<Submodule> collect_submodules(const Ring& ring, unsigned rank,
                                          Side side,
                                          const EnumerationConfig& cfg = {});

Snowflake build_snowflake(Classification cls);
Snowflake build_snowflake(const Ring& ring, unsigned rank, Side side,
                          const EnumerationConfig& cfg = {});

// Extract the core geometry of a snowflake.  For rank-2 runs the plane
// verdict is filled in via verify_plane.  Throws DegenerateCore if some
// submodule carries no core point.
CoreGeometry extract_core(const Ring& ring, const Snowflake& sf);

// Check the projective-plane axioms at order q: q^2+q+1 points and lines,
// q+1 points per line and lines per point, unique joining line and meeting
// point, and a quadrangle.  Failures are reported as data, not errors.
PlaneVerdict verify_plane(const CoreGeometry& core, unsigned q);

TwinReport twin_compare(const Ring& ring, unsigned rank,
                        const EnumerationConfig& cfg = {});

}  // namespace ternions
