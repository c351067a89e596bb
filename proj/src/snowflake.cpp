#include "ternions/snowflake.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace ternions {

namespace {

struct ChunkResult {
  std::uint64_t unimodular = 0;
  std::uint64_t nonfree = 0;
  std::vector<TupleCode> free_generators;  // ascending within the chunk
};

// Span builder with reusable scratch, used in the enumeration hot loop.
class FreeScanner {
public:
  FreeScanner(const Ring& ring, unsigned len) : ring_(ring), len_(len) {
    weights_.resize(len);
    TupleCode w = 1;
    for (unsigned i = len; i-- > 0;) {
      weights_[i] = w;
      w *= ring.size();
    }
    seen_.reserve(ring.size() * 2);
  }

  // True iff the tuple generates freely on the given side.
  bool is_free(Side side, const Elem* entries) {
    seen_.clear();
    for (Elem alpha = 0; alpha < ring_.size(); ++alpha) {
      TupleCode code = 0;
      for (unsigned i = 0; i < len_; ++i) {
        const Elem s = side == Side::left ? ring_.mul(alpha, entries[i])
                                          : ring_.mul(entries[i], alpha);
        code += TupleCode(s) * weights_[i];
      }
      if (!seen_.insert(code).second) return false;
    }
    return true;
  }

private:
  const Ring& ring_;
  unsigned len_;
  std::vector<TupleCode> weights_;
  std::unordered_set<TupleCode> seen_;
};

void scan_range(const Ring& ring, unsigned len, Side side, TupleCode begin,
                TupleCode end, ChunkResult& out) {
  FreeScanner scanner(ring, len);
  std::vector<Elem> digits(len);
  TupleCode rest = begin;
  for (unsigned i = len; i-- > 0;) {
    digits[i] = Elem(rest % ring.size());
    rest /= ring.size();
  }

  for (TupleCode code = begin; code < end; ++code) {
    bool reaches_top = false, reaches_bottom = false;
    for (unsigned i = 0; i < len; ++i) {
      reaches_top |= !ring.in_ideal1(digits[i]);
      reaches_bottom |= !ring.in_ideal2(digits[i]);
    }
    if (reaches_top && reaches_bottom) {
      ++out.unimodular;
    } else if (scanner.is_free(side, digits.data())) {
      out.free_generators.push_back(code);
    } else {
      ++out.nonfree;
    }

    // odometer step, least significant digit last
    for (unsigned i = len; i-- > 0;) {
      if (++digits[i] < ring.size()) break;
      digits[i] = 0;
    }
  }
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct SpanHash {
  std::size_t operator()(const std::vector<TupleCode>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (TupleCode x : v) {
      h ^= std::size_t(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

Classification classify(const Ring& ring, unsigned rank, Side side,
                        const EnumerationConfig& cfg) {
  const ModuleSpace ms(ring, rank);
  const std::uint64_t total = ms.tuple_count();
  if (total > cfg.budget)
    throw BudgetExceeded("enumeration of " + std::to_string(total) +
                         " tuples exceeds the budget of " +
                         std::to_string(cfg.budget));

  // Parallel map over disjoint code ranges; the merge below is a fixed-order
  // reduction, so the result is identical for every thread count.
  unsigned threads = resolve_threads(cfg.threads);
  if (threads > total) threads = unsigned(total);
  std::vector<ChunkResult> chunks(threads);
  {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) {
      const TupleCode begin = total / threads * i + std::min<TupleCode>(i, total % threads);
      const TupleCode end =
          begin + total / threads + (i < total % threads ? 1 : 0);
      pool.emplace_back(scan_range, std::cref(ring), ms.length(), side, begin,
                        end, std::ref(chunks[i]));
    }
    for (auto& t : pool) t.join();
  }

  Classification cls;
  cls.q = ring.q();
  cls.rank = rank;
  cls.side = side;
  cls.total_tuples = total;
  std::vector<TupleCode> generators;
  for (const ChunkResult& c : chunks) {
    cls.unimodular += c.unimodular;
    cls.nonunimodular_nonfree += c.nonfree;
    generators.insert(generators.end(), c.free_generators.begin(),
                      c.free_generators.end());
  }
  cls.nonunimodular_free_generators = generators.size();

  // Deduplicate by element set.  Generators arrive in ascending code order,
  // so the first generator of each new set is its canonical one and the
  // submodule list comes out sorted by canonical generator.
  std::unordered_map<std::vector<TupleCode>, std::size_t, SpanHash> index;
  for (TupleCode gen : generators) {
    std::vector<TupleCode> span = ms.span(side, ms.decode(gen));
    if (span.size() != ring.size())
      throw Error("free generator produced a short span");
    auto [it, inserted] = index.try_emplace(std::move(span), cls.submodules.size());
    if (inserted) {
      Submodule sub;
      sub.side = side;
      sub.canonical_generator = gen;
      sub.generators.push_back(gen);
      sub.elements = it->first;
      cls.submodules.push_back(std::move(sub));
    } else {
      cls.submodules[it->second].generators.push_back(gen);
    }
  }

  // Containment: every generator inside the ideal power for this side.
  cls.generators_in_ideal = true;
  for (TupleCode gen : generators) {
    const Tuple t = ms.decode(gen);
    const bool inside =
        side == Side::left ? ms.all_in_ideal1(t) : ms.all_in_ideal2(t);
    if (!inside) {
      cls.generators_in_ideal = false;
      break;
    }
  }

  // Coverage: the union of the submodules is exactly the ideal power.
  std::uint64_t ideal_power = 1;
  for (unsigned i = 0; i < ms.length(); ++i)
    ideal_power *= std::uint64_t(ring.q()) * ring.q();
  std::unordered_set<TupleCode> covered;
  bool all_inside_ideal = true;
  for (const Submodule& sub : cls.submodules)
    for (TupleCode code : sub.elements)
      if (covered.insert(code).second) {
        const Tuple t = ms.decode(code);
        all_inside_ideal &=
            side == Side::left ? ms.all_in_ideal1(t) : ms.all_in_ideal2(t);
      }
  cls.union_equals_ideal_power =
      all_inside_ideal && covered.size() == ideal_power;

  return cls;
}

std::vector<Submodule> collect_submodules(const Ring& ring, unsigned rank,
                                          Side side,
                                          const EnumerationConfig& cfg) {
  return classify(ring, rank, side, cfg).submodules;
}

Snowflake build_snowflake(Classification cls) {
  Snowflake sf;
  sf.classification = std::move(cls);

  std::unordered_map<TupleCode, std::uint32_t> degree;
  for (const Submodule& sub : sf.classification.submodules)
    for (TupleCode code : sub.elements) {
      if (code == 0)
        ++sf.zero_tuple_degree;
      else
        ++degree[code];
    }

  sf.degrees.assign(degree.begin(), degree.end());
  std::sort(sf.degrees.begin(), sf.degrees.end());
  for (const auto& [code, d] : sf.degrees) ++sf.histogram[d];
  return sf;
}

Snowflake build_snowflake(const Ring& ring, unsigned rank, Side side,
                          const EnumerationConfig& cfg) {
  return build_snowflake(classify(ring, rank, side, cfg));
}

CoreGeometry extract_core(const Ring& ring, const Snowflake& sf) {
  const ModuleSpace ms(ring, sf.classification.rank);
  const unsigned len = ms.length();
  const Field& field = ring.field();

  // Group the nonzero all-radical tuples into GF(q)* scaling classes.  A
  // radical entry is (0, b, 0), and unit scaling on either side multiplies
  // every b coordinate by the same nonzero field scalar, so the class of a
  // tuple is determined by its b vector up to GF(q)* and the representative
  // is the member whose first nonzero b is 1.
  const std::vector<Elem>& rad = ring.radical_elems();
  std::map<TupleCode, std::vector<TupleCode>> classes;
  std::vector<std::size_t> odo(len, 0);
  bool exhausted = false;
  while (!exhausted) {
    bool all_zero = true;
    for (std::size_t d : odo) all_zero &= rad[d] == 0;
    if (!all_zero) {
      Tuple t(len);
      for (unsigned i = 0; i < len; ++i) t[i] = rad[odo[i]];
      unsigned lead = 0;
      for (unsigned i = 0; i < len; ++i)
        if (t[i] != 0) {
          lead = ring.decode(t[i]).b;
          break;
        }
      const unsigned scale = field.inv(lead);
      Tuple rep(len);
      for (unsigned i = 0; i < len; ++i)
        rep[i] = ring.encode(Ternion{0, field.mul(scale, ring.decode(t[i]).b), 0});
      classes[ms.encode(rep)].push_back(ms.encode(t));
    }
    exhausted = true;
    for (unsigned i = len; i-- > 0;) {
      if (++odo[i] < rad.size()) {
        exhausted = false;
        break;
      }
      odo[i] = 0;
    }
  }

  CoreGeometry core;
  core.points.reserve(classes.size());
  for (auto& [rep, members] : classes) {
    std::sort(members.begin(), members.end());
    core.points.push_back(CorePoint{rep, std::move(members)});
  }

  // Each submodule carries the line of core points it contains.  Classes
  // never straddle a submodule boundary; this is re-checked here rather
  // than assumed.
  std::map<std::vector<std::uint32_t>, std::uint32_t> line_count;
  for (const Submodule& sub : sf.classification.submodules) {
    std::vector<std::uint32_t> line;
    for (std::uint32_t p = 0; p < core.points.size(); ++p) {
      unsigned inside = 0;
      for (TupleCode member : core.points[p].members)
        inside += std::binary_search(sub.elements.begin(), sub.elements.end(),
                                     member);
      if (inside == core.points[p].members.size())
        line.push_back(p);
      else if (inside != 0)
        throw Error("scaling class split by a submodule");
    }
    if (line.empty())
      throw DegenerateCore("submodule with canonical generator code " +
                           std::to_string(sub.canonical_generator) +
                           " contains no core point");
    ++line_count[line];
  }

  for (const auto& [line, count] : line_count) {
    core.lines.push_back(line);
    core.multiplicities.push_back(count);
  }

  if (sf.classification.rank == 2)
    core.verdict = verify_plane(core, ring.q());
  return core;
}

PlaneVerdict verify_plane(const CoreGeometry& core, unsigned q) {
  PlaneVerdict v;
  auto& fails = v.failures;
  const std::size_t expected = std::size_t(q) * q + q + 1;
  const std::size_t npoints = core.points.size();
  const std::size_t nlines = core.lines.size();

  if (npoints != expected)
    fails.push_back("expected " + std::to_string(expected) + " points, found " +
                    std::to_string(npoints));
  if (nlines != expected)
    fails.push_back("expected " + std::to_string(expected) + " lines, found " +
                    std::to_string(nlines));

  for (std::size_t l = 0; l < nlines; ++l)
    if (core.lines[l].size() != q + 1)
      fails.push_back("line " + std::to_string(l) + " has " +
                      std::to_string(core.lines[l].size()) +
                      " points, expected " + std::to_string(q + 1));

  std::vector<std::uint32_t> point_degree(npoints, 0);
  for (const auto& line : core.lines)
    for (std::uint32_t p : line)
      if (p < npoints) ++point_degree[p];
  for (std::size_t p = 0; p < npoints; ++p)
    if (point_degree[p] != q + 1)
      fails.push_back("point " + std::to_string(p) + " lies on " +
                      std::to_string(point_degree[p]) + " lines, expected " +
                      std::to_string(q + 1));

  // joining lines: every point pair on exactly one line
  std::vector<std::vector<std::uint32_t>> pair_lines(npoints * npoints);
  for (std::size_t l = 0; l < nlines; ++l)
    for (std::size_t i = 0; i < core.lines[l].size(); ++i)
      for (std::size_t j = i + 1; j < core.lines[l].size(); ++j) {
        const std::uint32_t a = core.lines[l][i], b = core.lines[l][j];
        if (a < npoints && b < npoints)
          pair_lines[a * npoints + b].push_back(std::uint32_t(l));
      }
  for (std::size_t a = 0; a < npoints; ++a)
    for (std::size_t b = a + 1; b < npoints; ++b)
      if (pair_lines[a * npoints + b].size() != 1)
        fails.push_back("points " + std::to_string(a) + " and " +
                        std::to_string(b) + " lie on " +
                        std::to_string(pair_lines[a * npoints + b].size()) +
                        " common lines");

  // meeting points: every line pair meets in exactly one point
  for (std::size_t l = 0; l < nlines; ++l)
    for (std::size_t m = l + 1; m < nlines; ++m) {
      std::size_t common = 0;
      std::size_t i = 0, j = 0;
      while (i < core.lines[l].size() && j < core.lines[m].size()) {
        if (core.lines[l][i] < core.lines[m][j])
          ++i;
        else if (core.lines[l][i] > core.lines[m][j])
          ++j;
        else {
          ++common;
          ++i;
          ++j;
        }
      }
      if (common != 1)
        fails.push_back("lines " + std::to_string(l) + " and " +
                        std::to_string(m) + " meet in " +
                        std::to_string(common) + " points");
    }

  // quadrangle: four points, no three on a common line
  auto collinear = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    for (std::uint32_t l : pair_lines[a * npoints + b])
      if (std::binary_search(core.lines[l].begin(), core.lines[l].end(), c))
        return true;
    return false;
  };
  bool quadrangle = false;
  for (std::uint32_t a = 0; a < npoints && !quadrangle; ++a)
    for (std::uint32_t b = a + 1; b < npoints && !quadrangle; ++b)
      for (std::uint32_t c = b + 1; c < npoints && !quadrangle; ++c) {
        if (collinear(a, b, c)) continue;
        for (std::uint32_t d = c + 1; d < npoints && !quadrangle; ++d)
          if (!collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d))
            quadrangle = true;
      }
  if (!quadrangle) fails.push_back("no quadrangle found");

  v.is_projective_plane = fails.empty();
  v.order = v.is_projective_plane ? q : 0;
  return v;
}

TwinReport twin_compare(const Ring& ring, unsigned rank,
                        const EnumerationConfig& cfg) {
  TwinReport tw;
  tw.left = build_snowflake(ring, rank, Side::left, cfg);
  tw.right = build_snowflake(ring, rank, Side::right, cfg);
  tw.left_core = extract_core(ring, tw.left);
  tw.right_core = extract_core(ring, tw.right);

  tw.histograms_equal = tw.left.histogram == tw.right.histogram &&
                        tw.left.zero_tuple_degree == tw.right.zero_tuple_degree;

  tw.core_points_equal = tw.left_core.points.size() == tw.right_core.points.size();
  if (tw.core_points_equal)
    for (std::size_t i = 0; i < tw.left_core.points.size(); ++i)
      if (tw.left_core.points[i].representative !=
              tw.right_core.points[i].representative ||
          tw.left_core.points[i].members != tw.right_core.points[i].members) {
        tw.core_points_equal = false;
        break;
      }

  // Point arrays agree whenever core_points_equal holds, so index-based
  // line comparison is sound; lines are kept in lexicographic order.
  tw.core_lines_equal =
      tw.core_points_equal && tw.left_core.lines == tw.right_core.lines;
  return tw;
}

}  // namespace ternions
