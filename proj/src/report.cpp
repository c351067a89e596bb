#include "ternions/report.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ternions {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json tuple_json(const Ring& ring, const ModuleSpace& ms,
                        TupleCode code) {
  const Tuple t = ms.decode(code);
  ordered_json j;
  ordered_json coords = ordered_json::array();
  for (Elem e : t) {
    const Ternion m = ring.decode(e);
    coords.push_back({m.a, m.b, m.c});
  }
  j["coords"] = coords;
  if (ring.has_labels()) {
    j["labels"] = labels_of(ring, t);
  }
  return j;
}

ordered_json counts_json(const Classification& cls) {
  ordered_json c;
  c["total_tuples"] = cls.total_tuples;
  c["unimodular"] = cls.unimodular;
  c["nonunimodular_free_generators"] = cls.nonunimodular_free_generators;
  c["nonunimodular_nonfree"] = cls.nonunimodular_nonfree;
  c["distinct_submodules"] = cls.distinct_submodules();
  return c;
}

ordered_json header_json(const Classification& cls) {
  ordered_json j;
  j["schema_version"] = "1";
  j["q"] = cls.q;
  j["n"] = cls.rank;
  j["side"] = to_string(cls.side);
  j["counts"] = counts_json(cls);
  return j;
}

void append_facts(ordered_json& j, const Classification& cls) {
  ordered_json cont;
  cont[cls.side == Side::left ? "generators_in_I1" : "generators_in_I2"] =
      cls.generators_in_ideal;
  j["containment"] = cont;
  ordered_json cov;
  cov["union_equals_ideal_power"] = cls.union_equals_ideal_power;
  j["coverage"] = cov;
}

void append_snowflake(ordered_json& j, const Ring& ring, const Snowflake& sf) {
  const ModuleSpace ms(ring, sf.classification.rank);
  ordered_json hist = ordered_json::object();
  for (auto it = sf.histogram.rbegin(); it != sf.histogram.rend(); ++it)
    hist[std::to_string(it->first)] = it->second;
  j["degree_histogram"] = hist;
  j["zero_tuple_degree"] = sf.zero_tuple_degree;
  ordered_json subs = ordered_json::array();
  for (const Submodule& sub : sf.classification.submodules) {
    ordered_json s;
    s["canonical_generator"] = tuple_json(ring, ms, sub.canonical_generator);
    ordered_json gens = ordered_json::array();
    for (TupleCode g : sub.generators) gens.push_back(tuple_json(ring, ms, g));
    s["generators"] = gens;
    ordered_json elems = ordered_json::array();
    for (TupleCode e : sub.elements) elems.push_back(tuple_json(ring, ms, e));
    s["elements"] = elems;
    subs.push_back(s);
  }
  j["submodules"] = subs;
}

void append_core(ordered_json& j, const Ring& ring, const Snowflake& sf,
                 const CoreGeometry& core) {
  const ModuleSpace ms(ring, sf.classification.rank);
  ordered_json c;
  ordered_json pts = ordered_json::array();
  for (const CorePoint& p : core.points) {
    ordered_json pj;
    pj["representative"] = tuple_json(ring, ms, p.representative);
    pj["class_size"] = p.members.size();
    pts.push_back(pj);
  }
  c["points"] = pts;
  c["lines"] = core.lines;
  c["line_multiplicities"] = core.multiplicities;
  if (core.verdict) {
    ordered_json v;
    v["is_projective_plane"] = core.verdict->is_projective_plane;
    if (core.verdict->is_projective_plane)
      v["order"] = core.verdict->order;
    else
      v["order"] = nullptr;
    v["failures"] = core.verdict->failures;
    c["verdict"] = v;
  } else {
    c["verdict"] = nullptr;
  }
  j["core"] = c;
}

ordered_json side_json(const Ring& ring, const Snowflake& sf,
                       const CoreGeometry& core) {
  ordered_json j;
  j["side"] = to_string(sf.classification.side);
  j["counts"] = counts_json(sf.classification);
  append_snowflake(j, ring, sf);
  append_core(j, ring, sf, core);
  append_facts(j, sf.classification);
  return j;
}

std::string finish(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string report_classification(const Classification& cls) {
  ordered_json j = header_json(cls);
  append_facts(j, cls);
  return finish(j);
}

std::string report_snowflake(const Ring& ring, const Snowflake& sf) {
  ordered_json j = header_json(sf.classification);
  append_snowflake(j, ring, sf);
  append_facts(j, sf.classification);
  return finish(j);
}

std::string report_core(const Ring& ring, const Snowflake& sf,
                        const CoreGeometry& core) {
  ordered_json j = header_json(sf.classification);
  append_snowflake(j, ring, sf);
  append_core(j, ring, sf, core);
  append_facts(j, sf.classification);
  return finish(j);
}

std::string report_twin(const Ring& ring, const TwinReport& tr) {
  ordered_json j;
  j["schema_version"] = "1";
  j["q"] = tr.left.classification.q;
  j["n"] = tr.left.classification.rank;
  j["left"] = side_json(ring, tr.left, tr.left_core);
  j["right"] = side_json(ring, tr.right, tr.right_core);
  ordered_json eq;
  eq["histograms_equal"] = tr.histograms_equal;
  eq["core_points_equal"] = tr.core_points_equal;
  eq["core_lines_equal"] = tr.core_lines_equal;
  j["equality"] = eq;
  return finish(j);
}

std::string export_dot(const Ring& ring, const Snowflake& sf) {
  const ModuleSpace ms(ring, sf.classification.rank);
  std::ostringstream os;
  os << "graph snowflake {\n";
  for (std::size_t k = 0; k < sf.classification.submodules.size(); ++k)
    os << "  S" << k << ";\n";
  for (const auto& [code, degree] : sf.degrees) {
    const bool core = ms.all_in_radical(ms.decode(code));
    os << "  t" << code << " [degree=" << degree << ", kind="
       << (core ? "core" : "peripheral") << "];\n";
  }
  for (std::size_t k = 0; k < sf.classification.submodules.size(); ++k)
    for (TupleCode e : sf.classification.submodules[k].elements)
      if (e != 0) os << "  S" << k << " -- t" << e << ";\n";
  os << "}\n";
  return os.str();
}

std::string render_tables(const Ring& ring) {
  const int width = int(std::to_string(ring.size() - 1).size());
  std::ostringstream os;
  const auto grid = [&](const char* title, auto op) {
    os << title << "\n";
    for (Elem i = 0; i < ring.size(); ++i) {
      for (Elem j = 0; j < ring.size(); ++j) {
        if (j) os << " ";
        os << std::setw(width) << op(i, j);
      }
      os << "\n";
    }
  };
  grid("addition", [&](Elem x, Elem y) { return ring.add(x, y); });
  os << "\n";
  grid("multiplication", [&](Elem x, Elem y) { return ring.mul(x, y); });
  return os.str();
}

std::string render_label_tables(const Ring& ring) {
  std::ostringstream os;
  const auto grid = [&](const char* title, auto op) {
    os << title << "\n";
    os << "  |";
    for (unsigned j = 0; j < 8; ++j) os << " " << j;
    os << "\n--+----------------\n";
    for (unsigned i = 0; i < 8; ++i) {
      os << i << " |";
      for (unsigned j = 0; j < 8; ++j)
        os << " "
           << ring.label_of(
                  op(ring.element_of_label(i), ring.element_of_label(j)));
      os << "\n";
    }
  };
  grid("addition", [&](Elem x, Elem y) { return ring.add(x, y); });
  os << "\n";
  grid("multiplication", [&](Elem x, Elem y) { return ring.mul(x, y); });
  return os.str();
}

}  // namespace ternions
