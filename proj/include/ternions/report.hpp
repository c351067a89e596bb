#pragma once

#include <string>

#include "ternions/snowflake.hpp"

namespace ternions {

// JSON reports, schema version "1".  Keys appear in a fixed order:
// schema_version, q, n, side, counts, degree_histogram, zero_tuple_degree,
// submodules, core, containment, coverage; each report carries the prefix
// of that list it has data for.  Histogram keys are strings, highest
// degree first.  Output is byte-identical for any worker count.
std::string report_classification(const Classification& cls);
std::string report_snowflake(const Ring& ring, const Snowflake& sf);
std::string report_core(const Ring& ring, const Snowflake& sf,
                        const CoreGeometry& core);
std::string report_twin(const Ring& ring, const TwinReport& tr);

// Bipartite incidence graph of the snowflake in DOT syntax: one node per
// submodule (S<k>, canonical order), one per covered nonzero tuple
// (t<code>, ascending) carrying degree and kind attributes, one edge per
// containment.  kind=core marks tuples lying entirely in the radical.
std::string export_dot(const Ring& ring, const Snowflake& sf);

// Plain-text operation tables in canonical encoding order.
std::string render_tables(const Ring& ring);

// The same tables in the 0-7 labelling; q = 2 only.
std::string render_label_tables(const Ring& ring);

}  // namespace ternions
