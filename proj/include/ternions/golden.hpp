#pragma once

#include <array>

namespace ternions::golden {

// Reference data for the order-8 ternion ring (q = 2) under its 0-7 element
// labelling.  Everything here is a hand-written constant; nothing is
// computed by the library, so these tables can serve as an independent
// check of the computation.

using LabelTriple = std::array<unsigned, 3>;

// label -> matrix coordinates (a, b, c) of [[a, b], [0, c]]
extern const std::array<LabelTriple, 8> kLabelCoords;

extern const std::array<std::array<unsigned, 8>, 8> kAdditionTable;
extern const std::array<std::array<unsigned, 8>, 8> kMultiplicationTable;

extern const std::array<unsigned, 4> kIdeal1;       // {0, 4, 6, 7}
extern const std::array<unsigned, 4> kIdeal2;       // {0, 3, 5, 6}
extern const std::array<unsigned, 2> kRadical;      // {0, 6}
extern const std::array<unsigned, 2> kUnits;        // {1, 2}
extern const std::array<unsigned, 2> kNilpotents;   // {0, 6}
extern const std::array<unsigned, 4> kIdempotents;  // {3, 4, 5, 7}, 0 and 1 aside

// One free left cyclic submodule generated by non-unimodular triples: its
// two generators and its full eight-element point set.
struct SubmoduleData {
  std::array<LabelTriple, 2> generators;
  std::array<LabelTriple, 8> elements;
};

extern const std::array<SubmoduleData, 21> kSubmodules;

// the seven triples shared by nine submodules each (the core points)
extern const std::array<LabelTriple, 7> kDegree9Triples;
// the fourteen triples shared by three submodules each
extern const std::array<LabelTriple, 14> kDegree3Triples;

}  // namespace ternions::golden
