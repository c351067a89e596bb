#include "ternions/golden.hpp"

namespace ternions::golden {

const std::array<LabelTriple, 8> kLabelCoords = {{
    {0, 0, 0},  // 0
    {1, 0, 1},  // 1, the unity
    {1, 1, 1},  // 2
    {1, 1, 0},  // 3
    {0, 0, 1},  // 4
    {1, 0, 0},  // 5
    {0, 1, 0},  // 6
    {0, 1, 1},  // 7
}};

const std::array<std::array<unsigned, 8>, 8> kAdditionTable = {{
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 6, 7, 5, 4, 2, 3},
    {2, 6, 0, 4, 3, 7, 1, 5},
    {3, 7, 4, 0, 2, 6, 5, 1},
    {4, 5, 3, 2, 0, 1, 7, 6},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 2, 1, 5, 7, 3, 0, 4},
    {7, 3, 5, 1, 6, 2, 4, 0},
}};

const std::array<std::array<unsigned, 8>, 8> kMultiplicationTable = {{
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 2, 3, 4, 5, 6, 7},
    {0, 2, 1, 3, 7, 5, 6, 4},
    {0, 3, 5, 3, 6, 5, 6, 0},
    {0, 4, 4, 0, 4, 0, 0, 4},
    {0, 5, 3, 3, 0, 5, 6, 6},
    {0, 6, 6, 0, 6, 0, 0, 6},
    {0, 7, 7, 0, 7, 0, 0, 7},
}};

const std::array<unsigned, 4> kIdeal1 = {0, 4, 6, 7};
const std::array<unsigned, 4> kIdeal2 = {0, 3, 5, 6};
const std::array<unsigned, 2> kRadical = {0, 6};
const std::array<unsigned, 2> kUnits = {1, 2};
const std::array<unsigned, 2> kNilpotents = {0, 6};
const std::array<unsigned, 4> kIdempotents = {3, 4, 5, 7};

// The 21 distinct free left cyclic submodules generated by the 42
// non-unimodular triples.
const std::array<SubmoduleData, 21> kSubmodules = {{
    {{{{4, 6, 7}, {7, 6, 4}}},
     {{{0, 0, 0}, {4, 6, 7}, {7, 6, 4}, {6, 6, 0}, {4, 0, 4}, {0, 6, 6}, {6, 0, 6}, {7, 0, 7}}}},
    {{{{4, 7, 6}, {7, 4, 6}}},
     {{{0, 0, 0}, {4, 7, 6}, {7, 4, 6}, {6, 0, 6}, {4, 4, 0}, {0, 6, 6}, {6, 6, 0}, {7, 7, 0}}}},
    {{{{6, 4, 7}, {6, 7, 4}}},
     {{{0, 0, 0}, {6, 4, 7}, {6, 7, 4}, {6, 6, 0}, {0, 4, 4}, {6, 0, 6}, {0, 6, 6}, {0, 7, 7}}}},
    {{{{4, 4, 7}, {7, 7, 4}}},
     {{{0, 0, 0}, {4, 4, 7}, {7, 7, 4}, {6, 6, 0}, {4, 4, 4}, {0, 0, 6}, {6, 6, 6}, {7, 7, 7}}}},
    {{{{4, 7, 4}, {7, 4, 7}}},
     {{{0, 0, 0}, {4, 7, 4}, {7, 4, 7}, {6, 0, 6}, {4, 4, 4}, {0, 6, 0}, {6, 6, 6}, {7, 7, 7}}}},
    {{{{7, 4, 4}, {4, 7, 7}}},
     {{{0, 0, 0}, {7, 4, 4}, {4, 7, 7}, {0, 6, 6}, {4, 4, 4}, {6, 0, 0}, {6, 6, 6}, {7, 7, 7}}}},
    {{{{4, 4, 6}, {7, 7, 6}}},
     {{{0, 0, 0}, {4, 4, 6}, {7, 7, 6}, {6, 6, 6}, {4, 4, 0}, {0, 0, 6}, {6, 6, 0}, {7, 7, 0}}}},
    {{{{4, 6, 4}, {7, 6, 7}}},
     {{{0, 0, 0}, {4, 6, 4}, {7, 6, 7}, {6, 6, 6}, {4, 0, 4}, {0, 6, 0}, {6, 0, 6}, {7, 0, 7}}}},
    {{{{6, 4, 4}, {6, 7, 7}}},
     {{{0, 0, 0}, {6, 4, 4}, {6, 7, 7}, {6, 6, 6}, {0, 4, 4}, {6, 0, 0}, {0, 6, 6}, {0, 7, 7}}}},
    {{{{6, 6, 7}, {6, 6, 4}}},
     {{{0, 0, 0}, {6, 6, 7}, {6, 6, 4}, {6, 6, 0}, {0, 0, 4}, {6, 6, 6}, {0, 0, 6}, {0, 0, 7}}}},
    {{{{6, 7, 6}, {6, 4, 6}}},
     {{{0, 0, 0}, {6, 7, 6}, {6, 4, 6}, {6, 0, 6}, {0, 4, 0}, {6, 6, 6}, {0, 6, 0}, {0, 7, 0}}}},
    {{{{7, 6, 6}, {4, 6, 6}}},
     {{{0, 0, 0}, {7, 6, 6}, {4, 6, 6}, {0, 6, 6}, {4, 0, 0}, {6, 6, 6}, {6, 0, 0}, {7, 0, 0}}}},
    {{{{0, 6, 7}, {0, 6, 4}}},
     {{{0, 0, 0}, {0, 6, 7}, {0, 6, 4}, {0, 6, 0}, {0, 0, 4}, {0, 6, 6}, {0, 0, 6}, {0, 0, 7}}}},
    {{{{0, 7, 6}, {0, 4, 6}}},
     {{{0, 0, 0}, {0, 7, 6}, {0, 4, 6}, {0, 0, 6}, {0, 4, 0}, {0, 6, 6}, {0, 6, 0}, {0, 7, 0}}}},
    {{{{0, 4, 7}, {0, 7, 4}}},
     {{{0, 0, 0}, {0, 4, 7}, {0, 7, 4}, {0, 6, 0}, {0, 4, 4}, {0, 0, 6}, {0, 6, 6}, {0, 7, 7}}}},
    {{{{6, 0, 7}, {6, 0, 4}}},
     {{{0, 0, 0}, {6, 0, 7}, {6, 0, 4}, {6, 0, 0}, {0, 0, 4}, {6, 0, 6}, {0, 0, 6}, {0, 0, 7}}}},
    {{{{7, 0, 6}, {4, 0, 6}}},
     {{{0, 0, 0}, {7, 0, 6}, {4, 0, 6}, {0, 0, 6}, {4, 0, 0}, {6, 0, 6}, {6, 0, 0}, {7, 0, 0}}}},
    {{{{4, 0, 7}, {7, 0, 4}}},
     {{{0, 0, 0}, {4, 0, 7}, {7, 0, 4}, {6, 0, 0}, {4, 0, 4}, {0, 0, 6}, {6, 0, 6}, {7, 0, 7}}}},
    {{{{6, 7, 0}, {6, 4, 0}}},
     {{{0, 0, 0}, {6, 7, 0}, {6, 4, 0}, {6, 0, 0}, {0, 4, 0}, {6, 6, 0}, {0, 6, 0}, {0, 7, 0}}}},
    {{{{7, 6, 0}, {4, 6, 0}}},
     {{{0, 0, 0}, {7, 6, 0}, {4, 6, 0}, {0, 6, 0}, {4, 0, 0}, {6, 6, 0}, {6, 0, 0}, {7, 0, 0}}}},
    {{{{4, 7, 0}, {7, 4, 0}}},
     {{{0, 0, 0}, {4, 7, 0}, {7, 4, 0}, {6, 0, 0}, {4, 4, 0}, {0, 6, 0}, {6, 6, 0}, {7, 7, 0}}}},
}};

const std::array<LabelTriple, 7> kDegree9Triples = {{
    {6, 0, 0}, {0, 6, 0}, {0, 0, 6}, {6, 6, 0}, {6, 0, 6}, {0, 6, 6}, {6, 6, 6},
}};

const std::array<LabelTriple, 14> kDegree3Triples = {{
    {4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {4, 4, 0}, {4, 0, 4}, {0, 4, 4}, {4, 4, 4},
    {7, 0, 0}, {0, 7, 0}, {0, 0, 7}, {7, 7, 0}, {7, 0, 7}, {0, 7, 7}, {7, 7, 7},
}};

}  // namespace ternions::golden
