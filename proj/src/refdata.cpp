#include "maxgon/refdata.hpp"

namespace maxgon {
namespace refdata {

const std::vector<IsogenyRow>& genus6_candidates() {
  static const std::vector<IsogenyRow> rows = {
      {"(T - 2)(T + 1)(T^2 - 2T - 2)(T^2 - 8)", {0, 0, 0, 0, 12, 4}},
      {"(T^2 - 8)(T^4 - 3T^3 - 2T^2 + 7T + 1)", {0, 0, 1, 0, 8, 3}},
      {"(T^2 - 8)(T^4 - 3T^3 - 2T^2 + 8T - 2)", {0, 0, 2, 0, 4, 1}},
  };
  return rows;
}

const std::vector<IsogenyRow>& genus7_candidates() {
  static const std::vector<IsogenyRow> rows = {
      {"T^7 - 3T^6 - 12T^5 + 36T^4 + 44T^3 - 132T^2 - 44T + 141", {0, 0, 0, 8, 0, 4, 9}},
      {"T^7 - 3T^6 - 12T^5 + 38T^4 + 34T^3 - 132T^2 + 13T + 78", {0, 0, 2, 4, 0, 6, 1}},
      {"T(T^6 - 3T^5 - 12T^4 + 39T^3 + 27T^2 - 126T + 57)", {0, 0, 3, 0, 0, 13, 9}},
      {"T^7 - 3T^6 - 12T^5 + 40T^4 + 24T^3 - 132T^2 + 75T + 1", {0, 0, 4, 0, 0, 9, 10}},
      {"(T^3 - 4T^2 + 3T + 1)(T^4 + T^3 - 11T^2 - 8T + 25)", {0, 0, 4, 1, 0, 5, 6}},
      {"(T^3 - T^2 - 7T + 6)(T^4 - 2T^3 - 7T^2 + 14T - 2)", {0, 0, 5, 0, 0, 9, 12}},
      {"T^7 - 3T^6 - 11T^5 + 33T^4 + 33T^3 - 99T^2 - 14T + 52", {0, 1, 0, 4, 0, 9, 10}},
      {"(T + 2)(T^6 - 5T^5 - T^4 + 35T^3 - 36T^2 - 30T + 38)", {0, 1, 0, 5, 0, 4, 10}},
      {"T^7 - 3T^6 - 11T^5 + 33T^4 + 35T^3 - 105T^2 - 25T + 86", {0, 1, 0, 6, 0, 4, 11}},
      {"T^7 - 3T^6 - 11T^5 + 33T^4 + 35T^3 - 105T^2 - 24T + 83", {0, 1, 0, 6, 0, 5, 11}},
      {"(T^3 - 2T^2 - 5T + 8)(T^4 - T^3 - 8T^2 + 4T + 12)", {0, 1, 0, 7, 0, 4, 12}},
      {"T^7 - 3T^6 - 10T^5 + 30T^4 + 24T^3 - 72T^2 + 11", {0, 2, 0, 1, 0, 10, 11}},
      {"(T^2 - T - 5)(T^5 - 2T^4 - 7T^3 + 13T^2 + 3T - 7)", {0, 2, 0, 2, 0, 4, 11}},
      {"T^7 - 3T^6 - 10T^5 + 30T^4 + 25T^3 - 75T^2 - 3T + 21", {0, 2, 0, 2, 0, 9, 12}},
      {"T^7 - 3T^6 - 10T^5 + 30T^4 + 25T^3 - 75T^2 + 2T + 7", {0, 2, 0, 2, 0, 14, 13}},
      {"(T - 1)(T^2 - T - 5)(T^4 - T^3 - 8T^2 + 5T + 9)", {0, 2, 0, 3, 0, 3, 12}},
      {"T^7 - 3T^6 - 10T^5 + 30T^4 + 26T^3 - 78T^2 - 6T + 31", {0, 2, 0, 3, 0, 8, 13}},
      {"T^7 - 3T^6 - 10T^5 + 30T^4 + 26T^3 - 78T^2 - 5T + 28", {0, 2, 0, 3, 0, 9, 13}},
      {"(T^2 - T - 5)(T^5 - 2T^4 - 7T^3 + 13T^2 + 5T - 11)", {0, 2, 0, 4, 0, 2, 13}},
      {"T^7 - 3T^6 - 10T^5 + 30T^4 + 27T^3 - 81T^2 - 13T + 52", {0, 2, 0, 4, 0, 3, 13}},
      {"T^7 - 3T^6 - 10T^5 + 30T^4 + 27T^3 - 81T^2 - 9T + 41", {0, 2, 0, 4, 0, 7, 14}},
      {"(T^2 - 2T - 2)(T^5 - T^4 - 10T^3 + 8T^2 + 23T - 19)", {0, 2, 0, 4, 0, 8, 14}},
      {"T^7 - 3T^6 - 10T^5 + 30T^4 + 28T^3 - 84T^2 - 15T + 59", {0, 2, 0, 5, 0, 3, 14}},
      {"T^7 - 3T^6 - 10T^5 + 30T^4 + 28T^3 - 84T^2 - 12T + 51", {0, 2, 0, 5, 0, 6, 15}},
      {"(T + 1)(T^3 - 2T^2 - 5T + 8)^2", {0, 2, 0, 6, 0, 4, 16}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 18T^3 - 54T^2 + T + 11", {0, 3, 0, 0, 0, 7, 14}},
      {"T(T^2 - T - 5)(T^4 - 2T^3 - 6T^2 + 11T - 1)", {0, 3, 0, 0, 0, 11, 15}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 19T^3 - 57T^2 - 2T + 21", {0, 3, 0, 1, 0, 5, 15}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 19T^3 - 57T^2 - T + 18", {0, 3, 0, 1, 0, 6, 15}},
      {"(T^2 - T - 5)(T^5 - 2T^4 - 6T^3 + 11T^2 - 2)", {0, 3, 0, 1, 0, 9, 16}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 19T^3 - 57T^2 + 3T + 7", {0, 3, 0, 1, 0, 10, 16}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 19T^3 - 57T^2 + 4T + 4", {0, 3, 0, 1, 0, 11, 16}},
      {"(T^3 - T^2 - 5T + 1)(T^4 - 2T^3 - 6T^2 + 10T + 1)", {0, 3, 0, 1, 0, 12, 16}},
      {"(T - 1)(T^2 - 2T - 2)(T^4 - 9T^2 - 2T + 14)", {0, 3, 0, 2, 0, 4, 16}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 20T^3 - 60T^2 - 3T + 25", {0, 3, 0, 2, 0, 5, 16}},
      {"(T^2 - T - 5)(T^5 - 2T^4 - 6T^3 + 11T^2 + T - 4)", {0, 3, 0, 2, 0, 7, 17}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 20T^3 - 60T^2 + 17", {0, 3, 0, 2, 0, 8, 17}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 20T^3 - 60T^2 + T + 14", {0, 3, 0, 2, 0, 9, 17}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 20T^3 - 60T^2 + 2T + 11", {0, 3, 0, 2, 0, 10, 17}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 20T^3 - 60T^2 + 3T + 8", {0, 3, 0, 2, 0, 11, 17}},
      {"(T^3 - T^2 - 6T + 3)(T^4 - 2T^3 - 5T^2 + 7T + 3)", {0, 3, 0, 2, 0, 11, 18}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 20T^3 - 60T^2 + 4T + 6", {0, 3, 0, 2, 0, 12, 18}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 21T^3 - 63T^2 - 5T + 32", {0, 3, 0, 3, 0, 4, 17}},
      {"(T - 1)(T^2 - 2T - 2)(T^2 - T - 5)(T^2 + T - 3)", {0, 3, 0, 3, 0, 5, 18}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 21T^3 - 63T^2 - 3T + 27", {0, 3, 0, 3, 0, 6, 18}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 21T^3 - 63T^2 - 2T + 24", {0, 3, 0, 3, 0, 7, 18}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 21T^3 - 63T^2 - T + 21", {0, 3, 0, 3, 0, 8, 18}},
      {"(T^3 - 6T - 3)(T^4 - 3T^3 - 3T^2 + 12T - 6)", {0, 3, 0, 3, 0, 9, 18}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 21T^3 - 63T^2 + 19", {0, 3, 0, 3, 0, 9, 19}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 22T^3 - 66T^2 - 5T + 34", {0, 3, 0, 4, 0, 5, 19}},
      {"T^7 - 3T^6 - 9T^5 + 27T^4 + 22T^3 - 66T^2 - 4T + 31", {0, 3, 0, 4, 0, 6, 19}},
      {"(T - 1)(T + 2)(T^2 - 2T - 2)(T^3 - 2T^2 - 5T + 8)", {0, 3, 0, 4, 0, 6, 20}},
      {"(T - 1)(T^6 - 2T^5 - 10T^4 + 14T^3 + 28T^2 - 14T - 11)", {0, 4, 0, 0, 0, 7, 20}},
      {"(T^3 - T^2 - 6T + 4)(T^4 - 2T^3 - 4T^2 + 4T + 2)", {0, 4, 0, 0, 0, 8, 20}},
      {"T^7 - 3T^6 - 8T^5 + 24T^4 + 14T^3 - 42T^2 + 4T + 9", {0, 4, 0, 0, 0, 8, 21}},
      {"T^7 - 3T^6 - 8T^5 + 24T^4 + 14T^3 - 42T^2 + 5T + 6", {0, 4, 0, 0, 0, 9, 21}},
      {"T^7 - 3T^6 - 8T^5 + 24T^4 + 14T^3 - 42T^2 + 6T + 3", {0, 4, 0, 0, 0, 10, 21}},
      {"T(T^6 - 3T^5 - 8T^4 + 24T^3 + 14T^2 - 42T + 7)", {0, 4, 0, 0, 0, 11, 21}},
      {"(T - 1)(T^6 - 2T^5 - 10T^4 + 14T^3 + 29T^2 - 16T - 13)", {0, 4, 0, 1, 0, 7, 22}},
      {"T^7 - 3T^6 - 8T^5 + 24T^4 + 15T^3 - 45T^2 + 4T + 10", {0, 4, 0, 1, 0, 8, 22}},
      {"T^7 - 3T^6 - 8T^5 + 24T^4 + 15T^3 - 45T^2 + 4T + 11", {0, 4, 0, 1, 0, 8, 23}},
      {"T^7 - 3T^6 - 8T^5 + 24T^4 + 15T^3 - 45T^2 + 5T + 7", {0, 4, 0, 1, 0, 9, 22}},
      {"T^7 - 3T^6 - 8T^5 + 24T^4 + 15T^3 - 45T^2 + 5T + 8", {0, 4, 0, 1, 0, 9, 23}},
      {"T^7 - 3T^6 - 8T^5 + 24T^4 + 15T^3 - 45T^2 + 6T + 4", {0, 4, 0, 1, 0, 10, 22}},
      {"(T^2 - T - 5)(T^5 - 2T^4 - 5T^3 + 9T^2 - T - 1)", {0, 4, 0, 1, 0, 10, 23}},
      {"T^7 - 3T^6 - 8T^5 + 24T^4 + 15T^3 - 45T^2 + 7T + 1", {0, 4, 0, 1, 0, 11, 22}},
      {"T^7 - 3T^6 - 8T^5 + 24T^4 + 15T^3 - 45T^2 + 7T + 2", {0, 4, 0, 1, 0, 11, 23}},
      {"T(T^3 - 2T^2 - 5T + 8)(T^3 - T^2 - 5T + 1)", {0, 4, 0, 1, 0, 12, 24}},
      {"T^7 - 3T^6 - 8T^5 + 24T^4 + 16T^3 - 48T^2 + 3T + 14", {0, 4, 0, 2, 0, 7, 23}},
      {"(T - 1)^2(T^2 - T - 5)(T^3 - 6T - 3)", {0, 4, 0, 2, 0, 7, 24}},
      {"T^7 - 3T^6 - 8T^5 + 24T^4 + 16T^3 - 48T^2 + 4T + 11", {0, 4, 0, 2, 0, 8, 23}},
      {"(T^3 - 2T^2 - 4T + 6)(T^4 - T^3 - 6T^2 + 2T + 2)", {0, 4, 0, 2, 0, 8, 24}},
      {"T^7 - 3T^6 - 8T^5 + 24T^4 + 16T^3 - 48T^2 + 4T + 13", {0, 4, 0, 2, 0, 8, 25}},
      {"(T + 2)(T^6 - 5T^5 + 2T^4 + 20T^3 - 24T^2 + 5)", {0, 4, 0, 2, 0, 9, 25}},
      {"(T - 1)(T^6 - 2T^5 - 9T^4 + 12T^3 + 23T^2 - 10T - 1)", {0, 5, 0, 0, 0, 10, 28}},
      {"T^7 - 3T^6 - 7T^5 + 21T^4 + 11T^3 - 33T^2 + 9T + 2", {0, 5, 0, 0, 0, 10, 29}},
      {"(T - 1)T(T + 2)(T^2 - 3T + 1)(T^2 - T - 5)", {0, 5, 0, 0, 0, 11, 30}},
      {"T^7 - 3T^6 - 7T^5 + 21T^4 + 11T^3 - 33T^2 + 10T + 1", {0, 5, 0, 0, 0, 11, 31}},
      {"(T - 1)(T^3 - T^2 - 5T + 1)^2", {0, 5, 0, 0, 0, 12, 32}},
  };
  return rows;
}

const std::vector<IsogenyRow>& genus9_candidates() {
  static const std::vector<IsogenyRow> rows = {
      {"(T + 1)(T^4 - 2T^3 - 6T^2 + 10T + 1)^2", {0, 4, 0, 0, 0, 8, 0, 18, 64}},
  };
  return rows;
}

const std::vector<QuarticRow>& pointless_quartics_f2() {
  static const std::vector<QuarticRow> rows = {
      {"x^4 + x*y^3 + y^4 + x*y*z^2 + x*z^3 + y*z^3 + z^4",
       "(T - 2)(T^2 - T - 5)", {0, 1, 1}},
      {"x^4 + x*y^3 + y^4 + x^2*z^2 + x*y*z^2 + y*z^3 + z^4",
       "(T - 2)(T^2 - T - 4)", {0, 2, 2}},
      {"x^4 + x*y^3 + y^4 + x^3*z + x*y*z^2 + y*z^3 + z^4",
       "T^3 - 3T^2 - 4T + 13", {0, 0, 1}},
      {"x^4 + x^2*y^2 + y^4 + x^2*y*z + x*y^2*z + x^2*z^2 + x*y*z^2 + y^2*z^2 + z^4",
       "(T - 1)^3", {0, 7, 8}},
  };
  return rows;
}

const std::vector<std::pair<u32, u32>>& quartic_class_counts() {
  static const std::vector<std::pair<u32, u32>> rows = {
      {2, 4},  {3, 8},  {4, 21}, {5, 31}, {7, 32},
      {8, 39}, {9, 27}, {11, 21}, {13, 11}, {16, 8},
      {17, 7}, {19, 2}, {23, 2}, {29, 1}, {32, 1},
  };
  return rows;
}

const std::vector<std::pair<std::string, u64>>& survivor_counts() {
  static const std::vector<std::pair<std::string, u64>> rows = {
      {"G6D7", 110770},
      {"G7D9C1", 162552},
      {"G7D9C2", 5314648},     // beyond desk scale
      {"G7D9C3", 75877946},    // beyond desk scale
  };
  return rows;
}

const std::vector<std::pair<u32, u32>>& gate_pairs() {
  static const std::vector<std::pair<u32, u32>> rows = {
      {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 7}, {3, 8}, {3, 9}, {3, 11},
      {3, 13}, {3, 16}, {3, 17}, {3, 19}, {3, 23}, {3, 25}, {3, 27},
      {3, 29}, {3, 31}, {3, 32},
      {4, 2}, {4, 3}, {4, 4}, {4, 5}, {4, 7},
      {5, 2}, {5, 3}, {5, 4},
      {6, 2}, {6, 3},
      {7, 2}, {8, 2}, {9, 2}, {10, 2},
  };
  return rows;
}

const std::vector<VanishingRow>& vanishing_table() {
  static const std::vector<VanishingRow> rows = {
      {3, {{1}}},
      {4, {{1}, {2}}},
      {5, {{1}, {3}}},
      {6, {{1}, {2}, {4}}},
      {7, {{1}, {5}, {2, 3}}},
      {8, {{1}, {2}, {3}, {6}}},
      {9, {{1}, {7}, {2, 3}, {2, 5}, {3, 4}}},
      {10, {{1}, {2}, {4}, {8}, {3, 5}}},
  };
  return rows;
}

const std::vector<SpaceCurveRow>& excessive_genus4_curves() {
  static const std::vector<SpaceCurveRow> rows = {
      {2, "x*y + z^2 + z*w + w^2", "x^3 + y^3 + z^3 + y^2*w + x*z*w"},
      {3, "x*y + z^2 + w^2", "x^3 + y^3 + y*z^2 + x*w^2 - y*w^2 - z*w^2"},
  };
  return rows;
}

const std::vector<UniqueQuarticRow>& unique_quartics() {
  static const std::vector<UniqueQuarticRow> rows = {
      {29, 1, "x^4 + y^4 + z^4", "(T - 10)^3"},
      {2, 5,
       "(x^2 + x*z)^2 + (y^2 + y*z)*(x^2 + x*z) + (y^2 + y*z)^2 + z^4",
       "(T - 11)^3"},
  };
  return rows;
}

const std::vector<std::pair<std::string, u32>>& basis_ranks() {
  static const std::vector<std::pair<std::string, u32>> rows = {
      {"G6D7", 36}, {"G7D8", 45}, {"G7D9C1", 37}, {"G7D9C2", 43}, {"G7D9C3", 49},
  };
  return rows;
}

}  // namespace refdata
}  // namespace maxgon
