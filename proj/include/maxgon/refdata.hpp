#pragma once
// Published reference rows that the verification suites and the command-line
// fixture checks compare against: candidate isogeny-class lists per genus,
// the four pointless plane quartics over F_2, class counts of the quartic
// census, survivor counts of the form searches, the genus/field feasibility
// tables, and the known gonality-5 curves of genus 4.
//
// Every polynomial string parses with parse_zpoly, and every curve equation
// parses with parse_form over the stated field.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "maxgon/util.hpp"

namespace maxgon {
namespace refdata {

// One candidate isogeny class: the factored real Weil polynomial and the
// closed-point counts a_1..a_g it implies.
struct IsogenyRow {
  std::string factored_h;
  std::vector<i64> a;
};

// Candidate real Weil polynomials for gonality-(g+1) curves over F_2, as
// produced by the constrained coefficient sieve.
const std::vector<IsogenyRow>& genus6_candidates();  // 3 rows
const std::vector<IsogenyRow>& genus7_candidates();  // 79 rows
const std::vector<IsogenyRow>& genus9_candidates();  // 1 row

// The four isomorphism classes of pointless smooth plane quartics over F_2,
// with their real Weil polynomials and closed-point counts a_1..a_3.
struct QuarticRow {
  std::string equation;
  std::string factored_h;
  std::array<i64, 3> a;
};
const std::vector<QuarticRow>& pointless_quartics_f2();

// Known number of isomorphism classes of pointless smooth plane quartics
// over F_q, for every q where any exist; the counts sum to 215.
const std::vector<std::pair<u32, u32>>& quartic_class_counts();

// Exact survivor counts of the form searches, by campaign name.  Only the
// first two complete at desk scale.
const std::vector<std::pair<std::string, u64>>& survivor_counts();

// Every (g, q) admitted by the feasibility gate for g in 3..10 (no genus
// above 10 admits any field).
const std::vector<std::pair<u32, u32>>& gate_pairs();

// Required vanishing patterns per genus: each inner set {d1, d2, ...} means
// the product a_{d1} * a_{d2} * ... must be zero.
struct VanishingRow {
  u32 g = 0;
  std::vector<std::vector<u32>> sets;
};
const std::vector<VanishingRow>& vanishing_table();  // g = 3..10

// The two known gonality-5 curves of genus 4, each the intersection of a
// quadric and a cubic in P^3 with coordinates x, y, z, w.
struct SpaceCurveRow {
  u32 q = 0;
  std::string quadric;
  std::string cubic;
};
const std::vector<SpaceCurveRow>& excessive_genus4_curves();

// The unique pointless smooth plane quartics over the two admissible fields
// beyond the census range, with their real Weil polynomials.
struct UniqueQuarticRow {
  u32 p = 0, k = 0;
  std::string equation;
  std::string factored_h;
};
const std::vector<UniqueQuarticRow>& unique_quartics();  // q = 29 and 32

// Expected rank (= element count) of each structured search basis.
const std::vector<std::pair<std::string, u32>>& basis_ranks();

}  // namespace refdata
}  // namespace maxgon
