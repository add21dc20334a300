#pragma once
// Structured search spaces of plane-curve equations over F_2.
//
// A BasisFamily is five blocks S1..S5 of homogeneous forms arranged so that
// the sum of all of S1 plus an odd-cardinality subset of each nonempty
// S2..S5 never vanishes at a rational point of the plane.  A Campaign pairs
// such a basis with point filters: reject degrees (a candidate dies if its
// curve has a smooth point of that degree) and require points (at least one
// must lie on the curve).  The engine streams the whole space in Gray-code
// order, maintains bit-packed values of each candidate and its partials at
// every filter site incrementally, and emits the survivors.

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "maxgon/homforms.hpp"
#include "maxgon/projplane.hpp"

namespace maxgon {

// ---------------------------------------------------------------------------
// Basis families and campaigns

struct BasisFamily {
  const FieldCtx* F = nullptr;  // always the two-element field
  u32 degree = 0;
  std::array<std::vector<TernaryForm>, 5> blocks;  // S1..S5

  std::size_t count() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    return n;
  }
  // S1 first, in listed order, then S2, ..., S5.
  std::vector<TernaryForm> flattened() const;
};

enum class CampaignId { G6D7, G7D8, G7D9C1, G7D9C2, G7D9C3 };

std::string campaign_name(CampaignId id);
CampaignId campaign_from_name(const std::string& name);  // errc::unknown_campaign

// A vanishing condition every basis element must satisfy: the form and all
// its iterated partial derivatives of order < `order` vanish at `point`.
struct VanishingRequirement {
  ProjPoint point;
  u32 order = 1;
};

struct Campaign {
  CampaignId id = CampaignId::G6D7;
  BasisFamily basis;
  // Smooth-point degrees that kill a candidate (sites: every closed point of
  // that degree over F_2).
  std::vector<u32> reject_degrees;
  // Candidate must vanish at one of these (empty list = no constraint).
  std::vector<ProjPoint> require_points;
  // Built-in vanishing conditions carried by the basis (degree-9 cases).
  std::vector<VanishingRequirement> vanishing;
  u32 free_dimension = 0;
};

// The five presets.  Reject/require data follows the published searches; the
// degree-9 cases reject smooth points of degrees {2,4,5}.
Campaign build_campaign(CampaignId id);

// Replaces a campaign's filters from a short text description:
//   reject 2 4 5          -- replace the reject-degree set
//   require 3 0:1:t       -- append a required point over F_{2^3}
//   require none          -- clear the required-point list
// Lines may be blank or start with '#'.  The first `require` line replaces
// the preset list; later ones append.
void apply_filter_overrides(Campaign& c, const std::string& text);

// ---------------------------------------------------------------------------
// Basis verification

struct BasisReport {
  bool ok = false;
  u32 rank = 0;            // F_2-rank of the stacked coefficient matrix
  std::size_t count = 0;   // number of basis elements
  std::vector<std::string> violations;  // empty iff ok
};

// Checks (i) rank == count, (ii) the five parity-bullet conditions at the
// rational points of the plane, (iii) each stated vanishing requirement, via
// vanishing of all partial-derivative forms of order below the stated one.
BasisReport verify_basis(const BasisFamily& b,
                         const std::vector<VanishingRequirement>& vanishing = {});

// ---------------------------------------------------------------------------
// Masks and enumeration

// Bit i = inclusion of element i of the flattened basis order.
using SubsetMask = u64;

// The admissible mask for a free word w in [0, 2^free_dimension): S1 is
// always fully included; within each nonempty S2..S5, the block's free bits
// select elements and the block's last element is set to make the subset
// cardinality odd.
SubsetMask mask_from_free_word(const BasisFamily& b, u64 w);

// Sum of the selected basis elements.
TernaryForm subset_form(const BasisFamily& b, SubsetMask m);

struct TileSpec {
  CampaignId id = CampaignId::G6D7;
  u32 tile_bits = 0;  // tiles fix this many top free bits
  u64 tile_index = 0; // in [0, 2^tile_bits)
};

u64 tile_mask_count(const Campaign& c, const TileSpec& t);  // 2^(free - bits)

// Streams every admissible mask of the tile exactly once, in Gray-code order
// over the low free bits (consecutive masks differ in exactly two basis
// elements: one free element and its block's parity corrector).
void enumerate_space(const Campaign& c, const TileSpec& t,
                     const std::function<void(SubsetMask)>& emit);

// ---------------------------------------------------------------------------
// Bit-packed evaluation tables

// Values at all sites of one reject degree, packed `degree` bits per site
// into 64-bit words; four planes per group (value, then the three partials).
struct EvalGroup {
  u32 degree = 0;   // point degree = bits per slot
  u32 nsites = 0;
  u32 slots_per_word = 0;
  u32 words = 0;    // per plane
  u32 offset = 0;   // word offset of the value plane within a row
  std::vector<u64> used;       // per word, low bit of every occupied slot
  std::vector<ProjPoint> sites;  // orbit representatives, packing order
};

struct EvalTables {
  u32 row_words = 0;      // words per basis element
  u32 require_words = 0;  // one word per require point, at row offset 0
  std::vector<EvalGroup> groups;  // ascending degree
  std::vector<u64> rows;  // element-major, count() * row_words
};

// Evaluates every basis form and its partials at one representative per
// Frobenius orbit for each reject degree, and each form at every require
// point.  XOR of rows = values of the corresponding subset sum.
EvalTables precompute_tables(const Campaign& c);

// ---------------------------------------------------------------------------
// The search

struct SurvivorRecord {
  CampaignId id = CampaignId::G6D7;
  u64 tile = 0;
  SubsetMask mask = 0;
  TernaryForm form;
};

// Streams the tile and returns the survivors sorted by ascending mask:
// a mask survives when no reject site has value 0 with a nonzero gradient,
// and (if require points exist) the value vanishes at one of them.
std::vector<SurvivorRecord> run_search(const Campaign& c, const TileSpec& t,
                                       const EvalTables& tables);
std::vector<SurvivorRecord> run_search(const Campaign& c, const TileSpec& t);

// Runs tiles [0, 2^tile_bits) on `workers` threads, skipping indices in
// `done`; delivers each remaining tile's sorted survivors in ascending tile
// order.  Survivor sets are identical for every tile count and worker count.
void run_search_tiled(
    const Campaign& c, const EvalTables& tables, u32 tile_bits, u32 workers,
    const std::set<u64>& done,
    const std::function<void(u64 tile, std::vector<SurvivorRecord>&&)>& on_tile);

// Convenience wrapper: all tiles, merged and sorted by mask.
std::vector<SurvivorRecord> run_search_tiled(const Campaign& c,
                                             const EvalTables& tables,
                                             u32 tile_bits, u32 workers);

// Direct (unpacked) filter evaluation, for survivor re-validation.
bool passes_filters(const Campaign& c, const TernaryForm& f);

// ---------------------------------------------------------------------------
// Survivor and checkpoint files

// "<campaign>\t<tile>\t<hex mask>\t<form>"
std::string survivor_line(const SurvivorRecord& r);
SurvivorRecord parse_survivor_line(const FieldCtx& F, u32 degree,
                                   const std::string& line);

// First line "<campaign> <tile_bits>", then one completed tile index per
// line.  read_checkpoint fails on a campaign or tiling mismatch.
void write_checkpoint(const std::string& path, CampaignId id, u32 tile_bits,
                      const std::set<u64>& done);
std::set<u64> read_checkpoint(const std::string& path, CampaignId id,
                              u32 tile_bits);

}  // namespace maxgon
