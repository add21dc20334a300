// Command-line front end: the feasibility gate, the isogeny-class sieve with
// fixture diffing, the tiled form searches with checkpoint resume, the
// pointless-quartic census, and the reference verification suites.
//
// Output files land next to their path unless MAXGON_OUT_DIR is set, in which
// case relative paths are resolved under it.  Every file-writing command also
// writes "<out>.manifest.json" describing the run; re-running an interrupted
// search from its checkpoint reproduces the uninterrupted output byte for
// byte.  Exit codes: 0 success, 1 a verification or fixture check failed,
// 2 bad usage or an execution error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "maxgon/gfield.hpp"
#include "maxgon/homforms.hpp"
#include "maxgon/projplane.hpp"
#include "maxgon/quartic_census.hpp"
#include "maxgon/refdata.hpp"
#include "maxgon/searchkit.hpp"
#include "maxgon/util.hpp"
#include "maxgon/weilkit.hpp"
#include "maxgon/zpoly.hpp"

namespace {

using namespace maxgon;
using nlohmann::json;

constexpr const char* kManifestFormat = "maxgon.run/1";

std::string resolve_out(const std::string& path) {
  if (path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  const char* dir = std::getenv("MAXGON_OUT_DIR");
  if (!dir || !*dir) return path;
  return (std::filesystem::path(dir) / p).string();
}

void write_manifest(const std::string& out_path, json manifest) {
  manifest["format"] = kManifestFormat;
  manifest["outputs"] = json::array({out_path});
  std::ofstream f(out_path + ".manifest.json", std::ios::binary | std::ios::trunc);
  if (!f) throw error(errc::io_error, "cannot write " + out_path + ".manifest.json");
  f << manifest.dump(2) << "\n";
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::io_error, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------------------
// gate

int cmd_gate(bool with_constraints) {
  std::map<u32, u32> max_q;
  for (auto [g, q] : weil_bound_pairs()) max_q[g] = std::max(max_q[g], q);
  for (auto [g, q] : max_q) {
    if (q == 2)
      std::cout << "g=" << g << ": q = 2\n";
    else
      std::cout << "g=" << g << ": q <= " << q << "\n";
  }
  if (with_constraints) {
    std::cout << "\nvanishing conditions:\n";
    for (auto [g, q] : max_q) {
      (void)q;
      std::cout << "g=" << g << ":";
      const ConstraintSet cs = vanishing_constraints(g);
      for (size_t i = 0; i < cs.forbidden.size(); ++i)
        std::cout << (i ? ", " : " ") << constraint_to_string(cs.forbidden[i]);
      std::cout << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// sieve

const std::vector<refdata::IsogenyRow>* sieve_fixture(u32 g, u32 q) {
  static const std::vector<refdata::IsogenyRow> kEmpty;
  if (q == 2 && g == 6) return &refdata::genus6_candidates();
  if (q == 2 && g == 7) return &refdata::genus7_candidates();
  if (q == 2 && g == 9) return &refdata::genus9_candidates();
  if (q == 3 && g == 6) return &kEmpty;
  return nullptr;
}

int cmd_sieve(u32 g, u32 q, bool no_constraints, u32 workers,
              const std::string& out_arg) {
  ConstraintSet cs =
      no_constraints ? ConstraintSet{g, {}} : vanishing_constraints(g);
  std::vector<IsogenyClassRecord> recs = sieve(g, q, cs, workers);

  const std::string out = resolve_out(out_arg);
  {
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) throw error(errc::io_error, "cannot write " + out);
    f << "# sieve g=" << g << " q=" << q
      << " constraints=" << (no_constraints ? "none" : "full") << "\n";
    for (const IsogenyClassRecord& rec : recs) f << record_line(rec) << "\n";
  }
  // every emitted row reparses to the record that produced it
  for (const IsogenyClassRecord& rec : recs) {
    const std::string line = record_line(rec);
    ZPoly h = parse_zpoly(line.substr(0, line.find(" | coeffs")));
    if (record_line(make_record(make_real_weil(g, q, h))) != line)
      throw error(errc::parse_error, "sieve line does not round-trip: " + line);
  }
  write_manifest(out, json{{"command", "sieve"},
                           {"g", g},
                           {"q", q},
                           {"constraints", no_constraints ? "none" : "full"},
                           {"workers", workers}});

  std::cout << "sieve g=" << g << " q=" << q << ": " << recs.size()
            << " candidate isogeny classes -> " << out << "\n";

  const std::vector<refdata::IsogenyRow>* fixture = sieve_fixture(g, q);
  if (!fixture || no_constraints) return 0;

  std::set<ZPoly> produced;
  for (const IsogenyClassRecord& rec : recs) produced.insert(rec.h.h);
  std::set<ZPoly> expected;
  u32 missing = 0;
  for (const refdata::IsogenyRow& row : *fixture) {
    ZPoly h = parse_zpoly(row.factored_h);
    expected.insert(h);
    if (!produced.count(h)) {
      ++missing;
      std::cout << "MISSING fixture: " << row.factored_h << "\n";
    }
  }
  u32 extra = 0;
  for (const IsogenyClassRecord& rec : recs)
    if (!expected.count(rec.h.h)) {
      ++extra;
      std::cout << "extra (not in fixture list): " << factored_string(rec.h.h)
                << "\n";
    }
  std::cout << "fixtures: " << (fixture->size() - missing) << "/"
            << fixture->size() << " present, " << extra << " extra\n";
  return missing == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// search

int cmd_search(const std::string& name, u64 tiles, i64 tile_index,
               const std::string& checkpoint_arg, u32 workers,
               const std::string& out_arg, const std::string& filters_arg) {
  Campaign c = build_campaign(campaign_from_name(name));
  std::string filter_text;
  if (!filters_arg.empty()) {
    filter_text = read_text(filters_arg);
    apply_filter_overrides(c, filter_text);
  }

  check(tiles >= 1 && (tiles & (tiles - 1)) == 0, errc::invalid_tile,
        "tile count must be a power of two");
  u32 tile_bits = 0;
  while ((u64{1} << tile_bits) < tiles) ++tile_bits;
  check(tile_bits <= c.free_dimension, errc::invalid_tile,
        "more tiles than the space has masks");

  const std::string out = resolve_out(out_arg);
  const std::string checkpoint = resolve_out(checkpoint_arg);

  std::set<u64> done;
  if (!checkpoint.empty() && std::filesystem::exists(checkpoint))
    done = read_checkpoint(checkpoint, c.id, tile_bits);

  // Fresh runs truncate; runs that resume a recorded checkpoint append.
  std::ofstream file(out, std::ios::binary |
                              (done.empty() ? std::ios::trunc : std::ios::app));
  if (!file) throw error(errc::io_error, "cannot write " + out);

  u64 written = 0;
  auto emit_tile = [&](u64 tile, const std::vector<SurvivorRecord>& recs) {
    for (const SurvivorRecord& r : recs) file << survivor_line(r) << "\n";
    file.flush();
    written += recs.size();
    done.insert(tile);
    if (!checkpoint.empty())
      write_checkpoint(checkpoint, c.id, tile_bits, done);
  };

  EvalTables tables = precompute_tables(c);
  if (tile_index >= 0) {
    check(static_cast<u64>(tile_index) < tiles, errc::invalid_tile,
          "tile index out of range");
    if (done.count(tile_index)) {
      std::cout << "tile " << tile_index << " already complete; nothing to do\n";
    } else {
      TileSpec t{c.id, tile_bits, static_cast<u64>(tile_index)};
      emit_tile(static_cast<u64>(tile_index), run_search(c, t, tables));
    }
  } else {
    run_search_tiled(c, tables, tile_bits, workers, done,
                     [&](u64 tile, std::vector<SurvivorRecord>&& recs) {
                       emit_tile(tile, recs);
                     });
  }
  file.close();

  json manifest{{"command", "search"},
                {"campaign", name},
                {"tiles", tiles},
                {"workers", workers},
                {"reject_degrees", c.reject_degrees},
                {"filters", filter_text}};
  if (tile_index >= 0) manifest["tile_index"] = tile_index;
  if (!checkpoint.empty()) manifest["checkpoint"] = checkpoint;
  write_manifest(out, manifest);

  std::cout << "campaign " << name << ": " << written
            << " survivors written this run";
  if (!checkpoint.empty())
    std::cout << " (" << done.size() << "/" << tiles << " tiles complete)";
  std::cout << " -> " << out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// census

int report_unique(const UniqueQuarticReport& r, const std::string& out) {
  std::ostringstream text;
  text << "q=" << r.q << " curve: " << form_to_string(r.form) << "\n"
       << "pointless: " << (r.pointless ? "yes" : "NO") << "\n"
       << "smooth: " << (r.smooth ? "yes" : "NO") << "\n"
       << "a: " << r.counts[0] << " " << r.counts[1] << " " << r.counts[2]
       << "\n"
       << "real Weil polynomial: " << factored_string(r.real_weil.h) << "\n"
       << "counts round-trip: " << (r.counts_match ? "ok" : "MISMATCH") << "\n";
  std::cout << text.str();
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) throw error(errc::io_error, "cannot write " + out);
    f << text.str();
    write_manifest(out, json{{"command", "census"}, {"q", r.q},
                             {"mode", "verify"}});
  }
  return (r.pointless && r.smooth && r.counts_match) ? 0 : 1;
}

int cmd_census(u32 q, const std::string& method, u32 workers,
               const std::string& out_arg) {
  const std::string out = resolve_out(out_arg);
  if (q == 29) return report_unique(verify_f29_unique(), out);
  if (q == 32) return report_unique(verify_f32_unique(), out);

  std::string chosen = method;
  if (chosen == "auto") chosen = q <= 5 ? "brute" : "pinned";
  std::vector<CensusEntry> entries =
      chosen == "brute" ? brute_census_small(q) : census(q, workers);

  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) throw error(errc::io_error, "cannot write " + out);
    for (const CensusEntry& e : entries) f << census_line(e) << "\n";
    write_manifest(out, json{{"command", "census"},
                             {"q", q},
                             {"method", chosen},
                             {"workers", workers}});
  }

  std::cout << "census q=" << q << ": " << entries.size() << " classes ("
            << chosen << " method)";
  if (!out.empty()) std::cout << " -> " << out;
  std::cout << "\n";

  if (chosen == "pinned" && q < 7) {
    std::cout << "note: the pinned method lists only classes with two "
                 "quadratic points on distinct rational lines; it is complete "
                 "for q >= 7\n";
    return 0;
  }
  for (auto [kq, kn] : refdata::quartic_class_counts())
    if (kq == q) {
      if (entries.size() == kn) {
        std::cout << "class count matches the published table (" << kn << ")\n";
        return 0;
      }
      std::cout << "MISMATCH: published class count is " << kn << "\n";
      return 1;
    }
  return 0;
}

// ---------------------------------------------------------------------------
// verify suites

int suite_table2() {
  const FieldCtx& F = make_field(2, 1);
  u32 matched = 0;
  const auto& rows = refdata::pointless_quartics_f2();
  for (const refdata::QuarticRow& row : rows) {
    TernaryForm f = parse_form(F, 4, row.equation);
    bool pointless = count_points(f, 1) == 0;
    bool smooth = is_smooth(f);
    CountsVector N = point_counts(f, 3);
    RealWeilPoly rw = real_weil_from_counts(N, 3, 2);
    bool h_ok = rw.h == parse_zpoly(row.factored_h);
    CountsVector a = closed_counts(N);
    bool a_ok = a[0] == row.a[0] && a[1] == row.a[1] && a[2] == row.a[2];
    bool ok = pointless && smooth && h_ok && a_ok;
    matched += ok;
    std::cout << (ok ? "ok   " : "FAIL ") << row.equation << "  ->  "
              << row.factored_h << "  a: " << row.a[0] << " " << row.a[1]
              << " " << row.a[2] << "\n";
  }
  std::cout << "table2: " << matched << "/" << rows.size() << " match\n";
  return matched == rows.size() ? 0 : 1;
}

int suite_appendix_a(u64 samples, u64 seed) {
  const FieldCtx& F2 = make_field(2, 1);
  const std::vector<ProjPoint> rational = enumerate_points(F2);
  std::map<std::string, u32> expected_rank;
  for (const auto& [name, rank] : refdata::basis_ranks())
    expected_rank[name] = rank;

  bool all_ok = true;
  for (const char* name : {"G6D7", "G7D8", "G7D9C1", "G7D9C2", "G7D9C3"}) {
    Campaign c = build_campaign(campaign_from_name(name));
    BasisReport rep = verify_basis(c.basis, c.vanishing);
    bool rank_ok = rep.ok && rep.rank == expected_rank.at(name) &&
                   rep.count == expected_rank.at(name);
    all_ok = all_ok && rank_ok;
    std::cout << name << ": rank " << rep.rank << "/" << rep.count
              << (rank_ok ? " ok" : " FAIL");
    for (const VanishingRequirement& v : c.vanishing)
      std::cout << "; vanishes to order " << v.order << " at "
                << point_to_string(v.point);
    std::cout << "\n";
    for (const std::string& violation : rep.violations)
      std::cout << "  violation: " << violation << "\n";

    // sampled subset sums never vanish at a rational point of the plane
    bool deg9 = std::string(name).rfind("G7D9", 0) == 0;
    if (!deg9) continue;
    rng gen(seed);
    u64 bad = 0;
    for (u64 s = 0; s < samples; ++s) {
      u64 w = gen.below(u64{1} << c.free_dimension);
      TernaryForm f = subset_form(c.basis, mask_from_free_word(c.basis, w));
      for (const ProjPoint& P : rational)
        if (evaluate(f, P) == 0) {
          ++bad;
          break;
        }
    }
    all_ok = all_ok && bad == 0;
    std::cout << "  " << samples << " sampled forms, " << bad
              << " vanish at a rational point"
              << (bad == 0 ? " (ok)" : " (FAIL)") << "\n";
  }
  return all_ok ? 0 : 1;
}

int suite_genus9() {
  ZPoly h1 = parse_zpoly("T + 1");
  ZPoly h2 = parse_zpoly("T^4 - 2T^3 - 6T^2 + 10T + 1");
  bigint res = resultant(h1, h2);
  bool res_ok = res == -12;
  std::cout << "resultant(T + 1, T^4 - 2T^3 - 6T^2 + 10T + 1) = " << res.str()
            << (res_ok ? " (ok)" : " (FAIL, expected -12)") << "\n";

  const refdata::IsogenyRow& row = refdata::genus9_candidates().front();
  IsogenyClassRecord rec =
      make_record(make_real_weil(9, 2, parse_zpoly(row.factored_h)));
  bool a_ok = true;
  std::cout << "a-row of " << row.factored_h << ":";
  for (u32 d = 1; d <= 9; ++d) {
    std::cout << " " << rec.a[d - 1];
    a_ok = a_ok && rec.a[d - 1] == row.a[d - 1];
  }
  std::cout << (a_ok ? " (ok)" : " (FAIL)") << "\n";

  int unique_rc = report_unique(verify_f29_unique(), "");
  bool h29_ok = false;
  if (unique_rc == 0) {
    h29_ok = verify_f29_unique().real_weil.h == parse_zpoly("(T - 10)^3");
  }
  return (res_ok && a_ok && unique_rc == 0 && h29_ok) ? 0 : 1;
}

int suite_f32() {
  UniqueQuarticReport r = verify_f32_unique();
  int rc = report_unique(r, "");
  bool h_ok = r.real_weil.h == parse_zpoly("(T - 11)^3");
  std::cout << "expected real Weil polynomial (T - 11)^3: "
            << (h_ok ? "ok" : "FAIL") << "\n";
  return (rc == 0 && h_ok) ? 0 : 1;
}

int cmd_verify(const std::string& suite, u64 samples, u64 seed) {
  if (suite == "table2") return suite_table2();
  if (suite == "appendixA") return suite_appendix_a(samples, seed);
  if (suite == "genus9") return suite_genus9();
  if (suite == "f32") return suite_f32();
  int rc = 0;
  rc |= suite_table2();
  rc |= suite_appendix_a(samples, seed);
  rc |= suite_genus9();
  rc |= suite_f32();
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Excessive-curve toolkit: feasibility gate, isogeny-class sieve, "
      "structured form searches, and the pointless plane-quartic census"};
  app.require_subcommand(1);

  // gate
  bool gate_constraints = false;
  CLI::App* gate = app.add_subcommand(
      "gate", "Print the genus/field feasibility table");
  gate->add_flag("--constraints", gate_constraints,
                 "also print the vanishing conditions per genus");

  // sieve
  u32 sieve_g = 6, sieve_q = 2, sieve_workers = 1;
  bool sieve_noc = false;
  std::string sieve_out;
  CLI::App* sv = app.add_subcommand(
      "sieve", "Enumerate candidate real Weil polynomials for one (g, q)");
  sv->add_option("--g", sieve_g, "genus (3..10)")->required();
  sv->add_option("--q", sieve_q, "field size")->required();
  sv->add_flag("--no-constraints", sieve_noc,
               "drop the vanishing conditions (no fixture diff)");
  sv->add_option("--workers", sieve_workers, "worker threads");
  sv->add_option("--out", sieve_out, "output file")->required();

  // search
  std::string search_campaign, search_checkpoint, search_out, search_filters;
  u64 search_tiles = 1;
  i64 search_tile_index = -1;
  u32 search_workers = 1;
  CLI::App* se = app.add_subcommand(
      "search", "Run a structured form search over F_2");
  se->add_option("--campaign", search_campaign,
                 "G6D7, G7D8, G7D9C1, G7D9C2, or G7D9C3")
      ->required();
  se->add_option("--tiles", search_tiles, "number of tiles (power of two)");
  se->add_option("--tile-index", search_tile_index,
                 "run only this tile (default: all remaining)");
  se->add_option("--checkpoint", search_checkpoint,
                 "checkpoint file for resumable runs");
  se->add_option("--workers", search_workers, "worker threads");
  se->add_option("--filters", search_filters,
                 "file of filter overrides (reject/require lines)");
  se->add_option("--out", search_out, "survivor output file")->required();

  // census
  u32 census_q = 2, census_workers = 1;
  std::string census_method = "auto", census_out;
  CLI::App* ce = app.add_subcommand(
      "census", "Classify pointless smooth plane quartics over F_q");
  ce->add_option("--q", census_q, "field size")->required();
  ce->add_option("--method", census_method, "auto, pinned, or brute")
      ->check(CLI::IsMember({"auto", "pinned", "brute"}));
  ce->add_option("--workers", census_workers, "worker threads");
  ce->add_option("--out", census_out, "census output file");

  // verify
  std::string verify_suite;
  u64 verify_samples = 10000, verify_seed = kDefaultSeed;
  CLI::App* ve = app.add_subcommand(
      "verify", "Run a reference verification suite");
  ve->add_option("--suite", verify_suite,
                 "table2, appendixA, genus9, f32, or all")
      ->required()
      ->check(CLI::IsMember({"table2", "appendixA", "genus9", "f32", "all"}));
  ve->add_option("--samples", verify_samples,
                 "sampled subset sums per degree-9 basis");
  ve->add_option("--seed", verify_seed, "seed for the sampled checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gate->parsed()) return cmd_gate(gate_constraints);
    if (sv->parsed())
      return cmd_sieve(sieve_g, sieve_q, sieve_noc, sieve_workers, sieve_out);
    if (se->parsed())
      return cmd_search(search_campaign, search_tiles, search_tile_index,
                        search_checkpoint, search_workers, search_out,
                        search_filters);
    if (ce->parsed())
      return cmd_census(census_q, census_method, census_workers, census_out);
    if (ve->parsed()) return cmd_verify(verify_suite, verify_samples, verify_seed);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
