#include "maxgon/searchkit.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace maxgon {

namespace {

const FieldCtx& f2() { return make_field(2, 1); }

TernaryForm mono(u32 degree, u32 i, u32 j) {
  return monomial_form(f2(), degree, i, j, 1);
}

std::vector<TernaryForm> parse_block(u32 degree,
                                     const std::vector<std::string>& texts) {
  std::vector<TernaryForm> out;
  out.reserve(texts.size());
  for (const std::string& s : texts) out.push_back(parse_form(f2(), degree, s));
  return out;
}

// S1 = {x^d, y^d, z^d}; S2/S3/S4 = the xy-, xz-, yz-divisible bivariate
// monomials; S5 = the xyz-divisible monomials.
BasisFamily monomial_family(u32 degree) {
  BasisFamily b;
  b.F = &f2();
  b.degree = degree;
  b.blocks[0] = {mono(degree, degree, 0), mono(degree, 0, degree),
                 mono(degree, 0, 0)};
  for (u32 i = 1; i <= degree - 1; ++i)
    b.blocks[1].push_back(mono(degree, i, degree - i));  // x^i y^(d-i)
  for (u32 i = 1; i <= degree - 1; ++i)
    b.blocks[2].push_back(mono(degree, i, 0));  // x^i z^(d-i)
  for (u32 i = 1; i <= degree - 1; ++i)
    b.blocks[3].push_back(mono(degree, 0, i));  // y^i z^(d-i)
  for (u32 i = 1; i + 2 <= degree; ++i)
    for (u32 j = 1; i + j + 1 <= degree; ++j)
      b.blocks[4].push_back(mono(degree, i, j));  // x^i y^j z^(d-i-j)
  return b;
}

// The three structured degree-9 bases, in their published listing order.
BasisFamily degree9_family(int variant) {
  BasisFamily b;
  b.F = &f2();
  b.degree = 9;
  auto range2 = [&](std::vector<TernaryForm>& blk, u32 lo, u32 hi, bool xy) {
    for (u32 i = lo; i <= hi; ++i)
      blk.push_back(xy ? mono(9, i, 9 - i) : mono(9, i, 0));
  };
  if (variant == 1) {
    b.blocks[0] = parse_block(9, {"x^9", "(y^3 + y^2*z + z^3)^3"});
    range2(b.blocks[1], 3, 8, true);
    for (const auto& f : parse_block(9, {"x^2*y^4*(y^3 + y^2*z + z^3)",
                                         "x*y^2*(y^3 + y^2*z + z^3)^2"}))
      b.blocks[1].push_back(f);
    range2(b.blocks[2], 3, 8, false);
    for (const auto& f : parse_block(9, {"x^2*z*(y^3 + y^2*z + z^3)^2",
                                         "x*z^2*(y^3 + y^2*z + z^3)^2"}))
      b.blocks[2].push_back(f);
    for (u32 i = 3; i <= 7; ++i)
      for (u32 j = 1; j <= 5 && i + j < 9; ++j)
        b.blocks[4].push_back(mono(9, i, j));
    for (const auto& f : parse_block(9, {"x*y*z*(y^3 + y^2*z + z^3)^2",
                                         "x^2*y*z*(y^5 + y*z^4 + z^5)",
                                         "x^2*y^2*z^2*(y^3 + y^2*z + z^3)",
                                         "x^2*y^3*z*(y^3 + y^2*z + z^3)"}))
      b.blocks[4].push_back(f);
  } else if (variant == 2) {
    b.blocks[0] =
        parse_block(9, {"x^9", "(y^3 + y*z^2 + z^3)*(y^3 + y^2*z + z^3)^2"});
    range2(b.blocks[1], 2, 8, true);
    b.blocks[1].push_back(parse_form(f2(), 9, "x*y^5*(y^3 + y^2*z + z^3)"));
    range2(b.blocks[2], 2, 8, false);
    b.blocks[2].push_back(parse_form(f2(), 9, "x*z^2*(y^3 + y^2*z + z^3)^2"));
    for (u32 i = 2; i <= 7; ++i)
      for (u32 j = 1; j <= 6 && i + j < 9; ++j)
        b.blocks[4].push_back(mono(9, i, j));
    for (const auto& f : parse_block(9, {"x*y*z*(y^3 + y^2*z + z^3)^2",
                                         "x*y^2*z*(y^5 + y*z^4 + z^5)",
                                         "x*y^3*z^2*(y^3 + y^2*z + z^3)",
                                         "x*y^4*z*(y^3 + y^2*z + z^3)"}))
      b.blocks[4].push_back(f);
  } else {
    b.blocks[0] = parse_block(9, {"x^2*(x^7 + z^7)", "y^2*(y^7 + z^7)",
                                  "z^2*(x^7 + y^7 + z^7)"});
    range2(b.blocks[1], 1, 8, true);
    b.blocks[2] = parse_block(
        9, {"x^2*z*(x^3 + x^2*z + z^3)^2", "x^2*z^2*(x^5 + x*z^4 + z^5)",
            "x*z^3*(x^5 + x*z^4 + z^5)", "x^3*z^3*(x^3 + x^2*z + z^3)",
            "x*z^5*(x^3 + x^2*z + z^3)"});
    b.blocks[3] = parse_block(
        9, {"y^2*z*(y^3 + y^2*z + z^3)^2", "y^2*z^2*(y^5 + y*z^4 + z^5)",
            "y*z^3*(y^5 + y*z^4 + z^5)", "y^3*z^3*(y^3 + y^2*z + z^3)",
            "y*z^5*(y^3 + y^2*z + z^3)"});
    for (u32 i = 1; i <= 7; ++i)
      for (u32 j = 1; j <= 7 && i + j < 9; ++j)
        b.blocks[4].push_back(mono(9, i, j));
  }
  return b;
}

u32 computed_free_dimension(const BasisFamily& b) {
  u32 n = 0;
  for (int i = 1; i < 5; ++i)
    if (!b.blocks[i].empty()) n += static_cast<u32>(b.blocks[i].size()) - 1;
  return n;
}

// One toggled element per free bit, plus its block's parity corrector.
struct FreeBit {
  u32 element = 0;
  u32 corrector = 0;
  SubsetMask delta = 0;
};

struct WalkPlan {
  SubsetMask base = 0;  // free word 0: all of S1 + each block's corrector
  std::vector<FreeBit> bits;
};

WalkPlan make_plan(const BasisFamily& b) {
  check(b.count() <= 64, errc::bad_argument, "basis too large for 64-bit masks");
  WalkPlan p;
  u32 first = 0;
  for (u32 e = 0; e < b.blocks[0].size(); ++e) p.base |= 1ull << e;
  first = static_cast<u32>(b.blocks[0].size());
  for (int blk = 1; blk < 5; ++blk) {
    u32 n = static_cast<u32>(b.blocks[blk].size());
    if (n == 0) continue;
    u32 corr = first + n - 1;
    p.base |= 1ull << corr;
    for (u32 e = 0; e + 1 < n; ++e) {
      FreeBit fb;
      fb.element = first + e;
      fb.corrector = corr;
      fb.delta = (1ull << fb.element) | (1ull << corr);
      p.bits.push_back(fb);
    }
    first += n;
  }
  return p;
}

void check_tile(const Campaign& c, const TileSpec& t) {
  check(t.id == c.id, errc::invalid_tile, "tile names a different campaign");
  check(t.tile_bits <= c.free_dimension, errc::invalid_tile,
        "tile bits exceed the free dimension");
  check(t.tile_index < (1ull << t.tile_bits), errc::invalid_tile,
        "tile index out of range");
}

SubsetMask start_mask(const WalkPlan& plan, u64 free_word) {
  SubsetMask m = plan.base;
  for (u32 i = 0; i < plan.bits.size(); ++i)
    if ((free_word >> i) & 1) m ^= plan.bits[i].delta;
  return m;
}

bool state_passes(const u64* st, const EvalTables& T) {
  if (T.require_words) {
    bool hit = false;
    for (u32 j = 0; j < T.require_words; ++j) hit = hit || st[j] == 0;
    if (!hit) return false;
  }
  for (const EvalGroup& g : T.groups) {
    const u64* fv = st + g.offset;
    const u64* gx = fv + g.words;
    const u64* gy = gx + g.words;
    const u64* gz = gy + g.words;
    for (u32 w = 0; w < g.words; ++w) {
      u64 grad = gx[w] | gy[w] | gz[w];
      if (!grad) continue;
      u64 f = fv[w];
      u64 nzf = f, nzg = grad;
      for (u32 s = 1; s < g.degree; ++s) {
        nzf |= f >> s;
        nzg |= grad >> s;
      }
      if (nzg & g.used[w] & ~nzf) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<TernaryForm> BasisFamily::flattened() const {
  std::vector<TernaryForm> out;
  out.reserve(count());
  for (const auto& blk : blocks)
    for (const auto& f : blk) out.push_back(f);
  return out;
}

std::string campaign_name(CampaignId id) {
  switch (id) {
    case CampaignId::G6D7: return "G6D7";
    case CampaignId::G7D8: return "G7D8";
    case CampaignId::G7D9C1: return "G7D9C1";
    case CampaignId::G7D9C2: return "G7D9C2";
    case CampaignId::G7D9C3: return "G7D9C3";
  }
  fail(errc::unknown_campaign, "bad campaign id");
}

CampaignId campaign_from_name(const std::string& name) {
  for (CampaignId id : {CampaignId::G6D7, CampaignId::G7D8, CampaignId::G7D9C1,
                        CampaignId::G7D9C2, CampaignId::G7D9C3})
    if (campaign_name(id) == name) return id;
  fail(errc::unknown_campaign, "unknown campaign: " + name);
}

Campaign build_campaign(CampaignId id) {
  Campaign c;
  c.id = id;
  const FieldCtx& F8 = make_field(2, 3);
  const FieldCtx& F16 = make_field(2, 4);
  elem t = F8.gen();
  elem s = F16.gen();
  switch (id) {
    case CampaignId::G6D7:
      c.basis = monomial_family(7);
      c.reject_degrees = {2, 4};
      c.require_points = {make_point(F8, 0, 1, t),
                          make_point(F8, 1, t, F8.mul(t, t))};
      break;
    case CampaignId::G7D8:
      c.basis = monomial_family(8);
      c.reject_degrees = {5};
      c.require_points = {
          make_point(F16, 0, 1, s), make_point(F16, 1, s, F16.mul(s, s)),
          make_point(F16, 0, 1, F16.add(F16.mul(s, s), s))};
      break;
    case CampaignId::G7D9C1:
      c.basis = degree9_family(1);
      c.reject_degrees = {2, 4, 5};
      c.vanishing = {{make_point(F8, 0, 1, t), 3}};
      break;
    case CampaignId::G7D9C2:
      c.basis = degree9_family(2);
      c.reject_degrees = {2, 4, 5};
      c.vanishing = {{make_point(F8, 0, 1, t), 2},
                     {make_point(F8, 0, 1, F8.add(t, F8.one())), 1}};
      break;
    case CampaignId::G7D9C3:
      c.basis = degree9_family(3);
      c.reject_degrees = {2, 4, 5};
      c.vanishing = {{make_point(F8, 0, 1, t), 1},
                     {make_point(F8, 1, 0, t), 1}};
      break;
  }
  c.free_dimension = computed_free_dimension(c.basis);
  return c;
}

void apply_filter_overrides(Campaign& c, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool require_replaced = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (word == "reject") {
      std::vector<u32> degs;
      u32 d;
      while (ls >> d) {
        check(d >= 1 && d <= 8, errc::bad_argument,
              "reject degree out of range: " + std::to_string(d));
        degs.push_back(d);
      }
      check(!ls.fail() || ls.eof(), errc::parse_error,
            "bad reject line: " + line);
      std::sort(degs.begin(), degs.end());
      degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
      c.reject_degrees = degs;
    } else if (word == "require") {
      if (!require_replaced) {
        c.require_points.clear();
        require_replaced = true;
      }
      std::string arg;
      check(static_cast<bool>(ls >> arg), errc::parse_error,
            "bad require line: " + line);
      if (arg == "none") continue;
      u32 r = 0;
      try {
        size_t used = 0;
        r = static_cast<u32>(std::stoul(arg, &used));
        check(used == arg.size(), errc::parse_error, "bad extension degree");
      } catch (const error&) {
        throw;
      } catch (const std::exception&) {
        fail(errc::parse_error, "bad extension degree in: " + line);
      }
      check(r >= 1 && r <= 8, errc::bad_argument,
            "require extension degree out of range");
      std::string literal;
      check(static_cast<bool>(ls >> literal), errc::parse_error,
            "missing point literal in: " + line);
      c.require_points.push_back(parse_point(make_field(2, r), literal));
    } else {
      fail(errc::parse_error, "unknown filter directive: " + word);
    }
  }
}

BasisReport verify_basis(const BasisFamily& b,
                         const std::vector<VanishingRequirement>& vanishing) {
  BasisReport rep;
  rep.count = b.count();
  const FieldCtx& F = *b.F;
  auto say = [&](const std::string& msg) { rep.violations.push_back(msg); };

  // (i) independence: rank of the stacked coefficient matrix over F_2
  {
    u32 cols = monomial_count(b.degree);
    u32 words = (cols + 63) / 64;
    std::vector<std::vector<u64>> rows;
    for (const auto& blk : b.blocks)
      for (const auto& f : blk) {
        std::vector<u64> row(words, 0);
        for (u32 j = 0; j < cols; ++j)
          if (f.c[j]) row[j / 64] |= 1ull << (j % 64);
        rows.push_back(std::move(row));
      }
    u32 rank = 0;
    for (u32 col = 0; col < cols && rank < rows.size(); ++col) {
      u32 w = col / 64;
      u64 bit = 1ull << (col % 64);
      u32 pivot = rank;
      while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[rank], rows[pivot]);
      for (u32 r = 0; r < rows.size(); ++r)
        if (r != rank && (rows[r][w] & bit))
          for (u32 k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
      ++rank;
    }
    rep.rank = rank;
    if (rank != rep.count)
      say("rank " + std::to_string(rank) + " < element count " +
          std::to_string(rep.count));
  }

  // (ii) the parity bullets at the rational points of the plane
  auto nonzero_at = [&](const TernaryForm& f, const ProjPoint& P) {
    return evaluate(f, P) != 0;
  };
  auto count_s1 = [&](const ProjPoint& P) {
    u32 n = 0;
    for (const auto& f : b.blocks[0])
      if (nonzero_at(f, P)) ++n;
    return n;
  };
  auto all_vanish = [&](int blk, const ProjPoint& P, const std::string& at) {
    for (std::size_t e = 0; e < b.blocks[blk].size(); ++e)
      if (nonzero_at(b.blocks[blk][e], P))
        say("S" + std::to_string(blk + 1) + " element " + std::to_string(e) +
            " does not vanish at " + at);
  };
  auto none_vanish = [&](int blk, const ProjPoint& P, const std::string& at) {
    for (std::size_t e = 0; e < b.blocks[blk].size(); ++e)
      if (!nonzero_at(b.blocks[blk][e], P))
        say("S" + std::to_string(blk + 1) + " element " + std::to_string(e) +
            " vanishes at " + at);
  };
  auto s1_parity = [&](const ProjPoint& P, u32 want, const std::string& at) {
    u32 n = count_s1(P);
    if (n % 2 != want)
      say("S1 has " + std::to_string(n) + " nonzero elements at " + at +
          " (want " + (want ? "odd" : "even") + ")");
  };

  const ProjPoint E[3] = {make_point(F, 1, 0, 0), make_point(F, 0, 1, 0),
                          make_point(F, 0, 0, 1)};
  const char* en[3] = {"1:0:0", "0:1:0", "0:0:1"};
  for (int i = 0; i < 3; ++i) {
    if (count_s1(E[i]) != 1)
      say("S1 has " + std::to_string(count_s1(E[i])) +
          " nonzero elements at " + en[i] + " (want exactly 1)");
    for (int blk = 1; blk < 5; ++blk) all_vanish(blk, E[i], en[i]);
  }
  const ProjPoint P12 = make_point(F, 1, 1, 0);
  const ProjPoint P13 = make_point(F, 1, 0, 1);
  const ProjPoint P23 = make_point(F, 0, 1, 1);
  const ProjPoint P111 = make_point(F, 1, 1, 1);
  none_vanish(1, P12, "1:1:0");
  for (int blk : {2, 3, 4}) all_vanish(blk, P12, "1:1:0");
  s1_parity(P12, 0, "1:1:0");
  none_vanish(2, P13, "1:0:1");
  for (int blk : {1, 3, 4}) all_vanish(blk, P13, "1:0:1");
  s1_parity(P13, 0, "1:0:1");
  none_vanish(3, P23, "0:1:1");
  for (int blk : {1, 2, 4}) all_vanish(blk, P23, "0:1:1");
  s1_parity(P23, b.blocks[3].empty() ? 1 : 0, "0:1:1");
  for (int blk : {1, 2, 3, 4}) none_vanish(blk, P111, "1:1:1");
  s1_parity(P111, b.blocks[3].empty() ? 0 : 1, "1:1:1");

  // (iii) stated vanishing conditions, tested on every basis element through
  // its partial-derivative forms
  for (const auto& req : vanishing) {
    std::string at = point_to_string(req.point);
    for (int blk = 0; blk < 5; ++blk)
      for (std::size_t e = 0; e < b.blocks[blk].size(); ++e) {
        std::vector<TernaryForm> level = {b.blocks[blk][e]};
        for (u32 order = 0; order < req.order; ++order) {
          for (const auto& g : level)
            if (evaluate(g, req.point) != 0) {
              say("S" + std::to_string(blk + 1) + " element " +
                  std::to_string(e) + ": an order-" + std::to_string(order) +
                  " derivative is nonzero at " + at);
              goto next_element;
            }
          if (order + 1 < req.order) {
            std::vector<TernaryForm> next;
            next.reserve(level.size() * 3);
            for (const auto& g : level)
              for (int v = 0; v < 3; ++v) next.push_back(partial(g, v));
            level = std::move(next);
          }
        }
      next_element:;
      }
  }

  rep.ok = rep.violations.empty();
  return rep;
}

SubsetMask mask_from_free_word(const BasisFamily& b, u64 w) {
  WalkPlan plan = make_plan(b);
  check(plan.bits.size() >= 64 || w < (1ull << plan.bits.size()),
        errc::bad_argument, "free word out of range");
  return start_mask(plan, w);
}

TernaryForm subset_form(const BasisFamily& b, SubsetMask m) {
  TernaryForm out = zero_form(*b.F, b.degree);
  u32 flat = 0;
  for (const auto& blk : b.blocks)
    for (const auto& f : blk) {
      if ((m >> flat) & 1) out = add(out, f);
      ++flat;
    }
  return out;
}

u64 tile_mask_count(const Campaign& c, const TileSpec& t) {
  check_tile(c, t);
  return 1ull << (c.free_dimension - t.tile_bits);
}

void enumerate_space(const Campaign& c, const TileSpec& t,
                     const std::function<void(SubsetMask)>& emit) {
  check_tile(c, t);
  WalkPlan plan = make_plan(c.basis);
  u32 lo = c.free_dimension - t.tile_bits;
  SubsetMask m = start_mask(plan, t.tile_index << lo);
  emit(m);
  u64 steps = 1ull << lo;
  for (u64 k = 1; k < steps; ++k) {
    m ^= plan.bits[static_cast<u32>(std::countr_zero(k))].delta;
    emit(m);
  }
}

EvalTables precompute_tables(const Campaign& c) {
  EvalTables T;
  T.require_words = static_cast<u32>(c.require_points.size());
  u32 off = T.require_words;
  std::vector<u32> degrees = c.reject_degrees;
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (u32 d : degrees) {
    check(d >= 1 && d <= 8, errc::bad_argument,
          "reject degree out of range: " + std::to_string(d));
    EvalGroup g;
    g.degree = d;
    g.slots_per_word = 64 / d;
    for (const ClosedPoint& cp : closed_points(f2(), d))
      g.sites.push_back(cp.rep);
    g.nsites = static_cast<u32>(g.sites.size());
    g.words = (g.nsites + g.slots_per_word - 1) / g.slots_per_word;
    g.used.assign(g.words, 0);
    for (u32 s = 0; s < g.nsites; ++s)
      g.used[s / g.slots_per_word] |= 1ull << ((s % g.slots_per_word) * d);
    g.offset = off;
    off += 4 * g.words;
    T.groups.push_back(std::move(g));
  }
  T.row_words = off;

  std::vector<TernaryForm> basis = c.basis.flattened();
  T.rows.assign(basis.size() * T.row_words, 0);
  for (std::size_t e = 0; e < basis.size(); ++e) {
    u64* row = T.rows.data() + e * T.row_words;
    const TernaryForm& f = basis[e];
    std::array<TernaryForm, 3> df = partials(f);
    for (u32 j = 0; j < T.require_words; ++j)
      row[j] = evaluate(f, c.require_points[j]);
    for (const EvalGroup& g : T.groups) {
      for (u32 s = 0; s < g.nsites; ++s) {
        u32 w = s / g.slots_per_word;
        u32 shift = (s % g.slots_per_word) * g.degree;
        const ProjPoint& P = g.sites[s];
        row[g.offset + w] |= static_cast<u64>(evaluate(f, P)) << shift;
        for (int v = 0; v < 3; ++v)
          row[g.offset + (v + 1) * g.words + w]
              |= static_cast<u64>(evaluate(df[v], P)) << shift;
      }
    }
  }
  return T;
}

std::vector<SurvivorRecord> run_search(const Campaign& c, const TileSpec& t,
                                       const EvalTables& tables) {
  check_tile(c, t);
  check(tables.rows.size() == c.basis.count() * tables.row_words,
        errc::bad_argument, "tables do not match the campaign basis");
  WalkPlan plan = make_plan(c.basis);
  u32 lo = c.free_dimension - t.tile_bits;
  u32 nw = tables.row_words;

  SubsetMask m = start_mask(plan, t.tile_index << lo);
  std::vector<u64> state(nw, 0);
  for (u32 e = 0; e < c.basis.count(); ++e)
    if ((m >> e) & 1)
      for (u32 w = 0; w < nw; ++w) state[w] ^= tables.rows[e * nw + w];

  std::vector<SubsetMask> found;
  const u64* rows = tables.rows.data();
  u64* st = state.data();
  u64 steps = 1ull << lo;
  for (u64 k = 0;;) {
    if (state_passes(st, tables)) found.push_back(m);
    if (++k == steps) break;
    const FreeBit& fb = plan.bits[static_cast<u32>(std::countr_zero(k))];
    m ^= fb.delta;
    const u64* ra = rows + fb.element * nw;
    const u64* rb = rows + fb.corrector * nw;
    for (u32 w = 0; w < nw; ++w) st[w] ^= ra[w] ^ rb[w];
  }

  std::sort(found.begin(), found.end());
  std::vector<SurvivorRecord> out;
  out.reserve(found.size());
  for (SubsetMask mask : found) {
    SurvivorRecord r;
    r.id = c.id;
    r.tile = t.tile_index;
    r.mask = mask;
    r.form = subset_form(c.basis, mask);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SurvivorRecord> run_search(const Campaign& c, const TileSpec& t) {
  return run_search(c, t, precompute_tables(c));
}

void run_search_tiled(
    const Campaign& c, const EvalTables& tables, u32 tile_bits, u32 workers,
    const std::set<u64>& done,
    const std::function<void(u64, std::vector<SurvivorRecord>&&)>& on_tile) {
  check(tile_bits <= c.free_dimension, errc::invalid_tile,
        "tile bits exceed the free dimension");
  std::vector<u64> pending;
  for (u64 i = 0; i < (1ull << tile_bits); ++i)
    if (!done.count(i)) pending.push_back(i);
  if (pending.empty()) return;
  if (workers == 0) workers = 1;
  workers = std::min<u32>(workers, static_cast<u32>(pending.size()));

  std::atomic<std::size_t> next{0};
  std::map<std::size_t, std::vector<SurvivorRecord>> ready;
  std::mutex mu;
  std::condition_variable cv;
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= pending.size()) return;
      TileSpec ts;
      ts.id = c.id;
      ts.tile_bits = tile_bits;
      ts.tile_index = pending[i];
      auto res = run_search(c, ts, tables);
      std::lock_guard<std::mutex> lk(mu);
      ready.emplace(i, std::move(res));
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (u32 i = 0; i < workers; ++i) pool.emplace_back(work);
  for (std::size_t i = 0; i < pending.size(); ++i) {
    std::vector<SurvivorRecord> res;
    {
      std::unique_lock<std::mutex> lk(mu);
      cv.wait(lk, [&] { return ready.count(i) != 0; });
      res = std::move(ready[i]);
      ready.erase(i);
    }
    on_tile(pending[i], std::move(res));
  }
  for (auto& th : pool) th.join();
}

std::vector<SurvivorRecord> run_search_tiled(const Campaign& c,
                                             const EvalTables& tables,
                                             u32 tile_bits, u32 workers) {
  std::vector<SurvivorRecord> all;
  run_search_tiled(c, tables, tile_bits, workers, {},
                   [&](u64, std::vector<SurvivorRecord>&& recs) {
                     for (auto& r : recs) all.push_back(std::move(r));
                   });
  std::sort(all.begin(), all.end(),
            [](const SurvivorRecord& a, const SurvivorRecord& b) {
              return a.mask < b.mask;
            });
  return all;
}

bool passes_filters(const Campaign& c, const TernaryForm& f) {
  for (u32 d : c.reject_degrees)
    if (!smooth_points_of_degree(f, d).empty()) return false;
  if (c.require_points.empty()) return true;
  for (const ProjPoint& P : c.require_points)
    if (evaluate(f, P) == 0) return true;
  return false;
}

std::string survivor_line(const SurvivorRecord& r) {
  std::ostringstream out;
  out << campaign_name(r.id) << '\t' << r.tile << '\t' << "0x" << std::hex
      << r.mask << '\t' << form_to_string(r.form);
  return out.str();
}

SurvivorRecord parse_survivor_line(const FieldCtx& F, u32 degree,
                                   const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t tab = line.find('\t', pos);
    check(tab != std::string::npos, errc::parse_error,
          "survivor line needs 4 tab-separated fields: " + line);
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
  fields.push_back(line.substr(pos));
  SurvivorRecord r;
  r.id = campaign_from_name(fields[0]);
  try {
    r.tile = std::stoull(fields[1]);
    r.mask = std::stoull(fields[2], nullptr, 16);
  } catch (const std::exception&) {
    fail(errc::parse_error, "bad tile or mask field: " + line);
  }
  r.form = parse_form(F, degree, fields[3]);
  return r;
}

void write_checkpoint(const std::string& path, CampaignId id, u32 tile_bits,
                      const std::set<u64>& done) {
  std::ofstream out(path, std::ios::trunc);
  check(static_cast<bool>(out), errc::io_error,
        "cannot write checkpoint: " + path);
  out << campaign_name(id) << ' ' << tile_bits << '\n';
  for (u64 t : done) out << t << '\n';
  check(static_cast<bool>(out), errc::io_error,
        "checkpoint write failed: " + path);
}

std::set<u64> read_checkpoint(const std::string& path, CampaignId id,
                              u32 tile_bits) {
  check(tile_bits <= 63, errc::bad_argument, "tile bits out of range");
  std::ifstream in(path);
  if (!in) return {};  // no checkpoint yet: nothing completed
  std::string name;
  u32 bits = 0;
  check(static_cast<bool>(in >> name >> bits), errc::parse_error,
        "malformed checkpoint header: " + path);
  check(name == campaign_name(id) && bits == tile_bits, errc::bad_argument,
        "checkpoint belongs to a different run: " + path);
  std::set<u64> done;
  u64 t;
  while (in >> t) {
    check(t < (1ull << tile_bits), errc::parse_error,
          "checkpoint tile index out of range: " + path);
    done.insert(t);
  }
  return done;
}

}  // namespace maxgon
