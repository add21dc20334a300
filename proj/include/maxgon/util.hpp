#pragma once
// Shared small utilities: the library error type, integer helpers, and a
// deterministic RNG wrapper used by sampling-style tests and CLI commands.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxgon {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Count sequences indexed by degree: v[r-1] is the value at degree r.
using CountsVector = std::vector<i64>;

enum class errc {
  field_too_large,
  bad_modulus,
  mixed_fields,
  bad_argument,
  parse_error,
  degree_too_large,
  not_smooth,
  non_integral_reconstruction,
  not_enough_quadratic_points,
  group_too_large,
  io_error,
  unknown_campaign,
  invalid_tile,
  not_pointless,
  unsupported_field,
};

// All contract violations surface as this exception; internal invariant
// breakage uses assertions instead.
class error : public std::runtime_error {
public:
  error(errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline void check(bool cond, errc c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

// Deterministic RNG; the fixed default seed makes sampling-style checks
// reproducible run to run unless the caller overrides it.
inline constexpr u64 kDefaultSeed = 0x6d61786765u;

class rng {
public:
  explicit rng(u64 seed = kDefaultSeed) : eng_(seed) {}
  u64 next() { return eng_(); }
  // uniform in [0, n)
  u64 below(u64 n) { return n ? eng_() % n : 0; }

private:
  std::mt19937_64 eng_;
};

// Integer helpers used throughout (all arguments small).
inline std::vector<u32> divisors_of(u32 n) {
  std::vector<u32> out;
  for (u32 d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<u32> prime_factors_of(u32 n) {
  std::vector<u32> out;
  for (u32 p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

inline int moebius_mu(u32 n) {
  int mu = 1;
  for (u32 p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  if (n > 1) mu = -mu;
  return mu;
}

inline bool is_prime_u32(u32 n) {
  if (n < 2) return false;
  for (u32 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// Writes q = p^k for prime powers; returns false otherwise.
inline bool split_prime_power(u32 q, u32& p, u32& k) {
  if (q < 2) return false;
  for (u32 b = 2; b * b <= q; ++b)
    if (q % b == 0) {
      u32 m = q, e = 0;
      while (m % b == 0) m /= b, ++e;
      if (m != 1) return false;
      p = b;
      k = e;
      return true;
    }
  p = q;
  k = 1;
  return true;
}

}  // namespace maxgon
