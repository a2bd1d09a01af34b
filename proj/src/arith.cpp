#include "qrd/arith.hpp"

#include <cstdlib>
#include <string>

#include "qrd/errors.hpp"

namespace qrd {

PrimeTable sieve_primes(std::uint64_t bound) {
  if (bound < 2) throw domain_error("sieve_primes: bound must be at least 2");
  PrimeTable table;
  table.bound = bound;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i * i <= bound; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  for (std::uint64_t i = 2; i <= bound; ++i)
    if (!composite[i]) table.primes.push_back(i);
  return table;
}

namespace {

// Largest trial divisor attempted before giving up on a composite cofactor.
constexpr std::uint64_t kTrialLimit = 10'000'000;

}  // namespace

Factorization factorize(const Int& n) {
  if (n < 1) throw domain_error("factorize: argument must be positive");
  Factorization f;
  Int rem = n;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (rem % p == 0) {
      rem /= p;
      ++e;
    }
    if (e > 0) f.factors.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel.
  for (std::uint64_t d = 5; Int(d) * d <= rem; d += 6) {
    if (d > kTrialLimit)
      throw size_limit_error(
          "factorize: cofactor " + rem.str() +
          " exceeds the trial-division budget (largest divisor tried " +
          std::to_string(kTrialLimit) + ")");
    strip(d);
    strip(d + 2);
  }
  if (rem > 1) f.factors.emplace_back(rem, 1);
  return f;
}

Int squarefree_part(const Int& n) {
  if (n < 1) throw domain_error("squarefree_part: argument must be positive");
  Int out = 1;
  for (const auto& [p, e] : factorize(n).factors)
    if (e % 2 == 1) out *= p;
  return out;
}

std::set<Int> pi_odd(const Int& z) {
  if (z < 1) throw domain_error("pi_odd: argument must be positive");
  std::set<Int> out;
  for (const auto& [p, e] : factorize(z).factors)
    if (e % 2 == 1) out.insert(p);
  return out;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

int legendre(const Int& z, std::uint64_t p) {
  if (p < 3 || p % 2 == 0)
    throw domain_error("legendre: modulus must be an odd prime");
  Int r = z % Int(p);
  if (r < 0) r += p;
  std::uint64_t a = r.convert_to<std::uint64_t>();
  if (a == 0) return 0;
  std::uint64_t e = powmod(a, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

int legendre(std::int64_t z, std::uint64_t p) { return legendre(Int(z), p); }

std::uint64_t residue_table_budget_bytes() {
  if (const char* env = std::getenv("QRD_MEMORY_MB")) {
    char* end = nullptr;
    unsigned long long mb = std::strtoull(env, &end, 10);
    if (end != env && mb > 0) return static_cast<std::uint64_t>(mb) << 20;
  }
  return std::uint64_t(16) << 20;  // p up to 2^24 by default
}

std::vector<std::int8_t> residue_table(std::uint64_t p) {
  if (p < 3 || p % 2 == 0)
    throw domain_error("residue_table: modulus must be an odd prime");
  if (p > residue_table_budget_bytes())
    throw resource_error(
        "residue_table: p = " + std::to_string(p) +
        " exceeds the memory budget; raise QRD_MEMORY_MB to allow it");
  std::vector<std::int8_t> table(p, -1);
  table[0] = 0;
  for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x)
    table[(x * x) % p] = 1;
  return table;
}

}  // namespace qrd
