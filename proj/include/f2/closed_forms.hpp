#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "f2/error.hpp"
#include "f2/order.hpp"

namespace f2 {

// -------------------------------------------------------------- number theory

namespace nt {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1u) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s && composite; ++r) {
      x = mulmod(x, x, n);
      composite = x != n - 1;
    }
    if (composite) return false;
  }
  return true;
}

inline std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

/// Prime factorization as {prime -> exponent}.
inline std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> out;
  if (n == 0) throw DomainError("cannot factor 0");
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  std::vector<std::uint64_t> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    auto m = stack.back();
    stack.pop_back();
    if (is_prime(m)) {
      ++out[m];
      continue;
    }
    auto d = pollard_rho(m);
    stack.push_back(d);
    stack.push_back(m / d);
  }
  return out;
}

/// Multiplicative order of a modulo prime l (a not divisible by l).
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t l) {
  std::uint64_t ord = l - 1;
  for (auto [q, e] : factorize(l - 1)) {
    for (unsigned i = 0; i < e; ++i) {
      if (powmod(a, ord / q, l) == 1)
        ord /= q;
      else
        break;
    }
  }
  return ord;
}

/// (p, m) when n = p^m with p prime.
inline std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return std::pair{f.begin()->first, f.begin()->second};
}

}  // namespace nt

/// Number of distinct primes dividing n.
inline unsigned omega(std::uint64_t n) {
  if (n == 0) throw DomainError("omega(0) is undefined");
  return n == 1 ? 0u : static_cast<unsigned>(nt::factorize(n).size());
}

struct PiecewiseResult {
  std::int64_t value = 0;
  std::string case_label;
};

inline std::int64_t pow2(unsigned e) { return std::int64_t{1} << e; }

// ------------------------------------------------------------------- families

inline PiecewiseResult f2_cyclic(std::uint64_t n) {
  if (n < 2) throw DomainError("f2_cyclic requires n >= 2");
  return {pow2(omega(n) - 1) - 1, "2^(omega(n)-1) - 1"};
}

/// Invariant-factor data per prime: p -> (beta_1 >= beta_2 >= ...), as exponents.
struct AbelianType {
  std::map<std::uint64_t, std::vector<unsigned>> primary;

  /// From any list of cyclic factor orders (e.g. {4, 2, 3}).
  static AbelianType from_factors(const std::vector<std::uint64_t>& factors) {
    AbelianType t;
    for (auto f : factors) {
      if (f == 0) throw DomainError("abelian factor 0");
      if (f == 1) continue;
      for (auto [p, e] : nt::factorize(f)) t.primary[p].push_back(e);
    }
    for (auto& [p, betas] : t.primary) std::sort(betas.rbegin(), betas.rend());
    return t;
  }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const auto& [p, betas] : primary)
      for (auto b : betas)
        for (unsigned i = 0; i < b; ++i) n *= p;
    return n;
  }

  unsigned t(std::uint64_t p) const {
    auto it = primary.find(p);
    return it == primary.end() ? 0u : static_cast<unsigned>(it->second.size());
  }

  bool is_cyclic() const {
    return std::all_of(primary.begin(), primary.end(), [](const auto& kv) { return kv.second.size() == 1; });
  }
};

struct AbelianFormulaResult {
  std::int64_t value = 0;                   // the product formula, evaluated verbatim
  std::optional<std::int64_t> cyclic_value; // 2^(omega-1) - 1 when the group is cyclic
  bool discrepancy = false;                 // formula and cyclic theorem disagree
};

inline AbelianFormulaResult f2_abelian(const AbelianType& t) {
  const auto n = t.order();
  if (n < 2) throw DomainError("f2_abelian requires a nontrivial group");
  AbelianFormulaResult r;
  r.value = pow2(omega(n) - 1) - 1;
  for (const auto& [p, betas] : t.primary) r.value *= pow2(static_cast<unsigned>(betas.size()) - 1) - 1;
  if (t.is_cyclic()) {
    r.cyclic_value = f2_cyclic(n).value;
    r.discrepancy = *r.cyclic_value != r.value;
  }
  return r;
}

/// f2 of the dihedral group of order 2n, n >= 3.
inline PiecewiseResult f2_dihedral(std::uint64_t n) {
  if (n < 3) throw DomainError("f2_dihedral requires n >= 3 (D4 is abelian)");
  if (n % 2) return {pow2(omega(n)) - 1, "n odd: 2^omega(n) - 1"};
  const std::int64_t w = omega(n), wh = omega(n / 2);
  if (wh == 0) throw DomainError("f2_dihedral even branch needs n/2 > 1");
  return {pow2(static_cast<unsigned>(w)) + pow2(static_cast<unsigned>(wh - 1)) + wh - w - 1,
          "n even: 2^omega(n) + 2^(omega(n/2)-1) + omega(n/2) - omega(n) - 1"};
}

/// Generalized quaternion group of order 2^n.
inline PiecewiseResult f2_quaternion(unsigned n) {
  if (n < 3) throw DomainError("f2_quaternion requires n >= 3");
  return {0, "generalized quaternion: no exact factorizations"};
}

/// Semidihedral group of order 2^n.
inline PiecewiseResult f2_semidihedral(unsigned n) {
  if (n < 4) throw DomainError("f2_semidihedral requires n >= 4");
  return {2, "semidihedral: 2"};
}

/// Modular p-group of order p^n.
inline PiecewiseResult f2_modular(std::uint64_t p, unsigned n) {
  if (p == 2 || !nt::is_prime(p)) throw DomainError("f2_modular requires an odd prime p");
  if (n < 3) throw DomainError("f2_modular requires n >= 3");
  return {1, "modular p-group: 1"};
}

/// PSL(2, p^m), verbatim piecewise values.
inline PiecewiseResult f2_psl2(std::uint64_t p, unsigned m) {
  if (!nt::is_prime(p)) throw DomainError("f2_psl2 requires p prime");
  if (m < 1) throw DomainError("f2_psl2 requires m >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) q *= p;
  if (q == 9) return {0, "q = 9"};
  if (q == 7) return {2, "q = 7"};
  if (q == 11) return {3, "q = 11"};
  return {1, "otherwise"};
}

/// A_{2m}, m odd >= 3.
inline PiecewiseResult f2_alternating_2m(std::uint64_t m) {
  if (m % 2 == 0) throw DomainError("f2_alternating_2m requires m odd");
  if (m < 3) throw DomainError("f2_alternating_2m requires m >= 3");
  auto pp = nt::as_prime_power(2 * m - 1);
  if (pp && pp->second % 2 == 0) return {2, "2m-1 = q^r, q odd, r even"};
  if (pp) return {1, "2m-1 a prime power, r odd"};
  return {0, "2m-1 not a prime power"};
}

/// Least prime l with p^(2n) = 1 mod l and p^k != 1 mod l for 0 < k < 2n.
inline std::optional<std::uint64_t> zsigmondy_prime(std::uint64_t p, unsigned n) {
  if (!nt::is_prime(p)) throw DomainError("zsigmondy_prime requires p prime");
  if (n < 1) throw DomainError("zsigmondy_prime requires n >= 1");
  unsigned __int128 big = 1;
  for (unsigned i = 0; i < 2 * n; ++i) {
    big *= p;
    if (big > UINT64_MAX) throw DomainError("p^(2n) exceeds 64 bits");
  }
  const auto value = static_cast<std::uint64_t>(big - 1);
  for (auto [l, e] : nt::factorize(value))
    if (p % l != 0 && nt::multiplicative_order(p % l, l) == 2 * n) return l;
  return std::nullopt;
}

// --------------------------------------------------------------- gnu reference

/// Number of groups of order n, for n <= 31 and n = 2^k with k <= 7.
inline std::optional<std::uint64_t> gnu_reference(std::uint64_t n) {
  static const std::map<std::uint64_t, std::uint64_t> table = {
      {1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},  {7, 1},  {8, 5},   {9, 2},   {10, 2}, {11, 1},
      {12, 5}, {13, 1}, {14, 2}, {15, 1}, {16, 14}, {17, 1}, {18, 5}, {19, 1},  {20, 5},  {21, 2}, {22, 2},
      {23, 1}, {24, 15}, {25, 2}, {26, 2}, {27, 5}, {28, 4}, {29, 1}, {30, 4}, {31, 1}, {32, 51}, {64, 267},
      {128, 2328}};
  auto it = table.find(n);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

/// Published values for orders 1..31, as printed: {order, gnu, sum of f2}.
/// Prime orders are printed collectively (gnu 1, sum 0).
struct PrintedTableRow {
  std::uint64_t order;
  std::uint64_t gnu;
  std::uint64_t sum;
};

inline constexpr const char* kPrintedTableSource = "paper-table-1";

inline std::optional<PrintedTableRow> printed_table_row(std::uint64_t n) {
  static const std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> rows = {
      {4, {2, 1}},   {6, {2, 2}},   {8, {5, 4}},   {9, {2, 1}},   {10, {2, 2}},  {12, {5, 8}},
      {14, {2, 2}},  {15, {1, 1}},  {16, {14, 19}}, {18, {5, 7}},  {20, {5, 8}},  {21, {2, 2}},
      {22, {2, 2}},  {24, {6, 17}}, {25, {2, 2}},  {26, {2, 2}},  {27, {5, 4}},  {28, {4, 7}},
      {30, {4, 8}}};
  if (n >= 2 && n <= 31 && nt::is_prime(n)) return PrintedTableRow{n, 1, 0};
  auto it = rows.find(n);
  if (it == rows.end()) return std::nullopt;
  return PrintedTableRow{n, it->second.first, it->second.second};
}

// ------------------------------------------------------------ A_{2^n} bounds

/// ceil(2^(2 n^2 (n-6) / 27)), or 0 when the exponent is negative.
inline Order a2n_lower_bound(unsigned n) {
  using boost::multiprecision::cpp_int;
  if (n < 1) throw DomainError("a2n_lower_bound requires n >= 1");
  const std::int64_t num = 2 * static_cast<std::int64_t>(n) * n * (static_cast<std::int64_t>(n) - 6);
  if (num < 0) return 0;
  const std::int64_t g = std::gcd(num, std::int64_t{27});
  const std::int64_t a = num / g, b = 27 / g;  // exponent a/b
  // Least x with x^b >= 2^a.
  const cpp_int target = cpp_int(1) << a;
  cpp_int lo = 1, hi = cpp_int(1) << (a / b + 1);
  while (lo < hi) {
    cpp_int mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, static_cast<unsigned>(b)) >= target)
      hi = mid;
    else
      lo = mid + 1;
  }
  if (lo > cpp_int((std::numeric_limits<unsigned __int128>::max)()))
    throw DomainError("a2n_lower_bound exceeds 128 bits for n = " + std::to_string(n));
  return static_cast<Order>(lo);
}

/// gnu(2^n) - 1.
inline std::uint64_t gnu_lower_bound(unsigned n) {
  if (n < 1) throw DomainError("gnu_lower_bound requires n >= 1");
  if (n > 7) throw DomainError("gnu reference table covers 2^n only for n <= 7");
  return *gnu_reference(std::uint64_t{1} << n) - 1;
}

/// The asymptotic upper exponent (2/27) n^3 + O(n^(5/2)). The O-constant is
/// unspecified, so this is a symbolic record, not a number.
struct SymbolicExponent {
  double main_term = 0;
  std::string residual_order;
  std::string text;
};

inline SymbolicExponent a2n_upper_exponent(unsigned n) {
  if (n < 1) throw DomainError("a2n_upper_exponent requires n >= 1");
  SymbolicExponent e;
  e.main_term = 2.0 * n * n * n / 27.0;
  e.residual_order = "n^(5/2)";
  e.text = "(2/27)*" + std::to_string(n) + "^3 + O(" + std::to_string(n) + "^(5/2))";
  return e;
}

/// True iff 2^n - 1 is prime.
inline bool mersenne_k3_predicate(unsigned n) {
  if (n < 2) throw DomainError("mersenne_k3_predicate requires n >= 2");
  if (n < 64) return nt::is_prime((std::uint64_t{1} << n) - 1);
  if (!nt::is_prime(n)) return false;
  // Lucas-Lehmer.
  using boost::multiprecision::cpp_int;
  const cpp_int m = (cpp_int(1) << n) - 1;
  cpp_int s = 4;
  for (unsigned i = 0; i < n - 2; ++i) s = (s * s - 2) % m;
  return s == 0;
}

/// The predicate of the open question on Table 1: prime or power of two.
inline bool is_power_of_two(std::uint64_t n) { return n && !(n & (n - 1)); }

}  // namespace f2
