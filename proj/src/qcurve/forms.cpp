#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "serre/qcurve.hpp"

namespace serre::qcurve {

namespace {

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool primitive(const Form& f) {
  return std::gcd(std::gcd(std::llabs(f.a), std::llabs(f.b)), std::llabs(f.c)) == 1;
}

}  // namespace

std::vector<Form> reduced_definite_forms(std::int64_t disc) {
  if (disc >= 0 || ((disc % 4) + 4) % 4 > 1) throw InvalidInput("not a negative discriminant: " + std::to_string(disc));
  std::vector<Form> out;
  const std::int64_t n = -disc;
  for (std::int64_t b = n % 2; 3 * b * b <= n; b += 2) {
    const std::int64_t m = (b * b + n) / 4;  // a c
    for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= m; ++a) {
      if (m % a != 0) continue;
      const std::int64_t c = m / a;
      const Form f{a, b, c};
      if (!primitive(f)) continue;
      out.push_back(f);
      if (b > 0 && b < a && a < c) out.push_back({a, -b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Form> reduced_indefinite_forms(std::int64_t disc) {
  if (disc <= 0 || ((disc % 4) + 4) % 4 > 1 || isqrt(disc) * isqrt(disc) == disc) {
    throw InvalidInput("not a positive non-square discriminant: " + std::to_string(disc));
  }
  // Reduced: |sqrt(disc) - 2|a|| < b < sqrt(disc).
  std::vector<Form> out;
  const std::int64_t s = isqrt(disc);
  for (std::int64_t b = (disc % 2 == 0) ? 2 : 1; b <= s; b += 2) {
    const std::int64_t m = (disc - b * b) / 4;  // -a c > 0
    for (std::int64_t x = 1; x <= std::min(m, s); ++x) {
      if (m % x != 0) continue;
      const std::int64_t y = m / x;
      // |a| = x, |c| = y
      const std::int64_t lo = 2 * x - b;
      if ((2 * x + b) * (2 * x + b) <= disc) continue;
      if (lo > 0 && lo * lo >= disc) continue;
      for (std::int64_t sign : {1, -1}) {
        const Form f{sign * x, b, -sign * y};
        if (primitive(f)) out.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Form rho(const Form& f, std::int64_t disc) {
  const std::int64_t s = isqrt(disc);
  const std::int64_t c = f.c;
  const std::int64_t m = 2 * std::llabs(c);
  if (std::llabs(c) > s) throw InvalidInput("rho is only defined here on reduced forms");
  // r = -b (mod 2|c|), sqrt(disc) - 2|c| < r < sqrt(disc)
  const std::int64_t r = s - ((((s + f.b) % m) + m) % m);
  return {c, r, (r * r - disc) / (4 * c)};
}

std::vector<std::vector<Form>> indefinite_cycles(std::int64_t disc) {
  const auto forms = reduced_indefinite_forms(disc);
  std::set<Form> unseen(forms.begin(), forms.end());
  std::vector<std::vector<Form>> cycles;
  while (!unseen.empty()) {
    const Form start = *unseen.begin();
    std::vector<Form> cycle;
    Form cur = start;
    do {
      if (unseen.erase(cur) != 1) throw Error("reduction cycle left the set of reduced forms");
      cycle.push_back(cur);
      cur = rho(cur, disc);
    } while (cur != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::size_t continued_fraction_period(std::int64_t P, std::int64_t Q, std::int64_t d) {
  if (Q == 0 || (d - P * P) % Q != 0) throw InvalidInput("continued fraction needs Q | d - P^2");
  const std::int64_t s = isqrt(d);
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> seen;
  for (std::size_t i = 0;; ++i) {
    const auto [it, fresh] = seen.emplace(std::make_pair(P, Q), i);
    if (!fresh) return i - it->second;
    // a = floor((P + sqrt d) / Q)
    const std::int64_t num = P + s + (Q < 0 ? 1 : 0);
    std::int64_t a = num / Q;
    if ((num % Q != 0) && ((num < 0) != (Q < 0))) --a;
    P = a * Q - P;
    Q = (d - P * P) / Q;
  }
}

}  // namespace serre::qcurve
