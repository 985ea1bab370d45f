#include "seidel/polynomial.hpp"

#include <string>
#include <utility>

#include "seidel/errors.hpp"
#include "seidel/spectra.hpp"

namespace seidel {

namespace {

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_monic(RatPoly& p) {
  trim(p);
  if (p.empty()) return;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
}

// Remainder of a / b (b non-zero, trimmed).
RatPoly poly_rem(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const auto shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

RatPoly poly_quotient(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  RatPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const auto shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

Rational cauchy_bound(const RatPoly& p) {
  Rational largest = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const Rational ratio = abs(p[i] / p.back());
    if (ratio > largest) largest = ratio;
  }
  return largest + 1;
}

}  // namespace

IntPoly characteristic_polynomial(std::span<const long long> matrix, int n) {
  if (n < 1 || matrix.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw LengthMismatch("characteristic polynomial needs an n x n matrix");
  }
  const auto dim = static_cast<std::size_t>(n);
  std::vector<BigInt> a(matrix.begin(), matrix.end());
  IntPoly coeffs(dim + 1);
  coeffs[dim] = 1;

  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
  std::vector<BigInt> m(dim * dim, 0);
  std::vector<BigInt> am(dim * dim);
  for (std::size_t k = 1; k <= dim; ++k) {
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        BigInt sum = 0;
        for (std::size_t l = 0; l < dim; ++l) sum += a[i * dim + l] * m[l * dim + j];
        am[i * dim + j] = std::move(sum);
      }
    }
    for (std::size_t i = 0; i < dim; ++i) am[i * dim + i] += coeffs[dim - k + 1];
    m.swap(am);
    BigInt trace = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t l = 0; l < dim; ++l) trace += a[i * dim + l] * m[l * dim + i];
    }
    coeffs[dim - k] = -trace / static_cast<long long>(k);
  }
  return coeffs;
}

IntPoly seidel_characteristic_polynomial(const Graph& g) {
  const auto s = seidel_matrix(g);
  std::vector<long long> entries;
  entries.reserve(s.data().size());
  for (const auto v : s.data()) entries.push_back(static_cast<long long>(v));
  return characteristic_polynomial(entries, g.order());
}

RatPoly to_rational(const IntPoly& p) {
  RatPoly out(p.begin(), p.end());
  trim(out);
  return out;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

RatPoly squarefree_part(const RatPoly& p) {
  RatPoly derivative;
  for (std::size_t i = 1; i < p.size(); ++i) derivative.push_back(p[i] * static_cast<long long>(i));
  trim(derivative);
  if (derivative.empty()) {
    auto out = p;
    make_monic(out);
    return out;
  }
  auto out = poly_quotient(p, poly_gcd(p, derivative));
  make_monic(out);
  return out;
}

int real_roots_above(const RatPoly& p, const Rational& q) {
  // Taylor shift: coefficients of p(x + q).
  RatPoly shifted = p;
  const std::size_t degree = shifted.empty() ? 0 : shifted.size() - 1;
  for (std::size_t i = 0; i < degree; ++i) {
    for (std::size_t j = degree; j-- > i;) shifted[j] += q * shifted[j + 1];
  }
  int variations = 0;
  int last_sign = 0;
  for (const auto& c : shifted) {
    const int sign = c.sign();
    if (sign == 0) continue;
    if (last_sign != 0 && sign != last_sign) ++variations;
    last_sign = sign;
  }
  return variations;
}

void RootInterval::refine() {
  const Rational mid = (lo + hi) / 2;
  if (real_roots_above(squarefree, mid) == 0) {
    hi = mid;
  } else {
    lo = mid;
  }
}

RootInterval isolate_largest_root(const RatPoly& p) {
  RootInterval out;
  out.squarefree = squarefree_part(p);
  if (out.squarefree.size() < 2) {
    throw GraphError("largest root of a constant polynomial is undefined");
  }
  const Rational bound = cauchy_bound(out.squarefree);
  out.lo = -bound;
  out.hi = bound;
  while (real_roots_above(out.squarefree, out.lo) != 1) out.refine();
  return out;
}

std::strong_ordering compare_largest_roots(const RatPoly& p, const RatPoly& q) {
  auto ip = isolate_largest_root(p);
  auto iq = isolate_largest_root(q);

  const auto common = poly_gcd(ip.squarefree, iq.squarefree);
  if (common.size() >= 2) {
    // A root of the gcd in an isolating interval is that interval's root.
    const bool p_root_shared =
        real_roots_above(common, ip.lo) - real_roots_above(common, ip.hi) > 0;
    const bool q_root_shared =
        real_roots_above(common, iq.lo) - real_roots_above(common, iq.hi) > 0;
    if (p_root_shared && q_root_shared) return std::strong_ordering::equal;
    if (p_root_shared) return std::strong_ordering::less;
    if (q_root_shared) return std::strong_ordering::greater;
  }
  while (!(ip.hi <= iq.lo || iq.hi <= ip.lo)) {
    if (ip.hi - ip.lo >= iq.hi - iq.lo) {
      ip.refine();
    } else {
      iq.refine();
    }
  }
  return ip.hi <= iq.lo ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace seidel
