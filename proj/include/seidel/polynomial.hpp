#pragma once

#include <compare>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "seidel/graph.hpp"

namespace seidel {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer polynomial, coefficients lowest degree first.
using IntPoly = std::vector<BigInt>;
/// Rational polynomial, coefficients lowest degree first, no trailing zeros.
using RatPoly = std::vector<Rational>;

/// det(xI - A) for a square integer matrix (row-major), by Faddeev-LeVerrier
/// over exact integers.
IntPoly characteristic_polynomial(std::span<const long long> matrix, int n);

/// Characteristic polynomial of the Seidel matrix of g.
IntPoly seidel_characteristic_polynomial(const Graph& g);

RatPoly to_rational(const IntPoly& p);

/// Monic greatest common divisor (zero polynomial if both are zero).
RatPoly poly_gcd(RatPoly a, RatPoly b);

/// p / gcd(p, p'), monic.
RatPoly squarefree_part(const RatPoly& p);

/// Number of roots strictly greater than q, counted with multiplicity.
/// Valid only for polynomials whose roots are all real: Descartes' sign
/// count of p(x + q) is then exact.
int real_roots_above(const RatPoly& p, const Rational& q);

/// Half-open interval (lo, hi] holding the largest root of a real-rooted
/// polynomial and no other root of its square-free part.
struct RootInterval {
  RatPoly squarefree;
  Rational lo;
  Rational hi;

  /// Halves the interval, keeping the isolation property.
  void refine();
};

RootInterval isolate_largest_root(const RatPoly& p);

/// Exact comparison of the largest roots of two real-rooted polynomials of
/// positive degree.
std::strong_ordering compare_largest_roots(const RatPoly& p, const RatPoly& q);

}  // namespace seidel
