#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace conecalc {

// Exact rational scalar. mpq_class keeps gcd-reduced form with positive
// denominator after every arithmetic operation, which is exactly the
// canonical form we need.
using Rational = mpq_class;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Parses "p/q" or "p" (decimal integers, optional leading '-').
Rational rat_from_string(const std::string& s);
std::string rat_to_string(const Rational& r);

using RatVector = std::vector<Rational>;

struct RatMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;  // row-major

  RatMatrix() = default;
  RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Rational& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }

  RatVector row(std::size_t i) const {
    return RatVector(a.begin() + i * cols, a.begin() + (i + 1) * cols);
  }

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  bool operator==(const RatMatrix& o) const = default;
};

Rational dot(const RatVector& x, const RatVector& y);
RatVector mat_vec(const RatMatrix& m, const RatVector& x);
RatVector vec_add(const RatVector& x, const RatVector& y);
RatVector vec_sub(const RatVector& x, const RatVector& y);
RatVector vec_scale(const Rational& c, const RatVector& x);
bool is_zero(const RatVector& x);

// Scales to coprime integer entries with the first nonzero entry positive.
// The zero vector is returned unchanged. Only for sign-free data
// (nullspace and lineality bases).
RatVector canonicalize(const RatVector& v);

// Scales by a positive rational to coprime integer entries, keeping the
// direction. Canonical representative of a ray or facet normal.
RatVector canonicalize_ray(const RatVector& v);

// Strict lexicographic order on vectors with larger entries first, so
// e.g. (1,0) precedes (0,1). Used for canonical sorting of ray and
// facet lists; this puts standard basis vectors in their usual order.
bool lex_less(const RatVector& x, const RatVector& y);

void sort_canonical(std::vector<RatVector>& vs);

}  // namespace conecalc
