// Copyright 2026 The Gomory Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gomory/numeric.hpp"

#include <algorithm>

#include "gomory/errors.hpp"
#include "gomory/matrix.hpp"

namespace gomory {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::kOverflow, "exponent overflow");
  return r;
}

Exponent checked_sub(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(ErrorCode::kOverflow, "exponent overflow");
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || text.empty())
    throw Error(ErrorCode::kInvalidInput, "not a rational number: '" + text + "'");
  if (q.get_den() == 0)
    throw Error(ErrorCode::kInvalidInput, "zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const IntVector& a, const ExpVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) s += a[i] * Integer(static_cast<long>(b[i]));
  return s;
}

IntVector to_int_vector(const std::vector<long>& v) {
  return IntVector(v.begin(), v.end());
}

RatVector to_rat_vector(const IntVector& v) {
  return RatVector(v.begin(), v.end());
}

ExpVector to_exp_vector(const IntVector& v) {
  ExpVector out;
  out.reserve(v.size());
  for (const auto& z : v) {
    if (!z.fits_slong_p())
      throw Error(ErrorCode::kOverflow, "exponent does not fit in 64 bits");
    out.push_back(z.get_si());
  }
  return out;
}

IntVector clear_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.get_num() * (l / q.get_den()));
  return out;
}

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g == 0 || g == 1) return v;
  IntVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(z / g);
  return out;
}

bool is_subset(const IndexSet& small, const IndexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

IndexSet complement(const IndexSet& s, int n) {
  IndexSet out;
  std::size_t k = 0;
  for (int j = 0; j < n; ++j) {
    if (k < s.size() && s[k] == j) {
      ++k;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

RatVector left_multiply(const RatVector& y, const IntMatrix& m) {
  RatVector out(m.cols(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (y[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += y[r] * m(r, c);
  }
  return out;
}

}  // namespace gomory
