// Copyright 2026 The gtcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GTCOUNT_COUNT_HPP_
#define GTCOUNT_COUNT_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gtcount {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arbitrary-precision nonnegative integer. Every tally in the library is a
// Count; the interesting games overflow 64-bit integers before the flop, and
// doubles cannot represent the results exactly. Backed by GMP.
//
// Counts are unsigned by construction: there is no subtraction operator, so
// a Count can never go below zero. Values are immutable once built except
// through the compound operators, and all operations are pure, making shared
// Counts safe to read concurrently.
class Count {
 public:
  Count() : v_(0) {}
  Count(unsigned int v) : v_(v) {}                  // NOLINT(runtime/explicit)
  Count(unsigned long v) : v_(v) {}                 // NOLINT(runtime/explicit)
  explicit Count(mpz_class v);

  // Parses a plain decimal string (digits only, optional ' ' group
  // separators). Throws Error on anything else, including negatives.
  static Count FromDecimal(std::string_view text);

  // 10^exponent, handy for building test fixtures and rounding.
  static Count PowerOfTen(unsigned long exponent);
  // 2^exponent.
  static Count PowerOfTwo(unsigned long exponent);

  Count(const Count&) = default;
  Count(Count&&) noexcept = default;
  Count& operator=(const Count&) = default;
  Count& operator=(Count&&) noexcept = default;

  Count& operator+=(const Count& o);
  Count& operator*=(const Count& o);
  Count& operator+=(unsigned long o);
  Count& operator*=(unsigned long o);

  friend Count operator+(Count a, const Count& b) { return a += b; }
  friend Count operator*(Count a, const Count& b) { return a *= b; }
  friend Count operator+(Count a, unsigned long b) { return a += b; }
  friend Count operator*(Count a, unsigned long b) { return a *= b; }
  friend Count operator*(unsigned long a, Count b) { return b *= a; }

  // Exact floor(a / d). Throws Error when d is zero.
  Count FloorDiv(const Count& d) const;
  // Quotient and remainder in one step: a = q*d + r with 0 <= r < d.
  std::pair<Count, Count> DivMod(const Count& d) const;
  // ceil(a / d); used for memory-unit conversion.
  Count CeilDiv(const Count& d) const;

  bool IsZero() const { return mpz_sgn(v_.get_mpz_t()) == 0; }
  // Number of decimal digits (1 for zero).
  int DecimalDigits() const;

  bool FitsUint64() const;
  std::uint64_t AsUint64() const;  // throws Error if the value does not fit

  std::strong_ordering operator<=>(const Count& o) const {
    int c = mpz_cmp(v_.get_mpz_t(), o.v_.get_mpz_t());
    return c < 0    ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                    : std::strong_ordering::equal;
  }
  bool operator==(const Count& o) const { return (*this <=> o) == 0; }

  // Full decimal expansion. With grouping on, digits are grouped in threes
  // separated by single spaces ("319 365 922 522 608").
  std::string ToDecimal(bool grouped = false) const;

  // Scientific notation with round-half-up at sig_digits significant digits
  // and trailing zeros after the decimal point trimmed: "8.54665e31",
  // "2.564e32". Integers below 10^7 are rendered verbatim, matching the
  // report tables. sig_digits must be >= 1.
  std::string ToScientific(int sig_digits = 6) const;

  const mpz_class& raw() const { return v_; }

  friend std::ostream& operator<<(std::ostream& os, const Count& c);

 private:
  mpz_class v_;
};

}  // namespace gtcount

#endif  // GTCOUNT_COUNT_HPP_
