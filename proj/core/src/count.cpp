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

#include "gtcount/count.hpp"

#include <cctype>
#include <ostream>

namespace gtcount {

namespace {

mpz_class Pow10(unsigned long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
  return p;
}

}  // namespace

Count::Count(mpz_class v) : v_(std::move(v)) {
  if (mpz_sgn(v_.get_mpz_t()) < 0) {
    throw Error("Count cannot be negative");
  }
}

Count Count::FromDecimal(std::string_view text) {
  std::string digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c == ' ') continue;  // allow the grouped rendering back in
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error("invalid decimal integer: '" + std::string(text) + "'");
    }
    digits.push_back(c);
  }
  if (digits.empty()) {
    throw Error("invalid decimal integer: '" + std::string(text) + "'");
  }
  Count out;
  out.v_ = mpz_class(digits, 10);
  return out;
}

Count Count::PowerOfTen(unsigned long exponent) {
  Count out;
  out.v_ = Pow10(exponent);
  return out;
}

Count Count::PowerOfTwo(unsigned long exponent) {
  Count out;
  mpz_ui_pow_ui(out.v_.get_mpz_t(), 2, exponent);
  return out;
}

Count& Count::operator+=(const Count& o) {
  v_ += o.v_;
  return *this;
}

Count& Count::operator*=(const Count& o) {
  v_ *= o.v_;
  return *this;
}

Count& Count::operator+=(unsigned long o) {
  v_ += o;
  return *this;
}

Count& Count::operator*=(unsigned long o) {
  v_ *= o;
  return *this;
}

Count Count::FloorDiv(const Count& d) const {
  if (d.IsZero()) throw Error("division by zero");
  Count q;
  mpz_fdiv_q(q.v_.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return q;
}

std::pair<Count, Count> Count::DivMod(const Count& d) const {
  if (d.IsZero()) throw Error("division by zero");
  Count q, r;
  mpz_fdiv_qr(q.v_.get_mpz_t(), r.v_.get_mpz_t(), v_.get_mpz_t(),
              d.v_.get_mpz_t());
  return {std::move(q), std::move(r)};
}

Count Count::CeilDiv(const Count& d) const {
  if (d.IsZero()) throw Error("division by zero");
  Count q;
  mpz_cdiv_q(q.v_.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return q;
}

int Count::DecimalDigits() const {
  if (IsZero()) return 1;
  // sizeinbase may overestimate by one for base 10; correct by comparison.
  std::size_t n = mpz_sizeinbase(v_.get_mpz_t(), 10);
  if (n > 1 && v_ < Pow10(static_cast<unsigned long>(n - 1))) --n;
  return static_cast<int>(n);
}

bool Count::FitsUint64() const {
  // On LP64 an unsigned long is 64 bits, which is all we target.
  return mpz_fits_ulong_p(v_.get_mpz_t()) != 0;
}

std::uint64_t Count::AsUint64() const {
  if (!FitsUint64()) {
    throw Error("Count does not fit in 64 bits: " + ToDecimal());
  }
  return static_cast<std::uint64_t>(mpz_get_ui(v_.get_mpz_t()));
}

std::string Count::ToDecimal(bool grouped) const {
  std::string digits = v_.get_str();
  if (!grouped || digits.size() <= 3) return digits;
  std::string out;
  out.reserve(digits.size() + digits.size() / 3);
  std::size_t lead = digits.size() % 3;
  if (lead == 0) lead = 3;
  out.append(digits, 0, lead);
  for (std::size_t i = lead; i < digits.size(); i += 3) {
    out.push_back(' ');
    out.append(digits, i, 3);
  }
  return out;
}

std::string Count::ToScientific(int sig_digits) const {
  if (sig_digits < 1) throw Error("sig_digits must be >= 1");
  static const mpz_class kVerbatimBelow = 10000000;  // 10^7, as in the tables
  if (v_ < kVerbatimBelow) return ToDecimal();

  const int total = DecimalDigits();
  int exponent = total - 1;
  mpz_class mantissa;
  if (total <= sig_digits) {
    mantissa = v_;
  } else {
    const mpz_class scale = Pow10(static_cast<unsigned long>(total - sig_digits));
    mpz_class rem;
    mpz_fdiv_qr(mantissa.get_mpz_t(), rem.get_mpz_t(), v_.get_mpz_t(),
                scale.get_mpz_t());
    if (2 * rem >= scale) mantissa += 1;  // round half up
    if (mantissa == Pow10(static_cast<unsigned long>(sig_digits))) {
      // 999... rounded up a digit: renormalize.
      mantissa /= 10;
      ++exponent;
    }
  }

  std::string digits = mantissa.get_str();
  std::size_t end = digits.size();
  while (end > 1 && digits[end - 1] == '0') --end;  // trim trailing zeros
  std::string out;
  out.push_back(digits[0]);
  if (end > 1) {
    out.push_back('.');
    out.append(digits, 1, end - 1);
  }
  out.push_back('e');
  out += std::to_string(exponent);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Count& c) {
  return os << c.v_.get_str();
}

}  // namespace gtcount
