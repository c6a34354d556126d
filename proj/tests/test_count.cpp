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

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "support/decimal_oracle.hpp"

namespace gtcount {
namespace {

using testsupport::AddDecimal;
using testsupport::CompareDecimal;
using testsupport::MulDecimal;
using testsupport::ScientificDecimal;

// The 2009 game's canonical infoset-action total; reused in several tests.
const char kCanonIA2009[] =
    "180091019297791288982204479657796281550065385037";

TEST(Count, AdditiveIdentity) {
  Count x = Count::FromDecimal("123456789123456789123456789");
  EXPECT_EQ(Count() + x, x);
  EXPECT_EQ(Count(1326ul) + Count(), Count(1326ul));
}

TEST(Count, CarryAcrossEightyDigits) {
  std::string nines(80, '9');
  Count x = Count::FromDecimal(nines) + Count(1ul);
  EXPECT_EQ(x, Count::PowerOfTen(80));
  EXPECT_EQ(x.ToDecimal(), "1" + std::string(80, '0'));
}

TEST(Count, MultiplicativeIdentityAndTableCell) {
  EXPECT_EQ(Count(1326ul) * Count(8ul), Count(10608ul));
  Count x = Count::FromDecimal(kCanonIA2009);
  EXPECT_EQ(x * Count(1ul), x);
}

TEST(Count, LongMultiplicationAgainstSchoolbook) {
  // River terminal game states of the limit game: sequences x deals.
  Count prod = Count(9639ul) * Count::FromDecimal("55627620048000");
  EXPECT_EQ(prod.ToDecimal(), MulDecimal("9639", "55627620048000"));
  EXPECT_EQ(prod.ToDecimal(), "536194629642672000");
  EXPECT_EQ(prod.ToScientific(4), "5.362e17");
}

TEST(Count, FloorDivBasics) {
  EXPECT_EQ(Count(7ul).FloorDiv(Count(2ul)), Count(3ul));
  EXPECT_EQ(Count().FloorDiv(Count(17ul)), Count());
  EXPECT_THROW(Count(1ul).FloorDiv(Count()), Error);
}

TEST(Count, FloorAndCeilAtYottaScale) {
  // CFR memory of the 2009 game in binary yottabytes: the division is not
  // exact, so floor and ceil straddle the published figure (which rounds up,
  // as memory requirements do).
  Count bytes = Count::FromDecimal(kCanonIA2009) * Count(16ul);
  Count yotta = Count::PowerOfTwo(80);
  EXPECT_EQ(bytes.FloorDiv(yotta).ToDecimal(), "2383484794528738021376772");
  EXPECT_EQ(bytes.CeilDiv(yotta).ToDecimal(), "2383484794528738021376773");
  auto [q, r] = bytes.DivMod(yotta);
  EXPECT_EQ(q, bytes.FloorDiv(yotta));
  EXPECT_FALSE(r.IsZero());
}

TEST(Count, RenderDecimal) {
  EXPECT_EQ(Count().ToDecimal(), "0");
  EXPECT_EQ(Count::FromDecimal("319365922522608").ToDecimal(),
            "319365922522608");
  EXPECT_EQ(Count::FromDecimal("319365922522608").ToDecimal(true),
            "319 365 922 522 608");
  EXPECT_EQ(Count(999ul).ToDecimal(true), "999");
  EXPECT_EQ(Count(1000ul).ToDecimal(true), "1 000");
}

TEST(Count, DecimalRoundTrip) {
  const char kInfosets2009[] =
      "1389094358906842392181537788403345780331801813952";
  Count x = Count::FromDecimal(kInfosets2009);
  EXPECT_EQ(Count::FromDecimal(x.ToDecimal()), x);
  EXPECT_EQ(Count::FromDecimal(x.ToDecimal(true)), x);  // grouped form parses
  EXPECT_EQ(x.ToDecimal(), kInfosets2009);
}

TEST(Count, FromDecimalRejectsJunk) {
  EXPECT_THROW(Count::FromDecimal(""), Error);
  EXPECT_THROW(Count::FromDecimal("12a"), Error);
  EXPECT_THROW(Count::FromDecimal("-5"), Error);
  EXPECT_THROW(Count::FromDecimal("+5"), Error);
  EXPECT_THROW(Count::FromDecimal("1.5"), Error);
}

TEST(Count, RenderScientific) {
  EXPECT_EQ(Count::FromDecimal("85466500000000000000000000000000")
                .ToScientific(6),
            "8.54665e31");
  // Trailing zeros after rounding are trimmed, as in the tables.
  Count preflop_actions_2007 =
      Count::FromDecimal("2564") * Count::PowerOfTen(29);
  EXPECT_EQ(preflop_actions_2007.ToScientific(6), "2.564e32");
  EXPECT_EQ(Count(9ul).ToScientific(6), "9");
  EXPECT_EQ(Count(9999999ul).ToScientific(6), "9999999");   // < 10^7 verbatim
  EXPECT_EQ(Count(10000000ul).ToScientific(6), "1e7");
  EXPECT_EQ(Count(12994800ul).ToScientific(4), "1.299e7");
  EXPECT_EQ(Count::FromDecimal("13803251076132").ToScientific(4), "1.38e13");
  EXPECT_EQ(Count::FromDecimal("325553418360").ToScientific(6), "3.25553e11");
  // Rounding carries across all-nines mantissas.
  EXPECT_EQ(Count::FromDecimal("99999995000000").ToScientific(6), "1e14");
  EXPECT_THROW(Count(1ul).ToScientific(0), Error);
}

std::string RandomDigits(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  const int len = len_dist(rng);
  std::uniform_int_distribution<int> digit(0, 9);
  std::uniform_int_distribution<int> lead(1, 9);
  std::string s;
  s.push_back(static_cast<char>('0' + lead(rng)));
  for (int i = 1; i < len; ++i) {
    s.push_back(static_cast<char>('0' + digit(rng)));
  }
  return s;
}

TEST(CountProperty, AddMulAgreeWithSchoolbookOracle) {
  std::mt19937_64 rng(20130219);
  for (int iter = 0; iter < 500; ++iter) {
    const std::string sa = RandomDigits(rng, 200);
    const std::string sb = RandomDigits(rng, 200);
    const std::string sc = RandomDigits(rng, 60);
    Count a = Count::FromDecimal(sa);
    Count b = Count::FromDecimal(sb);
    Count c = Count::FromDecimal(sc);

    EXPECT_EQ((a + b).ToDecimal(), AddDecimal(sa, sb));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));

    EXPECT_EQ((a * b).ToDecimal(), MulDecimal(sa, sb));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));

    EXPECT_EQ(CompareDecimal(sa, sb) < 0, a < b);
  }
}

TEST(CountProperty, DivModReconstructs) {
  std::mt19937_64 rng(62913);
  for (int iter = 0; iter < 500; ++iter) {
    Count x = Count::FromDecimal(RandomDigits(rng, 120));
    Count d = Count::FromDecimal(RandomDigits(rng, 40));
    auto [q, r] = x.DivMod(d);
    EXPECT_EQ(d * q + r, x);
    EXPECT_LT(r, d);
  }
}

TEST(CountProperty, ScientificAgreesWithStringOracle) {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 10000; ++iter) {
    const std::string s = RandomDigits(rng, 60);
    Count x = Count::FromDecimal(s);
    EXPECT_EQ(x.ToScientific(6), ScientificDecimal(s, 6)) << s;
  }
}

}  // namespace
}  // namespace gtcount
