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

// Schoolbook decimal-string arithmetic, deliberately independent of the
// library's GMP-backed Count so the two can check each other. Test-only.

#ifndef GTCOUNT_TESTS_SUPPORT_DECIMAL_ORACLE_HPP_
#define GTCOUNT_TESTS_SUPPORT_DECIMAL_ORACLE_HPP_

#include <string>

namespace gtcount::testsupport {

// Column addition of two nonnegative decimal strings.
std::string AddDecimal(const std::string& a, const std::string& b);

// Long multiplication of two nonnegative decimal strings.
std::string MulDecimal(const std::string& a, const std::string& b);

// -1, 0, +1 as a < b, a == b, a > b numerically.
int CompareDecimal(const std::string& a, const std::string& b);

// Reference scientific renderer working purely on the digit string:
// round-half-up at sig significant digits, trailing zeros trimmed, values
// below 10^7 returned verbatim.
std::string ScientificDecimal(const std::string& a, int sig);

}  // namespace gtcount::testsupport

#endif  // GTCOUNT_TESTS_SUPPORT_DECIMAL_ORACLE_HPP_
