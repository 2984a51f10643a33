/*
   Copyright 2026 The cyclorep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCLOREP_CLI_HPP
#define CYCLOREP_CLI_HPP

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace cyclorep::cli {

enum ExitCode : int {
    kOk = 0,
    kIoError = 1,
    kUsage = 2,
    kParse = 3,
    kDomain = 4,
};

struct TableRow {
    std::string label;
    std::vector<std::pair<std::string, std::variant<std::uint64_t, std::string>>> columns;
};

/// Table 1: height records up to k_max, heights >= 2.
std::vector<TableRow> table1(std::int64_t k_max);
/// Table 2 for x^n - 1 and table 3 for (x^p - 1)(x^q - 1).
std::vector<TableRow> table2(std::uint64_t n, unsigned N, unsigned K);
std::vector<TableRow> table3(std::uint64_t p, std::uint64_t q, unsigned N, unsigned K);

/// Aligned text, or comma-separated with a header line.
std::string render(const std::vector<TableRow>& rows, bool csv);

/// argv without the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclorep::cli

#endif  // CYCLOREP_CLI_HPP
