// Copyright 2026 The eonplan Authors
//
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

#ifndef EONPLAN_CSV_HPP_
#define EONPLAN_CSV_HPP_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace eonplan::csv {

// Streaming RFC-4180 reader: quoted fields may contain commas, doubled quotes
// and line breaks. Both LF and CRLF record terminators are accepted.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Reads the next record into `fields`. Returns false at end of input.
  // Blank lines are skipped. Throws ParseError on an unterminated quote.
  bool Next(std::vector<std::string>& fields);

  // 1-based line on which the most recently returned record started.
  std::size_t line() const { return record_line_; }

 private:
  std::istream& in_;
  std::size_t current_line_ = 1;
  std::size_t record_line_ = 0;
};

// Quotes a field when it contains a comma, quote or line break.
std::string Escape(std::string_view field);

std::string JoinRow(const std::vector<std::string>& fields);

// Shortest decimal representation that parses back to the same double.
std::string FormatDouble(double value);

// Strict parse of a whole field; `context` is used in the error message.
double ParseDouble(std::string_view text, std::string_view context);
long long ParseInt(std::string_view text, std::string_view context);

std::string_view Trim(std::string_view text);

}  // namespace eonplan::csv

#endif  // EONPLAN_CSV_HPP_
