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

#include "eonplan/csv.hpp"

#include <charconv>
#include <system_error>

#include "eonplan/error.hpp"

namespace eonplan::csv {

bool Reader::Next(std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool in_quotes = false;
  bool any_char = false;
  bool field_was_quoted = false;
  record_line_ = current_line_;

  auto end_record = [&]() {
    fields.push_back(std::move(field));
    field.clear();
  };

  for (int c = in_.get(); c != std::char_traits<char>::eof(); c = in_.get()) {
    const char ch = static_cast<char>(c);
    if (in_quotes) {
      if (ch == '"') {
        if (in_.peek() == '"') {
          in_.get();
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (ch == '\n') ++current_line_;
        field.push_back(ch);
      }
      continue;
    }
    switch (ch) {
      case '"':
        if (!field.empty() || field_was_quoted) {
          throw ParseError("csv line " + std::to_string(current_line_) +
                           ": stray quote inside unquoted field");
        }
        in_quotes = true;
        field_was_quoted = true;
        any_char = true;
        break;
      case ',':
        fields.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
        any_char = true;
        break;
      case '\r':
        break;
      case '\n':
        ++current_line_;
        if (!any_char) {
          // Blank line.
          record_line_ = current_line_;
          break;
        }
        end_record();
        return true;
      default:
        field.push_back(ch);
        any_char = true;
        break;
    }
  }
  if (in_quotes) {
    throw ParseError("csv line " + std::to_string(record_line_) +
                     ": unterminated quoted field");
  }
  if (!any_char) return false;
  end_record();
  return true;
}

std::string Escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::string JoinRow(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += Escape(fields[i]);
  }
  return out;
}

std::string FormatDouble(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string_view Trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

double ParseDouble(std::string_view text, std::string_view context) {
  text = Trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() ||
      res.ptr != text.data() + text.size()) {
    throw ParseError(std::string(context) + ": not a number: '" +
                     std::string(text) + "'");
  }
  return value;
}

long long ParseInt(std::string_view text, std::string_view context) {
  text = Trim(text);
  long long value = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() ||
      res.ptr != text.data() + text.size()) {
    throw ParseError(std::string(context) + ": not an integer: '" +
                     std::string(text) + "'");
  }
  return value;
}

}  // namespace eonplan::csv
