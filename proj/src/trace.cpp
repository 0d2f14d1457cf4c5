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

#include "eonplan/trace.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <tuple>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "eonplan/csv.hpp"
#include "eonplan/error.hpp"

namespace eonplan {
namespace {

std::int64_t DaysFromCivil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

int Field(std::string_view s, std::size_t pos, std::size_t len,
          std::string_view whole) {
  auto part = s.substr(pos, len);
  if (part.size() != len || !AllDigits(part)) {
    throw ParseError("bad timestamp '" + std::string(whole) + "'");
  }
  return static_cast<int>(csv::ParseInt(part, "timestamp"));
}

std::int64_t CivilSeconds(int y, int mo, int d, int h, int mi, int s,
                          std::string_view whole) {
  if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || s > 60) {
    throw ParseError("bad timestamp '" + std::string(whole) + "'");
  }
  return DaysFromCivil(y, static_cast<unsigned>(mo), static_cast<unsigned>(d)) *
             86400 +
         h * 3600 + mi * 60 + s;
}

// One demand cell before aggregation.
struct Cell {
  std::int64_t time_s;
  std::string src;
  std::string dst;
  double gbps;
  std::string where;
};

TraceSet Aggregate(std::vector<Cell> cells, std::string_view name) {
  if (cells.empty()) {
    throw ParseError(std::string(name) + ": no demand records");
  }
  std::set<std::tuple<std::int64_t, std::string, std::string>> seen;
  std::set<std::int64_t> times;
  std::set<std::string> sources;
  for (const auto& c : cells) {
    if (!std::isfinite(c.gbps) || c.gbps < 0.0) {
      throw ValidationError(c.where + ": bit-rate must be a non-negative "
                            "finite number, got " +
                            csv::FormatDouble(c.gbps));
    }
    if (!seen.emplace(c.time_s, c.src, c.dst).second) {
      throw ValidationError(c.where + ": duplicate demand " + c.src + "->" +
                            c.dst);
    }
    times.insert(c.time_s);
    if (c.src != c.dst) sources.insert(c.src);
  }

  const std::vector<std::int64_t> axis(times.begin(), times.end());
  std::int64_t step = 300;
  if (axis.size() >= 2) {
    step = axis[1] - axis[0];
    for (std::size_t i = 2; i < axis.size(); ++i) {
      if (axis[i] - axis[i - 1] != step) {
        throw ValidationError(std::string(name) +
                              ": non-uniform timestamps (gap of " +
                              std::to_string(axis[i] - axis[i - 1]) +
                              " s after " + std::to_string(step) +
                              " s spacing)");
      }
    }
  }

  // Sum destinations in id order so the result does not depend on row order.
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.src, a.time_s, a.dst) < std::tie(b.src, b.time_s, b.dst);
  });

  TraceSet out;
  for (const auto& src : sources) {
    TrafficTrace& t = out[src];
    t.source_id = src;
    t.samples.assign(axis.size(), 0.0);
    t.base_period_min = static_cast<double>(step) / 60.0;
    t.start_time_s = axis.front();
  }
  for (const auto& c : cells) {
    if (c.src == c.dst) continue;
    const auto idx = static_cast<std::size_t>(
        std::lower_bound(axis.begin(), axis.end(), c.time_s) - axis.begin());
    out[c.src].samples[idx] += c.gbps;
  }
  return out;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

TraceFormat ParseTraceFormat(std::string_view name) {
  const auto n = Lower(name);
  if (n == "csv") return TraceFormat::kCsv;
  if (n == "sndlib-xml" || n == "xml" || n == "sndlib") {
    return TraceFormat::kSndlibXml;
  }
  throw ConfigError("unknown trace format '" + std::string(name) +
                    "' (expected csv or sndlib-xml)");
}

std::int64_t ParseTimestamp(std::string_view text) {
  text = csv::Trim(text);
  if (AllDigits(text)) {
    return csv::ParseInt(text, "timestamp");
  }
  // SNDlib: 20040301-0005
  if (text.size() == 13 && text[8] == '-') {
    return CivilSeconds(Field(text, 0, 4, text), Field(text, 4, 2, text),
                        Field(text, 6, 2, text), Field(text, 9, 2, text),
                        Field(text, 11, 2, text), 0, text);
  }
  // ISO-8601: 2004-03-01T00:05[:00][Z]
  if (text.size() >= 16 && text[4] == '-' && text[7] == '-' &&
      (text[10] == 'T' || text[10] == ' ') && text[13] == ':') {
    int sec = 0;
    std::string_view rest = text.substr(16);
    if (!rest.empty() && rest.back() == 'Z') rest.remove_suffix(1);
    if (!rest.empty()) {
      if (rest.size() != 3 || rest[0] != ':') {
        throw ParseError("bad timestamp '" + std::string(text) + "'");
      }
      sec = Field(rest, 1, 2, text);
    }
    return CivilSeconds(Field(text, 0, 4, text), Field(text, 5, 2, text),
                        Field(text, 8, 2, text), Field(text, 11, 2, text),
                        Field(text, 14, 2, text), sec, text);
  }
  throw ParseError("bad timestamp '" + std::string(text) + "'");
}

TraceSet ParseTraceCsv(std::istream& in, std::string_view name) {
  csv::Reader reader(in);
  std::vector<std::string> row;
  if (!reader.Next(row)) {
    throw ParseError(std::string(name) + ": empty file (header required)");
  }
  int col_t = -1, col_src = -1, col_dst = -1, col_val = -1;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const auto h = Lower(csv::Trim(row[i]));
    const int idx = static_cast<int>(i);
    if (h == "timestamp") col_t = idx;
    else if (h == "src") col_src = idx;
    else if (h == "dst") col_dst = idx;
    else if (h == "gbps") col_val = idx;
  }
  if (col_t < 0 || col_src < 0 || col_dst < 0 || col_val < 0) {
    throw ParseError(std::string(name) +
                     " line 1: header must name timestamp,src,dst,gbps");
  }
  const std::size_t width = row.size();

  std::vector<Cell> cells;
  while (reader.Next(row)) {
    const std::string where =
        std::string(name) + " line " + std::to_string(reader.line());
    if (row.size() != width) {
      throw ParseError(where + ": expected " + std::to_string(width) +
                       " fields, got " + std::to_string(row.size()));
    }
    Cell c;
    try {
      c.time_s = ParseTimestamp(row[col_t]);
      c.gbps = csv::ParseDouble(row[col_val], "gbps");
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
    c.src = std::string(csv::Trim(row[col_src]));
    c.dst = std::string(csv::Trim(row[col_dst]));
    if (c.src.empty() || c.dst.empty()) {
      throw ParseError(where + ": empty node id");
    }
    c.where = where;
    cells.push_back(std::move(c));
  }
  if (cells.empty()) {
    throw ParseError(std::string(name) + ": no data rows after header");
  }
  return Aggregate(std::move(cells), name);
}

namespace {

namespace pt = boost::property_tree;

void ParseSndlibMatrix(const std::filesystem::path& file,
                       std::vector<Cell>& cells) {
  pt::ptree tree;
  try {
    pt::read_xml(file.string(), tree);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError(file.string() + " line " + std::to_string(e.line()) +
                     ": " + e.message());
  }
  const auto network = tree.get_child_optional("network");
  if (!network) throw ParseError(file.string() + ": missing <network>");
  const auto time = network->get_optional<std::string>("meta.time");
  if (!time) throw ParseError(file.string() + ": missing <meta><time>");
  std::int64_t time_s = 0;
  try {
    time_s = ParseTimestamp(*time);
  } catch (const ParseError& e) {
    throw ParseError(file.string() + " <meta><time>: " + e.what());
  }
  double unit_to_gbps = 1.0;
  if (auto unit = network->get_optional<std::string>("meta.unit")) {
    const auto u = Lower(csv::Trim(*unit));
    if (u == "mbitpersec" || u == "mbps") unit_to_gbps = 1e-3;
    else if (u == "kbitpersec" || u == "kbps") unit_to_gbps = 1e-6;
    else if (u != "gbitpersec" && u != "gbps") {
      throw ParseError(file.string() + " <meta><unit>: unknown unit '" +
                       *unit + "'");
    }
  }
  const auto demands = network->get_child_optional("demands");
  if (!demands) throw ParseError(file.string() + ": missing <demands>");
  std::size_t index = 0;
  for (const auto& [tag, demand] : *demands) {
    if (tag != "demand") continue;
    const std::string where = file.string() + " <demand> #" +
                              std::to_string(index++) + " (id=" +
                              demand.get<std::string>("<xmlattr>.id", "?") +
                              ")";
    const auto src = demand.get_optional<std::string>("source");
    const auto dst = demand.get_optional<std::string>("target");
    const auto val = demand.get_optional<std::string>("demandValue");
    if (!src || !dst || !val) {
      throw ParseError(where + ": needs <source>, <target> and <demandValue>");
    }
    Cell c;
    c.time_s = time_s;
    c.src = std::string(csv::Trim(*src));
    c.dst = std::string(csv::Trim(*dst));
    try {
      c.gbps = csv::ParseDouble(*val, "demandValue") * unit_to_gbps;
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
    c.where = where;
    cells.push_back(std::move(c));
  }
}

}  // namespace

TraceSet ParseSndlibTraffic(const std::filesystem::path& path) {
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(path)) {
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".xml") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
      throw ParseError(path.string() + ": directory holds no .xml matrices");
    }
  } else {
    files.push_back(path);
  }
  std::vector<Cell> cells;
  for (const auto& f : files) ParseSndlibMatrix(f, cells);
  return Aggregate(std::move(cells), path.string());
}

TraceSet ParseTraceFile(const std::filesystem::path& path, TraceFormat format) {
  if (!std::filesystem::exists(path)) {
    throw ConfigError("trace file not found: " + path.string());
  }
  if (format == TraceFormat::kSndlibXml) return ParseSndlibTraffic(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open trace file: " + path.string());
  return ParseTraceCsv(in, path.string());
}

TrafficTrace Slice(const TrafficTrace& trace, std::size_t first,
                   std::size_t count) {
  if (first > trace.size() || count > trace.size() - first) {
    throw IndexError("slice [" + std::to_string(first) + ", +" +
                     std::to_string(count) + ") out of range for trace of " +
                     std::to_string(trace.size()) + " samples");
  }
  TrafficTrace out;
  out.source_id = trace.source_id;
  out.base_period_min = trace.base_period_min;
  out.start_time_s =
      trace.start_time_s +
      static_cast<std::int64_t>(std::llround(trace.base_period_min * 60.0)) *
          static_cast<std::int64_t>(first);
  out.samples.assign(trace.samples.begin() + static_cast<std::ptrdiff_t>(first),
                     trace.samples.begin() +
                         static_cast<std::ptrdiff_t>(first + count));
  return out;
}

void WriteTraceCsv(std::ostream& out, const TraceSet& traces,
                   std::string_view sink_id) {
  out << "timestamp,src,dst,gbps\n";
  for (const auto& [id, trace] : traces) {
    const auto step =
        static_cast<std::int64_t>(std::llround(trace.base_period_min * 60.0));
    for (std::size_t i = 0; i < trace.size(); ++i) {
      out << trace.start_time_s + step * static_cast<std::int64_t>(i) << ','
          << csv::Escape(id) << ',' << csv::Escape(sink_id) << ','
          << csv::FormatDouble(trace.samples[i]) << '\n';
    }
  }
}

void ValidateTrace(const TrafficTrace& trace) {
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const double v = trace.samples[i];
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError("trace " + trace.source_id + " sample " +
                            std::to_string(i) +
                            ": bit-rate must be non-negative and finite");
    }
  }
  if (!(trace.base_period_min > 0.0)) {
    throw ValidationError("trace " + trace.source_id +
                          ": base period must be positive");
  }
}

}  // namespace eonplan
