#include "erate/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace erate {

namespace {

struct NumberLine {
  std::size_t line_no;  // 1-based
  std::vector<double> fields;
};

// Splits the text into lines of strictly `arity` decimal numbers.  Blank
// lines and '#' comment lines are skipped; anything else is a ParseError
// carrying line and column.
std::vector<NumberLine> read_table(const std::string& text, const std::string& origin,
                                   std::size_t arity) {
  std::vector<NumberLine> rows;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;

    NumberLine row;
    row.line_no = line_no;
    while (pos != std::string::npos) {
      std::size_t end = line.find_first_of(" \t\r", pos);
      const std::string token = line.substr(pos, end == std::string::npos ? end : end - pos);
      double value = 0.0;
      const auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(origin + ":" + std::to_string(line_no) + ":" +
                         std::to_string(pos + 1) + ": expected a decimal number, got '" +
                         token + "'");
      row.fields.push_back(value);
      pos = line.find_first_not_of(" \t\r", end);
    }
    if (row.fields.size() != arity)
      throw ParseError(origin + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(arity) + " columns, got " +
                       std::to_string(row.fields.size()));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

RiemannData parse_riemann_text(const std::string& text, const std::string& origin) {
  const std::vector<NumberLine> rows = read_table(text, origin, 4);
  if (rows.size() != 2)
    throw ParseError(origin + ": expected exactly two data lines 'rho v1 v2 p', got " +
                     std::to_string(rows.size()));
  auto to_state = [&](const NumberLine& row) {
    GasState s{row.fields[0], row.fields[1], row.fields[2], row.fields[3]};
    try {
      validate(s);
    } catch (const InputError& e) {
      throw ParseError(origin + ":" + std::to_string(row.line_no) + ": " + e.what());
    }
    return s;
  };
  return RiemannData{to_state(rows[0]), to_state(rows[1])};
}

RiemannData parse_riemann_file(const std::string& path) {
  return parse_riemann_text(read_file(path), path);
}

PartitionSpec parse_partition_text(const std::string& text, const std::string& origin) {
  const std::vector<NumberLine> rows = read_table(text, origin, 3);
  if (rows.empty()) throw ParseError(origin + ": partition file has no cells");
  PartitionSpec partition;
  for (const NumberLine& row : rows)
    partition.cells.push_back(Cell{row.fields[0], row.fields[1], row.fields[2]});
  try {
    validate(partition);
  } catch (const InputError& e) {
    throw ParseError(origin + ": " + e.what());
  }
  return partition;
}

PartitionSpec parse_partition_file(const std::string& path) {
  return parse_partition_text(read_file(path), path);
}

EntropyProfile parse_profile_text(const std::string& text, const std::string& origin) {
  const std::vector<NumberLine> rows = read_table(text, origin, 2);
  if (rows.empty())
    throw ParseError(origin + ": profile file needs a leading 'delta T' line");
  EntropyProfile profile;
  profile.delta = rows[0].fields[0];
  profile.T = rows[0].fields[1];
  for (std::size_t i = 1; i < rows.size(); ++i) {
    profile.breakpoints.push_back(rows[i].fields[0]);
    profile.values.push_back(rows[i].fields[1]);
  }
  return profile;
}

EntropyProfile parse_profile_file(const std::string& path) {
  return parse_profile_text(read_file(path), path);
}

RiemannData paper_riemann_data() {
  return RiemannData{GasState{1.0, 0.0, 0.0, 2.0}, GasState{10.0, 0.0, -100.0, 1.0}};
}

} // namespace erate
