#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "susynu/app/config.hpp"

namespace susynu::app {

using Cell = std::variant<std::int64_t, double, std::string, std::vector<double>>;

/// Column-ordered records. CSV renders numbers with %.17g and joins vector
/// cells with ';'. JSON emits {"meta": {...}, "records": [{column: value}]}.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::map<std::string, std::string> meta;

  void add(std::vector<Cell> row);
  void write(std::ostream& os, Format f) const;
  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;
};

std::string format_number(double x);

/// Writes to `path`, or to `fallback` when the path is empty.
void emit(const Table& t, Format f, const std::string& path, std::ostream& fallback);

}  // namespace susynu::app
