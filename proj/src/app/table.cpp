#include "susynu/app/table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "susynu/error.hpp"

namespace susynu::app {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string render(const Cell& c) {
  struct V {
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return format_number(d); }
    std::string operator()(const std::string& s) const { return csv_field(s); }
    std::string operator()(const std::vector<double>& v) const {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        out += format_number(v[i]);
      }
      return out;
    }
  };
  return std::visit(V{}, c);
}

nlohmann::ordered_json number_json(double d) {
  if (std::isfinite(d)) return d;
  return format_number(d);
}

nlohmann::ordered_json to_json(const Cell& c) {
  struct V {
    nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
    nlohmann::ordered_json operator()(double d) const { return number_json(d); }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(const std::vector<double>& v) const {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (double d : v) a.push_back(number_json(d));
      return a;
    }
  };
  return std::visit(V{}, c);
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw Error(ErrorCode::LengthMismatch, "row width differs from the header");
  rows.push_back(std::move(row));
}

void Table::write_csv(std::ostream& os) const {
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << render(row[i]);
    os << '\n';
  }
}

void Table::write_json(std::ostream& os) const {
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta) doc["meta"][k] = v;
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json rec;
    for (std::size_t i = 0; i < row.size(); ++i) rec[columns[i]] = to_json(row[i]);
    doc["records"].push_back(std::move(rec));
  }
  os << doc.dump(2) << '\n';
}

void Table::write(std::ostream& os, Format f) const {
  if (f == Format::Json)
    write_json(os);
  else
    write_csv(os);
}

void emit(const Table& t, Format f, const std::string& path, std::ostream& fallback) {
  if (path.empty()) {
    t.write(fallback, f);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file '" + path + "'");
  t.write(file, f);
}

}  // namespace susynu::app
