#include "hgrav/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "hgrav/error.hpp"

namespace hgrav::report {

namespace {

void write_csv_field(std::ostream& out, const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) {
    out << text;
    return;
  }
  out << '"';
  for (char c : text) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

void write_json_string(std::ostream& out, const std::string& text) {
  out << '"';
  for (unsigned char c : text) {
    switch (c) {
      case '"': out << "\\\""; break;
      case '\\': out << "\\\\"; break;
      case '\n': out << "\\n"; break;
      case '\r': out << "\\r"; break;
      case '\t': out << "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out << buf;
        } else {
          out << c;
        }
    }
  }
  out << '"';
}

std::string cell_text(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) return {};
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(x);
        else if constexpr (std::is_same_v<T, double>) return format_double(x);
        else return x;
      },
      v);
}

void write_json_value(std::ostream& out, const Value& v) {
  if (std::holds_alternative<std::monostate>(v)) {
    out << "null";
  } else if (const auto* s = std::get_if<std::string>(&v)) {
    write_json_string(out, *s);
  } else if (const auto* d = std::get_if<double>(&v); d != nullptr && !std::isfinite(*d)) {
    out << "null";
  } else {
    out << cell_text(v);
  }
}

}  // namespace

void Table::add_row(std::vector<Value> row) {
  if (row.size() != columns.size()) {
    throw InvalidArgument("table: row has " + std::to_string(row.size()) + " cells, expected " +
                          std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

void emit_table(const Table& table, Format format, std::ostream& sink) {
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw InvalidArgument("table: ragged rows");
  }
  if (format == Format::csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) sink << ',';
      write_csv_field(sink, table.columns[c]);
    }
    sink << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) sink << ',';
        write_csv_field(sink, cell_text(row[c]));
      }
      sink << '\n';
    }
  } else {
    sink << '[';
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      sink << (r ? ",\n  {" : "\n  {");
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) sink << ", ";
        write_json_string(sink, table.columns[c]);
        sink << ": ";
        write_json_value(sink, table.rows[r][c]);
      }
      sink << '}';
    }
    sink << (table.rows.empty() ? "]\n" : "\n]\n");
  }
  sink.flush();
  if (!sink) throw ResourceError("emit_table: write to output failed");
}

}  // namespace hgrav::report
