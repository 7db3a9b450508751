#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace hgrav::report {

/// A table cell. monostate is written as an empty CSV field or JSON null.
using Value = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;

  /// Throws InvalidArgument when the row width differs from the column count.
  void add_row(std::vector<Value> row);
};

enum class Format { csv, json };

/// Shortest decimal that reads back to the same double. Non-finite values are
/// written as "inf", "-inf" and "nan" in CSV and as null in JSON.
[[nodiscard]] std::string format_double(double value);

/// CSV with a header line, RFC-4180 quoting and LF endings, or a JSON array
/// with one object per row, keys in column order. Throws ResourceError if the
/// stream fails.
void emit_table(const Table& table, Format format, std::ostream& sink);

}  // namespace hgrav::report
