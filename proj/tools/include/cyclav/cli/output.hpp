#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cyclav/cli/report.hpp"

namespace cyclav::cli {

enum class Format { Json, Csv, Table };
Format parse_format(const std::string& text);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// Writes one result in the selected format. JSON gets the document; CSV
// and table get the flattened rows.
class Emitter {
 public:
  Emitter(Format format, std::ostream& out) : format_(format), out_(out) {}

  void emit(const Json& doc, const Table& table);

  // Streaming: a header, then rows as they become final. JSON emits one
  // compact object per line.
  void begin_stream(const std::vector<std::string>& columns);
  void stream_row(const Json& obj, const std::vector<std::string>& cells);
  void end_stream(const Json& summary);

  Format format() const { return format_; }

 private:
  void write_csv_row(const std::vector<std::string>& cells);

  Format format_;
  std::ostream& out_;
  std::vector<std::string> stream_columns_;

  static constexpr std::size_t kStreamWidth = 12;
  void write_stream_line(const std::vector<std::string>& cells);
};

}  // namespace cyclav::cli
