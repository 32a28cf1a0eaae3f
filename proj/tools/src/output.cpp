#include "cyclav/cli/output.hpp"

#include <algorithm>

#include "cyclav/error.hpp"

namespace cyclav::cli {
namespace {

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "table") return Format::Table;
  throw InvalidArgument("unknown format '" + text + "' (expected json, csv or table)");
}

void Emitter::write_csv_row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << csv_escape(cells[i]);
  }
  out_ << '\n';
}

void Emitter::emit(const Json& doc, const Table& table) {
  switch (format_) {
    case Format::Json:
      out_ << doc.dump(2) << '\n';
      return;
    case Format::Csv:
      write_csv_row(table.columns);
      for (const auto& row : table.rows) write_csv_row(row);
      return;
    case Format::Table: {
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t c = 0; c < width.size(); ++c) width[c] = table.columns[c].size();
      for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t c = 0; c < cells.size(); ++c) {
          std::string cell = cells[c];
          if (c + 1 < cells.size()) cell.resize(std::max(cell.size(), width[c]), ' ');
          text += (c ? "  " : "") + cell;
        }
        out_ << text << '\n';
      };
      line(table.columns);
      for (const auto& row : table.rows) line(row);
      return;
    }
  }
}

// Streamed tables cannot know their widths up front, so columns are padded
// to a fixed minimum and separated by two spaces.
void Emitter::write_stream_line(const std::vector<std::string>& cells) {
  if (format_ == Format::Csv) {
    write_csv_row(cells);
    return;
  }
  std::string text;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::string cell = cells[c];
    if (c + 1 < cells.size()) cell.resize(std::max<std::size_t>(cell.size(), kStreamWidth), ' ');
    text += (c ? "  " : "") + cell;
  }
  out_ << text << '\n';
}

void Emitter::begin_stream(const std::vector<std::string>& columns) {
  stream_columns_ = columns;
  if (format_ != Format::Json) write_stream_line(columns);
  out_.flush();
}

void Emitter::stream_row(const Json& obj, const std::vector<std::string>& cells) {
  if (format_ == Format::Json) {
    out_ << obj.dump() << '\n';
  } else {
    write_stream_line(cells);
  }
  out_.flush();
}

void Emitter::end_stream(const Json& summary) {
  if (format_ == Format::Json) {
    out_ << summary.dump() << '\n';
  } else {
    // Comment lines keep the row block rectangular for CSV readers.
    for (const auto& [key, value] : summary.items()) {
      if (key == "type") continue;
      out_ << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
  out_.flush();
}

}  // namespace cyclav::cli
