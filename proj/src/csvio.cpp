#include "csvio.hpp"

#include <fstream>
#include <sstream>

#include "common.hpp"

namespace fb::csv {

int Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

Table read_file(const std::filesystem::path& path, bool has_header) {
  std::ifstream in(path);
  if (!in) raise_io("cannot open CSV: " + path.string());
  Table t;
  std::string line;
  bool header_pending = has_header;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto fields = split_line(line);
    if (header_pending) {
      t.header = std::move(fields);
      header_pending = false;
    } else {
      t.rows.push_back(std::move(fields));
    }
  }
  return t;
}

std::string join_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += fields[i];
  }
  return out;
}

Writer::Writer(std::vector<std::string> header) : header_(std::move(header)) {}

void Writer::add_row(std::vector<std::string> fields) { rows_.push_back(std::move(fields)); }

std::string Writer::to_string() const {
  std::ostringstream out;
  out << join_line(header_) << '\n';
  for (const auto& r : rows_) out << join_line(r) << '\n';
  return out.str();
}

void Writer::save(const std::filesystem::path& path) const { write_text_file(path, to_string()); }

}  // namespace fb::csv
