#ifndef FB_CSVIO_HPP
#define FB_CSVIO_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace fb::csv {

struct Table {
  std::vector<std::string> header;  // empty when the file has no header row
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 when absent
};

std::vector<std::string> split_line(const std::string& line);

// has_header controls whether the first non-empty line is treated as a header.
Table read_file(const std::filesystem::path& path, bool has_header);

std::string join_line(const std::vector<std::string>& fields);

class Writer {
 public:
  explicit Writer(std::vector<std::string> header);
  void add_row(std::vector<std::string> fields);
  void save(const std::filesystem::path& path) const;
  std::string to_string() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace fb::csv

#endif
