#ifndef FB_COMMON_HPP
#define FB_COMMON_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fb {

// Status codes shared with the C API (values must stay in sync with
// fb_status in include/faultbench.h).
enum class Status : int {
  ok = 0,
  io_error = 1,
  config_error = 2,
  partial = 3,
  parse_error = 4,
  invalid_argument = 5,
  internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(Status code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Status code() const { return code_; }

 private:
  Status code_;
};

[[noreturn]] inline void raise_io(const std::string& msg) { throw Error(Status::io_error, msg); }
[[noreturn]] inline void raise_parse(const std::string& msg) { throw Error(Status::parse_error, msg); }
[[noreturn]] inline void raise_config(const std::string& msg) { throw Error(Status::config_error, msg); }
[[noreturn]] inline void raise_invalid(const std::string& msg) { throw Error(Status::invalid_argument, msg); }

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

// FNV-1a over bytes, used for config fingerprints.
std::uint64_t fnv1a64(const std::string& bytes);
std::string to_hex(std::uint64_t v);

// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);
// Strict double parse; the whole token must be consumed.
bool parse_double(const std::string& token, double& out);

// Runs body(i) for i in [0, n) across up to max_threads threads. Each index
// must write only to its own slots. max_threads <= 1 runs inline.
void parallel_for(std::size_t n, unsigned max_threads, const std::function<void(std::size_t)>& body);

// Thread budget: FAULTBENCH_THREADS if set, else hardware concurrency.
unsigned thread_budget();

std::string version_string();

}  // namespace fb

#endif
