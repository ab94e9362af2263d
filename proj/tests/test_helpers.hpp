#ifndef GRIDNET_TESTS_HELPERS_HPP
#define GRIDNET_TESTS_HELPERS_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gridnet/graph.hpp"

namespace testing {

/// Graph on n nodes with ids "1".."n" (zero-padded when n > 9), edges
/// given as index pairs. Matches the 1-based labels used in fixtures.
inline gridnet::Snapshot graph(int n,
                               std::vector<gridnet::EdgeIx> edges,
                               int year = 0) {
  int width = 1;
  for (int v = n; v >= 10; v /= 10) ++width;
  std::vector<std::string> ids;
  for (int i = 1; i <= n; ++i) {
    std::string digits = std::to_string(i);
    ids.push_back(std::string(static_cast<std::size_t>(width) -
                                  digits.size(),
                              '0') +
                  digits);
  }
  return gridnet::Snapshot::build(std::move(ids), std::move(edges), year);
}

/// Two disjoint triangles on nodes {0,1,2} and {3,4,5}.
inline gridnet::Snapshot two_triangles() {
  return graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

/// Unique scratch directory under the system temp dir.
class TempDir {
public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("gridnet-" + tag + "-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path,
                       const std::string& content) {
  std::ofstream f(path);
  f << content;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

#ifdef GRIDNET_CLI_PATH
struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout
  std::string errors;  // stderr
};

/// Runs the built gridnet binary with shell redirection of both streams.
inline RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const auto out_path = std::filesystem::temp_directory_path() /
                        ("gridnet-run-out-" + std::to_string(::getpid()) +
                         "-" + std::to_string(counter));
  const auto err_path = std::filesystem::temp_directory_path() /
                        ("gridnet-run-err-" + std::to_string(::getpid()) +
                         "-" + std::to_string(counter));
  ++counter;
  const std::string command = std::string(GRIDNET_CLI_PATH) + " " + args +
                              " >" + out_path.string() + " 2>" +
                              err_path.string();
  const int status = std::system(command.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.output = read_file(out_path);
  r.errors = read_file(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return r;
}
#endif

}  // namespace testing

#endif
