#pragma once

// Run reports: command, input digests, verdicts and optional timings.

#include <chrono>
#include <string>

#include <nlohmann/json.hpp>

namespace taucat::cli {

using nlohmann::json;

// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

class Report {
 public:
  Report(std::string command, int p, std::uint64_t seed, bool timing);
  void set_p(int p) { p_ = p; }

  // Reads and parses an input file, recording its digest.
  json load(const std::string& path);
  void set(const std::string& key, json value) { verdicts_[key] = std::move(value); }
  json& operator[](const std::string& key) { return verdicts_[key]; }

  // Runs fn, recording wall-clock time under name when timing is on.
  template <typename Fn>
  auto phase(const std::string& name, Fn&& fn) -> decltype(fn()) {
    const auto start = std::chrono::steady_clock::now();
    struct Stop {
      Report* r;
      const std::string* name;
      std::chrono::steady_clock::time_point start;
      ~Stop() { r->record(*name, std::chrono::steady_clock::now() - start); }
    } stop{this, &name, start};
    return fn();
  }

  json to_json(bool ok) const;

 private:
  void record(const std::string& name, std::chrono::steady_clock::duration d);

  std::string command_;
  int p_;
  std::uint64_t seed_;
  bool timing_;
  json inputs_ = json::array();
  json verdicts_ = json::object();
  json times_ = json::object();
};

}  // namespace taucat::cli
