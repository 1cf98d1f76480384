#include "report.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "taucat/error.hpp"

namespace taucat::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char out[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), out, &len, EVP_sha256(), nullptr)) fail("SHA-256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(out[i]);
  return hex.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write " + path);
  out << bytes;
}

Report::Report(std::string command, int p, std::uint64_t seed, bool timing)
    : command_(std::move(command)), p_(p), seed_(seed), timing_(timing) {}

json Report::load(const std::string& path) {
  const std::string bytes = read_file(path);
  inputs_.push_back({{"path", path}, {"sha256", sha256_hex(bytes)}});
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    fail(path + " is not valid JSON: " + e.what());
  }
}

void Report::record(const std::string& name, std::chrono::steady_clock::duration d) {
  if (timing_) times_[name] = std::chrono::duration<double, std::milli>(d).count();
}

json Report::to_json(bool ok) const {
  json j = {{"command", command_}, {"p", p_},        {"seed", seed_},
            {"inputs", inputs_},   {"ok", ok},       {"verdicts", verdicts_}};
  if (timing_) j["timing_ms"] = times_;
  return j;
}

}  // namespace taucat::cli
