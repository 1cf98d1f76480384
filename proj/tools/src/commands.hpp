#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace taucat::cli {

struct Options {
  int p = 5;
  std::uint64_t seed = 0;
  std::string out;
  bool timing = false;
};

// code: 0 positive, 1 negative. Malformed input throws.
struct Outcome {
  nlohmann::json report;
  int code = 0;
};

Outcome verify(const Options& o, const std::string& file);
Outcome build_mtau(const Options& o, const std::string& tau, const std::string& L, const std::string& psi, int g);
Outcome build_groupoid(const Options& o, const std::string& tau);
Outcome decompose(const Options& o, const std::string& file);
Outcome classify_equiv(const Options& o, const std::string& a, const std::string& b);
Outcome classify_nat(const Options& o, const std::string& a, const std::string& b, const std::string& da,
                     const std::string& db);
Outcome yoneda_check(const Options& o, const std::string& file);
Outcome roundtrip(const Options& o, const std::string& file);
Outcome bullet(const Options& o, const std::string& file);
Outcome paper_suite(const Options& o);

}  // namespace taucat::cli
