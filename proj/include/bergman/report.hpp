#pragma once

#include <map>
#include <string>
#include <vector>

#include "bergman/moments.hpp"

namespace bergman {

inline constexpr const char* kToolVersion = "bergman-lab 0.1.0";

// Scientific notation with 17 significant digits; round-trips exactly.
std::string formatDouble(double v);

// Structured record of one experiment: the resolved configuration, the
// tabular sweep data, and the summary scalars. Deterministic functions of
// the config; both emitted forms are diff-able.
struct ExperimentReport {
  std::string command;
  std::map<std::string, std::string> config;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::map<std::string, std::string> summary;
  std::string toolVersion = kToolVersion;

  std::string toCsv() const;
  std::string toJson() const;
  static ExperimentReport fromJson(const std::string& text);
};

// Versioned moment-cache persistence. The fingerprint (domain, weight,
// quadrature tolerances) must match exactly on load.
struct CacheMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void saveMomentCache(const MomentTable& table, const std::string& path);
void loadMomentCache(MomentTable& table, const std::string& path);

}  // namespace bergman
