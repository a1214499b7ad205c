#include "bergman/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bergman {

using nlohmann::json;

std::string formatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::string ExperimentReport::toCsv() const {
  std::ostringstream os;
  for (size_t c = 0; c < columns.size(); ++c)
    os << (c ? "," : "") << columns[c];
  os << "\n";
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c)
      os << (c ? "," : "") << formatDouble(row[c]);
    os << "\n";
  }
  return os.str();
}

std::string ExperimentReport::toJson() const {
  json j;
  j["tool_version"] = toolVersion;
  j["command"] = command;
  j["config"] = config;
  j["columns"] = columns;
  j["rows"] = rows;
  j["summary"] = summary;
  return j.dump(2) + "\n";
}

ExperimentReport ExperimentReport::fromJson(const std::string& text) {
  const json j = json::parse(text);
  ExperimentReport r;
  r.toolVersion = j.at("tool_version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.config = j.at("config").get<std::map<std::string, std::string>>();
  r.columns = j.at("columns").get<std::vector<std::string>>();
  r.rows = j.at("rows").get<std::vector<std::vector<double>>>();
  r.summary = j.at("summary").get<std::map<std::string, std::string>>();
  return r;
}

namespace {

constexpr int kCacheFormatVersion = 1;

json fingerprint(const MomentTable& t) {
  json f;
  f["domain"] = t.domain().name();
  f["dimension"] = t.domain().dimension();
  f["weight"] = t.weight().name();
  f["quad_rel_tol"] = t.quadSpec().relTol;
  f["quad_max_depth"] = t.quadSpec().maxDepth;
  return f;
}

}  // namespace

void saveMomentCache(const MomentTable& table, const std::string& path) {
  json j;
  j["format_version"] = kCacheFormatVersion;
  j["fingerprint"] = fingerprint(table);
  json moments = json::array();
  for (const auto& [s, v] : table.momentCacheSnapshot())
    moments.push_back({{"s", s}, {"sign", v.sign}, {"logmag", v.logmag}});
  j["moments"] = moments;
  json boundary = json::array();
  for (const auto& [y, v] : table.iCacheSnapshot())
    boundary.push_back({{"y", y}, {"sign", v.sign}, {"logmag", v.logmag}});
  j["boundary_moments"] = boundary;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cache: cannot write " + path);
  out << j.dump(2) << "\n";
}

void loadMomentCache(MomentTable& table, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cache: cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw CacheMismatchError(std::string("cache: parse error: ") + e.what());
  }
  try {
    if (j.at("format_version").get<int>() != kCacheFormatVersion)
      throw CacheMismatchError("cache: unsupported format version");
    if (j.at("fingerprint") != fingerprint(table))
      throw CacheMismatchError("cache: fingerprint mismatch for " + path);
    std::map<std::vector<double>, LogValue> moments;
    for (const auto& e : j.at("moments"))
      moments.emplace(e.at("s").get<std::vector<double>>(),
                      LogValue{e.at("sign").get<int>(),
                               e.at("logmag").get<double>()});
    std::map<double, LogValue> boundary;
    for (const auto& e : j.at("boundary_moments"))
      boundary.emplace(e.at("y").get<double>(),
                       LogValue{e.at("sign").get<int>(),
                                e.at("logmag").get<double>()});
    table.preloadMomentCache(moments);
    table.preloadICache(boundary);
  } catch (const json::exception& e) {
    throw CacheMismatchError(std::string("cache: malformed file: ") + e.what());
  }
}

}  // namespace bergman
