#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "placement/arguments.hpp"
#include "placement/assign.hpp"
#include "placement/json_util.hpp"
#include "placement/match.hpp"

namespace placement {

struct ClusteringConfig {
  std::optional<int> k;  // fixed k; chosen by silhouette over [kMin, kMax] when unset
  int kMin = 2;
  int kMax = 8;
  std::uint64_t seed = 42;

  bool operator==(const ClusteringConfig&) const = default;
};

struct ListenConfig {
  std::string host = "127.0.0.1";
  int port = 8080;

  bool operator==(const ListenConfig&) const = default;
};

// File names relative to the data directory.
struct StorageConfig {
  std::string storeFile = "store.json";
  std::string roundsDir = "rounds";

  bool operator==(const StorageConfig&) const = default;
};

struct Config {
  MatchWeights matchWeights;
  ObjectiveWeights objectiveWeights;
  GaParams gaParams;
  ArgumentThresholds thresholds;
  ClusteringConfig clustering;
  std::string locale = "en";
  StorageConfig storage;
  ListenConfig listen;
  // Shared bearer token for the HTTP API; open when unset.
  std::optional<std::string> authToken;

  // Throws std::invalid_argument naming the first out-of-range value.
  void validate() const;
  Locale argument_locale() const;
  bool operator==(const Config&) const = default;
};

void to_json(json& j, const ClusteringConfig& c);
void to_json(json& j, const ListenConfig& c);
void to_json(json& j, const StorageConfig& c);
void to_json(json& j, const Config& c);
void read(const json& j, const std::string& path, ClusteringConfig& out);
void read(const json& j, const std::string& path, ListenConfig& out);
void read(const json& j, const std::string& path, StorageConfig& out);
void read(const json& j, const std::string& path, Config& out);

// Parses and validates; SchemaError or std::invalid_argument on failure.
Config parse_config(const std::string& text);

}  // namespace placement
