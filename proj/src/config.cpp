#include "placement/config.hpp"

#include <stdexcept>

namespace placement {

void Config::validate() const {
  matchWeights.validate();
  objectiveWeights.validate();
  gaParams.validate();
  thresholds.validate();
  if (clustering.k && *clustering.k < 1) throw std::invalid_argument("clustering.k must be >= 1");
  if (clustering.kMin < 1 || clustering.kMin > clustering.kMax)
    throw std::invalid_argument("clustering needs 1 <= kMin <= kMax");
  if (!locale_from_string(locale)) throw std::invalid_argument("locale must be en or fr");
  if (listen.port < 0 || listen.port > 65535) throw std::invalid_argument("listen.port out of range");
  if (storage.storeFile.empty() || storage.roundsDir.empty())
    throw std::invalid_argument("storage paths must not be empty");
}

Locale Config::argument_locale() const { return locale_from_string(locale).value_or(Locale::En); }

void to_json(json& j, const ClusteringConfig& c) {
  j = {{"kMin", c.kMin}, {"kMax", c.kMax}, {"seed", c.seed}};
  if (c.k) j["k"] = *c.k;
}

void read(const json& j, const std::string& path, ClusteringConfig& out) {
  ObjectReader r(j, path);
  r.field("k", out.k).field("kMin", out.kMin).field("kMax", out.kMax).field("seed", out.seed).finish();
}

void to_json(json& j, const ListenConfig& c) { j = {{"host", c.host}, {"port", c.port}}; }

void read(const json& j, const std::string& path, ListenConfig& out) {
  ObjectReader r(j, path);
  r.field("host", out.host).field("port", out.port).finish();
}

void to_json(json& j, const StorageConfig& c) {
  j = {{"storeFile", c.storeFile}, {"roundsDir", c.roundsDir}};
}

void read(const json& j, const std::string& path, StorageConfig& out) {
  ObjectReader r(j, path);
  r.field("storeFile", out.storeFile).field("roundsDir", out.roundsDir).finish();
}

void to_json(json& j, const Config& c) {
  j = {{"matchWeights", c.matchWeights},
       {"objectiveWeights", c.objectiveWeights},
       {"gaParams", c.gaParams},
       {"thresholds", c.thresholds},
       {"clustering", c.clustering},
       {"locale", c.locale},
       {"storage", c.storage},
       {"listen", c.listen}};
  if (c.authToken) j["authToken"] = *c.authToken;
}

void read(const json& j, const std::string& path, Config& out) {
  ObjectReader r(j, path);
  r.field("matchWeights", out.matchWeights)
      .field("objectiveWeights", out.objectiveWeights)
      .field("gaParams", out.gaParams)
      .field("thresholds", out.thresholds)
      .field("clustering", out.clustering)
      .field("locale", out.locale)
      .field("storage", out.storage)
      .field("listen", out.listen)
      .field("authToken", out.authToken)
      .finish();
}

Config parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("config is not valid JSON: ") + e.what());
  }
  Config c = parse_as<Config>(j);
  c.validate();
  return c;
}

}  // namespace placement
