#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "placement/config.hpp"
#include "placement/round.hpp"

namespace placement {

// Round snapshots as <dir>/<roundId>.json, each written to a temp file and
// renamed into place.
class RoundRepository {
 public:
  explicit RoundRepository(std::filesystem::path dir);

  void save(const RoundState& round) const;
  // NotFoundError when no snapshot exists.
  RoundState load(const std::string& roundId) const;
  bool exists(const std::string& roundId) const;
  // Ids of complete snapshots, sorted.
  std::vector<std::string> list() const;
  // "round-0001", "round-0002", ... one past the highest existing id.
  std::string next_id() const;

  std::filesystem::path path_of(const std::string& roundId) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

// The on-disk layout shared by the CLI and the HTTP service:
//   <root>/config.json   optional; defaults apply when absent
//   <root>/store.json    (storage.storeFile)
//   <root>/rounds/       (storage.roundsDir)
class DataDir {
 public:
  explicit DataDir(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path config_path() const { return root_ / "config.json"; }
  std::filesystem::path store_path() const;

  Config load_config() const;
  void save_config(const Config& config) const;

  // An empty store when the file does not exist yet.
  InstanceStore load_store() const;
  void save_store(const InstanceStore& store) const;

  RoundRepository rounds() const;

 private:
  std::filesystem::path root_;
};

}  // namespace placement
