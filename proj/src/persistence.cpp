#include "placement/persistence.hpp"

#include <algorithm>
#include <cstdio>

#include "placement/store_io.hpp"

namespace placement {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kRoundPrefix = "round-";

bool safe_round_id(const std::string& id) {
  if (id.empty() || id.size() > 128) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
  });
}

}  // namespace

RoundRepository::RoundRepository(fs::path dir) : dir_(std::move(dir)) {}

fs::path RoundRepository::path_of(const std::string& roundId) const {
  if (!safe_round_id(roundId)) throw NotFoundError("unknown round " + roundId);
  return dir_ / (roundId + ".json");
}

void RoundRepository::save(const RoundState& round) const {
  write_file_atomic(path_of(round.roundId), dump_json(json(round)));
}

bool RoundRepository::exists(const std::string& roundId) const {
  return safe_round_id(roundId) && fs::is_regular_file(path_of(roundId));
}

RoundState RoundRepository::load(const std::string& roundId) const {
  if (!exists(roundId)) throw NotFoundError("unknown round " + roundId);
  json j;
  try {
    j = json::parse(read_file(path_of(roundId)));
  } catch (const json::parse_error& e) {
    throw SchemaError("round snapshot " + roundId + " is corrupt: " + e.what());
  }
  return parse_as<RoundState>(j);
}

std::vector<std::string> RoundRepository::list() const {
  std::vector<std::string> ids;
  if (!fs::is_directory(dir_)) return ids;
  for (const fs::directory_entry& e : fs::directory_iterator(dir_)) {
    if (!e.is_regular_file() || e.path().extension() != ".json") continue;
    const std::string id = e.path().stem().string();
    if (safe_round_id(id)) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string RoundRepository::next_id() const {
  int highest = 0;
  for (const std::string& id : list()) {
    if (id.rfind(kRoundPrefix, 0) != 0) continue;
    try {
      highest = std::max(highest, std::stoi(id.substr(kRoundPrefix.size())));
    } catch (const std::exception&) {
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "round-%04d", highest + 1);
  return buf;
}

DataDir::DataDir(fs::path root) : root_(std::move(root)) {}

fs::path DataDir::store_path() const { return root_ / load_config().storage.storeFile; }

Config DataDir::load_config() const {
  if (!fs::exists(config_path())) return Config{};
  return parse_config(read_file(config_path()));
}

void DataDir::save_config(const Config& config) const {
  config.validate();
  write_file_atomic(config_path(), dump_json(json(config)));
}

InstanceStore DataDir::load_store() const {
  const fs::path p = store_path();
  if (!fs::exists(p)) return InstanceStore{};
  return placement::load_store(p);
}

void DataDir::save_store(const InstanceStore& store) const {
  write_file_atomic(store_path(), dump_json(json(store)));
}

RoundRepository DataDir::rounds() const { return RoundRepository(root_ / load_config().storage.roundsDir); }

}  // namespace placement
