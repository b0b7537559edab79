#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "placement/errors.hpp"

namespace placement {

using nlohmann::json;

// Strict readers: wrong types and unknown keys raise SchemaError naming the
// JSON path. A missing key leaves the default in place.
void read(const json& j, const std::string& path, std::string& out);
void read(const json& j, const std::string& path, int& out);
void read(const json& j, const std::string& path, std::int64_t& out);
void read(const json& j, const std::string& path, std::uint64_t& out);
void read(const json& j, const std::string& path, double& out);
void read(const json& j, const std::string& path, bool& out);
void read(const json& j, const std::string& path, json& out);

template <typename T>
void read(const json& j, const std::string& path, std::vector<T>& out) {
  if (!j.is_array()) throw SchemaError(path + ": expected array");
  out.clear();
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    T item{};
    read(j[i], path + "[" + std::to_string(i) + "]", item);
    out.push_back(std::move(item));
  }
}

template <typename T>
void read(const json& j, const std::string& path, std::optional<T>& out) {
  if (j.is_null()) {
    out.reset();
    return;
  }
  T value{};
  read(j, path, value);
  out = std::move(value);
}

template <typename T>
void read(const json& j, const std::string& path, std::map<std::string, T>& out) {
  if (!j.is_object()) throw SchemaError(path + ": expected object");
  out.clear();
  for (auto it = j.begin(); it != j.end(); ++it) {
    T value{};
    read(it.value(), path + "." + it.key(), value);
    out.emplace(it.key(), std::move(value));
  }
}

class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path);

  template <typename T>
  ObjectReader& field(const char* key, T& out) {
    seen_.insert(key);
    auto it = j_.find(key);
    if (it != j_.end()) read(*it, path_ + "." + key, out);
    return *this;
  }

  // Throws on any key not consumed by field().
  void finish() const;

  const json& raw() const { return j_; }
  const std::string& path() const { return path_; }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

template <typename T>
T parse_as(const json& j, const std::string& path = "$") {
  T out{};
  read(j, path, out);
  return out;
}

}  // namespace placement
