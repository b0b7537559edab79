#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stop_token>
#include <string>

#include "placement/json_util.hpp"
#include "placement/persistence.hpp"

namespace placement {

struct ApiRequest {
  std::string method;  // GET, POST, PUT, ...
  std::string path;    // e.g. /v1/rounds/round-0001
  std::map<std::string, std::string> query;
  std::map<std::string, std::string> headers;  // lower-case names
  std::string body;
};

struct ApiResponse {
  int status = 200;
  json body;                        // sent as JSON unless `text` is set
  std::optional<std::string> text;  // raw payload (triples)
  std::string contentType = "application/json";

  // The exact bytes sent on the wire.
  std::string payload() const;
};

// Error body: {code, message, details}.
ApiResponse error_response(int status, std::string code, std::string message, json details = json::object());

// Maps engine exceptions to HTTP statuses: ValidationError, SchemaError,
// PreconditionError and std::invalid_argument to 422, NotFoundError to 404,
// ConflictError and CancelledError to 409.
ApiResponse response_for_current_exception();

// The operations behind both the HTTP API and the CLI. Every method returns
// the JSON body of the matching endpoint and throws engine exceptions.
// Thread-safe: store and config share a reader/writer lock, mutations of a
// round are serialized per round, and at most one assignment runs per round.
class Service {
 public:
  explicit Service(std::filesystem::path dataDir);

  const DataDir& data() const { return data_; }

  json import_store(const json& body);
  json export_store() const;
  json validate_store() const;
  std::string export_triples() const;
  json import_triples(const std::string& text);

  // {rawText} annotates free text; {missionId} re-annotates a stored mission
  // from its rawText and saves it.
  json annotate(const json& body);
  // Every mission with posting text (or just `missionId`), saved back.
  // Returns {missions: [...], log: [...]}.
  json annotate_all(const std::optional<std::string>& missionId = std::nullopt);

  json list_rounds() const;
  json create_round();
  json get_round(const std::string& roundId) const;
  json candidates(const std::string& roundId, const std::string& missionId, std::optional<std::size_t> limit) const;
  json student_missions(const std::string& roundId, const std::string& studentId,
                        std::optional<std::size_t> limit) const;
  json set_override(const std::string& roundId, const json& body);
  // Body: {gaParams?, weights?, matchWeights?}. ConflictError while another
  // assignment of the same round runs.
  json assign(const std::string& roundId, const json& body);
  json cancel_assign(const std::string& roundId);
  bool assign_running(const std::string& roundId);
  json publish(const std::string& roundId);

  json get_config() const;
  json put_config(const json& body);

  // HTTP routing for everything under /v1/.
  ApiResponse handle(const ApiRequest& request);

 private:
  struct RoundSlot {
    std::mutex write;
    std::mutex stopGuard;
    std::stop_source stop;
    std::atomic<bool> assigning{false};
  };

  RoundSlot& slot(const std::string& roundId);
  ApiResponse route(const ApiRequest& request);

  DataDir data_;
  mutable std::shared_mutex storeMutex_;
  std::mutex createMutex_;
  std::mutex slotsMutex_;
  std::map<std::string, std::unique_ptr<RoundSlot>> slots_;
};

// Round JSON without the embedded store copy, which is summarized by counts.
json round_summary(const RoundState& round);

}  // namespace placement
