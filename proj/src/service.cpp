#include "placement/service.hpp"

#include <charconv>

#include "placement/annotate.hpp"
#include "placement/store_io.hpp"
#include "placement/triples.hpp"
#include "placement/validate.hpp"

namespace placement {

std::string ApiResponse::payload() const { return text ? *text : dump_json(body); }

ApiResponse error_response(int status, std::string code, std::string message, json details) {
  ApiResponse r;
  r.status = status;
  r.body = {{"code", std::move(code)}, {"message", std::move(message)}, {"details", std::move(details)}};
  return r;
}

namespace {

json report_json(const ValidationReport& report) {
  json out = json::array();
  for (const Violation& v : report) out.push_back({{"entityId", v.entityId}, {"message", v.message}});
  return out;
}

}  // namespace

ApiResponse response_for_current_exception() {
  try {
    throw;
  } catch (const ValidationError& e) {
    return error_response(422, "validation_failed", e.what(), {{"violations", report_json(e.report())}});
  } catch (const SchemaError& e) {
    return error_response(422, "schema_error", e.what());
  } catch (const PreconditionError& e) {
    return error_response(422, "precondition_failed", e.what());
  } catch (const std::invalid_argument& e) {
    return error_response(422, "invalid_argument", e.what());
  } catch (const NotFoundError& e) {
    return error_response(404, "not_found", e.what());
  } catch (const ConflictError& e) {
    return error_response(409, "conflict", e.what());
  } catch (const CancelledError& e) {
    return error_response(409, "cancelled", e.what());
  } catch (const json::exception& e) {
    return error_response(422, "schema_error", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

json round_summary(const RoundState& round) {
  json j = round;
  j.erase("store");
  j["storeSnapshot"] = {{"students", round.store.students.size()},
                        {"missions", round.store.missions.size()},
                        {"pastPlacements", round.store.pastPlacements.size()},
                        {"lexiconVersion", round.store.lexicon.version}};
  j["missionIds"] = round_missions(round);
  j["studentIds"] = round_students(round);
  return j;
}

Service::Service(std::filesystem::path dataDir) : data_(std::move(dataDir)) {}

Service::RoundSlot& Service::slot(const std::string& roundId) {
  std::lock_guard lock(slotsMutex_);
  auto& s = slots_[roundId];
  if (!s) s = std::make_unique<RoundSlot>();
  return *s;
}

// --- store -------------------------------------------------------------------

json Service::import_store(const json& body) {
  InstanceStore store = parse_as<InstanceStore>(body);
  ValidationReport report = placement::validate_store(store);
  if (!report.empty()) throw ValidationError(std::move(report), "store is invalid");
  std::unique_lock lock(storeMutex_);
  data_.save_store(store);
  return {{"imported", true},
          {"students", store.students.size()},
          {"missions", store.missions.size()},
          {"companies", store.companies.size()},
          {"pastPlacements", store.pastPlacements.size()}};
}

json Service::export_store() const {
  std::shared_lock lock(storeMutex_);
  return data_.load_store();
}

json Service::validate_store() const {
  std::shared_lock lock(storeMutex_);
  const ValidationReport report = placement::validate_store(data_.load_store());
  return {{"valid", report.empty()}, {"violations", report_json(report)}};
}

std::string Service::export_triples() const {
  std::shared_lock lock(storeMutex_);
  return placement::export_triples(data_.load_store());
}

json Service::import_triples(const std::string& text) {
  return import_store(json(placement::import_triples(text)));
}

json Service::annotate(const json& body) {
  if (!body.is_object()) throw SchemaError("$: expected object");
  std::string rawText;
  std::optional<std::string> missionId;
  ObjectReader(body, "$").field("rawText", rawText).field("missionId", missionId).finish();
  if (missionId) {
    json out = annotate_all(*missionId);
    return out["missions"][0];
  }
  if (!body.contains("rawText")) throw SchemaError("$: expected rawText or missionId");
  std::shared_lock lock(storeMutex_);
  const InstanceStore store = data_.load_store();
  return annotate_mission(rawText, store.lexicon, Mission{}).annotation;
}

json Service::annotate_all(const std::optional<std::string>& missionId) {
  std::unique_lock lock(storeMutex_);
  InstanceStore store = data_.load_store();
  ValidationReport report = validate_lexicon(store.lexicon);
  if (!report.empty()) throw ValidationError(std::move(report), "lexicon is invalid");
  if (missionId) {
    const Mission* m = store.find_mission(*missionId);
    if (!m) throw NotFoundError("unknown mission " + *missionId);
    if (m->rawText.empty()) throw PreconditionError("mission " + *missionId + " has no posting text");
  }
  json missions = json::array(), log = json::array();
  for (Mission& m : store.missions) {
    if (missionId ? m.id != *missionId : m.rawText.empty()) continue;
    AnnotatedMission a = annotate_mission(m.rawText, store.lexicon, m);
    m = std::move(a.mission);
    missions.push_back({{"missionId", m.id},
                        {"competencies", m.competencies},
                        {"activityAreas", m.activityAreas},
                        {"annotation", a.annotation}});
    log.push_back(annotation_log_entry(m.id, a.annotation));
  }
  data_.save_store(store);
  return {{"missions", std::move(missions)}, {"log", std::move(log)}};
}

// --- rounds ------------------------------------------------------------------

json Service::list_rounds() const { return {{"rounds", data_.rounds().list()}}; }

json Service::create_round() {
  std::lock_guard create(createMutex_);
  std::shared_lock lock(storeMutex_);
  const RoundRepository repo = data_.rounds();
  const RoundState round = placement::create_round(data_.load_store(), data_.load_config(), repo.next_id());
  repo.save(round);
  return round_summary(round);
}

json Service::get_round(const std::string& roundId) const { return round_summary(data_.rounds().load(roundId)); }

json Service::candidates(const std::string& roundId, const std::string& missionId,
                         std::optional<std::size_t> limit) const {
  return candidates_view(data_.rounds().load(roundId), missionId, limit);
}

json Service::student_missions(const std::string& roundId, const std::string& studentId,
                               std::optional<std::size_t> limit) const {
  return missions_view(data_.rounds().load(roundId), studentId, limit);
}

json Service::set_override(const std::string& roundId, const json& body) {
  const RoundRepository repo = data_.rounds();
  RoundSlot& s = slot(roundId);
  std::lock_guard lock(s.write);
  RoundState round = repo.load(roundId);
  require_mutable(round);

  if (!body.is_object()) throw SchemaError("$: expected object");
  std::string studentId;
  std::optional<std::string> missionId;
  ObjectReader(body, "$").field("studentId", studentId).field("missionId", missionId).finish();
  if (studentId.empty()) throw SchemaError("$.studentId: required");
  if (!body.contains("missionId")) throw SchemaError("$.missionId: required (null removes the override)");
  placement::set_override(round, studentId, missionId);
  repo.save(round);
  return {{"roundId", round.roundId}, {"status", to_string(round.status)}, {"overrides", round.overrides}};
}

json Service::assign(const std::string& roundId, const json& body) {
  const RoundRepository repo = data_.rounds();
  require_mutable(repo.load(roundId));
  AssignOptions options;
  if (!body.is_null()) {
    if (!body.is_object()) throw SchemaError("$: expected object");
    ObjectReader(body, "$")
        .field("gaParams", options.gaParams)
        .field("weights", options.weights)
        .field("matchWeights", options.matchWeights)
        .finish();
  }

  RoundSlot& s = slot(roundId);
  if (s.assigning.exchange(true)) throw ConflictError("an assignment is already running for round " + roundId);
  struct Release {
    std::atomic<bool>& flag;
    ~Release() { flag = false; }
  } release{s.assigning};

  GaHooks hooks;
  {
    std::lock_guard g(s.stopGuard);
    s.stop = std::stop_source();
    hooks.stop = s.stop.get_token();
  }
  std::lock_guard lock(s.write);
  RoundState round = repo.load(roundId);
  const AssignmentPlan plan = assign_round(round, options, hooks);
  repo.save(round);
  return plan;
}

bool Service::assign_running(const std::string& roundId) { return slot(roundId).assigning; }

json Service::cancel_assign(const std::string& roundId) {
  if (!data_.rounds().exists(roundId)) throw NotFoundError("unknown round " + roundId);
  RoundSlot& s = slot(roundId);
  bool requested = false;
  if (s.assigning) {
    std::lock_guard g(s.stopGuard);
    requested = s.stop.request_stop();
  }
  return {{"roundId", roundId}, {"cancelRequested", requested}};
}

json Service::publish(const std::string& roundId) {
  const RoundRepository repo = data_.rounds();
  RoundSlot& s = slot(roundId);
  std::lock_guard lock(s.write);
  RoundState round = repo.load(roundId);
  publish_round(round);
  repo.save(round);
  return round_summary(round);
}

// --- config ------------------------------------------------------------------

json Service::get_config() const {
  std::shared_lock lock(storeMutex_);
  return data_.load_config();
}

json Service::put_config(const json& body) {
  Config config = parse_as<Config>(body);
  config.validate();
  std::unique_lock lock(storeMutex_);
  data_.save_config(config);
  return config;
}

// --- routing -----------------------------------------------------------------

namespace {

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < path.size()) {
    while (i < path.size() && path[i] == '/') ++i;
    std::size_t j = path.find('/', i);
    if (j == std::string::npos) j = path.size();
    if (j > i) out.push_back(path.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> limit_param(const ApiRequest& req) {
  auto it = req.query.find("limit");
  if (it == req.query.end()) return std::nullopt;
  std::size_t v = 0;
  const char* b = it->second.data();
  const char* e = b + it->second.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e || it->second.empty())
    throw std::invalid_argument("limit must be a non-negative integer");
  return v;
}

json parse_body(const ApiRequest& req) {
  if (req.body.empty()) return json(nullptr);
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("request body is not valid JSON: ") + e.what());
  }
}

ApiResponse ok(json body, int status = 200) {
  ApiResponse r;
  r.status = status;
  r.body = std::move(body);
  return r;
}

}  // namespace

ApiResponse Service::handle(const ApiRequest& request) {
  try {
    Config config;
    {
      std::shared_lock lock(storeMutex_);
      config = data_.load_config();
    }
    if (config.authToken) {
      auto it = request.headers.find("authorization");
      if (it == request.headers.end() || it->second != "Bearer " + *config.authToken)
        return error_response(401, "unauthorized", "missing or wrong bearer token");
    }
    return route(request);
  } catch (...) {
    return response_for_current_exception();
  }
}

ApiResponse Service::route(const ApiRequest& req) {
  const std::vector<std::string> p = split_path(req.path);
  const std::string& m = req.method;
  auto not_allowed = [&] { return error_response(405, "method_not_allowed", m + " not allowed on " + req.path); };
  if (p.empty() || p[0] != "v1") return error_response(404, "not_found", "no route for " + req.path);
  const std::size_t n = p.size();

  if (n == 3 && p[1] == "store") {
    if (p[2] == "import") return m == "POST" ? ok(import_store(parse_body(req))) : not_allowed();
    if (p[2] == "export") return m == "GET" ? ok(export_store()) : not_allowed();
    if (p[2] == "validate") return m == "GET" ? ok(validate_store()) : not_allowed();
    if (p[2] == "triples") {
      if (m == "GET") {
        ApiResponse r;
        r.text = export_triples();
        r.contentType = "text/tab-separated-values";
        return r;
      }
      if (m == "POST") return ok(import_triples(req.body));
      return not_allowed();
    }
  }
  if (n == 3 && p[1] == "missions" && p[2] == "annotate")
    return m == "POST" ? ok(annotate(parse_body(req))) : not_allowed();
  if (n == 2 && p[1] == "config") {
    if (m == "GET") return ok(get_config());
    if (m == "PUT") return ok(put_config(parse_body(req)));
    return not_allowed();
  }
  if (n >= 2 && p[1] == "rounds") {
    if (n == 2) {
      if (m == "GET") return ok(list_rounds());
      if (m == "POST") return ok(create_round(), 201);
      return not_allowed();
    }
    const std::string& id = p[2];
    if (n == 3) return m == "GET" ? ok(get_round(id)) : not_allowed();
    if (n == 4 && p[3] == "overrides") return m == "POST" ? ok(set_override(id, parse_body(req))) : not_allowed();
    if (n == 4 && p[3] == "assign") return m == "POST" ? ok(assign(id, parse_body(req))) : not_allowed();
    if (n == 5 && p[3] == "assign" && p[4] == "cancel")
      return m == "POST" ? ok(cancel_assign(id)) : not_allowed();
    if (n == 4 && p[3] == "publish") return m == "POST" ? ok(publish(id)) : not_allowed();
    if (n == 6 && p[3] == "missions" && p[5] == "candidates")
      return m == "GET" ? ok(candidates(id, p[4], limit_param(req))) : not_allowed();
    if (n == 6 && p[3] == "students" && p[5] == "missions")
      return m == "GET" ? ok(student_missions(id, p[4], limit_param(req))) : not_allowed();
  }
  return error_response(404, "not_found", "no route for " + req.path);
}

}  // namespace placement
