// Command-line front end. Shares every JSON-producing operation with the
// HTTP service, so both print identical bodies for identical state.

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "placement/cluster.hpp"
#include "placement/http_server.hpp"
#include "placement/match.hpp"
#include "placement/round.hpp"
#include "placement/service.hpp"
#include "placement/store_io.hpp"
#include "placement/validate.hpp"

namespace {

using namespace placement;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void print(const json& j) { std::cout << dump_json(j); }

std::vector<double> parse_numbers(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": '" + part + "' is not a number");
    }
  }
  if (out.size() != expected)
    throw UsageError(std::string(flag) + ": expected " + std::to_string(expected) + " comma-separated numbers");
  return out;
}

std::string latest_round(const Service& service) {
  const std::vector<std::string> ids = service.data().rounds().list();
  if (ids.empty()) throw NotFoundError("no round exists yet; run `round create` first");
  return ids.back();
}

HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Internship placement engine: annotate postings, rank candidates, compute assignments."};
  app.require_subcommand(1);
  std::string dataDir = ".";
  app.add_option("--data-dir", dataDir, "Directory holding config.json, store.json and rounds/");

  // validate
  auto* validate = app.add_subcommand("validate", "Check a store file (default: the data directory's store)");
  std::string validateFile;
  validate->add_option("file", validateFile, "store.json to check");

  // import
  auto* import = app.add_subcommand("import", "Replace the store with a store.json or triples.tsv file");
  std::string importFile;
  import->add_option("file", importFile, "File to import (.json or .tsv)")->required();

  // annotate
  auto* annotate = app.add_subcommand("annotate", "Extract concepts from mission posting texts");
  std::string annotateMission, annotateLog;
  annotate->add_option("--mission", annotateMission, "Only this mission");
  annotate->add_option("--log", annotateLog, "Write the annotation log (JSON lines) here");

  // cluster / kb
  auto* cluster = app.add_subcommand("cluster", "Cluster the annotated missions");
  auto* kb = app.add_subcommand("kb", "Build the knowledge base of past successful placements");
  std::optional<int> kFixed;
  bool kAuto = false;
  std::optional<int> kMin, kMax;
  std::optional<std::uint64_t> clusterSeed;
  for (CLI::App* sub : {cluster, kb}) {
    sub->add_option("--k", kFixed, "Fixed number of clusters");
    sub->add_flag("--k-auto", kAuto, "Choose k by mean silhouette");
    sub->add_option("--k-min", kMin, "Smallest k tried by --k-auto");
    sub->add_option("--k-max", kMax, "Largest k tried by --k-auto");
    sub->add_option("--seed", clusterSeed, "Seed for k-means++");
  }

  // round
  auto* round = app.add_subcommand("round", "Manage assignment rounds");
  round->require_subcommand(1);
  auto* roundCreate = round->add_subcommand("create", "Create a round from the current store");
  auto* roundList = round->add_subcommand("list", "List round ids");
  auto* roundShow = round->add_subcommand("show", "Show a round");
  auto* roundPublish = round->add_subcommand("publish", "Freeze a round");
  auto* roundOverride = round->add_subcommand("override", "Pin or unpin a student");
  std::string roundId, overrideStudent, overrideMission;
  bool overrideClear = false;
  roundShow->add_option("id", roundId, "Round id")->required();
  roundPublish->add_option("id", roundId, "Round id")->required();
  roundOverride->add_option("id", roundId, "Round id")->required();
  roundOverride->add_option("--student", overrideStudent, "Student id")->required();
  auto* pinMission = roundOverride->add_option("--mission", overrideMission, "Mission to pin the student to");
  auto* pinClear = roundOverride->add_flag("--clear", overrideClear, "Remove the student's override");
  pinMission->excludes(pinClear);

  // match
  auto* match = app.add_subcommand("match", "Ranked candidates for a mission, or missions for a student");
  std::string matchRound, matchMission, matchStudent;
  std::optional<std::size_t> matchLimit;
  match->add_option("--round", matchRound, "Round id (default: latest)");
  auto* mMission = match->add_option("--mission", matchMission, "Mission id");
  auto* mStudent = match->add_option("--student", matchStudent, "Student id");
  mMission->excludes(mStudent);
  match->add_option("--limit", matchLimit, "Keep the top N entries");

  // assign
  auto* assign = app.add_subcommand("assign", "Compute the global assignment of a round");
  std::string assignRound, assignWeights, assignMatchWeights;
  std::optional<std::uint64_t> assignSeed;
  std::optional<int> assignPop, assignGens;
  assign->add_option("--round", assignRound, "Round id (default: latest)");
  assign->add_option("--seed", assignSeed, "GA seed");
  assign->add_option("--pop", assignPop, "Population size");
  assign->add_option("--gens", assignGens, "Generation limit");
  assign->add_option("--weights", assignWeights, "Objective weights wMatch,wInterest,wUnassigned,penalty");
  assign->add_option("--match-weights", assignMatchWeights, "Match weights alpha,beta,gamma");

  // serve
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  std::optional<std::string> serveHost;
  std::optional<int> servePort;
  serve->add_option("--host", serveHost, "Listen address (default from config)");
  serve->add_option("--port", servePort, "Listen port (default from config)");

  // triples
  auto* exportTriples = app.add_subcommand("export-triples", "Write the store as triples.tsv");
  std::string triplesOut;
  exportTriples->add_option("--out", triplesOut, "Output file (default: stdout)");
  auto* importTriples = app.add_subcommand("import-triples", "Replace the store from a triples.tsv file");
  std::string triplesIn;
  importTriples->add_option("file", triplesIn, "triples.tsv")->required();

  // config
  auto* config = app.add_subcommand("config", "Show or replace config.json");
  config->require_subcommand(1);
  auto* configShow = config->add_subcommand("show", "Print the effective configuration");
  auto* configSet = config->add_subcommand("set", "Validate and install a configuration file");
  std::string configFile;
  configSet->add_option("file", configFile, "config.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Service service(dataDir);

    if (*validate) {
      const InstanceStore store = validateFile.empty() ? service.data().load_store() : load_store(validateFile);
      const ValidationReport report = validate_store(store);
      json violations = json::array();
      for (const Violation& v : report) violations.push_back({{"entityId", v.entityId}, {"message", v.message}});
      print({{"valid", report.empty()}, {"violations", violations}});
      return report.empty() ? kExitOk : kExitFailure;
    }
    if (*import) {
      const std::string text = read_file(importFile);
      if (importFile.size() >= 4 && importFile.substr(importFile.size() - 4) == ".tsv") {
        print(service.import_triples(text));
      } else {
        json body;
        try {
          body = json::parse(text);
        } catch (const json::parse_error& e) {
          throw SchemaError(importFile + " is not valid JSON: " + e.what());
        }
        print(service.import_store(body));
      }
      return kExitOk;
    }
    if (*annotate) {
      std::optional<std::string> only;
      if (!annotateMission.empty()) only = annotateMission;
      const json result = service.annotate_all(only);
      if (!annotateLog.empty()) {
        std::string lines;
        for (const json& entry : result["log"]) lines += entry.dump() + "\n";
        write_file_atomic(annotateLog, lines);
      }
      print(result["missions"]);
      return kExitOk;
    }
    if (*cluster || *kb) {
      ClusteringConfig c = service.data().load_config().clustering;
      if (kFixed && kAuto) throw UsageError("--k and --k-auto are exclusive");
      if (kFixed) c.k = *kFixed;
      if (kAuto) c.k.reset();
      if (kMin) c.kMin = *kMin;
      if (kMax) c.kMax = *kMax;
      if (clusterSeed) c.seed = *clusterSeed;
      if (c.kMin < 1 || c.kMin > c.kMax) throw UsageError("need 1 <= --k-min <= --k-max");
      const InstanceStore store = service.data().load_store();
      const ClusterModel model = cluster_missions(store, c);
      if (*cluster) {
        std::map<std::string, ConceptVector> vectors;
        for (const Mission& m : store.missions)
          if (m.annotated()) vectors.emplace(m.id, mission_vector(m, store.lexicon));
        json out = model;
        out["silhouette"] = mean_silhouette(vectors, model);
        print(out);
      } else {
        print(build_knowledge_base(store, model));
      }
      return kExitOk;
    }
    if (*round) {
      if (*roundCreate) print(service.create_round());
      if (*roundList) print(service.list_rounds());
      if (*roundShow) print(service.get_round(roundId));
      if (*roundPublish) print(service.publish(roundId));
      if (*roundOverride) {
        if (overrideMission.empty() && !overrideClear) throw UsageError("override needs --mission or --clear");
        json body = {{"studentId", overrideStudent}, {"missionId", nullptr}};
        if (!overrideClear) body["missionId"] = overrideMission;
        print(service.set_override(roundId, body));
      }
      return kExitOk;
    }
    if (*match) {
      if (matchMission.empty() == matchStudent.empty()) throw UsageError("match needs exactly one of --mission or --student");
      const std::string id = matchRound.empty() ? latest_round(service) : matchRound;
      print(matchMission.empty() ? service.student_missions(id, matchStudent, matchLimit)
                                 : service.candidates(id, matchMission, matchLimit));
      return kExitOk;
    }
    if (*assign) {
      const std::string id = assignRound.empty() ? latest_round(service) : assignRound;
      const Config cfg = service.data().load_config();
      json body = json::object();
      if (assignSeed || assignPop || assignGens) {
        GaParams ga = cfg.gaParams;
        if (assignSeed) ga.seed = *assignSeed;
        if (assignPop) ga.populationSize = *assignPop;
        if (assignGens) ga.generations = *assignGens;
        body["gaParams"] = ga;
      }
      if (!assignWeights.empty()) {
        const std::vector<double> w = parse_numbers(assignWeights, 4, "--weights");
        ObjectiveWeights ow = cfg.objectiveWeights;
        ow.wMatch = w[0];
        ow.wInterest = w[1];
        ow.wUnassigned = w[2];
        ow.penalty = w[3];
        body["weights"] = ow;
      }
      if (!assignMatchWeights.empty()) {
        const std::vector<double> w = parse_numbers(assignMatchWeights, 3, "--match-weights");
        body["matchWeights"] = MatchWeights{w[0], w[1], w[2]};
      }
      print(service.assign(id, body));
      return kExitOk;
    }
    if (*serve) {
      const Config cfg = service.data().load_config();
      HttpServer server(service);
      const std::string host = serveHost.value_or(cfg.listen.host);
      const int port = server.bind(host, servePort.value_or(cfg.listen.port));
      if (port < 0) throw std::runtime_error("cannot listen on " + host);
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cerr << "listening on http://" << host << ":" << port << "/v1/\n";
      server.listen_after_bind();
      g_server = nullptr;
      return kExitOk;
    }
    if (*exportTriples) {
      const std::string text = service.export_triples();
      if (triplesOut.empty()) std::cout << text;
      else write_file_atomic(triplesOut, text);
      return kExitOk;
    }
    if (*importTriples) {
      print(service.import_triples(read_file(triplesIn)));
      return kExitOk;
    }
    if (*config) {
      if (*configShow) print(service.get_config());
      if (*configSet) print(service.put_config(json::parse(read_file(configFile))));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (...) {
    const ApiResponse r = response_for_current_exception();
    std::cerr << dump_json(r.body);
    return kExitFailure;
  }
  return kExitUsage;
}
