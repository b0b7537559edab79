#include "placement/triples.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "placement/store_io.hpp"
#include "placement/validate.hpp"

namespace placement {
namespace {

std::string escape_literal(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  if (!s.empty() && (s.front() == '^' || s.front() == '@')) out.push_back('\\');
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape_literal(const std::string& s, std::size_t line) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out.push_back(s[i]);
      continue;
    }
    if (++i == s.size()) throw SchemaError("triples line " + std::to_string(line) + ": dangling escape");
    switch (s[i]) {
      case '\\': out.push_back('\\'); break;
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case '^': out.push_back('^'); break;
      case '@': out.push_back('@'); break;
      default:
        throw SchemaError("triples line " + std::to_string(line) + ": bad escape \\" + s[i]);
    }
  }
  return out;
}

class Flattener {
 public:
  std::vector<std::string> lines;

  bool object(const std::string& subject, const json& obj) {
    bool any = false;
    for (auto it = obj.begin(); it != obj.end(); ++it) any |= value(subject, it.key(), *it, false);
    return any;
  }

 private:
  void emit(const std::string& s, const std::string& p, const std::string& o) {
    lines.push_back(s + '\t' + p + '\t' + o);
  }

  bool value(const std::string& subject, const std::string& pred, const json& v, bool element) {
    switch (v.type()) {
      case json::value_t::null:
        if (!element) return false;
        emit(subject, pred, "^null");
        return true;
      case json::value_t::string:
        if (!element && v.get_ref<const std::string&>().empty()) return false;
        emit(subject, pred, escape_literal(v.get<std::string>()));
        return true;
      case json::value_t::array: {
        if (element) throw std::logic_error("nested arrays are not part of the store schema");
        for (std::size_t i = 0; i < v.size(); ++i)
          value(subject, pred + "[" + std::to_string(i) + "]", v[i], true);
        return !v.empty();
      }
      case json::value_t::object: {
        std::string child = subject + "/" + pred;
        if (element) {
          auto id = v.find("id");
          if (id != v.end() && id->is_string() && !id->get_ref<const std::string&>().empty())
            child = id->get<std::string>();
        }
        Flattener nested;
        const bool any = nested.object(child, v);
        if (!any && !element) return false;
        emit(subject, pred, "@" + child);
        lines.insert(lines.end(), nested.lines.begin(), nested.lines.end());
        return true;
      }
      default:
        emit(subject, pred, "^" + v.dump());
        return true;
    }
  }
};

struct Statement {
  std::string predicate;
  std::string object;
  std::size_t line;
};

class Rebuilder {
 public:
  explicit Rebuilder(std::map<std::string, std::vector<Statement>> graph) : graph_(std::move(graph)) {}

  json build(const std::string& subject, int depth) {
    if (depth > 64) throw SchemaError("triples: nesting too deep at " + subject);
    if (!visited_.insert(subject).second)
      throw SchemaError("triples: subject " + subject + " referenced twice");
    json obj = json::object();
    auto it = graph_.find(subject);
    if (it == graph_.end()) return obj;
    for (const Statement& st : it->second) {
      json v = decode(st, depth);
      const std::string& p = st.predicate;
      const auto open = p.find('[');
      if (open != std::string::npos && p.back() == ']') {
        const std::string base = p.substr(0, open);
        std::size_t idx = 0;
        try {
          idx = std::stoul(p.substr(open + 1, p.size() - open - 2));
        } catch (const std::exception&) {
          throw SchemaError("triples line " + std::to_string(st.line) + ": bad index in " + p);
        }
        json& arr = obj[base];
        if (arr.is_null()) arr = json::array();
        if (!arr.is_array())
          throw SchemaError("triples line " + std::to_string(st.line) + ": " + base + " mixes list and value");
        if (idx > 1'000'000) throw SchemaError("triples: index too large in " + p);
        while (arr.size() <= idx) arr.push_back(json());
        if (!arr[idx].is_null())
          throw SchemaError("triples line " + std::to_string(st.line) + ": duplicate " + p);
        arr[idx] = std::move(v);
      } else {
        if (obj.contains(p))
          throw SchemaError("triples line " + std::to_string(st.line) + ": duplicate " + p);
        obj[p] = std::move(v);
      }
    }
    return obj;
  }

  void check_all_reached() const {
    for (const auto& [subject, _] : graph_)
      if (!visited_.contains(subject)) throw SchemaError("triples: unreferenced subject " + subject);
  }

 private:
  json decode(const Statement& st, int depth) {
    const std::string& o = st.object;
    if (!o.empty() && o.front() == '^') {
      json v;
      try {
        v = json::parse(o.substr(1));
      } catch (const json::parse_error&) {
        throw SchemaError("triples line " + std::to_string(st.line) + ": bad typed literal " + o);
      }
      if (v.is_structured())
        throw SchemaError("triples line " + std::to_string(st.line) + ": typed literal must be scalar");
      return v;
    }
    if (!o.empty() && o.front() == '@') return build(o.substr(1), depth + 1);
    return unescape_literal(o, st.line);
  }

  std::map<std::string, std::vector<Statement>> graph_;
  std::set<std::string> visited_;
};

}  // namespace

std::string export_triples(const InstanceStore& store) {
  ValidationReport report = validate_store(store);
  if (!report.empty()) throw ValidationError(std::move(report), "export refused: invalid store");

  Flattener f;
  f.object("store", json(store));
  std::sort(f.lines.begin(), f.lines.end());
  std::string out;
  for (const std::string& line : f.lines) {
    out += line;
    out.push_back('\n');
  }
  return out;
}

InstanceStore import_triples(const std::string& text) {
  std::map<std::string, std::vector<Statement>> graph;
  std::size_t lineNo = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineNo;
    if (line.empty()) continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos)
      throw SchemaError("triples line " + std::to_string(lineNo) + ": expected 3 tab-separated fields");
    graph[line.substr(0, t1)].push_back(
        {line.substr(t1 + 1, t2 - t1 - 1), line.substr(t2 + 1), lineNo});
  }
  if (graph.empty()) return InstanceStore{};

  Rebuilder rebuilder(std::move(graph));
  json root = rebuilder.build("store", 0);
  rebuilder.check_all_reached();
  return parse_as<InstanceStore>(root, "triples");
}

}  // namespace placement
