#pragma once

#include <filesystem>
#include <string>

#include "placement/json_util.hpp"
#include "placement/ontology.hpp"

namespace placement {

void to_json(json& j, const ConceptEntry& e);
void to_json(json& j, const Lexicon& l);
void to_json(json& j, const Competency& c);
void to_json(json& j, const Company& c);
void to_json(json& j, const Mission& m);
void to_json(json& j, const StudentProfile& s);
void to_json(json& j, const University& u);
void to_json(json& j, const Mark& m);
void to_json(json& j, const PastPlacement& p);
void to_json(json& j, const UniversityConstraint& c);
void to_json(json& j, const InstanceStore& s);

void read(const json& j, const std::string& path, Category& out);
void read(const json& j, const std::string& path, ConceptEntry& out);
void read(const json& j, const std::string& path, Lexicon& out);
void read(const json& j, const std::string& path, Competency& out);
void read(const json& j, const std::string& path, Company& out);
void read(const json& j, const std::string& path, Mission& out);
void read(const json& j, const std::string& path, StudentProfile& out);
void read(const json& j, const std::string& path, University& out);
void read(const json& j, const std::string& path, Mark& out);
void read(const json& j, const std::string& path, PastPlacement& out);
void read(const json& j, const std::string& path, UniversityConstraint& out);
void read(const json& j, const std::string& path, InstanceStore& out);

// Parses store.json text. Throws SchemaError on malformed documents; does
// not run invariant validation.
InstanceStore parse_store(const std::string& text);
InstanceStore load_store(const std::filesystem::path& path);

// Canonical text: two-space indent, keys sorted, trailing newline.
std::string dump_json(const json& j);

// Writes to a sibling temp file, then renames over the destination.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace placement
