#pragma once

#include <string>

#include "placement/ontology.hpp"

namespace placement {

// Line-oriented graph export of a valid store: one "subject\tpredicate\tobject"
// line per triple, LF-terminated, sorted bytewise.
//
// Top-level and nested entities with an identifier use it as subject; other
// nested records get a path subject such as "store/marks[3]". Ordered lists
// carry the position in the predicate ("synonyms[1]"). Objects are:
//   plain text            string literal (\\ \t \n \r escaped; a leading ^ or @ is
//                         escaped as \^ or \@)
//   ^<json scalar>        number, boolean
//   @<subject>            reference to a nested record
// Empty strings, empty lists and fully-default nested records are omitted;
// import restores them as defaults.
//
// Refuses (ValidationError) when the store is invalid.
std::string export_triples(const InstanceStore& store);

// Inverse of export_triples. Throws SchemaError on malformed input.
InstanceStore import_triples(const std::string& text);

}  // namespace placement
