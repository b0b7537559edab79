#pragma once

#include "placement/errors.hpp"
#include "placement/ontology.hpp"

namespace placement {

// Every type invariant and cross-reference of the store. Lists all
// violations; an empty report means the store is valid.
ValidationReport validate_store(const InstanceStore& store);

// The lexicon part alone (what annotation needs).
ValidationReport validate_lexicon(const Lexicon& lexicon);

// Identifier syntax shared by every entity: [A-Za-z0-9_.:-]+ and not the
// reserved word "store".
bool valid_identifier(std::string_view id);

// Strict YYYY-MM-DD with a real calendar day.
bool valid_iso_date(std::string_view date);

}  // namespace placement
