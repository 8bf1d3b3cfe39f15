#pragma once

#include <string>
#include <string_view>

#include "pomlog/pomset.hpp"

namespace pomlog {

/// Parses {"events":[{"id","label"}],"precedence":[[x,y]],"event_order":[[x,y]],
/// "start":[...],"term":[...]}. Missing relation/interface fields default to
/// empty. Throws ValidationError on malformed JSON.
RawPomset raw_pomset_from_json(std::string_view text);
Pomset pomset_from_json(std::string_view text);

/// Serializes with precedence generators reduced to the Hasse diagram.
std::string to_json(const Pomset& p, int indent = -1);

}  // namespace pomlog
