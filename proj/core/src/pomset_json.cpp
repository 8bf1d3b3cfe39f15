#include "pomlog/pomset_json.hpp"

#include <json.hpp>

namespace pomlog {

using nlohmann::json;

RawPomset raw_pomset_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  try {
    RawPomset raw;
    if (!doc.is_object() || !doc.contains("events"))
      throw ValidationError("pomset JSON needs an \"events\" array");
    for (const auto& ev : doc.at("events"))
      raw.events.push_back({ev.at("id").get<std::string>(), ev.at("label").get<std::string>()});
    auto pairs = [&](const char* key, auto& out) {
      if (!doc.contains(key)) return;
      for (const auto& pr : doc.at(key)) {
        if (!pr.is_array() || pr.size() != 2)
          throw ValidationError(std::string("\"") + key + "\" entries must be pairs");
        out.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
      }
    };
    pairs("precedence", raw.precedence);
    pairs("event_order", raw.event_order);
    if (doc.contains("start")) raw.start = doc.at("start").get<std::vector<std::string>>();
    if (doc.contains("term")) raw.term = doc.at("term").get<std::vector<std::string>>();
    return raw;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad pomset JSON: ") + e.what());
  }
}

Pomset pomset_from_json(std::string_view text) { return validate(raw_pomset_from_json(text)); }

std::string to_json(const Pomset& p, int indent) {
  RawPomset raw = p.to_raw();
  json doc;
  doc["events"] = json::array();
  for (const auto& ev : raw.events) doc["events"].push_back({{"id", ev.id}, {"label", ev.label}});
  doc["precedence"] = json::array();
  for (const auto& [x, y] : raw.precedence) doc["precedence"].push_back({x, y});
  doc["event_order"] = json::array();
  for (const auto& [x, y] : raw.event_order) doc["event_order"].push_back({x, y});
  doc["start"] = raw.start;
  doc["term"] = raw.term;
  return doc.dump(indent);
}

}  // namespace pomlog
