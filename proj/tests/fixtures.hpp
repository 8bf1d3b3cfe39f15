#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "pomlog/decomposition.hpp"
#include "pomlog/pomset.hpp"
#include "pomlog/pomset_json.hpp"

namespace fixtures {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline pomlog::RawPomset running_example_raw() {
  pomlog::RawPomset raw;
  raw.events = {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}};
  raw.precedence = {{"b", "d"}, {"a", "c"}, {"b", "c"}};
  raw.event_order = {{"a", "b"}, {"a", "d"}, {"c", "d"}};
  raw.start = {"b"};
  raw.term = {"d"};
  return raw;
}

inline pomlog::Pomset running_example() { return pomlog::validate(running_example_raw()); }

inline const char* const kRunningSparse = "[a*,*b*].[*a*,*b].[*a*,d*].[*a,*d*].[c*,*d*].[*c,*d*]";
inline const char* const kRunningConclists = "(b | a b | a | a d | d | c d | d)";

inline pomlog::Pomset from_st(const std::string& text) {
  return pomlog::glue_sequence(pomlog::parse_st_sequence(text));
}

/// •a• ⇝ a
inline pomlog::Pomset remark_first() { return from_st("[*a*,a*].[*a*,*a]"); }
/// •a ⇝ a•
inline pomlog::Pomset remark_second() { return from_st("[*a*,a*].[*a,*a*]"); }

}  // namespace fixtures
