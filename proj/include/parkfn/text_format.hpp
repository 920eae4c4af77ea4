#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parkfn/permutation.hpp"
#include "parkfn/simulator.hpp"
#include "parkfn/size_profile.hpp"

namespace parkfn {

// Malformed user text; the message names the offending token.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Integers: "3,1,2" (any size) or compact single digits "312".
std::vector<int> parse_int_sequence(std::string_view text);
Permutation parse_permutation(std::string_view text);

// "{2},{2,3},{1,2,3}": one brace group per car, n = number of groups.
std::vector<std::vector<int>> parse_set_groups(std::string_view text);
SetFamily parse_set_family(std::string_view text);
// "(2,1),(2,1)": one parenthesized preference list per car.
OrderedFamily parse_ordered_family(std::string_view text);

// {"n": 3, "allowed": [[1,2],[3],[1,2,3]]}
SizeProfile parse_profile_json(std::string_view text);
std::string profile_to_json(const SizeProfile& profile);

std::string join(const std::vector<int>& values, char sep = ',');

}  // namespace parkfn
