#include "parkfn/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <json.hpp>

namespace parkfn {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int_token(std::string_view token, std::string_view context) {
  token = trim(token);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("bad token '" + std::string(token) + "' in '" + std::string(context) + "'");
  }
  return value;
}

std::vector<int> parse_comma_list(std::string_view body, std::string_view context) {
  std::vector<int> out;
  if (trim(body).empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    out.push_back(parse_int_token(body.substr(start, comma - start), context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::vector<int>> parse_groups(std::string_view text, char open, char close) {
  std::vector<std::vector<int>> groups;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw ParseError("empty family");
  while (true) {
    skip_space();
    if (pos >= text.size() || text[pos] != open) {
      throw ParseError("expected '" + std::string(1, open) + "' at offset " + std::to_string(pos) +
                       " in '" + std::string(text) + "'");
    }
    std::size_t end = text.find(close, pos + 1);
    if (end == std::string_view::npos) {
      throw ParseError("unclosed '" + std::string(1, open) + "' in '" + std::string(text) + "'");
    }
    std::string_view body = text.substr(pos + 1, end - pos - 1);
    if (body.find(open) != std::string_view::npos) {
      throw ParseError("nested '" + std::string(1, open) + "' in '" + std::string(text) + "'");
    }
    auto values = parse_comma_list(body, text);
    if (values.empty()) {
      throw ParseError("empty group '" + std::string(1, open) + std::string(1, close) + "' for car " +
                       std::to_string(groups.size() + 1));
    }
    groups.push_back(std::move(values));
    pos = end + 1;
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw ParseError("unexpected '" + std::string(1, text[pos]) + "' after group " +
                       std::to_string(groups.size()));
    }
    ++pos;
  }
  return groups;
}

}  // namespace

std::vector<int> parse_int_sequence(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty sequence");
  if (body.find(',') != std::string_view::npos) return parse_comma_list(body, body);
  std::vector<int> out;
  for (char c : body) {
    if (c < '1' || c > '9') {
      throw ParseError("bad token '" + std::string(1, c) + "' in '" + std::string(body) + "'");
    }
    out.push_back(c - '0');
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  auto values = parse_int_sequence(text);
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || v > n) {
      throw ParseError("bad token '" + std::to_string(v) + "' in permutation '" + std::string(trim(text)) +
                       "': outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw ParseError("bad token '" + std::to_string(v) + "' in permutation '" + std::string(trim(text)) +
                       "': duplicate");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(values));
}

std::vector<std::vector<int>> parse_set_groups(std::string_view text) {
  auto groups = parse_groups(text, '{', '}');
  for (std::size_t car = 0; car < groups.size(); ++car) {
    std::vector<int> sorted = groups[car];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError("bad token: spot repeated in set " + std::to_string(car + 1));
    }
  }
  return groups;
}

SetFamily parse_set_family(std::string_view text) {
  auto groups = parse_set_groups(text);
  const int n = static_cast<int>(groups.size());
  if (n > kMaxSpots) throw ParseError("family has more than " + std::to_string(kMaxSpots) + " cars");
  for (std::size_t car = 0; car < groups.size(); ++car) {
    for (int s : groups[car]) {
      if (s < 1 || s > n) {
        throw ParseError("bad token '" + std::to_string(s) + "' in set " + std::to_string(car + 1) +
                         ": outside 1.." + std::to_string(n));
      }
    }
  }
  return SetFamily::from_members(groups);
}

OrderedFamily parse_ordered_family(std::string_view text) {
  auto groups = parse_groups(text, '(', ')');
  const int n = static_cast<int>(groups.size());
  if (n > kMaxSpots) throw ParseError("family has more than " + std::to_string(kMaxSpots) + " cars");
  for (std::size_t car = 0; car < groups.size(); ++car) {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int s : groups[car]) {
      if (s < 1 || s > n) {
        throw ParseError("bad token '" + std::to_string(s) + "' in list " + std::to_string(car + 1) +
                         ": outside 1.." + std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(s)]) {
        throw ParseError("bad token '" + std::to_string(s) + "' in list " + std::to_string(car + 1) +
                         ": duplicate");
      }
      seen[static_cast<std::size_t>(s)] = true;
    }
  }
  return OrderedFamily(n, std::move(groups));
}

SizeProfile parse_profile_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("profile is not valid JSON: ") + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    auto allowed = doc.at("allowed").get<std::vector<std::vector<int>>>();
    return SizeProfile(n, std::move(allowed));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("profile must look like {\"n\": int, \"allowed\": [[sizes]...]}: ") +
                     e.what());
  }
}

std::string profile_to_json(const SizeProfile& profile) {
  return nlohmann::json{{"n", profile.size()}, {"allowed", profile.entries()}}.dump();
}

std::string join(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace parkfn
