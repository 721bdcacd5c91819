#ifndef STOPLAT_IO_HPP
#define STOPLAT_IO_HPP

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stoplat/bits.hpp"
#include "stoplat/boundary.hpp"
#include "stoplat/errors.hpp"
#include "stoplat/ideal_family.hpp"
#include "stoplat/poset.hpp"
#include "stoplat/stop.hpp"

// Plain-text formats. Everywhere: '#' starts a comment, blank lines are
// ignored, and subsets are written "-" (empty) or "0,2,5".
//
//   poset        header "n <size>", then one "x < y" line per strict pair
//                (the writer emits only covering pairs); a file starting
//                with '{' is instead read as {"n": .., "pairs": [[x,y],..]}
//   ideal family header "n <size>", then one subset line per member
//   stop map     header "stop n=<size> base=<spec>", then "S -> T" lines
//                covering every ideal of the base exactly once; <spec> is
//                "-" (discrete), inline pairs "0<1,0<2", or a poset path
//                resolved against the stop file's directory
//   weights      one integer per line, line x = weight of element x
//   extension    one integer per line, line x = position of element x
//   graph        header "n <size>", then one "u v" line per edge

namespace stoplat {

namespace detail {

struct SourceLine {
  int number = 0;
  std::string text;
};

inline std::string trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return std::string(s.substr(first, last - first + 1));
}

inline std::vector<SourceLine> significant_lines(const std::string& content) {
  std::vector<SourceLine> lines;
  std::istringstream in(content);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string text = trim(raw);
    if (!text.empty()) lines.push_back({number, std::move(text)});
  }
  return lines;
}

inline long long parse_int(std::string_view token, const std::string& where) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(where + ": expected an integer, got '" + std::string(token) + "'");
  return value;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      return parts;
    }
    parts.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot open for writing");
  out << content;
  if (!out) throw ParseError(path + ": write failed");
}

// Expects "n <size>" with 0 <= size <= 64.
inline int parse_size_header(const SourceLine& line, const std::string& name) {
  const std::string where = name + ":" + std::to_string(line.number);
  std::istringstream in(line.text);
  std::string keyword;
  in >> keyword;
  if (keyword != "n") throw ParseError(where + ": expected header 'n <size>'");
  std::string token;
  if (!(in >> token)) throw ParseError(where + ": expected header 'n <size>'");
  const long long n = parse_int(token, where);
  if (n < 0 || n > kMaxGroundSet) throw ParseError(where + ": size out of range [0, 64]");
  std::string extra;
  if (in >> extra) throw ParseError(where + ": trailing tokens after header");
  return static_cast<int>(n);
}

}  // namespace detail

/// Parses "-" or a comma-separated element list into a subset of
/// {0,...,n-1}.
inline Subset parse_member(std::string_view text, int n, const std::string& where = "subset") {
  const std::string cleaned = detail::trim(text);
  if (cleaned.empty()) throw ParseError(where + ": empty subset field");
  if (cleaned == "-") return 0;
  Subset s = 0;
  for (const std::string& token : detail::split(cleaned, ',')) {
    const std::string element = detail::trim(token);
    const long long x = detail::parse_int(element, where);
    if (x < 0 || x >= n) throw ParseError(where + ": element " + element + " outside ground set of size " + std::to_string(n));
    s |= bit(static_cast<int>(x));
  }
  return s;
}

inline std::string format_member(Subset s) {
  if (s == 0) return "-";
  std::string out;
  for_each_bit(s, [&](int x) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  });
  return out;
}

// --- posets ------------------------------------------------------------

inline Poset parse_poset_text(const std::string& content, const std::string& name) {
  const auto lines = detail::significant_lines(content);
  if (lines.empty()) throw ParseError(name + ": empty poset file");
  const int n = detail::parse_size_header(lines.front(), name);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const std::string where = name + ":" + std::to_string(lines[k].number);
    std::istringstream in(lines[k].text);
    std::string left, rel, right, extra;
    if (!(in >> left >> rel >> right) || rel != "<" || (in >> extra))
      throw ParseError(where + ": expected 'x < y'");
    pairs.emplace_back(static_cast<int>(detail::parse_int(left, where)), static_cast<int>(detail::parse_int(right, where)));
  }
  try {
    return make_poset(n, pairs);
  } catch (const Error& e) {
    throw ParseError(name + ": " + e.what());
  }
}

inline Poset parse_poset_json(const std::string& content, const std::string& name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(content);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(name + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError(name + ": expected an object with integer field 'n'");
  const long long n = doc["n"].get<long long>();
  if (n < 0 || n > kMaxGroundSet) throw ParseError(name + ": size out of range [0, 64]");
  std::vector<std::pair<int, int>> pairs;
  if (doc.contains("pairs")) {
    if (!doc["pairs"].is_array()) throw ParseError(name + ": 'pairs' must be an array");
    for (const auto& entry : doc["pairs"]) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_number_integer())
        throw ParseError(name + ": each pair must be [x, y]");
      pairs.emplace_back(entry[0].get<int>(), entry[1].get<int>());
    }
  }
  try {
    return make_poset(static_cast<int>(n), pairs);
  } catch (const Error& e) {
    throw ParseError(name + ": " + e.what());
  }
}

inline Poset parse_poset(const std::string& content, const std::string& name) {
  const std::string body = detail::trim(content);
  if (!body.empty() && body.front() == '{') return parse_poset_json(body, name);
  return parse_poset_text(content, name);
}

inline Poset load_poset(const std::string& path) { return parse_poset(detail::read_file(path), path); }

inline std::string poset_to_text(const Poset& p) {
  std::string out = "n " + std::to_string(p.size()) + "\n";
  for (const auto& [x, y] : hasse(p)) out += std::to_string(x) + " < " + std::to_string(y) + "\n";
  return out;
}

inline void save_poset(const Poset& p, const std::string& path) { detail::write_file(path, poset_to_text(p)); }

// --- ideal families ----------------------------------------------------

inline IdealFamily parse_ideal_family(const std::string& content, const std::string& name) {
  const auto lines = detail::significant_lines(content);
  if (lines.empty()) throw ParseError(name + ": empty family file");
  const int n = detail::parse_size_header(lines.front(), name);
  std::vector<Subset> members;
  for (std::size_t k = 1; k < lines.size(); ++k)
    members.push_back(parse_member(lines[k].text, n, name + ":" + std::to_string(lines[k].number)));
  try {
    return IdealFamily(n, std::move(members));
  } catch (const Error& e) {
    throw ParseError(name + ": " + e.what());
  }
}

inline IdealFamily load_ideal_family(const std::string& path) {
  return parse_ideal_family(detail::read_file(path), path);
}

inline std::string ideal_family_to_text(const IdealFamily& f) {
  std::string out = "n " + std::to_string(f.ground_size()) + "\n";
  for (Subset s : f.members()) out += format_member(s) + "\n";
  return out;
}

inline void save_ideal_family(const IdealFamily& f, const std::string& path) {
  detail::write_file(path, ideal_family_to_text(f));
}

// --- stop maps ----------------------------------------------------------

namespace detail {

// "-", inline "0<1,0<2", or a path relative to the stop file's directory.
inline Poset parse_base_spec(const std::string& spec, int n, const std::string& stop_path, const std::string& where) {
  if (spec == "-") return Poset(n);
  if (spec.find('<') != std::string::npos) {
    std::vector<std::pair<int, int>> pairs;
    for (const std::string& token : split(spec, ',')) {
      const auto parts = split(token, '<');
      if (parts.size() != 2) throw ParseError(where + ": expected pair 'x<y', got '" + token + "'");
      pairs.emplace_back(static_cast<int>(parse_int(trim(parts[0]), where)), static_cast<int>(parse_int(trim(parts[1]), where)));
    }
    try {
      Poset base = make_poset(n, pairs);
      return base;
    } catch (const Error& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  std::filesystem::path base_path(spec);
  if (base_path.is_relative() && !stop_path.empty())
    base_path = std::filesystem::path(stop_path).parent_path() / base_path;
  Poset base = load_poset(base_path.string());
  if (base.size() != n) throw ParseError(where + ": base poset has size " + std::to_string(base.size()) + ", header says " + std::to_string(n));
  return base;
}

}  // namespace detail

inline StOpMap parse_stop_map(const std::string& content, const std::string& name) {
  const auto lines = detail::significant_lines(content);
  if (lines.empty()) throw ParseError(name + ": empty stop file");

  const std::string header_where = name + ":" + std::to_string(lines.front().number);
  std::istringstream header(lines.front().text);
  std::string keyword, n_field, base_field;
  header >> keyword >> n_field >> base_field;
  if (keyword != "stop" || n_field.rfind("n=", 0) != 0 || base_field.rfind("base=", 0) != 0)
    throw ParseError(header_where + ": expected header 'stop n=<size> base=<spec>'");
  const long long n = detail::parse_int(n_field.substr(2), header_where);
  if (n < 0 || n > kMaxGroundSet) throw ParseError(header_where + ": size out of range [0, 64]");
  const Poset base = detail::parse_base_spec(base_field.substr(5), static_cast<int>(n), name, header_where);

  std::vector<std::pair<Subset, Subset>> mappings;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const std::string where = name + ":" + std::to_string(lines[k].number);
    const auto arrow = lines[k].text.find("->");
    if (arrow == std::string::npos) throw ParseError(where + ": expected 'S -> T'");
    mappings.emplace_back(parse_member(lines[k].text.substr(0, arrow), static_cast<int>(n), where),
                          parse_member(lines[k].text.substr(arrow + 2), static_cast<int>(n), where));
  }
  try {
    return StOpMap::from_subsets(base, mappings);
  } catch (const Error& e) {
    throw ParseError(name + ": " + e.what());
  }
}

inline StOpMap load_stop_map(const std::string& path) { return parse_stop_map(detail::read_file(path), path); }

inline std::string stop_map_to_text(const StOpMap& phi) {
  std::string base_spec;
  for (const auto& [x, y] : hasse(phi.base())) {
    if (!base_spec.empty()) base_spec += ',';
    base_spec += std::to_string(x) + "<" + std::to_string(y);
  }
  if (base_spec.empty()) base_spec = "-";
  std::string out = "stop n=" + std::to_string(phi.base().size()) + " base=" + base_spec + "\n";
  const auto& domain = phi.domain().members();
  for (std::size_t i = 0; i < domain.size(); ++i)
    out += format_member(domain[i]) + " -> " + format_member(domain[phi.table()[i]]) + "\n";
  return out;
}

inline void save_stop_map(const StOpMap& phi, const std::string& path) {
  detail::write_file(path, stop_map_to_text(phi));
}

// --- weights, extensions, graphs -----------------------------------------

inline std::vector<long long> load_weights(const std::string& path) {
  std::vector<long long> weights;
  for (const auto& line : detail::significant_lines(detail::read_file(path)))
    weights.push_back(detail::parse_int(line.text, path + ":" + std::to_string(line.number)));
  return weights;
}

inline std::string weights_to_text(const std::vector<long long>& weights) {
  std::string out;
  for (long long w : weights) out += std::to_string(w) + "\n";
  return out;
}

inline TotalExtension load_total_extension(const std::string& path) {
  std::vector<int> positions;
  for (const auto& line : detail::significant_lines(detail::read_file(path)))
    positions.push_back(static_cast<int>(detail::parse_int(line.text, path + ":" + std::to_string(line.number))));
  try {
    return TotalExtension(std::move(positions));
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline std::string total_extension_to_text(const TotalExtension& tau) {
  std::string out;
  for (int x = 0; x < tau.size(); ++x) out += std::to_string(tau.at(x)) + "\n";
  return out;
}

inline Graph load_graph(const std::string& path) {
  const std::string name = path;
  const auto lines = detail::significant_lines(detail::read_file(path));
  if (lines.empty()) throw ParseError(name + ": empty graph file");
  const int n = detail::parse_size_header(lines.front(), name);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const std::string where = name + ":" + std::to_string(lines[k].number);
    std::istringstream in(lines[k].text);
    std::string left, right, extra;
    if (!(in >> left >> right) || (in >> extra)) throw ParseError(where + ": expected 'u v'");
    edges.emplace_back(static_cast<int>(detail::parse_int(left, where)), static_cast<int>(detail::parse_int(right, where)));
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const Error& e) {
    throw ParseError(name + ": " + e.what());
  }
}

}  // namespace stoplat

#endif
