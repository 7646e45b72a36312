#include "mbposet/io.hpp"

#include "mbposet/error.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace mbposet {
namespace {

Error parse_error(std::size_t line, const std::string& message) {
  return Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> tokens_of(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

Poset parse_poset_document(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("structured poset: ") + e.what());
  }
  try {
    std::vector<std::string> elements = doc.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> relations;
    if (doc.contains("covers"))
      for (const auto& c : doc.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw Error(ErrorCode::ParseError, "structured poset: a cover needs two entries");
        relations.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
      }
    return Poset::build(std::move(elements), relations);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("structured poset: ") + e.what());
  }
}

}  // namespace

Poset parse_poset(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_poset_document(text);

  std::vector<std::string> elements;
  std::unordered_set<std::string> seen;
  auto declare = [&](const std::string& name) {
    if (seen.insert(name).second) elements.push_back(name);
  };
  std::vector<std::pair<std::string, std::string>> relations;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto raw = tokens_of(line);
    // Split glued forms such as "a<b".
    std::vector<std::string> t;
    for (const auto& tok : raw) {
      std::size_t start = 0;
      for (std::size_t i = 0; i <= tok.size(); ++i)
        if (i == tok.size() || tok[i] == '<') {
          if (i > start) t.push_back(tok.substr(start, i - start));
          if (i < tok.size()) t.push_back("<");
          start = i + 1;
        }
    }
    if (t.empty()) continue;
    if (t.size() == 1 && t[0] != "<") {
      declare(t[0]);
    } else if (t.size() == 3 && t[1] == "<" && t[0] != "<" && t[2] != "<") {
      declare(t[0]);
      declare(t[2]);
      relations.emplace_back(t[0], t[2]);
    } else {
      throw parse_error(line_no, "expected `w < x` or a single element name");
    }
  }
  return Poset::build(std::move(elements), relations);
}

std::string serialize_poset(const Poset& poset) {
  // Every element in declared order, then the covers.
  std::string out;
  for (const auto& name : poset.names()) out += name + "\n";
  for (const auto& [w, x] : poset.cover_list()) out += poset.name(w) + " < " + poset.name(x) + "\n";
  return out;
}

std::string serialize_poset_document(const Poset& poset) {
  nlohmann::json doc;
  doc["elements"] = poset.names();
  doc["covers"] = nlohmann::json::array();
  for (const auto& [w, x] : poset.cover_list()) doc["covers"].push_back({poset.name(w), poset.name(x)});
  return doc.dump(2) + "\n";
}

std::vector<std::pair<std::string, std::string>> parse_matching_pairs(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = tokens_of(line);
    if (t.empty()) continue;
    if (t.size() != 2) throw parse_error(line_no, "expected `x y`");
    pairs.emplace_back(t[0], t[1]);
  }
  return pairs;
}

Matching parse_matching(const Poset& poset, std::string_view text) {
  return Matching::validate_named(poset, parse_matching_pairs(text));
}

std::string serialize_matching(const Poset& poset, const Matching& matching) {
  std::string out;
  for (const auto& [x, y] : matching.pairs()) out += poset.name(x) + " " + poset.name(y) + "\n";
  return out;
}

Rational parse_rational(std::string_view text) {
  auto is_integer = [](std::string_view s, bool allow_sign) {
    std::size_t i = allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer(num, true) || !is_integer(den, false))
    throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer p(n), q{std::string(den)};
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string format_rational(const Rational& value) {
  const Integer& q = boost::multiprecision::denominator(value);
  const Integer& p = boost::multiprecision::numerator(value);
  return q == 1 ? p.str() : p.str() + "/" + q.str();
}

std::vector<Rational> parse_function(const Poset& poset, std::string_view text) {
  std::vector<std::optional<Rational>> values(poset.size());
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = tokens_of(line);
    if (t.empty()) continue;
    if (t.size() != 2) throw parse_error(line_no, "expected `element value`");
    auto e = poset.find(t[0]);
    if (!e) throw parse_error(line_no, "unknown element '" + t[0] + "'");
    if (values[*e]) throw parse_error(line_no, "second value for '" + t[0] + "'");
    try {
      values[*e] = parse_rational(t[1]);
    } catch (const Error& err) {
      throw parse_error(line_no, err.detail());
    }
  }
  std::vector<Rational> out;
  for (Element e = 0; e < poset.size(); ++e) {
    if (!values[e]) throw Error(ErrorCode::ParseError, "no value for element '" + poset.name(e) + "'");
    out.push_back(*values[e]);
  }
  return out;
}

std::string serialize_function(const Poset& poset, const std::vector<Rational>& values) {
  std::string out;
  for (Element e = 0; e < poset.size(); ++e) out += poset.name(e) + " " + format_rational(values.at(e)) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace mbposet
