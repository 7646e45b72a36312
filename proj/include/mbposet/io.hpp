#pragma once

#include "mbposet/matching.hpp"
#include "mbposet/morse_bott.hpp"
#include "mbposet/poset.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mbposet {

/// Text format: one `w < x` per line, a bare identifier declares an element,
/// '#' starts a comment. A document starting with '{' is read as the
/// structured form {"elements": [...], "covers": [[w, x], ...]}.
/// Elements keep their order of first appearance. Throws ParseError or the
/// construction errors of Poset::build.
Poset parse_poset(std::string_view text);
std::string serialize_poset(const Poset& poset);
std::string serialize_poset_document(const Poset& poset);

/// One `x y` pair per line.
std::vector<std::pair<std::string, std::string>> parse_matching_pairs(std::string_view text);
Matching parse_matching(const Poset& poset, std::string_view text);
std::string serialize_matching(const Poset& poset, const Matching& matching);

/// `p/q` or an integer. Throws ParseError.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);

/// Lines `element value`; every element needs exactly one value.
std::vector<Rational> parse_function(const Poset& poset, std::string_view text);
std::string serialize_function(const Poset& poset, const std::vector<Rational>& values);

std::string read_file(const std::string& path);

}  // namespace mbposet
