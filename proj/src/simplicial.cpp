#include "mbposet/simplicial.hpp"

#include "mbposet/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace mbposet {
namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  const bool ia = is_integer_literal(a);
  const bool ib = is_integer_literal(b);
  if (ia && ib) {
    const bool na = a[0] == '-';
    const bool nb = b[0] == '-';
    if (na != nb) return na;
    auto digits = [](std::string_view s) {
      if (s[0] == '-' || s[0] == '+') s.remove_prefix(1);
      while (s.size() > 1 && s[0] == '0') s.remove_prefix(1);
      return s;
    };
    std::string_view da = digits(a), db = digits(b);
    bool magnitude_less = da.size() != db.size() ? da.size() < db.size() : da < db;
    bool magnitude_equal = da == db;
    if (magnitude_equal) return a < b;
    return na ? !magnitude_less : magnitude_less;
  }
  if (ia != ib) return ia;
  return a < b;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertices, const std::vector<Simplex>& facets) {
  SimplicialComplex k;
  k.vertices_ = std::move(vertices);
  for (std::size_t v = 0; v < k.vertices_.size(); ++v) k.vertex_index_.emplace(k.vertices_[v], v);

  std::set<Simplex> all;
  for (std::size_t v = 0; v < k.vertices_.size(); ++v) all.insert(Simplex{v});
  for (Simplex facet : facets) {
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    if (facet.empty()) continue;
    if (facet.back() >= k.vertices_.size()) throw std::out_of_range("facet references an unknown vertex");
    if (all.count(facet)) continue;
    const std::size_t n = facet.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) face.push_back(facet[i]);
      all.insert(std::move(face));
    }
  }
  for (const auto& s : all) {
    const std::size_t d = s.size() - 1;
    if (k.by_dim_.size() <= d) {
      k.by_dim_.resize(d + 1);
      k.index_.resize(d + 1);
    }
    k.index_[d].emplace(s, k.by_dim_[d].size());
    k.by_dim_[d].push_back(s);
  }
  return k;
}

SimplicialComplex SimplicialComplex::from_named_facets(const std::vector<std::vector<std::string>>& facets) {
  std::set<std::string> names;
  for (const auto& f : facets) names.insert(f.begin(), f.end());
  std::vector<std::string> vertices(names.begin(), names.end());
  std::sort(vertices.begin(), vertices.end(), [](const std::string& a, const std::string& b) { return natural_less(a, b); });
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = i;
  std::vector<Simplex> indexed;
  for (const auto& f : facets) {
    Simplex s;
    for (const auto& v : f) s.push_back(pos.at(v));
    indexed.push_back(std::move(s));
  }
  return from_facets(std::move(vertices), indexed);
}

std::optional<std::size_t> SimplicialComplex::vertex_index(std::string_view name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<Simplex>& SimplicialComplex::simplices(std::size_t k) const {
  static const std::vector<Simplex> none;
  return k < by_dim_.size() ? by_dim_[k] : none;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > by_dim_.size()) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::set<Simplex> covered;
  for (std::size_t d = 1; d < by_dim_.size(); ++d)
    for (const auto& s : by_dim_[d])
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        covered.insert(std::move(face));
      }
  std::vector<Simplex> out;
  for (const auto& layer : by_dim_)
    for (const auto& s : layer)
      if (!covered.count(s)) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& layer : by_dim_) f.push_back(layer.size());
  return f;
}

std::size_t SimplicialComplex::simplex_count() const {
  std::size_t n = 0;
  for (const auto& layer : by_dim_) n += layer.size();
  return n;
}

std::vector<std::string> SimplicialComplex::vertex_names(const Simplex& s) const {
  std::vector<std::string> out;
  for (auto v : s) out.push_back(vertices_.at(v));
  return out;
}

std::string SimplicialComplex::label(const Simplex& s) const {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += '|';
    out += vertices_.at(s[i]);
  }
  return out;
}

SimplicialComplex parse_simplicial_complex(std::string_view text) {
  std::vector<std::vector<std::string>> facets;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> facet;
    std::set<std::string> seen;
    for (std::string t; tokens >> t;) {
      if (t.find_first_of("|<,") != std::string::npos)
        throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": invalid vertex name '" + t + "'");
      if (!seen.insert(t).second)
        throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": vertex '" + t + "' repeated");
      facet.push_back(t);
    }
    if (!facet.empty()) facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw Error(ErrorCode::EmptyComplex, "no simplices in input");
  return SimplicialComplex::from_named_facets(facets);
}

std::string serialize_simplicial_complex(const SimplicialComplex& complex) {
  std::string out;
  for (const auto& s : complex.maximal_simplices()) {
    auto names = complex.vertex_names(s);
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out += ' ';
      out += names[i];
    }
    out += '\n';
  }
  return out;
}

GradedPoset face_poset(const SimplicialComplex& complex) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relations;
  for (int d = 0; d <= complex.dimension(); ++d)
    for (const auto& s : complex.simplices(static_cast<std::size_t>(d))) {
      elements.push_back(complex.label(s));
      if (s.size() < 2) continue;
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        relations.emplace_back(complex.label(face), elements.back());
      }
    }
  return GradedPoset::require(Poset::build(std::move(elements), relations));
}

SimplicialComplex order_complex(const Poset& poset) {
  const std::vector<Element> order = poset.linear_extension();
  std::vector<std::string> vertices;
  for (Element e : order) vertices.push_back(poset.name(e));
  const std::size_t n = order.size();

  // Maximal chains by depth-first extension along the linear order.
  std::vector<Simplex> facets;
  Simplex chain;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    bool extended = false;
    for (std::size_t j = from; j < n; ++j) {
      if (!chain.empty() && !poset.less(order[chain.back()], order[j])) continue;
      chain.push_back(j);
      self(self, j + 1);
      chain.pop_back();
      extended = true;
    }
    if (!extended && !chain.empty()) facets.push_back(chain);
  };
  extend(extend, 0);
  return SimplicialComplex::from_facets(std::move(vertices), facets);
}

Poset subdivision(const Poset& poset) { return face_poset(order_complex(poset)).poset(); }

}  // namespace mbposet
