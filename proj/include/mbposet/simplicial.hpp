#pragma once

#include "mbposet/poset.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mbposet {

/// Vertex positions in increasing order. The vertex order of the owning
/// complex fixes the orientation used by boundary operators.
using Simplex = std::vector<std::size_t>;

/// Finite abstract simplicial complex, closed under faces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// `vertices` gives the vertex order; `facets` index into it. Every vertex
  /// is a simplex even when it lies in no listed facet.
  static SimplicialComplex from_facets(std::vector<std::string> vertices, const std::vector<Simplex>& facets);

  /// Vertices are ordered by natural_less over their names.
  static SimplicialComplex from_named_facets(const std::vector<std::vector<std::string>>& facets);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  std::optional<std::size_t> vertex_index(std::string_view name) const;
  bool empty() const noexcept { return by_dim_.empty(); }
  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }

  /// k-simplices in lexicographic order of their vertex positions.
  const std::vector<Simplex>& simplices(std::size_t k) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  std::vector<Simplex> maximal_simplices() const;
  std::vector<std::size_t> f_vector() const;
  std::size_t simplex_count() const;

  std::vector<std::string> vertex_names(const Simplex& s) const;
  /// Vertex names joined by '|', e.g. "1|2|3".
  std::string label(const Simplex& s) const;

 private:
  std::vector<std::string> vertices_;
  std::map<std::string, std::size_t, std::less<>> vertex_index_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

/// Integer-aware ordering: "2" < "10", numbers sort before other names.
bool natural_less(std::string_view a, std::string_view b);

/// One maximal simplex per nonempty line, vertices separated by whitespace;
/// '#' starts a comment. Throws EmptyComplex or MalformedLine.
SimplicialComplex parse_simplicial_complex(std::string_view text);
/// Maximal simplices, one per line, in lexicographic order.
std::string serialize_simplicial_complex(const SimplicialComplex& complex);

/// Face poset Δ(K): simplices ordered by inclusion, named by label(); degree = dimension.
GradedPoset face_poset(const SimplicialComplex& complex);

/// Order complex K(X): chains of X. Vertices are ordered along
/// Poset::linear_extension(), so every simplex lists its chain bottom to top.
SimplicialComplex order_complex(const Poset& poset);

/// Δ(K(X)).
Poset subdivision(const Poset& poset);

}  // namespace mbposet
