#include "mbposet/homology.hpp"

#include "mbposet/error.hpp"

#include <algorithm>
#include <set>

namespace mbposet {
namespace {

// Chain complex of the simplices of `complex` accepted by `keep`, with faces
// outside it dropped (the quotient by the rejected subcomplex).
template <class Keep>
ChainComplex quotient_chain_complex(const SimplicialComplex& complex, Keep keep) {
  const int dim = complex.dimension();
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<std::size_t>> kept;       // kept[d]: indices into simplices(d)
  std::vector<std::vector<long>> position;          // position[d][i]: row/col or -1
  for (int d = 0; d <= dim; ++d) {
    const auto& layer = complex.simplices(static_cast<std::size_t>(d));
    std::vector<std::string> l;
    std::vector<std::size_t> k;
    std::vector<long> pos(layer.size(), -1);
    for (std::size_t i = 0; i < layer.size(); ++i)
      if (keep(layer[i])) {
        pos[i] = static_cast<long>(k.size());
        k.push_back(i);
        l.push_back(complex.label(layer[i]));
      }
    labels.push_back(std::move(l));
    kept.push_back(std::move(k));
    position.push_back(std::move(pos));
  }
  std::vector<IntegerMatrix> boundaries;
  for (int d = 1; d <= dim; ++d) {
    const auto& layer = complex.simplices(static_cast<std::size_t>(d));
    IntegerMatrix m(kept[d - 1].size(), kept[d].size());
    for (std::size_t c = 0; c < kept[d].size(); ++c) {
      const Simplex& s = layer[kept[d][c]];
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        long r = position[d - 1][*complex.index_of(face)];
        if (r >= 0) m(static_cast<std::size_t>(r), c) = (i % 2 == 0) ? 1 : -1;
      }
    }
    boundaries.push_back(std::move(m));
  }
  if (labels.empty()) labels.emplace_back();
  return ChainComplex(0, std::move(labels), std::move(boundaries));
}

}  // namespace

ChainComplex simplicial_chain_complex(const SimplicialComplex& complex, bool augmented) {
  ChainComplex plain = quotient_chain_complex(complex, [](const Simplex&) { return true; });
  if (!augmented) return plain;
  std::vector<std::vector<std::string>> labels{{"()"}};
  std::vector<IntegerMatrix> boundaries;
  const int top = complex.empty() ? -1 : plain.top_degree();
  for (int p = 0; p <= top; ++p) labels.push_back(plain.labels(p));
  if (top >= 0) {
    IntegerMatrix eps(1, plain.rank(0));
    for (std::size_t c = 0; c < plain.rank(0); ++c) eps(0, c) = 1;
    boundaries.push_back(std::move(eps));
  }
  for (int p = 1; p <= top; ++p) boundaries.push_back(plain.boundary(p));
  return ChainComplex(-1, std::move(labels), std::move(boundaries));
}

HomologySummary poset_homology(const Poset& poset, bool reduced, Coefficients coefficients) {
  if (poset.empty() && !reduced) throw Error(ErrorCode::EmptyPoset, "unreduced homology of the empty poset");
  return homology(simplicial_chain_complex(order_complex(poset), reduced), coefficients);
}

HomologySummary relative_homology(const SimplicialComplex& complex, const SimplicialComplex& sub,
                                  Coefficients coefficients) {
  std::set<Simplex> inside;
  for (int d = 0; d <= sub.dimension(); ++d)
    for (const auto& s : sub.simplices(static_cast<std::size_t>(d))) {
      Simplex mapped;
      for (const auto& name : sub.vertex_names(s)) {
        auto v = complex.vertex_index(name);
        if (!v) throw Error(ErrorCode::NotASubcomplex, "vertex '" + name + "' is not in the ambient complex");
        mapped.push_back(*v);
      }
      std::sort(mapped.begin(), mapped.end());
      if (!complex.contains(mapped))
        throw Error(ErrorCode::NotASubcomplex, "simplex " + sub.label(s) + " is not in the ambient complex");
      inside.insert(std::move(mapped));
    }
  return homology(quotient_chain_complex(complex, [&](const Simplex& s) { return !inside.count(s); }), coefficients);
}

HomologySummary relative_poset_homology(const Poset& poset, std::span<const Element> subset,
                                        Coefficients coefficients) {
  const SimplicialComplex k = order_complex(poset);
  std::vector<bool> in_subset(poset.size(), false);
  for (Element e : subset) in_subset.at(e) = true;
  // Vertex i of K(X) is the i-th element of the linear extension.
  const std::vector<Element> order = poset.linear_extension();
  auto in_sub = [&](const Simplex& s) {
    for (auto v : s)
      if (!in_subset[order[v]]) return false;
    return true;
  };
  return homology(quotient_chain_complex(k, [&](const Simplex& s) { return !in_sub(s); }), coefficients);
}

bool is_acyclic(const Poset& poset) {
  if (poset.empty()) return false;
  return poset_homology(poset, true).is_trivial();
}

}  // namespace mbposet
