#pragma once

#include "mbposet/chain_complex.hpp"
#include "mbposet/poset.hpp"
#include "mbposet/simplicial.hpp"

#include <span>

namespace mbposet {

/// Simplicial chains with d[v0..vk] = Σ (−1)^i [v0..v̂i..vk]. With
/// `augmented`, degree −1 holds one generator and d_0 sends every vertex to it.
ChainComplex simplicial_chain_complex(const SimplicialComplex& complex, bool augmented = false);

/// Homology of the order complex. The empty poset is allowed only when
/// `reduced`, and then has H̃_{−1} = Z. Throws EmptyPoset.
HomologySummary poset_homology(const Poset& poset, bool reduced = false,
                               Coefficients coefficients = Coefficients::Integers);

/// Homology of C(K)/C(L); L is matched to K by vertex names. Throws NotASubcomplex.
HomologySummary relative_homology(const SimplicialComplex& complex, const SimplicialComplex& sub,
                                  Coefficients coefficients = Coefficients::Integers);

/// H_*(K(X), K(A)) for a subset A of X.
HomologySummary relative_poset_homology(const Poset& poset, std::span<const Element> subset,
                                        Coefficients coefficients = Coefficients::Integers);

/// Vanishing reduced homology. The empty poset is not acyclic.
bool is_acyclic(const Poset& poset);

}  // namespace mbposet
