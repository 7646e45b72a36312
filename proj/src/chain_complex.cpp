#include "mbposet/chain_complex.hpp"

#include "mbposet/error.hpp"
#include "mbposet/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbposet {

ChainComplex::ChainComplex(int lowest_degree, std::vector<std::vector<std::string>> labels,
                           std::vector<IntegerMatrix> boundaries)
    : lowest_(lowest_degree), labels_(std::move(labels)), boundaries_(std::move(boundaries)) {
  if (labels_.empty()) {
    if (!boundaries_.empty()) throw std::invalid_argument("boundaries without chain groups");
    return;
  }
  if (boundaries_.size() + 1 != labels_.size())
    throw std::invalid_argument("need exactly one boundary matrix between consecutive degrees");
  for (std::size_t i = 0; i < boundaries_.size(); ++i) {
    const auto& d = boundaries_[i];
    if (d.rows() != labels_[i].size() || d.cols() != labels_[i + 1].size())
      throw std::invalid_argument("boundary matrix shape does not match chain group ranks");
  }
}

std::size_t ChainComplex::rank(int p) const {
  if (p < lowest_ || p > top_degree()) return 0;
  return labels_[static_cast<std::size_t>(p - lowest_)].size();
}

std::size_t ChainComplex::total_rank() const {
  std::size_t total = 0;
  for (const auto& l : labels_) total += l.size();
  return total;
}

const std::vector<std::string>& ChainComplex::labels(int p) const {
  static const std::vector<std::string> none;
  if (p < lowest_ || p > top_degree()) return none;
  return labels_[static_cast<std::size_t>(p - lowest_)];
}

IntegerMatrix ChainComplex::boundary(int p) const {
  if (p > lowest_ && p <= top_degree()) return boundaries_[static_cast<std::size_t>(p - lowest_ - 1)];
  return IntegerMatrix(rank(p - 1), rank(p));
}

bool ChainComplex::squares_to_zero() const {
  for (int p = lowest_ + 2; p <= top_degree(); ++p)
    if (!(boundary(p - 1) * boundary(p)).is_zero()) return false;
  return true;
}

std::size_t HomologySummary::betti_at(int k) const {
  if (k < lowest_degree || k > top_degree()) return 0;
  return betti[static_cast<std::size_t>(k - lowest_degree)];
}

const std::vector<Integer>& HomologySummary::torsion_at(int k) const {
  static const std::vector<Integer> none;
  if (k < lowest_degree || k > top_degree()) return none;
  return torsion[static_cast<std::size_t>(k - lowest_degree)];
}

bool HomologySummary::is_trivial() const {
  for (std::size_t i = 0; i < betti.size(); ++i)
    if (betti[i] != 0 || !torsion[i].empty()) return false;
  return true;
}

bool operator==(const HomologySummary& a, const HomologySummary& b) {
  int lo = std::min(a.lowest_degree, b.lowest_degree);
  int hi = std::max(a.top_degree(), b.top_degree());
  for (int k = lo; k <= hi; ++k)
    if (a.betti_at(k) != b.betti_at(k) || a.torsion_at(k) != b.torsion_at(k)) return false;
  return true;
}

HomologySummary homology(const ChainComplex& complex, Coefficients coefficients) {
  if (!complex.squares_to_zero()) throw Error(ErrorCode::NotAChainComplex, "boundary composed with boundary is nonzero");
  HomologySummary out;
  out.lowest_degree = complex.lowest_degree();
  const int lo = complex.lowest_degree();
  const int hi = complex.top_degree();
  if (hi < lo) return out;

  // Invariant factors of d_p for p in [lo, hi + 1].
  std::vector<std::vector<Integer>> factors;
  std::vector<std::size_t> ranks;
  for (int p = lo; p <= hi + 1; ++p) {
    IntegerMatrix d = complex.boundary(p);
    if (d.empty()) {
      factors.emplace_back();
      ranks.push_back(0);
    } else if (coefficients == Coefficients::Integers) {
      factors.push_back(invariant_factors(d));
      ranks.push_back(factors.back().size());
    } else {
      factors.emplace_back();
      ranks.push_back(rational_rank(d));
    }
  }
  for (int p = lo; p <= hi; ++p) {
    auto i = static_cast<std::size_t>(p - lo);
    out.betti.push_back(complex.rank(p) - ranks[i] - ranks[i + 1]);
    std::vector<Integer> torsion;
    for (const auto& f : factors[i + 1])
      if (f > 1) torsion.push_back(f);
    out.torsion.push_back(std::move(torsion));
  }
  return out;
}

bool is_chain_map(const ChainComplex& source, const ChainComplex& target, const ChainMap& map) {
  const int lo = source.lowest_degree();
  const int hi = source.top_degree();
  if (map.size() != static_cast<std::size_t>(std::max(0, hi - lo + 1))) return false;
  auto f = [&](int p) -> IntegerMatrix {
    if (p < lo || p > hi) return IntegerMatrix(target.rank(p), source.rank(p));
    return map[static_cast<std::size_t>(p - lo)];
  };
  for (int p = lo; p <= hi; ++p) {
    const auto& m = map[static_cast<std::size_t>(p - lo)];
    if (m.rows() != target.rank(p) || m.cols() != source.rank(p)) return false;
  }
  for (int p = lo; p <= hi + 1; ++p)
    if (!(target.boundary(p) * f(p) == f(p - 1) * source.boundary(p))) return false;
  return true;
}

ChainComplex mapping_cone(const ChainComplex& source, const ChainComplex& target, const ChainMap& map) {
  if (!is_chain_map(source, target, map)) throw std::invalid_argument("mapping cone of a non chain map");
  const int lo = std::min(source.lowest_degree() + 1, target.lowest_degree());
  const int hi = std::max(source.top_degree() + 1, target.top_degree());
  auto f = [&](int p) -> IntegerMatrix {
    if (p < source.lowest_degree() || p > source.top_degree()) return IntegerMatrix(target.rank(p), source.rank(p));
    return map[static_cast<std::size_t>(p - source.lowest_degree())];
  };
  std::vector<std::vector<std::string>> labels;
  for (int k = lo; k <= hi; ++k) {
    std::vector<std::string> l;
    for (const auto& s : source.labels(k - 1)) l.push_back("s:" + s);
    for (const auto& t : target.labels(k)) l.push_back("t:" + t);
    labels.push_back(std::move(l));
  }
  std::vector<IntegerMatrix> boundaries;
  for (int k = lo + 1; k <= hi; ++k) {
    const std::size_t a_in = source.rank(k - 1), b_in = target.rank(k);
    const std::size_t a_out = source.rank(k - 2), b_out = target.rank(k - 1);
    IntegerMatrix d(a_out + b_out, a_in + b_in);
    IntegerMatrix da = source.boundary(k - 1);
    IntegerMatrix db = target.boundary(k);
    IntegerMatrix fk = f(k - 1);
    for (std::size_t r = 0; r < a_out; ++r)
      for (std::size_t c = 0; c < a_in; ++c) d(r, c) = -da(r, c);
    for (std::size_t r = 0; r < b_out; ++r) {
      for (std::size_t c = 0; c < a_in; ++c) d(a_out + r, c) = fk(r, c);
      for (std::size_t c = 0; c < b_in; ++c) d(a_out + r, a_in + c) = db(r, c);
    }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(lo, std::move(labels), std::move(boundaries));
}

bool is_quasi_isomorphism(const ChainComplex& source, const ChainComplex& target, const ChainMap& map) {
  if (!is_chain_map(source, target, map)) return false;
  return homology(mapping_cone(source, target, map)).is_trivial();
}

}  // namespace mbposet
