#pragma once

#include "mbposet/matching.hpp"
#include "mbposet/poset.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace mbposet {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// A real-valued (here rational) function on the elements of a poset,
/// optionally with the matching whose basic sets carry its critical values.
struct MorseBottFunction {
  std::vector<Rational> values;
  std::optional<Matching> matching;

  const Rational& operator()(Element x) const { return values.at(x); }
};

struct MorseVerdict {
  bool morse = false;
  std::vector<Element> critical;
};

/// #{y ≻ x : f(x) ≥ f(y)} ≤ 1 and #{w ≺ x : f(w) ≥ f(x)} ≤ 1 for every x;
/// critical elements have both counts zero.
MorseVerdict is_morse_function(const Poset& poset, const std::vector<Rational>& values);

/// {(x, y) : x ≺ y, f(x) ≥ f(y)}. Throws NotMorse.
Matching morse_function_to_matching(const Poset& poset, const std::vector<Rational>& values);

/// Reverse topological rank of the condensation of H_M(X): constant on each
/// strongly connected component and strictly decreasing along every other arc.
/// Ties in the topological order go to the component with the smaller
/// element. Throws NotGraded.
MorseBottFunction integrate_matching(const Poset& poset, const Matching& matching);

/// The matching that determines the critical values: the stored one, or the
/// one read off a Morse function (NotMorse otherwise).
Matching governing_matching(const Poset& poset, const MorseBottFunction& f);

/// f(Λ) for every basic set Λ, sorted and deduplicated.
std::vector<Rational> critical_values(const Poset& poset, const MorseBottFunction& f);

/// X_a = ∪_{f(x) ≤ a} U_x, in declared order.
std::vector<Element> sublevel_elements(const Poset& poset, const MorseBottFunction& f, const Rational& a);
Poset sublevel(const Poset& poset, const MorseBottFunction& f, const Rational& a);

/// The basic set containing x, or {x} for a transient element.
std::vector<Element> class_of(const Poset& poset, const Matching& matching, Element x);

/// ∂[x]: elements covered by some member of the class but outside it.
std::vector<Element> boundary_of_class(const Poset& poset, const std::vector<Element>& cls);

/// H_*(K(X_b), K(X_a)) = 0. Throws CriticalValueInInterval.
bool verify_collapse(const Poset& poset, const MorseBottFunction& f, const Rational& a, const Rational& b);

struct AttachmentReport {
  Rational a;
  Rational b;
  Rational critical_value;
  std::vector<Element> cls;       // [x]
  std::vector<Element> boundary;  // ∂[x]
  std::vector<Element> added;     // X_b − X_a
  bool added_is_class = false;
  bool boundary_in_sublevel = false;
  bool class_disjoint_from_sublevel = false;

  bool holds() const { return added_is_class && boundary_in_sublevel && class_disjoint_from_sublevel; }
};

/// Checks X_b − X_a = [x], ∂[x] ⊆ X_a and [x] ∩ X_a = ∅ for the single
/// critical value in [a, b]. Throws WrongCriticalCount.
AttachmentReport verify_attachment(const Poset& poset, const MorseBottFunction& f, const Rational& a, const Rational& b);

struct IntervalCheck {
  Rational a;
  Rational b;
  bool critical = false;
  bool passed = false;
  std::optional<AttachmentReport> attachment;
};

/// Every critical value c gets the interval reaching halfway to the
/// neighbouring values of f (or ±1 at the ends); the regular intervals fill
/// the gaps between them, including one below the first and one above the last.
std::vector<IntervalCheck> filtration_sweep(const Poset& poset, const MorseBottFunction& f);

}  // namespace mbposet
