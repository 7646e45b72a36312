#include "mbposet/error.hpp"
#include "mbposet/homology.hpp"
#include "mbposet/morse_bott.hpp"
#include "mbposet/random.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "searches.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mbposet;

namespace {

std::vector<Element> named(const Poset& x, std::initializer_list<const char*> names) {
  std::vector<Element> out;
  for (const char* n : names) out.push_back(x.at(n));
  std::sort(out.begin(), out.end());
  return out;
}

Rational half(long long twice) { return Rational(twice) / 2; }

ErrorCode error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("morse functions on the triangle boundary") {
  const Poset x = fixtures::t3();
  const auto degree = fixtures::degree_function(x);
  const MorseVerdict d = is_morse_function(x, degree);
  CHECK(d.morse);
  CHECK(d.critical.size() == 6);
  CHECK(morse_function_to_matching(x, degree).empty());

  const MorseBottFunction f = integrate_matching(x, fixtures::m1(x));
  const MorseVerdict v = is_morse_function(x, f.values);
  CHECK(v.morse);
  CHECK(v.critical == named(x, {"v3", "e13"}));
  CHECK(morse_function_to_matching(x, f.values).pairs() == fixtures::m1(x).pairs());

  const std::vector<Rational> flat(6, Rational(1));
  CHECK_FALSE(is_morse_function(x, flat).morse);
  CHECK(error_of([&] { morse_function_to_matching(x, flat); }) == ErrorCode::NotMorse);
  CHECK(error_of([&] { morse_function_to_matching(x, integrate_matching(x, fixtures::m2(x)).values); }) ==
        ErrorCode::NotMorse);
}

TEST_CASE("integration on the triangle boundary") {
  const Poset x = fixtures::t3();
  const MorseBottFunction f1 = integrate_matching(x, fixtures::m1(x));
  CHECK(f1(x.at("e13")) == 6);
  CHECK(f1(x.at("v1")) == 5);
  CHECK(f1(x.at("e12")) == 4);
  CHECK(f1(x.at("v2")) == 3);
  CHECK(f1(x.at("e23")) == 2);
  CHECK(f1(x.at("v3")) == 1);
  CHECK(critical_values(x, f1) == std::vector<Rational>{1, 6});

  const MorseBottFunction f2 = integrate_matching(x, fixtures::m2(x));
  for (const Rational& value : f2.values) CHECK(value == 1);
  CHECK(critical_values(x, f2) == std::vector<Rational>{1});

  const MorseBottFunction f0 = integrate_matching(x, Matching::validate(x, {}));
  CHECK_FALSE(oracles::integration_conditions(x, Matching::validate(x, {}), f0.values).has_value());

  const Poset not_graded = Poset::build({"a", "b", "c", "e", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "e"}, {"c", "d"}, {"e", "d"}});
  CHECK(error_of([&] { integrate_matching(not_graded, Matching::validate(not_graded, {})); }) == ErrorCode::NotGraded);
}

TEST_CASE("sublevels and class boundaries") {
  const Poset x = fixtures::t3();
  const MorseBottFunction f = integrate_matching(x, fixtures::m1(x));
  CHECK(sublevel_elements(x, f, 1) == named(x, {"v3"}));
  CHECK(sublevel_elements(x, f, 2) == named(x, {"v2", "v3", "e23"}));
  CHECK(sublevel_elements(x, f, 6).size() == 6);
  CHECK(sublevel_elements(x, f, 0).empty());
  CHECK(sublevel(x, f, 2).size() == 3);

  CHECK(class_of(x, fixtures::m2(x), x.at("v1")).size() == 6);
  CHECK(boundary_of_class(x, class_of(x, fixtures::m2(x), x.at("v1"))).empty());
  CHECK(boundary_of_class(x, {x.at("e13")}) == named(x, {"v1", "v3"}));
  CHECK(class_of(x, fixtures::m1(x), x.at("v1")) == std::vector<Element>{x.at("v1")});
}

TEST_CASE("class boundaries on two triangles sharing an edge") {
  const Poset x = fixtures::face(fixtures::two_triangles());
  // Orbit around the boundary of 1|2|3.
  const Matching m = Matching::validate_named(x, {{"1", "1|2"}, {"2", "2|3"}, {"3", "1|3"}, {"2|4", "2|3|4"}});
  const auto cls = class_of(x, m, x.at("1"));
  CHECK(cls == named(x, {"1", "2", "3", "1|2", "1|3", "2|3"}));
  CHECK(boundary_of_class(x, cls).empty());
  const auto top = class_of(x, m, x.at("2|3|4"));
  CHECK(top == named(x, {"2|3|4"}));
  CHECK(boundary_of_class(x, top) == named(x, {"2|3", "2|4", "3|4"}));
}

TEST_CASE("collapse and attachment on the triangle boundary") {
  const Poset x = fixtures::t3();
  const MorseBottFunction f1 = integrate_matching(x, fixtures::m1(x));
  CHECK(verify_collapse(x, f1, 2, 5));
  CHECK(verify_collapse(x, f1, -3, -1));
  CHECK(error_of([&] { verify_collapse(x, f1, half(1), half(3)); }) == ErrorCode::CriticalValueInInterval);

  const AttachmentReport top = verify_attachment(x, f1, half(11), half(13));
  CHECK(top.holds());
  CHECK(top.critical_value == 6);
  CHECK(top.added == named(x, {"e13"}));
  CHECK(top.boundary == named(x, {"v1", "v3"}));

  const MorseBottFunction f2 = integrate_matching(x, fixtures::m2(x));
  const AttachmentReport orbit = verify_attachment(x, f2, half(1), half(3));
  CHECK(orbit.holds());
  CHECK(orbit.added.size() == 6);
  CHECK(orbit.boundary.empty());
  CHECK(sublevel_elements(x, f2, half(1)).empty());

  CHECK(error_of([&] { verify_attachment(x, f1, 0, 7); }) == ErrorCode::WrongCriticalCount);
  CHECK(error_of([&] { verify_attachment(x, f1, 2, 5); }) == ErrorCode::WrongCriticalCount);

  for (const MorseBottFunction& f : {f1, f2})
    for (const IntervalCheck& step : filtration_sweep(x, f)) CHECK(step.passed);
}

TEST_CASE("externally supplied morse function") {
  const Poset x = fixtures::t3();
  MorseBottFunction f{fixtures::degree_function(x), std::nullopt};
  CHECK(governing_matching(x, f).empty());
  CHECK(critical_values(x, f) == std::vector<Rational>{0, 1});
  const auto sweep = filtration_sweep(x, f);
  CHECK(std::count_if(sweep.begin(), sweep.end(), [](const IntervalCheck& c) { return c.critical; }) == 2);
  for (const IntervalCheck& step : sweep) CHECK(step.passed);
}

TEST_CASE("integration conditions on random graded posets") {
  Xorshift64Star rng(53);
  std::size_t recurrent = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const Poset x = random_graded_poset(rng, 12);
    const Matching m = random_matching(rng, x, 30 + rng.uniform(70));
    const MorseBottFunction f = integrate_matching(x, m);
    const auto failure = oracles::integration_conditions(x, m, f.values);
    CHECK_MESSAGE(!failure.has_value(), *failure);
    recurrent += !basic_sets(x, m).orbit_classes().empty();
    if (is_morse_matching(x, m)) {
      CHECK(is_morse_function(x, f.values).morse);
      CHECK(morse_function_to_matching(x, f.values).pairs() == m.pairs());
    }
    // Sublevels grow with the level and are down-closed.
    std::vector<Element> previous;
    for (long long a = 0; a <= static_cast<long long>(x.size()) + 1; ++a) {
      const auto level = sublevel_elements(x, f, a);
      CHECK(std::includes(level.begin(), level.end(), previous.begin(), previous.end()));
      CHECK(x.down_closure(level) == level);
      previous = level;
    }
  }
  CHECK(recurrent > 20);
}

TEST_CASE("filtration sweeps on morse-smale face posets") {
  Xorshift64Star rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    const searches::MorseSmaleFixture fx = searches::random_morse_smale_fixture(rng);
    const MorseBottFunction f = integrate_matching(fx.poset, fx.matching);
    const auto sweep = filtration_sweep(fx.poset, f);
    std::size_t critical = 0;
    for (const IntervalCheck& step : sweep) {
      CHECK(step.passed);
      critical += step.critical;
      if (!step.critical) {
        // Same statement through the library's relative homology of the pair.
        const auto big = sublevel_elements(fx.poset, f, step.b);
        const Poset xb = fx.poset.induced(big);
        std::vector<Element> small;
        for (Element e : sublevel_elements(fx.poset, f, step.a))
          small.push_back(*xb.find(fx.poset.name(e)));
        if (!xb.empty()) CHECK(relative_poset_homology(xb, small).is_trivial());
      }
    }
    CHECK(critical == critical_values(fx.poset, f).size());
  }
}
