#include <doctest.h>

#include "helpers.hpp"

using namespace sally;
using testutil::family_fixture;
using testutil::poly_ring;

namespace {

std::vector<long long> values_of(const IdealHandle& ideal, int upto) {
  std::vector<long long> out;
  for (const auto& l : hilbert_samuel_values(ideal, upto)) out.push_back(l.value);
  return out;
}

}  // namespace

TEST_CASE("binomial convention") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(-1, -1) == 0);
  CHECK(binom(2, 5) == 0);
  CHECK(binom(7, 1) == 7);
}

TEST_CASE("value tables") {
  auto R = poly_ring({"x", "y"});
  CHECK(values_of(maximal_ideal(R.ring), 3) == std::vector<long long>{1, 3, 6, 10});

  auto fam = family_fixture(0, 2);
  CHECK(values_of(fam.I(), 3) == std::vector<long long>{1, 6, 15, 31});

  // ℓ(A/(m²)^{n+1}) = C(2n+3, 2).
  IdealHandle m2 = ideal_power(maximal_ideal(R.ring), 2);
  CHECK(values_of(m2, 2) == std::vector<long long>{3, 10, 21});

  CHECK_THROWS_AS(hilbert_samuel_values(unit_ideal(R.ring), 2), InputError);
}

TEST_CASE("values increase strictly in positive dimension") {
  auto fam = family_fixture(1, 2);
  auto values = values_of(fam.I(), 6);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) CHECK(values[i] < values[i + 1]);
}

TEST_CASE("coefficient fits") {
  auto R = poly_ring({"x", "y"});
  CoefficientFit regular = hilbert_coefficients(values_of(maximal_ideal(R.ring), 6), 2);
  CHECK(regular.e == std::vector<long long>{1, 0, 0});
  CHECK(regular.postulation == 0);

  auto fam = family_fixture(0, 2);
  CoefficientFit f = hilbert_coefficients(values_of(fam.I(), 8), 2);
  CHECK(f.e == std::vector<long long>{6, 8, 3});
  CHECK(f.postulation == 2);

  IdealHandle m2 = ideal_power(maximal_ideal(R.ring), 2);
  CoefficientFit g = hilbert_coefficients(values_of(m2, 6), 2);
  CHECK(g.e == std::vector<long long>{4, 1, 0});
  CHECK(g.postulation == 0);

  CHECK_THROWS_AS(hilbert_coefficients({1, 3, 6}, 2), InsufficientWindowError);
}

TEST_CASE("series numerators") {
  auto R = poly_ring({"x", "y"});
  PowerCache regular(maximal_ideal(R.ring));
  CHECK(hilbert_series_numerator(regular, 2) == std::vector<long long>{1});

  auto fam = family_fixture(0, 2);
  PowerCache fam_powers(fam.I());
  CHECK(hilbert_series_numerator(fam_powers, 2) == std::vector<long long>{1, 3, 0, 3, -1});

  PowerCache squares(ideal_power(maximal_ideal(R.ring), 2));
  CHECK(hilbert_series_numerator(squares, 2) == std::vector<long long>{3, 1});

  PowerCache capped(fam.I());
  CHECK_THROWS_AS(hilbert_series_numerator(capped, 2, 3, 3), StabilizationError);
}

TEST_CASE("coefficients from the numerator") {
  CHECK(coefficients_from_numerator({1}, 2) == std::vector<long long>{1, 0, 0});
  // h'(1) = 3 + 9 - 4 = 8, h''(1)/2 = (18 - 12)/2 = 3.
  CHECK(coefficients_from_numerator({1, 3, 0, 3, -1}, 2) == std::vector<long long>{6, 8, 3});
  CHECK(coefficients_from_numerator({3, 1}, 2) == std::vector<long long>{4, 1, 0});
  CHECK_THROWS_AS(coefficients_from_numerator({}, 2), InputError);
  CHECK_THROWS_AS(coefficients_from_numerator({1, -1}, 1), InputError);
}

TEST_CASE("two-path agreement and series consistency on the corpus") {
  struct Fixture {
    IdealHandle ideal;
    int dim;
  };
  std::vector<Fixture> corpus;
  auto R1 = poly_ring({"x"});
  auto R2 = poly_ring({"x", "y"});
  auto R3 = poly_ring({"x", "y", "z"});
  corpus.push_back({maximal_ideal(R1.ring), 1});
  corpus.push_back({maximal_ideal(R2.ring), 2});
  corpus.push_back({ideal_power(maximal_ideal(R2.ring), 2), 2});
  corpus.push_back({maximal_ideal(R3.ring), 3});
  corpus.push_back({ideal_power(maximal_ideal(R3.ring), 2), 3});
  corpus.push_back({R2.ideal({"x^3", "x^2*y", "y^3"}), 2});
  auto fam01 = family_fixture(0, 1);
  auto fam02 = family_fixture(0, 2);
  auto fam12 = family_fixture(1, 2);
  auto fam021 = family_fixture(0, 2, 1);
  corpus.push_back({fam01.I(), 1});
  corpus.push_back({fam02.I(), 2});
  corpus.push_back({fam12.I(), 2});
  corpus.push_back({fam021.I(), 2});

  for (const auto& [ideal, dim] : corpus) {
    REQUIRE(krull_dimension(ideal.ring()) == dim);
    PowerCache powers(ideal);
    HilbertData data = hilbert_data(powers, dim, dim + 5);

    // Path one (binomial fit) against path two (series derivatives).
    CHECK(coefficients_from_numerator(data.numerator, dim) == data.coefficients);

    // Expanding h/(1-z)^d reproduces the Hilbert function at every computed t.
    REQUIRE(data.hilbert_function.size() == data.values.size());
    for (std::size_t t = 0; t < data.values.size(); ++t) {
      long long h_t = data.hilbert_function[t];
      CHECK(h_t >= 0);
      long long expanded = 0;
      for (std::size_t j = 0; j < data.numerator.size(); ++j) {
        expanded += data.numerator[j] *
                    binom(static_cast<long long>(t) - static_cast<long long>(j) + dim - 1, dim - 1);
      }
      CHECK(expanded == h_t);
    }
  }
}

TEST_CASE("Northcott bound on the fixture corpus") {
  struct Pair {
    IdealHandle ideal, reduction;
    int dim;
  };
  std::vector<Pair> corpus;
  auto R2 = poly_ring({"x", "y"});
  corpus.push_back({maximal_ideal(R2.ring), maximal_ideal(R2.ring), 2});
  corpus.push_back({ideal_power(maximal_ideal(R2.ring), 2), R2.ideal({"x^2", "y^2"}), 2});
  corpus.push_back({R2.ideal({"x^3", "x^2*y", "y^3"}), R2.ideal({"x^3", "y^3"}), 2});
  auto R3 = poly_ring({"x", "y", "z"});
  corpus.push_back({ideal_power(maximal_ideal(R3.ring), 2), R3.ideal({"x^2", "y^2", "z^2"}), 3});
  auto fam02 = family_fixture(0, 2);
  corpus.push_back({fam02.I(), fam02.Q(), 2});

  for (const auto& [ideal, reduction, dim] : corpus) {
    auto values = values_of(ideal, dim + 5);
    CoefficientFit fit = hilbert_coefficients(values, dim);
    long long colength = values[0];
    CHECK(fit.e[1] >= fit.e[0] - colength);
    bool northcott_equality = fit.e[1] == fit.e[0] - colength;
    bool i2 = ideal_equal(ideal_power(ideal, 2), ideal_product(reduction, ideal));
    CHECK(northcott_equality == i2);
  }
}
