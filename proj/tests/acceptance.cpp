// Acceptance suite: one pass/fail line per criterion, exit 0 only when every
// criterion holds exactly. Expected runtime: a couple of minutes.

#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "sally/family.hpp"
#include "sally/parser.hpp"

using namespace sally;

namespace {

struct Reporter {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <typename T>
  void expect_eq(const T& expected, const T& actual, const std::string& what) {
    if (!(expected == actual)) {
      std::ostringstream os;
      os << what << ": expected " << expected << ", got " << actual;
      failures.push_back(os.str());
    }
  }
  void expect_eq(const std::vector<long long>& expected, const std::vector<long long>& actual,
                 const std::string& what) {
    if (expected != actual) {
      auto dump = [](const std::vector<long long>& v) {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
        os << "]";
        return os.str();
      };
      failures.push_back(what + ": expected " + dump(expected) + ", got " + dump(actual));
    }
  }
};

struct FamilyCase {
  int m, d;
  CompiledRing compiled;
  ClassificationReport rep;
  SallyTable table;
  long long rr_gap;
  DepthProbe probe;
  bool decomposition_ok;
  int decomposition_first_failure;

  const IdealHandle& I() const { return compiled.ideals.at("I"); }
  const IdealHandle& Q() const { return compiled.ideals.at("Q"); }
  std::string tag() const { return "(" + std::to_string(m) + "," + std::to_string(d) + ")"; }
};

FamilyCase build_case(int m, int d) {
  FamilyCase out{m, d, compile_ring_document(build_family(FamilySpec{m, d, 0})), {}, {}, 0, {},
                 false, -1};
  out.rep = classify(out.I(), out.Q(), 8);
  out.table = sally_table(out.I(), out.Q(), 6);
  IdealHandle square = ideal_power(out.I(), 2);
  out.rr_gap = quotient_length(ratliff_rush(square), square).value;
  out.probe = depth_probe(out.I(), out.Q(), 3);
  DecompositionCheck dec = decomposition_check(out.I(), out.Q(), 6);
  out.decomposition_ok = dec.passed;
  out.decomposition_first_failure = dec.first_failure;
  return out;
}

long long structural_c_length(int n, int d, int c) {
  return binom(n + d - 1, d - 1) - binom(n + d - 2, d - 2) - binom(n + d - c - 1, d - c - 1) +
         binom(n + d - c - 2, d - c - 2);
}

struct NamedPair {
  std::string name;
  IdealHandle ideal;
  IdealHandle reduction;
  int dim;
};

// Deterministic generator reused from the unit suites.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

int main() {
  std::vector<FamilyCase> cases;
  for (int m = 0; m <= 2; ++m) {
    for (int d = 1; d <= 3; ++d) cases.push_back(build_case(m, d));
  }
  FamilyCase derived{0, 2, compile_ring_document(build_family(FamilySpec{0, 2, 1})), {}, {}, 0,
                     {}, false, -1};
  derived.rep = classify(derived.I(), derived.Q(), 8);
  derived.table = sally_table(derived.I(), derived.Q(), 6);

  auto ring2 = RingPresentation::make(Field::rationals(), {"x", "y"}, {});
  auto parse2 = [&](const std::string& s) {
    return parse_polynomial(s, ring2->variables(), ring2->field(), ring2->default_order());
  };
  IdealHandle m2_ideal = ideal_power(maximal_ideal(ring2), 2);
  IdealHandle m2_reduction(ring2, {parse2("x^2"), parse2("y^2")});

  std::vector<NamedPair> corpus;
  for (const auto& fc : cases) corpus.push_back({"family" + fc.tag(), fc.I(), fc.Q(), fc.d});
  corpus.push_back({"family(0,2,c=1)", derived.I(), derived.Q(), 2});
  corpus.push_back({"regular-k[x,y]", maximal_ideal(ring2), maximal_ideal(ring2), 2});
  corpus.push_back({"m2-k[x,y]", m2_ideal, m2_reduction, 2});
  auto ring1 = RingPresentation::make(Field::rationals(), {"x"}, {});
  corpus.push_back({"regular-k[x]", maximal_ideal(ring1), maximal_ideal(ring1), 1});
  auto ring3 = RingPresentation::make(Field::rationals(), {"x", "y", "z"}, {});
  auto parse3 = [&](const std::string& s) {
    return parse_polynomial(s, ring3->variables(), ring3->field(), ring3->default_order());
  };
  corpus.push_back({"regular-k[x,y,z]", maximal_ideal(ring3), maximal_ideal(ring3), 3});
  corpus.push_back({"m2-k[x,y,z]", ideal_power(maximal_ideal(ring3), 2),
                    IdealHandle(ring3, {parse3("x^2"), parse3("y^2"), parse3("z^2")}), 3});
  corpus.push_back({"monomial-k[x,y]", IdealHandle(ring2, {parse2("x^3"), parse2("x^2*y"), parse2("y^3")}),
                    IdealHandle(ring2, {parse2("x^3"), parse2("y^3")}), 2});

  int criterion = 0;
  int failed = 0;
  auto run = [&](const std::string& name, const std::function<void(Reporter&)>& body) {
    ++criterion;
    Reporter r;
    try {
      body(r);
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << "[" << criterion << "/9] " << name << " ... "
              << (r.failures.empty() ? "PASS" : "FAIL") << "\n";
    for (const auto& f : r.failures) std::cout << "        " << f << "\n";
    if (!r.failures.empty()) ++failed;
  };

  run("family Hilbert coefficients e0 = m+2d+2, e1 = m+3d+2, e2 = d+1, e_i = 0", [&](Reporter& r) {
    for (const auto& fc : cases) {
      r.expect_eq<long long>(fc.m + 2 * fc.d + 2, fc.rep.e[0], fc.tag() + " e0");
      r.expect_eq<long long>(fc.m + 3 * fc.d + 2, fc.rep.e[1], fc.tag() + " e1");
      if (fc.d >= 2) r.expect_eq<long long>(fc.d + 1, fc.rep.e[2], fc.tag() + " e2");
      for (int i = 3; i <= fc.d; ++i) {
        r.expect_eq<long long>(0, fc.rep.e[static_cast<std::size_t>(i)],
                               fc.tag() + " e" + std::to_string(i));
      }
    }
  });

  run("family Hilbert series numerator 1 + (m+d+1)z + sum_{j=3}^{d+2} (-1)^{j-1} C(d+1,j-1) z^j",
      [&](Reporter& r) {
        for (const auto& fc : cases) {
          std::vector<long long> expected(static_cast<std::size_t>(fc.d) + 3, 0);
          expected[0] = 1;
          expected[1] = fc.m + fc.d + 1;
          for (int j = 3; j <= fc.d + 2; ++j) {
            long long b = binom(fc.d + 1, j - 1);
            expected[static_cast<std::size_t>(j)] = (j % 2 == 1) ? b : -b;
          }
          while (!expected.empty() && expected.back() == 0) expected.pop_back();
          r.expect_eq(expected, fc.rep.numerator, fc.tag() + " numerator");
          if (fc.m == 0 && fc.d == 2) {
            r.expect_eq({1, 3, 0, 3, -1}, fc.rep.numerator, "(0,2) pinned numerator");
          }
        }
      });

  run("family Sally data: sigma = d, c = d, I^4 = QI^3, I^3 != QI^2, Q cap I^2 = QI",
      [&](Reporter& r) {
        for (const auto& fc : cases) {
          r.expect_eq<long long>(fc.d, fc.table.sigma, fc.tag() + " sigma");
          r.expect_eq<long long>(fc.d, fc.table.c, fc.tag() + " c");
          r.expect(fc.table.i4_eq_qi3, fc.tag() + " I^4 = QI^3");
          r.expect(!fc.table.i3_eq_qi2, fc.tag() + " I^3 != QI^2");
          r.expect(fc.table.q_cap_i2_eq_qi, fc.tag() + " Q cap I^2 = QI");
        }
      });

  run("family Ratliff-Rush gap 1 at the square and depth probe negative", [&](Reporter& r) {
    for (const auto& fc : cases) {
      r.expect_eq<long long>(1, fc.rr_gap, fc.tag() + " rr gap");
      r.expect(!fc.probe.positive_depth, fc.tag() + " positive depth must fail");
    }
  });

  run("decomposition of the Hilbert-Samuel function for n = 0..6", [&](Reporter& r) {
    for (const auto& fc : cases) {
      r.expect(fc.decomposition_ok, fc.tag() + " decomposition (first failure at n = " +
                                        std::to_string(fc.decomposition_first_failure) + ")");
    }
    r.expect(decomposition_check(maximal_ideal(ring2), maximal_ideal(ring2), 6).passed,
             "regular fixture decomposition");
    r.expect(decomposition_check(m2_ideal, m2_reduction, 6).passed, "m^2 fixture decomposition");
  });

  run("branch coherence: c = d subcase with matching predictions; derived c < d case",
      [&](Reporter& r) {
        for (const auto& fc : cases) {
          r.expect_eq<std::string>("ev-plus-1", fc.rep.branch, fc.tag() + " branch");
          r.expect_eq<std::string>("c=d", fc.rep.subcase, fc.tag() + " subcase");
          r.expect(fc.rep.match, fc.tag() + " predicted-vs-computed");
          for (int n = 2; n <= 6; ++n) {
            r.expect_eq<long long>(structural_c_length(n, fc.d, fc.d),
                                   fc.table.c_lengths[static_cast<std::size_t>(n - 1)],
                                   fc.tag() + " l(C_" + std::to_string(n) + ")");
          }
        }
        r.expect_eq<std::string>("ev-plus-1", derived.rep.branch, "(0,2,c=1) branch");
        r.expect_eq<std::string>("c=1<d", derived.rep.subcase, "(0,2,c=1) subcase");
        r.expect_eq<long long>(derived.rep.e[1] - derived.rep.e[0] + derived.rep.colength + 1,
                               derived.rep.e[2], "(0,2,c=1) e2 identity");
        r.expect(derived.rep.match, "(0,2,c=1) predicted-vs-computed");
        for (int n = 2; n <= 6; ++n) {
          r.expect_eq<long long>(structural_c_length(n, 2, 1),
                                 derived.table.c_lengths[static_cast<std::size_t>(n - 1)],
                                 "(0,2,c=1) l(C_" + std::to_string(n) + ")");
        }
      });

  run("length oracle equivalence on 24 random zero-dimensional monomial ideals", [&](Reporter& r) {
    Rng rng(0xACCE97);
    int done = 0;
    while (done < 24) {
      const int nvars = rng.range(2, 3);
      std::vector<std::string> names;
      for (int i = 0; i < nvars; ++i) names.push_back(std::string(1, static_cast<char>('x' + i)));
      auto ring = RingPresentation::make(Field::rationals(), names, {});
      std::vector<Monomial> gens;
      for (int i = 0; i < nvars; ++i) gens.push_back(Monomial::variable(nvars, i, rng.range(1, 6)));
      for (int k = rng.range(0, 4); k > 0; --k) {
        Monomial m(nvars);
        for (int i = 0; i < nvars; ++i) m = m.with_exponent(i, rng.range(0, 5));
        if (!m.is_unit()) gens.push_back(m);
      }
      std::vector<Polynomial> polys;
      for (const auto& m : gens) polys.push_back(Polynomial::term(m, Scalar::one(ring->field())));
      long long expected = monomial_length_oracle(nvars, gens).value;
      long long got = artinian_length(IdealHandle(ring, polys)).value;
      if (expected != got) {
        r.failures.push_back("staircase #" + std::to_string(done) + ": oracle " +
                             std::to_string(expected) + ", groebner " + std::to_string(got));
      }
      ++done;
    }
  });

  run("inequality suite with equality cases pinned to I^2 = QI and I^3 = QI^2", [&](Reporter& r) {
    for (const auto& pair : corpus) {
      E1FormulaCheck f = e1_formula_check(pair.ideal, pair.reduction);
      bool northcott = f.e1 >= f.e0 - f.colength;
      r.expect(northcott, pair.name + " Northcott bound");
      bool i2 = ideal_equal(ideal_power(pair.ideal, 2), ideal_product(pair.reduction, pair.ideal));
      r.expect((f.e1 == f.e0 - f.colength) == i2, pair.name + " Northcott equality iff I^2 = QI");
      if (check_q_cap_i2(pair.ideal, pair.reduction)) {
        r.expect(f.gap >= 0, pair.name + " boundary inequality");
        r.expect(f.gap_zero_iff_i3, pair.name + " boundary equality iff I^3 = QI^2");
        r.expect(f.sigma_identity_holds, pair.name + " sigma identity");
      }
    }
  });

  run("two-path coefficient agreement on every fixture", [&](Reporter& r) {
    for (const auto& pair : corpus) {
      PowerCache powers(pair.ideal);
      FittedValues fitted = hilbert_fit_extending(powers, pair.dim, pair.dim + 4);
      auto numerator = hilbert_series_numerator(powers, pair.dim);
      r.expect_eq(fitted.fit.e, coefficients_from_numerator(numerator, pair.dim),
                  pair.name + " two-path coefficients");
    }
  });

  std::cout << (failed == 0 ? "acceptance: all criteria passed"
                            : "acceptance: " + std::to_string(failed) + " criterion(s) failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
