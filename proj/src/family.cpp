#include "sally/family.hpp"

#include <algorithm>
#include <sstream>

#include "sally/parser.hpp"

namespace sally {

namespace {

std::string vec_str(const std::vector<long long>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

void validate(const FamilySpec& spec) {
  if (spec.m < 0) throw InputError("family parameter m must be nonnegative");
  if (spec.d < 1) throw InputError("family parameter d must be positive");
  const int c = spec.effective_c();
  if (c < 1 || c > spec.d) throw InputError("family parameter c must satisfy 1 <= c <= d");
}

}  // namespace

RingDocument build_family(const FamilySpec& spec) {
  validate(spec);
  const int m = spec.m;
  const int c = spec.effective_c();
  const int extras = spec.d - c;

  std::vector<std::string> vars;
  for (int j = 1; j <= m; ++j) vars.push_back("x" + std::to_string(j));
  vars.push_back("y");
  for (int i = 1; i <= c; ++i) vars.push_back("v" + std::to_string(i));
  for (int i = 1; i <= c; ++i) vars.push_back("z" + std::to_string(i));
  for (int k = 1; k <= extras; ++k) vars.push_back("w" + std::to_string(k));
  const int width = static_cast<int>(vars.size());

  const Field field = Field::rationals();
  const MonomialOrder ord = MonomialOrder::grevlex();
  auto var_poly = [&](int index) {
    return Polynomial::term(Monomial::variable(width, index), Scalar::one(field));
  };
  const int y_index = m;
  auto v_index = [&](int i) { return m + 1 + i; };
  auto z_index = [&](int i) { return m + 1 + c + i; };

  std::vector<Polynomial> relations;
  auto push_unique = [&](const Polynomial& f) {
    for (const auto& g : relations) {
      if (g == f) return;
    }
    relations.push_back(f);
  };

  // (x_j, y) · (x_j, y, v_i), listed without duplicates.
  std::vector<int> small;
  for (int j = 0; j < m; ++j) small.push_back(j);
  small.push_back(y_index);
  std::vector<int> big = small;
  for (int i = 0; i < c; ++i) big.push_back(v_index(i));
  for (int u : small) {
    for (int w : big) push_unique(poly_mul(ord, var_poly(u), var_poly(w)));
  }
  for (int i = 0; i < c; ++i) {
    for (int j = i + 1; j < c; ++j) {
      push_unique(poly_mul(ord, var_poly(v_index(i)), var_poly(v_index(j))));
    }
  }
  for (int i = 0; i < c; ++i) {
    Polynomial cube = poly_mul(ord, var_poly(v_index(i)),
                               poly_mul(ord, var_poly(v_index(i)), var_poly(v_index(i))));
    Polynomial zy = poly_mul(ord, var_poly(z_index(i)), var_poly(y_index));
    push_unique(poly_sub(ord, cube, zy));
  }

  RingDocument doc;
  doc.field = "rational";
  doc.variables = vars;
  for (const auto& r : relations) doc.relations.push_back(to_string(r, vars));
  doc.ideals["I"] = vars;
  std::vector<std::string> q;
  for (int i = 0; i < c; ++i) q.push_back(vars[static_cast<std::size_t>(z_index(i))]);
  for (int k = 0; k < extras; ++k) {
    q.push_back(vars[static_cast<std::size_t>(m + 1 + 2 * c + k)]);
  }
  doc.ideals["Q"] = q;
  return doc;
}

std::vector<long long> family_expected_numerator(int m, int c) {
  std::vector<long long> h(static_cast<std::size_t>(c) + 3, 0);
  h[0] = 1;
  h[1] = m + c + 1;
  for (int j = 3; j <= c + 2; ++j) {
    long long b = binom(c + 1, j - 1);
    h[static_cast<std::size_t>(j)] = (j % 2 == 1) ? b : -b;
  }
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

FamilyVerification verify_family(const FamilySpec& spec, const Field& field, int n_max) {
  validate(spec);
  const int m = spec.m;
  const int d = spec.d;
  const int c = spec.effective_c();

  FamilyVerification result;
  result.spec = spec;

  RingDocument doc = build_family(spec);
  CompiledRing compiled = compile_ring_document(doc, field);
  result.warnings = compiled.warnings;
  const IdealHandle& ideal = compiled.ideals.at("I");
  const IdealHandle& reduction = compiled.ideals.at("Q");

  auto record = [&](const std::string& name, const std::string& expected,
                    const std::string& computed) {
    result.checks.push_back(FamilyCheck{name, expected, computed, expected == computed});
  };
  auto record_num = [&](const std::string& name, long long expected, long long computed) {
    record(name, std::to_string(expected), std::to_string(computed));
  };
  auto record_bool = [&](const std::string& name, bool expected, bool computed) {
    record(name, expected ? "true" : "false", computed ? "true" : "false");
  };

  record_num("dimension", d, krull_dimension(compiled.ring));
  record_num("colength(I)", 1, artinian_length(ideal).value);
  record_num("colength(Q) = m+2c+2", m + 2 * c + 2, artinian_length(reduction).value);

  ClassificationReport rep = classify(ideal, reduction, n_max);
  for (const auto& w : rep.warnings) {
    if (std::find(result.warnings.begin(), result.warnings.end(), w) == result.warnings.end()) {
      result.warnings.push_back(w);
    }
  }

  std::vector<long long> expected_num = family_expected_numerator(m, c);
  std::vector<long long> expected_e = coefficients_from_numerator(expected_num, d);
  record_num("e0 = m+2c+2", m + 2 * c + 2, rep.e[0]);
  record_num("e1 = m+3c+2", m + 3 * c + 2, rep.e[1]);
  if (d >= 2) record_num("e2", expected_e[2], rep.e[2]);
  record("coefficients", vec_str(expected_e), vec_str(rep.e));
  record("numerator", vec_str(expected_num), vec_str(rep.numerator));

  record_num("sigma = c", c, rep.sigma);
  record_num("c-invariant", c, rep.c);
  record_bool("I^4 = Q.I^3", true, rep.i4_eq_qi3);
  record_bool("I^3 = Q.I^2", false, rep.i3_eq_qi2);
  record_bool("Q ∩ I^2 = Q.I", true, rep.q_cap_i2_eq_qi);
  record_num("reduction-number", 3, rep.reduction_number);

  IdealHandle square = ideal_power(ideal, 2);
  long long rr_gap = quotient_length(ratliff_rush(square), square).value;
  record_num("rr-gap(I^2)", c == d ? 1 : 0, rr_gap);

  DepthProbe probe = depth_probe(ideal, reduction, 3);
  record_bool("positive-depth", c < d, probe.positive_depth);

  record("branch", "ev-plus-1", rep.branch);
  std::string expected_subcase = c == d ? "c=d" : (c == 1 ? "c=1<d" : "1<c<d");
  record("subcase", expected_subcase, rep.subcase);
  record_bool("predicted-vs-computed", true, rep.match);
  int expected_postulation = c == d ? 2 : (c == d - 1 ? 1 : 0);
  record_num("postulation", expected_postulation, rep.postulation);

  result.all_passed = true;
  for (const auto& check : result.checks) result.all_passed = result.all_passed && check.pass;
  return result;
}

}  // namespace sally
