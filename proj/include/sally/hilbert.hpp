#pragma once

#include "sally/length.hpp"

namespace sally {

// Binomial coefficient with C(n, k) = 0 whenever k < 0 or n < k.
long long binom(long long n, long long k);

// ℓ_A(A/I^{n+1}) for n = 0..upto_n. I must be a proper m-primary ideal.
std::vector<LengthValue> hilbert_samuel_values(PowerCache& powers, int upto_n);
std::vector<LengthValue> hilbert_samuel_values(const IdealHandle& ideal, int upto_n);

struct CoefficientFit {
  std::vector<long long> e;  // e_0..e_d
  int postulation = 0;       // least n from which the fitted polynomial matches backward
};

// Exact integer fit of e_0..e_d in the binomial basis from the last d+1
// values before the verification window; the window entries must be predicted
// exactly or an InsufficientWindowError asks the caller to extend the table.
CoefficientFit hilbert_coefficients(const std::vector<long long>& values, int dim, int window = 3);

// Evaluate the Hilbert-Samuel polynomial determined by e at n.
long long hilbert_polynomial(const std::vector<long long>& e, int dim, long long n);

struct FittedValues {
  std::vector<long long> values;
  CoefficientFit fit;
};

// Fit that extends the value table through the power cache until the
// verification window is satisfied, up to table length cap + 1.
FittedValues hilbert_fit_extending(PowerCache& powers, int dim, int min_n, int window = 3,
                                   int cap = 24);

// Numerator h of HS_I(z) = h(z)/(1-z)^dim, computed incrementally until
// dim + window consecutive zero coefficients certify the tail; trailing zeros
// stripped. Extends the value table on demand through the power cache.
std::vector<long long> hilbert_series_numerator(PowerCache& powers, int dim, int window = 3,
                                                int value_cap = 48);

// e_i = h^(i)(1)/i!, exactly; rejects h(1) = 0.
std::vector<long long> coefficients_from_numerator(const std::vector<long long>& numerator, int dim);

struct HilbertData {
  std::vector<long long> values;            // ℓ(A/I^{n+1}), n = 0..n_max
  std::vector<long long> hilbert_function;  // H(t) = ℓ(I^t/I^{t+1})
  std::vector<long long> coefficients;      // e_0..e_d (binomial fit path)
  int postulation = 0;
  std::vector<long long> numerator;         // h_0..h_k
  int certified_up_to = 0;
};

HilbertData hilbert_data(PowerCache& powers, int dim, int n_max, int window = 3);

}  // namespace sally
