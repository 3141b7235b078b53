#include "sally/hilbert.hpp"

#include <algorithm>

namespace sally {

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  long long acc = 1;
  for (long long i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

std::vector<LengthValue> hilbert_samuel_values(PowerCache& powers, int upto_n) {
  std::vector<LengthValue> out;
  out.reserve(static_cast<std::size_t>(upto_n) + 1);
  for (int n = 0; n <= upto_n; ++n) {
    LengthValue l = artinian_length(powers.power(n + 1));
    if (n == 0 && l.value == 0) throw InputError("unit ideal has no Hilbert-Samuel function");
    if (n > 0 && l.value < out.back().value) {
      throw std::logic_error("Hilbert-Samuel values decreased; length computation is broken");
    }
    out.push_back(l);
  }
  return out;
}

std::vector<LengthValue> hilbert_samuel_values(const IdealHandle& ideal, int upto_n) {
  PowerCache powers(ideal);
  return hilbert_samuel_values(powers, upto_n);
}

long long hilbert_polynomial(const std::vector<long long>& e, int dim, long long n) {
  long long acc = 0;
  for (int i = 0; i <= dim; ++i) {
    long long term = e[static_cast<std::size_t>(i)] * binom(n + dim - i, dim - i);
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

CoefficientFit hilbert_coefficients(const std::vector<long long>& values, int dim, int window) {
  const int need = dim + 1 + window;
  if (static_cast<int>(values.size()) < need) {
    throw InsufficientWindowError("insufficient-window: need at least " + std::to_string(need) +
                                  " Hilbert-Samuel values, have " +
                                  std::to_string(values.size()));
  }
  const int last = static_cast<int>(values.size()) - 1;
  const int fit_hi = last - window;
  const int fit_lo = fit_hi - dim;

  // Exact solve in the binomial basis; the system is unimodular, so any
  // fractional solution signals a bug upstream.
  const int m = dim + 1;
  std::vector<std::vector<mpq_class>> a(static_cast<std::size_t>(m),
                                        std::vector<mpq_class>(static_cast<std::size_t>(m) + 1));
  for (int r = 0; r < m; ++r) {
    const long long n = fit_lo + r;
    for (int i = 0; i <= dim; ++i) {
      long c = static_cast<long>(binom(n + dim - i, dim - i));
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = (i % 2 == 0) ? c : -c;
    }
    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)] =
        static_cast<long>(values[static_cast<std::size_t>(n)]);
  }
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int r = col; r < m; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::logic_error("singular binomial-basis system");
    std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot)]);
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      mpq_class factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                         a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int c = col; c <= m; ++c) {
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            factor * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
      }
    }
  }
  std::vector<long long> e(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    mpq_class v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] /
                  a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    if (v.get_den() != 1) {
      throw std::logic_error("fractional Hilbert coefficient: the fit is broken");
    }
    e[static_cast<std::size_t>(i)] = static_cast<long long>(v.get_num().get_si());
  }

  for (int n = fit_hi + 1; n <= last; ++n) {
    if (hilbert_polynomial(e, dim, n) != values[static_cast<std::size_t>(n)]) {
      throw InsufficientWindowError(
          "insufficient-window: fitted polynomial fails at table index " + std::to_string(n) +
          "; extend the value table");
    }
  }

  int postulation = 0;
  for (int n = last; n >= 0; --n) {
    if (hilbert_polynomial(e, dim, n) != values[static_cast<std::size_t>(n)]) {
      postulation = n + 1;
      break;
    }
  }
  return CoefficientFit{std::move(e), postulation};
}

FittedValues hilbert_fit_extending(PowerCache& powers, int dim, int min_n, int window, int cap) {
  int n = std::max(min_n, dim + 1 + window);
  for (;;) {
    FittedValues out;
    auto lengths = hilbert_samuel_values(powers, n);
    for (const auto& l : lengths) out.values.push_back(l.value);
    try {
      out.fit = hilbert_coefficients(out.values, dim, window);
      return out;
    } catch (const InsufficientWindowError&) {
      if (n >= cap) throw;
      n = std::min(n + 2, cap);
    }
  }
}

std::vector<long long> hilbert_series_numerator(PowerCache& powers, int dim, int window,
                                                int value_cap) {
  std::vector<long long> values;
  auto value = [&](int n) {
    while (static_cast<int>(values.size()) <= n) {
      values.push_back(artinian_length(powers.power(static_cast<int>(values.size()) + 1)).value);
    }
    return values[static_cast<std::size_t>(n)];
  };
  auto hilbert_fn = [&](int t) { return t == 0 ? value(0) : value(t) - value(t - 1); };

  std::vector<long long> h;
  int zeros = 0;
  for (int j = 0;; ++j) {
    if (j > value_cap) {
      throw StabilizationError("no-stabilization: numerator did not terminate by degree " +
                               std::to_string(value_cap));
    }
    long long hj = 0;
    for (int i = 0; i <= std::min(dim, j); ++i) {
      long long term = binom(dim, i) * hilbert_fn(j - i);
      hj += (i % 2 == 0) ? term : -term;
    }
    h.push_back(hj);
    zeros = hj == 0 ? zeros + 1 : 0;
    if (zeros >= dim + window && j >= dim) break;
  }
  while (!h.empty() && h.back() == 0) h.pop_back();

  // Cross-check h(1) = e_0 against the binomial-fit path.
  while (static_cast<int>(values.size()) < dim + 1 + window) value(static_cast<int>(values.size()));
  CoefficientFit fit = hilbert_coefficients(values, dim, window);
  long long h1 = 0;
  for (long long c : h) h1 += c;
  if (h1 != fit.e.front()) {
    throw std::logic_error("numerator miscomputed: h(1) disagrees with the multiplicity");
  }
  return h;
}

std::vector<long long> coefficients_from_numerator(const std::vector<long long>& numerator,
                                                   int dim) {
  if (numerator.empty()) throw InputError("empty numerator");
  long long h1 = 0;
  for (long long c : numerator) h1 += c;
  if (h1 == 0) throw InputError("numerator vanishes at z = 1");
  std::vector<long long> e(static_cast<std::size_t>(dim) + 1, 0);
  for (int i = 0; i <= dim; ++i) {
    long long acc = 0;
    for (std::size_t j = 0; j < numerator.size(); ++j) {
      acc += binom(static_cast<long long>(j), i) * numerator[j];
    }
    e[static_cast<std::size_t>(i)] = acc;
  }
  return e;
}

HilbertData hilbert_data(PowerCache& powers, int dim, int n_max, int window) {
  HilbertData out;
  auto lengths = hilbert_samuel_values(powers, n_max);
  out.values.reserve(lengths.size());
  for (const auto& l : lengths) out.values.push_back(l.value);
  for (std::size_t t = 0; t < out.values.size(); ++t) {
    out.hilbert_function.push_back(t == 0 ? out.values[0] : out.values[t] - out.values[t - 1]);
  }
  CoefficientFit fit = hilbert_coefficients(out.values, dim, window);
  out.coefficients = fit.e;
  out.postulation = fit.postulation;
  out.numerator = hilbert_series_numerator(powers, dim, window);
  out.certified_up_to = n_max;

  // Two-path agreement is an invariant, not a hope.
  if (coefficients_from_numerator(out.numerator, dim) != out.coefficients) {
    throw std::logic_error("series-derivative and binomial-fit coefficients disagree");
  }
  return out;
}

}  // namespace sally
