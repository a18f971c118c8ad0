#include "degensum/probmoment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "degensum/degen_core.hpp"

namespace degensum {

FinitePMF FinitePMF::make(std::vector<PmfEntry> entries) {
  if (entries.empty()) throw PmfError("nonempty_support", "support has no points");
  Rational total;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (sgn(e.value) < 0) {
      throw PmfError("nonnegative_support", "value " + e.value.get_str() + " is negative");
    }
    if (i > 0 && !(entries[i - 1].value < e.value)) {
      throw PmfError("strictly_ascending_support",
                     "value " + e.value.get_str() + " does not exceed " + entries[i - 1].value.get_str());
    }
    if (e.probability.sign() < 0) {
      throw PmfError("nonnegative_probabilities", "probability " + e.probability.to_string() + " is negative");
    }
    total += e.probability;
  }
  if (total != Rational(1)) {
    throw PmfError("probabilities_sum_to_one", "probabilities sum to " + total.to_string());
  }
  return FinitePMF(std::move(entries));
}

FinitePMF uniform_pmf(const Integer& n) {
  if (sgn(n) < 0) throw std::invalid_argument("uniform_pmf: n must be nonnegative");
  const Rational p = Rational::make(Integer(1), n + 1);
  std::vector<PmfEntry> entries;
  for (Integer x = 0; x <= n; ++x) entries.push_back({x, p});
  return FinitePMF::make(std::move(entries));
}

FinitePMF point_mass(const Integer& m) { return FinitePMF::make({{m, Rational(1)}}); }

Rational survival(const FinitePMF& pmf, const Integer& x) {
  Rational tail;
  for (const auto& e : pmf.entries()) {
    if (e.value > x) tail += e.probability;
  }
  return tail;
}

namespace {

void require_positive_k(std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be a positive integer");
}

}  // namespace

Rational moment_exact(const FinitePMF& pmf, std::size_t k, const Rational& lam) {
  require_positive_k(k);
  const FixedLambda ring{lam};
  Rational acc;
  for (const auto& e : pmf.entries()) acc += degen_falling(ring, Rational(e.value), k) * e.probability;
  return acc;
}

Rational moment_survival(const FinitePMF& pmf, std::size_t k, const Rational& lam) {
  require_positive_k(k);
  const FixedLambda ring{lam};
  // Walk x upward, dropping each support point's mass from the tail once x reaches it.
  const auto& entries = pmf.entries();
  std::size_t next = 0;
  Rational tail(1);
  Rational acc;
  Rational lower = degen_falling(ring, Rational(0), k);
  for (Integer x = 0; x < pmf.max_support(); ++x) {
    while (next < entries.size() && entries[next].value <= x) tail -= entries[next++].probability;
    Rational upper = degen_falling(ring, Rational(Integer(x + 1)), k);
    acc += (upper - lower) * tail;
    lower = std::move(upper);
  }
  return acc;
}

McEstimate moment_mc(const FinitePMF& pmf, std::size_t k, const Rational& lam, std::uint64_t samples,
                     std::uint64_t seed) {
  require_positive_k(k);
  if (samples == 0) throw std::invalid_argument("moment_mc: samples must be positive");
  const FixedLambda ring{lam};
  const auto& entries = pmf.entries();
  std::vector<double> cdf;
  std::vector<double> values;
  cdf.reserve(entries.size());
  values.reserve(entries.size());
  Rational cumulative;
  for (const auto& e : entries) {
    cumulative += e.probability;
    cdf.push_back(cumulative.to_double());
    values.push_back(degen_falling(ring, Rational(e.value), k).to_double());
  }
  cdf.back() = 1.0;

  std::mt19937_64 gen(seed);
  // Welford running mean and sum of squared deviations.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t i = 1; i <= samples; ++i) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    const auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    const double v = values[std::min(idx, values.size() - 1)];
    const double delta = v - mean;
    mean += delta / static_cast<double>(i);
    m2 += delta * (v - mean);
  }
  McEstimate out;
  out.estimate = mean;
  if (samples > 1) {
    const double variance = m2 / static_cast<double>(samples - 1);
    out.std_error = std::sqrt(variance / static_cast<double>(samples));
  }
  return out;
}

MomentReport moment_report(const FinitePMF& pmf, std::size_t k, const Rational& lam, std::uint64_t samples,
                           std::uint64_t seed) {
  MomentReport r;
  r.k = k;
  r.lambda = lam;
  r.exact_direct = moment_exact(pmf, k, lam);
  r.exact_survival = moment_survival(pmf, k, lam);
  r.samples = samples;
  r.seed = seed;
  if (samples > 0) {
    const auto mc = moment_mc(pmf, k, lam, samples, seed);
    r.mc_estimate = mc.estimate;
    r.mc_stderr = mc.std_error;
  }
  return r;
}

FinitePMF parse_pmf_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PmfError("valid_json", e.what());
  }
  if (!doc.is_object() || !doc.contains("support") || !doc.contains("probs")) {
    throw PmfError("schema", "expected an object with \"support\" and \"probs\"");
  }
  const auto& support = doc["support"];
  const auto& probs = doc["probs"];
  if (!support.is_array() || !probs.is_array()) throw PmfError("schema", "\"support\" and \"probs\" must be arrays");
  if (support.size() != probs.size()) {
    throw PmfError("matching_lengths", std::to_string(support.size()) + " support points but " +
                                           std::to_string(probs.size()) + " probabilities");
  }
  std::vector<PmfEntry> entries;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const auto& v = support[i];
    Integer value;
    if (v.is_number_integer()) {
      value = v.is_number_unsigned() ? Integer(v.get<unsigned long>()) : Integer(v.get<long>());
    } else {
      throw PmfError("integer_support", "support entry " + std::to_string(i) + " is not an integer");
    }
    if (!probs[i].is_string()) throw PmfError("rational_probabilities", "probs entry " + std::to_string(i) + " is not a string");
    Rational p;
    try {
      p = Rational::parse(probs[i].get<std::string>());
    } catch (const std::exception& e) {
      throw PmfError("rational_probabilities", e.what());
    }
    entries.push_back({std::move(value), std::move(p)});
  }
  return FinitePMF::make(std::move(entries));
}

FinitePMF load_pmf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PmfError("readable_file", "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pmf_json(buf.str());
}

}  // namespace degensum
