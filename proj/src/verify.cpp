#include "degensum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>
#include <utility>

#include "degensum/degen_core.hpp"
#include "degensum/oracles.hpp"
#include "degensum/probmoment.hpp"
#include "degensum/special_numbers.hpp"
#include "degensum/sums.hpp"

namespace degensum {

namespace {

// (expected, got) on failure.
using CheckResult = std::optional<std::pair<std::string, std::string>>;

struct Case {
  std::string identity;
  std::string params;
  std::function<CheckResult()> check;
};

template <class T>
CheckResult compare(const T& expected, const T& got) {
  if (expected == got) return std::nullopt;
  return std::make_pair(to_text(expected), to_text(got));
}

template <ScalarRing R>
struct RingContext {
  R ring;
  std::shared_ptr<SpecialNumbers<R>> tables;
  std::string label;  // "lambda=1/2" or "lambda=symbolic"
};

template <ScalarRing R>
RingContext<R> make_context(R ring) {
  auto tables = std::make_shared<SpecialNumbers<R>>(ring);
  std::string label = "lambda=" + ring.describe();
  return {std::move(ring), std::move(tables), std::move(label)};
}

Integer int_of(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

std::string join_params(std::initializer_list<std::pair<const char*, std::string>> items) {
  std::string out;
  for (const auto& [key, value] : items) {
    if (!out.empty()) out += ",";
    out += key;
    out += "=";
    out += value;
  }
  return out;
}

struct Grid {
  VerifyOptions options;
  std::vector<RingContext<FixedLambda>> fixed;
  std::optional<RingContext<SymbolicLambda>> symbolic;
  RingContext<FixedLambda> at_zero = make_context(FixedLambda{Rational(0)});
  std::vector<FinitePMF> random_pmfs;
};

// Applies fn to every ring context on the grid (fixed lambdas, then symbolic).
template <class Fn>
void for_each_ring(const Grid& grid, Fn&& fn) {
  for (const auto& ctx : grid.fixed) fn(ctx);
  if (grid.symbolic) fn(*grid.symbolic);
}

constexpr int kSmallRange = 5;

// --- degen_core ------------------------------------------------------------

void add_falling_recursion(const Grid& grid, std::vector<Case>& out) {
  for_each_ring(grid, [&](const auto& ctx) {
    for (int x = -kSmallRange; x <= kSmallRange; ++x) {
      for (std::size_t n = 0; n <= grid.options.max_k; ++n) {
        out.push_back({"falling_recursion", ctx.label + "," + join_params({{"x", std::to_string(x)}, {"n", std::to_string(n)}}),
                       [&ctx, x, n]() -> CheckResult {
                         const auto& ring = ctx.ring;
                         const auto xs = ring.embed_int(Integer(x));
                         const auto step = xs - ring.embed_int(int_of(n)) * ring.lambda_element();
                         return compare(degen_falling(ring, xs, n) * step, degen_falling(ring, xs, n + 1));
                       }});
      }
    }
  });
}

void add_vandermonde(const Grid& grid, std::vector<Case>& out) {
  for_each_ring(grid, [&](const auto& ctx) {
    for (int x = -kSmallRange; x <= kSmallRange; ++x) {
      for (int y = -kSmallRange; y <= kSmallRange; ++y) {
        out.push_back({"vandermonde", ctx.label + "," + join_params({{"x", std::to_string(x)}, {"y", std::to_string(y)}}),
                       [&ctx, x, y, max_n = grid.options.max_k]() -> CheckResult {
                         const auto& ring = ctx.ring;
                         const auto xs = ring.embed_int(Integer(x));
                         const auto ys = ring.embed_int(Integer(y));
                         for (std::size_t n = 0; n <= max_n; ++n) {
                           auto rhs = zero(ring);
                           for (std::size_t k = 0; k <= n; ++k) {
                             rhs = rhs + scale(ring, binomial(n, static_cast<long>(k)),
                                               degen_falling(ring, xs, k) * degen_falling(ring, ys, n - k));
                           }
                           if (auto f = compare(degen_falling(ring, xs + ys, n), rhs)) {
                             f->first = "n=" + std::to_string(n) + ": " + f->first;
                             return f;
                           }
                         }
                         return std::nullopt;
                       }});
      }
    }
  });
}

void add_reflection(const Grid& grid, std::vector<Case>& out) {
  for_each_ring(grid, [&](const auto& ctx) {
    for (int x = -kSmallRange; x <= kSmallRange; ++x) {
      for (std::size_t n = 0; n <= grid.options.max_k; ++n) {
        out.push_back({"reflection", ctx.label + "," + join_params({{"x", std::to_string(x)}, {"n", std::to_string(n)}}),
                       [&ctx, x, n]() -> CheckResult {
                         const auto& ring = ctx.ring;
                         const auto xs = ring.embed_int(Integer(x));
                         auto rhs = degen_rising(ring, xs, n);
                         if (n % 2 == 1) rhs = -rhs;
                         return compare(rhs, degen_falling(ring, -xs, n));
                       }});
      }
    }
  });
}

void add_lambda_specializations(const Grid& grid, std::vector<Case>& out) {
  for (int x = -kSmallRange; x <= kSmallRange; ++x) {
    for (std::size_t n = 0; n <= grid.options.max_k; ++n) {
      const std::string params = join_params({{"x", std::to_string(x)}, {"n", std::to_string(n)}});
      out.push_back({"lambda0_collapse", params, [x, n]() -> CheckResult {
                       const FixedLambda ring{Rational(0)};
                       return compare(pow(Rational(x), n), degen_falling(ring, Rational(x), n));
                     }});
      out.push_back({"lambda1_falling", params, [x, n]() -> CheckResult {
                       const FixedLambda ring{Rational(1)};
                       return compare(falling(ring, Rational(x), n), degen_falling(ring, Rational(x), n));
                     }});
    }
  }
}

// --- special_numbers ---------------------------------------------------------

void add_stirling_defining(const Grid& grid, std::vector<Case>& out) {
  for_each_ring(grid, [&](const auto& ctx) {
    for (std::size_t n = 0; n <= grid.options.max_k; ++n) {
      out.push_back({"stirling_defining", ctx.label + ",n=" + std::to_string(n),
                     [&ctx, n, max_x = grid.options.max_n]() -> CheckResult {
                       const auto& ring = ctx.ring;
                       const auto row = ctx.tables->stirling_row(n);
                       for (std::size_t x = 0; x <= max_x; ++x) {
                         const auto xs = ring.embed_int(int_of(x));
                         auto lhs = zero(ring);
                         for (std::size_t k = 0; k <= n; ++k) lhs = lhs + row[k] * falling(ring, xs, k);
                         if (auto f = compare(degen_falling(ring, xs, n), lhs)) {
                           f->first = "x=" + std::to_string(x) + ": " + f->first;
                           return f;
                         }
                       }
                       return std::nullopt;
                     }});
    }
  });
}

void add_stirling_linear_solve(const Grid& grid, std::vector<Case>& out) {
  const std::size_t bound = std::min<std::size_t>(grid.options.max_k, 8);
  for_each_ring(grid, [&](const auto& ctx) {
    for (std::size_t n = 0; n <= bound; ++n) {
      out.push_back({"stirling_linear_solve", ctx.label + ",n=" + std::to_string(n), [&ctx, n]() -> CheckResult {
                       const auto expected = oracle::stirling_row_by_linear_solve(ctx.ring, n);
                       const auto got = ctx.tables->stirling_row(n);
                       for (std::size_t k = 0; k <= n; ++k) {
                         if (auto f = compare(expected[k], got[k])) {
                           f->first = "k=" + std::to_string(k) + ": " + f->first;
                           return f;
                         }
                       }
                       return std::nullopt;
                     }});
    }
  });
}

void add_lambda0_tables(const Grid& grid, std::vector<Case>& out) {
  const std::size_t max_k = grid.options.max_k;
  const auto& ctx = grid.at_zero;
  for (std::size_t n = 0; n <= max_k + 1; ++n) {
    out.push_back({"bernoulli_lambda0_classical", "n=" + std::to_string(n), [&ctx, n]() -> CheckResult {
                     return compare(classical_bernoulli_numbers(n)[n], ctx.tables->bernoulli(n));
                   }});
    if (n >= 3 && n % 2 == 1) {
      out.push_back({"bernoulli_odd_vanishing", "n=" + std::to_string(n), [&ctx, n]() -> CheckResult {
                       return compare(Rational(0), ctx.tables->bernoulli(n));
                     }});
    }
  }
  for (std::size_t n = 0; n <= max_k; ++n) {
    out.push_back({"stirling_lambda0_classical", "n=" + std::to_string(n), [&ctx, n]() -> CheckResult {
                     const auto classical = classical_stirling2(n)[n];
                     const auto row = ctx.tables->stirling_row(n);
                     for (std::size_t k = 0; k <= n; ++k) {
                       if (auto f = compare(Rational(classical[k]), row[k])) {
                         f->first = "k=" + std::to_string(k) + ": " + f->first;
                         return f;
                       }
                     }
                     return std::nullopt;
                   }});
  }
}

void add_bernoulli_difference(const Grid& grid, std::vector<Case>& out) {
  for_each_ring(grid, [&](const auto& ctx) {
    for (std::size_t m = 0; m <= grid.options.max_k; ++m) {
      for (std::size_t n = 0; n <= grid.options.max_n; ++n) {
        for (int x = 0; x <= 2; ++x) {
          out.push_back(
              {"bernoulli_difference",
               ctx.label + "," + join_params({{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"x", std::to_string(x)}}),
               [&ctx, m, n, x]() -> CheckResult {
                 const auto& ring = ctx.ring;
                 const auto xs = ring.embed_int(Integer(x));
                 auto lhs = zero(ring);
                 for (std::size_t j = 0; j < n; ++j) lhs = lhs + degen_falling(ring, ring.embed_int(int_of(j)) + xs, m);
                 const auto diff = degen_bernoulli_poly(m + 1, ring.embed_int(int_of(n)) + xs, *ctx.tables) -
                                   degen_bernoulli_poly(m + 1, xs, *ctx.tables);
                 return compare(lhs, ring.div_exact_int(diff, int_of(m + 1)));
               }});
        }
      }
    }
  });
}

// --- sums ------------------------------------------------------------------

void add_six_way(const Grid& grid, std::vector<Case>& out) {
  for_each_ring(grid, [&](const auto& ctx) {
    for (std::size_t k = 1; k <= grid.options.max_k; ++k) {
      for (std::size_t n = 0; n <= grid.options.max_n; ++n) {
        out.push_back({"six_way_agreement",
                       ctx.label + "," + join_params({{"k", std::to_string(k)}, {"n", std::to_string(n)}}),
                       [&ctx, k, n]() -> CheckResult {
                         const auto report = sum_all_methods(*ctx.tables, k, int_of(n));
                         if (report.agreement) return std::nullopt;
                         const auto& reference = report.values.front().second;
                         std::string got;
                         for (const auto& [method, value] : report.values) {
                           if (value == reference) continue;
                           if (!got.empty()) got += "; ";
                           got += std::string(to_string(method)) + "=" + to_text(value);
                         }
                         return std::make_pair("direct=" + to_text(reference), got);
                       }});
      }
    }
  });
}

void add_bridges(const Grid& grid, std::vector<Case>& out) {
  for (std::size_t k = 1; k <= grid.options.max_k; ++k) {
    for (std::size_t n = 0; n <= grid.options.max_n; ++n) {
      const std::string params = join_params({{"k", std::to_string(k)}, {"n", std::to_string(n)}});
      out.push_back({"lambda0_bridge", params, [k, n]() -> CheckResult {
                       const Rational direct = sum_direct(FixedLambda{Rational(0)}, k, int_of(n));
                       for (FaulhaberVariant v : kAllFaulhaberVariants) {
                         if (auto f = compare(faulhaber_classical(k, int_of(n), v), direct)) {
                           f->first = std::string(to_string(v)) + "=" + f->first;
                           return f;
                         }
                       }
                       return std::nullopt;
                     }});
      out.push_back({"lambda1_bridge", params, [k, n]() -> CheckResult {
                       return compare(Rational(oracle::falling_power_sum_closed_form(k, int_of(n))),
                                      sum_direct(FixedLambda{Rational(1)}, k, int_of(n)));
                     }});
    }
  }
}

void add_telescoping(const Grid& grid, std::vector<Case>& out) {
  for_each_ring(grid, [&](const auto& ctx) {
    for (std::size_t k = 1; k <= grid.options.max_k; ++k) {
      for (std::size_t n = 0; n <= grid.options.max_n; ++n) {
        out.push_back({"telescoping", ctx.label + "," + join_params({{"k", std::to_string(k)}, {"n", std::to_string(n)}}),
                       [&ctx, k, n]() -> CheckResult {
                         const auto& ring = ctx.ring;
                         const auto unit = one(ring);
                         // r = 0 term uses S_0 = n.
                         auto lhs = degen_falling(ring, unit, k + 1) * ring.embed_int(int_of(n));
                         for (std::size_t r = 1; r <= k; ++r) {
                           lhs = lhs + scale(ring, binomial(k + 1, static_cast<long>(r)),
                                             degen_falling(ring, unit, k + 1 - r) * sum_direct(ring, r, int_of(n)));
                         }
                         const auto rhs = degen_falling(ring, ring.embed_int(int_of(n + 1)), k + 1) -
                                          degen_falling(ring, unit, k + 1);
                         return compare(rhs, lhs);
                       }});
      }
    }
  });
}

void add_degree_bound(const Grid& grid, std::vector<Case>& out) {
  if (!grid.symbolic) return;
  const auto& ctx = *grid.symbolic;
  for (std::size_t k = 1; k <= grid.options.max_k; ++k) {
    for (std::size_t n = 0; n <= grid.options.max_n; ++n) {
      out.push_back({"degree_bound", join_params({{"k", std::to_string(k)}, {"n", std::to_string(n)}}),
                     [&ctx, k, n]() -> CheckResult {
                       const LambdaPoly s = sum_direct(ctx.ring, k, int_of(n));
                       if (s.degree() <= static_cast<int>(k) - 1) return std::nullopt;
                       return std::make_pair("degree<=" + std::to_string(k - 1), "degree=" + std::to_string(s.degree()));
                     }});
    }
  }
}

// --- probmoment ---------------------------------------------------------------

std::vector<FinitePMF> random_pmfs(std::uint64_t seed, std::size_t count, std::size_t max_support) {
  std::mt19937_64 gen(seed);
  std::vector<FinitePMF> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<PmfEntry> entries;
    Integer total;
    std::vector<unsigned long> weights;
    for (std::size_t v = 0; v <= max_support; ++v) {
      const unsigned long w = gen() % 10;  // zero weights drop the point
      if (w == 0) continue;
      entries.push_back({int_of(v), Rational(0)});
      weights.push_back(w);
      total += w;
    }
    if (entries.empty()) {
      entries.push_back({int_of(gen() % (max_support + 1)), Rational(0)});
      weights.push_back(1);
      total = 1;
    }
    for (std::size_t j = 0; j < entries.size(); ++j) entries[j].probability = Rational::make(Integer(weights[j]), total);
    out.push_back(FinitePMF::make(std::move(entries)));
  }
  return out;
}

std::string describe_pmf(const FinitePMF& pmf) {
  std::string out = "{";
  for (const auto& e : pmf.entries()) {
    if (out.size() > 1) out += " ";
    out += e.value.get_str() + ":" + e.probability.to_string();
  }
  return out + "}";
}

void add_survival_identity(const Grid& grid, std::vector<Case>& out) {
  for (const auto& ctx : grid.fixed) {
    for (std::size_t i = 0; i < grid.random_pmfs.size(); ++i) {
      const FinitePMF* pmf = &grid.random_pmfs[i];
      out.push_back({"survival_identity", ctx.label + ",pmf=" + std::to_string(i),
                     [pmf, lam = ctx.ring.lambda, max_k = grid.options.max_k]() -> CheckResult {
                       for (std::size_t k = 1; k <= max_k; ++k) {
                         if (auto f = compare(moment_exact(*pmf, k, lam), moment_survival(*pmf, k, lam))) {
                           f->first = "k=" + std::to_string(k) + " " + describe_pmf(*pmf) + ": " + f->first;
                           return f;
                         }
                       }
                       return std::nullopt;
                     }});
    }
  }
}

void add_uniform_chain(const Grid& grid, std::vector<Case>& out) {
  for (const auto& ctx : grid.fixed) {
    for (std::size_t k = 1; k <= grid.options.max_k; ++k) {
      for (std::size_t n = 0; n <= grid.options.max_n; ++n) {
        out.push_back({"uniform_chain", ctx.label + "," + join_params({{"k", std::to_string(k)}, {"n", std::to_string(n)}}),
                       [lam = ctx.ring.lambda, k, n]() -> CheckResult {
                         const Rational scaled = Rational(int_of(n + 1)) * moment_survival(uniform_pmf(int_of(n)), k, lam);
                         return compare(sum_direct(FixedLambda{lam}, k, int_of(n)), scaled);
                       }});
      }
    }
  }
}

void add_monte_carlo(const Grid& grid, std::vector<Case>& out) {
  if (grid.fixed.empty()) return;
  const Rational lam = grid.fixed.front().ring.lambda;
  const std::size_t k = std::min<std::size_t>(grid.options.max_k, 3);
  const std::size_t n = std::min<std::size_t>(grid.options.max_n, 10);
  const std::uint64_t seed = grid.options.seed;
  constexpr std::uint64_t kTrials = 100;
  constexpr std::uint64_t kSamples = 10000;
  out.push_back({"monte_carlo", "lambda=" + lam.to_string() + "," +
                                    join_params({{"k", std::to_string(k)}, {"n", std::to_string(n)},
                                                 {"trials", std::to_string(kTrials)}, {"samples", std::to_string(kSamples)}}),
                 [lam, k, n, seed]() -> CheckResult {
                   const FinitePMF pmf = uniform_pmf(int_of(n));
                   const double exact = moment_exact(pmf, k, lam).to_double();
                   std::uint64_t within = 0;
                   for (std::uint64_t t = 0; t < kTrials; ++t) {
                     const auto mc = moment_mc(pmf, k, lam, kSamples, seed + t);
                     if (std::abs(mc.estimate - exact) <= 4.0 * mc.std_error) ++within;
                   }
                   if (within >= 99) return std::nullopt;
                   return std::make_pair(std::string(">=99 of 100 within 4 stderr"), std::to_string(within) + " of 100");
                 }});
}

using Builder = void (*)(const Grid&, std::vector<Case>&);

struct RegistryEntry {
  const char* name;
  Builder build;
};

// Several builders register more than one identity name; `name` is the group.
const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = {
      {"falling_recursion", add_falling_recursion},
      {"vandermonde", add_vandermonde},
      {"reflection", add_reflection},
      {"lambda0_collapse,lambda1_falling", add_lambda_specializations},
      {"stirling_defining", add_stirling_defining},
      {"stirling_linear_solve", add_stirling_linear_solve},
      {"bernoulli_lambda0_classical,bernoulli_odd_vanishing,stirling_lambda0_classical", add_lambda0_tables},
      {"bernoulli_difference", add_bernoulli_difference},
      {"six_way_agreement", add_six_way},
      {"lambda0_bridge,lambda1_bridge", add_bridges},
      {"telescoping", add_telescoping},
      {"degree_bound", add_degree_bound},
      {"survival_identity", add_survival_identity},
      {"uniform_chain", add_uniform_chain},
      {"monte_carlo", add_monte_carlo},
  };
  return entries;
}

template <class Ctx>
void corrupt_stirling(const Ctx& ctx, std::size_t max_k) {
  const std::size_t n = std::clamp<std::size_t>(max_k, 1, 3);
  auto value = ctx.tables->stirling2(n, 1) + one(ctx.ring);
  ctx.tables->override_stirling_for_testing(n, 1, std::move(value));
}

}  // namespace

std::vector<std::string> verify_identity_names() {
  std::vector<std::string> names;
  for (const auto& entry : registry()) {
    std::stringstream ss(entry.name);
    std::string item;
    while (std::getline(ss, item, ',')) names.push_back(item);
  }
  return names;
}

VerifyOutcome run_verify(const VerifyOptions& options) {
  if (options.max_k < 1 || options.max_n < 1) throw std::invalid_argument("verify bounds must be >= 1");
  Grid grid;
  grid.options = options;
  for (const auto& lam : options.lambdas) grid.fixed.push_back(make_context(FixedLambda{lam}));
  if (options.symbolic) grid.symbolic = make_context(SymbolicLambda{});
  grid.random_pmfs = random_pmfs(options.seed, 20, std::min<std::size_t>(options.max_n, 20));

  if (options.fault) {
    if (*options.fault != "stirling") throw std::invalid_argument("unknown fault: " + *options.fault);
    for_each_ring(grid, [&](const auto& ctx) { corrupt_stirling(ctx, options.max_k); });
    corrupt_stirling(grid.at_zero, options.max_k);
  }

  std::vector<Case> cases;
  for (const auto& entry : registry()) entry.build(grid, cases);

  std::vector<std::optional<VerifyFailure>> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      const Case& c = cases[i];
      CheckResult r;
      try {
        r = c.check();
      } catch (const std::exception& e) {
        r = std::make_pair(std::string("no exception"), std::string("exception: ") + e.what());
      }
      if (r) results[i] = VerifyFailure{c.identity, c.params, std::move(r->first), std::move(r->second)};
    }
  };
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cases.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  VerifyOutcome outcome;
  outcome.cases_run = cases.size();
  for (auto& r : results) {
    if (r) outcome.failures.push_back(std::move(*r));
  }
  std::sort(outcome.failures.begin(), outcome.failures.end(), [](const VerifyFailure& a, const VerifyFailure& b) {
    return std::tie(a.identity, a.params) < std::tie(b.identity, b.params);
  });
  return outcome;
}

}  // namespace degensum
