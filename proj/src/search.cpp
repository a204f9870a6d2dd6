#include "gdet/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <random>
#include <thread>

#include "gdet/detengine.hpp"
#include "gdet/error.hpp"
#include "gdet/modular.hpp"
#include "gdet/ntheory.hpp"

namespace gdet {

std::string to_string(SearchMode m) {
  switch (m) {
    case SearchMode::min_nontrivial: return "min_nontrivial";
    case SearchMode::spectrum: return "spectrum";
    case SearchMode::frontier: return "frontier";
  }
  return "?";
}

SearchMode search_mode_from_string(const std::string& s) {
  if (s == "min_nontrivial" || s == "min") return SearchMode::min_nontrivial;
  if (s == "spectrum") return SearchMode::spectrum;
  if (s == "frontier") return SearchMode::frontier;
  throw UsageError("unknown search mode '" + s + "'");
}

unsigned search_threads() {
  unsigned t = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GDET_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) t = std::min<unsigned>(t, static_cast<unsigned>(v));
  }
  return t;
}

bool is_frontier_value(std::uint64_t p, const Int& v) {
  if (v == 0 || valuation(v, 2) != 5) return false;
  const int ell = valuation(v, p);
  if (ell != 0 && ell != 3 && ell != 5) return false;
  const Int m = strip_prime(strip_prime(v, 2), p);
  const Int P = static_cast<unsigned long>(p);
  return 2 * abs(m) < P * P + 1;
}

namespace {

using modular::u64;
using Digits = std::vector<long>;

struct Entry {
  std::uint64_t multiplicity = 0;
  std::uint64_t index = 0;
  Digits coeffs;
};

struct ShardResult {
  std::map<Int, Entry> values;
  std::uint64_t visited = 0;
  std::uint64_t pruned = 0;
  bool completed = true;
};

RingElement make_element(const GroupSpec& g, const Digits& c) {
  std::vector<Int> coeffs(c.begin(), c.end());
  return RingElement::from_coefficients(g, coeffs);
}

// Per-element evaluation on int64 measure polynomials, with a single-prime
// resultant whenever ||B||_2^N < 2^60 and det_exact otherwise.
class Kernel {
 public:
  Kernel(const SearchSpec& spec, std::optional<Int> cap, std::uint64_t frontier_p)
      : group_(spec.group),
        m_(spec.group.rotation_modulus()),
        prune_(spec.prune),
        mode_(spec.mode),
        cap_(std::move(cap)),
        frontier_p_(frontier_p),
        b_(m_),
        gg_(m_),
        xn_(m_ + 1, 0) {
    xn_[0] = prime_ - 1;
    xn_[m_] = 1;
    if (cap_) cap_double_ = Int(abs(*cap_)).get_d();
  }

  // True when the element's value should be recorded; the value is then in v.
  bool evaluate(const Digits& c, Int& v, ShardResult& out) {
    build_measure(c);
    long double m1 = 0, m2 = 0;
    for (std::size_t k = 0; k < m_; ++k) {
      m1 += b_[k];
      m2 += (k & 1) ? -b_[k] : b_[k];
    }
    const bool even = m_ % 2 == 0;
    if (m1 == 0 || (even && m2 == 0)) return false;
    if (prune_ && screen_out(std::fabs(m1 * (even ? m2 : 1)))) {
      ++out.pruned;
      return false;
    }
    v = compute(c);
    if (v == 0) return false;
    if (cap_ && abs(v) > *cap_) return false;
    if (mode_ == SearchMode::frontier && !is_frontier_value(frontier_p_, v)) return false;
    return true;
  }

 private:
  void build_measure(const Digits& c) {
    const std::size_t m = m_;
    if (group_.family == Family::cyclic) {
      for (std::size_t k = 0; k < m; ++k) b_[k] = c[k];
      return;
    }
    const long* f = c.data();
    const long* g = c.data() + m;
    // coefficient k of f(x) f(x^{-1}) is sum_i f_i f_{i-k}
    for (std::size_t k = 0; k < m; ++k) {
      long long ff = 0, gg = 0;
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = i >= k ? i - k : i + m - k;
        ff += static_cast<long long>(f[i]) * f[j];
        gg += static_cast<long long>(g[i]) * g[j];
      }
      b_[k] = ff;
      gg_[k] = gg;
    }
    const std::size_t shift = group_.family == Family::dicyclic ? group_.n : 0;
    for (std::size_t k = 0; k < m; ++k) b_[(k + shift) % m] -= gg_[k];
  }

  // A nonzero M is M_1 M_2 times the integers M_d (d >= 3), so it is a
  // multiple of M_1 M_2. prod is |M_1 M_2|.
  bool screen_out(long double prod) const {
    if (cap_ && prod > static_cast<long double>(cap_double_) + 0.5L) return true;
    if (mode_ == SearchMode::frontier && prod < 9.0e18L) {
      const auto v = static_cast<std::uint64_t>(prod);
      if (valuation(v, 2) > 5 || valuation(v, frontier_p_) > 5) return true;
    }
    return false;
  }

  Int compute(const Digits& c) {
    long double normsq = 0;
    for (std::size_t k = 0; k < m_; ++k) normsq += static_cast<long double>(b_[k]) * b_[k];
    if (0.5L * static_cast<long double>(m_) * std::log2(normsq) < 60.0L) {
      bp_.resize(m_);
      for (std::size_t k = 0; k < m_; ++k) bp_[k] = modular::reduce(static_cast<std::int64_t>(b_[k]), prime_);
      const u64 r = modular::resultant_mod(xn_, bp_, prime_);
      return r > prime_ / 2 ? -Int(static_cast<unsigned long>(prime_ - r)) : Int(static_cast<unsigned long>(r));
    }
    return det_exact(make_element(group_, c));
  }

  GroupSpec group_;
  std::size_t m_;
  bool prune_;
  SearchMode mode_;
  std::optional<Int> cap_;
  double cap_double_ = 0;
  std::uint64_t frontier_p_;
  u64 prime_ = modular::crt_prime(0);
  std::vector<long long> b_, gg_;
  std::vector<u64> bp_, xn_;
};

void record(ShardResult& out, const Int& v, std::uint64_t index, const Digits& c) {
  auto [it, inserted] = out.values.try_emplace(v);
  Entry& e = it->second;
  if (inserted || index < e.index) {
    e.index = index;
    e.coeffs = c;
  }
  ++e.multiplicity;
}

void merge(ShardResult& into, ShardResult&& from) {
  for (auto& [v, e] : from.values) {
    auto [it, inserted] = into.values.try_emplace(v, e);
    if (inserted) continue;
    Entry& t = it->second;
    t.multiplicity += e.multiplicity;
    if (e.index < t.index) {
      t.index = e.index;
      t.coeffs = std::move(e.coeffs);
    }
  }
  into.visited += from.visited;
  into.pruned += from.pruned;
  into.completed = into.completed && from.completed;
}

using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> at;
  std::atomic<bool>* stop;

  bool expired() {
    if (stop->load(std::memory_order_relaxed)) return true;
    if (at && Clock::now() >= *at) {
      stop->store(true);
      return true;
    }
    return false;
  }
};

// Enumerates indices [begin, end) of the box.
ShardResult run_shard(const SearchSpec& spec, Kernel kernel, long lo, std::uint64_t base, std::uint64_t begin,
                      std::uint64_t end, Deadline deadline) {
  ShardResult out;
  const std::size_t len = spec.group.order();
  Digits digits(len, 0);
  std::uint64_t rest = begin;
  for (std::size_t i = len; i-- > 0;) {
    digits[i] = static_cast<long>(rest % base);
    rest /= base;
  }
  Digits c(len);
  Int v;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    if ((idx - begin) % 4096 == 0 && deadline.expired()) {
      out.completed = false;
      break;
    }
    for (std::size_t i = 0; i < len; ++i) c[i] = digits[i] + lo;
    ++out.visited;
    if (kernel.evaluate(c, v, out)) record(out, v, idx, c);
    for (std::size_t i = len; i-- > 0;) {
      if (++digits[i] < static_cast<long>(base)) break;
      digits[i] = 0;
    }
  }
  return out;
}

ShardResult run_random(const SearchSpec& spec, Kernel kernel, long lo, long hi, std::uint64_t samples,
                       Deadline deadline) {
  ShardResult out;
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<long> dist(lo, hi);
  Digits c(spec.group.order());
  Int v;
  for (std::uint64_t s = 0; s < samples; ++s) {
    if (s % 4096 == 0 && deadline.expired()) {
      out.completed = false;
      break;
    }
    for (auto& x : c) x = dist(rng);
    ++out.visited;
    if (kernel.evaluate(c, v, out)) record(out, v, s, c);
  }
  return out;
}

bool better(const Int& a, const Int& b) {
  const int c = cmp(abs(a), abs(b));
  return c < 0 || (c == 0 && a < b);
}

SearchReport run_search(const SearchSpec& spec, std::uint64_t frontier_p) {
  if (spec.coeff_bound < 0) throw UsageError("coefficient bound must be nonnegative");
  const long lo = spec.coeff_min.value_or(-spec.coeff_bound);
  const long hi = spec.coeff_bound;
  if (lo > hi) throw UsageError("empty coefficient range");
  if (spec.max_elements && *spec.max_elements == 0) throw UsageError("search budget must be positive");
  if (spec.max_seconds && *spec.max_seconds <= 0) throw UsageError("search time budget must be positive");
  if (spec.random_samples && *spec.random_samples == 0) throw UsageError("sample count must be positive");
  if (spec.mode == SearchMode::frontier && frontier_p == 0) {
    throw UsageError("frontier mode needs search_frontier");
  }

  std::optional<Int> cap = spec.value_cap;
  const Int order = static_cast<unsigned long>(spec.group.order());
  if (!cap && spec.mode == SearchMode::min_nontrivial && lo <= 0 && hi >= 1 && order >= 3) cap = order - 1;
  if (cap && *cap < 0) throw UsageError("value cap must be nonnegative");

  std::atomic<bool> stop{false};
  Deadline deadline{std::nullopt, &stop};
  if (spec.max_seconds) {
    deadline.at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(*spec.max_seconds));
  }
  const Kernel kernel(spec, cap, frontier_p);

  ShardResult total;
  bool whole_box = false;
  if (spec.random_samples) {
    total = run_random(spec, kernel, lo, hi, *spec.random_samples, deadline);
  } else {
    const std::uint64_t base = static_cast<std::uint64_t>(hi - lo + 1);
    const std::size_t len = spec.group.order();
    // box size, saturating
    std::uint64_t size = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < len && !overflow; ++i) {
      if (size > std::numeric_limits<std::uint64_t>::max() / base) overflow = true;
      else size *= base;
    }
    if (overflow && !spec.max_elements && !spec.max_seconds) {
      throw UsageError("box has more than 2^64 elements; give a budget");
    }
    const std::uint64_t limit =
        std::min(overflow ? std::numeric_limits<std::uint64_t>::max() : size,
                 spec.max_elements.value_or(std::numeric_limits<std::uint64_t>::max()));
    whole_box = !overflow && limit == size;

    unsigned threads = spec.threads ? spec.threads : search_threads();
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, limit / 4096)));
    std::vector<ShardResult> shards(threads);
    if (threads == 1) {
      shards[0] = run_shard(spec, kernel, lo, base, 0, limit, deadline);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t b = limit / threads * t;
        const std::uint64_t e = t + 1 == threads ? limit : limit / threads * (t + 1);
        pool.emplace_back([&, t, b, e] { shards[t] = run_shard(spec, kernel, lo, base, b, e, deadline); });
      }
      for (auto& th : pool) th.join();
    }
    for (auto& s : shards) merge(total, std::move(s));
  }

  SearchReport report;
  report.spec = spec;
  report.spec.value_cap = cap;
  report.coeff_min = lo;
  report.elements_visited = total.visited;
  report.elements_pruned = total.pruned;
  report.exhausted = whole_box && total.completed;

  const Entry* best = nullptr;
  for (const auto& [v, e] : total.values) {
    RingElement el = make_element(spec.group, e.coeffs);
    if (det_exact(el) != v) {
      throw VerificationError("search kernel value " + v.get_str() + " disagrees with det_exact");
    }
    const Verdict verdict = check_laws(spec.group, v);
    if (verdict.status == Status::out) {
      throw VerificationError("determinant " + v.get_str() + " of " + spec.group.name() +
                              " violates a divisibility law (" + verdict.code + ")");
    }
    if (abs(v) >= 2 && (!best || better(v, report.best_value))) {
      best = &e;
      report.best_value = v;
    }
    report.spectrum.push_back({v, e.multiplicity, std::move(el)});
  }
  if (best) {
    report.found = true;
    report.best_element = make_element(spec.group, best->coeffs);
  }
  return report;
}

}  // namespace

SearchReport search_box(const SearchSpec& spec) {
  if (spec.coeff_bound < 1) throw UsageError("search_box needs coefficient bound >= 1");
  return run_search(spec, 0);
}

SearchReport search_frontier(std::uint64_t p, long coeff_bound, std::optional<std::uint64_t> max_elements,
                             long coeff_min) {
  if (p < 3 || !is_prime(Int(static_cast<unsigned long>(p)))) throw UsageError("frontier needs an odd prime p");
  SearchSpec spec;
  spec.group = GroupSpec::dicyclic(p);
  spec.coeff_bound = coeff_bound;
  spec.coeff_min = coeff_min;
  spec.mode = SearchMode::frontier;
  spec.max_elements = max_elements;
  return run_search(spec, p);
}

LambdaVerification verify_lambda(std::uint64_t n) {
  if (n < 3 || n % 2 == 0) throw UsageError("verify_lambda needs odd n >= 3");
  const GroupSpec g = GroupSpec::dicyclic(n);
  LambdaReport report = lambda_formula(g);
  Witness w = report.value == 16 ? witness_basic(g, BasicKind::sixteen)
                                 : witness_coprime(n, report.value);
  if (abs(w.claimed) != report.value) {
    throw VerificationError("witness value " + w.claimed.get_str() + " does not attain " + report.value.get_str());
  }
  return {std::move(report), std::move(w)};
}

}  // namespace gdet
