#pragma once

// Box enumeration of group ring elements: minimal non-trivial determinants,
// full value spectra, and the 2^5 p^ell m frontier of Q_{4p}.
//
// Enumeration order: coefficient vectors in the fixed element order of
// elements(g), lexicographic with coordinate 0 most significant and each
// coordinate running upward from coeff_min to coeff_max. The element at
// index i is therefore the base-(coeff_max - coeff_min + 1) expansion of i.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdet/groupring.hpp"
#include "gdet/laws.hpp"
#include "gdet/witnesses.hpp"

namespace gdet {

enum class SearchMode { min_nontrivial, spectrum, frontier };
std::string to_string(SearchMode m);
SearchMode search_mode_from_string(const std::string& s);

struct SearchSpec {
  GroupSpec group;
  // Coefficients range over [coeff_min, coeff_bound]; coeff_min defaults to -coeff_bound.
  long coeff_bound = 1;
  std::optional<long> coeff_min;
  // Only values with |v| <= value_cap are reported. For min_nontrivial the
  // default is |G| - 1 whenever the box contains the trivial element.
  std::optional<Int> value_cap;
  SearchMode mode = SearchMode::min_nontrivial;
  // Element budget: visit at most this many vectors (a prefix in the
  // documented order). Zero is rejected.
  std::optional<std::uint64_t> max_elements;
  // Wall-clock budget. Not reproducible; the element budget is.
  std::optional<double> max_seconds;
  // Sample this many uniform vectors from the box instead of enumerating.
  std::optional<std::uint64_t> random_samples;
  std::uint64_t seed = 1;
  // Skip elements whose M_1 M_2 already exceeds the cap.
  bool prune = true;
  // 0 means GDET_THREADS, else hardware concurrency.
  unsigned threads = 0;
};

struct SpectrumEntry {
  Int value;
  std::uint64_t multiplicity = 0;
  // First element in enumeration order attaining the value.
  RingElement example;
};

struct SearchReport {
  SearchSpec spec;
  long coeff_min = 0;
  bool found = false;
  Int best_value;
  std::optional<RingElement> best_element;
  // Distinct nonzero values within the cap, sorted.
  std::vector<SpectrumEntry> spectrum;
  bool exhausted = false;
  std::uint64_t elements_visited = 0;
  std::uint64_t elements_pruned = 0;
};

SearchReport search_box(const SearchSpec& spec);

// Q_{4p}, values +-2^5 p^ell m with ell in {0, 3, 5}, gcd(m, 2p) = 1 and
// |m| < (p^2 + 1)/2. coeff_min = 0 searches the {0..b} box.
SearchReport search_frontier(std::uint64_t p, long coeff_bound, std::optional<std::uint64_t> max_elements,
                             long coeff_min = 0);

// True when v has the frontier shape for p.
bool is_frontier_value(std::uint64_t p, const Int& v);

struct LambdaVerification {
  LambdaReport report;
  Witness witness;
};

// lambda(Q_{4n}) for odd n >= 3 from the attaining witness and the law
// certificates for every smaller magnitude.
LambdaVerification verify_lambda(std::uint64_t n);

// Thread count from GDET_THREADS, capped below by 1.
unsigned search_threads();

}  // namespace gdet
