/**
 * @file search.hpp
 * @brief Height-bounded exhaustive discovery of strong D(-1) singletons,
 *        pairs, and triples.
 *
 * The search space is the singleton parametrization, not raw fraction
 * enumeration: a > 1 has a^2 - 1 square iff a = (p^2+q^2)/(2pq) for coprime
 * p > q >= 1 (a = 1 joins separately), which shrinks the scan from O(H^2)
 * candidates to O(H). Pair tests use a quadratic-residue reject before the
 * exact integer square root; results are bit-identical with the reject
 * disabled.
 *
 * Heights are bounded per element by max(|num|, den) <= H. The native engine
 * works in 64/128-bit words and accepts H up to 2^31 - 1 (the full published
 * search bound 2.5e7 fits comfortably; CI-scale runs use far less).
 */
#ifndef STRIPLE_SEARCH_HPP
#define STRIPLE_SEARCH_HPP

#include <functional>

#include "striple/families.hpp"

namespace striple {

enum class SearchMode { singletons, pairs, triples };

struct SearchConfig {
    Integer height_bound = 1;
    SearchMode mode = SearchMode::triples;
    bool require_one = false; // restrict to tuples containing the element 1
    int jobs = 1;
    bool fast_reject = true; // modular non-square pre-filter (identical results)
    std::function<void(size_t, size_t)> progress; // (chunks done, chunks total)
};

// All a >= 1 with a^2 - 1 a rational square and height(a) <= H, sorted
// ascending. Complete: the parametrization is onto.
std::vector<Rational> enumerate_singletons(const Integer& height_bound);

std::vector<StrongPair> find_pairs(const SearchConfig& config);
std::vector<StrongTriple> find_triples(const SearchConfig& config);

// All c with height(c) <= H_c completing a verified pair {1, b} to a strong
// triple {1, b, c}, sorted ascending.
std::vector<Rational> extend_pair(const StrongPair& pair, const Integer& height_bound,
                                  const SearchConfig& config = {});

} // namespace striple

#endif
