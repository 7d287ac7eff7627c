#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace conf2 {

/**
 * A nondecreasing sequence (i_1 <= ... <= i_r) of positive integers,
 * indexing an iterated homology operation. The empty word stands for a
 * fundamental class itself.
 */
struct AdmissibleWord {
    std::vector<std::int64_t> entries;

    std::int64_t length() const { return static_cast<std::int64_t>(entries.size()); }
    bool empty() const { return entries.empty(); }

    /// Largest entry; 0 for the empty word.
    std::int64_t lambda() const { return entries.empty() ? 0 : entries.back(); }

    auto operator<=>(const AdmissibleWord&) const = default;
};

bool is_admissible(const AdmissibleWord& word);

/// Renders (1,1,2) as "Q(1,1,2)" and the empty word as "Q()".
std::string to_string(const AdmissibleWord& word);

/**
 * One multiplicative generator of a labelled-configuration-space algebra.
 *
 * Gradings are kept independent of the label sphere: `reduced_degree` is the
 * homological degree minus n times the weight, so nothing here mentions n.
 * `exterior` marks the top-dimensional class, whose square vanishes.
 */
struct GeneratorSpec {
    std::string id;
    std::int64_t handle_degree = 0;
    AdmissibleWord word;
    std::int64_t reduced_degree = 0;
    std::int64_t weight = 1;
    bool exterior = false;
};

/// Stable generator identifier built from handle degree, copy index and word.
std::string make_generator_id(std::int64_t handle_degree, std::int64_t copy,
                              const AdmissibleWord& word);

/**
 * All admissible words with every entry <= lambda_max and 2^length <=
 * weight_cap, shortest first and lexicographic within a length. The empty
 * word is always included; lambda_max = 0 yields only the empty word.
 */
std::vector<AdmissibleWord> enumerate_admissible(std::int64_t lambda_max,
                                                 std::int64_t weight_cap);

/// i_1 + 2 i_2 + ... + 2^{r-1} i_r + 2^r * handle_degree.
std::int64_t word_reduced_degree(const AdmissibleWord& word, std::int64_t handle_degree);

/**
 * Generators of the mod-2 homology of the loop_order-fold loop space on a
 * sphere, one per admissible word with lambda <= loop_order - 1 and weight
 * <= weight_cap. A word of length r contributes weight 2^r; loop_order = 0
 * gives the single exterior top class instead. Ordered by weight, then
 * reduced degree, then word.
 *
 * Requires loop_order = ambient_dim - handle_degree >= 0.
 */
std::vector<GeneratorSpec> loop_space_generators(std::int64_t loop_order,
                                                 std::int64_t handle_degree,
                                                 std::int64_t ambient_dim,
                                                 std::int64_t weight_cap);

}  // namespace conf2
