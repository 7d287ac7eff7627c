#include "conf2/loopspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace conf2 {

bool is_admissible(const AdmissibleWord& word) {
    std::int64_t previous = 1;
    for (const auto entry : word.entries) {
        if (entry < previous) return false;  // also rejects entries < 1
        previous = entry;
    }
    return true;
}

std::string to_string(const AdmissibleWord& word) {
    std::string out = "Q(";
    for (std::size_t i = 0; i < word.entries.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(word.entries[i]);
    }
    out += ')';
    return out;
}

std::string make_generator_id(std::int64_t handle_degree, std::int64_t copy,
                              const AdmissibleWord& word) {
    std::string id = "h" + std::to_string(handle_degree) + "c" + std::to_string(copy);
    if (!word.empty()) id += "." + to_string(word);
    return id;
}

std::vector<AdmissibleWord> enumerate_admissible(std::int64_t lambda_max,
                                                 std::int64_t weight_cap) {
    if (lambda_max < 0)
        throw std::invalid_argument("enumerate_admissible: lambda_max must be >= 0");
    if (weight_cap < 1)
        throw std::invalid_argument("enumerate_admissible: weight_cap must be >= 1");

    std::vector<AdmissibleWord> words;
    words.push_back(AdmissibleWord{});
    if (lambda_max == 0) return words;

    std::int64_t max_length = 0;
    while (max_length < 62 && (std::int64_t{1} << (max_length + 1)) <= weight_cap)
        ++max_length;

    for (std::int64_t length = 1; length <= max_length; ++length) {
        // nondecreasing words over 1..lambda_max in lexicographic order
        std::vector<std::int64_t> current(static_cast<std::size_t>(length), 1);
        while (true) {
            words.push_back(AdmissibleWord{current});
            std::int64_t pos = length - 1;
            while (pos >= 0 && current[static_cast<std::size_t>(pos)] == lambda_max) --pos;
            if (pos < 0) break;
            const std::int64_t bumped = ++current[static_cast<std::size_t>(pos)];
            for (std::int64_t i = pos + 1; i < length; ++i)
                current[static_cast<std::size_t>(i)] = bumped;
        }
    }
    return words;
}

std::int64_t word_reduced_degree(const AdmissibleWord& word, std::int64_t handle_degree) {
    if (handle_degree < 0)
        throw std::invalid_argument("word_reduced_degree: handle_degree must be >= 0");
    if (!is_admissible(word))
        throw std::invalid_argument("word_reduced_degree: word is not admissible");
    std::int64_t acc = 0;
    std::int64_t power = 1;
    for (const auto entry : word.entries) {
        acc += power * entry;
        power *= 2;
    }
    return acc + power * handle_degree;
}

std::vector<GeneratorSpec> loop_space_generators(std::int64_t loop_order,
                                                 std::int64_t handle_degree,
                                                 std::int64_t ambient_dim,
                                                 std::int64_t weight_cap) {
    if (loop_order < 0)
        throw std::invalid_argument("loop_space_generators: loop_order must be >= 0");
    if (handle_degree < 0)
        throw std::invalid_argument("loop_space_generators: handle_degree must be >= 0");
    if (weight_cap < 1)
        throw std::invalid_argument("loop_space_generators: weight_cap must be >= 1");
    if (ambient_dim != loop_order + handle_degree)
        throw std::invalid_argument(
            "loop_space_generators: loop_order must equal ambient_dim - handle_degree");

    std::vector<GeneratorSpec> generators;
    if (loop_order == 0) {
        // zero-fold loop space on a sphere: one exterior class in the top degree
        GeneratorSpec top;
        top.id = make_generator_id(handle_degree, 0, {});
        top.handle_degree = handle_degree;
        top.reduced_degree = handle_degree;
        top.weight = 1;
        top.exterior = true;
        generators.push_back(std::move(top));
        return generators;
    }

    for (auto& word : enumerate_admissible(loop_order - 1, weight_cap)) {
        GeneratorSpec g;
        g.id = make_generator_id(handle_degree, 0, word);
        g.handle_degree = handle_degree;
        g.reduced_degree = word_reduced_degree(word, handle_degree);
        g.weight = std::int64_t{1} << word.length();
        g.exterior = false;
        g.word = std::move(word);
        generators.push_back(std::move(g));
    }

    std::sort(generators.begin(), generators.end(),
              [](const GeneratorSpec& a, const GeneratorSpec& b) {
                  return std::tie(a.weight, a.reduced_degree, a.word.entries) <
                         std::tie(b.weight, b.reduced_degree, b.word.entries);
              });
    return generators;
}

}  // namespace conf2
