#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gqlbench {

// Fixed built-in pool of ~5,000 lowercase pseudo-words used for publication
// titles and abstracts. Independent of seed and scale factor; the metadata
// file records which pool words actually occur in the generated text.
inline const std::vector<std::string>& word_pool() {
    static const std::vector<std::string> pool = [] {
        static const char* consonants = "bcdfghklmnprstvz";  // 16
        static const char* vowels = "aeiou";                 // 5
        std::vector<std::string> syll;
        syll.reserve(80);
        for (int c = 0; c < 16; ++c)
            for (int v = 0; v < 5; ++v)
                syll.push_back(std::string() + consonants[c] + vowels[v]);
        std::vector<std::string> words;
        words.reserve(5000);
        // 80*80 = 6400 distinct two-syllable combinations; keep the first 5000.
        for (std::size_t i = 0; words.size() < 5000; ++i)
            words.push_back(syll[i / 80] + syll[i % 80]);
        return words;
    }();
    return pool;
}

inline std::size_t word_pool_size() { return word_pool().size(); }

}  // namespace gqlbench
