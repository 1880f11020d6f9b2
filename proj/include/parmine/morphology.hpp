#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace parmine {

enum class Pos { noun, other };

struct Analysis {
    std::string lemma;
    Pos pos = Pos::other;

    bool operator==(const Analysis&) const = default;
};

// Wordform -> lemma table for one language. Keys are case-folded; lookup is
// case-insensitive. After loading, every lemma that appears in the table
// also analyzes to itself.
class MorphDictionary {
public:
    MorphDictionary() = default;
    explicit MorphDictionary(std::string lang) : lang_(std::move(lang)) {}

    const std::string& lang() const { return lang_; }
    std::size_t size() const { return entries_.size(); }

    // All analyses for the case-folded wordform, in dictionary order; empty
    // for out-of-vocabulary words.
    const std::vector<Analysis>& analyses(const std::string& wordform) const;

    // Appends unless the exact (lemma, pos) is already present under the key.
    // `wordform` must already be case-folded.
    void add(const std::string& wordform, Analysis analysis);

    const std::unordered_map<std::string, std::vector<Analysis>>& entries() const {
        return entries_;
    }

    bool operator==(const MorphDictionary&) const = default;

private:
    std::string lang_;
    std::unordered_map<std::string, std::vector<Analysis>> entries_;
};

// TSV rows `wordform<TAB>lemma<TAB>pos`, '#' comments. Any pos tag other
// than `noun_tag` is kept as Pos::other; an empty tag or empty lemma is a
// load error naming the line.
MorphDictionary load_morph_dictionary(const std::string& path, const std::string& lang,
                                      const std::string& noun_tag = "noun");

// Union with a supplement file in the same format; supplement analyses are
// listed before the base ones for a shared wordform.
MorphDictionary augment(const MorphDictionary& md, const std::string& extra_path,
                        const std::string& noun_tag = "noun");

// Rows sorted by wordform; reloading restores the identical dictionary.
void save_morph_dictionary(const MorphDictionary& md, const std::string& path);

}  // namespace parmine
