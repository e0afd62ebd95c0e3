#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "bounce/language.hpp"

namespace bounce {

// Query interface exposing only bounce-language data.  Reconstruction code
// sees nothing but this, which is what makes it an inverse problem.
class SpectrumOracle {
  public:
    virtual ~SpectrumOracle() = default;

    virtual std::vector<EdgeLabel> alphabet() const = 0;
    virtual bool contains(const std::vector<EdgeLabel>& word) const = 0;

    // Letters e with word.e still in the language.
    std::vector<EdgeLabel> list_extensions(const std::vector<EdgeLabel>& word) const;
};

// Oracle over a hidden polygon; the geometry never leaves this class.
class PolygonOracle final : public SpectrumOracle {
  public:
    explicit PolygonOracle(LabeledPolygon poly) : cache_(std::move(poly)) {}

    std::vector<EdgeLabel> alphabet() const override {
        return cache_.polygon().labels;
    }
    bool contains(const std::vector<EdgeLabel>& word) const override {
        return cache_.contains(word);
    }

  private:
    LanguageCache cache_;
};

// Oracle replaying a stored word list (e.g. a language file); words longer
// than the stored horizon are reported absent.
class StoredOracle final : public SpectrumOracle {
  public:
    StoredOracle(std::vector<EdgeLabel> alphabet,
                 std::set<std::vector<EdgeLabel>> words);
    explicit StoredOracle(const LanguageTable& table)
        : StoredOracle(table.alphabet, table.words) {}

    std::vector<EdgeLabel> alphabet() const override { return alphabet_; }
    bool contains(const std::vector<EdgeLabel>& word) const override;

  private:
    std::vector<EdgeLabel> alphabet_;
    std::set<std::vector<EdgeLabel>> words_;
};

// Parses a words file: one word per line, comma-separated labels.
StoredOracle load_stored_oracle(const std::string& path);

}  // namespace bounce
