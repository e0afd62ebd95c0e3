#include "bounce/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace bounce {

std::vector<EdgeLabel> SpectrumOracle::list_extensions(
    const std::vector<EdgeLabel>& word) const {
    std::vector<EdgeLabel> out;
    for (const EdgeLabel& e : alphabet()) {
        if (!word.empty() && e == word.back()) continue;
        std::vector<EdgeLabel> we = word;
        we.push_back(e);
        if (contains(we)) out.push_back(e);
    }
    return out;
}

StoredOracle::StoredOracle(std::vector<EdgeLabel> alphabet,
                           std::set<std::vector<EdgeLabel>> words)
    : alphabet_(std::move(alphabet)), words_(std::move(words)) {}

bool StoredOracle::contains(const std::vector<EdgeLabel>& word) const {
    if (word.empty()) return true;
    if (word.size() == 1) {
        return std::find(alphabet_.begin(), alphabet_.end(), word[0]) !=
               alphabet_.end();
    }
    return words_.count(word) > 0;
}

StoredOracle load_stored_oracle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open words file: " + path);
    std::set<std::vector<EdgeLabel>> words;
    std::set<EdgeLabel> letters;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const BounceWord w = BounceWord::parse(line);
        for (const EdgeLabel& l : w.letters) letters.insert(l);
        words.insert(w.letters);
    }
    return StoredOracle(std::vector<EdgeLabel>(letters.begin(), letters.end()),
                        std::move(words));
}

}  // namespace bounce
