#include "ra/data_word.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace ra {

DataWord canonical_word(const DataWord& w) {
    DataWord out;
    out.reserve(w.size());
    std::unordered_map<Atom, Atom> renaming;
    for (const Letter& letter : w) {
        auto [it, inserted] =
            renaming.emplace(letter.atom, static_cast<Atom>(renaming.size()));
        out.push_back({letter.symbol, it->second});
        (void)inserted;
    }
    return out;
}

DataWord permuted(const AtomPermutation& pi, const DataWord& w) {
    DataWord out = w;
    for (Letter& letter : out) letter.atom = pi.apply(letter.atom);
    return out;
}

std::string format_word(const DataWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ",";
        out += w[i].symbol + ":" + std::to_string(w[i].atom);
    }
    return out;
}

DataWord parse_word(const std::string& text) {
    DataWord out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        const std::string token = text.substr(start, end - start);
        const std::size_t colon = token.rfind(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == token.size())
            throw std::invalid_argument("malformed data-word token '" + token +
                                        "' (expected symbol:atom)");
        const std::string symbol = token.substr(0, colon);
        const std::string digits = token.substr(colon + 1);
        if (!std::all_of(digits.begin(), digits.end(),
                         [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("malformed atom id in token '" + token + "'");
        out.push_back({symbol, static_cast<Atom>(std::stoul(digits))});
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

std::vector<Atom> word_atoms(const DataWord& w) {
    std::vector<Atom> atoms;
    for (const Letter& letter : w)
        if (std::find(atoms.begin(), atoms.end(), letter.atom) == atoms.end())
            atoms.push_back(letter.atom);
    return atoms;
}

} // namespace ra
