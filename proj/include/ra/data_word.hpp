/* data_word.hpp -- finite words of (symbol, atom) letters */

#pragma once

#include <string>
#include <vector>

#include "ra/atoms.hpp"

namespace ra {

struct Letter {
    std::string symbol;
    Atom atom = 0;

    bool operator==(const Letter&) const = default;
};

using DataWord = std::vector<Letter>;

/// Renames atoms so that each first occurrence receives the least unused id
/// starting from 0. Idempotent; the result lies in the orbit of `w`.
DataWord canonical_word(const DataWord& w);

DataWord permuted(const AtomPermutation& pi, const DataWord& w);

/// Text form: comma-separated "symbol:atom" tokens; the empty string denotes
/// the empty word.
std::string format_word(const DataWord& w);

/// Parses the text form. Throws std::invalid_argument on malformed input.
DataWord parse_word(const std::string& text);

std::vector<Atom> word_atoms(const DataWord& w);

} // namespace ra
