#pragma once

#include <map>

#include "shiftlab/symbolic/word.hpp"

namespace shiftlab {

/// A substitution on the alphabet: every symbol maps to a non-empty word.
struct Substitution {
    Alphabet alphabet;
    std::map<Symbol, Word> rules;

    Substitution() = default;
    Substitution(Alphabet a, std::map<Symbol, Word> r);

    Word apply(const Word& w) const;

    /// seed s is prolongable when rule(s) starts with s and is longer than
    /// one symbol, so iterated expansion converges to a fixed point.
    bool prolongable(Symbol seed) const;

    static Substitution morse();
};

}  // namespace shiftlab
