#pragma once

#include <map>

#include "shiftlab/symbolic/stream.hpp"
#include "shiftlab/symbolic/word.hpp"

namespace shiftlab {

/*
 * Sliding block code with memory m and anticipation n: the output
 * symbol at position i is table(w) for the window w of length m+n+1
 * around i. On one-sided streams the window anchors at i itself
 * (output(i) reads input positions i .. i+m+n), which recodes memory
 * into anticipation; m and n are kept for factor-map bookkeeping.
 */
struct BlockMap {
    int memory = 0;
    int anticipation = 0;
    Alphabet in_alphabet;
    Alphabet out_alphabet;
    std::map<Word, Symbol> table;

    BlockMap() = default;
    BlockMap(int m, int n, Alphabet in, Alphabet out, std::map<Word, Symbol> t);

    int window() const { return memory + anticipation + 1; }

    Symbol apply_block(const Word& w) const;

    /// Output length |s| - m - n.
    Word apply(const Word& s) const;

    StreamPtr apply(const StreamPtr& s) const;

    static BlockMap identity(Alphabet a);
    /// One-block map given symbol-by-symbol images.
    static BlockMap one_block(Alphabet in, Alphabet out, std::vector<Symbol> images);
};

}  // namespace shiftlab
