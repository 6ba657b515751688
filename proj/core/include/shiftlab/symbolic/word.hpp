#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "shiftlab/systems/exact.hpp"

namespace shiftlab {

using Symbol = int;

struct Alphabet {
    int size = 0;

    Alphabet() = default;
    explicit Alphabet(int k) : size(k) {
        if (k < 1) throw error("alphabet size must be >= 1");
    }

    bool contains(Symbol s) const { return s >= 0 && s < size; }
    void require(Symbol s) const {
        if (!contains(s))
            throw error("symbol " + std::to_string(s) + " outside alphabet of size " +
                        std::to_string(size));
    }
};

struct Word {
    std::vector<Symbol> syms;

    Word() = default;
    explicit Word(std::vector<Symbol> s) : syms(std::move(s)) {}

    /// "0110" for single-digit symbols, "3,11,0" for comma-separated.
    static Word parse(const std::string& text);

    size_t size() const { return syms.size(); }
    bool empty() const { return syms.empty(); }
    Symbol at(size_t i) const { return syms.at(i); }
    Symbol operator[](size_t i) const { return syms[i]; }

    Word operator+(const Word& o) const;
    Word subword(size_t pos, size_t len) const;
    Word repeated(size_t times) const;
    bool contains_factor(const Word& f) const;

    auto operator<=>(const Word&) const = default;

    /// Length-then-lexicographic order, the tie-break used everywhere.
    static bool shorter_lex(const Word& a, const Word& b);

    std::string str() const;
};

struct Cylinder {
    size_t offset = 0;
    Word base;

    Cylinder(size_t off, Word b) : offset(off), base(std::move(b)) {
        if (base.empty()) throw error("cylinder base must be non-empty");
    }

    /// True iff the fixed coordinates match the given sequence window.
    template <typename SymbolAt>
    bool contains(SymbolAt&& at) const {
        for (size_t j = 0; j < base.size(); ++j)
            if (at(offset + j) != base[j]) return false;
        return true;
    }
};

/// All words of length n over the alphabet, lexicographic.
std::vector<Word> all_words(const Alphabet& a, size_t n);

}  // namespace shiftlab
