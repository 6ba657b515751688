#include "shiftlab/symbolic/substitution.hpp"

namespace shiftlab {

Substitution::Substitution(Alphabet a, std::map<Symbol, Word> r)
    : alphabet(a), rules(std::move(r)) {
    for (Symbol s = 0; s < alphabet.size; ++s) {
        auto it = rules.find(s);
        if (it == rules.end() || it->second.empty())
            throw error("substitution needs a non-empty rule for symbol " +
                        std::to_string(s));
        for (Symbol t : it->second.syms) alphabet.require(t);
    }
}

Word Substitution::apply(const Word& w) const {
    Word out;
    for (Symbol s : w.syms) {
        const Word& img = rules.at(s);
        out.syms.insert(out.syms.end(), img.syms.begin(), img.syms.end());
    }
    return out;
}

bool Substitution::prolongable(Symbol seed) const {
    alphabet.require(seed);
    const Word& img = rules.at(seed);
    return img.size() >= 2 && img[0] == seed;
}

Substitution Substitution::morse() {
    return Substitution(Alphabet(2), {{0, Word::parse("01")}, {1, Word::parse("10")}});
}

}  // namespace shiftlab
