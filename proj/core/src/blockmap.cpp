#include "shiftlab/symbolic/blockmap.hpp"

namespace shiftlab {

BlockMap::BlockMap(int m, int n, Alphabet in, Alphabet out, std::map<Word, Symbol> t)
    : memory(m), anticipation(n), in_alphabet(in), out_alphabet(out),
      table(std::move(t)) {
    if (m < 0 || n < 0) throw error("negative memory/anticipation");
    for (const auto& [w, s] : table) {
        if (w.size() != static_cast<size_t>(window()))
            throw error("block map table entry of wrong length");
        for (Symbol sym : w.syms) in_alphabet.require(sym);
        out_alphabet.require(s);
    }
}

Symbol BlockMap::apply_block(const Word& w) const {
    auto it = table.find(w);
    if (it == table.end())
        throw error("block '" + w.str() + "' absent from block map table");
    return it->second;
}

Word BlockMap::apply(const Word& s) const {
    const size_t win = static_cast<size_t>(window());
    if (s.size() < win)
        throw error("input shorter than block window (" + std::to_string(win) + ")");
    Word out;
    out.syms.reserve(s.size() - win + 1);
    for (size_t i = 0; i + win <= s.size(); ++i)
        out.syms.push_back(apply_block(s.subword(i, win)));
    return out;
}

StreamPtr BlockMap::apply(const StreamPtr& s) const {
    BlockMap self = *this;
    StreamPtr src = s;
    auto fn = [self, src](size_t i) {
        return self.apply_block(src->window(i, static_cast<size_t>(self.window())));
    };
    std::optional<Word> periodic;
    if (auto u = src->periodic_word()) {
        // The image of u^inf is (image of the first |u| windows)^inf.
        Word rep = *u + *u;
        while (rep.size() < u->size() + static_cast<size_t>(window()) - 1)
            rep = rep + *u;
        periodic = self.apply(rep.subword(0, u->size() + window() - 1));
    }
    return make_function_stream(fn, "blockmap(" + src->describe() + ")", periodic);
}

BlockMap BlockMap::identity(Alphabet a) {
    std::map<Word, Symbol> t;
    for (Symbol s = 0; s < a.size; ++s) t.emplace(Word({s}), s);
    return BlockMap(0, 0, a, a, std::move(t));
}

BlockMap BlockMap::one_block(Alphabet in, Alphabet out, std::vector<Symbol> images) {
    if (images.size() != static_cast<size_t>(in.size))
        throw error("one_block needs one image per symbol");
    std::map<Word, Symbol> t;
    for (Symbol s = 0; s < in.size; ++s) t.emplace(Word({s}), images[s]);
    return BlockMap(0, 0, in, out, std::move(t));
}

}  // namespace shiftlab
