#include "shiftlab/symbolic/word.hpp"

#include <algorithm>
#include <sstream>

namespace shiftlab {

Word Word::parse(const std::string& text) {
    std::vector<Symbol> syms;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ','))
            syms.push_back(std::stoi(tok));
    } else {
        for (char ch : text) {
            if (ch == ' ') continue;
            if (ch < '0' || ch > '9')
                throw error(std::string("bad symbol character '") + ch + "' in word");
            syms.push_back(ch - '0');
        }
    }
    return Word(std::move(syms));
}

Word Word::operator+(const Word& o) const {
    Word r(*this);
    r.syms.insert(r.syms.end(), o.syms.begin(), o.syms.end());
    return r;
}

Word Word::subword(size_t pos, size_t len) const {
    if (pos + len > syms.size()) throw error("subword out of range");
    return Word(std::vector<Symbol>(syms.begin() + pos, syms.begin() + pos + len));
}

Word Word::repeated(size_t times) const {
    Word r;
    r.syms.reserve(syms.size() * times);
    for (size_t i = 0; i < times; ++i)
        r.syms.insert(r.syms.end(), syms.begin(), syms.end());
    return r;
}

bool Word::contains_factor(const Word& f) const {
    if (f.empty()) return true;
    if (f.size() > syms.size()) return false;
    return std::search(syms.begin(), syms.end(), f.syms.begin(), f.syms.end()) !=
           syms.end();
}

bool Word::shorter_lex(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.syms < b.syms;
}

std::string Word::str() const {
    bool wide = std::any_of(syms.begin(), syms.end(), [](Symbol s) { return s > 9; });
    std::string out;
    for (size_t i = 0; i < syms.size(); ++i) {
        if (wide && i) out += ',';
        out += std::to_string(syms[i]);
    }
    return out;
}

std::vector<Word> all_words(const Alphabet& a, size_t n) {
    std::vector<Word> out;
    Word cur;
    cur.syms.assign(n, 0);
    if (n == 0) return {cur};
    while (true) {
        out.push_back(cur);
        size_t i = n;
        while (i > 0 && cur.syms[i - 1] == a.size - 1) cur.syms[--i] = 0;
        if (i == 0) break;
        ++cur.syms[i - 1];
    }
    return out;
}

}  // namespace shiftlab
