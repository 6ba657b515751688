#include "shiftlab/symbolic/subshift.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace shiftlab {

struct Subshift::FactorCache {
    std::mutex mutex;
    Word pool;  // materialized prefix of the defining stream
    bool ready = false;
};

Subshift Subshift::full(int k) {
    Subshift s;
    s.kind_ = Kind::Full;
    s.alphabet_ = Alphabet(k);
    return s;
}

namespace {

std::vector<Word> normalize_forbidden(std::vector<Word> forbidden) {
    std::sort(forbidden.begin(), forbidden.end(), Word::shorter_lex);
    forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
    std::vector<Word> kept;
    for (const Word& w : forbidden) {
        if (w.empty()) throw error("empty forbidden word");
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Word& shorter) {
            return w.contains_factor(shorter);
        });
        if (!redundant) kept.push_back(w);
    }
    return kept;
}

}  // namespace

Subshift Subshift::sft(int k, std::vector<Word> forbidden) {
    Subshift s;
    s.kind_ = Kind::Sft;
    s.alphabet_ = Alphabet(k);
    for (const Word& w : forbidden)
        for (Symbol sym : w.syms) s.alphabet_.require(sym);
    s.forbidden_ = normalize_forbidden(std::move(forbidden));
    size_t maxlen = 0;
    for (const Word& w : s.forbidden_) maxlen = std::max(maxlen, w.size());
    s.step_ = maxlen == 0 ? 0 : static_cast<int>(maxlen) - 1;

    // Essential M-blocks: forbidden-free M-words pruned of dead ends.
    const int m = std::max(s.step_, 1);
    std::vector<Word> blocks;
    for (const Word& w : all_words(s.alphabet_, static_cast<size_t>(m))) {
        bool bad = std::any_of(s.forbidden_.begin(), s.forbidden_.end(),
                               [&](const Word& f) { return w.contains_factor(f); });
        if (!bad) blocks.push_back(w);
    }
    auto forbidden_free = [&](const Word& w) {
        return std::none_of(s.forbidden_.begin(), s.forbidden_.end(),
                            [&](const Word& f) { return w.contains_factor(f); });
    };
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Word> next;
        std::set<Word> alive(blocks.begin(), blocks.end());
        for (const Word& b : blocks) {
            bool has_successor = false;
            for (Symbol a = 0; a < s.alphabet_.size && !has_successor; ++a) {
                Word ext = b;
                ext.syms.push_back(a);
                Word succ = ext.subword(1, static_cast<size_t>(m));
                if (forbidden_free(ext) && alive.count(succ)) has_successor = true;
            }
            if (has_successor)
                next.push_back(b);
            else
                changed = true;
        }
        blocks = std::move(next);
    }
    s.essential_blocks_ = std::move(blocks);
    return s;
}

Subshift Subshift::sofic(LabeledGraph cover) {
    if (!cover.every_vertex_extends())
        throw error("sofic cover must have out-degree >= 1 at every vertex");
    Subshift s;
    s.kind_ = Kind::Sofic;
    s.alphabet_ = cover.alphabet;
    s.cover_ = std::move(cover);
    return s;
}

Subshift Subshift::substitution_shift(Substitution subst, Symbol seed,
                                      size_t factor_horizon) {
    if (!subst.prolongable(seed)) throw error("substitution seed not prolongable");
    Subshift s;
    s.kind_ = Kind::Substitution;
    s.alphabet_ = subst.alphabet;
    s.subst_ = std::move(subst);
    s.seed_ = seed;
    s.factor_horizon_ = factor_horizon;
    s.factors_ = std::make_shared<FactorCache>();
    return s;
}

Subshift Subshift::cover_walk(CoverGenerator gen, size_t vertex_horizon) {
    if (vertex_horizon < 2) throw error("vertex horizon too small");
    Subshift s;
    s.kind_ = Kind::CoverWalk;
    s.alphabet_ = gen.alphabet;
    s.generator_ = std::move(gen);
    s.vertex_horizon_ = vertex_horizon;
    return s;
}

Subshift Subshift::orbit_closure(StreamPtr t, int alphabet_size, size_t factor_horizon) {
    Subshift s;
    s.kind_ = Kind::OrbitClosure;
    s.alphabet_ = Alphabet(alphabet_size);
    s.closure_stream_ = std::move(t);
    s.factor_horizon_ = factor_horizon;
    s.factors_ = std::make_shared<FactorCache>();
    return s;
}

const std::vector<Word>& Subshift::forbidden() const {
    if (kind_ != Kind::Sft) throw error("forbidden() requires an SFT");
    return forbidden_;
}

const LabeledGraph& Subshift::cover() const {
    if (kind_ != Kind::Sofic) throw error("cover() requires a sofic presentation");
    return cover_;
}

int Subshift::step() const {
    if (kind_ == Kind::Full) return 0;
    if (kind_ == Kind::Sft) return step_;
    throw error("step() requires an SFT presentation");
}

const Word& Subshift::factor_pool() const {
    std::lock_guard lock(factors_->mutex);
    if (!factors_->ready) {
        StreamPtr src = kind_ == Kind::Substitution
                            ? make_substitution_stream(subst_, seed_)
                            : closure_stream_;
        size_t n = factor_horizon_;
        if (auto h = src->horizon()) n = std::min(n, *h);
        factors_->pool = src->prefix(n);
        factors_->ready = true;
    }
    return factors_->pool;
}

Admissibility Subshift::test(const Word& w) const {
    for (Symbol s : w.syms) alphabet_.require(s);
    switch (kind_) {
        case Kind::Full:
            return {true, false};
        case Kind::Sft:
            return test_sft(w);
        case Kind::Sofic:
            return test_sofic(w);
        case Kind::Substitution:
        case Kind::OrbitClosure:
            return test_factor_based(w);
        case Kind::CoverWalk:
            return test_cover_walk(w);
    }
    throw error("unreachable");
}

Admissibility Subshift::test_sft(const Word& w) const {
    for (const Word& f : forbidden_)
        if (w.contains_factor(f)) return {false, false};
    if (essential_blocks_.empty()) return {false, false};
    const size_t m = static_cast<size_t>(std::max(step_, 1));
    if (w.size() >= m) {
        Word last = w.subword(w.size() - m, m);
        bool ok = std::binary_search(essential_blocks_.begin(), essential_blocks_.end(),
                                     last);
        return {ok, false};
    }
    // Short word: admissible iff some essential block starts with it.
    for (const Word& b : essential_blocks_) {
        if (std::equal(w.syms.begin(), w.syms.end(), b.syms.begin()))
            return {true, false};
    }
    return {false, false};
}

Admissibility Subshift::test_sofic(const Word& w) const {
    std::vector<int> states(cover_.vertex_count);
    for (int i = 0; i < cover_.vertex_count; ++i) states[i] = i;
    for (Symbol a : w.syms) {
        states = cover_.step(states, a);
        if (states.empty()) return {false, false};
    }
    return {true, false};
}

Admissibility Subshift::test_factor_based(const Word& w) const {
    const Word& pool = factor_pool();
    if (w.size() > pool.size()) return {false, true};
    if (pool.contains_factor(w)) return {true, false};
    return {false, true};
}

Admissibility Subshift::test_cover_walk(const Word& w) const {
    // A surviving walk in the truncation is a walk in the full cover, so
    // acceptance is definitive; rejection is always horizon-limited.
    const int horizon = static_cast<int>(vertex_horizon_);
    std::set<int> states;
    for (int v = 0; v < horizon; ++v) states.insert(v);
    for (Symbol a : w.syms) {
        std::set<int> next;
        for (int v : states) {
            for (const auto& e : generator_.edges_of(v)) {
                if (e.label == a && e.to < horizon) next.insert(e.to);
            }
        }
        states = std::move(next);
        if (states.empty()) return {false, true};
    }
    return {true, false};
}

std::vector<Word> Subshift::language(size_t n) const {
    if ((kind_ == Kind::Substitution || kind_ == Kind::OrbitClosure) &&
        n > factor_horizon_)
        throw error("factor horizon " + std::to_string(factor_horizon_) +
                    " insufficient for language of length " + std::to_string(n));
    if (n == 0) {
        if (test(Word()).admissible) return {Word()};
        return {};
    }
    if (kind_ == Kind::Substitution || kind_ == Kind::OrbitClosure) {
        const Word& pool = factor_pool();
        std::set<Word> seen;
        for (size_t i = 0; i + n <= pool.size(); ++i) seen.insert(pool.subword(i, n));
        return {seen.begin(), seen.end()};
    }
    // Prefix-closed DFS: the language is factorial, so only admissible
    // prefixes are extended.
    std::vector<Word> frontier{Word()};
    for (size_t depth = 0; depth < n; ++depth) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (Symbol a = 0; a < alphabet_.size; ++a) {
                Word ext = w;
                ext.syms.push_back(a);
                if (test(ext).admissible) next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

bool Subshift::is_irreducible() const {
    switch (kind_) {
        case Kind::Full:
            return true;
        case Kind::Sft: {
            if (essential_blocks_.empty()) return false;
            const size_t m = static_cast<size_t>(std::max(step_, 1));
            std::map<Word, int> idx;
            for (const Word& b : essential_blocks_)
                idx.emplace(b, static_cast<int>(idx.size()));
            LabeledGraph g(Alphabet(alphabet_.size),
                           static_cast<int>(essential_blocks_.size()));
            for (const Word& b : essential_blocks_) {
                for (Symbol a = 0; a < alphabet_.size; ++a) {
                    Word ext = b;
                    ext.syms.push_back(a);
                    if (!test_sft(ext).admissible) continue;
                    Word succ = ext.subword(1, m);
                    auto it = idx.find(succ);
                    if (it != idx.end()) g.add_edge(idx[b], it->second, a);
                }
            }
            return g.strongly_connected();
        }
        case Kind::Sofic: {
            try {
                (void)fischer_cover(cover_);
                return true;
            } catch (const error&) {
                return false;
            }
        }
        default:
            throw error("is_irreducible: presentation is not decidable (" + describe() +
                        ")");
    }
}

Word Subshift::glue(const Word& u, const Word& v) const {
    if (!is_admissible(u) || !is_admissible(v))
        throw error("glue: both words must be admissible");
    return glue_after_prefix(u, v);
}

Word Subshift::glue_after_prefix(const Word& prefix, const Word& next) const {
    if (kind_ == Kind::Full) return Word();
    if (kind_ != Kind::Sft && kind_ != Kind::Sofic)
        throw error("glue requires a Full/SFT/Sofic presentation");

    // For an SFT only the last M symbols of the prefix matter.
    Word head = prefix;
    if (kind_ == Kind::Sft) {
        size_t m = static_cast<size_t>(std::max(step_, 1));
        if (head.size() > m) head = head.subword(head.size() - m, m);
    }
    size_t cap = 4;
    if (kind_ == Kind::Sft)
        cap = std::max<size_t>(cap, essential_blocks_.size() + step_ + 2);
    else
        cap = std::max<size_t>(cap, 2 * static_cast<size_t>(cover_.vertex_count) + 2);

    for (size_t len = 0; len <= cap; ++len) {
        for (const Word& g : all_words(alphabet_, len)) {
            Word candidate = head + g + next;
            if (kind_ == Kind::Sofic) {
                // The connector must be valid after the entire prefix.
                candidate = prefix + g + next;
            }
            if (test(candidate).admissible) return g;
        }
    }
    throw error("no connector found within length " + std::to_string(cap) +
                " (subshift may be reducible)");
}

namespace {

/// Lazy transitive enumeration shared through shared_ptr state.
struct EnumerationState {
    std::mutex mutex;
    Word built;               // materialized admissible prefix
    size_t catalog_len = 0;   // current word length being enumerated
    std::vector<Word> level;  // language(catalog_len), sorted
    size_t level_pos = 0;
};

}  // namespace

StreamPtr Subshift::transitive_stream() const {
    if (!is_irreducible())
        throw error("transitive stream requires an irreducible subshift");
    auto state = std::make_shared<EnumerationState>();
    Subshift self = *this;
    auto fn = [state, self](size_t i) -> Symbol {
        std::lock_guard lock(state->mutex);
        while (state->built.size() <= i) {
            if (state->level_pos >= state->level.size()) {
                ++state->catalog_len;
                state->level = self.language(state->catalog_len);
                state->level_pos = 0;
                if (state->level.empty())
                    throw error("language exhausted during enumeration");
            }
            const Word& next = state->level[state->level_pos++];
            Word g = state->built.empty()
                         ? Word()
                         : self.glue_after_prefix(state->built, next);
            state->built = state->built + g + next;
        }
        return state->built[i];
    };
    return make_function_stream(fn, "transitive(" + describe() + ")");
}

bool Subshift::is_synchronizing(const Word& w) const {
    if (!is_admissible(w)) throw error("is_synchronizing: word must be admissible");
    if (kind_ == Kind::Full) return true;
    if (kind_ == Kind::Sft) {
        if (static_cast<int>(w.size()) >= step_) return true;
        // Short words: checking contexts of length M on both sides is
        // exact, since admissibility is M-local plus right-extendability.
        const size_t m = static_cast<size_t>(step_);
        for (size_t lu = 0; lu <= m; ++lu) {
            for (const Word& u : all_words(alphabet_, lu)) {
                if (!is_admissible(u + w)) continue;
                for (size_t lv = 0; lv <= m; ++lv) {
                    for (const Word& v : all_words(alphabet_, lv)) {
                        if (is_admissible(w + v) && !is_admissible(u + w + v))
                            return false;
                    }
                }
            }
        }
        return true;
    }
    if (kind_ == Kind::Sofic) {
        // w synchronizes iff the surviving endpoints all have the same
        // follower class in the determinized, follower-merged cover.
        LabeledGraph det = follower_merge(determinize(cover_));
        std::vector<int> states(det.vertex_count);
        for (int i = 0; i < det.vertex_count; ++i) states[i] = i;
        for (Symbol a : w.syms) states = det.step(states, a);
        return states.size() == 1;
    }
    throw error("is_synchronizing: unsupported presentation (" + describe() + ")");
}

std::vector<Word> Subshift::periodic_words(size_t p) const {
    if (p < 1) throw error("period must be >= 1");
    std::vector<Word> out;
    switch (kind_) {
        case Kind::Full:
            return all_words(alphabet_, p);
        case Kind::Sft: {
            size_t reps = (static_cast<size_t>(step_) + 1 + p - 1) / p + 1;
            for (const Word& u : language(p)) {
                Word rep = u.repeated(reps);
                bool bad = std::any_of(
                    forbidden_.begin(), forbidden_.end(),
                    [&](const Word& f) { return rep.contains_factor(f); });
                if (!bad) out.push_back(u);
            }
            return out;
        }
        case Kind::Sofic: {
            for (const Word& u : language(p)) {
                // u^inf lives in the shift iff reading u repeatedly from
                // some vertex never dies; the survivor-set sequence is
                // eventually periodic, so |V|+1 repetitions decide it.
                std::vector<int> states(cover_.vertex_count);
                for (int i = 0; i < cover_.vertex_count; ++i) states[i] = i;
                bool alive = true;
                for (int rep = 0; rep <= cover_.vertex_count && alive; ++rep) {
                    for (Symbol a : u.syms) {
                        states = cover_.step(states, a);
                        if (states.empty()) {
                            alive = false;
                            break;
                        }
                    }
                }
                if (alive) out.push_back(u);
            }
            return out;
        }
        default:
            throw error("periodic_words: unsupported presentation (" + describe() + ")");
    }
}

std::string Subshift::describe() const {
    switch (kind_) {
        case Kind::Full:
            return "full shift on " + std::to_string(alphabet_.size) + " symbols";
        case Kind::Sft: {
            std::string f;
            for (size_t i = 0; i < forbidden_.size(); ++i) {
                if (i) f += ",";
                f += forbidden_[i].str();
            }
            return "SFT forbidden {" + f + "}";
        }
        case Kind::Sofic:
            return "sofic (" + std::to_string(cover_.vertex_count) + "-vertex cover)";
        case Kind::Substitution:
            return "substitution shift (horizon " + std::to_string(factor_horizon_) +
                   ")";
        case Kind::CoverWalk:
            return generator_.name + " (vertex horizon " +
                   std::to_string(vertex_horizon_) + ")";
        case Kind::OrbitClosure:
            return "orbit closure (horizon " + std::to_string(factor_horizon_) + ")";
    }
    return "?";
}

EdgeShift edge_shift(const LabeledGraph& g) {
    EdgeShift es;
    es.graph = g;
    es.edge_list = g.edges;
    const int n = static_cast<int>(g.edges.size());
    std::vector<Word> forbidden;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.edges[i].to != g.edges[j].from)
                forbidden.push_back(Word({i, j}));
    es.shift = Subshift::sft(n, std::move(forbidden));
    return es;
}

CoverGenerator spine_return_cover(Substitution subst, Symbol seed,
                                  Symbol return_symbol) {
    StreamPtr fp = make_substitution_stream(subst, seed);
    int k = subst.alphabet.size;
    if (return_symbol != k)
        throw error("return symbol must extend the substitution alphabet by one");
    CoverGenerator gen;
    gen.alphabet = Alphabet(k + 1);
    gen.name = "spine-return cover";
    gen.edges_of = [fp, return_symbol](int v) {
        std::vector<LabeledGraph::Edge> out;
        out.push_back({v, v + 1, fp->at(static_cast<size_t>(v))});
        if (v >= 2 && v % 2 == 0) out.push_back({v, 0, return_symbol});
        return out;
    };
    return gen;
}

}  // namespace shiftlab
