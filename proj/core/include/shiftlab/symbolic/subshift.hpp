#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <set>

#include "shiftlab/symbolic/graph.hpp"
#include "shiftlab/symbolic/stream.hpp"
#include "shiftlab/symbolic/substitution.hpp"
#include "shiftlab/symbolic/word.hpp"

namespace shiftlab {

struct Admissibility {
    bool admissible = false;
    /// True when the verdict could change with a larger horizon
    /// (CoverWalk / Substitution / OrbitClosure rejections only).
    bool horizon_limited = false;
};

/// Lazily generated infinite cover: vertex ids are 0,1,2,...; edges_of
/// must be pure. Every vertex of the full graph must have out-degree
/// >= 1, so any finite walk certifies admissibility.
struct CoverGenerator {
    Alphabet alphabet;
    std::function<std::vector<LabeledGraph::Edge>(int)> edges_of;
    std::string name = "generated cover";
};

/*
 * Admissibility oracle over a finite alphabet in one of the supported
 * presentations. Immutable after construction; lazy caches are
 * internally synchronized.
 */
class Subshift {
  public:
    enum class Kind { Full, Sft, Sofic, Substitution, CoverWalk, OrbitClosure };

    static Subshift full(int k);
    /// Forbidden words are normalized (words containing shorter
    /// forbidden words are dropped); M = max length - 1 afterwards.
    static Subshift sft(int k, std::vector<Word> forbidden);
    static Subshift sofic(LabeledGraph cover);
    static Subshift substitution_shift(Substitution s, Symbol seed,
                                       size_t factor_horizon = 4096);
    static Subshift cover_walk(CoverGenerator gen, size_t vertex_horizon = 64);
    static Subshift orbit_closure(StreamPtr t, int alphabet_size,
                                  size_t factor_horizon = 4096);

    Kind kind() const { return kind_; }
    const Alphabet& alphabet() const { return alphabet_; }

    Admissibility test(const Word& w) const;
    bool is_admissible(const Word& w) const { return test(w).admissible; }

    /// Exactly the length-n language; L_0 = { empty word }.
    std::vector<Word> language(size_t n) const;

    /// Decidable presentations only (Full / SFT / Sofic).
    bool is_irreducible() const;

    /// Shortest (ties: lexicographically least) w with uwv admissible.
    Word glue(const Word& u, const Word& v) const;

    /// Shortest-lex connector continuing an already-built admissible
    /// prefix; used by the enumeration stream.
    Word glue_after_prefix(const Word& prefix, const Word& next) const;

    /// Deterministic transitive point: catalog L_1, L_2, ... in
    /// length-then-lex order, consecutive entries joined with the
    /// shortest-lex connector valid after the whole built prefix.
    StreamPtr transitive_stream() const;

    bool is_synchronizing(const Word& w) const;

    /// All u with |u| = p and u^inf in the subshift.
    std::vector<Word> periodic_words(size_t p) const;

    /// SFT step M (0 for full shifts). Throws for other presentations.
    int step() const;

    const std::vector<Word>& forbidden() const;
    const LabeledGraph& cover() const;
    const Substitution& substitution() const { return subst_; }
    size_t factor_horizon() const { return factor_horizon_; }
    size_t vertex_horizon() const { return vertex_horizon_; }
    const CoverGenerator& generator() const { return generator_; }

    std::string describe() const;

  private:
    Subshift() = default;

    Admissibility test_sft(const Word& w) const;
    Admissibility test_sofic(const Word& w) const;
    Admissibility test_factor_based(const Word& w) const;
    Admissibility test_cover_walk(const Word& w) const;
    const Word& factor_pool() const;

    Kind kind_ = Kind::Full;
    Alphabet alphabet_;

    // SFT
    std::vector<Word> forbidden_;
    int step_ = 0;
    std::vector<Word> essential_blocks_;  // sorted; empty M handled separately

    // Sofic
    LabeledGraph cover_;

    // Substitution / OrbitClosure
    Substitution subst_;
    Symbol seed_ = 0;
    size_t factor_horizon_ = 0;
    StreamPtr closure_stream_;
    struct FactorCache;
    std::shared_ptr<FactorCache> factors_;

    // CoverWalk
    CoverGenerator generator_;
    size_t vertex_horizon_ = 0;
};

/// 1-step SFT on the edge set of G plus the labeling 1-block map that
/// carries edge words back to label words.
struct EdgeShift {
    Subshift shift;                       // alphabet = edge indices
    std::vector<LabeledGraph::Edge> edge_list;
    LabeledGraph graph;
};
EdgeShift edge_shift(const LabeledGraph& g);

/// The infinite cover whose spine reads a substitution fixed point and
/// whose return edges (one fresh symbol) close every even-length spine
/// prefix back to the base vertex.
CoverGenerator spine_return_cover(Substitution subst, Symbol seed,
                                  Symbol return_symbol);

}  // namespace shiftlab
