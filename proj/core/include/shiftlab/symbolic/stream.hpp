#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "shiftlab/symbolic/substitution.hpp"
#include "shiftlab/symbolic/word.hpp"

namespace shiftlab {

/*
 * A right-infinite symbol sequence sigma_1 sigma_2 ..., indexed from 0:
 * at(i) is sigma_{i+1}. Streams are immutable and safe to share across
 * threads; implementations with lazy caches synchronize internally.
 */
class SymbolStream {
  public:
    virtual ~SymbolStream() = default;

    virtual Symbol at(size_t i) const = 0;

    /// First index with no symbol (ExplicitPrefix only), else nullopt.
    virtual std::optional<size_t> horizon() const { return std::nullopt; }

    /// Set when the stream is structurally u^inf: returns u.
    virtual std::optional<Word> periodic_word() const { return std::nullopt; }

    virtual std::string describe() const = 0;

    Word prefix(size_t n) const { return window(0, n); }
    Word window(size_t start, size_t len) const;
};

using StreamPtr = std::shared_ptr<const SymbolStream>;

/// pre . per^inf; per must be non-empty.
StreamPtr make_eventually_periodic(Word pre, Word per);

inline StreamPtr make_periodic(Word per) {
    return make_eventually_periodic(Word(), std::move(per));
}

/// Finite stream: at(i) past the declared horizon throws.
StreamPtr make_explicit_prefix(Word w);

/// The unique substitution fixed point starting with seed.
StreamPtr make_substitution_stream(Substitution subst, Symbol seed);

/// tau^k of the stream. Eventually periodic streams stay structural.
StreamPtr make_shifted(StreamPtr base, size_t k);

/// Backed by an arbitrary pure function (used by enumeration streams).
StreamPtr make_function_stream(std::function<Symbol(size_t)> fn, std::string name,
                               std::optional<Word> periodic = std::nullopt);

/// [tau^0 t, tau^1 t, ..., tau^{count-1} t].
std::vector<StreamPtr> shifted_family(const StreamPtr& t, size_t count);

}  // namespace shiftlab
