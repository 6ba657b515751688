#include "shiftlab/symbolic/stream.hpp"

#include <mutex>

namespace shiftlab {

Word SymbolStream::window(size_t start, size_t len) const {
    Word w;
    w.syms.reserve(len);
    for (size_t i = 0; i < len; ++i) w.syms.push_back(at(start + i));
    return w;
}

namespace {

class EventuallyPeriodicStream final : public SymbolStream {
  public:
    EventuallyPeriodicStream(Word pre, Word per)
        : pre_(std::move(pre)), per_(std::move(per)) {
        if (per_.empty()) throw error("period word must be non-empty");
    }

    Symbol at(size_t i) const override {
        if (i < pre_.size()) return pre_[i];
        return per_[(i - pre_.size()) % per_.size()];
    }

    std::optional<Word> periodic_word() const override {
        if (pre_.empty()) return per_;
        return std::nullopt;
    }

    std::string describe() const override {
        if (pre_.empty()) return "(" + per_.str() + ")^inf";
        return pre_.str() + "(" + per_.str() + ")^inf";
    }

    const Word& pre() const { return pre_; }
    const Word& per() const { return per_; }

  private:
    Word pre_, per_;
};

class ExplicitPrefixStream final : public SymbolStream {
  public:
    explicit ExplicitPrefixStream(Word w) : word_(std::move(w)) {}

    Symbol at(size_t i) const override {
        if (i >= word_.size())
            throw error("explicit-prefix stream exhausted at index " +
                        std::to_string(i) + " (horizon " +
                        std::to_string(word_.size()) + ")");
        return word_[i];
    }

    std::optional<size_t> horizon() const override { return word_.size(); }

    std::string describe() const override {
        return "prefix[" + std::to_string(word_.size()) + "]";
    }

  private:
    Word word_;
};

class SubstitutionStream final : public SymbolStream {
  public:
    SubstitutionStream(Substitution subst, Symbol seed)
        : subst_(std::move(subst)), seed_(seed) {
        if (!subst_.prolongable(seed))
            throw error("seed " + std::to_string(seed) +
                        " is not prolongable under the substitution");
        buffer_.syms.push_back(seed);
    }

    Symbol at(size_t i) const override {
        std::lock_guard lock(mutex_);
        while (buffer_.size() <= i) {
            Word next = subst_.apply(buffer_);
            if (next.size() <= buffer_.size())
                throw error("substitution expansion stalled");
            buffer_ = std::move(next);
        }
        return buffer_[i];
    }

    std::string describe() const override {
        return "substitution fixed point from " + std::to_string(seed_);
    }

  private:
    Substitution subst_;
    Symbol seed_;
    mutable std::mutex mutex_;
    mutable Word buffer_;
};

class ShiftedStream final : public SymbolStream {
  public:
    ShiftedStream(StreamPtr base, size_t k) : base_(std::move(base)), k_(k) {}

    Symbol at(size_t i) const override { return base_->at(i + k_); }

    std::optional<size_t> horizon() const override {
        auto h = base_->horizon();
        if (!h) return std::nullopt;
        return *h >= k_ ? *h - k_ : 0;
    }

    std::string describe() const override {
        return "tau^" + std::to_string(k_) + "(" + base_->describe() + ")";
    }

  private:
    StreamPtr base_;
    size_t k_;
};

class FunctionStream final : public SymbolStream {
  public:
    FunctionStream(std::function<Symbol(size_t)> fn, std::string name,
                   std::optional<Word> periodic)
        : fn_(std::move(fn)), name_(std::move(name)), periodic_(std::move(periodic)) {}

    Symbol at(size_t i) const override { return fn_(i); }
    std::optional<Word> periodic_word() const override { return periodic_; }
    std::string describe() const override { return name_; }

  private:
    std::function<Symbol(size_t)> fn_;
    std::string name_;
    std::optional<Word> periodic_;
};

}  // namespace

StreamPtr make_eventually_periodic(Word pre, Word per) {
    return std::make_shared<EventuallyPeriodicStream>(std::move(pre), std::move(per));
}

StreamPtr make_explicit_prefix(Word w) {
    return std::make_shared<ExplicitPrefixStream>(std::move(w));
}

StreamPtr make_substitution_stream(Substitution subst, Symbol seed) {
    return std::make_shared<SubstitutionStream>(std::move(subst), seed);
}

StreamPtr make_shifted(StreamPtr base, size_t k) {
    if (k == 0) return base;
    if (auto* ep = dynamic_cast<const EventuallyPeriodicStream*>(base.get())) {
        // Shift stays structural: drop from the preperiod, then rotate.
        Word pre = ep->pre();
        Word per = ep->per();
        if (k <= pre.size()) {
            return make_eventually_periodic(pre.subword(k, pre.size() - k), per);
        }
        size_t r = (k - pre.size()) % per.size();
        Word rotated = per.subword(r, per.size() - r) + per.subword(0, r);
        return make_eventually_periodic(Word(), rotated);
    }
    return std::make_shared<ShiftedStream>(std::move(base), k);
}

StreamPtr make_function_stream(std::function<Symbol(size_t)> fn, std::string name,
                               std::optional<Word> periodic) {
    return std::make_shared<FunctionStream>(std::move(fn), std::move(name),
                                            std::move(periodic));
}

std::vector<StreamPtr> shifted_family(const StreamPtr& t, size_t count) {
    std::vector<StreamPtr> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) out.push_back(make_shifted(t, i));
    return out;
}

}  // namespace shiftlab
