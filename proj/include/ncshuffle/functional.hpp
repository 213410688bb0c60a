#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "ncshuffle/rational.hpp"
#include "ncshuffle/word.hpp"

namespace ncs {

enum class Kind { General, Character, InfChar };

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::General: return "general";
        case Kind::Character: return "character";
        case Kind::InfChar: return "infchar";
    }
    return "?";
}

// A degree-truncated linear form on the double tensor algebra: one exact
// rational per bar monomial of degree <= N. Values are immutable after
// construction; the kind tag records what is provably known about the form.
class Functional {
public:
    Functional(ContextPtr ctx, Kind kind)
        : ctx_(std::move(ctx)), kind_(kind), vals_(ctx_->size(), Rational(0)) {}

    Functional(ContextPtr ctx, Kind kind, std::vector<Rational> vals)
        : ctx_(std::move(ctx)), kind_(kind), vals_(std::move(vals)) {
        if (vals_.size() != ctx_->size()) throw error("functional: value table size mismatch");
    }

    const ContextPtr& context() const { return ctx_; }
    Kind kind() const { return kind_; }
    int truncation() const { return ctx_->truncation(); }

    const Rational& at(std::size_t id) const { return vals_[id]; }
    const Rational& at(const BarMonomial& m) const { return vals_[ctx_->id_of(m)]; }
    const Rational& at_unit() const { return vals_[ctx_->unit_id()]; }
    const Rational& at_word(const Word& w) const { return vals_[ctx_->id_of(word_monomial(w))]; }

    Rational& mutable_at(std::size_t id) { return vals_[id]; }

    const std::vector<Rational>& values() const { return vals_; }

    Functional with_kind(Kind k) const {
        Functional f = *this;
        f.kind_ = k;
        return f;
    }

    // Mathematical equality: same alphabet/truncation and identical values.
    // The kind tag is metadata and does not participate.
    friend bool operator==(const Functional& a, const Functional& b) {
        return a.ctx_->compatible_with(*b.ctx_) && a.vals_ == b.vals_;
    }

private:
    ContextPtr ctx_;
    Kind kind_;
    std::vector<Rational> vals_;
};

inline void require_compatible(const Functional& a, const Functional& b) {
    if (!a.context()->compatible_with(*b.context()))
        throw error("functional: alphabet/truncation mismatch");
}

// Counit: 1 at the unit monomial, 0 elsewhere. Convolution unit and the only
// functional that is both a character and a group identity.
inline Functional counit(ContextPtr ctx) {
    Functional f(std::move(ctx), Kind::Character);
    f.mutable_at(f.context()->unit_id()) = 1;
    return f;
}

inline Functional zero_functional(ContextPtr ctx, Kind kind = Kind::InfChar) {
    return Functional(std::move(ctx), kind);
}

inline Functional add(const Functional& a, const Functional& b) {
    require_compatible(a, b);
    Kind k = (a.kind() == Kind::InfChar && b.kind() == Kind::InfChar) ? Kind::InfChar
                                                                      : Kind::General;
    std::vector<Rational> vals(a.context()->size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        vals[i] = a.at(i) + b.at(i);
        vals[i].canonicalize();
    }
    return Functional(a.context(), k, std::move(vals));
}

inline Functional sub(const Functional& a, const Functional& b) {
    require_compatible(a, b);
    Kind k = (a.kind() == Kind::InfChar && b.kind() == Kind::InfChar) ? Kind::InfChar
                                                                      : Kind::General;
    std::vector<Rational> vals(a.context()->size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        vals[i] = a.at(i) - b.at(i);
        vals[i].canonicalize();
    }
    return Functional(a.context(), k, std::move(vals));
}

inline Functional scale(const Rational& c, const Functional& f) {
    Kind k = (f.kind() == Kind::InfChar) ? Kind::InfChar : Kind::General;
    std::vector<Rational> vals(f.context()->size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        vals[i] = c * f.at(i);
        vals[i].canonicalize();
    }
    return Functional(f.context(), k, std::move(vals));
}

inline bool is_infchar_shaped(const Functional& f) {
    const Context& ctx = *f.context();
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (ctx.monomial(i).words.size() != 1 && f.at(i) != 0) return false;
    }
    return true;
}

inline bool is_character_shaped(const Functional& f) {
    const Context& ctx = *f.context();
    if (f.at_unit() != 1) return false;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const BarMonomial& m = ctx.monomial(i);
        if (m.words.size() < 2) continue;
        Rational prod = 1;
        for (const Word& w : m.words) prod *= f.at_word(w);
        prod.canonicalize();
        if (f.at(i) != prod) return false;
    }
    return true;
}

// Retags as infinitesimal character after verifying the defining vanishing
// conditions exactly. Used where theory says the result of an operation lies
// in the Lie algebra; the check turns the theorem into a runtime invariant.
inline Functional as_infchar(Functional f) {
    if (!is_infchar_shaped(f)) throw error("functional: expected an infinitesimal character");
    return f.with_kind(Kind::InfChar);
}

inline void require_infchar(const Functional& f) {
    if (f.kind() != Kind::InfChar) throw error("functional: operation requires an infinitesimal character");
}

inline void require_character(const Functional& f) {
    if (f.kind() != Kind::Character) throw error("functional: operation requires a character");
    if (f.at_unit() != 1) throw error("functional: character must map the unit to 1");
}

// Extends word values to a character (multiplicative across bars, 1 at the
// unit) or an infinitesimal character (zero beyond single words).
inline Functional lift(Kind kind, const ContextPtr& ctx,
                       const std::function<Rational(const Word&)>& word_value) {
    if (kind == Kind::General) throw error("lift: kind must be character or infchar");
    const Context& c = *ctx;
    std::vector<Rational> word_vals(c.size());  // per single-word id
    for (std::size_t id : c.word_ids()) word_vals[id] = word_value(c.monomial(id).words[0]);

    std::vector<Rational> vals(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const BarMonomial& m = c.monomial(i);
        if (m.is_unit()) {
            vals[i] = (kind == Kind::Character) ? 1 : 0;
        } else if (m.words.size() == 1) {
            vals[i] = word_vals[i];
        } else if (kind == Kind::Character) {
            Rational prod = 1;
            for (const Word& w : m.words) prod *= word_vals[c.id_of(word_monomial(w))];
            prod.canonicalize();
            vals[i] = std::move(prod);
        }  // infchar: stays 0 on multi-bar monomials
    }
    return Functional(ctx, kind, std::move(vals));
}

inline Functional lift(Kind kind, const ContextPtr& ctx, const std::map<Word, Rational>& word_values) {
    return lift(kind, ctx, [&](const Word& w) -> Rational {
        auto it = word_values.find(w);
        if (it == word_values.end()) throw error("lift: missing word value inside truncation");
        return it->second;
    });
}

// Univariate convenience: moments[i] is the value on the word a^(i+1).
inline Functional lift_univariate(Kind kind, const ContextPtr& ctx,
                                  const std::vector<Rational>& word_values) {
    if (static_cast<int>(word_values.size()) < ctx->truncation())
        throw error("lift: missing word value inside truncation");
    return lift(kind, ctx, [&](const Word& w) { return word_values[w.size() - 1]; });
}

}  // namespace ncs
