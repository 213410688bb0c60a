#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ncshuffle/rational.hpp"

namespace ncs {

// Ordered list of letter names. Letters are referred to by index everywhere;
// names only matter for I/O.
struct Alphabet {
    std::vector<std::string> letters;

    int size() const { return static_cast<int>(letters.size()); }
    bool operator==(const Alphabet&) const = default;
};

// A word is a non-empty sequence of letter indices.
using Word = std::vector<int>;

// Basis element of the double tensor algebra: a sequence of words w1|...|wm.
// The empty sequence is the unit.
struct BarMonomial {
    std::vector<Word> words;

    bool is_unit() const { return words.empty(); }
    int degree() const {
        int d = 0;
        for (const auto& w : words) d += static_cast<int>(w.size());
        return d;
    }
    auto operator<=>(const BarMonomial&) const = default;
};

inline BarMonomial unit_monomial() { return BarMonomial{}; }

inline BarMonomial word_monomial(Word w) {
    BarMonomial m;
    m.words.push_back(std::move(w));
    return m;
}

// Shared immutable evaluation context: an alphabet, a degree truncation, the
// list of all bar monomials of degree <= N in a fixed canonical order, and the
// precomputed subset-split coproduct of every basis element. Everything is
// built up front, so concurrent readers need no synchronization.
class Context {
public:
    struct CopTerm {
        std::uint32_t left;
        std::uint32_t right;
        bool in_left;  // the subset taken from the first word contains position 1
    };

    Context(Alphabet alphabet, int truncation)
        : alphabet_(std::move(alphabet)), truncation_(truncation) {
        if (truncation_ < 1) throw error("context: truncation must be >= 1");
        if (alphabet_.size() < 1) throw error("context: alphabet must be non-empty");
        build_monomials();
        build_coproducts();
    }

    const Alphabet& alphabet() const { return alphabet_; }
    int truncation() const { return truncation_; }

    std::size_t size() const { return monomials_.size(); }
    std::size_t unit_id() const { return 0; }
    const BarMonomial& monomial(std::size_t id) const { return monomials_[id]; }
    int degree_of(std::size_t id) const { return degrees_[id]; }

    bool contains(const BarMonomial& m) const { return ids_.contains(m); }

    std::size_t id_of(const BarMonomial& m) const {
        auto it = ids_.find(m);
        if (it == ids_.end()) throw error("context: bar monomial outside truncation");
        return it->second;
    }

    std::span<const CopTerm> coproduct(std::size_t id) const {
        return {coproduct_terms_.data() + coproduct_offsets_[id],
                coproduct_offsets_[id + 1] - coproduct_offsets_[id]};
    }

    // Ids of the single-word monomials, in canonical (degree, lex) order.
    const std::vector<std::size_t>& word_ids() const { return word_ids_; }

    bool compatible_with(const Context& other) const {
        return alphabet_ == other.alphabet_ && truncation_ == other.truncation_;
    }

private:
    void build_monomials() {
        const int k = alphabet_.size();
        // words_by_degree[d]: all words of length d in lex order
        std::vector<std::vector<Word>> words_by_degree(truncation_ + 1);
        for (int d = 1; d <= truncation_; ++d) {
            Word w(d, 0);
            while (true) {
                words_by_degree[d].push_back(w);
                int pos = d - 1;
                while (pos >= 0 && w[pos] == k - 1) w[pos--] = 0;
                if (pos < 0) break;
                ++w[pos];
            }
        }
        std::vector<std::vector<BarMonomial>> by_degree(truncation_ + 1);
        by_degree[0].push_back(unit_monomial());
        for (int n = 1; n <= truncation_; ++n) {
            for (int len = 1; len <= n; ++len) {
                for (const Word& w : words_by_degree[len]) {
                    for (const BarMonomial& rest : by_degree[n - len]) {
                        BarMonomial m;
                        m.words.reserve(1 + rest.words.size());
                        m.words.push_back(w);
                        m.words.insert(m.words.end(), rest.words.begin(), rest.words.end());
                        by_degree[n].push_back(std::move(m));
                    }
                }
            }
        }
        for (int n = 0; n <= truncation_; ++n) {
            for (auto& m : by_degree[n]) {
                degrees_.push_back(n);
                if (m.words.size() == 1) word_ids_.push_back(monomials_.size());
                ids_.emplace(m, monomials_.size());
                monomials_.push_back(std::move(m));
            }
        }
    }

    void build_coproducts() {
        coproduct_offsets_.assign(monomials_.size() + 1, 0);
        for (std::size_t id = 0; id < monomials_.size(); ++id) {
            coproduct_offsets_[id] = coproduct_terms_.size();
            emit_coproduct(monomials_[id]);
        }
        coproduct_offsets_[monomials_.size()] = coproduct_terms_.size();
    }

    // Delta(w1|...|wm) = Delta(w1)...Delta(wm) with
    // Delta(w) = sum_{S subset [n]} w_S (x) w_{J_1}|...|w_{J_r},
    // the J_i being the connected components of [n] \ S. The left half keeps
    // the terms whose first-word subset contains position 1.
    void emit_coproduct(const BarMonomial& m) {
        if (m.is_unit()) {
            coproduct_terms_.push_back({0, 0, false});
            return;
        }
        const std::size_t nwords = m.words.size();
        std::vector<std::uint32_t> masks(nwords, 0);
        while (true) {
            BarMonomial left, right;
            for (std::size_t i = 0; i < nwords; ++i) {
                const Word& w = m.words[i];
                const std::uint32_t mask = masks[i];
                Word sub;
                for (std::size_t p = 0; p < w.size(); ++p)
                    if (mask & (1u << p)) sub.push_back(w[p]);
                if (!sub.empty()) left.words.push_back(std::move(sub));
                Word run;
                for (std::size_t p = 0; p < w.size(); ++p) {
                    if (mask & (1u << p)) {
                        if (!run.empty()) {
                            right.words.push_back(std::move(run));
                            run.clear();
                        }
                    } else {
                        run.push_back(w[p]);
                    }
                }
                if (!run.empty()) right.words.push_back(std::move(run));
            }
            coproduct_terms_.push_back({static_cast<std::uint32_t>(id_of(left)),
                                        static_cast<std::uint32_t>(id_of(right)),
                                        (masks[0] & 1u) != 0});
            std::size_t i = 0;
            while (i < nwords) {
                if (++masks[i] < (1u << m.words[i].size())) break;
                masks[i++] = 0;
            }
            if (i == nwords) break;
        }
    }

    Alphabet alphabet_;
    int truncation_;
    std::vector<BarMonomial> monomials_;
    std::vector<int> degrees_;
    std::vector<std::size_t> word_ids_;
    std::map<BarMonomial, std::size_t> ids_;
    std::vector<CopTerm> coproduct_terms_;
    std::vector<std::size_t> coproduct_offsets_;
};

using ContextPtr = std::shared_ptr<const Context>;

inline std::string word_to_string(const Alphabet& a, const Word& w) {
    std::string out;
    for (int i : w) out += a.letters[i];
    return out;
}

inline std::string monomial_to_string(const Alphabet& a, const BarMonomial& m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.words.size(); ++i) {
        if (i) out += "|";
        out += word_to_string(a, m.words[i]);
    }
    return out;
}

inline ContextPtr make_context(Alphabet alphabet, int truncation) {
    return std::make_shared<Context>(std::move(alphabet), truncation);
}

inline ContextPtr make_univariate_context(int truncation, std::string letter = "a") {
    return make_context(Alphabet{{std::move(letter)}}, truncation);
}

}  // namespace ncs
