#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>

#include <json.hpp>

#include "ncshuffle/cumulants.hpp"
#include "ncshuffle/functional.hpp"
#include "ncshuffle/partitions.hpp"

namespace ncs {

using Json = nlohmann::ordered_json;

// --- words -----------------------------------------------------------------

// Word keys are the concatenated letter names; the JSON layer therefore
// requires single-character letter names. The unit bar monomial is "1" and
// bars separate the words of a general value key.
inline void validate_io_alphabet(const Alphabet& a) {
    if (a.size() < 1) throw error("json: alphabet must be non-empty");
    for (const auto& l : a.letters)
        if (l.size() != 1 || !std::isalpha(static_cast<unsigned char>(l[0])))
            throw error("json: alphabet letters must be single characters");
    auto copy = a.letters;
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
        throw error("json: duplicate letter in alphabet");
}

inline Word parse_word(const Alphabet& a, const std::string& text) {
    Word w;
    for (char c : text) {
        auto it = std::find(a.letters.begin(), a.letters.end(), std::string(1, c));
        if (it == a.letters.end())
            throw error("json: unknown letter '" + std::string(1, c) + "' in word '" + text + "'");
        w.push_back(static_cast<int>(it - a.letters.begin()));
    }
    if (w.empty()) throw error("json: empty word key");
    return w;
}

inline BarMonomial parse_monomial(const Alphabet& a, const std::string& text) {
    if (text == "1") return unit_monomial();
    BarMonomial m;
    std::string piece;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '|') {
            m.words.push_back(parse_word(a, piece));
            piece.clear();
        } else {
            piece += text[i];
        }
    }
    return m;
}

// --- functionals -----------------------------------------------------------

inline Json functional_to_json(const Functional& f) {
    const Context& ctx = *f.context();
    validate_io_alphabet(ctx.alphabet());
    Json j;
    j["alphabet"] = ctx.alphabet().letters;
    j["truncation"] = ctx.truncation();
    j["kind"] = kind_name(f.kind());
    if (f.kind() == Kind::General) {
        Json vals = Json::object();
        for (std::size_t id = 0; id < ctx.size(); ++id)
            if (f.at(id) != 0)
                vals[monomial_to_string(ctx.alphabet(), ctx.monomial(id))] =
                    rational_to_string(f.at(id));
        j["values"] = std::move(vals);
    } else {
        Json words = Json::object();
        for (std::size_t id : ctx.word_ids())
            words[word_to_string(ctx.alphabet(), ctx.monomial(id).words[0])] =
                rational_to_string(f.at(id));
        j["words"] = std::move(words);
    }
    return j;
}

inline ContextPtr context_from_json(const Json& j, int max_degree) {
    if (!j.contains("alphabet") || !j.contains("truncation"))
        throw error("json: functional needs 'alphabet' and 'truncation'");
    Alphabet a{j.at("alphabet").get<std::vector<std::string>>()};
    validate_io_alphabet(a);
    int n = j.at("truncation").get<int>();
    if (n < 1) throw error("json: truncation must be >= 1");
    if (n > max_degree)
        throw error("json: truncation " + std::to_string(n) + " exceeds degree cap " +
                    std::to_string(max_degree));
    return make_context(std::move(a), n);
}

inline Functional functional_from_json(const Json& j, int max_degree,
                                       ContextPtr reuse = nullptr) {
    ContextPtr ctx = reuse ? reuse : context_from_json(j, max_degree);
    if (reuse) {
        ContextPtr parsed = context_from_json(j, max_degree);
        if (!ctx->compatible_with(*parsed)) throw error("json: alphabet/truncation mismatch");
    }
    std::string kind_text = j.value("kind", "general");
    if (kind_text == "character" || kind_text == "infchar") {
        std::map<Word, Rational> wv;
        for (std::size_t id : ctx->word_ids()) wv[ctx->monomial(id).words[0]] = 0;
        if (j.contains("words"))
            for (const auto& [key, val] : j.at("words").items()) {
                Word w = parse_word(ctx->alphabet(), key);
                if (static_cast<int>(w.size()) > ctx->truncation())
                    throw error("json: word '" + key + "' exceeds truncation");
                wv[w] = parse_rational(val.get<std::string>());
            }
        return lift(kind_text == "character" ? Kind::Character : Kind::InfChar, ctx, wv);
    }
    if (kind_text != "general") throw error("json: unknown functional kind '" + kind_text + "'");
    Functional f(ctx, Kind::General);
    if (j.contains("values"))
        for (const auto& [key, val] : j.at("values").items()) {
            BarMonomial m = parse_monomial(ctx->alphabet(), key);
            f.mutable_at(ctx->id_of(m)) = parse_rational(val.get<std::string>());
        }
    return f;
}

// --- cumulant families -----------------------------------------------------

inline CumulantKind cumulant_kind_from_string(const std::string& s) {
    for (CumulantKind k :
         {CumulantKind::Free, CumulantKind::Boolean, CumulantKind::Monotone, CumulantKind::CFree,
          CumulantKind::CMonotone, CumulantKind::TBoolean, CumulantKind::TMonotone})
        if (s == cumulant_kind_name(k)) return k;
    throw error("json: unknown cumulant kind '" + s + "'");
}

inline Json family_to_json(const CumulantFamily& c) {
    Json j = functional_to_json(c.values);
    j["kind"] = cumulant_kind_name(c.kind);
    if (c.t) j["t"] = rational_to_string(*c.t);
    return j;
}

inline CumulantFamily family_from_json(const Json& j, int max_degree) {
    if (!j.contains("kind")) throw error("json: cumulant family needs 'kind'");
    CumulantKind kind = cumulant_kind_from_string(j.at("kind").get<std::string>());
    Json inner = j;
    inner["kind"] = "infchar";
    Functional values = functional_from_json(inner, max_degree);
    std::optional<Rational> t;
    if (j.contains("t")) t = parse_rational(j.at("t").get<std::string>());
    if ((kind == CumulantKind::TBoolean || kind == CumulantKind::TMonotone) && !t)
        throw error("json: t-family needs a 't' parameter");
    return {kind, std::move(values), std::move(t)};
}

// --- pair states -------------------------------------------------------------

inline Json pair_to_json(const PairState& p) {
    Json j;
    j["phi"] = functional_to_json(p.phi);
    j["psi"] = functional_to_json(p.psi);
    return j;
}

inline PairState pair_from_json(const Json& j, int max_degree) {
    if (!j.contains("phi") || !j.contains("psi"))
        throw error("json: pair state needs 'phi' and 'psi'");
    Functional phi = functional_from_json(j.at("phi"), max_degree);
    Functional psi = functional_from_json(j.at("psi"), max_degree, phi.context());
    return PairState(std::move(phi), std::move(psi));
}

// --- partitions --------------------------------------------------------------

inline std::string block_key(const std::vector<int>& block) {
    std::string out = "[";
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(block[i]);
    }
    return out + "]";
}

inline Json partition_to_json(const NoncrossingPartition& p) {
    Json j;
    j["n"] = p.n;
    j["blocks"] = p.blocks;
    return j;
}

inline Json partition_to_json(const MonotonePartition& mp) {
    Json j = partition_to_json(mp.base);
    Json labels = Json::object();
    for (int b = 0; b < mp.base.block_count(); ++b)
        labels[block_key(mp.base.blocks[b])] = mp.labels[b];
    j["labels"] = std::move(labels);
    return j;
}

inline NoncrossingPartition partition_from_json(const Json& j) {
    NoncrossingPartition p;
    p.n = j.at("n").get<int>();
    p.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    validate_noncrossing(p);
    return p;
}

}  // namespace ncs
