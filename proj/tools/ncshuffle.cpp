// Command-line front door: JSON in/out for distributions, pairs and
// partitions; transform/convolve/enumerate/verify/coefficients commands.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ncshuffle/convolutions.hpp"
#include "ncshuffle/cumulants.hpp"
#include "ncshuffle/json_io.hpp"
#include "ncshuffle/partitions.hpp"
#include "ncshuffle/ts_expansion.hpp"
#include "ncshuffle/verify.hpp"

namespace {

using ncs::Json;

int max_degree_cap() {
    if (const char* env = std::getenv("NCSHUFFLE_MAX_DEGREE")) {
        int v = std::atoi(env);
        if (v < 1) throw ncs::error("NCSHUFFLE_MAX_DEGREE must be a positive integer");
        return v;
    }
    return 8;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ncs::error("cannot open input file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ncs::error("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_output(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ncs::error("cannot open output file '" + out_path + "'");
    out << j.dump(2) << "\n";
}

// Flag values may spell multi-word kinds with hyphens (t-boolean, c-free);
// stored kind names carry none.
std::string normalize_kind(std::string name) {
    if (name == "t-boolean") return "tboolean";
    if (name == "t-monotone") return "tmonotone";
    if (name == "c-free") return "cfree";
    if (name == "c-monotone") return "cmonotone";
    return name;
}

ncs::PartitionFamily parse_family(const std::string& name) {
    for (ncs::PartitionFamily f :
         {ncs::PartitionFamily::Nc, ncs::PartitionFamily::NcIrr, ncs::PartitionFamily::Interval,
          ncs::PartitionFamily::Monotone, ncs::PartitionFamily::MonotoneIrr})
        if (name == ncs::family_name(f)) return f;
    throw ncs::error("unknown partition family '" + name + "'");
}

// Either a moment character or a named cumulant family.
struct TransformInput {
    std::optional<ncs::Functional> moments;
    std::optional<ncs::CumulantFamily> family;
};

TransformInput read_transform_input(const Json& j, const std::string& from, int cap) {
    TransformInput in;
    std::string kind = j.value("kind", "general");
    if (kind == "character" || kind == "general" || kind == "infchar") {
        if (from != "" && from != "moments")
            throw ncs::error("input file holds moments but --from says '" + from + "'");
        ncs::Functional f = ncs::functional_from_json(j, cap);
        if (f.kind() != ncs::Kind::Character)
            throw ncs::error("transform: moment input must be a character (kind 'character')");
        in.moments = std::move(f);
    } else {
        ncs::CumulantFamily fam = ncs::family_from_json(j, cap);
        if (!from.empty() && from != "moments" &&
            from != ncs::cumulant_kind_name(fam.kind))
            throw ncs::error("input file holds '" +
                             std::string(ncs::cumulant_kind_name(fam.kind)) +
                             "' cumulants but --from says '" + from + "'");
        in.family = std::move(fam);
    }
    return in;
}

int cmd_enumerate(const std::string& family, int n, bool count_only, const std::string& out) {
    ncs::PartitionFamily f = parse_family(family);
    Json partitions = Json::array();
    std::size_t count = 0;
    switch (f) {
        case ncs::PartitionFamily::Nc:
        case ncs::PartitionFamily::NcIrr:
        case ncs::PartitionFamily::Interval: {
            std::vector<ncs::NoncrossingPartition> list =
                (f == ncs::PartitionFamily::Nc)      ? ncs::enumerate_nc(n)
                : (f == ncs::PartitionFamily::NcIrr) ? ncs::enumerate_nc_irr(n)
                                                     : ncs::enumerate_interval(n);
            count = list.size();
            if (!count_only)
                for (const auto& p : list) partitions.push_back(ncs::partition_to_json(p));
            break;
        }
        case ncs::PartitionFamily::Monotone:
        case ncs::PartitionFamily::MonotoneIrr: {
            bool irr = (f == ncs::PartitionFamily::MonotoneIrr);
            if (count_only) {
                ncs::for_each_monotone(n, irr, [&](const ncs::MonotonePartition&) { ++count; });
            } else {
                for (const auto& mp : ncs::enumerate_monotone(n, irr)) {
                    partitions.push_back(ncs::partition_to_json(mp));
                    ++count;
                }
            }
            break;
        }
    }
    if (count_only) {
        if (out.empty()) {
            std::cout << count << "\n";
        } else {
            std::ofstream o(out);
            o << count << "\n";
        }
        return 0;
    }
    Json j;
    j["family"] = family;
    j["n"] = n;
    j["count"] = count;
    j["partitions"] = std::move(partitions);
    write_output(j, out);
    return 0;
}

int cmd_transform(const std::string& in_path, const std::string& from_raw,
                  const std::string& to_raw, const std::string& t_text,
                  const std::string& out) {
    const int cap = max_degree_cap();
    const std::string from = normalize_kind(from_raw);
    const std::string to = normalize_kind(to_raw);
    TransformInput input = read_transform_input(read_json_file(in_path), from, cap);
    std::optional<ncs::Rational> t;
    if (!t_text.empty()) t = ncs::parse_rational(t_text);

    auto need_t = [&]() -> const ncs::Rational& {
        if (!t) throw ncs::error("transform: target '" + to + "' needs --t");
        return *t;
    };

    if (to == "moments") {
        ncs::Functional m = input.moments ? *input.moments
                                          : ncs::moments_via_partitions(*input.family);
        write_output(ncs::functional_to_json(m), out);
        return 0;
    }
    if (to == "belinschi-nica") {
        if (!input.moments)
            throw ncs::error("transform: belinschi-nica expects a moment character input");
        write_output(ncs::functional_to_json(ncs::belinschi_nica(*input.moments, need_t())), out);
        return 0;
    }

    ncs::CumulantKind target = ncs::cumulant_kind_from_string(to);
    if (target == ncs::CumulantKind::CFree || target == ncs::CumulantKind::CMonotone)
        throw ncs::error("transform: pair families need the ctransform command");

    ncs::CumulantFamily result = [&] {
        // direct cumulant-to-cumulant routes
        if (input.family) {
            const ncs::CumulantFamily& src = *input.family;
            if (src.kind == ncs::CumulantKind::TBoolean &&
                target == ncs::CumulantKind::TBoolean)
                return ncs::t_boolean_shift(src, *src.t, need_t());
            bool classic_src = src.kind == ncs::CumulantKind::Free ||
                               src.kind == ncs::CumulantKind::Boolean ||
                               src.kind == ncs::CumulantKind::Monotone;
            bool classic_tgt = target == ncs::CumulantKind::Free ||
                               target == ncs::CumulantKind::Boolean ||
                               target == ncs::CumulantKind::Monotone;
            if (classic_src && classic_tgt) return ncs::cumulant_cross(src, target);
        }
        ncs::Functional m = input.moments ? *input.moments
                                          : ncs::moments_via_partitions(*input.family);
        switch (target) {
            case ncs::CumulantKind::TBoolean: return ncs::t_boolean(m, need_t());
            case ncs::CumulantKind::TMonotone: return ncs::t_monotone(m, need_t());
            default: return ncs::cumulants_of(m, target);
        }
    }();
    write_output(ncs::family_to_json(result), out);
    return 0;
}

int cmd_ctransform(const std::string& in_path, const std::string& to_raw, bool oracle,
                   const std::string& out) {
    const int cap = max_degree_cap();
    const std::string to = normalize_kind(to_raw);
    ncs::PairState p = ncs::pair_from_json(read_json_file(in_path), cap);
    ncs::CumulantFamily fam = [&] {
        if (to == "cfree") return oracle ? ncs::cfree_oracle(p) : ncs::cfree_cumulants(p);
        if (to == "cmonotone")
            return oracle ? ncs::cmonotone_oracle(p) : ncs::cmonotone_cumulants(p);
        throw ncs::error("ctransform: target must be cfree or cmonotone");
    }();
    write_output(ncs::family_to_json(fam), out);
    return 0;
}

int cmd_convolve(const std::vector<std::string>& inputs, const std::string& kind,
                 const std::string& out) {
    const int cap = max_degree_cap();
    if (inputs.size() != 2) throw ncs::error("convolve: exactly two input files required");
    ncs::Functional a = ncs::functional_from_json(read_json_file(inputs[0]), cap);
    ncs::Functional b =
        ncs::functional_from_json(read_json_file(inputs[1]), cap, a.context());
    ncs::Functional r = [&] {
        if (kind == "free") return ncs::additive_convolve(a, b, ncs::ConvKind::Free);
        if (kind == "boolean") return ncs::additive_convolve(a, b, ncs::ConvKind::Boolean);
        if (kind == "monotone") return ncs::additive_convolve(a, b, ncs::ConvKind::Monotone);
        if (kind == "orthogonal") return ncs::orthogonal(a, b);
        if (kind == "subordination") return ncs::subordination(a, b);
        throw ncs::error("convolve: unknown kind '" + kind + "'");
    }();
    write_output(ncs::functional_to_json(r), out);
    return 0;
}

int cmd_cconvolve(const std::vector<std::string>& inputs, const std::string& kind_raw, int power,
                  const std::string& out) {
    const int cap = max_degree_cap();
    const std::string kind = normalize_kind(kind_raw);
    if (inputs.empty()) throw ncs::error("cconvolve: at least one input file required");
    ncs::PairState p1 = ncs::pair_from_json(read_json_file(inputs[0]), cap);
    ncs::PairState result = [&] {
        if (power > 0) {
            if (inputs.size() != 1)
                throw ncs::error("cconvolve: --power takes a single input pair");
            if (kind != "cmonotone")
                throw ncs::error("cconvolve: --power is defined for kind cmonotone");
            return ncs::cmonotone_power(p1, power);
        }
        if (inputs.size() != 2)
            throw ncs::error("cconvolve: exactly two input files required");
        ncs::PairState p2 = ncs::pair_from_json(read_json_file(inputs[1]), cap);
        if (kind == "cfree") return ncs::cfree_convolve(p1, p2);
        if (kind == "cmonotone") return ncs::cmonotone_convolve(p1, p2);
        throw ncs::error("cconvolve: unknown kind '" + kind + "'");
    }();
    write_output(ncs::pair_to_json(result), out);
    return 0;
}

int cmd_coefficients(const std::string& table, int n, int order, const std::string& out) {
    if (table == "partitions") {
        if (n < 1 || n > 8) throw ncs::error("coefficients: n must be between 1 and 8");
        Json rows = Json::array();
        for (const auto& pi : ncs::enumerate_nc(n)) {
            Json row;
            row["blocks"] = pi.blocks;
            row["tree_factorial"] = ncs::tree_factorial(pi).get_str();
            row["monotone_count"] = ncs::monotone_count(pi).get_str();
            if (ncs::is_irreducible(pi)) row["omega"] = ncs::rational_to_string(ncs::omega(pi));
            rows.push_back(std::move(row));
        }
        Json j;
        j["table"] = "partitions";
        j["n"] = n;
        j["rows"] = std::move(rows);
        write_output(j, out);
        return 0;
    }
    if (table == "ts-expansion") {
        ncs::TsExpansion ex = ncs::ts_expansion(order);
        Json rows = Json::array();
        for (const auto& row : ncs::ts_expansion_table(ex)) {
            Json r;
            r["order"] = row.order;
            r["monomial"] = row.monomial;
            r["coefficient"] = row.coefficient;
            rows.push_back(std::move(r));
        }
        Json j;
        j["table"] = "ts-expansion";
        j["order"] = ex.order;
        j["generator"] = "x = s-monotone cumulant form; A<B = pre-Lie product";
        j["rows"] = std::move(rows);
        write_output(j, out);
        return 0;
    }
    throw ncs::error("coefficients: unknown table '" + table + "'");
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int degree, int trials) {
    ncs::SuiteOptions opt;
    opt.seed = seed;
    opt.degree = degree;
    opt.trials = trials;
    if (degree > max_degree_cap())
        throw ncs::error("verify: degree exceeds NCSHUFFLE_MAX_DEGREE cap");
    std::vector<std::string> names;
    if (suite == "all") {
        for (const auto& [name, fn] : ncs::suite_registry()) names.push_back(name);
    } else {
        names.push_back(suite);
    }
    bool all_pass = true;
    for (const std::string& name : names) {
        ncs::SuiteReport report = ncs::run_suite(name, opt);
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "PASS" : "FAIL") << " [" << report.suite << "] " << c.name;
            if (!c.pass && !c.detail.empty()) std::cout << "  (" << c.detail << ")";
            std::cout << "\n";
            all_pass = all_pass && c.pass;
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact shuffle-algebra engine for moments, cumulants and additive convolutions"};
    app.require_subcommand(1);

    // enumerate
    std::string en_family = "nc", en_out;
    int en_n = 1;
    bool en_count = false;
    auto* en = app.add_subcommand("enumerate", "enumerate partition families");
    en->add_option("--family", en_family, "nc|nc_irr|interval|monotone|monotone_irr");
    en->add_option("--n", en_n, "ground set size")->required();
    en->add_flag("--count-only", en_count, "print only the count");
    en->add_option("--out", en_out, "output path (default stdout)");

    // transform
    std::string tr_in, tr_from, tr_to, tr_t, tr_out;
    auto* tr = app.add_subcommand("transform", "map moments to cumulant families and back");
    tr->add_option("--in", tr_in, "input JSON (moments or cumulant family)")->required();
    tr->add_option("--from", tr_from, "expected input interpretation (optional check)");
    tr->add_option("--to", tr_to,
                   "moments|free|boolean|monotone|tboolean|tmonotone|belinschi-nica")
        ->required();
    tr->add_option("--t", tr_t, "rational parameter for t-families, e.g. 1/2");
    tr->add_option("--out", tr_out, "output path (default stdout)");

    // ctransform
    std::string ct_in, ct_to, ct_out;
    bool ct_oracle = false;
    auto* ct = app.add_subcommand("ctransform", "cumulants of a pair state");
    ct->add_option("--in", ct_in, "input pair JSON")->required();
    ct->add_option("--to", ct_to, "cfree|cmonotone")->required();
    ct->add_flag("--oracle", ct_oracle, "use the partition-recursion oracle route");
    ct->add_option("--out", ct_out, "output path (default stdout)");

    // convolve
    std::vector<std::string> cv_in;
    std::string cv_kind = "free", cv_out;
    auto* cv = app.add_subcommand("convolve", "convolve two distributions");
    cv->add_option("--in", cv_in, "two input functional JSON files")->expected(1, 2);
    cv->add_option("--kind", cv_kind, "free|boolean|monotone|orthogonal|subordination");
    cv->add_option("--out", cv_out, "output path (default stdout)");

    // cconvolve
    std::vector<std::string> cc_in;
    std::string cc_kind = "cmonotone", cc_out;
    int cc_power = 0;
    auto* cc = app.add_subcommand("cconvolve", "convolve pair states");
    cc->add_option("--in", cc_in, "one or two input pair JSON files")->expected(1, 2);
    cc->add_option("--kind", cc_kind, "cfree|cmonotone");
    cc->add_option("--power", cc_power, "M-fold c-monotone power of a single pair");
    cc->add_option("--out", cc_out, "output path (default stdout)");

    // coefficients
    std::string co_table = "partitions", co_out;
    int co_n = 4, co_order = 4;
    auto* co = app.add_subcommand("coefficients", "emit coefficient tables");
    co->add_option("--table", co_table, "partitions|ts-expansion");
    co->add_option("--n", co_n, "ground set size for the partitions table");
    co->add_option("--order", co_order, "expansion order for the ts-expansion table");
    co->add_option("--out", co_out, "output path (default stdout)");

    // verify
    std::string vf_suite;
    std::uint64_t vf_seed = 7;
    int vf_degree = 0, vf_trials = 0;
    auto* vf = app.add_subcommand("verify", "run a named identity suite");
    vf->add_option("--suite", vf_suite, "suite name or 'all'")->required();
    vf->add_option("--seed", vf_seed, "random seed");
    vf->add_option("--degree", vf_degree, "truncation degree override");
    vf->add_option("--trials", vf_trials, "trial count override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*en) return cmd_enumerate(en_family, en_n, en_count, en_out);
        if (*tr) return cmd_transform(tr_in, tr_from, tr_to, tr_t, tr_out);
        if (*ct) return cmd_ctransform(ct_in, ct_to, ct_oracle, ct_out);
        if (*cv) return cmd_convolve(cv_in, cv_kind, cv_out);
        if (*cc) return cmd_cconvolve(cc_in, cc_kind, cc_power, cc_out);
        if (*co) return cmd_coefficients(co_table, co_n, co_order, co_out);
        if (*vf) return cmd_verify(vf_suite, vf_seed, vf_degree, vf_trials);
    } catch (const std::exception& e) {
        Json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
