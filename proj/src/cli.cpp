#include "delcode/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "delcode/code.hpp"
#include "delcode/dominance.hpp"
#include "delcode/error.hpp"
#include "delcode/search.hpp"
#include "delcode/serialize.hpp"

namespace delcode::cli {

namespace {

using nlohmann::json;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

struct Options {
    bool json = false;

    std::string word;
    std::string u;
    std::string v;
    std::string file;
    int t = 1;
    int n = 0;
    int a = 0;
    std::string metric = "deletion";
    std::string method = "brute";
    bool perfect = false;
    bool basic = false;
    bool no_basic_prune = false;
    bool no_force_constants = false;
    bool enumerate = false;
    bool canonical = false;
    unsigned threads = 1;
    double budget_seconds = 600;
};

int cmd_ball(const Options& o, std::ostream& out) {
    const auto w = BinaryWord::parse(o.word);
    const auto ball = deletion_ball(w, o.t);
    if (o.json) {
        json members = json::array();
        for (const auto& x : ball) members.push_back(x.str());
        emit(out, {{"word", w.str()}, {"t", o.t}, {"size", ball.size()}, {"ball", std::move(members)}});
    } else {
        for (const auto& x : ball) out << x << '\n';
    }
    return kOk;
}

int cmd_dist(const Options& o, std::ostream& out) {
    const auto u = BinaryWord::parse(o.u);
    const auto v = BinaryWord::parse(o.v);
    int d = 0;
    if (o.metric == "deletion")
        d = deletion_distance(u, v);
    else if (o.metric == "levenshtein")
        d = levenshtein_indel(u, v);
    else
        d = hamming_distance(u, v);
    if (o.json)
        emit(out, {{"u", u.str()}, {"v", v.str()}, {"metric", o.metric}, {"distance", d}});
    else
        out << d << '\n';
    return kOk;
}

int cmd_dominate(const Options& o, std::ostream& out) {
    const auto u = BinaryWord::parse(o.u);
    const auto v = BinaryWord::parse(o.v);
    const bool dominant = is_dominant(u, v, o.t);
    const auto ball_u = deletion_ball(u, o.t);
    const auto ball_v = deletion_ball(v, o.t);
    std::size_t contained = 0;
    for (const auto& x : ball_v) contained += ball_u.contains(x) ? 1 : 0;
    if (o.json) {
        emit(out, {{"u", u.str()},
                   {"v", v.str()},
                   {"t", o.t},
                   {"dominant", dominant},
                   {"ball_u_size", ball_u.size()},
                   {"ball_v_size", ball_v.size()},
                   {"contained", contained}});
    } else {
        out << yes_no(dominant);
        if (dominant) out << " contained=" << contained << " ball_v=" << ball_v.size() << " ball_u=" << ball_u.size();
        out << '\n';
    }
    return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    std::vector<std::pair<DominancePair, std::vector<std::string>>> rows;
    if (o.method == "brute") {
        for (const auto& p : enumerate_dominant_pairs(o.n, o.t, o.threads)) rows.push_back({p, {"brute"}});
    } else {
        const auto cf = generate_closed_form_detailed(o.n, o.t);
        for (const auto& [pair, sources] : cf.pairs) {
            std::vector<std::string> tags;
            for (const auto& s : sources) tags.push_back(provenance_tag(s));
            rows.push_back({pair, std::move(tags)});
        }
    }
    if (o.json) {
        json pairs = json::array();
        for (const auto& [pair, tags] : rows) {
            json entry = to_json(pair);
            entry["sources"] = tags;
            pairs.push_back(std::move(entry));
        }
        emit(out, {{"n", o.n}, {"t", o.t}, {"method", o.method}, {"count", rows.size()}, {"pairs", std::move(pairs)}});
    } else {
        for (const auto& [pair, tags] : rows) {
            out << pair.u << ' ' << pair.v << ' ';
            for (std::size_t i = 0; i < tags.size(); ++i) out << (i ? "," : "") << tags[i];
            out << '\n';
        }
    }
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto report = verify_characterization(o.n, o.t, o.threads);
    if (o.json) {
        emit(out, to_json(report));
    } else {
        out << "n=" << report.n << " t=" << report.t << '\n'
            << "brute_count=" << report.brute_count << '\n'
            << "generated_count=" << report.generated_count << '\n'
            << "missing=" << report.missing.size() << '\n'
            << "spurious=" << report.spurious.size() << '\n'
            << "filtered=" << report.filtered.size() << '\n';
        for (const auto& p : report.missing) out << "missing " << p.u << ' ' << p.v << '\n';
        for (const auto& p : report.spurious) out << "spurious " << p.u << ' ' << p.v << '\n';
        for (const auto& f : report.filtered)
            out << "filtered " << provenance_tag({f.source, f.row}) << " m=" << f.m << " p=" << f.p << ' ' << f.u << ' '
                << f.v << '\n';
        out << "confirmed=" << yes_no(report.confirmed()) << '\n';
    }
    return report.confirmed() ? kOk : kDiscrepancy;
}

int cmd_check(const Options& o, std::ostream& out) {
    std::ifstream in(o.file);
    if (!in) throw DomainError("cannot open code file '" + o.file + "'");
    const Code code = read_code(in);
    const auto correction = check_t_deletion_correcting(code, o.t);

    json doc{{"size", code.size()}, {"length", code.length()}, {"t", o.t}, {"t_deletion_correcting", correction.correcting}};
    if (code.size() >= 2) doc["deletion_distance"] = code_deletion_distance(code);
    if (correction.witness)
        doc["witness"] = {correction.witness->first.str(), correction.witness->second.str()};
    if (o.perfect) {
        if (correction.correcting)
            doc["perfect"] = is_perfect(code, o.t);
        else
            doc["perfect"] = nullptr;
    }
    if (o.basic) {
        const auto basic = check_basic(code, o.t);
        doc["basic"] = basic.basic;
        json dominant = json::array();
        for (const auto& w : basic.dominant) dominant.push_back(w.str());
        doc["dominant"] = std::move(dominant);
    }

    if (o.json) {
        emit(out, doc);
        return kOk;
    }
    out << "size=" << code.size() << '\n' << "length=" << code.length() << '\n';
    if (doc.contains("deletion_distance")) out << "deletion_distance=" << doc["deletion_distance"].get<int>() << '\n';
    out << "t_deletion_correcting=" << yes_no(correction.correcting) << '\n';
    if (correction.witness) out << "witness=" << correction.witness->first << ' ' << correction.witness->second << '\n';
    if (o.perfect)
        out << "perfect=" << (doc["perfect"].is_null() ? "n/a" : yes_no(doc["perfect"].get<bool>())) << '\n';
    if (o.basic) {
        out << "basic=" << yes_no(doc["basic"].get<bool>()) << '\n';
        for (const auto& w : doc["dominant"]) out << "dominant=" << w.get<std::string>() << '\n';
    }
    return kOk;
}

SearchConfig search_config(const Options& o) {
    SearchConfig config;
    config.n = o.n;
    config.t = o.t;
    config.basic_only = !o.no_basic_prune;
    config.force_constants = !o.no_force_constants;
    config.enumerate_all = o.enumerate;
    config.canonical = o.canonical;
    config.parallelism = o.threads;
    config.time_budget = std::chrono::milliseconds(static_cast<long long>(o.budget_seconds * 1000.0));
    return config;
}

int cmd_search(const Options& o, std::ostream& out) {
    const SearchConfig config = search_config(o);
    if (config.enumerate_all) {
        const auto result = enumerate_optimal_codes(config);
        if (o.json) {
            emit(out, to_json(result));
        } else {
            out << "# optimum=" << result.optimum << '\n'
                << "# exhausted=" << yes_no(result.exhausted) << '\n'
                << "# node_count=" << result.node_count << '\n'
                << "# wall_time_ms=" << result.wall_time.count() << '\n'
                << "# codes=" << result.codes.size() << '\n';
            for (std::size_t i = 0; i < result.codes.size(); ++i) {
                out << "# code " << i + 1 << '\n';
                write_code(out, result.codes[i]);
            }
        }
        return result.exhausted ? kOk : kBudgetExhausted;
    }

    const auto result = max_code_size(config);
    if (o.json) {
        emit(out, to_json(result));
    } else {
        std::ostringstream header;
        header << "optimum=" << result.optimum << '\n'
               << "exhausted=" << yes_no(result.exhausted) << '\n'
               << "node_count=" << result.node_count << '\n'
               << "wall_time_ms=" << result.wall_time.count();
        write_code(out, result.witness, header.str());
    }
    return result.exhausted ? kOk : kBudgetExhausted;
}

int cmd_vt(const Options& o, std::ostream& out) {
    const Code code = vt_code(o.n, o.a);
    if (o.json) {
        emit(out, {{"n", o.n}, {"a", o.a}, {"size", code.size()}, {"words", to_json(code)}});
    } else {
        write_code(out, code,
                   "VT_" + std::to_string(o.a) + "(" + std::to_string(o.n) + ") size=" + std::to_string(code.size()));
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deletion balls, t-dominant pairs and optimal deletion-correcting codes", "delcode"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Emit JSON instead of text");

    auto* ball = app.add_subcommand("ball", "List the t-deletion ball of a word");
    ball->add_option("word", o.word, "0/1 word")->required();
    ball->add_option("--t", o.t, "Number of deletions")->check(CLI::NonNegativeNumber);

    auto* dist = app.add_subcommand("dist", "Distance between two words");
    dist->add_option("u", o.u)->required();
    dist->add_option("v", o.v)->required();
    dist->add_option("--metric", o.metric)->check(CLI::IsMember({"deletion", "levenshtein", "hamming"}));

    auto* dominate = app.add_subcommand("dominate", "Test whether u is t-dominant over v");
    dominate->add_option("u", o.u)->required();
    dominate->add_option("v", o.v)->required();
    dominate->add_option("--t", o.t)->check(CLI::PositiveNumber);

    auto* enumerate = app.add_subcommand("enumerate", "List all t-dominant pairs of length n");
    enumerate->add_option("--n", o.n)->required();
    enumerate->add_option("--t", o.t)->check(CLI::PositiveNumber);
    enumerate->add_option("--method", o.method)->check(CLI::IsMember({"brute", "closed"}));
    enumerate->add_option("--threads", o.threads)->check(CLI::Range(1, 64));

    auto* verify = app.add_subcommand("verify", "Cross-check the closed-form pairs against exhaustive search");
    verify->add_option("--n", o.n)->required();
    verify->add_option("--t", o.t)->check(CLI::Range(1, 2));
    verify->add_option("--threads", o.threads)->check(CLI::Range(1, 64));

    auto* check = app.add_subcommand("check", "Check properties of a code file");
    check->add_option("file", o.file)->required();
    check->add_option("--t", o.t)->check(CLI::PositiveNumber);
    check->add_flag("--perfect", o.perfect, "Also test whether the balls partition all words");
    check->add_flag("--basic", o.basic, "Also list dominant codewords");

    auto* search = app.add_subcommand("search", "Exact maximum t-deletion-correcting code size");
    search->add_option("--n", o.n)->required();
    search->add_option("--t", o.t)->check(CLI::Range(1, 3));
    search->add_flag("--no-basic-prune", o.no_basic_prune, "Keep dominant words as candidates");
    search->add_flag("--no-force-constants", o.no_force_constants, "Do not pre-select 0^n and 1^n");
    auto* enum_flag = search->add_flag("--enumerate", o.enumerate, "List all inequivalent basic optimal codes");
    search->add_flag("--canonical", o.canonical, "Report the lexicographically smallest optimal code")
        ->excludes(enum_flag);
    search->add_option("--threads", o.threads)->check(CLI::Range(1, 64));
    search->add_option("--budget", o.budget_seconds, "Time budget in seconds")->check(CLI::PositiveNumber);

    auto* vt = app.add_subcommand("vt", "Print a Varshamov-Tenengolts code");
    vt->add_option("--n", o.n)->required();
    vt->add_option("--a", o.a)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (ball->parsed()) return cmd_ball(o, out);
        if (dist->parsed()) return cmd_dist(o, out);
        if (dominate->parsed()) return cmd_dominate(o, out);
        if (enumerate->parsed()) return cmd_enumerate(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (check->parsed()) return cmd_check(o, out);
        if (search->parsed()) return cmd_search(o, out);
        if (vt->parsed()) return cmd_vt(o, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kUsageError;
}

}  // namespace delcode::cli
