// cli.cpp -- subcommands of the thmon tool.
#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "thmon/errors.hpp"
#include "thmon/wordproblem.hpp"

namespace thmon::cli {

namespace {

struct Options {
    int k = 2;
    std::string mode = "poly";
    bool json = false;
    bool parallel = false;
    std::size_t cap_n = 14;
    int cap_tau = 8;
};

constexpr std::size_t kRowCap = std::size_t{1} << 20;
constexpr int kBenchMax = 64;

// A bare path to an existing .json file is read as a single table; anything
// else is a generator word.
GenWord read_input(const std::string& text) {
    std::filesystem::path p(text);
    if (p.extension() == ".json" && std::filesystem::is_regular_file(p)) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return GenWord{{TableToken{morphism_from_json(ss.str())}}};
    }
    return parse_genword(text);
}

double millis_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_table(std::ostream& out, const Morphism& m, bool json) {
    if (json)
        out << to_json(m) << "\n";
    else
        out << format_morphism(m) << "\n";
}

// imC of a word without building its table, when the tau tokens permit it.
std::optional<PrefixCode> word_image_code(const GenWord& w, const Alphabet& alphabet, int tau_cap) {
    std::vector<Morphism> seq;
    if (w.empty()) return PrefixCode::epsilon(alphabet);
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
        if (const auto* t = std::get_if<TauToken>(&*it); t && t->j > tau_cap) return std::nullopt;
        seq.push_back(token_table(*it, alphabet));
    }
    return imc_of_genword(seq);
}

DClassIndex index_from_size(std::size_t n, const Alphabet& alphabet) {
    if (n == 0) return {true, 0};
    const int m = alphabet.k() - 1;
    int r = static_cast<int>(n % static_cast<std::size_t>(m));
    return {false, r == 0 ? m : r};
}

int cmd_eq(const Options& o, const std::string& a, const std::string& b, std::ostream& out) {
    Alphabet alphabet(o.k);
    GenWord w1 = read_input(a), w2 = read_input(b);
    auto t0 = std::chrono::steady_clock::now();
    bool equal = false;
    if (o.mode == "poly") {
        equal = word_problem_poly(w1, w2, alphabet, {o.cap_tau, o.parallel});
    } else if (o.mode == "brute") {
        equal = word_problem_bruteforce(w1, w2, alphabet, o.cap_n);
    } else {
        equal = equal_in_M(evaluate(w1, alphabet, kRowCap), evaluate(w2, alphabet, kRowCap));
    }
    const double ms = millis_since(t0);
    auto imc1 = word_image_code(w1, alphabet, o.cap_tau);
    auto imc2 = word_image_code(w2, alphabet, o.cap_tau);
    const char* verdict = equal ? "EQUAL" : "NOT-EQUAL";
    if (o.json) {
        nlohmann::ordered_json j;
        j["verdict"] = verdict;
        j["mode"] = o.mode;
        j["imc_sizes"] = nlohmann::ordered_json::array();
        j["d_class"] = nlohmann::ordered_json::array();
        for (const auto& imc : {imc1, imc2}) {
            if (imc) {
                j["imc_sizes"].push_back(imc->size());
                j["d_class"].push_back(format_d_class(index_from_size(imc->size(), alphabet)));
            } else {
                j["imc_sizes"].push_back(nullptr);
                j["d_class"].push_back(nullptr);
            }
        }
        j["wall_ms"] = ms;
        out << j.dump() << "\n";
    } else {
        auto size = [](const std::optional<PrefixCode>& c) { return c ? std::to_string(c->size()) : std::string("n/a"); };
        auto cls = [&](const std::optional<PrefixCode>& c) {
            return c ? format_d_class(index_from_size(c->size(), alphabet)) : std::string("n/a");
        };
        out << verdict << "\n";
        out << "mode: " << o.mode << "\n";
        out << "imC sizes: " << size(imc1) << " " << size(imc2) << "\n";
        out << "D-class: " << cls(imc1) << " " << cls(imc2) << "\n";
        out << "wall time: " << std::fixed << std::setprecision(3) << ms << " ms\n";
    }
    return equal ? 0 : 1;
}

int cmd_info(const Options& o, const std::string& input, std::ostream& out) {
    Alphabet alphabet(o.k);
    Morphism m = evaluate(read_input(input), alphabet, kRowCap);
    MorphismClass c = classify(m);
    PrefixCode dom = m.domain_code(), imc = image_code(m);
    DClassIndex d = d_class_index(m);
    if (o.json) {
        nlohmann::ordered_json j;
        j["table_size"] = m.size();
        j["domain_code"] = format_code(dom);
        j["image_code"] = format_code(imc);
        j["normal"] = is_normal(m);
        j["injective"] = c.injective;
        j["total"] = c.total;
        j["surjective"] = c.surjective;
        j["unit"] = c.unit;
        j["d_class"] = format_d_class(d);
        out << j.dump() << "\n";
        return 0;
    }
    out << "table size: " << m.size() << "\n";
    out << "domC: " << format_code(dom) << "\n";
    out << "imC: " << format_code(imc) << "\n";
    out << "normal: " << yes_no(is_normal(m)) << "\n";
    out << "injective=" << yes_no(c.injective) << " total=" << yes_no(c.total)
        << " surjective=" << yes_no(c.surjective) << " unit=" << yes_no(c.unit) << "\n";
    out << "D-class: " << format_d_class(d) << "\n";
    return 0;
}

int cmd_validate(const Options& o, const std::string& input, std::ostream& out) {
    Alphabet alphabet(o.k);
    GenWord w = read_input(input);
    for (const auto& t : w.tokens) token_table(t, alphabet);  // alphabet and tau checks
    if (w.size() == 1 && std::holds_alternative<TableToken>(w.tokens.front())) {
        const Morphism& m = std::get<TableToken>(w.tokens.front()).table;
        out << "valid table: " << m.size() << " rows, k=" << m.alphabet().k()
            << (is_normal(m) ? ", normal" : ", not normal") << "\n";
    } else {
        out << "valid generator word: " << w.size() << " tokens\n";
    }
    return 0;
}

int cmd_dclass(const Options& o, const std::string& a, const std::string& b, std::ostream& out) {
    Alphabet alphabet(o.k);
    Morphism phi = evaluate(read_input(a), alphabet, kRowCap);
    if (b.empty()) {
        out << "D-class: " << format_d_class(d_class_index(phi)) << "\n";
        return 0;
    }
    Morphism psi = evaluate(read_input(b), alphabet, kRowCap);
    auto chain = d_witness(phi, psi);
    if (!chain) {
        out << "NOT-D-RELATED\n";
        return 1;
    }
    out << "D-RELATED (" << chain->size() << " verified links)\n";
    for (const GreenLink& l : *chain) {
        out << (l.relation == Green::R ? "R: " : "L: ") << format_morphism(l.from) << " -> "
            << format_morphism(l.to) << "  forward " << format_morphism(l.forward) << "  backward "
            << format_morphism(l.backward) << "\n";
    }
    return 0;
}

int cmd_dfa_export(const Options& o, const std::string& input, const std::string& target, std::ostream& out) {
    Alphabet alphabet(o.k);
    std::vector<Morphism> seq = resolve_for_poly(read_input(input), alphabet, o.cap_tau);
    AcyclicDfa dfa = iterated_inverse_image_dfa(seq, dfa_for_word(parse_word(target, alphabet), alphabet));
    out << (o.json ? dfa_to_json(dfa) + "\n" : dfa_to_dot(dfa));
    return 0;
}

int cmd_bench(const Options& o, int n_max, std::ostream& out) {
    if (n_max < 2 || n_max > kBenchMax) {
        throw InvalidInput("bench needs 2 <= n <= " + std::to_string(kBenchMax));
    }
    Alphabet alphabet(2);
    out << "n\tword_length\ttable_size\tpoly_ms\tbrute_ms\n";
    for (int n = 2; n <= n_max; ++n) {
        GenWord w = exponential_family_word(n);
        std::string table = "refused";
        try {
            table = std::to_string(evaluate(w, alphabet, kRowCap).size());
        } catch (const ResourceLimit&) {
        }
        auto t0 = std::chrono::steady_clock::now();
        word_problem_poly(w, w, alphabet, {o.cap_tau, o.parallel});
        double poly = millis_since(t0);
        std::string brute = "-";
        if (bruteforce_length(w, alphabet) <= o.cap_n) {
            t0 = std::chrono::steady_clock::now();
            word_problem_bruteforce(w, w, alphabet, o.cap_n);
            std::ostringstream s;
            s << std::fixed << std::setprecision(3) << millis_since(t0);
            brute = s.str();
        }
        out << n << "\t" << w.size() << "\t" << table << "\t" << std::fixed << std::setprecision(3) << poly
            << "\t" << brute << "\n";
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computation in the Thompson-Higman monoids M_{k,1}", "thmon"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--k", o.k, "alphabet size")->check(CLI::Range(2, 36));
    app.add_option("--mode", o.mode, "decider for eq")->check(CLI::IsMember({"poly", "brute", "table"}));
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_flag("--parallel", o.parallel, "check independent targets concurrently");
    app.add_option("--cap-N", o.cap_n, "largest word length for brute force");
    app.add_option("--cap-tau", o.cap_tau, "largest j for expanding tau(i,j)");

    std::string a, b, target;
    int n_max = 10;
    auto* validate = app.add_subcommand("validate", "check a table file or generator word");
    validate->add_option("input", a)->required();
    auto* info = app.add_subcommand("info", "table size, codes, normality, class flags");
    info->add_option("input", a)->required();
    auto* eq = app.add_subcommand("eq", "decide equality in M_{k,1}");
    eq->add_option("left", a)->required();
    eq->add_option("right", b)->required();
    auto* mul = app.add_subcommand("mul", "product left * right (right applied first)");
    mul->add_option("left", a)->required();
    mul->add_option("right", b)->required();
    auto* maxext = app.add_subcommand("maxext", "maximal essential extension");
    maxext->add_option("input", a)->required();
    auto* norm = app.add_subcommand("normalize", "equivalent normal table");
    norm->add_option("input", a)->required();
    auto* fac = app.add_subcommand("factor", "write an element as a generator word");
    fac->add_option("input", a)->required();
    auto* dclass = app.add_subcommand("dclass", "D-class index, or a witness chain for two elements");
    dclass->add_option("input", a)->required();
    dclass->add_option("other", b);
    auto* dfa = app.add_subcommand("dfa-export", "automaton for the preimage of a word (DOT, or JSON with --json)");
    dfa->add_option("input", a)->required();
    dfa->add_option("--target", target, "the word r whose preimage is accepted")->required();
    auto* bench = app.add_subcommand("bench", "table size versus decider time on the exponential family");
    bench->add_option("--n-max", n_max, "largest n");

    // Global flags may appear after the subcommand too.
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitError;
    }

    try {
        Alphabet alphabet(o.k);
        if (*validate) return cmd_validate(o, a, out);
        if (*info) return cmd_info(o, a, out);
        if (*eq) return cmd_eq(o, a, b, out);
        if (*mul) {
            print_table(out, evaluate(concat(read_input(a), read_input(b)), alphabet, kRowCap), o.json);
            return 0;
        }
        if (*maxext) {
            print_table(out, evaluate(read_input(a), alphabet, kRowCap), o.json);
            return 0;
        }
        if (*norm) {
            print_table(out, normalize(evaluate(read_input(a), alphabet, kRowCap)), o.json);
            return 0;
        }
        if (*fac) {
            out << format_genword(factor(evaluate(read_input(a), alphabet, kRowCap))) << "\n";
            return 0;
        }
        if (*dclass) return cmd_dclass(o, a, b, out);
        if (*dfa) return cmd_dfa_export(o, a, target, out);
        if (*bench) return cmd_bench(o, n_max, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace thmon::cli
