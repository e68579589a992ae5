// isr1: decide idempotent stable range one for 2x2 integer matrices,
// construct and verify unitizers and clean decompositions, and run the
// exhaustive finite-ring oracles.
//
// Exit codes: 0 success, 1 input error, 2 internal verification or claim
// failure (the tool never aborts on valid input).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isr1/bezout.hpp"
#include "isr1/errors.hpp"
#include "isr1/io.hpp"
#include "isr1/sampling.hpp"
#include "isr1/zdecider.hpp"

namespace {

using namespace isr1;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerification = 2;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("ISR1_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError("ISR1_SEED must be an unsigned integer, got '" + std::string(env) +
                             "'");
        }
    }
    return kDefaultSeed;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

ordered_json int_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return ordered_json(v.convert_to<long long>());
    return ordered_json(v.str());
}

int run_decide(const std::string& matrix_text, const std::string& format) {
    const Mat2 a = parse_mat2(matrix_text);
    const Decision d = decide_isr1(a);
    if (format == "json") {
        std::cout << decision_to_json(d, 2) << "\n";
    } else {
        std::cout << decision_to_text(d);
    }
    return kExitOk;
}

int run_bezout(long long a, long long b, bool minimal, bool divisibility,
               const std::string& format) {
    const BezoutFamily fam = ext_gcd(a, b);
    ordered_json j;
    std::ostringstream text;
    j["a"] = a;
    j["b"] = b;
    j["gcd"] = int_json(fam.g);
    j["x0"] = int_json(fam.x0);
    j["z0"] = int_json(fam.z0);
    text << "gcd(" << a << ", " << b << ") = " << fam.g << ", base solution (x0, z0) = ("
         << fam.x0 << ", " << fam.z0 << ")\n";

    if (minimal) {
        const auto pairs = minimal_pairs(a, b);  // throws NotCoprime on bad input
        ordered_json arr = ordered_json::array();
        text << "minimal pairs:";
        for (const MinimalPair& p : pairs) {
            arr.push_back(ordered_json::array({int_json(p.x), int_json(p.z)}));
            text << " (" << p.x << ", " << p.z << ")";
        }
        text << "\n";
        j["minimal_pairs"] = arr;
    }
    if (divisibility) {
        if (a < 1 || b < 1 || gcd_int(a, b) != 1) {
            throw NotCoprimeError("--divisibility needs coprime positive integers");
        }
        const bool verdict = divisibility_isr1(a, b);
        j["divisibility_isr1"] = verdict;
        text << "divisibility_isr1: " << bool_str(verdict) << "\n";
        ordered_json targets = ordered_json::array();
        for (const Int target : {Int(a - 1), Int(-(a + 1))}) {
            const auto sols = solve_shifted_product(a, fam.z0, b, target);
            ordered_json tj;
            tj["target"] = int_json(target);
            ordered_json sarr = ordered_json::array();
            text << "  (a*k - z0)(a*l + b) = " << target << ":";
            if (sols.infinite()) {
                text << " infinite solution family";
                tj["infinite"] = true;
            } else if (sols.solutions.empty()) {
                text << " no solutions";
            }
            for (const auto& [k, l] : sols.solutions) {
                sarr.push_back(ordered_json::array({int_json(k), int_json(l)}));
                text << " (k=" << k << ", l=" << l << ")";
            }
            tj["solutions"] = sarr;
            targets.push_back(tj);
            text << "\n";
        }
        j["shifted_products"] = targets;
    }
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text.str();
    }
    return kExitOk;
}

int run_scan(long long max, const std::string& format) {
    if (max < 2 || max > 2000) {
        throw ParseError("--max must be in [2, 2000]");
    }
    struct Row {
        long long a, b;
        bool euclid, divis, witness, agree;
    };
    std::vector<Row> rows;
    bool all_agree = true;
    for (long long a = 1; a <= max; ++a) {
        for (long long b = 1; b <= max; ++b) {
            if (gcd_int(a, b) != 1) continue;
            Row r{a, b, false, false, false, false};
            r.euclid = euclidean_criterion(a, b).accepted;
            r.divis = divisibility_isr1(a, b);
            const Decision d = decide_isr1(Mat2{a, b, 0, 0});
            r.witness = d.status == DecisionStatus::Isr1;
            r.agree = (r.euclid == r.divis) && (r.divis == r.witness);
            all_agree = all_agree && r.agree;
            rows.push_back(r);
        }
    }
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const Row& r : rows) {
            ordered_json rj;
            rj["a"] = r.a;
            rj["b"] = r.b;
            rj["euclidean"] = r.euclid;
            rj["divisibility"] = r.divis;
            rj["agree"] = r.agree;
            rj["witness"] = r.witness;
            arr.push_back(rj);
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        // CSV (also the text rendering)
        std::cout << "a,b,euclidean,divisibility,agree,witness\n";
        for (const Row& r : rows) {
            std::cout << r.a << "," << r.b << "," << bool_str(r.euclid) << ","
                      << bool_str(r.divis) << "," << bool_str(r.agree) << ","
                      << bool_str(r.witness) << "\n";
        }
    }
    if (!all_agree) {
        std::cerr << "criterion disagreement detected\n";
        return kExitVerification;
    }
    return kExitOk;
}

int run_oracle(int mod, bool full, const std::vector<std::string>& matrices,
               const std::string& convention, const std::string& format) {
    OracleReport rep;
    if (full) {
        rep = oracle_full(mod);
    } else {
        if (matrices.empty()) {
            throw ParseError("oracle needs --full or at least one --matrix");
        }
        std::vector<ModMat> targets;
        for (const std::string& text : matrices) {
            const Mat2 m = parse_mat2(text);
            auto entry = [&](const Int& v) { return Int(v % mod).convert_to<int>(); };
            targets.emplace_back(mod, entry(m.a11), entry(m.a12), entry(m.a21), entry(m.a22));
        }
        rep = oracle_targeted(mod, targets,
                              convention == "c2" ? Convention::C2 : Convention::C1);
    }
    if (format == "json") {
        std::cout << report_to_json(rep, 2) << "\n";
    } else {
        std::cout << report_to_text(rep);
    }
    return rep.hard_violation() ? kExitVerification : kExitOk;
}

int run_witness(const std::string& matrix_text, int samples,
                const std::optional<std::uint64_t>& seed_flag, const std::string& format) {
    const Mat2 a = parse_mat2(matrix_text);
    const Decision d = decide_isr1(a);
    if (d.status != DecisionStatus::Isr1 || !d.witness.has_value()) {
        std::cerr << "not applicable: decision for " << format_mat2(a) << " is "
                  << to_string(d.status)
                  << (d.reason ? " (" + to_string(*d.reason) + ")" : "") << "\n";
        return kExitInput;
    }
    const Witness& w = *d.witness;
    const auto [ec, u] = clean_decompose(a);
    const std::uint64_t seed = resolve_seed(seed_flag);
    SampleRng rng(seed);

    std::vector<Mat2> xs;
    xs.reserve(samples);
    for (int i = 0; i < samples; ++i) xs.push_back(rng.next_mat(100));
    const VerifyResult vr = verify_witness(a, w, xs);

    if (format == "json") {
        auto mat_json = [](const Mat2& m) {
            return ordered_json::array(
                {ordered_json::array({int_json(m.a11), int_json(m.a12)}),
                 ordered_json::array({int_json(m.a21), int_json(m.a22)})});
        };
        ordered_json j;
        j["input"] = mat_json(a);
        j["witness_E"] = mat_json(w.E);
        j["unitizer_Y"] = mat_json(w.Y);
        j["sign"] = w.sign;
        j["clean_idempotent"] = mat_json(ec);
        j["clean_unit"] = mat_json(u);
        j["seed"] = seed;
        j["samples"] = samples;
        j["all_checks_passed"] = vr.ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "input:      " << a << "\n";
        std::cout << "witness E:  " << w.E << "\n";
        std::cout << "unitizer Y: " << w.Y << "\n";
        std::cout << "sign:       " << (w.sign > 0 ? "+1" : "-1") << "\n";
        std::cout << "clean decomposition: " << ec << " + " << u << ", det(unit) = " << det(u)
                  << "\n";
        std::cout << "seed:       " << seed << "\n";
        SampleRng replay(seed);
        for (int i = 0; i < samples; ++i) {
            const Mat2 x = replay.next_mat(100);
            const Int dv = det(a + w.Y * (x * a - Mat2::identity()));
            std::cout << "  X[" << i << "] det = " << dv << (dv == -w.sign ? " ok" : " MISMATCH")
                      << "\n";
        }
    }
    if (!vr.ok) {
        std::cerr << "witness verification failed: " << vr.failure << "\n";
        return kExitVerification;
    }
    if (format != "json") {
        std::cout << "all " << samples << " checks passed (det = " << -w.sign
                  << " for every sampled X)\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact decision procedures for idempotent stable range one (isr1) of 2x2\n"
        "integer matrices: decisions with verified unitizers, clean decompositions,\n"
        "Bezout/divisibility criteria, coprime-pair scans, and exhaustive oracles\n"
        "over Z/n. Matrices are written \"a11,a12;a21,a22\".\n"};
    app.require_subcommand(1);

    std::string matrix_text, format = "text";
    long long arg_a = 0, arg_b = 0, scan_max = 0;
    bool minimal = false, divisibility = false, full = false;
    int mod = 2, samples = 50;
    std::string convention = "c1";
    std::vector<std::string> matrices;
    std::optional<std::uint64_t> seed_flag;

    auto add_format = [&](CLI::App* cmd, bool csv) {
        cmd->add_option("--format", format,
                        csv ? "output format: text|csv|json (text = csv here)"
                            : "output format: text|json")
            ->check(csv ? CLI::IsMember({"text", "json", "csv"})
                        : CLI::IsMember({"text", "json"}));
    };

    CLI::App* decide = app.add_subcommand("decide", "classify a matrix (unit / isr1 / not_sr1 / not_isr1)");
    decide->add_option("matrix", matrix_text, "matrix \"a11,a12;a21,a22\"")->required();
    add_format(decide, false);

    CLI::App* bez = app.add_subcommand("bezout", "extended gcd, minimal pairs, divisibility criterion");
    bez->add_option("a", arg_a, "first integer")->required();
    bez->add_option("b", arg_b, "second integer")->required();
    bez->add_flag("--minimal", minimal, "print the minimal Bezout pairs (coprime input)");
    bez->add_flag("--divisibility", divisibility,
                  "decide z | x-1 or z | x+1 across the whole solution family");
    add_format(bez, false);

    CLI::App* scan = app.add_subcommand(
        "scan", "tabulate all coprime pairs (a,b) <= max; CSV columns "
                "a,b,euclidean,divisibility,agree,witness; exit 2 on any disagreement");
    scan->add_option("--max", scan_max, "upper bound for a and b (2..2000)")->required();
    add_format(scan, true);

    CLI::App* oracle = app.add_subcommand(
        "oracle", "exhaustive verification over M2(Z/n): --full classifies every matrix "
                  "(n <= 4), --matrix checks given matrices (n <= 12)");
    oracle->add_option("--mod", mod, "modulus n")->required();
    oracle->add_flag("--full", full, "full classification mode");
    oracle->add_option("--matrix", matrices, "matrix to check in targeted mode (repeatable)");
    oracle->add_option("--convention", convention, "definitional convention (targeted mode)")
        ->check(CLI::IsMember({"c1", "c2"}));
    add_format(oracle, false);

    CLI::App* witness = app.add_subcommand(
        "witness", "verify the unitizer of an isr1 matrix on sampled X; prints the clean "
                   "decomposition; exit 2 on any failed check");
    witness->add_option("matrix", matrix_text, "matrix \"a11,a12;a21,a22\"")->required();
    witness->add_option("--samples", samples, "number of sampled X matrices (default 50)");
    witness
        ->add_option("--seed", seed_flag,
                     "RNG seed (default: ISR1_SEED env var, else " +
                         std::to_string(kDefaultSeed) + ")")
        ->type_name("UINT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (app.got_subcommand(decide)) return run_decide(matrix_text, format);
        if (app.got_subcommand(bez)) return run_bezout(arg_a, arg_b, minimal, divisibility, format);
        if (app.got_subcommand(scan)) return run_scan(scan_max, format);
        if (app.got_subcommand(oracle)) return run_oracle(mod, full, matrices, convention, format);
        if (app.got_subcommand(witness))
            return run_witness(matrix_text, samples, seed_flag, format);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const NotCoprimeError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ModulusTooLargeError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const VerificationFailedError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitInput;
}
