// nseries: command-line front end for the truncated series kernel.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <nseries/correspondence.hpp>
#include <nseries/errors.hpp>
#include <nseries/series_calculus.hpp>
#include <nseries/support_order.hpp>
#include <nseries/text_io.hpp>
#include <nseries/vaut_factors.hpp>
#include <nseries/verify.hpp>

using namespace nseries;

namespace
{

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

OpTable read_table(const std::string &path)
{
    return parse_op_table(read_file(path));
}

bool use_color()
{
    if (const char *env = std::getenv("NSERIES_COLOR")) {
        return std::string(env) == "1";
    }
    return isatty(STDOUT_FILENO) != 0;
}

ExpVec parse_exp(const std::string &text, const MonoidCtx &ctx)
{
    ExpVec out;
    std::string s = text;
    if (!s.empty() && s.front() == '(' && s.back() == ')') {
        s = s.substr(1, s.size() - 2);
    }
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(piece, &used));
            if (used != piece.size()) {
                throw std::invalid_argument(piece);
            }
        } catch (const std::exception &) {
            throw ParseError("bad exponent component '" + piece + "' in '" + text + "'", 0);
        }
    }
    ctx.check(out);
    return out;
}

void print_series(const FreeSeries &p, bool json)
{
    if (json) {
        std::cout << free_series_to_json(p).dump() << '\n';
    } else {
        std::cout << format_free_series(p) << '\n';
    }
}

void print_exp_set(const std::set<ExpVec> &s, bool json)
{
    if (json) {
        std::cout << nlohmann::json(s).dump() << '\n';
        return;
    }
    for (const auto &m : s) {
        std::cout << exp_to_string(m) << '\n';
    }
}

int report_predicate(const std::string &name, const PredicateReport &r, bool json)
{
    if (json) {
        nlohmann::json j{{"schema", json_schema_version}, {"check", name}, {"holds", r.holds}};
        if (r.witness) {
            j["witness"] = {r.witness->first, r.witness->second};
            j["detail"] = r.detail;
        }
        std::cout << j.dump() << '\n';
    } else if (r.holds) {
        std::cout << name << ": yes\n";
    } else {
        std::cout << name << ": no (" << r.detail << ")\n";
    }
    return r.holds ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact truncated noncommutative and Hahn series kernel"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit JSON instead of text");

    int exit_code = 0;

    // bch
    auto *bch = app.add_subcommand("bch", "Print the BCH series X0 * X1");
    std::size_t bch_order = 4;
    bool bch_oracle = false;
    bch->add_option("--order", bch_order, "Grade bound N")->required();
    bch->add_flag("--oracle", bch_oracle, "Compare with the Dynkin commutator formula");
    bch->callback([&] {
        const auto z = bch_product(bch_order);
        if (!bch_oracle) {
            print_series(z, json);
            return;
        }
        const bool agree = z == dynkin_bch(bch_order);
        if (json) {
            auto j = free_series_to_json(z);
            j["oracle_agrees"] = agree;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << format_free_series(z) << '\n' << "dynkin oracle: " << (agree ? "agrees" : "DIFFERS") << '\n';
        }
        exit_code = agree ? 0 : 1;
    });

    // series
    auto *series = app.add_subcommand("series", "Named series and parsing");
    series->require_subcommand(1);
    std::size_t series_order = 4;
    for (const auto *name : {"exp", "log"}) {
        auto *sub = series->add_subcommand(name, std::string(name) == "exp" ? "E0 = sum X0^n/n!" : "L0 = sum (-1)^{n+1} X0^n/n");
        sub->add_option("--order", series_order, "Grade bound N")->required();
        const bool is_exp = std::string(name) == "exp";
        sub->callback([&, is_exp] { print_series(is_exp ? series_E0(series_order) : series_L0(series_order), json); });
    }
    auto *parse = series->add_subcommand("parse", "Parse and print a series in canonical form");
    std::string parse_text, parse_ctx;
    std::size_t parse_order = 0, parse_alphabet = 0;
    parse->add_option("text", parse_text, "Series text")->required();
    parse->add_option("--order", parse_order, "Grade or weight bound N")->required();
    parse->add_option("--alphabet", parse_alphabet, "Alphabet size for free series (default: inferred)");
    parse->add_option("--ctx", parse_ctx, "Parse as a Hahn series over lex:d | prod:d | weighted:w1,...");
    parse->callback([&] {
        if (parse_ctx.empty()) {
            print_series(parse_free_series(parse_text, parse_alphabet, parse_order), json);
            return;
        }
        const auto a = parse_hahn(parse_text, MonoidCtx::parse(parse_ctx), parse_order);
        std::cout << (json ? hahn_to_json(a).dump() : format_hahn(a)) << '\n';
    });

    // order
    auto *order = app.add_subcommand("order", "Order utilities on exponent monoids");
    order->require_subcommand(1);
    std::string order_ctx = "lex:1";
    std::vector<std::string> order_args;
    auto add_order_sub = [&](const std::string &name, const std::string &desc) {
        auto *sub = order->add_subcommand(name, desc);
        sub->add_option("--ctx", order_ctx, "lex:d | prod:d | weighted:w1,w2,...");
        sub->add_option("exps", order_args, "Exponents as comma-separated tuples");
        return sub;
    };
    add_order_sub("cmp", "Compare two exponents")->callback([&] {
        const auto ctx = MonoidCtx::parse(order_ctx);
        if (order_args.size() != 2) {
            throw Error("order cmp takes exactly two exponents");
        }
        static const char *names[] = {"less", "greater", "equal", "incomparable"};
        const auto c = cmp(ctx, parse_exp(order_args[0], ctx), parse_exp(order_args[1], ctx));
        std::cout << (json ? nlohmann::json(names[static_cast<int>(c)]).dump() : names[static_cast<int>(c)]) << '\n';
    });
    add_order_sub("minimal", "Minimal elements of a finite fragment")->callback([&] {
        const auto ctx = MonoidCtx::parse(order_ctx);
        FinitePosetFragment frag{ctx, {}};
        for (const auto &s : order_args) {
            frag.elements.insert(parse_exp(s, ctx));
        }
        print_exp_set(minimal_elements(frag), json);
    });
    add_order_sub("antichain", "A maximum antichain of a finite fragment")->callback([&] {
        const auto ctx = MonoidCtx::parse(order_ctx);
        FinitePosetFragment frag{ctx, {}};
        for (const auto &s : order_args) {
            frag.elements.insert(parse_exp(s, ctx));
        }
        print_exp_set(max_antichain(frag), json);
    });
    std::vector<std::string> closure_steps;
    std::size_t closure_depth = 2;
    auto *closure = add_order_sub("closure", "Words of the choice closure theta+(Y) with theta(p) = {p + step}");
    closure->add_option("--step", closure_steps, "Increment added by theta (repeatable)")->required();
    closure->add_option("--depth", closure_depth, "Maximum word length");
    closure->callback([&] {
        const auto ctx = MonoidCtx::parse(order_ctx);
        std::set<ExpVec> seeds;
        for (const auto &s : order_args) {
            seeds.insert(parse_exp(s, ctx));
        }
        std::vector<ExpVec> steps;
        for (const auto &s : closure_steps) {
            steps.push_back(parse_exp(s, ctx));
        }
        const auto words = choice_closure(
            ctx, seeds,
            [&](const ExpVec &p) {
                std::vector<ExpVec> out;
                for (const auto &s : steps) {
                    out.push_back(exp_add(p, s));
                }
                return out;
            },
            closure_depth);
        if (json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto &w : words) {
                arr.push_back(w.letters);
            }
            std::cout << arr.dump() << '\n';
            return;
        }
        for (const auto &w : words) {
            for (std::size_t i = 0; i < w.letters.size(); ++i) {
                std::cout << (i ? " " : "") << exp_to_string(w.letters[i]);
            }
            std::cout << '\n';
        }
    });

    // op
    auto *op = app.add_subcommand("op", "Operator tables");
    op->require_subcommand(1);
    auto *check = op->add_subcommand("check", "Check an operator predicate");
    bool check_contracting = false, check_derivation = false, check_endo = false;
    std::string check_file;
    auto *flag_c = check->add_flag("--contracting", check_contracting);
    auto *flag_d = check->add_flag("--derivation", check_derivation);
    auto *flag_e = check->add_flag("--endo", check_endo);
    flag_c->excludes(flag_d)->excludes(flag_e);
    flag_d->excludes(flag_e);
    check->add_option("table", check_file, "Operator table file")->required();
    check->callback([&] {
        const auto table = read_table(check_file);
        if (check_contracting) {
            exit_code = report_predicate("contracting", op_is_contracting(table), json);
        } else if (check_derivation) {
            exit_code = report_predicate("derivation", op_is_derivation(table), json);
        } else if (check_endo) {
            exit_code = report_predicate("unital endomorphism", op_is_unital_endomorphism(table), json);
        } else {
            throw Error("op check needs one of --contracting, --derivation, --endo");
        }
    });
    auto *eval = op->add_subcommand("eval", "Evaluate a free series at operator tables");
    std::string eval_series;
    std::vector<std::string> eval_tables;
    bool eval_unchecked = false;
    eval->add_option("-P", eval_series, "Free series file")->required();
    eval->add_option("-f", eval_tables, "Operator table file, one per variable")->required();
    eval->add_flag("--allow-noncontracting", eval_unchecked, "Skip the contracting precondition");
    eval->callback([&] {
        std::vector<OpTable> args;
        for (const auto &f : eval_tables) {
            args.push_back(read_table(f));
        }
        const auto p = parse_free_series(read_file(eval_series), args.size(), args.front().weight_bound());
        std::cout << format_op_table(op_evaluate(p, args, !eval_unchecked));
    });

    // correspondence
    std::string table_a, table_b;
    auto *exp_der = app.add_subcommand("exp-der", "exp of a contracting derivation table");
    exp_der->add_option("table", table_a)->required();
    exp_der->callback([&] { std::cout << format_op_table(op_exp(read_table(table_a))); });
    auto *log_aut = app.add_subcommand("log-aut", "log of a near-identity automorphism table");
    log_aut->add_option("table", table_a)->required();
    log_aut->callback([&] { std::cout << format_op_table(op_log(read_table(table_a))); });
    auto *star_cmd = app.add_subcommand("star", "BCH product of two contracting tables");
    star_cmd->add_option("t1", table_a)->required();
    star_cmd->add_option("t2", table_b)->required();
    star_cmd->callback([&] { std::cout << format_op_table(star(read_table(table_a), read_table(table_b))); });
    auto *iterate = app.add_subcommand("iterate", "Fractional iterate sigma^[c]");
    std::string iterate_c = "1";
    iterate->add_option("table", table_a)->required();
    iterate->add_option("--c", iterate_c, "Exponent p/q")->required();
    iterate->callback(
        [&] { std::cout << format_op_table(fractional_iterate(read_table(table_a), parse_rational(iterate_c))); });

    // vaut
    auto *vaut = app.add_subcommand("vaut", "Valuation automorphism factors");
    vaut->require_subcommand(1);
    auto *decompose = vaut->add_subcommand("decompose", "Split a table into (mu, chi, residual)");
    decompose->add_option("table", table_a)->required();
    decompose->callback([&] { std::cout << factor_aut_to_json(decompose_vaut(read_table(table_a))).dump(2) << '\n'; });
    auto *compose = vaut->add_subcommand("compose", "Recompose factors from JSON");
    compose->add_option("json", table_a)->required();
    compose->callback([&] {
        std::cout << format_op_table(compose_factors(factor_aut_from_json(nlohmann::json::parse(read_file(table_a)))));
    });

    // verify
    auto *verify = app.add_subcommand("verify", "Run invariant suites");
    std::string suite;
    VerifyConfig cfg;
    verify->add_option("suite", suite, "free | bch | hahn | operator | correspondence | vaut | all")->required();
    verify->add_option("--order", cfg.order, "Truncation order N");
    verify->add_option("--trials", cfg.trials, "Random instances per check");
    verify->add_option("--seed", cfg.seed, "Seed for the random corpora");
    verify->callback([&] {
        const auto report = run_verify(suite, cfg);
        if (json) {
            std::cout << report.to_json(cfg).dump(2) << '\n';
        } else {
            const bool color = use_color();
            for (const auto &c : report.checks) {
                const char *tag = c.passed ? (color ? "\033[32mPASS\033[0m" : "PASS") : (color ? "\033[31mFAIL\033[0m" : "FAIL");
                std::cout << tag << "  " << c.suite << ": " << c.name;
                if (!c.passed) {
                    std::cout << "  [" << c.counterexample << "]";
                }
                std::cout << '\n';
            }
        }
        exit_code = report.all_passed() ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    } catch (const nseries::Error &e) {
        std::cerr << "nseries: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "nseries: bad JSON: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
