#include "trisix/cli.hpp"

#include <CLI11.hpp>
#include <iostream>

#include "trisix/errors.hpp"
#include "trisix/partition_function.hpp"
#include "trisix/det_formulas.hpp"
#include "trisix/suites.hpp"
#include "trisix/sym_functions.hpp"

namespace trisix {

namespace {

// "a..b" or "a"
std::pair<int, int> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

Rational parse_rational(const std::string& s) {
    auto pos = s.find('/');
    if (pos == std::string::npos) return Rational(Integer(s), Integer(1));
    return Rational(Integer(s.substr(0, pos)), Integer(s.substr(pos + 1)));
}

// --q forms: "7/3" | "zeta N k" | "symbolic"
ExactScalar parse_q(const std::vector<std::string>& toks) {
    if (toks.empty()) return ExactScalar(Cyclotomic::zeta_power(12, 1));
    if (toks[0] == "zeta") {
        if (toks.size() != 3) throw CLI::ValidationError("--q zeta requires N and k");
        return ExactScalar(Cyclotomic::zeta_power(std::stoul(toks[1]), std::stol(toks[2])));
    }
    if (toks.size() != 1) throw CLI::ValidationError("--q expects one value or 'zeta N k'");
    return ExactScalar(parse_rational(toks[0]));
}

std::vector<ExactScalar> parse_u(const std::string& spec, int count) {
    std::vector<ExactScalar> u;
    std::string tok;
    std::istringstream is(spec);
    while (std::getline(is, tok, ',')) u.push_back(ExactScalar(parse_rational(tok)));
    if (static_cast<int>(u.size()) == 1 && count > 1) u.assign(count, u[0]);
    if (static_cast<int>(u.size()) != count)
        throw CLI::ValidationError("--u expects " + std::to_string(count) +
                                   " comma-separated values (or one value to broadcast)");
    return u;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"six-vertex model on a triangle: exact counts, evaluations and identity checks"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

    // ---- count ----
    auto* count = app.add_subcommand("count", "enumerate a symmetry class");
    std::string cls = "dasasm", nrange = "0..4";
    bool split = false;
    count->add_option("--class", cls, "asm|vsasm|vhsasm|htsasm|qtsasm|dsasm|dasasm|tsasm");
    count->add_option("--n", nrange,
                      "order range a..b (triangle order n for dasasm, matrix order otherwise)");
    count->add_flag("--split-center", split, "also report counts split by central entry");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    SuiteOptions opt;
    std::string vrange;
    verify->add_option("--suite", suite, "suite name")->required()->check(
        CLI::IsMember(suite_names()));
    verify->add_option("--n", vrange, "order range a..b (suite default otherwise)");
    verify->add_option("--trials", opt.trials, "random points per case");
    verify->add_option("--seed", opt.seed, "random seed");

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "evaluate a partition function or closed form");
    std::string expr;
    int en = 1;
    bool symbolic = false, cleared = false;
    std::string uspec = "1";
    std::vector<std::string> qspec;
    eval->add_option("expr", expr, "z|z-plus|z-minus|rhs-full|rhs-u1|schur-rhs")
        ->required()
        ->check(CLI::IsMember({"z", "z-plus", "z-minus", "rhs-full", "rhs-u1", "schur-rhs"}));
    eval->add_option("--n", en, "order n");
    eval->add_flag("--symbolic", symbolic, "print the cleared symbolic polynomial (z forms only)");
    eval->add_flag("--cleared", cleared, "print the cleared value instead of Z itself");
    eval->add_option("--u", uspec, "comma-separated rational spectral parameters");
    eval->add_option("--q", qspec, "rational p/q, or: zeta N k")->expected(1, 3);

    try {
        app.parse(argc, argv);

        if (count->parsed()) {
            auto [lo, hi] = parse_range(nrange);
            auto rows = count_table(cls, lo, hi, split);
            if (format == "json") std::cout << count_table_json(rows, cls) << "\n";
            else if (format == "csv") std::cout << count_table_csv(rows, cls);
            else std::cout << count_table_text(rows, cls);
            for (const auto& r : rows)
                if (!r.agree) return 1;
            return 0;
        }

        if (verify->parsed()) {
            if (!vrange.empty()) std::tie(opt.n_lo, opt.n_hi) = parse_range(vrange);
            Report rep = run_suite(suite, opt);
            if (format == "json") std::cout << rep.to_json() << "\n";
            else if (format == "csv") std::cout << rep.to_csv();
            else std::cout << rep.to_text();
            return rep.all_passed() ? 0 : 1;
        }

        // eval
        Sector sector = expr == "z-plus" ? Sector::Plus
                        : expr == "z-minus" ? Sector::Minus
                                            : Sector::All;
        if (symbolic) {
            if (expr != "z" && expr != "z-plus" && expr != "z-minus")
                throw CLI::ValidationError("--symbolic applies to the z forms only");
            auto zf = partition_function_symbolic(en, sector);
            std::cout << zf.poly.str() << "\n";
            return 0;
        }
        ExactScalar q = parse_q(qspec);
        ExactScalar value;
        if (expr == "z" || expr == "z-plus" || expr == "z-minus") {
            auto u = parse_u(uspec, en + 1);
            value = cleared ? partition_function_eval(en, u, q, sector)
                            : partition_function_value(en, u, q, sector);
        } else if (expr == "rhs-full") {
            auto u = parse_u(uspec, en + 1);
            value = rhs_theorem_full(DetFormulaInput{en, u, q});
        } else if (expr == "rhs-u1") {
            auto u = parse_u(uspec, en);
            value = rhs_corollary_u1(en, u, q);
        } else {  // schur-rhs
            auto u = parse_u(uspec, en + 1);
            value = schur_theorem_rhs(en, u);
        }
        std::cout << value.str() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace trisix
