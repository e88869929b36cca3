#include "affs/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "affs/cells.hpp"
#include "affs/constructions.hpp"
#include "affs/errors.hpp"
#include "affs/json_io.hpp"
#include "affs/verify.hpp"

namespace affs::cli {

namespace {

class UsageFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::string join(const std::vector<long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::string paren(const std::vector<int>& v) { return "(" + join(v) + ")"; }

std::string word_text(const AffinePermutation& w) {
    const auto word = reduced_word(w);
    if (word.empty()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << 's' << word[i];
    return os.str();
}

json permutation_json(const AffinePermutation& w) {
    return {{"window", w.window()}, {"length", length(w)}, {"reduced_word", reduced_word(w)}, {"word", word_text(w)}};
}

Composition parse_lambda(const std::string& text) {
    try {
        return Composition::parse(text);
    } catch (const Error& e) {
        throw UsageFailure(std::string("bad --lambda: ") + e.what());
    }
}

// ---------------------------------------------------------------- tableau

json tableau_json(const TableauData& t) {
    json coords = json::object();
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        for (std::size_t j = 0; j < t.columns[c].size(); ++j)
            coords["f^" + std::to_string(c + 1) + "_" + std::to_string(j + 1)] = t.columns[c][j];
    json iota = json::object();
    for (const auto& [k, v] : t.iota) iota[std::to_string(k)] = v;
    return {{"schema", 1},
            {"lambda", composition_to_json(t.lambda)},
            {"nu", partition_to_json(t.nu)},
            {"s", t.s},
            {"rows", t.rows},
            {"columns", t.columns},
            {"S1", t.S1},
            {"S2", t.S2},
            {"red", t.red},
            {"blue", t.blue},
            {"l", t.l},
            {"m", t.m},
            {"t", t.tmap},
            {"iota", iota},
            {"f", coords}};
}

std::string tableau_text(const TableauData& t) {
    std::ostringstream os;
    os << "lambda " << t.lambda << "  nu " << t.nu << "  s " << t.s << '\n';
    int width = 1;
    for (int v = t.n(); v >= 10; v /= 10) ++width;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        os << "row " << i + 1 << ":";
        for (int e : t.rows[i]) {
            const bool red = std::find(t.red[i].begin(), t.red[i].end(), e) != t.red[i].end();
            os << ' ' << std::setw(width) << e << (red ? 'R' : 'B');
        }
        os << '\n';
    }
    os << "S1 " << paren(t.S1) << '\n' << "S2 " << paren(t.S2) << '\n';
    os << "l  " << paren(t.l) << '\n' << "m  " << paren(t.m) << '\n' << "t  " << paren(t.tmap) << '\n';
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        os << "column " << c + 1 << ":";
        for (std::size_t j = 0; j < t.columns[c].size(); ++j) os << " f^" << c + 1 << '_' << j + 1 << '=' << t.columns[c][j];
        os << '\n';
    }
    return os.str();
}

// ------------------------------------------------------------------ kappa

json kappa_json(const KappaBundle& kb, const KappaReport& rep) {
    json j = tableau_json(kb.tableau);
    j["kappa"] = permutation_json(kb.kappa);
    j["tau_q"] = permutation_json(kb.tau_q);
    j["q"] = kb.q;
    j["sigma"] = kb.sigma.window();
    j["dim_G_P"] = kb.lambda.dim_G_P();
    j["length"] = rep.length_kappa;
    j["length_formula"] = rep.length_formula;
    j["checks"] = {{"in_W_hat_P", rep.in_W_hat_P},
                   {"left_stable", rep.left_stable},
                   {"is_compactification", rep.is_compactification},
                   {"compactification_iff_maximal", rep.compactification_iff_maximal},
                   {"all_ok", rep.all_ok()}};
    return j;
}

std::string kappa_text(const KappaBundle& kb, const KappaReport& rep) {
    std::ostringstream os;
    os << tableau_text(kb.tableau);
    os << "kappa   (" << join(kb.kappa.window()) << ")\n";
    os << "tau_q   (" << join(kb.tau_q.window()) << ")  q = (" << join(kb.q) << ")\n";
    os << "length  " << rep.length_kappa << "  formula " << rep.length_formula << "  2 dim G/P "
       << 2 * kb.lambda.dim_G_P() << '\n';
    os << "checks  in_W_hat_P " << rep.in_W_hat_P << "  left_stable " << rep.left_stable
       << "  compactification_iff_maximal " << rep.compactification_iff_maximal << '\n';
    return os.str();
}

// ------------------------------------------------------------------ cell

LaurentMatrix read_matrix(const std::string& path, std::istream& in) {
    json j;
    try {
        if (path == "-") {
            j = json::parse(in);
        } else {
            std::ifstream f(path);
            if (!f) throw UsageFailure("cannot open " + path);
            j = json::parse(f);
        }
    } catch (const json::exception& e) {
        throw UsageFailure(std::string("bad matrix JSON: ") + e.what());
    }
    try {
        return matrix_from_json(j);
    } catch (const Error& e) {
        throw UsageFailure(e.what());
    }
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageFailure("bad integer list: " + text);
        }
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Affine Weyl group constructions and their verification"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string lambda_text;
    std::string format = "json";
    int divisor_i = 0;
    std::string matrix_path;
    std::string parabolic_text;
    std::string suite = "all";
    int nmax = 5;
    std::uint64_t seed = 7;
    bool timing = false;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };
    const auto add_lambda = [&](CLI::App* sub) {
        sub->add_option("--lambda", lambda_text, "composition, e.g. 1,4,4,2,6")->required();
        add_format(sub);
    };

    auto* tableau_cmd = app.add_subcommand("tableau", "rows, Red/Blue coloring, l, m and column coordinates");
    add_lambda(tableau_cmd);
    auto* kappa_cmd = app.add_subcommand("kappa", "kappa, tau_q and the length checks");
    add_lambda(kappa_cmd);
    auto* varpi_cmd = app.add_subcommand("varpi", "varpi, its Iwahori witnesses and w_g, w_p");
    add_lambda(varpi_cmd);
    auto* divisor_cmd = app.add_subcommand("divisor", "boundary divisor data for index i");
    add_lambda(divisor_cmd);
    divisor_cmd->add_option("--i", divisor_i, "divisor index, 1 <= i < r")->required();
    auto* cell_cmd = app.add_subcommand("cell", "Iwahori and parabolic cell of a matrix");
    cell_cmd->add_option("--matrix", matrix_path, "JSON matrix file, or - for stdin")->required();
    cell_cmd->add_option("--parabolic", parabolic_text, "d-sequence 0,d1,...,n");
    add_format(cell_cmd);
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--nmax", nmax)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_flag("--timing", timing, "include wall-clock seconds");
    add_format(verify_cmd);
    auto* report_cmd = app.add_subcommand("report", "run every suite and print the combined report");
    report_cmd->add_option("--nmax", nmax)->check(CLI::PositiveNumber);
    report_cmd->add_option("--seed", seed);
    report_cmd->add_flag("--timing", timing, "include wall-clock seconds");
    add_format(report_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Success;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return UsageError;
    }

    const bool as_json = format == "json";
    try {
        if (tableau_cmd->parsed()) {
            const auto t = build_tableau(parse_lambda(lambda_text));
            out << (as_json ? tableau_json(t).dump(2) + "\n" : tableau_text(t));
            return Success;
        }
        if (kappa_cmd->parsed()) {
            const auto lambda = parse_lambda(lambda_text);
            const auto kb = kappa(lambda);
            const auto rep = check_kappa(lambda);
            out << (as_json ? kappa_json(kb, rep).dump(2) + "\n" : kappa_text(kb, rep));
            return rep.all_ok() ? Success : VerificationFailure;
        }
        if (varpi_cmd->parsed()) {
            const auto lambda = parse_lambda(lambda_text);
            const auto vw = varpi_witness(lambda);
            const auto dec = decompose_varpi(lambda);
            if (as_json) {
                json j = {{"schema", 1},
                          {"lambda", composition_to_json(lambda)},
                          {"varpi", permutation_json(vw.varpi)},
                          {"varpi_lift", matrix_to_json(vw.varpi_lift)},
                          {"b", matrix_to_json(vw.b)},
                          {"c", matrix_to_json(vw.c)},
                          {"Z", matrix_to_json(richardson_Z(lambda))},
                          {"w_g", dec.w_g.window()},
                          {"w_p", dec.w_p.window()},
                          {"identity_holds", true}};
                out << j.dump(2) << '\n';
            } else {
                out << "lambda " << lambda << '\n'
                    << "varpi  (" << join(vw.varpi.window()) << ")  length " << length(vw.varpi) << '\n'
                    << "w_g    (" << join(dec.w_g.window()) << ")\n"
                    << "w_p    (" << join(dec.w_p.window()) << ")\n"
                    << "b (1 - t^-1 Z) c = lift of varpi: holds\n";
            }
            return Success;
        }
        if (divisor_cmd->parsed()) {
            const auto lambda = parse_lambda(lambda_text);
            DivisorBundle d;
            try {
                d = divisor_data(lambda, divisor_i);
            } catch (const BadDivisorIndex& e) {
                throw UsageFailure(e.what());
            }
            const auto dirs = conormal_directions(d.w, parabolic_of(lambda));
            const auto kb = kappa(lambda);
            const bool below = bruhat_leq(d.v_k_min, kb.kappa);
            const bool ok = below && length(d.v_k_min) == lambda.dim_G_P();
            if (as_json) {
                json dj = json::array();
                for (const auto& r : dirs) dj.push_back(root_to_json(r));
                json j = {{"schema", 1},
                          {"lambda", composition_to_json(lambda)},
                          {"i", d.i},
                          {"k", d.k},
                          {"w", permutation_json(d.w)},
                          {"sign", d.sign},
                          {"lift", matrix_to_json(d.lift)},
                          {"gamma", root_to_json(d.gamma)},
                          {"conormal_directions", dj},
                          {"v_k", d.v_k.window()},
                          {"v_k_min", permutation_json(d.v_k_min)},
                          {"dim_G_P", lambda.dim_G_P()},
                          {"v_k_min_below_kappa", below}};
                out << j.dump(2) << '\n';
            } else {
                out << "lambda " << lambda << "  i " << d.i << "  k " << d.k << '\n'
                    << "w        (" << join(d.w.window()) << ")  sign " << d.sign << '\n'
                    << "gamma    " << d.gamma << '\n'
                    << "v_k      (" << join(d.v_k.window()) << ")\n"
                    << "v_k_min  (" << join(d.v_k_min.window()) << ")  length " << length(d.v_k_min)
                    << "  dim G/P " << lambda.dim_G_P() << "  below kappa " << below << '\n';
            }
            return ok ? Success : VerificationFailure;
        }
        if (cell_cmd->parsed()) {
            const auto m = read_matrix(matrix_path, in);
            AffinePermutation w;
            try {
                w = iwahori_cell(m);
            } catch (const Error& e) {
                throw UsageFailure(e.what());
            }
            json j = {{"schema", 1}, {"n", m.size()}, {"cell", permutation_json(w)}};
            std::string extra;
            if (!parabolic_text.empty()) {
                Composition lambda;
                try {
                    lambda = Composition::from_d_sequence(parse_ints(parabolic_text));
                } catch (const Error& e) {
                    throw UsageFailure(std::string("bad --parabolic: ") + e.what());
                }
                if (lambda.n() != static_cast<int>(m.size()))
                    throw UsageFailure("--parabolic must end at n = " + std::to_string(m.size()));
                const auto sp = parabolic_of(lambda);
                const auto pw = min_coset_rep(w, sp, Side::Right);
                j["parabolic"] = {{"d", lambda.d_sequence()}, {"S_P", sp.indices()}, {"cell", permutation_json(pw)}};
                extra = "parabolic (" + join(pw.window()) + ")  " + word_text(pw) + "\n";
            }
            if (as_json)
                out << j.dump(2) << '\n';
            else
                out << "window (" << join(w.window()) << ")  " << word_text(w) << '\n' << extra;
            return Success;
        }
        if (verify_cmd->parsed() || report_cmd->parsed()) {
            const auto rep = run_suite(report_cmd->parsed() ? "all" : suite, nmax, seed);
            out << (as_json ? rep.to_json(timing).dump(2) + "\n" : rep.to_text(timing));
            return rep.ok() ? Success : VerificationFailure;
        }
    } catch (const UsageFailure& e) {
        err << "usage error: " << e.what() << '\n';
        return UsageError;
    } catch (const InvalidInput& e) {
        err << "usage error: " << e.what() << '\n';
        return UsageError;
    } catch (const std::exception& e) {
        err << "verification failure: " << e.what() << '\n';
        return VerificationFailure;
    }
    return UsageError;
}

}  // namespace affs::cli
