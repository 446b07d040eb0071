#include <gosum/cli.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include <gosum/catalog.hpp>
#include <gosum/corrections.hpp>
#include <gosum/gosper.hpp>
#include <gosum/json.hpp>
#include <gosum/tables.hpp>
#include <gosum/term.hpp>

namespace gosum
{

namespace
{

struct SumArgs {
    std::string term;
    std::optional<unsigned> n;
};

struct CorrectionArgs {
    std::string family;
    std::string a = "1";
    std::string z = "1";
    unsigned dmax = 0;
    std::string route = "recurrence";
};

struct TableArgs {
    std::string which;
    unsigned dmax = 0;
};

void print_term_error(const TermError &e, const std::string &src, std::ostream &err)
{
    err << "error: " << e.what() << "\n  " << src << "\n  " << std::string(std::min(e.offset(), src.size()), ' ')
        << "^\n";
}

int cmd_sum(const SumArgs &args, bool json_out, std::ostream &out, std::ostream &err)
{
    TermSpec t;
    try {
        t = parse_term(args.term);
    } catch (const TermError &e) {
        print_term_error(e, args.term, err);
        return exit_usage;
    }
    const auto cert = antidifference(t);
    nlohmann::json j;
    j["term"] = pretty_print(t);
    j["summable"] = cert.has_value();
    if (json_out) {
        if (!t.is_zero()) {
            j["ratio"] = to_json(term_ratio(t));
            if (cert) {
                j["normal_form"] = to_json(cert->normal_form);
            } else {
                j["normal_form"] = to_json(normal_form(term_ratio(t)));
            }
        }
    } else {
        out << "term:           " << pretty_print(t) << '\n';
        if (!t.is_zero()) {
            const auto r = term_ratio(t);
            const auto nf = cert ? cert->normal_form : normal_form(r);
            out << "ratio:          " << to_string(r) << '\n';
            out << "normal form:    z = " << to_string(nf.z) << ", a = " << to_string(nf.a)
                << ", b = " << to_string(nf.b) << ", c = " << to_string(nf.c) << '\n';
        }
        out << "verdict:        " << (cert ? "summable" : "not summable") << '\n';
    }
    if (!cert) {
        if (json_out) {
            out << j.dump(2) << '\n';
        }
        return exit_not_summable;
    }
    const std::string antidiff = t.is_zero() ? std::string("0")
                                             : "(" + to_string(cert->multiplier) + ") * " + pretty_print(t);
    std::optional<Rational> value;
    if (args.n) {
        value = definite_sum(t, *cert, *args.n);
    }
    if (json_out) {
        j["certificate"] = to_json(*cert);
        j["antidifference"] = antidiff;
        if (args.n) {
            j["n"] = *args.n;
            j["value"] = to_json(*value);
        }
        out << j.dump(2) << '\n';
    } else {
        out << "x(k):           " << to_string(cert->x) << '\n';
        out << "multiplier:     " << to_string(cert->multiplier) << '\n';
        out << "antidifference: S(k) = " << antidiff << '\n';
        if (args.n) {
            std::string label = "sum k=0.." + std::to_string(*args.n) + ":";
            label.resize(std::max<std::size_t>(label.size() + 1, 16), ' ');
            out << label << to_string(*value) << '\n';
        }
    }
    return exit_ok;
}

int cmd_corrections(const CorrectionArgs &args, bool json_out, std::ostream &out, std::ostream &err)
{
    CorrectionSequence seq;
    try {
        BasisFamily fam{parse_family(args.family), parse_rational(args.a), parse_rational(args.z)};
        fam.validate();
        if (args.route == "recurrence") {
            seq = recurrence_route(fam, args.dmax);
        } else if (args.route == "egf") {
            seq = egf_route(fam, args.dmax);
        } else {
            seq = basis_reduction(fam, args.dmax);
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    if (json_out) {
        out << to_json(seq.values).dump(2) << '\n';
        return exit_ok;
    }
    for (std::size_t d = 0; d < seq.values.size(); ++d) {
        out << d << ' ' << to_string(seq.values[d]) << '\n';
    }
    return exit_ok;
}

void print_aligned(const std::vector<std::vector<Rational>> &rows, std::ostream &out)
{
    std::size_t width = 1;
    for (const auto &row : rows) {
        for (const auto &x : row) {
            width = std::max(width, to_string(x).size());
        }
    }
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? " " : "") << std::setw(static_cast<int>(width)) << to_string(row[i]);
        }
        out << '\n';
    }
}

int cmd_tables(const TableArgs &args, bool json_out, std::ostream &out, std::ostream &err)
{
    if (args.dmax < 1) {
        err << "error: --dmax must be at least 1\n";
        return exit_usage;
    }
    if (args.which == "gould") {
        const auto g = gould_numbers(args.dmax);
        if (json_out) {
            out << to_json(g).dump() << '\n';
        } else {
            for (std::size_t i = 0; i < g.size(); ++i) {
                out << (i ? ", " : "") << to_string(g[i]);
            }
            out << '\n';
        }
        return exit_ok;
    }
    const auto table = args.which == "A"   ? build_A(args.dmax)
                       : args.which == "B" ? build_B(args.dmax)
                                           : a121207_table(args.dmax);
    if (json_out) {
        out << to_json(table).dump() << '\n';
    } else {
        print_aligned(table.rows(), out);
    }
    return exit_ok;
}

int cmd_verify(bool json_out, std::ostream &out)
{
    const auto results = run_catalog();
    const bool all = std::all_of(results.begin(), results.end(), [](const auto &r) { return r.pass; });
    if (json_out) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &r : results) {
            arr.push_back(to_json(r));
        }
        out << arr.dump(2) << '\n';
    } else {
        std::size_t passed = 0;
        for (const auto &r : results) {
            out << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.description << '\n';
            if (!r.pass) {
                out << "     lhs: " << r.lhs << "\n     rhs: " << r.rhs << '\n';
            } else {
                ++passed;
            }
        }
        out << passed << "/" << results.size() << " identities verified\n";
    }
    return all ? exit_ok : exit_usage;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Gosper summation, correction constants and Bell-number tables in exact arithmetic", "gosum"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    SumArgs sum_args;
    auto *sum = app.add_subcommand("sum", "Decide Gosper summability of a term and sum it exactly");
    sum->add_option("term", sum_args.term, "Term, e.g. \"(k-1)/fact(k)\"")->required();
    sum->add_option("--n", sum_args.n, "Upper limit: report sum_{k=0}^{n}");
    sum->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    CorrectionArgs corr_args;
    auto *corr = app.add_subcommand("corrections", "Correction constants c(0..dmax) of a family");
    corr->add_option("--family", corr_args.family, "bell, f (z^k/rf(a,k)) or g (z^k rf(a,k))")
        ->required()
        ->check(CLI::IsMember({"bell", "f", "g"}));
    corr->add_option("--a", corr_args.a, "Rising factorial base a")->capture_default_str();
    corr->add_option("--z", corr_args.z, "Geometric base z")->capture_default_str();
    corr->add_option("--dmax", corr_args.dmax, "Largest d")->required();
    corr->add_option("--route", corr_args.route, "Computation route")
        ->check(CLI::IsMember({"recurrence", "egf", "basis"}))
        ->capture_default_str();
    corr->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    TableArgs table_args;
    auto *tables = app.add_subcommand("tables", "Change-of-basis tables");
    tables->add_option("--which", table_args.which, "A, B, gould or a121207")
        ->required()
        ->check(CLI::IsMember({"A", "B", "gould", "a121207"}));
    tables->add_option("--dmax", table_args.dmax, "Number of rows")->required();
    tables->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto *verify = app.add_subcommand("verify", "Check the built-in catalog of summation identities");
    verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    const bool json_out = format == "json";
    try {
        if (sum->parsed()) {
            return cmd_sum(sum_args, json_out, out, err);
        }
        if (corr->parsed()) {
            return cmd_corrections(corr_args, json_out, out, err);
        }
        if (tables->parsed()) {
            return cmd_tables(table_args, json_out, out, err);
        }
        return cmd_verify(json_out, out);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace gosum
