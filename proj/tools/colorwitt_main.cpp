// Command-line frontend: dimension tables, character series, Schreier
// generating functions, and the verification suites.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "colorwitt/group_series.hpp"
#include "colorwitt/lyndon.hpp"
#include "colorwitt/pbw.hpp"
#include "colorwitt/schreier.hpp"
#include "colorwitt/spec_io.hpp"
#include "colorwitt/verify.hpp"
#include "colorwitt/witt.hpp"

namespace {

using namespace colorwitt;

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            const int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": cannot parse '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

// "2t", "t+t^2", "3t^4+t", "0"
Series parse_poly(const std::string& text, int max_degree) {
    const GradingSpec spec = univariate_spec(max_degree);
    Series out(spec);
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("poly: empty input");
    size_t i = 0;
    while (i < s.size()) {
        long coeff = 1;
        bool have_digits = false;
        size_t start = i;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) {
            coeff = std::stol(s.substr(start, i - start));
            have_digits = true;
        }
        long degree = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            degree = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                start = i;
                while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == start) throw std::invalid_argument("poly: missing exponent in '" + text + "'");
                degree = std::stol(s.substr(start, i - start));
            }
        } else if (!have_digits) {
            throw std::invalid_argument("poly: cannot parse '" + text + "'");
        }
        if (degree == 0 && coeff != 0)
            throw std::invalid_argument("poly: constant term must be zero in '" + text + "'");
        if (degree <= max_degree) out.add_term(Multidegree({static_cast<int>(degree)}), coeff);
        if (i < s.size()) {
            if (s[i] != '+') throw std::invalid_argument("poly: expected '+' in '" + text + "'");
            ++i;
            if (i == s.size()) throw std::invalid_argument("poly: trailing '+' in '" + text + "'");
        }
    }
    return out;
}

void emit_table(const DimensionTable& table, const std::string& format, std::ostream& os) {
    if (format == "csv") os << table.to_csv();
    else os << table.to_json().dump(2) << "\n";
}

int cmd_dims(const std::string& spec_path, std::optional<int> max_degree,
             const std::string& multidegree_arg, std::optional<long> p_arg,
             const std::string& group_element_arg, const std::string& format) {
    if (!multidegree_arg.empty() && !group_element_arg.empty())
        throw std::invalid_argument("--multidegree and --group-element are mutually exclusive");
    GradingSpec spec = load_spec_file(spec_path);
    if (max_degree) spec = spec.with_truncation(*max_degree);
    std::optional<Prime> p;
    if (p_arg) p.emplace(*p_arg);

    DimensionTable table;
    table.digest = spec_digest(spec);
    table.truncation = spec.truncation();
    if (p) table.prime = p->value();

    auto closed_form = [&](const Multidegree& alpha) {
        return p ? dim_multidegree_p(spec, alpha, *p) : dim_multidegree(spec, alpha);
    };

    if (!group_element_arg.empty()) {
        if (!spec.has_group())
            throw std::invalid_argument("--group-element requires a spec with a group block");
        const GroupElement g =
            spec.group().reduce(GroupElement(parse_int_list(group_element_arg, "--group-element")));
        for (int n = 1; n <= spec.truncation(); ++n) {
            for (const Multidegree& alpha : group_degree_fiber(spec, n, g)) {
                DimensionRow row;
                row.multidegree = alpha;
                row.total_degree = n;
                row.group_element = g;
                row.dim = closed_form(alpha);
                row.method = "closed-form";
                table.rows.push_back(std::move(row));
            }
        }
    } else if (!multidegree_arg.empty()) {
        const Multidegree alpha(parse_int_list(multidegree_arg, "--multidegree"));
        spec.check_arity(alpha);
        for (int i = 0; i < alpha.size(); ++i)
            if (alpha[i] < 0)
                throw std::invalid_argument("--multidegree entries must be nonnegative");
        DimensionRow row;
        row.multidegree = alpha;
        row.total_degree = alpha.total();
        row.dim = closed_form(alpha);
        row.method = "closed-form";
        table.rows.push_back(std::move(row));
    } else {
        for (const Multidegree& alpha : multidegrees_up_to(spec.arity(), spec.truncation())) {
            DimensionRow row;
            row.multidegree = alpha;
            row.total_degree = alpha.total();
            row.dim = closed_form(alpha);
            row.method = "closed-form";
            table.rows.push_back(std::move(row));
        }
    }
    table.sort_rows();
    emit_table(table, format, std::cout);
    return 0;
}

int cmd_series(const std::string& spec_path, std::optional<int> max_degree,
               std::optional<long> p_arg, bool with_group, const std::string& format) {
    GradingSpec spec = load_spec_file(spec_path);
    if (max_degree) spec = spec.with_truncation(*max_degree);

    DimensionTable table;
    table.digest = spec_digest(spec);
    table.truncation = spec.truncation();

    if (with_group) {
        if (p_arg) throw std::invalid_argument("--group and --p cannot be combined");
        const GroupSeries ch = free_lie_character_g(spec);
        for (const auto& [key, c] : ch.terms()) {
            DimensionRow row;
            row.multidegree = key.first;
            row.total_degree = key.first.total();
            row.group_element = key.second;
            row.dim = c.to_integer();
            row.method = "series";
            table.rows.push_back(std::move(row));
        }
    } else {
        std::optional<Prime> p;
        if (p_arg) {
            p.emplace(*p_arg);
            table.prime = p->value();
        }
        const Series ch = p ? free_restricted_character(spec, *p) : free_lie_character(spec);
        for (const auto& [m, c] : ch.terms()) {
            DimensionRow row;
            row.multidegree = m;
            row.total_degree = m.total();
            row.dim = c.to_integer();
            row.method = "series";
            table.rows.push_back(std::move(row));
        }
    }
    table.sort_rows();
    emit_table(table, format, std::cout);
    return 0;
}

int cmd_schreier(const std::string& hx_arg, const std::string& hquot_arg, int max_degree) {
    const Series hx = parse_poly(hx_arg, max_degree);
    const Series hquot = parse_poly(hquot_arg, max_degree);
    const Series hz = schreier_generators_series(hx, hquot);
    nlohmann::json coeffs = nlohmann::json::array();
    for (int n = 0; n <= max_degree; ++n)
        coeffs.push_back(hz.coeff(Multidegree({n})).to_integer().get_si());
    nlohmann::json j;
    j["maxDegree"] = max_degree;
    j["coefficients"] = coeffs;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int max_degree,
               const std::string& spec_path, std::optional<long> p_arg) {
    // with --spec, pbw/pbw-p check the identity on the user's spec instead of
    // the built-in families
    if (!spec_path.empty()) {
        if (suite != "pbw" && suite != "pbw-p")
            throw std::invalid_argument("--spec only applies to the pbw and pbw-p suites");
        GradingSpec spec = load_spec_file(spec_path).with_truncation(max_degree);
        PbwReport report;
        if (suite == "pbw") {
            report = pbw_verify(spec);
        } else {
            if (!p_arg) throw std::invalid_argument("pbw-p with --spec needs --p");
            report = pbw_verify_p(spec, Prime(*p_arg));
        }
        std::cout << "suite " << suite << " on " << spec_path << ": "
                  << (report.ok ? "pass" : "FAIL: " + report.str()) << "\n";
        return report.ok ? 0 : 1;
    }

    SuiteResult res;
    if (suite == "pbw") res = verify_pbw(seed, max_degree);
    else if (suite == "pbw-p") res = verify_pbw_p(max_degree);
    else if (suite == "oracle") res = verify_oracle(std::min(max_degree, 8));
    else if (suite == "mobius") res = verify_mobius();
    else if (suite == "operators") res = verify_operators(seed, max_degree);
    else throw std::invalid_argument("unknown suite: " + suite);

    if (res.pass) {
        std::cout << "suite " << suite << ": pass (" << res.checks << " checks)\n";
        return 0;
    }
    std::cout << "suite " << suite << ": FAIL after " << res.checks << " checks\n"
              << "first counterexample: " << res.counterexample << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hilbert series and dimension formulas for free graded Lie algebras"};
    app.require_subcommand(1);

    std::string spec_path, multidegree_arg, group_element_arg, format = "json";
    std::optional<int> max_degree_opt;
    std::optional<long> p_opt;

    auto* dims = app.add_subcommand("dims", "Dimension table from the closed-form formulas");
    dims->add_option("--spec", spec_path, "spec file (JSON)")->required();
    dims->add_option("--max-degree", max_degree_opt, "override the truncation order");
    dims->add_option("--multidegree", multidegree_arg, "single multidegree a,b,...");
    dims->add_option("--p", p_opt, "characteristic for the restricted formulas");
    dims->add_option("--group-element", group_element_arg,
                     "total-degree fiber over this group element e1,e2,...");
    dims->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    auto* series = app.add_subcommand("series", "Character of the free (restricted) algebra");
    series->add_option("--spec", spec_path, "spec file (JSON)")->required();
    series->add_option("--max-degree", max_degree_opt, "override the truncation order");
    series->add_option("--p", p_opt, "characteristic for the restricted character");
    bool with_group = false;
    series->add_flag("--group", with_group, "group-algebra coefficients");
    series->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    std::string hx_arg, hquot_arg;
    int schreier_degree = kDefaultMaxDegree;
    auto* schreier = app.add_subcommand("schreier", "Free-generator series of a subalgebra");
    schreier->add_option("--hx", hx_arg, "H(X), e.g. \"2t\" or \"t+t^2\"")->required();
    schreier->add_option("--hquot", hquot_arg, "H(L/K)")->required();
    schreier->add_option("--max-degree", schreier_degree, "truncation order");

    std::string suite, verify_spec_path;
    std::uint64_t seed = 12345;
    int verify_degree = 8;
    auto* verify = app.add_subcommand("verify", "Run an identity suite");
    verify->add_option("--suite", suite, "pbw|pbw-p|oracle|mobius|operators")->required();
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--max-degree", verify_degree, "truncation order");
    verify->add_option("--spec", verify_spec_path,
                       "run the pbw/pbw-p identity on this spec instead of the built-in family");
    verify->add_option("--p", p_opt, "characteristic for pbw-p with --spec");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(dims))
            return cmd_dims(spec_path, max_degree_opt, multidegree_arg, p_opt,
                            group_element_arg, format);
        if (app.got_subcommand(series))
            return cmd_series(spec_path, max_degree_opt, p_opt, with_group, format);
        if (app.got_subcommand(schreier)) {
            if (schreier_degree < 1) throw std::invalid_argument("--max-degree must be >= 1");
            return cmd_schreier(hx_arg, hquot_arg, schreier_degree);
        }
        if (app.got_subcommand(verify)) {
            if (verify_degree < 1) throw std::invalid_argument("--max-degree must be >= 1");
            return cmd_verify(suite, seed, verify_degree, verify_spec_path, p_opt);
        }
    } catch (const integrality_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
