#include <yangian/checks.hpp>
#include <yangian/hopf.hpp>
#include <yangian/json.hpp>
#include <yangian/pairing.hpp>
#include <yangian/parse.hpp>
#include <yangian/representations.hpp>

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace yangian;

namespace {

enum class Format { text, json, csv };

struct Options {
    int n = 2;
    std::string dual_trunc = "5";
    int order = 3;
    std::uint32_t seed = 1;
    std::string format = "text";
    std::string out;
};

int parse_trunc(const std::string& s) {
    if (s == "inf" || s == "none") return kNoTruncation;
    std::size_t used = 0;
    int d = std::stoi(s, &used);
    if (used != s.size() || d < 0) throw std::invalid_argument("--dual-trunc must be a nonnegative integer or 'inf'");
    return d;
}

// Collects the artifact and writes it, with the configuration echoed first.
class Output {
public:
    Output(const Options& o, Format f) : opts_(o), format_(f) {}

    Format format() const { return format_; }
    std::ostream& text() { return body_; }
    json& data() { return data_; }

    void flush() const {
        std::ostringstream out;
        const std::string d = opts_.dual_trunc;
        if (format_ == Format::json) {
            json doc = {{"config", {{"N", opts_.n}, {"D", truncation_json(parse_trunc(d))}, {"K", opts_.order}, {"seed", opts_.seed}}},
                        {"result", data_}};
            out << doc.dump(2) << "\n";
        } else {
            out << "# N=" << opts_.n << " D=" << d << " K=" << opts_.order << " seed=" << opts_.seed << "\n";
            out << body_.str();
        }
        if (opts_.out.empty()) {
            std::cout << out.str();
        } else {
            std::ofstream f(opts_.out);
            if (!f) throw std::runtime_error("cannot open output file '" + opts_.out + "'");
            f << out.str();
        }
    }

private:
    const Options& opts_;
    Format format_;
    std::ostringstream body_;
    json data_;
};

std::string csv_monomial(const Monomial& m) { return m.empty() ? "1" : to_string(m); }

RepSpec parse_spec(const std::string& text, int n) {
    if (!text.empty() && text.front() == '{') {
        RepSpec s = json::parse(text).get<RepSpec>();
        return s;
    }
    // shorthand kind:c, or sigma_double:c for the shifted dual parameter
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("representation spec must be JSON or kind:c");
    const std::string kind = text.substr(0, colon), value = text.substr(colon + 1);
    if (kind == "sigma_double") return RepSpec::sigma_double(Rational::parse(value), n);
    if (!value.empty() && std::isalpha(static_cast<unsigned char>(value.front()))) {
        const RepKind k = parse_rep_kind(kind);
        const bool descending = k == RepKind::rho_star || k == RepKind::sigma_dual || k == RepKind::laurent_eval;
        return RepSpec::symbolic(k, descending ? desc(value, 4) : asc(value, 4), n);
    }
    return RepSpec::numeric(parse_rep_kind(kind), Rational::parse(value), n);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the Yangian, its dual and the double Yangian of gl_N"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--n", o.n, "N of gl_N")->check(CLI::PositiveNumber);
    app.add_option("--dual-trunc", o.dual_trunc, "dual-degree truncation D (integer or 'inf')");
    app.add_option("--order", o.order, "series order K")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", o.seed, "seed for randomized suites");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", o.out, "write the artifact to FILE");

    std::string expr, expr2, side = "y", suite;
    std::vector<std::string> specs;
    int deg = 0;
    bool circ = false;

    auto* normalize = app.add_subcommand("normalize", "expression to normal form");
    normalize->add_option("expr", expr)->required();
    auto* commute = app.add_subcommand("commute", "commutator of two expressions");
    commute->add_option("x", expr)->required();
    commute->add_option("y", expr2)->required();
    auto* pair = app.add_subcommand("pair", "pairing <X, Z> of a Yangian and a dual element");
    pair->add_option("x", expr)->required();
    pair->add_option("z", expr2)->required();
    auto* gram = app.add_subcommand("gram", "Gram matrix of degree s");
    gram->add_option("--deg", deg)->required()->check(CLI::NonNegativeNumber);
    auto* dual_basis = app.add_subcommand("dual-basis", "dual basis up to degree D");
    dual_basis->add_option("--deg-max", deg)->required()->check(CLI::NonNegativeNumber);
    auto* urmatrix = app.add_subcommand("urmatrix", "truncated universal R-matrix");
    urmatrix->add_option("--deg-max", deg)->required()->check(CLI::NonNegativeNumber);
    auto* zseries = app.add_subcommand("zseries", "coefficients of the central series");
    zseries->add_flag("--dual", circ, "the dual series Z°(v), truncated at D");
    auto* antipode = app.add_subcommand("antipode", "antipode on generators");
    antipode->add_option("--side", side)->check(CLI::IsMember({"y", "dual"}));
    auto* rep = app.add_subcommand("rep", "image of an element in a representation");
    rep->add_option("--spec", specs, "JSON spec or kind:c, one per tensor factor")->required();
    rep->add_option("--apply", expr)->required();
    auto* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("suite", suite)->required()->check(
        CLI::IsMember({"ybe", "pbw", "hopf", "center", "duality", "rprops", "double", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        const int d = parse_trunc(o.dual_trunc);
        const int n = o.n;
        const Format format = o.format == "json" ? Format::json : o.format == "csv" ? Format::csv : Format::text;
        Output out(o, format);
        int status = 0;

        auto emit_element = [&](const AlgElement& x) {
            if (format == Format::json) out.data() = x;
            else if (format == Format::csv) {
                out.text() << "coeff,monomial\n";
                for (const auto& [m, c] : x.terms()) out.text() << c << "," << csv_monomial(m) << "\n";
            } else out.text() << x.str() << "\n";
        };

        if (*normalize) {
            emit_element(parse_element(expr, n, d));
        } else if (*commute) {
            emit_element(commutator(parse_element(expr, n, d), parse_element(expr2, n, d)));
        } else if (*pair) {
            AlgElement x = parse_element(expr, n);
            AlgElement z = parse_element(expr2, n, d);
            Rational v = pair_elements(x, z);
            if (format == Format::json) out.data() = v;
            else out.text() << v << "\n";
        } else if (*gram) {
            GramTable g = gram_matrix(deg, n);
            if (format == Format::json) {
                out.data() = g;
            } else if (format == Format::csv) {
                out.text() << "row";
                for (const auto& c : g.cols) out.text() << "," << csv_monomial(c);
                out.text() << "\n";
                for (std::size_t r = 0; r < g.rows.size(); ++r) {
                    out.text() << csv_monomial(g.rows[r]);
                    for (const auto& v : g.values[r]) out.text() << "," << v;
                    out.text() << "\n";
                }
            } else {
                for (std::size_t r = 0; r < g.rows.size(); ++r) {
                    for (std::size_t c = 0; c < g.cols.size(); ++c) out.text() << (c ? " " : "") << g.values[r][c];
                    out.text() << "\n";
                }
                out.text() << "lower_triangular " << g.lower_triangular << "\ndiagonal_matches " << g.diagonal_matches
                           << "\nrank " << g.rank << "\n";
            }
            status = g.lower_triangular && g.diagonal_matches && g.rank == static_cast<int>(g.rows.size()) ? 0 : 1;
        } else if (*dual_basis) {
            DualSystem sys = dual_system(deg, n);
            if (format == Format::json) out.data() = sys;
            else
                for (std::size_t s = 0; s < sys.basis.size(); ++s)
                    out.text() << csv_monomial(sys.basis[s]) << (format == Format::csv ? ",\"" : " -> ")
                               << sys.duals[s].str() << (format == Format::csv ? "\"" : "") << "\n";
        } else if (*urmatrix) {
            TensorElement r = universal_r(deg, n);
            if (format == Format::json) out.data() = r;
            else if (format == Format::csv) {
                out.text() << "coeff,left,right\n";
                for (const auto& [k, c] : r.terms())
                    out.text() << c << "," << csv_monomial(k[0]) << "," << csv_monomial(k[1]) << "\n";
            } else out.text() << r.str() << "\n";
        } else if (*zseries) {
            json arr = json::array();
            if (circ) {
                ASeries z = z_circ_series(n, d, o.order);
                for (int k = 0; k <= o.order; ++k) {
                    AlgElement c = z.coeff(Exponent{k}, AlgElement(n, d));
                    if (format == Format::json) arr.push_back(c);
                    else out.text() << "Z°[" << k << "] = " << c.str() << "\n";
                }
            } else {
                auto z = z_series(n, o.order);
                for (int k = 0; k <= o.order; ++k) {
                    if (format == Format::json) arr.push_back(z[k]);
                    else out.text() << "Z[" << k << "] = " << z[k].str() << "\n";
                }
            }
            if (format == Format::json) out.data() = arr;
        } else if (*antipode) {
            const bool dual = side == "dual";
            Antipode s(n, dual ? d : kNoTruncation);
            json arr = json::array();
            for (int r = 1; r <= o.order; ++r)
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) {
                        GenId g{dual ? -r : r, i, j};
                        AlgElement img = s.generator(g);
                        if (format == Format::json) arr.push_back({{"gen", g}, {"image", img}});
                        else out.text() << "S(" << g.str() << ") = " << img.str() << "\n";
                    }
            if (format == Format::json) out.data() = arr;
        } else if (*rep) {
            std::vector<RepSpec> parsed;
            for (const auto& s : specs) parsed.push_back(parse_spec(s, n));
            TensorOperator img = rep_apply(parse_element(expr, n, d), parsed);
            if (format == Format::json) out.data() = img;
            else out.text() << img.str();
        } else if (*check) {
            CheckConfig cfg{n, d == kNoTruncation ? 5 : d, o.order, o.seed};
            auto results = run_suite(suite, cfg);
            json arr = json::array();
            if (format == Format::csv) out.text() << "suite,identity,status,residual\n";
            for (const auto& r : results) {
                if (!r.holds) status = 1;
                const char* tag = r.holds ? "PASS" : "FAIL";
                if (format == Format::json)
                    arr.push_back({{"suite", r.suite}, {"identity", r.name}, {"status", tag}, {"residual", r.residual}});
                else if (format == Format::csv)
                    out.text() << r.suite << ",\"" << r.name << "\"," << tag << ",\"" << r.residual << "\"\n";
                else
                    out.text() << tag << " " << r.suite << ": " << r.name << (r.holds ? "" : " | " + r.residual)
                               << "\n";
            }
            if (format == Format::json) out.data() = arr;
        }
        out.flush();
        return status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
