// Command-line front end: generate the polynomial sequences, print the
// classical number tables, and run the exact / numeric verification suites.
//
// Exit codes: 0 = success, 1 = a verification failed, 2 = usage error.
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <bez/bernoulli_euler.hpp>
#include <bez/identity_suite.hpp>
#include <bez/numeric_suite.hpp>
#include <bez/poly.hpp>
#include <bez/sheffer.hpp>

namespace {

using bez::IntPoly;
using bez::Rat;
using ordered_json = nlohmann::ordered_json;

const std::map<std::string, bez::PRoute>& p_routes() {
    static const std::map<std::string, bez::PRoute> m{
        {"diff", bez::PRoute::diff_recurrence},
        {"sum", bez::PRoute::sum_recurrence},
        {"explicit", bez::PRoute::explicit_coeffs},
    };
    return m;
}

const std::map<std::string, bez::QRoute>& q_routes() {
    static const std::map<std::string, bez::QRoute> m{
        {"derivative_sum", bez::QRoute::derivative_sum},
        {"euler_convolution", bez::QRoute::euler_convolution},
        {"inverse_recurrence", bez::QRoute::inverse_recurrence},
    };
    return m;
}

const std::map<std::string, bez::BVariant>& b_variants() {
    static const std::map<std::string, bez::BVariant> m{
        {"eq2_13", bez::BVariant::eq2_13},
        {"eq2_37", bez::BVariant::eq2_37},
        {"explicit_2_39", bez::BVariant::explicit_2_39},
        {"explicit_2_40", bez::BVariant::explicit_2_40},
        {"thm1", bez::BVariant::thm1},
    };
    return m;
}

const std::map<std::string, bez::EVariant>& e_variants() {
    static const std::map<std::string, bez::EVariant> m{
        {"moment_2_20", bez::EVariant::moment_2_20},
        {"q_at_0", bez::EVariant::q_at_0},
        {"explicit_sum", bez::EVariant::explicit_sum},
        {"thm2", bez::EVariant::thm2},
    };
    return m;
}

const std::map<std::string, bez::ZVariant>& z_variants() {
    static const std::map<std::string, bez::ZVariant> m{
        {"euler_2_10", bez::ZVariant::euler_2_10},
        {"moment_2_42", bez::ZVariant::moment_2_42},
        {"corollary1", bez::ZVariant::corollary1},
    };
    return m;
}

template <class M>
std::vector<std::string> keys_of(const M& m) {
    std::vector<std::string> out;
    for (const auto& kv : m) out.push_back(kv.first);
    return out;
}

template <class M>
typename M::mapped_type variant_for(const M& m, const std::string& name,
                                    const char* kind) {
    auto it = m.find(name);
    if (it == m.end())
        throw std::invalid_argument("variant '" + name +
                                    "' is not valid for kind '" +
                                    std::string(kind) + "'");
    return it->second;
}

// The power-weighted Euler recurrence only defines E_{2n} for n >= 1; every
// other route also covers E_0.
unsigned euler_first_index(bez::EVariant v) {
    return v == bez::EVariant::thm2 ? 2u : 0u;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------
struct GenOpts {
    std::string seq;
    unsigned n = 0;
    std::string route;  // empty = reference route
    bool all_routes = false;
    std::string format = "pretty";
};

IntPoly gen_by_name(const GenOpts& o, const std::string& route) {
    if (o.seq == "p") {
        auto it = p_routes().find(route);
        if (it == p_routes().end())
            throw std::invalid_argument("route '" + route +
                                        "' is not valid for sequence p");
        return bez::gen_p(o.n, it->second);
    }
    auto it = q_routes().find(route);
    if (it == q_routes().end())
        throw std::invalid_argument("route '" + route +
                                    "' is not valid for sequence q");
    return bez::gen_q(o.n, it->second);
}

int run_gen(const GenOpts& o, std::ostream& os) {
    if (o.all_routes) {
        const auto names = o.seq == "p" ? keys_of(p_routes()) : keys_of(q_routes());
        std::vector<IntPoly> polys;
        for (const std::string& name : names) polys.push_back(gen_by_name(o, name));
        bool agree = true;
        for (const IntPoly& p : polys) agree = agree && p == polys.front();
        if (o.format == "json") {
            for (std::size_t i = 0; i < names.size(); ++i) {
                ordered_json rec;
                rec["route"] = names[i];
                rec["coeffs"] = bez::poly_coeff_strings(polys[i]);
                os << rec.dump() << "\n";
            }
            os << ordered_json{{"agreement", agree}}.dump() << "\n";
        } else if (o.format == "csv") {
            os << "route,polynomial\n";
            for (std::size_t i = 0; i < names.size(); ++i)
                os << names[i] << "," << bez::poly_to_pretty(polys[i]) << "\n";
            os << "agreement," << (agree ? "true" : "false") << "\n";
        } else {
            for (std::size_t i = 0; i < names.size(); ++i)
                os << names[i] << ": " << bez::poly_to_pretty(polys[i]) << "\n";
            os << "agreement: " << (agree ? "true" : "false") << "\n";
        }
        return agree ? 0 : 1;
    }

    const std::string route =
        !o.route.empty() ? o.route
        : o.seq == "p"   ? std::string("diff")
                         : std::string("derivative_sum");
    const IntPoly poly = gen_by_name(o, route);
    if (o.format == "json") {
        os << ordered_json(bez::poly_coeff_strings(poly)).dump() << "\n";
    } else if (o.format == "csv") {
        os << "k,coeff\n";
        const auto cs = bez::poly_coeff_strings(poly);
        for (std::size_t k = 0; k < cs.size(); ++k)
            os << k << "," << cs[k] << "\n";
    } else {
        os << bez::poly_to_pretty(poly) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// numbers
// ---------------------------------------------------------------------------
struct NumbersOpts {
    std::string kind;
    unsigned n_max = 1;
    std::string variant;  // empty = classical recurrence / Euler formula
    bool cross_check = false;
    std::string format = "pretty";
};

struct NumberRow {
    unsigned n = 0;
    Rat value{0};
    std::vector<std::pair<std::string, Rat>> variants;  // cross-check only
    bool agree = true;
};

std::vector<NumberRow> numbers_rows(const NumbersOpts& o) {
    if (o.cross_check && !o.variant.empty())
        throw std::invalid_argument(
            "--variant and --cross-check are mutually exclusive");
    std::vector<NumberRow> rows;
    if (o.kind == "bernoulli") {
        if (!o.variant.empty()) {
            const bez::BVariant v =
                variant_for(b_variants(), o.variant, "bernoulli");
            for (unsigned n = 2; n <= o.n_max; n += 2)
                rows.push_back({n, bez::bernoulli_via_moment(n / 2, v), {}, true});
            return rows;
        }
        for (unsigned n = 0; n <= o.n_max; ++n) {
            const Rat b = bez::bernoulli_number(n);
            if (b == 0 && n > 0) continue;  // odd n >= 3
            NumberRow row{n, b, {}, true};
            if (o.cross_check && n >= 2 && n % 2 == 0) {
                for (const auto& kv : b_variants()) {
                    const Rat via = bez::bernoulli_via_moment(n / 2, kv.second);
                    row.variants.emplace_back(kv.first, via);
                    row.agree = row.agree && via == b;
                }
            }
            rows.push_back(std::move(row));
        }
        return rows;
    }
    if (o.kind == "euler") {
        std::optional<bez::EVariant> variant;
        if (!o.variant.empty())
            variant = variant_for(e_variants(), o.variant, "euler");
        const unsigned first = variant ? euler_first_index(*variant) : 0u;
        for (unsigned n = first; n <= o.n_max; n += 2) {
            const Rat e{bez::euler_number(n)};
            NumberRow row{n, e, {}, true};
            if (variant) {
                row.value = Rat(bez::euler_via(n / 2, *variant));
            } else if (o.cross_check) {
                for (const auto& kv : e_variants()) {
                    if (n < euler_first_index(kv.second)) continue;
                    const Rat via{bez::euler_via(n / 2, kv.second)};
                    row.variants.emplace_back(kv.first, via);
                    row.agree = row.agree && via == e;
                }
            }
            rows.push_back(std::move(row));
        }
        return rows;
    }
    // zeta-even-ratio: rows are indexed by the even zeta argument.
    std::optional<bez::ZVariant> zvariant;
    if (!o.variant.empty())
        zvariant = variant_for(z_variants(), o.variant, "zeta-even-ratio");
    for (unsigned arg = 2; arg <= o.n_max; arg += 2) {
        NumberRow row{arg, bez::zeta_even_ratio(arg / 2), {}, true};
        if (zvariant) {
            row.value = bez::zeta_even_ratio(arg / 2, *zvariant);
        } else if (o.cross_check) {
            for (const auto& kv : z_variants()) {
                const Rat via = bez::zeta_even_ratio(arg / 2, kv.second);
                row.variants.emplace_back(kv.first, via);
                row.agree = row.agree && via == row.value;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int run_numbers(const NumbersOpts& o, std::ostream& os) {
    const std::vector<NumberRow> rows = numbers_rows(o);
    bool all_agree = true;
    for (const NumberRow& r : rows) all_agree = all_agree && r.agree;

    if (o.format == "json") {
        for (const NumberRow& r : rows) {
            ordered_json rec;
            rec["n"] = r.n;
            rec["value"] = r.value.str();
            if (o.cross_check) {
                ordered_json vs;
                for (const auto& kv : r.variants) vs[kv.first] = kv.second.str();
                rec["variants"] = vs;
                rec["agree"] = r.agree;
            }
            os << rec.dump() << "\n";
        }
    } else if (o.format == "csv") {
        os << (o.cross_check ? "n,value,agree\n" : "n,value\n");
        for (const NumberRow& r : rows) {
            os << r.n << "," << r.value.str();
            if (o.cross_check) os << "," << (r.agree ? "true" : "false");
            os << "\n";
        }
    } else {
        for (const NumberRow& r : rows) {
            os << r.n << ": " << r.value.str();
            if (o.cross_check && !r.variants.empty()) {
                if (r.agree) {
                    os << "  [" << r.variants.size() << " variants agree]";
                } else {
                    os << "  [DISAGREE:";
                    for (const auto& kv : r.variants)
                        os << " " << kv.first << "=" << kv.second.str();
                    os << "]";
                }
            }
            os << "\n";
        }
    }
    return all_agree ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------
struct VerifyOpts {
    std::string scope;
    std::string ids;  // comma-separated; empty = whole scope
    unsigned n_max = 12;
    unsigned prec = 30;
    std::optional<double> tol;
    std::string format = "json";
};

void emit_exact(const bez::IdentityReport& r, const std::string& format,
                std::ostream& os) {
    if (format == "json") {
        os << r.to_json() << "\n";
    } else if (format == "csv") {
        os << "exact," << r.id << ",";
        if (r.skipped)
            os << "skipped";
        else
            os << "n=" << r.n_min << ".." << r.n_max;
        os << "," << (r.all_ok() ? "true" : "false") << ",";
        if (r.counterexample)
            os << "n=" << r.counterexample->n << " lhs=" << r.counterexample->lhs
               << " rhs=" << r.counterexample->rhs;
        os << "\n";
    } else {
        os << r.id << ": ";
        if (r.skipped) {
            os << "skipped (first valid index above bound " << r.n_max << ")";
        } else if (r.all_ok()) {
            os << "pass (n = " << r.n_min << ".." << r.n_max << ")";
        } else {
            os << "FAIL at n = " << r.counterexample->n
               << " (lhs = " << r.counterexample->lhs
               << ", rhs = " << r.counterexample->rhs << ")";
        }
        os << "\n";
    }
}

void emit_numeric(const bez::QuadResult& r, const std::string& format,
                  std::ostream& os) {
    if (format == "json") {
        os << r.to_json() << "\n";
    } else if (format == "csv") {
        os << "numeric," << r.id << "," << r.case_label << ","
           << (r.pass ? "true" : "false") << ","
           << "rel_diff=" << r.rel_diff.str(3, std::ios_base::scientific)
           << (r.asserted ? "" : " (probe)") << "\n";
    } else {
        os << r.id << " [" << r.case_label << "]: "
           << (r.pass ? "pass" : "FAIL")
           << " rel_diff = " << r.rel_diff.str(3, std::ios_base::scientific)
           << " (tol " << r.tol.str(2, std::ios_base::scientific) << ")"
           << (r.asserted ? "" : " [probe, not asserted]");
        if (!r.note.empty()) os << " -- " << r.note;
        os << "\n";
    }
}

int run_verify(const VerifyOpts& o, std::ostream& os) {
    const std::vector<std::string> ids = split_csv(o.ids);
    std::vector<std::string> exact_ids;
    std::vector<std::string> numeric_ids;
    if (ids.empty()) {
        if (o.scope != "numeric") exact_ids = bez::registered_check_ids();
        if (o.scope != "exact") numeric_ids = bez::numeric_check_ids();
    } else {
        for (const std::string& id : ids) {
            const bool ex = bez::is_registered_check(id);
            const bool nu = bez::is_numeric_check(id);
            if (o.scope == "exact" ? !ex : o.scope == "numeric" ? !nu : !ex && !nu)
                throw std::invalid_argument("unknown check: " + id);
            if (ex && o.scope != "numeric")
                exact_ids.push_back(id);
            else
                numeric_ids.push_back(id);
        }
    }

    if (o.format == "csv") os << "kind,id,case,pass,detail\n";
    bool ok = true;
    if (!exact_ids.empty()) {
        const bez::SuiteContext ctx = bez::make_context(o.n_max);
        for (const std::string& id : exact_ids) {
            const bez::IdentityReport rep = bez::run_check(ctx, id, o.n_max);
            ok = ok && rep.all_ok();
            emit_exact(rep, o.format, os);
        }
    }
    for (const std::string& id : numeric_ids) {
        for (const bez::QuadResult& r : bez::verify_numeric(id, o.prec, o.tol)) {
            ok = ok && (r.pass || !r.asserted);
            emit_numeric(r, o.format, os);
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact and high-precision tools for a pair of Sheffer polynomial "
        "sequences tied to Bernoulli/Euler numbers and zeta values"};
    app.require_subcommand(1);
    std::string output_path;

    const std::vector<std::string> formats{"json", "csv", "pretty"};
    const auto add_output = [&output_path](CLI::App* cmd) {
        cmd->add_option("--output", output_path,
                        "write results to this file instead of stdout");
    };

    GenOpts gen;
    CLI::App* gen_cmd = app.add_subcommand(
        "gen", "Generate one polynomial of the p or q sequence");
    gen_cmd->add_option("seq", gen.seq, "sequence name")
        ->required()
        ->check(CLI::IsMember({"p", "q"}));
    gen_cmd->add_option("n", gen.n, "sequence index")->required();
    gen_cmd->add_option("--route", gen.route,
                        "construction route (p: diff|sum|explicit; q: "
                        "derivative_sum|euler_convolution|inverse_recurrence)")
        ->check(CLI::IsMember({"diff", "sum", "explicit", "derivative_sum",
                               "euler_convolution", "inverse_recurrence"}));
    gen_cmd->add_flag("--all-routes", gen.all_routes,
                      "compute every route and report agreement");
    gen_cmd->add_option("--format", gen.format, "output format")
        ->check(CLI::IsMember(formats));
    add_output(gen_cmd);

    NumbersOpts numbers;
    CLI::App* numbers_cmd = app.add_subcommand(
        "numbers", "Print Bernoulli / Euler / zeta-ratio tables");
    numbers_cmd->add_option("kind", numbers.kind, "table kind")
        ->required()
        ->check(CLI::IsMember({"bernoulli", "euler", "zeta-even-ratio"}));
    numbers_cmd->add_option("n_max", numbers.n_max, "largest index (>= 1)")
        ->required()
        ->check(CLI::Range(1u, 1000000u));
    numbers_cmd
        ->add_option("--variant", numbers.variant,
                     "compute through one alternative formula instead of the "
                     "classical recurrence")
        ->check(CLI::IsMember({"eq2_13", "eq2_37", "explicit_2_39",
                               "explicit_2_40", "thm1", "moment_2_20", "q_at_0",
                               "explicit_sum", "thm2", "euler_2_10",
                               "moment_2_42", "corollary1"}));
    numbers_cmd->add_flag("--cross-check", numbers.cross_check,
                          "recompute every row through all variants and flag "
                          "disagreement");
    numbers_cmd->add_option("--format", numbers.format, "output format")
        ->check(CLI::IsMember(formats));
    add_output(numbers_cmd);

    VerifyOpts verify;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Run the exact and/or numeric verification suites");
    verify_cmd->add_option("scope", verify.scope, "which suite to run")
        ->required()
        ->check(CLI::IsMember({"exact", "numeric", "all"}));
    verify_cmd->add_option("--ids", verify.ids,
                           "comma-separated check ids (default: all in scope)");
    verify_cmd
        ->add_option("--n-max", verify.n_max, "exact-suite index bound (>= 1)")
        ->check(CLI::Range(1u, 1000000u));
    verify_cmd
        ->add_option("--prec", verify.prec,
                     "numeric working precision in decimal digits (>= 15)")
        ->check(CLI::Range(15u, 100000u));
    double tol_value = 0;
    CLI::Option* tol_opt =
        verify_cmd
            ->add_option("--tol", tol_value,
                         "override the per-check pass tolerance")
            ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", verify.format, "output format")
        ->check(CLI::IsMember(formats));
    add_output(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }
    if (tol_opt->count() > 0) verify.tol = tol_value;

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
            std::cerr << "error: cannot open output file: " << output_path
                      << "\n";
            return 2;
        }
        os = &file;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen, *os);
        if (numbers_cmd->parsed()) return run_numbers(numbers, *os);
        return run_verify(verify, *os);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
