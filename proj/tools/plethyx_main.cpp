#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plethyx/closed_forms.hpp"
#include "plethyx/errors.hpp"
#include "plethyx/io.hpp"
#include "plethyx/plethysm.hpp"
#include "plethyx/schur.hpp"
#include "plethyx/tableaux.hpp"
#include "plethyx/verify.hpp"

namespace {

using namespace plethyx;

// methods disagreed with each other: an internal bug, not bad input
struct disagreement_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool json_mode(const std::string& format) {
    return format == "json";
}

void emit_value(const std::string& format, const BigInt& value) {
    if (json_mode(format)) {
        nlohmann::json v = value.fits_long_long() ? nlohmann::json(value.to_long_long())
                                                  : nlohmann::json(value.to_string());
        std::cout << nlohmann::json{{"value", v}}.dump() << "\n";
    } else {
        std::cout << value.to_string() << "\n";
    }
}

void emit_poly(const std::string& format, const SchurPoly& poly) {
    if (json_mode(format))
        std::cout << to_json(poly).dump() << "\n";
    else
        std::cout << to_text(poly) << "\n";
}

void emit_series(const std::string& format, const TruncatedSeries& series) {
    if (json_mode(format))
        std::cout << to_json(series).dump() << "\n";
    else
        std::cout << to_text(series) << "\n";
}

void emit_series(const std::string& format, const HPrefixedSeries& series) {
    if (json_mode(format))
        std::cout << to_json(series).dump() << "\n";
    else
        std::cout << to_text(series) << "\n";
}

int parse_int(const std::string& s, const char* what) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw parse_error(std::string("bad ") + what + ": " + s);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plethyx: exact symmetric-function computations in the Schur basis\n"
                 "(Littlewood-Richardson products, plethysm, Frobenius transforms,\n"
                 "restriction coefficients, and differential verification sweeps)"};
    app.require_subcommand(1);

    struct Cmd {
        std::string a0, a1, a2;
        std::string format = "text";
        std::string method;
        bool oracle = false;
        bool show_tableaux = false;
        int max_degree = -1;
        int max_mu = -1;
        int max_size = -1;
        int r_max = -1;
        int parallelism = 1;
        std::string suite;
    };

    auto add_format = [](CLI::App* cmd, std::shared_ptr<Cmd> st) {
        cmd->add_option("--format", st->format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_method = [](CLI::App* cmd, std::shared_ptr<Cmd> st, const std::string& values) {
        cmd->add_option("--method", st->method, "evaluation method [" + values + "]");
        cmd->add_flag("--oracle", st->oracle, "shorthand for --method oracle");
    };
    auto method_of = [](const Cmd& st) { return st.oracle ? std::string("oracle") : st.method; };

    int exit_code = 0;

    {
        auto st = std::make_shared<Cmd>();
        CLI::App* c = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^lambda_{mu,nu}");
        c->add_option("lambda", st->a0)->required();
        c->add_option("mu", st->a1)->required();
        c->add_option("nu", st->a2)->required();
        c->add_flag("--show-tableaux", st->show_tableaux, "list the LR tableaux");
        add_format(c, st);
        c->callback([st] {
            Partition lam = parse_partition(st->a0);
            Partition mu = parse_partition(st->a1);
            Partition nu = parse_partition(st->a2);
            long long v = lr_coefficient(lam, mu, nu);
            std::vector<LRTableau> tableaux;
            if (st->show_tableaux && v > 0)
                tableaux = enumerate_lr_tableaux(SkewShape(lam, mu), nu);
            if (json_mode(st->format)) {
                nlohmann::json j{{"value", v}};
                if (st->show_tableaux) {
                    j["tableaux"] = nlohmann::json::array();
                    for (const auto& t : tableaux) j["tableaux"].push_back(t.to_string());
                }
                std::cout << j.dump() << "\n";
            } else {
                std::cout << v << "\n";
                for (const auto& t : tableaux) std::cout << t.to_string() << "\n";
            }
        });
    }

    {
        auto st = std::make_shared<Cmd>();
        CLI::App* c = app.add_subcommand("pieri", "Pieri expansion h_r*s_mu or e_r*s_mu");
        c->add_option("kind", st->a0, "h or e")->required();
        c->add_option("r", st->a1)->required();
        c->add_option("mu", st->a2)->required();
        add_format(c, st);
        c->callback([st] {
            if (st->a0 != "h" && st->a0 != "e") throw parse_error("pieri kind must be h or e");
            int r = parse_int(st->a1, "r");
            if (r < 0) throw parse_error("pieri: r must be nonnegative");
            Partition mu = parse_partition(st->a2);
            emit_poly(st->format, st->a0 == "h" ? pieri_h(r, mu) : pieri_e(r, mu));
        });
    }

    {
        auto st = std::make_shared<Cmd>();
        CLI::App* c = app.add_subcommand("plethysm", "plethysm f[g] in the Schur basis");
        c->add_option("f", st->a0, "s:..., h:..., e:...")->required();
        c->add_option("g", st->a1, "s:..., h:..., e:...")->required();
        c->add_flag("--oracle", st->oracle,
                    "monomial-substitution oracle (PLETHYX_CAP bounds deg f * deg g)");
        add_format(c, st);
        c->callback([st] {
            SchurPoly f = to_schur(parse_basis_spec(st->a0));
            SchurPoly g = to_schur(parse_basis_spec(st->a1));
            emit_poly(st->format, st->oracle ? monomial_substitution_plethysm(f, g)
                                             : plethysm(f, g));
        });
    }

    {
        auto st = std::make_shared<Cmd>();
        st->method = "closed";
        CLI::App* c = app.add_subcommand("pleth-coeff", "<s_lambda, s_mu[h_r]>");
        c->add_option("lambda", st->a0)->required();
        c->add_option("mu", st->a1)->required();
        c->add_option("r", st->a2)->required();
        add_method(c, st, "closed|oracle");
        add_format(c, st);
        c->callback([st, method_of] {
            Partition lam = parse_partition(st->a0);
            Partition mu = parse_partition(st->a1);
            int r = parse_int(st->a2, "r");
            std::string method = method_of(*st);
            if (method == "closed") {
                emit_value(st->format, BigInt(plethysm_coeff_hr_closed(lam, mu, r)));
            } else if (method == "oracle") {
                if (r < 0) throw parse_error("pleth-coeff: r must be nonnegative");
                BigInt v = hall_inner(
                    SchurPoly::single(lam),
                    plethysm(SchurPoly::single(mu), SchurPoly::single(Partition({r}))));
                emit_value(st->format, v);
            } else {
                throw parse_error("pleth-coeff: --method must be closed or oracle");
            }
        });
    }

    {
        auto st = std::make_shared<Cmd>();
        st->method = "oracle";
        CLI::App* c = app.add_subcommand("adjoint", "plethysm adjoint f[g^perp]");
        c->add_option("f", st->a0)->required();
        c->add_option("g", st->a1)->required();
        add_method(c, st, "oracle|closed; closed needs f=s:..., g=h:r");
        c->add_option("--max-degree", st->max_degree, "series depth for the r = 0 case");
        add_format(c, st);
        c->callback([st, method_of] {
            std::string method = method_of(*st);
            BasisSpec fspec = parse_basis_spec(st->a0);
            BasisSpec gspec = parse_basis_spec(st->a1);
            if (method == "closed") {
                if (fspec.basis != 's' || gspec.basis != 'h' || gspec.index.size() != 1)
                    throw parse_error("adjoint --method closed needs f = s:... and g = h:r");
                Partition lam(fspec.index);
                int depth = st->max_degree >= 0 ? st->max_degree : std::max(lam.size(), 8);
                emit_series(st->format, s_hr_perp_closed(lam, gspec.index[0], depth));
            } else if (method == "oracle") {
                emit_poly(st->format, plethysm_adjoint(to_schur(fspec), to_schur(gspec)));
            } else {
                throw parse_error("adjoint: --method must be closed or oracle");
            }
        });
    }

    {
        auto st = std::make_shared<Cmd>();
        st->method = "closed";
        CLI::App* c = app.add_subcommand("frobenius", "Frobenius transform f[H^perp]");
        c->add_option("f", st->a0, "s:..., h:..., e:...")->required();
        add_method(c, st, "closed|oracle");
        c->add_option("--max-degree", st->max_degree, "expansion depth (default deg f + 3)");
        add_format(c, st);
        c->callback([st, method_of] {
            std::string method = method_of(*st);
            BasisSpec fspec = parse_basis_spec(st->a0);
            SchurPoly f = to_schur(fspec);
            int depth = st->max_degree >= 0 ? st->max_degree : f.max_degree() + 3;
            if (method == "closed") {
                HPrefixedSeries series;
                if (fspec.basis == 'h')
                    series = frobenius_h_closed(fspec.index, depth);
                else if (fspec.basis == 'e')
                    series = frobenius_e_closed(fspec.index, depth);
                else
                    series = frobenius_three_columns(Partition(fspec.index), depth);
                emit_series(st->format, series);
            } else if (method == "oracle") {
                emit_series(st->format, frobenius_oracle(f, depth));
            } else {
                throw parse_error("frobenius: --method must be closed or oracle");
            }
        });
    }

    {
        auto st = std::make_shared<Cmd>();
        st->method = "closed";
        CLI::App* c = app.add_subcommand("restriction", "restriction coefficient r_lambda^mu");
        c->add_option("lambda", st->a0)->required();
        c->add_option("mu", st->a1)->required();
        add_method(c, st, "closed|tuples|oracle|all");
        add_format(c, st);
        c->callback([st, method_of] {
            Partition lam = parse_partition(st->a0);
            Partition mu = parse_partition(st->a1);
            std::string method = method_of(*st);
            if (method == "all") {
                std::vector<std::pair<std::string, BigInt>> values;
                if (lam.part(0) <= 3) {
                    values.emplace_back("closed", restriction_via_main(lam, mu));
                    values.emplace_back("tuples", BigInt(count_restriction_tuples(lam, mu)));
                }
                values.emplace_back("oracle", restriction_oracle(lam, mu));
                if (json_mode(st->format)) {
                    nlohmann::json j;
                    for (const auto& [name, v] : values) j[name] = v.to_long_long();
                    std::cout << j.dump() << "\n";
                } else {
                    std::string line;
                    for (const auto& [name, v] : values) {
                        if (!line.empty()) line += ' ';
                        line += v.to_string();
                    }
                    std::cout << line << "\n";
                }
                for (const auto& [name, v] : values)
                    if (v != values.front().second)
                        throw disagreement_error("restriction methods disagree for lambda=[" +
                                                 lam.to_string() + "] mu=[" + mu.to_string() +
                                                 "]");
                return;
            }
            BigInt value;
            if (method == "closed")
                value = restriction_via_main(lam, mu);
            else if (method == "tuples")
                value = BigInt(count_restriction_tuples(lam, mu));
            else if (method == "oracle")
                value = restriction_oracle(lam, mu);
            else
                throw parse_error("restriction: --method must be closed, tuples, oracle or all");
            emit_value(st->format, value);
        });
    }

    {
        auto st = std::make_shared<Cmd>();
        st->method = "closed";
        CLI::App* c = app.add_subcommand("table", "table of r_lambda^mu over |mu| <= max-mu");
        c->add_option("lambda", st->a0)->required();
        c->add_option("--max-mu", st->max_mu, "largest |mu| (default 6)");
        add_method(c, st, "closed|oracle");
        add_format(c, st);
        c->callback([st, method_of] {
            Partition lam = parse_partition(st->a0);
            int max_mu = st->max_mu >= 0 ? st->max_mu : 6;
            std::string method = method_of(*st);
            SchurPoly rows;
            if (method == "closed") {
                rows = frobenius_three_columns(lam, max_mu).expanded(max_mu);
            } else if (method == "oracle") {
                for (int n = 0; n <= max_mu; ++n)
                    for (const Partition& mu : enumerate_partitions(n))
                        rows.add_term(mu, restriction_oracle(lam, mu));
            } else {
                throw parse_error("table: --method must be closed or oracle");
            }
            if (json_mode(st->format)) {
                nlohmann::json j{{"lambda", to_json(lam)}, {"rows", nlohmann::json::array()}};
                for (const auto& [mu, v] : rows.terms())
                    j["rows"].push_back({{"mu", to_json(mu)}, {"value", v.to_long_long()}});
                std::cout << j.dump() << "\n";
            } else {
                for (const auto& [mu, v] : rows.terms())
                    std::cout << bracketed(mu) << " " << v.to_string() << "\n";
            }
        });
    }

    {
        auto st = std::make_shared<Cmd>();
        CLI::App* c = app.add_subcommand("verify", "differential sweep against brute force");
        c->add_option("--suite", st->suite, "plethysm-hr|restriction|he-h-perp|f-he|ring")
            ->required();
        c->add_option("--max-size", st->max_size, "sweep size bound (per-suite default)");
        c->add_option("--r-max", st->r_max, "largest r (per-suite default)");
        c->add_option("--max-mu", st->max_mu, "restriction suite: largest |mu|");
        c->add_option("--parallelism", st->parallelism, "worker threads (default 1)");
        add_format(c, st);
        c->callback([st, &exit_code] {
            SweepReport report;
            if (st->suite == "plethysm-hr") {
                report = sweep_plethysm_hr(st->max_size >= 0 ? st->max_size : 8,
                                           st->r_max >= 0 ? st->r_max : 4, st->parallelism);
            } else if (st->suite == "restriction") {
                int max_lambda = st->max_size >= 0 ? st->max_size : 7;
                int max_mu = st->max_mu >= 0 ? st->max_mu : max_lambda;
                report = sweep_restriction(max_lambda, max_mu, st->parallelism);
            } else if (st->suite == "he-h-perp") {
                report = sweep_he_h_perp(st->max_size >= 0 ? st->max_size : 8, 3,
                                         st->r_max >= 0 ? st->r_max : 3, st->parallelism);
            } else if (st->suite == "f-he") {
                report = sweep_f_he(st->max_size >= 0 ? st->max_size : 6, 3, st->parallelism);
            } else if (st->suite == "ring") {
                report = sweep_ring(st->max_size >= 0 ? st->max_size : 8, st->parallelism);
            } else {
                throw parse_error("verify: --suite must be one of plethysm-hr, restriction, "
                                  "he-h-perp, f-he, ring");
            }
            if (json_mode(st->format)) {
                std::cout << to_json(report).dump() << "\n";
            } else {
                std::cout << "suite: " << report.suite << "\n";
                std::cout << "checked: " << report.checked << "\n";
                std::cout << "mismatches: " << report.mismatches.size() << "\n";
                for (const auto& m : report.mismatches)
                    std::cout << "  " << m.input << ": closed " << m.closed << " vs oracle "
                              << m.oracle << "\n";
                std::cout << "elapsed_ms: " << report.elapsed_ms << "\n";
            }
            exit_code = report.passed() ? 0 : 1;
        });
    }

    try {
        app.parse(argc, argv);
        return exit_code;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const scope_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const disagreement_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const integrality_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
