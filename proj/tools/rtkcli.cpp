// Command line front end: sequence transforms, Hankel transforms, continued
// fractions, Riordan array operations, matrix utilities, the bundled
// experiment runner and the OEIS b-file checker.
//
// Exit codes: 0 success, 1 mathematical mismatch, 2 usage/parse error,
// 3 environment trouble (network, cache).

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rtk/contfrac.hpp"
#include "rtk/experiments.hpp"
#include "rtk/fixtures.hpp"
#include "rtk/matrix.hpp"
#include "rtk/oeis.hpp"
#include "rtk/riordan.hpp"
#include "rtk/robbins.hpp"
#include "rtk/series.hpp"

using json = nlohmann::json;
using rtk::GaussianRational;
using G = GaussianRational;
using SG = rtk::Series<G>;
using MG = rtk::ExactMatrix<G>;

namespace {

struct Options {
    std::size_t order = 24;
    long depth = -1;
    std::string format = "text";
    bool online = false;
    std::string cache_dir;
};

// "num ; den" expands a rational gf; a bare comma list is taken literally.
SG parse_series(const std::string& text, std::size_t order) {
    if (text.find(';') != std::string::npos) return rtk::parse_gf<G>(text).expand(order);
    return SG(rtk::parse_scalar_list<G>(text));
}

std::vector<std::string> scalar_texts(const std::vector<G>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

std::string join(const std::vector<G>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += v[k].to_string();
    }
    return s;
}

void emit_sequence(const Options& opt, const std::string& command, const json& inputs,
                   const std::vector<G>& seq) {
    if (opt.format == "json") {
        json out{{"command", command}, {"inputs", inputs}, {"result", scalar_texts(seq)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << join(seq) << "\n"; // text and csv coincide for a flat list
    }
}

void emit_matrix(const Options& opt, const std::string& command, const json& inputs,
                 const MG& m) {
    if (opt.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
            rows.push_back(row);
        }
        json out{{"command", command}, {"inputs", inputs}, {"result", rows}};
        std::cout << out.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (j) std::cout << ",";
                std::cout << m(i, j).to_string();
            }
            std::cout << "\n";
        }
    }
}

// chain tokens: revert, logrevert, binomial:r, invert:r, alternate, sqrt,
// compose-scale:c
SG apply_chain(SG s, const std::vector<std::string>& chain) {
    for (const std::string& tok : chain) {
        std::string name = tok;
        std::string arg;
        std::size_t colon = tok.find(':');
        if (colon != std::string::npos) {
            name = tok.substr(0, colon);
            arg = tok.substr(colon + 1);
        }
        if (name == "revert")
            s = rtk::revert_transform(s);
        else if (name == "logrevert")
            s = rtk::log_revert_transform(s);
        else if (name == "alternate")
            s = rtk::alternate(s);
        else if (name == "sqrt")
            s = rtk::series_sqrt(s);
        else if (name == "binomial")
            s = rtk::binomial_transform(s, G::parse(arg));
        else if (name == "invert")
            s = rtk::invert_transform(s, G::parse(arg));
        else if (name == "compose-scale")
            s = rtk::compose_scale(s, G::parse(arg));
        else
            throw rtk::parse_error("unknown chain token '" + tok + "'");
    }
    return s;
}

// matrix literal: rows separated by '/' (or newlines), entries by commas
MG parse_matrix(const std::string& text) {
    std::vector<std::vector<G>> rows;
    std::string cur;
    auto flush = [&] {
        if (cur.find_first_not_of(" \t") == std::string::npos) return;
        rows.push_back(rtk::parse_scalar_list<G>(cur));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == '/' || ch == '\n')
            flush();
        else
            cur += ch;
    }
    flush();
    if (rows.empty()) throw rtk::parse_error("empty matrix literal");
    std::size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw rtk::parse_error("ragged matrix literal");
    MG m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

rtk::BivariatePoly<G> parse_grid(const std::string& text) {
    MG m = parse_matrix(text);
    rtk::BivariatePoly<G> g(m.rows(), std::vector<G>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
    return g;
}

rtk::RiordanKind parse_kind(const std::string& text) {
    if (text == "ordinary") return rtk::RiordanKind::ordinary;
    if (text == "exponential") return rtk::RiordanKind::exponential;
    throw rtk::parse_error("kind must be 'ordinary' or 'exponential'");
}

json report_json(const rtk::ExperimentReport& rep) {
    json mism = json::array();
    for (const auto& m : rep.mismatches)
        mism.push_back({{"where", m.where}, {"computed", m.computed}, {"expected", m.expected}});
    return json{{"name", rep.name},
                {"status", rtk::status_name(rep.status)},
                {"depth", rep.depth},
                {"conjecture", rep.conjecture},
                {"computed", rep.computed},
                {"expected", rep.expected},
                {"mismatches", mism},
                {"notes", rep.notes}};
}

void print_report(const rtk::ExperimentReport& rep, bool verbose) {
    std::printf("%-28s %s (depth %ld)\n", rep.name.c_str(),
                rtk::status_name(rep.status).c_str(), rep.depth);
    for (const auto& m : rep.mismatches)
        std::printf("  mismatch at %s: computed %s, expected %s\n", m.where.c_str(),
                    m.computed.c_str(), m.expected.c_str());
    for (const auto& n : rep.notes) std::printf("  note: %s\n", n.c_str());
    if (verbose)
        for (const auto& line : rep.computed) std::printf("  %s\n", line.c_str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sequence / Riordan array toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // let global flags appear after the subcommand too

    Options opt;
    app.add_option("--order", opt.order, "series working order")->capture_default_str();
    app.add_option("--depth", opt.depth, "Hankel / experiment depth");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--online", opt.online, "allow network access for OEIS fetches");
    app.add_option("--cache-dir", opt.cache_dir, "OEIS b-file cache directory");

    // series
    std::string series_input;
    std::vector<std::string> chain;
    auto* cmd_series = app.add_subcommand("series", "expand a gf and apply transforms");
    cmd_series->add_option("gf", series_input, "'num ; den' or a literal coefficient list")
        ->required();
    cmd_series->add_option("--chain", chain, "transforms applied left to right");

    // hankel
    std::string hankel_input;
    std::vector<std::string> hankel_chain;
    auto* cmd_hankel = app.add_subcommand("hankel", "Hankel transform of a sequence or gf");
    cmd_hankel->add_option("input", hankel_input, "'num ; den' or a literal coefficient list");
    cmd_hankel->add_option("--gf", hankel_input, "same as the positional input");
    cmd_hankel->add_option("--chain", hankel_chain, "transforms applied before the Hankel step");

    // cf
    std::string cf_input;
    bool cf_gamma = false;
    auto* cmd_cf = app.add_subcommand("cf", "continued fraction coefficients");
    cmd_cf->add_option("input", cf_input, "'num ; den' or a literal coefficient list")->required();
    cmd_cf->add_flag("--gamma", cf_gamma, "extract the gamma form instead of the Jacobi form");

    // riordan
    auto* cmd_riordan = app.add_subcommand("riordan", "Riordan array operations");
    cmd_riordan->require_subcommand(1);
    std::string rk = "ordinary";
    std::vector<std::string> rargs;
    std::size_t rrows = 8;
    auto add_rsub = [&](const char* name, const char* desc, std::size_t nargs,
                        bool kinded = true) {
        auto* sub = cmd_riordan->add_subcommand(name, desc);
        if (kinded)
            sub->add_option("kind", rk, "ordinary | exponential")
                ->check(CLI::IsMember({"ordinary", "exponential"}));
        sub->add_option("gf", rargs, "generating function arguments")
            ->required()
            ->expected(static_cast<int>(nargs));
        sub->add_option("--rows", rrows, "rows to materialize")->capture_default_str();
        return sub;
    };
    auto* r_build = add_rsub("build", "materialize the array (g, f)", 2);
    auto* r_inverse = add_rsub("inverse", "group inverse of (g, f)", 2);
    auto* r_mul = add_rsub("mul", "product (g1, f1) * (g2, f2)", 4);
    auto* r_vhalf = add_rsub("vhalf", "vertical half of (g, f)", 2);
    auto* r_symm = add_rsub("symmetrize", "symmetrization of the array (g, f)", 2);
    auto* r_amal = add_rsub("amalgamate", "amalgamation of (gA, fA) and (gB, fB)", 4);
    auto* r_invn = add_rsub("inversion", "inversion of the Bell matrix (g, xg)", 1, false);

    // minors
    std::string minors_matrix, minors_biv, minors_gf;
    std::size_t minors_size = 7;
    auto* cmd_minors = app.add_subcommand("minors", "principal minor sequence");
    cmd_minors->add_option("--matrix", minors_matrix, "matrix literal, rows '/'-separated");
    cmd_minors->add_option("--bivariate", minors_biv,
                           "'numgrid ; dengrid', grids with '/'-separated rows");
    cmd_minors->add_option("--gf", minors_gf,
                           "series G; minors of the (x-y)/(xG(x)-yG(y)) matrix");
    cmd_minors->add_option("--size", minors_size, "matrix size for gf inputs")
        ->capture_default_str();

    // matpow
    std::string mp_matrix;
    std::size_t mp_i = 0, mp_j = 0, mp_count = 12;
    auto* cmd_matpow = app.add_subcommand("matpow", "entry (i,j) of successive matrix powers");
    cmd_matpow->add_option("matrix", mp_matrix, "matrix literal, rows '/'-separated")->required();
    cmd_matpow->add_option("i", mp_i, "row index")->required();
    cmd_matpow->add_option("j", mp_j, "column index")->required();
    cmd_matpow->add_option("--count", mp_count, "number of powers, starting at the identity")
        ->capture_default_str();

    // paper
    std::vector<std::string> paper_names;
    bool paper_verbose = false;
    auto* cmd_paper = app.add_subcommand("paper", "run the bundled experiments");
    cmd_paper->add_option("names", paper_names, "experiment names, or 'all'");
    cmd_paper->add_flag("--verbose", paper_verbose, "print the headline values too");

    // oeis
    auto* cmd_oeis = app.add_subcommand("oeis", "check or fetch OEIS b-files");
    cmd_oeis->require_subcommand(1);
    std::string oeis_id;
    auto* o_check = cmd_oeis->add_subcommand("check", "compare a bundled fixture to its b-file");
    o_check->add_option("id", oeis_id, "A-number")->required();
    auto* o_fetch = cmd_oeis->add_subcommand("fetch", "print b-file terms (cache or network)");
    o_fetch->add_option("id", oeis_id, "A-number")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_series) {
            SG s = apply_chain(parse_series(series_input, opt.order), chain);
            emit_sequence(opt, "series", {{"gf", series_input}, {"chain", chain}}, s.coeffs());
        } else if (*cmd_hankel) {
            if (hankel_input.empty()) throw rtk::parse_error("hankel needs an input sequence or gf");
            SG s = apply_chain(parse_series(hankel_input, opt.order), hankel_chain);
            std::vector<G> h;
            if (opt.depth >= 0) {
                for (long n = 0; n <= opt.depth; ++n)
                    h.push_back(rtk::hankel_matrix(s.coeffs(), n + 1).determinant());
            } else {
                h = rtk::hankel_transform(s);
            }
            emit_sequence(opt, "hankel", {{"input", hankel_input}, {"chain", hankel_chain}}, h);
        } else if (*cmd_cf) {
            SG s = parse_series(cf_input, opt.order);
            if (cf_gamma) {
                auto gf = rtk::gamma_extract(s);
                if (opt.format == "json") {
                    json out{{"command", "cf"},
                             {"inputs", {{"input", cf_input}, {"form", "gamma"}}},
                             {"result",
                              {{"mu0", gf.mu0.to_string()},
                               {"gammas", scalar_texts(gf.gammas)},
                               {"terminated", gf.terminated}}}};
                    std::cout << out.dump() << "\n";
                } else {
                    std::cout << gf.to_string() << (gf.terminated ? " (terminated)" : "") << "\n";
                }
            } else {
                auto jf = rtk::jfraction_extract(s);
                if (opt.format == "json") {
                    json out{{"command", "cf"},
                             {"inputs", {{"input", cf_input}, {"form", "jacobi"}}},
                             {"result",
                              {{"mu0", jf.mu0.to_string()},
                               {"alphas", scalar_texts(jf.alphas)},
                               {"betas", scalar_texts(jf.betas)},
                               {"terminated", jf.terminated}}}};
                    std::cout << out.dump() << "\n";
                } else {
                    std::cout << jf.to_string() << (jf.terminated ? " (terminated)" : "") << "\n";
                }
            }
        } else if (*cmd_riordan) {
            std::size_t order = opt.order < rrows + 2 ? rrows + 2 : opt.order;
            auto spec_at = [&](std::size_t k) {
                return rtk::RiordanSpec<G>(parse_series(rargs[k], order),
                                           parse_series(rargs[k + 1], order), parse_kind(rk));
            };
            json inputs{{"kind", rk}, {"args", rargs}, {"rows", rrows}};
            if (*r_build) {
                emit_matrix(opt, "riordan build", inputs, riordan_matrix(spec_at(0), rrows));
            } else if (*r_inverse) {
                auto inv = rtk::riordan_inverse(spec_at(0));
                if (opt.format == "json") {
                    json out{{"command", "riordan inverse"},
                             {"inputs", inputs},
                             {"result",
                              {{"g", scalar_texts(inv.g.coeffs())},
                               {"f", scalar_texts(inv.f.coeffs())}}}};
                    std::cout << out.dump() << "\n";
                } else {
                    std::cout << "g: " << join(inv.g.coeffs()) << "\n";
                    std::cout << "f: " << join(inv.f.coeffs()) << "\n";
                }
            } else if (*r_mul) {
                auto prod = rtk::riordan_mul(spec_at(0), spec_at(2));
                if (opt.format == "json") {
                    json out{{"command", "riordan mul"},
                             {"inputs", inputs},
                             {"result",
                              {{"g", scalar_texts(prod.g.coeffs())},
                               {"f", scalar_texts(prod.f.coeffs())}}}};
                    std::cout << out.dump() << "\n";
                } else {
                    std::cout << "g: " << join(prod.g.coeffs()) << "\n";
                    std::cout << "f: " << join(prod.f.coeffs()) << "\n";
                }
            } else if (*r_vhalf) {
                emit_matrix(opt, "riordan vhalf", inputs,
                            riordan_matrix(rtk::vertical_half(spec_at(0)), rrows));
            } else if (*r_symm) {
                emit_matrix(opt, "riordan symmetrize", inputs,
                            rtk::symmetrize(riordan_matrix(spec_at(0), rrows)));
            } else if (*r_amal) {
                emit_matrix(opt, "riordan amalgamate", inputs,
                            rtk::amalgamate(riordan_matrix(spec_at(0), rrows),
                                            riordan_matrix(spec_at(2), rrows)));
            } else if (*r_invn) {
                emit_matrix(opt, "riordan inversion", inputs,
                            rtk::bell_inversion(parse_series(rargs[0], order), rrows));
            }
        } else if (*cmd_minors) {
            MG m;
            json inputs;
            if (!minors_matrix.empty()) {
                m = parse_matrix(minors_matrix);
                inputs["matrix"] = minors_matrix;
            } else if (!minors_biv.empty()) {
                std::size_t semi = minors_biv.find(';');
                if (semi == std::string::npos)
                    throw rtk::parse_error("expected 'numgrid ; dengrid'");
                m = rtk::expand_bivariate(parse_grid(minors_biv.substr(0, semi)),
                                          parse_grid(minors_biv.substr(semi + 1)), minors_size,
                                          minors_size);
                inputs["bivariate"] = minors_biv;
            } else if (!minors_gf.empty()) {
                SG g = parse_series(minors_gf, 2 * minors_size + 1);
                m = rtk::hankel_gf_matrix(g, minors_size);
                inputs["gf"] = minors_gf;
            } else {
                throw rtk::parse_error("minors needs --matrix, --bivariate or --gf");
            }
            std::size_t n = m.rows() < m.cols() ? m.rows() : m.cols();
            emit_sequence(opt, "minors", inputs, m.principal_minors(n));
        } else if (*cmd_matpow) {
            MG m = parse_matrix(mp_matrix);
            emit_sequence(opt, "matpow",
                          {{"matrix", mp_matrix}, {"i", mp_i}, {"j", mp_j}, {"count", mp_count}},
                          rtk::matrix_power_entries(m, mp_i, mp_j, mp_count));
        } else if (*cmd_paper) {
            std::vector<std::string> names = paper_names;
            if (names.empty() || (names.size() == 1 && names[0] == "all"))
                names = rtk::experiment_names();
            bool bad = false;
            json reports = json::array();
            for (const std::string& name : names) {
                auto rep = rtk::run_experiment(name, opt.depth);
                if (rep.status == rtk::ExperimentStatus::FAIL ||
                    rep.status == rtk::ExperimentStatus::ERROR)
                    bad = true;
                if (opt.format == "json")
                    reports.push_back(report_json(rep));
                else
                    print_report(rep, paper_verbose);
            }
            if (opt.format == "json")
                std::cout << json{{"command", "paper"}, {"result", reports}}.dump() << "\n";
            return bad ? 1 : 0;
        } else if (*cmd_oeis) {
            rtk::OeisOptions oo;
            oo.online = opt.online;
            oo.cache_dir = opt.cache_dir;
            if (*o_check) {
                std::size_t n = rtk::oeis_check(oeis_id, oo);
                if (opt.format == "json")
                    std::cout << json{{"command", "oeis check"},
                                      {"inputs", {{"id", oeis_id}}},
                                      {"result", {{"status", "PASS"}, {"terms", n}}}}
                                     .dump()
                              << "\n";
                else
                    std::cout << "PASS (" << n << " terms)\n";
            } else {
                auto terms = rtk::oeis_terms(oeis_id, oo);
                std::vector<G> out;
                for (const auto& t : terms) out.emplace_back(t);
                emit_sequence(opt, "oeis fetch", {{"id", oeis_id}}, out);
            }
        }
    } catch (const rtk::network_disabled& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const rtk::network_failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const rtk::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rtk::unknown_experiment& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rtk::unknown_sequence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rtk::rtk_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
