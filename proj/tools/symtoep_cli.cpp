// Command-line front end: build operator sections from symbol files, run the
// certifier suites, and emit deterministic JSON (fixed key order, 17
// significant digits). Exit 0 when every check passed, 1 on a failed check,
// 2 on parse or configuration errors.

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "symtoep/analysis.hpp"
#include "symtoep/json_io.hpp"
#include "symtoep/lattice.hpp"
#include "symtoep/operators.hpp"
#include "symtoep/spaces.hpp"
#include "symtoep/symbols.hpp"

namespace {

using namespace symtoep;

int max_window_size() {
    const char* env = std::getenv("SYMTOEP_MAX_D");
    if (env == nullptr || *env == '\0') return 256;
    const std::string text(env);
    std::size_t pos = 0;
    const int value = std::stoi(text, &pos);
    if (pos != text.size() || value < 1)
        throw std::invalid_argument("invalid SYMTOEP_MAX_D value: " + text);
    return value;
}

void check_cap(int D) {
    if (D < 1) throw std::invalid_argument("D must be at least 1");
    if (D > max_window_size())
        throw std::invalid_argument("D exceeds the SYMTOEP_MAX_D cap");
}

// "re" or "re,im"
Complex parse_complex(const std::string& text) {
    std::size_t pos = 0;
    const double re = std::stod(text, &pos);
    if (pos == text.size()) return {re, 0.0};
    if (text[pos] != ',')
        throw std::invalid_argument("cannot parse complex value: " + text);
    const std::string rest = text.substr(pos + 1);
    std::size_t rest_pos = 0;
    const double im = std::stod(rest, &rest_pos);
    if (rest_pos != rest.size())
        throw std::invalid_argument("cannot parse complex value: " + text);
    return {re, im};
}

std::string complex_json(Complex z) {
    return "[" + format_double(z.real()) + "," + format_double(z.imag()) + "]";
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-")
        std::cout << text << "\n";
    else
        write_file(output, text);
}

FourierSymbol load_symbol(const std::string& path) {
    return parse_symbol(read_file(path));
}

OperatorMatrix to_operator(const ParsedMatrix& pm, const std::string& fallback) {
    if (!pm.rows || !pm.cols)
        throw std::invalid_argument("matrix file must carry rows/cols windows");
    if (pm.rows->a_max > max_window_size() || pm.cols->a_max > max_window_size())
        throw std::invalid_argument("matrix window exceeds the SYMTOEP_MAX_D cap");
    OperatorMatrix A;
    A.rows = *pm.rows;
    A.cols = *pm.cols;
    A.entries = pm.entries;
    A.label = pm.label.empty() ? fallback : pm.label;
    return A;
}

int resolve_margin(int margin, const FourierSymbol& f) {
    return margin >= 0 ? margin : f.bandwidth() + 1;
}

int finish_report(const CheckReport& rep, const std::string& output) {
    emit(to_json(rep), output);
    std::cerr << rep.name << ": " << (rep.passed ? "PASS" : "FAIL")
              << " (residual " << rep.residual << ", tolerance " << rep.tolerance
              << ")\n";
    return rep.passed ? 0 : 1;
}

int finish_matrix(const OperatorMatrix& A, const std::string& output) {
    emit(to_json(A), output);
    std::cerr << A.label << ": " << A.entries.rows() << "x" << A.entries.cols()
              << " section written\n";
    return 0;
}

double detail_named(const CheckReport& rep, const std::string& name) {
    for (const auto& d : rep.details)
        if (d.name == name) return d.residual;
    throw std::runtime_error("missing sub-check: " + name);
}

CheckReport assemble(std::string name, double tol,
                     std::optional<IndexWindow> window, std::vector<SubCheck> details) {
    CheckReport rep;
    rep.name = std::move(name);
    rep.tolerance = tol;
    rep.window_used = window;
    rep.details = std::move(details);
    rep.passed = true;
    for (const auto& d : rep.details) {
        if (!(d.residual <= tol)) rep.passed = false;
        if (d.residual > rep.residual) rep.residual = d.residual;
    }
    return rep;
}

int finish_demo(const std::string& token, const std::string& source,
                const CheckReport& rep, const std::string& output) {
    const std::string text = "{\"demo\":\"" + json_escape(token) +
                             "\",\"source\":\"" + json_escape(source) +
                             "\",\"report\":" + to_json(rep) + "}";
    emit(text, output);
    std::cerr << "demo " << token << ": " << (rep.passed ? "PASS" : "FAIL") << "\n";
    return rep.passed ? 0 : 1;
}

int run_demo_coburn(int D, const std::string& output) {
    check_cap(D);
    FourierSymbol::CoeffMap coeffs;
    coeffs[{2, -2}] = 1.0;
    coeffs[{-2, 2}] = 1.0;
    const OperatorMatrix T =
        build_toeplitz(FourierSymbol::from_coefficients(std::move(coeffs)), D);
    const auto pos = static_cast<Eigen::Index>(T.cols.position({1, 0}));
    const CheckReport rep = assemble(
        "demo_coburn_failure", 1e-12, T.rows,
        {{"T_phi_kills_lowest_vector", T.entries.col(pos).norm()},
         {"T_phi_star_kills_lowest_vector", T.entries.row(pos).norm()}});
    return finish_demo(
        "coburn",
        "symmetric symbol with frequencies (2,-2) and (-2,2): the Toeplitz "
        "section and its adjoint both annihilate the lowest basis vector, so "
        "kernel and cokernel are simultaneously nontrivial",
        rep, output);
}

int run_demo_example29(int D, const std::string& output) {
    check_cap(D);
    const CheckReport inner = check_brown_halmos(build_X(D), 2);
    const CheckReport rep = assemble(
        "demo_shift_relations", 1e-9, inner.window_used,
        {{"second_relation", detail_named(inner, "second_relation")},
         {"first_relation_deviation_from_unit",
          std::abs(detail_named(inner, "first_relation") - 1.0)}});
    return finish_demo(
        "example29",
        "the degree-raising shift X satisfies the second structural relation "
        "exactly but misses the first by a unit-size discrepancy, so it is not "
        "a Toeplitz section",
        rep, output);
}

int run_demo_remark36(int D, const std::string& output) {
    check_cap(D);
    const CheckReport inner =
        check_asymptotic_toeplitz(build_X(D), FourierSymbol::s(), D, 1e-6);
    const CheckReport rep = assemble(
        "demo_shift_not_asymptotically_toeplitz", 1e-9, inner.window_used,
        {{"expected_failure", inner.passed ? 1.0 : 0.0},
         {"eta_remainder_tail_deviation_from_unit",
          std::abs(detail_named(inner, "eta_remainder_tail") - 1.0)}});
    return finish_demo(
        "remark36",
        "the shift X stays at unit distance from the Toeplitz section of its "
        "closest symbol at every compression scale, so it is not asymptotically "
        "Toeplitz",
        rep, output);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toeplitz-type operator sections on the anti-symmetric lattice"};
    app.require_subcommand(1);

    std::function<int()> action;

    std::string symbol_path;
    std::string matrix_path;
    std::string pair_path;
    std::string output = "-";
    std::string kind = "unitary";
    std::string s1, p1, s2, p2, s, p;
    int D = 16;
    int margin = -1;  // sentinel: bandwidth + 1
    int beta = 0;
    double tolerance = 1e-10;
    double point_tolerance = 1e-9;
    int demo_coburn_D = 12;
    int demo_example29_D = 12;
    int demo_remark36_D = 24;

    const auto add_output = [&](CLI::App* sc) {
        sc->add_option("--output,-o", output, "output path, - for stdout");
    };

    const auto add_build = [&](const std::string& name, const std::string& desc,
                               OperatorMatrix (*builder)(const FourierSymbol&, int)) {
        auto* sc = app.add_subcommand(name, desc);
        sc->add_option("--symbol", symbol_path, "symbol JSON file")->required();
        sc->add_option("--D", D, "window size parameter");
        add_output(sc);
        sc->callback([&, builder] {
            action = [&, builder]() -> int {
                check_cap(D);
                return finish_matrix(builder(load_symbol(symbol_path), D), output);
            };
        });
    };

    add_build("build-toeplitz", "Toeplitz section on the hardy window", &build_toeplitz);
    add_build("build-laurent", "multiplication section on the full window",
              +[](const FourierSymbol& f, int window_D) {
                  return build_laurent(f, IndexWindow::full(window_D));
              });
    add_build("build-hankel", "Hankel section (co-hardy rows, hardy columns)",
              &build_hankel);
    add_build("build-dual", "dual Toeplitz section on the co-hardy window",
              &build_dual_toeplitz);

    {
        auto* sc = app.add_subcommand("check-bh",
                                      "Brown-Halmos relations for a Toeplitz section");
        sc->add_option("--symbol", symbol_path, "symbol JSON file")->required();
        sc->add_option("--D", D, "window size parameter");
        sc->add_option("--margin", margin, "safe sub-window margin (default bandwidth+1)")
            ->check(CLI::NonNegativeNumber);
        sc->add_option("--tolerance", tolerance, "pass threshold");
        add_output(sc);
        sc->callback([&] {
            action = [&]() -> int {
                check_cap(D);
                const FourierSymbol f = load_symbol(symbol_path);
                return finish_report(check_brown_halmos(build_toeplitz(f, D),
                                                        resolve_margin(margin, f),
                                                        tolerance),
                                     output);
            };
        });
    }

    {
        auto* sc = app.add_subcommand("recover-symbol",
                                      "read the symbol back off a Toeplitz section");
        sc->add_option("--matrix", matrix_path, "matrix JSON file with windows")->required();
        sc->add_option("--beta", beta, "symbol bandwidth")
            ->required()
            ->check(CLI::NonNegativeNumber);
        add_output(sc);
        sc->callback([&] {
            action = [&]() -> int {
                const OperatorMatrix A =
                    to_operator(parse_matrix(read_file(matrix_path)), "matrix");
                const FourierSymbol g = recover_symbol(A, beta);
                emit(to_json(g), output);
                std::cerr << "recovered " << g.coefficients().size()
                          << " coefficients\n";
                return 0;
            };
        });
    }

    {
        auto* sc = app.add_subcommand(
            "check-analytic", "agreement of the four analyticity characterizations");
        sc->add_option("--symbol", symbol_path, "symbol JSON file")->required();
        sc->add_option("--D", D, "window size parameter");
        add_output(sc);
        sc->callback([&] {
            action = [&]() -> int {
                check_cap(D);
                return finish_report(
                    check_analyticity_equivalences(load_symbol(symbol_path), D), output);
            };
        });
    }

    {
        auto* sc = app.add_subcommand("certify-gamma",
                                      "certify a matrix pair as a Gamma-unitary or "
                                      "Gamma-isometry");
        sc->add_option("--pair", pair_path, "JSON file {\"T\":matrix,\"V\":matrix}")
            ->required();
        sc->add_option("--kind", kind, "unitary or isometry")
            ->check(CLI::IsMember({"unitary", "isometry"}));
        sc->add_option("--margin", margin,
                       "compress residuals to the exact sub-window (isometry only)")
            ->check(CLI::NonNegativeNumber);
        sc->add_option("--tolerance", tolerance, "pass threshold");
        add_output(sc);
        sc->callback([&] {
            action = [&]() -> int {
                const auto [first, second] = parse_matrix_pair(read_file(pair_path));
                if (kind == "unitary") {
                    if (margin >= 0)
                        throw std::invalid_argument(
                            "--margin applies to --kind isometry only");
                    return finish_report(
                        certify_gamma_unitary({first.entries, second.entries}, tolerance),
                        output);
                }
                if (margin >= 0)
                    return finish_report(
                        certify_gamma_isometry_windowed(to_operator(first, "T"),
                                                        to_operator(second, "V"), margin,
                                                        tolerance),
                        output);
                return finish_report(
                    certify_gamma_isometry({first.entries, second.entries}, tolerance),
                    output);
            };
        });
    }

    {
        auto* sc = app.add_subcommand("compact-profile",
                                      "eta compactness profile of a section");
        sc->add_option("--symbol", symbol_path, "symbol JSON file (builds a Toeplitz section)");
        sc->add_option("--matrix", matrix_path, "matrix JSON file with windows");
        sc->add_option("--D", D, "window size parameter (with --symbol)");
        add_output(sc);
        sc->callback([&] {
            action = [&]() -> int {
                if (symbol_path.empty() == matrix_path.empty())
                    throw std::invalid_argument(
                        "provide exactly one of --symbol or --matrix");
                OperatorMatrix T;
                if (!symbol_path.empty()) {
                    check_cap(D);
                    T = build_toeplitz(load_symbol(symbol_path), D);
                } else {
                    T = to_operator(parse_matrix(read_file(matrix_path)), "matrix");
                }
                const auto profile = compactness_profile(T);
                std::string text = "{\"label\":\"" + json_escape(T.label) +
                                   "\",\"D\":" + std::to_string(T.rows.a_max) +
                                   ",\"profile\":[";
                bool first = true;
                for (const auto& [n, value] : profile) {
                    if (!first) text += ",";
                    first = false;
                    text += "{\"n\":" + std::to_string(n) +
                            ",\"eta\":" + format_double(value) + "}";
                }
                emit(text + "]}", output);
                std::cerr << "profile over " << profile.size() << " scales\n";
                return 0;
            };
        });
    }

    {
        auto* sc = app.add_subcommand(
            "asymptotic-check", "decay profiles against the Toeplitz section of a symbol");
        sc->add_option("--symbol", symbol_path, "candidate symbol JSON file")->required();
        sc->add_option("--matrix", matrix_path,
                       "matrix JSON file (default: the symbol's own Toeplitz section)");
        sc->add_option("--D", D, "window size parameter");
        sc->add_option("--tolerance", tolerance, "pass threshold");
        add_output(sc);
        sc->callback([&, sc] {
            action = [&, sc]() -> int {
                const FourierSymbol f = load_symbol(symbol_path);
                OperatorMatrix T;
                if (matrix_path.empty()) {
                    check_cap(D);
                    T = build_toeplitz(f, D);
                } else {
                    T = to_operator(parse_matrix(read_file(matrix_path)), "matrix");
                    if (sc->count("--D") > 0 && D != T.rows.a_max)
                        throw std::invalid_argument("--D conflicts with the matrix window");
                }
                return finish_report(
                    check_asymptotic_toeplitz(T, f, T.rows.a_max, tolerance), output);
            };
        });
    }

    {
        auto* sc = app.add_subcommand("check-dual-bh",
                                      "Brown-Halmos relations for a dual Toeplitz section");
        sc->add_option("--symbol", symbol_path, "symbol JSON file")->required();
        sc->add_option("--D", D, "window size parameter");
        sc->add_option("--margin", margin, "exact sub-window margin (default bandwidth+1)")
            ->check(CLI::NonNegativeNumber);
        sc->add_option("--tolerance", tolerance, "pass threshold");
        add_output(sc);
        sc->callback([&] {
            action = [&]() -> int {
                check_cap(D);
                const FourierSymbol f = load_symbol(symbol_path);
                return finish_report(
                    check_dual_toeplitz_bh(build_dual_toeplitz(f, D),
                                           resolve_margin(margin, f), tolerance),
                    output);
            };
        });
    }

    {
        auto* sc = app.add_subcommand("fundamental-check",
                                      "the identity T_s* - T_s T_p* = Q X* Q");
        sc->add_option("--D", D, "window size parameter");
        sc->add_option("--tolerance", tolerance, "pass threshold");
        add_output(sc);
        sc->callback([&] {
            action = [&]() -> int {
                check_cap(D);
                return finish_report(check_fundamental_operator(D, tolerance), output);
            };
        });
    }

    {
        auto* sz = app.add_subcommand("szego", "reproducing kernel utilities");
        sz->require_subcommand(1);
        {
            auto* sc = sz->add_subcommand("evaluate", "closed-form kernel value");
            sc->add_option("--s1", s1, "first point s, as re[,im]")->required();
            sc->add_option("--p1", p1, "first point p")->required();
            sc->add_option("--s2", s2, "second point s")->required();
            sc->add_option("--p2", p2, "second point p")->required();
            add_output(sc);
            sc->callback([&] {
                action = [&]() -> int {
                    const GammaPoint w1{parse_complex(s1), parse_complex(p1)};
                    const GammaPoint w2{parse_complex(s2), parse_complex(p2)};
                    const Complex value = szego_eval(w1, w2);
                    emit("{\"s1\":" + complex_json(w1.s) + ",\"p1\":" + complex_json(w1.p) +
                             ",\"s2\":" + complex_json(w2.s) +
                             ",\"p2\":" + complex_json(w2.p) +
                             ",\"value\":" + complex_json(value) + "}",
                         output);
                    std::cerr << "kernel value (" << value.real() << ", " << value.imag()
                              << ")\n";
                    return 0;
                };
            });
        }
        {
            auto* sc = sz->add_subcommand("partial-sum", "basis expansion partial sum");
            sc->add_option("--s1", s1, "first point s, as re[,im]")->required();
            sc->add_option("--p1", p1, "first point p")->required();
            sc->add_option("--s2", s2, "second point s")->required();
            sc->add_option("--p2", p2, "second point p")->required();
            sc->add_option("--D", D, "window size parameter");
            add_output(sc);
            sc->callback([&] {
                action = [&]() -> int {
                    check_cap(D);
                    const GammaPoint w1{parse_complex(s1), parse_complex(p1)};
                    const GammaPoint w2{parse_complex(s2), parse_complex(p2)};
                    const Complex value = szego_partial_sum(w1, w2, D);
                    emit("{\"s1\":" + complex_json(w1.s) + ",\"p1\":" + complex_json(w1.p) +
                             ",\"s2\":" + complex_json(w2.s) +
                             ",\"p2\":" + complex_json(w2.p) + ",\"D\":" +
                             std::to_string(D) + ",\"value\":" + complex_json(value) + "}",
                         output);
                    std::cerr << "partial sum (" << value.real() << ", " << value.imag()
                              << ")\n";
                    return 0;
                };
            });
        }
        {
            auto* sc = sz->add_subcommand("eigen-residual",
                                          "joint eigenvector residuals of the kernel");
            sc->add_option("--s", s, "point s, as re[,im]")->required();
            sc->add_option("--p", p, "point p")->required();
            sc->add_option("--D", D, "window size parameter");
            add_output(sc);
            sc->callback([&] {
                action = [&]() -> int {
                    check_cap(D);
                    const GammaPoint w{parse_complex(s), parse_complex(p)};
                    const auto [rs, rp] = joint_eigen_residual(w, D);
                    emit("{\"s\":" + complex_json(w.s) + ",\"p\":" + complex_json(w.p) +
                             ",\"D\":" + std::to_string(D) +
                             ",\"s_residual\":" + format_double(rs) +
                             ",\"p_residual\":" + format_double(rp) + "}",
                         output);
                    std::cerr << "residuals " << rs << " " << rp << "\n";
                    return 0;
                };
            });
        }
    }

    {
        auto* sc = app.add_subcommand("classify-point",
                                      "locate a point relative to the symmetrized bidisc");
        sc->add_option("--s", s, "point s, as re[,im]")->required();
        sc->add_option("--p", p, "point p")->required();
        sc->add_option("--tolerance", point_tolerance, "classification tolerance");
        add_output(sc);
        sc->callback([&] {
            action = [&]() -> int {
                const GammaPoint pt{parse_complex(s), parse_complex(p)};
                const PointClass cls = classify_point(pt, point_tolerance);
                emit("{\"s\":" + complex_json(pt.s) + ",\"p\":" + complex_json(pt.p) +
                         ",\"tolerance\":" + format_double(point_tolerance) +
                         ",\"class\":\"" + to_string(cls) + "\"}",
                     output);
                std::cerr << "class " << to_string(cls) << "\n";
                return 0;
            };
        });
    }

    {
        auto* dm = app.add_subcommand("demo", "named worked examples");
        dm->require_subcommand(1);
        {
            auto* sc = dm->add_subcommand("coburn",
                                          "a Toeplitz section whose kernel and cokernel "
                                          "are both nontrivial");
            sc->add_option("--D", demo_coburn_D, "window size parameter");
            add_output(sc);
            sc->callback([&] {
                action = [&]() -> int { return run_demo_coburn(demo_coburn_D, output); };
            });
        }
        {
            auto* sc = dm->add_subcommand(
                "example29", "the shift X fails exactly one Brown-Halmos relation");
            sc->add_option("--D", demo_example29_D, "window size parameter");
            add_output(sc);
            sc->callback([&] {
                action = [&]() -> int {
                    return run_demo_example29(demo_example29_D, output);
                };
            });
        }
        {
            auto* sc = dm->add_subcommand(
                "remark36", "the shift X is not asymptotically Toeplitz");
            sc->add_option("--D", demo_remark36_D, "window size parameter");
            add_output(sc);
            sc->callback([&] {
                action = [&]() -> int {
                    return run_demo_remark36(demo_remark36_D, output);
                };
            });
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
