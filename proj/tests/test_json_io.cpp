#include <doctest.h>

#include <random>
#include <stdexcept>

#include "symtoep/analysis.hpp"
#include "symtoep/json_io.hpp"
#include "symtoep/operators.hpp"

using namespace symtoep;

TEST_CASE("float formatting survives a round trip and rejects non-finite") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-0.0) == "-0");
    CHECK_THROWS_AS(format_double(std::numeric_limits<double>::infinity()),
                    std::runtime_error);
    CHECK_THROWS_AS(format_double(std::nan("")), std::runtime_error);
}

TEST_CASE("string escaping covers quotes and control characters") {
    CHECK(json_escape("plain") == "plain");
    CHECK(json_escape("a\"b\\c\nd") == "a\\\"b\\\\c\\nd");
    CHECK(json_escape(std::string(1, '\x01')) == "\\u0001");
}

TEST_CASE("symbols round trip through json exactly") {
    std::mt19937 rng(808);
    std::uniform_real_distribution<double> real(-2.0, 2.0);
    FourierSymbol::CoeffMap coeffs;
    for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= m; ++n) {
            const Complex value{real(rng), real(rng)};
            coeffs[{m, n}] = value;
            coeffs[{n, m}] = value;
        }
    const FourierSymbol f = FourierSymbol::from_coefficients(std::move(coeffs));
    CHECK(parse_symbol(to_json(f)) == f);
}

TEST_CASE("symmetrize mirrors once-listed pairs and averages doubled ones") {
    const FourierSymbol mirrored = parse_symbol(
        R"({"format":"fourier","symmetrize":true,"coefficients":[{"m":1,"n":0,"re":1}]})");
    CHECK(mirrored.at(1, 0) == Complex{1.0});
    CHECK(mirrored.at(0, 1) == Complex{1.0});

    const FourierSymbol averaged = parse_symbol(
        R"({"format":"fourier","symmetrize":true,"coefficients":[)"
        R"({"m":1,"n":0,"re":2},{"m":0,"n":1,"re":0}]})");
    CHECK(averaged.at(1, 0) == Complex{1.0});
    CHECK(averaged.at(0, 1) == Complex{1.0});

    CHECK_THROWS_AS(
        parse_symbol(
            R"({"format":"fourier","coefficients":[{"m":1,"n":0,"re":1}]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(parse_symbol(R"({"format":"wavelet","coefficients":[]})"),
                    std::invalid_argument);
}

TEST_CASE("sp-poly symbol files expand before building") {
    const FourierSymbol f = parse_symbol(
        R"({"format":"sp-poly","terms":[{"s":1,"p":0,"sbar":1,"pbar":0,"re":1}]})");
    CHECK(f == sp_to_fourier(SPPoly::s() * SPPoly::s_bar()));
}

TEST_CASE("matrices round trip with their windows") {
    const OperatorMatrix A = build_toeplitz(FourierSymbol::s(), 6);
    const ParsedMatrix pm = parse_matrix(to_json(A));
    REQUIRE(pm.rows.has_value());
    CHECK(*pm.rows == A.rows);
    CHECK(*pm.cols == A.cols);
    CHECK(pm.label == "toeplitz");
    CHECK((pm.entries - A.entries).cwiseAbs().maxCoeff() == 0.0);

    const ParsedMatrix square =
        parse_matrix(R"({"dim":2,"entries":[[1,0],[0,0],[0,0],[1,0]]})");
    CHECK_FALSE(square.rows.has_value());
    CHECK(square.entries.isIdentity(0.0));

    CHECK_THROWS_AS(parse_matrix(R"({"dim":2,"entries":[[1,0]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        parse_matrix(
            R"({"rows":{"b_min":0,"b_max":3,"a_max":2},)"
            R"("cols":{"b_min":0,"b_max":1,"a_max":2},"entries":[]})"),
        std::invalid_argument);
}

TEST_CASE("matrix pairs parse both slots") {
    const std::string one = R"({"dim":1,"entries":[[2,0]]})";
    const auto [T, V] = parse_matrix_pair(R"({"T":)" + one + R"(,"V":)" + one + "}");
    CHECK(T.entries(0, 0) == Complex{2.0});
    CHECK(V.entries(0, 0) == Complex{2.0});
    CHECK_THROWS(parse_matrix_pair(R"({"T":)" + one + "}"));
}

TEST_CASE("report serialization is deterministic and self-describing") {
    const CheckReport rep = check_brown_halmos(build_X(12), 2);
    const std::string text = to_json(rep);
    CHECK(text == to_json(rep));
    CHECK(text.find("\"name\":\"brown_halmos\"") != std::string::npos);
    CHECK(text.find("\"passed\":false") != std::string::npos);
    CHECK(text.find("\"window\":{") != std::string::npos);
    CHECK(text.find("\"details\":[") != std::string::npos);
}
