#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "symtoep/json_io.hpp"
#include "symtoep/symbols.hpp"

namespace fs = std::filesystem;

namespace {

const std::string cli = SYMTOEP_CLI_PATH;

int run(const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (status < 0 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("symtoep_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

const char* kReS =
    R"({"format":"fourier","symmetrize":false,"coefficients":[)"
    R"({"m":-1,"n":0,"re":1},{"m":0,"n":-1,"re":1},)"
    R"({"m":0,"n":1,"re":1},{"m":1,"n":0,"re":1}]})";

}  // namespace

TEST_CASE("exit codes: pass, failed check, config error") {
    TempDir dir;
    const std::string symbol = dir.file("re_s.json");
    write_text(symbol, kReS);

    CHECK(run("check-bh --symbol " + symbol + " --D 12 --margin 2") == 0);
    // margin 0 exposes the truncation edge, so the relations fail
    CHECK(run("check-bh --symbol " + symbol + " --D 12 --margin 0") == 1);
    CHECK(run("check-bh --symbol " + dir.file("missing.json")) == 2);
    CHECK(run("no-such-subcommand") == 2);
    CHECK(run("check-bh --symbol " + symbol + " --D 0") == 2);

    const int capped = std::system(
        ("SYMTOEP_MAX_D=10 \"" + cli + "\" check-bh --symbol " + symbol +
         " --D 12 2>/dev/null")
            .c_str());
    CHECK(WEXITSTATUS(capped) == 2);

    CHECK(run("--help >/dev/null") == 0);
}

TEST_CASE("classify-point reports the region") {
    TempDir dir;
    const std::string out = dir.file("cls.json");
    CHECK(run("classify-point --s 2 --p 1 -o " + out) == 0);
    const std::string text = symtoep::read_file(out);
    CHECK(text.find("\"class\":\"IN_B_GAMMA\"") != std::string::npos);

    CHECK(run("classify-point --s 0 --p 0 -o " + out) == 0);
    CHECK(symtoep::read_file(out).find("\"class\":\"IN_G\"") != std::string::npos);

    CHECK(run("classify-point --s abc --p 0") == 2);
}

TEST_CASE("identical configuration produces byte-identical output") {
    TempDir dir;
    const std::string symbol = dir.file("re_s.json");
    write_text(symbol, kReS);

    const std::string first = dir.file("a.json");
    const std::string second = dir.file("b.json");
    CHECK(run("build-toeplitz --symbol " + symbol + " --D 10 -o " + first) == 0);
    CHECK(run("build-toeplitz --symbol " + symbol + " --D 10 -o " + second) == 0);
    CHECK(symtoep::read_file(first) == symtoep::read_file(second));

    CHECK(run("demo coburn -o " + first) == 0);
    CHECK(run("demo coburn -o " + second) == 0);
    CHECK(symtoep::read_file(first) == symtoep::read_file(second));
}

TEST_CASE("build then recover round trip through files") {
    TempDir dir;
    const std::string symbol = dir.file("re_s.json");
    write_text(symbol, kReS);

    const std::string matrix = dir.file("T.json");
    const std::string recovered = dir.file("g.json");
    CHECK(run("build-toeplitz --symbol " + symbol + " --D 8 -o " + matrix) == 0);
    CHECK(run("recover-symbol --matrix " + matrix + " --beta 1 -o " + recovered) ==
          0);

    const symtoep::FourierSymbol got =
        symtoep::parse_symbol(symtoep::read_file(recovered));
    const symtoep::FourierSymbol want = symtoep::parse_symbol(kReS);
    CHECK(got == want);
}

TEST_CASE("demo subcommands reproduce their examples") {
    CHECK(run("demo coburn --D 12 >/dev/null") == 0);
    CHECK(run("demo example29 >/dev/null") == 0);
    CHECK(run("demo remark36 >/dev/null") == 0);
    CHECK(run("demo >/dev/null") == 2);  // a named example is required
}

TEST_CASE("certify-gamma consumes a pair file") {
    TempDir dir;
    const std::string pair = dir.file("pair.json");
    // scalar boundary pair (2,1)
    write_text(pair,
               R"({"T":{"dim":1,"entries":[[2,0]]},"V":{"dim":1,"entries":[[1,0]]}})");
    CHECK(run("certify-gamma --pair " + pair + " --kind unitary") == 0);

    // pushing the spectrum outside the closure must fail
    write_text(pair,
               R"({"T":{"dim":1,"entries":[[3.5,0]]},"V":{"dim":1,"entries":[[1,0]]}})");
    CHECK(run("certify-gamma --pair " + pair + " --kind unitary") == 1);

    CHECK(run("certify-gamma --pair " + pair + " --kind unitary --margin 2") == 2);
}
