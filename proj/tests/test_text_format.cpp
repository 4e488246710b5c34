#include "hoeffspecht/text_format.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace hs;

namespace {

ModuleVector read_text(std::string const& text) {
    std::istringstream in(text);
    return read_module_vector(in);
}

/// Line number carried by the ParseError thrown for `text`, or 0.
std::size_t error_line(std::string const& text) {
    try {
        read_text(text);
    } catch (ParseError const& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("module vector text form") {
    ModuleVector v(4, 2);
    v[Subset(4, {1, 2})] = 1;
    v[Subset(4, {3, 4})] = Rational(-7, 3);
    std::ostringstream out;
    write_module_vector(out, v);
    CHECK(out.str() == "n = 4\nl = 2\n1,2 = 1\n3,4 = -7/3\n");

    std::ostringstream zero;
    write_module_vector(zero, ModuleVector(5, 2));
    CHECK(zero.str() == "n = 5\nl = 2\n");
    CHECK(read_text(zero.str()) == ModuleVector(5, 2));

    std::ostringstream empty_set;
    write_module_vector(empty_set, ModuleVector::constant(3, 0, 2));
    CHECK(empty_set.str() == "n = 3\nl = 0\n{} = 2\n");
    CHECK(read_text(empty_set.str()) == ModuleVector::constant(3, 0, 2));
}

TEST_CASE("reader accepts comments, blank lines, any record order and non-canonical rationals") {
    auto const v = read_text("# header\nn = 4\n\nl = 2\n3,4 = -14/6\n  # note\n2,1 = 4/2\n");
    ModuleVector expected(4, 2);
    expected[Subset(4, {1, 2})] = 2;
    expected[Subset(4, {3, 4})] = Rational(-7, 3);
    CHECK(v == expected);
}

TEST_CASE("write then read is the identity on random vectors") {
    for (int n = 1; n <= 9; ++n) {
        for (int l = 0; l <= n; ++l) {
            auto const v = oracle::random_vector(n, l, 13 * n + l);
            std::stringstream io;
            write_module_vector(io, v);
            CHECK(read_module_vector(io) == v);
        }
    }
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(error_line("l = 2\n") == 1);
    CHECK(error_line("n = 4\n1,2 = 1\n") == 2);
    CHECK(error_line("n = 4\nl = 2\n1,2 = 1\n1,2 = 3\n") == 4);
    CHECK(error_line("n = 4\nl = 2\n1,2,3 = 1\n") == 3);
    CHECK(error_line("n = 4\nl = 2\n\n1,5 = 1\n") == 4);
    CHECK(error_line("n = 4\nl = 2\n1,2 = 1/0\n") == 3);
    CHECK(error_line("n = 4\nl = 2\n1,2 = x\n") == 3);
    CHECK(error_line("n = 4\nl = 2\n1,2\n") == 3);
    CHECK(error_line("") == 1);

    try {
        read_text("n = 4\nl = 2\n1,2 = 1/0\n");
        FAIL("expected a parse error");
    } catch (ParseError const& e) {
        CHECK(std::string(e.what()).rfind("line 3: ", 0) == 0);
    }
}

TEST_CASE("decomposition text round trip") {
    for (int n = 2; n <= 8; ++n) {
        for (int m = 1; 2 * m <= n; ++m) {
            auto const d = decompose(oracle::random_vector(n, m, 7 * n + m));
            std::stringstream io;
            write_decomposition(io, d);
            auto const back = read_decomposition(io);
            CHECK(back.n == d.n);
            CHECK(back.m == d.m);
            CHECK(back.mean == d.mean);
            for (int l = 1; l <= m; ++l) CHECK(back.kernel(l) == d.kernel(l));
            for (int l = 0; l <= m; ++l) CHECK(back.component(l) == d.component(l));
        }
    }
}

TEST_CASE("decomposition reader rejects damaged files") {
    auto const d = decompose(oracle::random_vector(5, 2, 1));
    std::ostringstream out;
    write_decomposition(out, d);
    auto text = out.str();
    auto const cut = text.find("[component 2]");
    REQUIRE(cut != std::string::npos);
    std::istringstream truncated(text.substr(0, cut));
    CHECK_THROWS_AS(read_decomposition(truncated), ParseError);

    std::istringstream bad_header("n = 5\nm = 9\nmean = 0\n");
    CHECK_THROWS_AS(read_decomposition(bad_header), ParseError);
}

TEST_CASE("file helpers") {
    auto const dir = std::filesystem::temp_directory_path() / "hoeffspecht_text_format";
    std::filesystem::create_directories(dir);
    auto const path = dir / "v.mv";
    auto const v = oracle::random_vector(6, 3, 4);
    save_module_vector(path, v);
    CHECK(load_module_vector(path) == v);
    CHECK_THROWS(load_module_vector(dir / "missing.mv"));
    std::filesystem::remove_all(dir);
}
