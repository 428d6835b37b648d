#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "sta/io.hpp"
#include "sta/random.hpp"

using namespace sta;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/sta_io_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    void write(const std::string& text) {
        std::ofstream out(path);
        out << text;
    }
};

}  // namespace

TEST_CASE("polynomial files round trip in both modes") {
    for (FieldMode mode : {FieldMode::Real, FieldMode::Complex}) {
        HomPoly P = random_gaussian_poly(3, 4, mode, 7);
        TempFile f(mode == FieldMode::Real ? "poly_real.json" : "poly_cplx.json");
        write_poly_json(f.path, P);
        HomPoly Q = read_poly_json(f.path);
        CHECK(Q.n() == 3);
        CHECK(Q.d() == 4);
        CHECK(Q.mode() == mode);
        CHECK((Q.coeffs() - P.coeffs()).norm() == 0.0);  // exact double round trip
    }
}

TEST_CASE("entry-form tensors are accepted") {
    TempFile f("entries.json");
    f.write(R"({"n": 2, "d": 2, "field": "real",
                "entries": [{"index": [1, 1], "re": 2.0},
                            {"index": [1, 2], "re": -1.0},
                            {"index": [2, 1], "re": -1.0},
                            {"index": [2, 2], "re": 0.5}]})");
    HomPoly P = read_poly_json(f.path);
    auto b = P.basis_ptr();
    CHECK(P.coeffs()[b->index_of({2, 0})].real() == doctest::Approx(2.0));
    CHECK(P.coeffs()[b->index_of({1, 1})].real() == doctest::Approx(-1.0));
    CHECK(P.coeffs()[b->index_of({0, 2})].real() == doctest::Approx(0.5));
}

TEST_CASE("asymmetric entries surface as parse errors") {
    TempFile f("asym.json");
    f.write(R"({"n": 2, "d": 2, "field": "real",
                "entries": [{"index": [1, 2], "re": 1.0},
                            {"index": [2, 1], "re": 2.0}]})");
    CHECK_THROWS_AS(read_poly_json(f.path), ParseError);
}

TEST_CASE("malformed json reports the offending line") {
    TempFile f("broken.json");
    f.write("{\n  \"n\": 2,\n  \"d\": oops,\n  \"field\": \"real\"\n}\n");
    try {
        read_poly_json(f.path);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("missing files raise parse errors") {
    CHECK_THROWS_AS(read_poly_json("/tmp/sta_io_test_does_not_exist.json"), ParseError);
}

TEST_CASE("schema violations raise parse errors") {
    TempFile f("schema.json");
    f.write(R"({"n": 2, "d": 2, "field": "real"})");
    CHECK_THROWS_AS(read_poly_json(f.path), ParseError);  // no coeffs or entries
    f.write(R"({"n": 2, "d": 2, "field": "rational", "coeffs": []})");
    CHECK_THROWS_AS(read_poly_json(f.path), ParseError);
    f.write(R"({"n": 2, "field": "real", "coeffs": []})");
    CHECK_THROWS_AS(read_poly_json(f.path), ParseError);  // d missing
    f.write(R"({"n": 2, "d": 2, "field": "real",
                "coeffs": [{"alpha": [1, 1], "re": 1.0, "im": 3.0}]})");
    CHECK_THROWS_AS(read_poly_json(f.path), ParseError);  // imaginary in real mode
    f.write(R"({"n": 2, "d": 2, "field": "real",
                "coeffs": [{"alpha": [3, 0], "re": 1.0}]})");
    CHECK_THROWS_AS(read_poly_json(f.path), ParseError);  // degree mismatch
    f.write(R"({"n": 2, "d": 2, "field": "real",
                "coeffs": [{"alpha": [1, 1], "re": 1.0}, {"alpha": [1, 1], "re": 1.0}]})");
    CHECK_THROWS_AS(read_poly_json(f.path), ParseError);  // duplicate exponent
}

TEST_CASE("decomposition files round trip") {
    Rng rng(9);
    Eigen::MatrixXcd V(3, 2);
    for (int j = 0; j < 2; ++j) {
        Eigen::VectorXcd v = rng.gaussian_complex_vector(3);
        V.col(j) = v / v.norm();
    }
    Eigen::VectorXd w(2);
    w << 1.25, 0.5;
    Decomposition p{w, V, FieldMode::Complex};
    TempFile f("decomp.json");
    write_decomposition_json(f.path, p, 4);
    auto [q, d] = read_decomposition_json(f.path);
    CHECK(d == 4);
    CHECK(q.mode == FieldMode::Complex);
    CHECK((q.w - p.w).norm() == 0.0);
    CHECK((q.V - p.V).norm() == 0.0);
}

TEST_CASE("decomposition files with non-unit vectors are rejected") {
    TempFile f("badnorm.json");
    f.write(R"({"r": 1, "n": 2, "d": 3, "field": "real",
                "weights": [1.0],
                "vectors": [[{"re": 2.0, "im": 0.0}, {"re": 0.0, "im": 0.0}]]})");
    CHECK_THROWS_AS(read_decomposition_json(f.path), ParseError);
}

TEST_CASE("trace csv has the pinned header and one row per iteration") {
    std::vector<TraceRow> trace = {{0, 1.5, 0.25, 2.0, true, 0.9, "newton"},
                                   {1, 0.5, 0.125, -0.25, false, 0.4, "steepest"}};
    TempFile f("trace.csv");
    write_trace_csv(f.path, trace);
    std::ifstream in(f.path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "k,f,delta,rho,accepted");
    std::getline(in, line);
    CHECK(line == "0,1.5,0.25,2,1");
    std::getline(in, line);
    CHECK(line == "1,0.5,0.125,-0.25,0");
}

TEST_CASE("perturbation csv has the pinned header and summary row") {
    ExperimentSummary s{};
    s.err_min = 0.25;
    s.err_med = 0.5;
    s.err_max = 1.0;
    s.avg_time_seconds = 0.125;
    s.avg_iterations = 3;
    std::string csv = perturbation_csv(s, 2, 1e-2);
    CHECK(csv.rfind("r,eps,err_min,err_med,err_max,avg_time_s,avg_iters\n", 0) == 0);
    CHECK(csv.find("2,0.01,0.25,0.5,1,0.125,3\n") != std::string::npos);
}
