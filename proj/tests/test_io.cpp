#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "jpm/error.hpp"
#include "jpm/io.hpp"
#include "jpm/solver.hpp"

using namespace jpm;

TEST_CASE("DIMACS round trip") {
    const DistanceGraph g = build_graph(GraphSpec::jpm(3, 2, 0));
    std::ostringstream out;
    write_dimacs(out, g);
    const std::string text = out.str();
    CHECK(text.find("p edge 12 12\n") != std::string::npos);
    std::istringstream in(text);
    const DistanceGraph h = read_dimacs(in);
    REQUIRE(h.order() == g.order());
    CHECK(h.edge_count() == g.edge_count());
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = 0; v < g.order(); ++v) CHECK(h.adjacent(u, v) == g.adjacent(u, v));
    CHECK_FALSE(h.has_vectors());
}

TEST_CASE("DIMACS J(4,3,1)") {
    std::ostringstream out;
    write_dimacs(out, build_graph(GraphSpec::j(4, 3, 1)));
    CHECK(out.str().find("p edge 4 0") != std::string::npos);
}

TEST_CASE("DIMACS parse errors") {
    for (const char* bad : {"e 1 2\n", "p edge 3 1\ne 1 4\n", "p edge 3 1\ne 1 x\n", "p graph 3 0\n",
                            "p edge 3 1\np edge 3 1\n", "p edge 2 1\ne 1 1\n", "q\n"}) {
        std::istringstream in(bad);
        CHECK_THROWS_AS(read_dimacs(in), Error);
    }
    std::istringstream col("c comment\np col 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    CHECK(solve_exact(read_dimacs(col)).alpha == 2);
}

TEST_CASE("spec and graph JSON round trip") {
    for (const auto& spec : {GraphSpec::jpm(4, 2, -1), GraphSpec::jkl(5, 2, 1, -2),
                             GraphSpec::jpm_parity(4, 2, Parity::Odd), GraphSpec::kpm(4, 3, 0)}) {
        CHECK(spec_from_json(spec_to_json(spec)) == spec);
        const DistanceGraph g = build_graph(spec);
        const DistanceGraph h = graph_from_json(graph_to_json(g));
        CHECK(h.order() == g.order());
        CHECK(h.edge_count() == g.edge_count());
        CHECK(h.spec() == g.spec());
        CHECK(solve_exact(h).alpha == solve_exact(g).alpha);
    }
    CHECK_THROWS_AS(spec_from_json(nlohmann::json{{"kind", "jpm"}, {"n", 3}}), Error);
    CHECK_THROWS_AS(spec_from_json(nlohmann::json{{"kind", "jpmx"}, {"n", 3}, {"k", 2}, {"t", 0}}), Error);
}

TEST_CASE("certificate JSON") {
    const DistanceGraph g = build_graph(GraphSpec::jpm(5, 3, -1));
    const auto cert = solve_exact(g);
    const auto j = certificate_to_json(cert);
    for (const char* key : {"spec", "alpha", "witness", "verified", "nodes", "millis"}) CHECK(j.contains(key));
    CHECK(j["alpha"] == 14);
    CHECK(j["verified"] == true);
    const auto back = certificate_from_json(j);
    CHECK(back.alpha == 14);
    CHECK(back.witness == cert.witness);
    CHECK(back.spec == cert.spec);
    CHECK_THROWS_AS(parse_json_text("{oops"), Error);
    CHECK_THROWS_AS(certificate_from_json(nlohmann::json::array()), Error);
}

TEST_CASE("files") {
    const auto path = std::filesystem::temp_directory_path() / "jpm_io_test.txt";
    write_file(path.string(), "hello\n");
    CHECK(read_file(path.string()) == "hello\n");
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_file("/nonexistent/dir/file"), Error);
    CHECK_THROWS_AS(write_file("/nonexistent/dir/file", "x"), Error);
}
