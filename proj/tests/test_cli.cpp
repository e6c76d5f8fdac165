#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(BDIAG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& rel) {
    std::ifstream in(std::string(BDIAG_FIXTURES) + "/" + rel);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fx(const std::string& rel) { return std::string(BDIAG_FIXTURES) + "/" + rel; }

}  // namespace

TEST_CASE("enumeration matches the golden output byte for byte") {
    RunResult r = run("enumerate --variant b --parity even --i 2 --j 4");
    CHECK(r.code == 0);
    CHECK(r.out == slurp("golden_enumerate_b_even_2_4.txt"));
    // determinism: a second run is identical
    CHECK(run("enumerate --variant b --parity even --i 2 --j 4").out == r.out);
    // the one-complexity neighbor quotient is empty
    RunResult empty = run("enumerate --variant b0 --parity odd --i 1 --j 2");
    CHECK(empty.code == 0);
    CHECK(empty.out.find("dimension 0") != std::string::npos);
    // the zero bidegree holds just the trivial diagram
    RunResult triv = run("enumerate --variant b --parity odd --i 0 --j 0");
    CHECK(triv.out.find("dimension 1") != std::string::npos);
    CHECK(run("enumerate --variant bstar --parity even --i 2 --j 3 --format json").out ==
          slurp("golden_enumerate_bstar_even_2_3.json"));
}

TEST_CASE("homology tables regenerate the golden files") {
    RunResult r = run("homology --variant b --parity even --imax 2 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == slurp("golden_homology_b_even_2.csv"));
    CHECK(r.out.find("b,even,2,4,3,1,2") != std::string::npos);

    RunResult r0 = run("homology --variant b0 --parity odd --imax 3 --format csv");
    CHECK(r0.out == slurp("golden_homology_b0_odd_3.csv"));
    CHECK(r0.out.find("b0,odd,3,5,6,1,") != std::string::npos);
}

TEST_CASE("published boundary matrices through basis files") {
    RunResult even = run("matrix --variant b0 --parity even --i 3 --j 5 --basis " +
                         fx("basis_b0_even_3_5.txt") + " --target-basis " + fx("basis_b0_even_3_6.txt"));
    CHECK(even.code == 0);
    CHECK(even.out == slurp("golden_matrix_b0_even_3_5.txt"));
    RunResult odd = run("matrix --variant b0 --parity odd --i 3 --j 5 --basis " +
                        fx("basis_b0_odd_3_5.txt") + " --target-basis " + fx("basis_b0_odd_3_6.txt"));
    CHECK(odd.code == 0);
    CHECK(odd.out == slurp("golden_matrix_b0_odd_3_5.txt"));
}

TEST_CASE("chord table and hopf operations") {
    CHECK(run("chord --parity odd --imax 4").out == slurp("golden_chord_odd_4.txt"));
    RunResult anti = run("antipode --variant b --parity odd --expr [1,2]");
    CHECK(anti.code == 0);
    CHECK(anti.out == "-[1,2]\n");
    RunResult prim = run("primitive-projection --variant b --parity odd --expr [1,3].[2,4]");
    CHECK(prim.code == 0);
    CHECK(prim.out == "-[1,2].[3,4] + [1,3].[2,4]\n");
}

TEST_CASE("verification suites run and pass at small scale") {
    RunResult hopf = run("verify --suite hopf --imax 2");
    CHECK(hopf.code == 0);
    CHECK(hopf.out.find("FAIL") == std::string::npos);
    RunResult quasi = run("verify --suite quasi-iso --imax 2");
    CHECK(quasi.code == 0);
    RunResult chord = run("verify --suite chord --imax 3");
    CHECK(chord.code == 0);
}

TEST_CASE("configuration errors exit with code two") {
    CHECK(run("enumerate --variant nope --parity even --i 1 --j 2").code == 2);
    CHECK(run("enumerate --variant b --parity sideways --i 1 --j 2").code == 2);
    CHECK(run("homology --variant b --parity even --coeff r").code == 2);
    CHECK(run("nonsense").code == 2);
    // a basis file of the wrong size is a configuration error
    CHECK(run("matrix --variant b0 --parity even --i 3 --j 5 --basis " +
              fx("basis_b0_even_3_4.txt") + " --target-basis " + fx("basis_b0_even_3_6.txt"))
              .code == 2);
}

TEST_CASE("operad homology table matches its golden file") {
    RunResult r = run("operad-homology --kind poisson --arity-max 3");
    CHECK(r.code == 0);
    CHECK(r.out == slurp("golden_operad_poisson_3.txt"));
}
