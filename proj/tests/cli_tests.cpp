// End-to-end checks of the command-line tool: exit-code contract, document
// validation, report determinism, and the corpus listing. Run with the tool
// path as the only argument.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string g_tool;
int g_failures = 0;

void expect(bool cond, const std::string& what) {
    if (!cond) {
        ++g_failures;
        std::cerr << "FAIL: " << what << "\n";
    } else {
        std::cout << "ok: " << what << "\n";
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(const std::string& args, const std::string& out_path) {
    std::string cmd = g_tool + " " + args + " > " + out_path + " 2> " + out_path + ".err";
    int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    return WEXITSTATUS(rc);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-stationary-af>\n";
        return 2;
    }
    g_tool = argv[1];
    std::string dir = "/tmp/staf_cli_tests";
    int mkdir_rc = std::system(("mkdir -p " + dir).c_str());
    (void)mkdir_rc;

    write_file(dir + "/j.json",
               R"({"name": "j", "matrix": [["4", "1"], ["32", "0"]], "companion_spec": ["4", "32"]})");
    write_file(dir + "/k.json", R"({"name": "k", "matrix": [["6", "1"], ["16", "0"]]})");
    write_file(dir + "/s6.json", R"({"name": "s6", "matrix": [["6"]]})");
    write_file(dir + "/s10.json", R"({"name": "s10", "matrix": [["10"]]})");
    write_file(dir + "/bad.json", R"({"name": "bad", "matrix": [["4", "1"], ["32"]]})");
    write_file(dir + "/badspec.json",
               R"({"name": "bad", "matrix": [["4", "1"], ["32", "0"]], "companion_spec": ["6", "16"]})");
    write_file(dir + "/periodic.json", R"({"name": "p", "matrix": [["0", "1"], ["1", "0"]]})");

    expect(run("analyze " + dir + "/j.json --charpoly --pf --dimgroup --primitive", dir + "/out1") == 0,
           "analyze with flags exits 0");
    std::string out1 = slurp(dir + "/out1");
    expect(out1.find("\"charpoly\"") != std::string::npos, "report contains charpoly section");
    expect(out1.find("\"-32\"") != std::string::npos, "charpoly coefficients are exact strings");
    expect(out1.find("\"quotient_index\": \"32\"") != std::string::npos, "quotient index reported");
    // the subject block round-trips the parsed document
    expect(out1.find("\"4\",") != std::string::npos && out1.find("\"32\",") != std::string::npos,
           "subject matrix entries round-trip as decimal strings");

    expect(run("analyze " + dir + "/j.json --pf", dir + "/out2a") == 0, "pf run exits 0");
    expect(run("analyze " + dir + "/j.json --pf", dir + "/out2b") == 0, "pf rerun exits 0");
    expect(slurp(dir + "/out2a") == slurp(dir + "/out2b"), "reports are byte-identical across runs");
    {
        std::string pf = slurp(dir + "/out2a");
        expect(pf.find("\"approx\": \"8\"") != std::string::npos, "dominant eigenvalue 8 reported");
        // left eigenvector (8, 1) as power-basis coordinate vectors
        std::string left = pf.substr(pf.find("\"left\""));
        left = left.substr(0, left.find("\"right\""));
        expect(left.find("\"8\"") != std::string::npos && left.find("\"1\"") != std::string::npos &&
                   left.find("\"8\"") < left.find("\"1\""),
               "left eigenvector (8,1) reported");
    }

    write_file(dir + "/id2.json", R"({"name": "id2", "matrix": [["1", "0"], ["0", "1"]]})");
    expect(run("analyze " + dir + "/j.json " + dir + "/k.json --check t6 --a1 " + dir + "/id2.json",
               dir + "/out_t6") == 0,
           "spectral conditions with explicit map exit 0");
    expect(slurp(dir + "/out_t6").find("\"pass\": true") != std::string::npos,
           "spectral conditions pass with the identity map");
    expect(run("analyze " + dir + "/j.json --check t6", dir + "/out_t6b") == 3,
           "pairwise check with one document exits 3");

    expect(run("analyze " + dir + "/bad.json --charpoly", dir + "/out3") == 2, "ragged matrix exits 2");
    expect(run("analyze " + dir + "/badspec.json --charpoly", dir + "/out4") == 2,
           "companion_spec mismatch exits 2");
    expect(run("analyze " + dir + "/missing.json --charpoly", dir + "/out5") == 2, "missing file exits 2");
    expect(run("analyze " + dir + "/periodic.json --pf", dir + "/out6") == 3,
           "non-primitive matrix under --pf exits 3");
    expect(run("analyze " + dir + "/s6.json " + dir + "/s10.json --check cstar --budget 16",
               dir + "/out7") == 4,
           "ladder budget exhaustion exits 4");

    expect(run("analyze " + dir + "/j.json " + dir + "/k.json --check cstar", dir + "/out8") == 0,
           "certificate for the companion pair exits 0");
    std::string out8 = slurp(dir + "/out8");
    expect(out8.find("\"pass\": true") != std::string::npos, "certificate verified in report");

    expect(run("analyze " + dir + "/j.json " + dir + "/k.json --check conjugate --powers 1..3",
               dir + "/out9") == 0,
           "conjugacy grid exits 0");
    std::string out9 = slurp(dir + "/out9");
    expect(out9.find("\"any_conjugate\": false") != std::string::npos, "no conjugate powers reported");
    expect(out9.find("EigenvalueModulus") != std::string::npos, "obstruction attached to the grid");

    expect(run("analyze " + dir + "/j.json " + dir + "/k.json --check t10", dir + "/out10") == 0,
           "field/prime battery exits 0");
    expect(slurp(dir + "/out10").find("\"pass\": true") != std::string::npos, "battery passes");

    expect(run("analyze " + dir + "/j.json " + dir + "/k.json --check se", dir + "/out11") == 0,
           "shift-equivalence search exits 0");
    expect(slurp(dir + "/out11").find("none-proved") != std::string::npos,
           "distinct companions report a proved negative");

    expect(run("analyze " + dir + "/j.json " + dir + "/k.json --check t7", dir + "/out_t7") == 0,
           "row-space condition exits 0");
    expect(slurp(dir + "/out_t7").find("\"pass\": true") != std::string::npos,
           "row-space condition passes for the companion pair");
    expect(run("analyze " + dir + "/j.json " + dir + "/k.json --check conjugate --powers x..y",
               dir + "/out_badpow") == 2,
           "malformed power range exits 2");

    expect(run("corpus list", dir + "/out12") == 0, "corpus list exits 0");
    std::string out12 = slurp(dir + "/out12");
    expect(out12.find("charpolys") != std::string::npos, "listing contains the charpoly item");
    expect(out12.find("scaled-squares-experiment") != std::string::npos, "listing contains the experiment");

    expect(run("corpus run --only closed-form", dir + "/out13") == 0, "corpus subset run exits 0");
    expect(slurp(dir + "/out13").find("\"pass\": true") != std::string::npos, "subset passes");

    expect(run("analyze " + dir + "/j.json --padic 2 3", dir + "/out14") == 0, "padic levels exit 0");
    expect(slurp(dir + "/out14").find("\"idempotent\"") != std::string::npos, "padic idempotents reported");

    if (g_failures == 0) {
        std::cout << "all cli checks passed\n";
        return 0;
    }
    std::cerr << g_failures << " cli check(s) failed\n";
    return 1;
}
