#include "doctest.h"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

namespace {

struct RunResult {
    int rc = -1;
    std::string out, err;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_msym(const std::string& args)
{
    static int counter = 0;
    const std::string tag =
        "/tmp/msym_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
    const std::string outf = tag + ".out", errf = tag + ".err";
    const std::string cmd =
        std::string(MSYM_BIN_PATH) + " " + args + " >" + outf + " 2>" + errf;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(outf);
    r.err = slurp(errf);
    std::remove(outf.c_str());
    std::remove(errf.c_str());
    return r;
}

std::string fresh_dir()
{
    char tmpl[] = "/tmp/msym_cache_XXXXXX";
    char* d = ::mkdtemp(tmpl);
    REQUIRE(d != nullptr);
    return std::string(d);
}

// mirrors the cache file's checksum so tests can craft valid files
std::string fnv_hex(const std::vector<std::string>& lines)
{
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& line : lines) {
        mix(line);
        mix("\n");
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

TEST_CASE("expand command")
{
    RunResult r = run_msym("expand --m 2 --n 3 'E{y1:2, y2:1}'");
    CHECK(r.rc == 0);
    CHECK(r.out == "x1(1)*x1(2)*x2(3) + x1(1)*x1(3)*x2(2) + x1(2)*x1(3)*x2(1)\n");

    RunResult r12 = run_msym("expand --m 2 --n 4 'E{y1:2, y2:1}'");
    CHECK(r12.rc == 0);
    CHECK(r12.out ==
          "x1(1)*x1(2)*x2(3) + x1(1)*x1(2)*x2(4) + x1(1)*x1(3)*x2(2) + x1(1)*x1(4)*x2(2) + "
          "x1(1)*x1(3)*x2(4) + x1(1)*x1(4)*x2(3) + x1(2)*x1(3)*x2(1) + x1(2)*x1(4)*x2(1) + "
          "x1(3)*x1(4)*x2(1) + x1(2)*x1(3)*x2(4) + x1(2)*x1(4)*x2(3) + x1(3)*x1(4)*x2(2)\n");

    RunResult rz = run_msym("expand --m 1 --n 2 'E{y1:3}'");
    CHECK(rz.rc == 0);
    CHECK(rz.out == "0\n");
    CHECK(rz.err.find("exceeds n = 2") != std::string::npos);

    RunResult r1 = run_msym("expand --m 1 --n 1 'E{}'");
    CHECK(r1.rc == 0);
    CHECK(r1.out == "1\n");
}

TEST_CASE("expand usage and parse errors")
{
    CHECK(run_msym("expand --m 2 'E{y1:1}'").rc == 1);  // --n required here
    RunResult bad = run_msym("expand --m 2 --n 2 'E{y1:'");
    CHECK(bad.rc == 1);
    CHECK(bad.err.find("position") != std::string::npos);
    CHECK(run_msym("expand --m 1 --n 2 'E{y2:1}'").rc == 1);  // arity
    CHECK(run_msym("nosuchcmd").rc == 1);
}

TEST_CASE("mul command")
{
    RunResult r = run_msym("mul --m 3 --n 2 'E{y1:1,y2:1}' 'E{y3:2}'");
    CHECK(r.rc == 0);
    CHECK(r.out == "E{y1*y3:1, y2*y3:1}\n");

    // A(oo,m): no slot cap, all four structure terms survive
    RunResult rinf = run_msym("mul --m 3 'E{y1:1,y2:1}' 'E{y3:2}'");
    CHECK(rinf.rc == 0);
    CHECK(rinf.out ==
          "E{y1*y3:1, y2*y3:1} + E{y1*y3:1, y2:1, y3:1} + E{y2*y3:1, y1:1, y3:1} + "
          "E{y1:1, y2:1, y3:2}\n");

    CHECK(run_msym("mul --m 1 --coeff fp:2 'E{y1:1}' 'E{y1:1}'").out == "E{y1^2:1}\n");
    // inline ring prefixes beat --coeff; mixing them is an error
    CHECK(run_msym("mul --m 1 'fp2:E{y1:1}' 'fp2:E{y1:1}'").out == "E{y1^2:1}\n");
    RunResult mix = run_msym("mul --m 1 'q:E{y1:1}' 'z:E{y1:1}'");
    CHECK(mix.rc == 1);
    CHECK(mix.err.find("ring") != std::string::npos);
}

TEST_CASE("rewrite command")
{
    RunResult r = run_msym("rewrite --m 2 'E{y1:2, y2:1}'");
    CHECK(r.rc == 0);
    CHECK(r.out == "e[2;y1]*e[1;y2] - e[1;y1]*e[1;y1*y2] + e[1;y1^2*y2]\n");

    CHECK(run_msym("rewrite --m 1 'E{y1^2:1}'").out == "e[1;y1]^2 - 2*e[2;y1]\n");
    CHECK(run_msym("rewrite --m 1 --q 'E{y1:2}'").out ==
          "(1/2)*e1[y1]^2 - (1/2)*e1[y1^2]\n");
    CHECK(run_msym("rewrite --m 1 --q --coeff z 'E{y1:2}'").rc == 1);

    RunResult chk = run_msym("rewrite --m 2 --check-n 3 'E{y1:2, y2:1}'");
    CHECK(chk.rc == 0);
    CHECK(chk.out ==
          "e[2;y1]*e[1;y2] - e[1;y1]*e[1;y1*y2] + e[1;y1^2*y2]\ncheck n=3: ok\n");
}

TEST_CASE("plethysm and eval commands")
{
    CHECK(run_msym("plethysm --h 2 --k 2").out == "e2^2 - 2*e1*e3 + 2*e4\n");
    CHECK(run_msym("plethysm --h 1 --k 3").out == "e1^3 - 3*e1*e2 + 3*e3\n");
    CHECK(run_msym("plethysm --h 0 --k 2").rc == 1);

    RunResult ev =
        run_msym("eval --m 2 --n 3 'e[2;y1]*e[1;y2] - e[1;y1]*e[1;y1*y2] + e[1;y1^2*y2]'");
    CHECK(ev.rc == 0);
    CHECK(ev.out == run_msym("expand --m 2 --n 3 'E{y1:2, y2:1}'").out);
}

TEST_CASE("stdout is byte-identical across runs")
{
    const std::string cmd = "verify basis --n 2 --m 2 --maxdeg 3";
    RunResult a = run_msym(cmd), b = run_msym(cmd);
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("summary: 9/9 pass\n") != std::string::npos);
}

TEST_CASE("verify command surface")
{
    RunResult r = run_msym("verify basis --n 2 --m 2 --maxdeg 2");
    CHECK(r.rc == 0);
    CHECK(r.out.find("basis n=2 m=2 a=(1,1) ring=q basis_count=2") != std::string::npos);
    CHECK(r.out.find(" : pass") != std::string::npos);

    CHECK(run_msym("verify nosuch --n 2 --m 2 --maxdeg 2").rc == 1);

    RunResult jr = run_msym("verify basis --n 2 --m 2 --maxdeg 2 --json");
    CHECK(jr.rc == 0);
    std::istringstream lines(jr.out);
    std::string line;
    int cases = 0;
    while (std::getline(lines, line)) {
        auto js = nlohmann::ordered_json::parse(line);
        CHECK(js["kind"] == "certificate");
        CHECK(js["suite"] == "basis");
        CHECK(js["pass"] == true);
        CHECK(js.contains("wall_ms"));
        CHECK(js.dump() == line);  // round trip
        ++cases;
    }
    CHECK(cases == 5);

    // rank suites need a field
    RunResult zb = run_msym("verify degree-bound --n 2 --m 2 --coeff z --maxdeg 3");
    CHECK(zb.rc == 1);
    CHECK(zb.err.find("field") != std::string::npos);

    RunResult fr = run_msym("verify freeness --m 2 --maxdeg 3");
    CHECK(fr.rc == 0);
    CHECK(fr.out.find("freeness m=2 a=(1,2) ring=q c_monomials=4 orbit_count=4 sigma_rank=4 : pass") !=
          std::string::npos);
}

TEST_CASE("verify budget exit code")
{
    RunResult r = run_msym("verify basis --n 2 --m 2 --maxdeg 6 --budget 0.0000001");
    CHECK(r.rc == 3);
    CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("verify failure exit code")
{
    // the one honestly failing configuration: over F_3 with three slots the
    // configured degree cap is not attainable at (2,2)
    RunResult r = run_msym("verify degree-bound --n 3 --m 2 --coeff fp:3 --maxdeg 4");
    CHECK(r.rc == 2);
    CHECK(r.out.find("a=(2,2)") != std::string::npos);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("json output shapes")
{
    RunResult r = run_msym("expand --m 2 --n 3 --json 'E{y1:2, y2:1}'");
    CHECK(r.rc == 0);
    auto js = nlohmann::ordered_json::parse(r.out);
    CHECK(js["kind"] == "poly");
    CHECK(js["ring"] == "z");
    CHECK(js["n"] == "3");
    CHECK(js["m"] == "2");
    CHECK(js["text"] == "x1(1)*x1(2)*x2(3) + x1(1)*x1(3)*x2(2) + x1(2)*x1(3)*x2(1)");
    CHECK(js.dump() + "\n" == r.out);

    auto pj = nlohmann::ordered_json::parse(run_msym("plethysm --h 2 --k 2 --json").out);
    CHECK(pj["kind"] == "poly");
    CHECK(pj["basis"] == "elementary");
    CHECK(pj["text"] == "e2^2 - 2*e1*e3 + 2*e4");

    auto gj = nlohmann::ordered_json::parse(run_msym("rewrite --m 1 --q --json 'E{y1:2}'").out);
    CHECK(gj["kind"] == "generator");
    CHECK(gj["rational"] == true);
    CHECK(gj["text"] == "(1/2)*e1[y1]^2 - (1/2)*e1[y1^2]");
}

TEST_CASE("cache: cold and warm runs agree")
{
    const std::string dir = fresh_dir();
    RunResult cold = run_msym("plethysm --h 3 --k 2 --cache-dir " + dir);
    CHECK(cold.rc == 0);

    std::string cache = slurp(dir + "/msym.cache");
    CHECK(cache.rfind("msym-cache 1\n", 0) == 0);
    CHECK(cache.find("P 3 2 ") != std::string::npos);
    CHECK(cache.find("\nC ") != std::string::npos);

    RunResult warm = run_msym("plethysm --h 3 --k 2 --cache-dir " + dir);
    CHECK(warm.out == cold.out);
    CHECK(warm.err.find("cache") != std::string::npos);  // hit note

    // rewrite records persist too
    RunResult rw = run_msym("rewrite --m 2 --cache-dir " + dir + " 'E{y1:2, y2:1}'");
    CHECK(rw.rc == 0);
    CHECK(slurp(dir + "/msym.cache").find("RW E{y1:2,y2:1} ") != std::string::npos);
}

TEST_CASE("cache: corruption is detected")
{
    const std::string dir = fresh_dir();
    (void)run_msym("plethysm --h 2 --k 2 --cache-dir " + dir);

    // flip a byte: checksum no longer matches -> whole file ignored, recompute
    std::string cache = slurp(dir + "/msym.cache");
    const auto at = cache.find("e2^2");
    REQUIRE(at != std::string::npos);
    cache[at] = 'e' + 1;
    std::ofstream(dir + "/msym.cache", std::ios::binary) << cache;
    RunResult r = run_msym("plethysm --h 2 --k 2 --cache-dir " + dir);
    CHECK(r.rc == 0);
    CHECK(r.out == "e2^2 - 2*e1*e3 + 2*e4\n");
    CHECK(r.err.find("cache") != std::string::npos);  // warning

    // a bogus record under a valid checksum is skipped line by line
    std::vector<std::string> lines = {"msym-cache 1", "P 9 9 not-a-polynomial"};
    std::ofstream out(dir + "/msym.cache", std::ios::binary);
    for (const auto& l : lines)
        out << l << "\n";
    out << "C " << fnv_hex(lines) << "\n";
    out.close();
    RunResult r2 = run_msym("plethysm --h 2 --k 2 --cache-dir " + dir);
    CHECK(r2.rc == 0);
    CHECK(r2.out == "e2^2 - 2*e1*e3 + 2*e4\n");
    CHECK(r2.err.find("line 2") != std::string::npos);
}

TEST_CASE("cache: missing directory falls back to recomputation")
{
    RunResult r = run_msym("plethysm --h 2 --k 2 --cache-dir /tmp/msym_nonexistent_dir_xyzzy");
    CHECK(r.rc == 0);
    CHECK(r.out == "e2^2 - 2*e1*e3 + 2*e4\n");
}
