#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string &args) {
  std::string cmd = std::string(GINV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE *pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = ::fread(buf, 1, sizeof buf, pipe)) > 0)
    r.out.append(buf, n);
  int status = ::pclose(pipe);
  REQUIRE(status != -1);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has_line(const std::string &text, const std::string &line) {
  std::string probe = line + "\n";
  if (text.rfind(probe, 0) == 0)
    return true;
  return text.find("\n" + probe) != std::string::npos;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("ginv-cli-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int &counter() {
    static int c = 0;
    return c;
  }
};

} // namespace

TEST_CASE("version flag") {
  RunResult r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(!r.out.empty());
}

TEST_CASE("invariant values") {
  RunResult q = run_cli("invariant --kind q --genus 2 'family:A(5)'");
  CHECK(q.exit_code == 0);
  CHECK(q.out == "4769/216000\n");

  RunResult qt = run_cli("invariant --kind qtilde --genus 2 'family:A(4)'");
  CHECK(qt.exit_code == 0);
  CHECK(qt.out == "11/72\n");

  RunResult big = run_cli("invariant --kind Q --genus 2 'family:S(3)'");
  CHECK(big.exit_code == 0);
  CHECK(big.out == "81\n");

  RunResult d = run_cli("invariant --kind d 'family:A(5)'");
  CHECK(d.exit_code == 0);
  CHECK(d.out == "1/12\n");

  RunResult dp = run_cli("invariant --kind dpprime --prime 5 'family:A(5)'");
  CHECK(dp.exit_code == 0);
  CHECK(dp.out == "1/4\n");
}

TEST_CASE("modular invariant with a degree file") {
  TempDir tmp;
  fs::path file = tmp.path / "a5_mod5.txt";
  {
    FILE *f = ::fopen(file.c_str(), "w");
    REQUIRE(f != nullptr);
    ::fputs("GINVBRAUER 1\nA(5)\n5\n1:1 3:1 5:1\n", f);
    ::fclose(f);
  }
  RunResult r = run_cli("invariant --kind qhpprime --genus 2 --brauer " +
                        file.string() + " 'family:A(5)'");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("alpha_threshold") != std::string::npos);
  CHECK(has_line(r.out, "comparison below"));

  // genus above 1 without degree data cannot be computed
  RunResult no_data =
      run_cli("invariant --kind qhpprime --genus 2 --prime 5 'family:A(5)'");
  CHECK(no_data.exit_code == 2);

  // genus 1 reduces to the class-count computation
  RunResult g1 =
      run_cli("invariant --kind qhpprime --genus 1 --prime 5 'family:A(5)'");
  CHECK(g1.exit_code == 0);
  CHECK(g1.out == "1/4\n");
}

TEST_CASE("degrees output") {
  RunResult r = run_cli("degrees 'family:A(5)'");
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "label A(5)"));
  CHECK(has_line(r.out, "order 60"));
  CHECK(has_line(r.out, "degrees 1^1 3^2 4^1 5^1"));
  CHECK(has_line(r.out, "linear 1"));

  RunResult j = run_cli("--format json degrees 'family:A(5)'");
  CHECK(j.exit_code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("order") == "60");
  CHECK(parsed.at("degrees").size() == 4);
  CHECK(parsed.at("linear_count") == 1);
}

TEST_CASE("classes output") {
  RunResult r = run_cli("classes 'family:S(3)'");
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "classes 3"));
  CHECK(has_line(r.out, "size 1 element_order 1 count 1"));
  CHECK(has_line(r.out, "size 2 element_order 3 count 1"));
  CHECK(has_line(r.out, "size 3 element_order 2 count 1"));
}

TEST_CASE("classify output") {
  RunResult r = run_cli("classify 'family:S(4)'");
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "abelian no"));
  CHECK(has_line(r.out, "nilpotent no"));
  CHECK(has_line(r.out, "supersolvable no"));
  CHECK(has_line(r.out, "solvable yes"));
  CHECK(has_line(r.out, "p_closed 2 no"));
  CHECK(has_line(r.out, "p_closed 3 no"));

  RunResult ab = run_cli("classify 'family:C(12)'");
  CHECK(ab.exit_code == 0);
  CHECK(has_line(ab.out, "abelian yes"));
}

TEST_CASE("tqft evaluation") {
  RunResult g2 = run_cli("tqft --genus 2 'family:S(3)'");
  CHECK(g2.exit_code == 0);
  CHECK(g2.out == "81\n");

  RunResult sphere = run_cli("tqft --word cap,cup 'family:S(3)'");
  CHECK(sphere.exit_code == 0);
  CHECK(sphere.out == "1/6\n");

  // open word is rejected as usage
  RunResult open = run_cli("tqft --word cap,copants 'family:S(3)'");
  CHECK(open.exit_code == 2);
}

TEST_CASE("explore output") {
  RunResult r = run_cli("explore --normal '(1 2 3)' 'family:S(3)'");
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "group S(3) order 6"));
  CHECK(has_line(r.out, "normal order 3 quotient order 2"));
  CHECK(r.out.find("holds yes") != std::string::npos);
  CHECK(r.out.find("holds no") == std::string::npos);

  // the closure of a transposition is everything; quotient goes trivial
  RunResult whole = run_cli("explore --normal '(1 2)' 'family:S(3)'");
  CHECK(whole.exit_code == 0);
  CHECK(has_line(whole.out, "normal order 6 quotient order 1"));

  // element outside the group
  RunResult bad = run_cli("explore --normal '(1 2)' 'family:A(4)'");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("invariant 'family:A(5)'").exit_code == 2);
  CHECK(run_cli("invariant --kind nope 'family:A(5)'").exit_code == 2);
  CHECK(run_cli("degrees 'family:Q(3)'").exit_code == 2);
  CHECK(run_cli("degrees 'family:D(7)'").exit_code == 2);
  CHECK(run_cli("tqft --genus 1 --word cap,cup 'family:S(3)'").exit_code == 2);
  CHECK(run_cli("invariant --kind dpprime --prime 6 'family:A(5)'").exit_code ==
        2);
}

TEST_CASE("computation limits exit with 3") {
  RunResult r = run_cli("degrees 'family:S(12)'");
  CHECK(r.exit_code == 3);
}

TEST_CASE("verify exit codes and json") {
  RunResult ok = run_cli(
      "verify --suite theorems --groups 'S(3),A(4)' --max-genus 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("VIOLATION") == std::string::npos);
  CHECK(ok.out.find("summary:") != std::string::npos);

  RunResult j = run_cli("--format json verify --suite theorems "
                        "--groups 'S(3),A(4)' --max-genus 2");
  CHECK(j.exit_code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("suite") == "theorems");
  CHECK(parsed.at("summary").at("violations") == 0);
  CHECK(!parsed.at("results").empty());

  RunResult shifted =
      run_cli("verify --suite theorems --groups 'S(3)' --max-genus 2 "
              "--threshold-shift 1/1000000");
  CHECK(shifted.exit_code == 1);
  CHECK(shifted.out.find("VIOLATION") != std::string::npos);

  CHECK(run_cli("verify --suite nope").exit_code == 2);
  CHECK(run_cli("verify --suite theorems --groups 'Z(9)'").exit_code == 2);
}

TEST_CASE("groups file feeds the verifier") {
  TempDir tmp;
  fs::path file = tmp.path / "groups.txt";
  {
    FILE *f = ::fopen(file.c_str(), "w");
    REQUIRE(f != nullptr);
    ::fputs("# tiny catalog\nfamily:S(3)\nfamily:C(4)\n", f);
    ::fclose(f);
  }
  RunResult r = run_cli("verify --suite theorems --max-genus 2 --groups-file " +
                        file.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("S(3)") != std::string::npos);
  CHECK(r.out.find("C(4)") != std::string::npos);
  CHECK(r.out.find("A(5)") == std::string::npos);
}

TEST_CASE("cache administration") {
  TempDir tmp;
  std::string base = "--cache-dir " + tmp.path.string() + " ";
  RunResult empty = run_cli(base + "cache stats");
  CHECK(empty.exit_code == 0);
  CHECK(has_line(empty.out, "entries 0"));

  CHECK(run_cli(base + "degrees 'family:A(5)'").exit_code == 0);
  RunResult one = run_cli(base + "cache stats");
  CHECK(has_line(one.out, "entries 1"));

  RunResult cleared = run_cli(base + "cache clear");
  CHECK(cleared.exit_code == 0);
  CHECK(has_line(cleared.out, "removed 1"));
  CHECK(has_line(run_cli(base + "cache stats").out, "entries 0"));
}
