// End-to-end tests of the command-line tool: output formats, exit codes,
// route agreement, the verify battery, and the cache contract.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "apoly/json_io.hpp"
#include "apoly/reference_data.hpp"
#include "apoly/render.hpp"
#include "apoly/riley_mednykh.hpp"

using namespace apoly;

namespace {

namespace fs = std::filesystem;

const std::string kCli = APOLY_CLI_PATH;
const fs::path kGoldens = APOLY_GOLDENS_DIR;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("apoly_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  if (!in) return {};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the CLI with the given arguments; `envs` is a prefix like
// "APOLY_CACHE_DIR=/x " for environment overrides.
RunResult run_cli(const std::string& args, const std::string& envs = {}) {
  static int counter = 0;
  const fs::path base =
      fs::temp_directory_path() / ("apoly_cli_io_" + std::to_string(::getpid()) + "_" +
                                   std::to_string(counter++));
  const fs::path out = base.string() + ".out";
  const fs::path err = base.string() + ".err";
  const std::string cmd = "env -u APOLY_CACHE_DIR " + envs + kCli + " " + args + " >" +
                          out.string() + " 2>" + err.string();
  const int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return r;
}

}  // namespace

TEST_CASE("compute: JSON output is the golden A_2 with diagnostics") {
  const RunResult r = run_cli("compute --n 1 --format json");
  REQUIRE(r.exit_code == 0);
  REQUIRE(poly_from_json(Json::parse(r.out)) == refdata::appendix_b_a2());
  REQUIRE(r.err.find("A_2:") != std::string::npos);
  REQUIRE(r.err.find("terms=") != std::string::npos);
  REQUIRE(r.err.find("degL=4") != std::string::npos);
  REQUIRE(r.err.find("hash=170010f9aa41d743") != std::string::npos);
}

TEST_CASE("compute: routes emit byte-identical JSON") {
  const RunResult a = run_cli("compute --n 1 --route closed --format json");
  const RunResult b = run_cli("compute --n 1 --route recursive-subst --format json");
  const RunResult c = run_cli("compute --n 1 --route closed-subst --format json");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  REQUIRE(c.exit_code == 0);
  REQUIRE(a.out == b.out);
  REQUIRE(a.out == c.out);
}

TEST_CASE("compute: usage errors exit 1") {
  REQUIRE(run_cli("compute --n 0").exit_code == 1);
  REQUIRE(run_cli("compute").exit_code == 1);
  REQUIRE(run_cli("compute --n 1 --route bogus").exit_code == 1);
  REQUIRE(run_cli("compute --n -1 --route closed").exit_code == 1);
  REQUIRE(run_cli("").exit_code == 1);
}

TEST_CASE("compute: --out writes the file, text and latex formats") {
  TempDir tmp;
  const fs::path out = tmp.path / "a2.tex";
  const RunResult r =
      run_cli("compute --n 1 --format latex --out " + out.string());
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.empty());
  REQUIRE(slurp(out) == render_latex(refdata::appendix_b_a2()) + "\n");
  const RunResult t = run_cli("compute --n 1 --format text");
  REQUIRE(t.out == render_text(refdata::appendix_b_a2()) + "\n");
}

TEST_CASE("compute: cache write, hit, override, corruption") {
  TempDir tmp;
  const fs::path cache_a = tmp.path / "a";
  const fs::path cache_b = tmp.path / "b";

  const std::string args = "compute --n 1 --route closed --format json --cache-dir ";
  const RunResult first = run_cli(args + cache_a.string());
  REQUIRE(first.exit_code == 0);
  REQUIRE(first.err.find("(from cache)") == std::string::npos);
  REQUIRE(fs::exists(cache_a / "a_poly_1_closed.json"));

  const RunResult second = run_cli(args + cache_a.string());
  REQUIRE(second.exit_code == 0);
  REQUIRE(second.err.find("(from cache)") != std::string::npos);
  REQUIRE(second.out == first.out);

  // environment variable wins over the flag
  const RunResult env_run =
      run_cli(args + cache_b.string(), "APOLY_CACHE_DIR=" + cache_a.string() + " ");
  REQUIRE(env_run.exit_code == 0);
  REQUIRE(env_run.err.find("(from cache)") != std::string::npos);
  REQUIRE_FALSE(fs::exists(cache_b / "a_poly_1_closed.json"));

  // corrupt the cached polynomial: the stored hash no longer matches
  const fs::path entry = cache_a / "a_poly_1_closed.json";
  std::string text = slurp(entry);
  const std::size_t at = text.find("\"c\": \"1\"");
  REQUIRE(at != std::string::npos);
  text.replace(at, 8, "\"c\": \"3\"");
  std::ofstream(entry) << text;
  const RunResult bad = run_cli(args + cache_a.string());
  REQUIRE(bad.exit_code == 1);
  REQUIRE(bad.err.find("a_poly_1_closed.json") != std::string::npos);
}

TEST_CASE("rm: verbatim P_2, P_-2, and the n = 0 convention") {
  const RunResult p2 = run_cli("rm --n 1");
  REQUIRE(p2.exit_code == 0);
  REQUIRE(p2.out == render_text(rm_p2()) + "\n");
  const RunResult pm2 = run_cli("rm --n -1");
  REQUIRE(pm2.exit_code == 0);
  REQUIRE(pm2.out == render_text(rm_pm2()) + "\n");
  const RunResult p0 = run_cli("rm --n 0");
  REQUIRE(p0.exit_code == 0);
  REQUIRE(p0.out == "1\n");
}

TEST_CASE("verify: battery passes and reports machine-readable JSON") {
  const RunResult r =
      run_cli("verify --max-n 2 --goldens-dir " + kGoldens.string());
  REQUIRE(r.exit_code == 0);
  const Json rep = Json::parse(r.out);
  REQUIRE(rep.at("pass").get<bool>());
  REQUIRE(rep.at("checks").is_array());
  REQUIRE_FALSE(rep["checks"].empty());
  for (const Json& c : rep["checks"]) {
    INFO(c.dump());
    REQUIRE(c.at("pass").get<bool>());
  }
}

TEST_CASE("verify: --max-n below 2 is a usage error") {
  REQUIRE(run_cli("verify --max-n 1 --goldens-dir " + kGoldens.string()).exit_code == 1);
}

TEST_CASE("verify: corrupted golden exits 3 naming the first failing identity") {
  TempDir tmp;
  for (const char* f : {"appendix_a.json", "appendix_b.json", "appendix_c.json"}) {
    fs::copy_file(kGoldens / f, tmp.path / f);
  }
  std::string text = slurp(tmp.path / "appendix_b.json");
  const std::size_t at = text.find("\"-1\"");
  REQUIRE(at != std::string::npos);
  text.replace(at, 4, "\"-2\"");
  std::ofstream(tmp.path / "appendix_b.json") << text;

  const RunResult r = run_cli("verify --max-n 2 --goldens-dir " + tmp.path.string());
  REQUIRE(r.exit_code == 3);
  REQUIRE(r.err.find("first failing identity:") != std::string::npos);
  REQUIRE(r.err.find("A2") != std::string::npos);
  const Json rep = Json::parse(r.out);
  REQUIRE_FALSE(rep.at("pass").get<bool>());
}
