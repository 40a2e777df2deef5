// Command-line front end: compute A-polynomials, run the verification
// battery, and print Riley–Mednykh polynomials.
//
// Exit codes: 0 success; 1 usage or I/O errors (including n = 0 and cache
// integrity problems); 2 NotPolynomial / RedundantFactor (the computation
// itself detected a broken invariant); 3 verification failure (first failing
// identity named on stderr).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "apoly/a_polynomial.hpp"
#include "apoly/json_io.hpp"
#include "apoly/render.hpp"
#include "apoly/riley_mednykh.hpp"
#include "apoly/verify.hpp"

namespace {

using namespace apoly;

std::string render_body(const Poly& p, const std::string& format) {
  if (format == "json") return poly_to_json(p).dump(1) + "\n";
  if (format == "latex") return render_latex(p) + "\n";
  return render_text(p) + "\n";
}

int emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 1;
  }
  f << body;
  if (!f) {
    std::cerr << "error: write to " << out_path << " failed\n";
    return 1;
  }
  return 0;
}

int do_compute(int n, const std::string& route_str, const std::string& format,
               const std::string& out_path, std::string cache_dir) {
  if (n == 0) {
    std::cerr << "error: --n must be nonzero (A_0 = 1 identically)\n";
    return 1;
  }
  const std::optional<Route> route = parse_route(route_str);
  if (!route) {
    std::cerr << "error: unknown route '" << route_str << "'\n";
    return 1;
  }
  if (const char* env = std::getenv("APOLY_CACHE_DIR"); env && *env) cache_dir = env;
  try {
    Poly a;
    std::string hash;
    bool cached = false;
    if (!cache_dir.empty()) {
      if (std::optional<Poly> hit = cache_read(cache_dir, n, route_str)) {
        a = std::move(*hit);
        hash = canonical_hash(a);
        cached = true;
      }
    }
    if (!cached) {
      APolyRecord rec = a_polynomial(n, *route);
      a = std::move(rec.a);
      hash = std::move(rec.canonical_hash);
      if (!cache_dir.empty()) cache_write(cache_dir, n, route_str, a, hash);
    }
    const int rc = emit(render_body(a, format), out_path);
    if (rc != 0) return rc;
    std::cerr << "A_" << 2 * n << ": route=" << route_str << " terms=" << a.term_count()
              << " degL=" << a.degree_in(Var::L) << " degM=" << a.degree_in(Var::M)
              << " hash=" << hash << (cached ? " (from cache)" : "") << "\n";
    return 0;
  } catch (const NotPolynomial& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RedundantFactor& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int do_rm(int n, const std::string& format, const std::string& out_path) {
  try {
    return emit(render_body(rm_recursive(n).poly, format), out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int do_verify(int max_n, bool oracle, const std::string& goldens_dir) {
  if (max_n < 2) {
    std::cerr << "error: --max-n must be at least 2\n";
    return 1;
  }
  const std::vector<CheckResult> checks = run_verify(goldens_dir, max_n, oracle);
  Json rep;
  rep["pass"] = true;
  rep["checks"] = Json::array();
  const CheckResult* first_fail = nullptr;
  for (const CheckResult& c : checks) {
    Json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    rep["checks"].push_back(std::move(jc));
    if (!c.pass) {
      rep["pass"] = false;
      if (!first_fail) first_fail = &c;
    }
  }
  std::cout << rep.dump(1) << "\n";
  if (first_fail) {
    std::cerr << "first failing identity: " << first_fail->name;
    if (!first_fail->detail.empty()) std::cerr << " (" << first_fail->detail << ")";
    std::cerr << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact A-polynomial A_2n(L, M) of the two-bridge knot C(2n, 4).\n"
               "The --n flag is n itself (the knot is C(2n, 4)), not 2n."};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Compute A_2n(L, M) by a chosen route");
  int c_n = 0;
  std::string c_route = "closed", c_format = "text", c_out, c_cache;
  compute->add_option("--n", c_n, "n in C(2n, 4); any nonzero integer")->required();
  compute->add_option("--route", c_route, "closed | recursive-subst | closed-subst")
      ->check(CLI::IsMember({"closed", "recursive-subst", "closed-subst"}));
  compute->add_option("--format", c_format, "text | latex | json")
      ->check(CLI::IsMember({"text", "latex", "json"}));
  compute->add_option("--out", c_out, "Write output to this file instead of stdout");
  compute->add_option("--cache-dir", c_cache,
                      "Result cache directory (APOLY_CACHE_DIR env overrides)");

  auto* verify = app.add_subcommand("verify", "Run the exact identity battery");
  int v_max_n = 4;
  bool v_oracle = false;
  std::string v_goldens = "goldens";
  verify->add_option("--max-n", v_max_n, "Largest n for per-n identity checks (>= 2)");
  verify->add_flag("--oracle", v_oracle, "Also run the representation oracle");
  verify->add_option("--goldens-dir", v_goldens, "Directory with the golden JSON files");

  auto* rm = app.add_subcommand("rm", "Print the Riley-Mednykh polynomial P_2n(x, M)");
  int r_n = 0;
  std::string r_format = "text", r_out;
  rm->add_option("--n", r_n, "n in C(2n, 4); n = 0 prints 1")->required();
  rm->add_option("--format", r_format, "text | latex | json")
      ->check(CLI::IsMember({"text", "latex", "json"}));
  rm->add_option("--out", r_out, "Write output to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (compute->parsed()) return do_compute(c_n, c_route, c_format, c_out, c_cache);
  if (verify->parsed()) return do_verify(v_max_n, v_oracle, v_goldens);
  if (rm->parsed()) return do_rm(r_n, r_format, r_out);
  std::cerr << "error: no subcommand\n";
  return 1;
}
