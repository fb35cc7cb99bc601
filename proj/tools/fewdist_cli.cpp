#include "fewdist/fewdist.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kUsage = 2;

struct SpaceArgs {
  std::string kind = "hamming";
  int n = 0;
  int w = 0;
};

void add_space_options(CLI::App* cmd, SpaceArgs& a) {
  cmd->add_option("--space", a.kind, "hamming or johnson")->check(CLI::IsMember({"hamming", "johnson"}));
  cmd->add_option("--n", a.n, "word length")->required();
  cmd->add_option("--w", a.w, "weight (Johnson spaces)");
}

struct SpaceDeleter {
  void operator()(fd_space* s) const { fd_space_free(s); }
};
struct CodeDeleter {
  void operator()(fd_code* c) const { fd_code_free(c); }
};
struct ResultDeleter {
  void operator()(fd_result* r) const { fd_result_free(r); }
};
using SpacePtr = std::unique_ptr<fd_space, SpaceDeleter>;
using CodePtr = std::unique_ptr<fd_code, CodeDeleter>;
using ResultPtr = std::unique_ptr<fd_result, ResultDeleter>;

int report_error(fd_status s) {
  std::cerr << "error: " << fd_last_error() << '\n';
  return s == FD_ERR_INTERNAL ? static_cast<int>(FD_ERR_INTERNAL) : kUsage;
}

std::optional<SpacePtr> make_space(const SpaceArgs& a, int& exit_code) {
  fd_space* raw = nullptr;
  fd_status s = a.kind == "johnson" ? fd_space_johnson(a.n, a.w, &raw) : fd_space_hamming(a.n, &raw);
  if (s != FD_OK) {
    exit_code = report_error(s);
    return std::nullopt;
  }
  return SpacePtr(raw);
}

int emit(fd_status s, fd_result* raw, const std::string& format) {
  ResultPtr r(raw);
  if (!r) return report_error(s);
  std::cout << (format == "table" ? fd_result_table(r.get()) : fd_result_json(r.get()));
  std::cout.flush();
  return static_cast<int>(s);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds and exact values for few-distance binary codes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fd_version()));
  std::string format = "json";
  app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  std::uint64_t budget = fd_default_budget();

  SpaceArgs bound_space;
  std::vector<int> distances;
  std::string method = "auto";
  auto* bound = app.add_subcommand("bound", "upper bounds for codes with a prescribed distance set");
  add_space_options(bound, bound_space);
  bound->add_option("--distances", distances, "comma-separated distances")->delimiter(',')->required();
  bound->add_option("--method", method,
                    "auto, harmonic, conditional, lp, det, refined, ekr, forbidden, packing, spherical or oracle");
  bound->add_option("--budget", budget, "node budget for the oracle method");
  bound->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  SpaceArgs exact_space;
  int exact_s = 0;
  auto* exact = app.add_subcommand("exact", "exact value of A(space, s) where the bounds meet");
  add_space_options(exact, exact_space);
  exact->add_option("--s", exact_s, "number of distances")->required();
  exact->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  int table_n_max = 46;
  auto* table1 = app.add_subcommand("table1", "verify the Johnson exact-value table up to --n-max");
  table1->add_option("--n-max", table_n_max, "largest n (at least 35)");
  table1->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  int app_w = 0, app_s = 0, app_n_max = 60;
  auto* appendix = app.add_subcommand("appendix-check", "closed-form determinant bounds for one (w, s) block");
  appendix->add_option("--w", app_w, "weight")->required();
  appendix->add_option("--s", app_s, "number of distances")->required();
  appendix->add_option("--n-max", app_n_max, "largest n");
  appendix->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  SpaceArgs oracle_space;
  int oracle_s = 0;
  auto* oracle = app.add_subcommand("oracle", "exhaustive maximum over all distance sets of size s");
  add_space_options(oracle, oracle_space);
  oracle->add_option("--s", oracle_s, "number of distances")->required();
  oracle->add_option("--budget", budget, "node budget per distance set");
  oracle->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  std::string code_path, distribution_path, export_path, sdp_kind = "hamming";
  int sdp_w = 0;
  std::vector<int> sdp_distances;
  auto* sdp = app.add_subcommand("sdp-check", "build and verify the semidefinite certificate of a code");
  sdp->add_option("--code", code_path, "code file, one 0/1 word per line")->required();
  sdp->add_option("--space", sdp_kind, "hamming or johnson")->check(CLI::IsMember({"hamming", "johnson"}));
  sdp->add_option("--w", sdp_w, "weight (Johnson; defaults to the code's weight)");
  sdp->add_option("--distances", sdp_distances, "declared distance set")->delimiter(',');
  sdp->add_option("--distribution", distribution_path, "check this distribution JSON instead");
  sdp->add_option("--export", export_path, "write the code's distribution JSON here");
  sdp->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  int thm_n_min = 6, thm_n_max = 60;
  auto* thm11 = app.add_subcommand("thm11", "two-distance Hamming values 1 + binom(n, 2)");
  thm11->add_option("--n-min", thm_n_min, "smallest n");
  thm11->add_option("--n-max", thm_n_max, "largest n");
  thm11->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  int code = 0;
  fd_result* out = nullptr;
  // The call must finish writing `out` before emit reads it.
  auto finish = [&](fd_status s) { return emit(s, out, format); };

  if (*bound) {
    if (method == "det" && bound_space.kind == "johnson")
      return finish(fd_bound_det(bound_space.n, bound_space.w, distances.data(), distances.size(), &out));
    auto space = make_space(bound_space, code);
    if (!space) return code;
    return finish(fd_bound(space->get(), distances.data(), distances.size(), method.c_str(), budget, &out));
  }
  if (*exact) {
    auto space = make_space(exact_space, code);
    if (!space) return code;
    return finish(fd_exact(space->get(), exact_s, &out));
  }
  if (*table1) return finish(fd_table1(table_n_max, &out));
  if (*appendix) return finish(fd_appendix_check(app_w, app_s, app_n_max, &out));
  if (*oracle) {
    auto space = make_space(oracle_space, code);
    if (!space) return code;
    return finish(fd_oracle(space->get(), oracle_s, budget, &out));
  }
  if (*thm11) return finish(fd_thm11(thm_n_min, thm_n_max, &out));
  if (*sdp) {
    fd_code* raw_code = nullptr;
    fd_status s = fd_code_load_file(code_path.c_str(), &raw_code);
    if (s != FD_OK) return report_error(s);
    CodePtr c(raw_code);
    SpaceArgs a{sdp_kind, fd_code_length(c.get()), sdp_w};
    if (a.kind == "johnson" && a.w == 0) {
      // Take the weight from the first word; the space check rejects mixed weights.
      std::ifstream in(code_path);
      std::string line;
      while (std::getline(in, line) && line.find_first_of("01") == std::string::npos) {
      }
      for (char ch : line) a.w += ch == '1';
    }
    auto space = make_space(a, code);
    if (!space) return code;
    if (!export_path.empty()) {
      fd_result* dist = nullptr;
      fd_status ds = fd_sdp_distribution(space->get(), c.get(), &dist);
      ResultPtr holder(dist);
      if (!dist) return report_error(ds);
      std::ofstream(export_path) << fd_result_json(dist);
    }
    std::string distribution;
    if (!distribution_path.empty() && !read_file(distribution_path, distribution)) {
      std::cerr << "error: cannot read " << distribution_path << '\n';
      return kUsage;
    }
    return finish(fd_sdp_check(space->get(), c.get(), sdp_distances.empty() ? nullptr : sdp_distances.data(),
                               sdp_distances.size(), distribution.empty() ? nullptr : distribution.c_str(), &out));
  }
  return kUsage;
}
