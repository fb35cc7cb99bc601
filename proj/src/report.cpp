#include "fewdist/report.hpp"

#include "fewdist/classic_bounds.hpp"
#include "fewdist/lp_bounds.hpp"
#include "fewdist/reference_tables.hpp"
#include "fewdist/search_oracle.hpp"
#include "fewdist/spherical.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace fewdist {

using json = nlohmann::ordered_json;

namespace {

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return to_string(z);
}

json space_json(const SpaceSpec& space) {
  json j;
  j["kind"] = space.is_hamming() ? "hamming" : "johnson";
  j["n"] = space.n();
  if (space.is_johnson()) j["w"] = space.w();
  return j;
}

json bound_json(const BoundResult& b) {
  json j;
  j["method"] = to_string(b.method);
  j["applicable"] = b.applicable;
  j["value"] = b.value ? json(to_string(*b.value)) : json(nullptr);
  j["floored"] = b.floored ? integer_json(*b.floored) : json(nullptr);
  j["certificate"] = b.certificate;
  return j;
}

std::string set_string(const std::vector<int>& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "}";
}

// Left-aligned columns separated by two spaces.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], r[c].size());
      }
    std::ostringstream out;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
      }
      out << line << '\n';
    }
    return out.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string opt_string(const std::optional<Rational>& q) { return q ? to_string(*q) : "-"; }
std::string opt_string(const std::optional<Integer>& z) { return z ? to_string(*z) : "-"; }

CommandOutput finish(json doc, std::string table, CommandStatus status) {
  return {status, doc.dump(2) + "\n", std::move(table)};
}

int missing_distance(int w, const DistanceSet& d) {
  for (int x = 1; x <= w; ++x)
    if (!d.contains(x)) return x;
  return 0;
}

bool is_top_block(int w, const DistanceSet& d) {
  for (int i = 0; i < d.size(); ++i)
    if (d[i] != w - d.size() + 1 + i) return false;
  return true;
}

bool is_bottom_block(const DistanceSet& d) {
  for (int i = 0; i < d.size(); ++i)
    if (d[i] != i + 1) return false;
  return true;
}

void require_johnson(const SpaceSpec& space, BoundMethod m) {
  if (!space.is_johnson()) throw InvalidArgument(std::string("method ") + to_string(m) + " needs a Johnson space");
}

BoundResult single_bound(const SpaceSpec& space, const DistanceSet& d, BoundMethod m, json& extra) {
  const int s = d.size();
  switch (m) {
    case BoundMethod::Harmonic:
      return harmonic_bound(space, d);
    case BoundMethod::Conditional:
      return bm_conditional_bound(space, d);
    case BoundMethod::Lp: {
      DelsarteResult r = delsarte_lp(space, d);
      extra["lp_status"] = to_string(r.lp.status);
      json sol = json::array();
      for (const auto& f : r.lp.solution) sol.push_back(to_string(f));
      extra["lp_solution"] = sol;
      return r.bound;
    }
    case BoundMethod::Refined:
      require_johnson(space, m);
      return refined_general_bound(space.n(), space.w(), s);
    case BoundMethod::Ekr:
      require_johnson(space, m);
      if (!is_bottom_block(d) || s >= space.w()) throw InvalidArgument("ekr needs D = {1..s} with s < w");
      return ekr_bound(space.n(), space.w(), space.w() - s);
    case BoundMethod::Forbidden:
      require_johnson(space, m);
      if (s != space.w() - 1) throw InvalidArgument("forbidden needs |D| = w - 1");
      return forbidden_intersection_bound(space.n(), space.w(), space.w() - missing_distance(space.w(), d));
    case BoundMethod::Packing:
      require_johnson(space, m);
      if (!is_top_block(space.w(), d)) throw InvalidArgument("packing needs D = {w-s+1..w}");
      return johnson_packing_bound(space.n(), space.w(), s);
    case BoundMethod::Spherical: {
      if (!space.is_hamming() || s != 2) throw InvalidArgument("spherical needs a Hamming space and |D| = 2");
      Hamming2Upper h = hamming2_upper(space.n(), d[1], d[0]);
      return BoundResult::make(h.branch == "conditional" ? Method::Conditional : Method::Spherical, Rational(h.value),
                               h.branch);
    }
    case BoundMethod::Auto:
    case BoundMethod::Oracle:
    case BoundMethod::Det:
      break;
  }
  throw InternalError("single_bound called with a composite method");
}

}  // namespace

std::optional<BoundMethod> parse_bound_method(std::string_view name) {
  static const std::pair<std::string_view, BoundMethod> names[] = {
      {"auto", BoundMethod::Auto},         {"harmonic", BoundMethod::Harmonic},   {"conditional", BoundMethod::Conditional},
      {"lp", BoundMethod::Lp},             {"det", BoundMethod::Det},             {"refined", BoundMethod::Refined},
      {"ekr", BoundMethod::Ekr},           {"forbidden", BoundMethod::Forbidden}, {"packing", BoundMethod::Packing},
      {"spherical", BoundMethod::Spherical}, {"oracle", BoundMethod::Oracle},
  };
  for (const auto& [n, m] : names)
    if (n == name) return m;
  return std::nullopt;
}

const char* to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::Auto: return "auto";
    case BoundMethod::Harmonic: return "harmonic";
    case BoundMethod::Conditional: return "conditional";
    case BoundMethod::Lp: return "lp";
    case BoundMethod::Det: return "det";
    case BoundMethod::Refined: return "refined";
    case BoundMethod::Ekr: return "ekr";
    case BoundMethod::Forbidden: return "forbidden";
    case BoundMethod::Packing: return "packing";
    case BoundMethod::Spherical: return "spherical";
    case BoundMethod::Oracle: return "oracle";
  }
  return "?";
}

CommandOutput run_det_bound(int n, int w, const std::vector<int>& d) {
  if (w < 1 || w > n) throw InvalidArgument("det needs 1 <= w <= n");
  if (d.empty()) throw InvalidArgument("det needs a nonempty distance set");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] < 1 || d[i] > w || (i && d[i] <= d[i - 1]))
      throw InvalidArgument("distances must increase strictly within [1, w]");
  DetBoundCertificate c = det_bound_s(n, w, d);
  BoundResult b = det_bound_result(c);
  json doc;
  doc["command"] = "bound";
  doc["space"] = {{"kind", "johnson"}, {"n", n}, {"w", w}};
  doc["distances"] = d;
  doc["method"] = "det";
  doc["results"] = json::array({bound_json(b)});
  doc["conditions"] = c.conditions_met ? "met" : "failed";
  doc["degrees"] = c.degrees;
  json e = json::array();
  for (const auto& v : c.e_values) e.push_back(to_string(v));
  doc["E"] = e;
  doc["bound"] = b.value ? json(to_string(*b.value)) : json(nullptr);
  doc["floored"] = b.floored ? integer_json(*b.floored) : json(nullptr);
  std::string text = "degrees";
  for (int k : c.degrees) text += " " + std::to_string(k);
  text += "\nE =";
  for (const auto& v : c.e_values) text += " " + to_string(v);
  text += "\nconditions " + std::string(c.conditions_met ? "met" : "failed") + "\n";
  if (b.value) text += "bound " + to_string(*b.value) + " (floored " + to_string(*b.floored) + ")\n";
  return finish(doc, text, b.applicable ? CommandStatus::Ok : CommandStatus::Gap);
}

CommandOutput run_bound(const SpaceSpec& space, const DistanceSet& d, BoundMethod method, std::uint64_t budget) {
  if (method == BoundMethod::Det) {
    if (!space.is_johnson()) throw InvalidArgument("method det needs a Johnson space");
    return run_det_bound(space.n(), space.w(), d.values());
  }
  json doc;
  doc["command"] = "bound";
  doc["space"] = space_json(space);
  doc["distances"] = d.values();
  doc["method"] = to_string(method);
  TextTable table({"method", "applicable", "value", "floored", "certificate"});
  auto add_row = [&](const BoundResult& b) {
    table.add({to_string(b.method), b.applicable ? "yes" : "no", opt_string(b.value), opt_string(b.floored),
               b.certificate});
  };

  if (method == BoundMethod::Oracle) {
    CliqueResult c = max_clique(CompatGraph(space, d), budget);
    json w = json::array();
    for (Word x : c.witness) {
      Code one(space.n(), {x});
      w.push_back(one.word_string(0));
    }
    const bool valid = validate_witness(space, c.witness, d);
    if (!valid) throw InternalError("clique witness fails validation");
    doc["results"] = json::array();
    doc["bound"] = std::to_string(c.size);
    doc["floored"] = c.size;
    doc["exact"] = !c.budget_exhausted;
    doc["witness"] = w;
    doc["nodes"] = c.nodes;
    doc["budget_exhausted"] = c.budget_exhausted;
    table.add({"oracle", "yes", std::to_string(c.size), std::to_string(c.size),
               c.budget_exhausted ? "budget exhausted, lower bound only" : "exhaustive search"});
    return finish(doc, table.render(), c.budget_exhausted ? CommandStatus::Budget : CommandStatus::Ok);
  }

  std::vector<BoundResult> results;
  if (method == BoundMethod::Auto) {
    results = set_report(space, d).bounds;
  } else {
    json extra = json::object();
    results.push_back(single_bound(space, d, method, extra));
    doc.update(extra);
  }
  json arr = json::array();
  const BoundResult* best = nullptr;
  for (const auto& b : results) {
    arr.push_back(bound_json(b));
    add_row(b);
    if (b.applicable && (!best || *b.floored < *best->floored)) best = &b;
  }
  doc["results"] = arr;
  if (best) {
    doc["bound"] = to_string(*best->value);
    doc["floored"] = integer_json(*best->floored);
    doc["best_method"] = to_string(best->method);
  } else {
    doc["bound"] = nullptr;
    doc["floored"] = nullptr;
  }
  std::string text = table.render();
  text += best ? "bound " + to_string(*best->value) + " (floored " + to_string(*best->floored) + ")\n"
               : std::string("no applicable bound\n");
  return finish(doc, text, best ? CommandStatus::Ok : CommandStatus::Gap);
}

CommandOutput run_exact(const SpaceSpec& space, int s) {
  Verdict v = space.is_johnson() ? exact_value_pipeline(space, s)
              : s == 2           ? hamming_2dist_exact(space.n())
                                 : hamming_lp_pipeline(space.n(), s);
  json doc;
  doc["command"] = "exact";
  doc["space"] = space_json(space);
  doc["s"] = s;
  doc["exact"] = v.exact;
  doc["value"] = v.exact ? integer_json(v.lower) : json(nullptr);
  doc["lower"] = integer_json(v.lower);
  doc["upper"] = integer_json(v.upper);
  doc["worst_set"] = v.sets[v.worst_set].distances;
  json per = json::array();
  TextTable table({"distances", "best", "method"});
  for (const auto& r : v.sets) {
    json j;
    j["distances"] = r.distances;
    j["best"] = integer_json(r.best);
    j["method"] = to_string(r.best_method);
    if (r.lrs) j["lrs_admissible"] = r.lrs->admissible;
    json b = json::array();
    for (const auto& x : r.bounds) b.push_back(bound_json(x));
    j["bounds"] = b;
    per.push_back(j);
    table.add({set_string(r.distances), to_string(r.best), to_string(r.best_method)});
  }
  doc["per_set"] = per;
  std::string text = space.describe() + ", s = " + std::to_string(s) + "\n" + table.render();
  text += "lower " + to_string(v.lower) + ", upper " + to_string(v.upper) + (v.exact ? ", exact\n" : ", gap\n");
  return finish(doc, text, v.exact ? CommandStatus::Ok : CommandStatus::Gap);
}

CommandOutput run_table1(int n_max) {
  if (n_max < 35) throw InvalidArgument("table1 needs n_max >= 35");
  auto rows = table1_check(n_max);
  json doc;
  doc["command"] = "table1";
  doc["n_max"] = n_max;
  json arr = json::array();
  TextTable table({"w", "s", "n", "expected", "lower", "upper", "result"});
  bool all = true;
  for (const auto& r : rows) {
    arr.push_back({{"w", r.w}, {"s", r.s}, {"n", r.n}, {"expected", integer_json(r.expected)},
                   {"lower", integer_json(r.lower)}, {"upper", integer_json(r.upper)}, {"pass", r.pass}});
    table.add({std::to_string(r.w), std::to_string(r.s), std::to_string(r.n), to_string(r.expected),
               to_string(r.lower), to_string(r.upper), r.pass ? "PASS" : "FAIL"});
    all = all && r.pass;
  }
  doc["rows"] = arr;
  doc["all_pass"] = all;
  return finish(doc, table.render(), all ? CommandStatus::Ok : CommandStatus::Gap);
}

CommandOutput run_appendix_check(int w, int s, int n_max) {
  AppendixReport rep = appendix_check(w, s, n_max);
  json doc;
  doc["command"] = "appendix-check";
  doc["w"] = w;
  doc["s"] = s;
  doc["n_max"] = n_max;
  doc["all_ok"] = rep.all_ok;
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"distances", r.distances},
                    {"n", r.n},
                    {"conditions_met", r.conditions_met},
                    {"computed", r.computed ? json(to_string(*r.computed)) : json(nullptr)},
                    {"expected", to_string(r.expected)},
                    {"ok", r.ok}});
  doc["rows"] = rows;
  json below = json::array();
  for (const auto& b : rep.below)
    below.push_back({{"distances", b.distances}, {"n", b.n}, {"conditions_met", b.conditions_met}});
  doc["below"] = below;

  // One summary line per distance set.
  TextTable table({"distances", "n range", "matching", "below threshold"});
  std::vector<std::vector<int>> order;
  for (const auto& r : rep.rows)
    if (std::find(order.begin(), order.end(), r.distances) == order.end()) order.push_back(r.distances);
  for (const auto& d : order) {
    int lo = 0, hi = 0, good = 0, total = 0;
    for (const auto& r : rep.rows) {
      if (r.distances != d) continue;
      if (total++ == 0) lo = r.n;
      hi = r.n;
      good += r.ok;
    }
    std::string under = "-";
    for (const auto& b : rep.below)
      if (b.distances == d)
        under = "n=" + std::to_string(b.n) + (b.conditions_met ? " conditions hold" : " conditions fail");
    table.add({set_string(d), std::to_string(lo) + ".." + std::to_string(hi),
               std::to_string(good) + "/" + std::to_string(total), under});
  }
  return finish(doc, table.render(), rep.all_ok ? CommandStatus::Ok : CommandStatus::Gap);
}

CommandOutput run_oracle(const SpaceSpec& space, int s, std::uint64_t budget) {
  ExhaustiveResult r = exhaustive_A(space, s, budget);
  const bool valid = r.best_distances.empty() || validate_witness(space, r.witness, DistanceSet(space, r.best_distances));
  if (!valid) throw InternalError("oracle witness fails validation");
  json doc;
  doc["command"] = "oracle";
  doc["space"] = space_json(space);
  doc["s"] = s;
  doc["value"] = r.value;
  doc["distances"] = r.best_distances;
  json words = json::array();
  std::string text;
  for (Word x : r.witness) {
    std::string wstr = Code(space.n(), {x}).word_string(0);
    words.push_back(wstr);
    text += wstr + "\n";
  }
  doc["witness"] = words;
  doc["witness_valid"] = valid;
  doc["budget_exhausted"] = r.budget_exhausted;
  doc["nodes"] = r.nodes;
  std::string head = space.describe() + ", s = " + std::to_string(s) + ": " + std::to_string(r.value) +
                     (r.budget_exhausted ? " (budget exhausted, lower bound only)" : "") + ", D = " +
                     set_string(r.best_distances) + "\n";
  return finish(doc, head + text, r.budget_exhausted ? CommandStatus::Budget : CommandStatus::Ok);
}

CommandOutput run_sdp_check(const SpaceSpec& space, const Code& code, const std::optional<DistanceSet>& d,
                            const std::optional<TripleDistribution>& imported) {
  if (!code.fits(space)) throw InvalidArgument("code does not fit " + space.describe());
  std::vector<int> dv;
  if (d) {
    dv = d->values();
  } else {
    for (int x : code.distance_set(space.is_johnson())) dv.push_back(x);
  }
  if (dv.empty()) throw InvalidArgument("sdp-check needs a code with at least two words or explicit distances");
  DistanceSet ds(space, dv);
  if (imported && !(imported->space() == space)) throw InvalidArgument("imported distribution is for another space");
  TripleDistribution x = imported ? *imported : triple_distribution_from_code(code, space);
  auto blocks = build_matrices(x);
  FeasibilityReport rep = feasibility_check(x, ds, blocks);
  const Rational obj = sdp_objective(x);
  const bool size_match = obj == Rational(static_cast<unsigned long>(code.size()));

  json doc;
  doc["command"] = "sdp-check";
  doc["space"] = space_json(space);
  doc["distances"] = dv;
  doc["size"] = code.size();
  doc["ok"] = rep.ok;
  doc["condition"] = rep.condition;
  doc["violation"] = rep.violation;
  json arr = json::array();
  TextTable table({"block", "dim", "psd"});
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    const bool psd = i < rep.block_psd.size() && rep.block_psd[i];
    json j{{"k", b.k}, {"first_row", b.first_row}, {"dim", b.matrix.rows()}, {"psd", psd}};
    std::string name = "B_" + std::to_string(b.k);
    if (space.is_johnson()) {
      j["l"] = b.l;
      name = "B_{" + std::to_string(b.k) + "," + std::to_string(b.l) + "}";
    }
    arr.push_back(j);
    table.add({name, std::to_string(b.matrix.rows()), i < rep.block_psd.size() ? (psd ? "yes" : "no") : "-"});
  }
  doc["blocks"] = arr;
  doc["objective"] = to_string(obj);
  doc["objective_matches_size"] = size_match;

  std::string text = space.describe() + ", D = " + set_string(dv) + ", |C| = " + std::to_string(code.size()) + "\n";
  text += table.render();
  text += "objective " + to_string(obj) + "\n";
  text += rep.ok ? std::string("feasible\n")
                 : "infeasible: condition " + std::to_string(rep.condition) + ": " + rep.violation + "\n";
  return finish(doc, text, rep.ok ? CommandStatus::Ok : CommandStatus::Gap);
}

CommandOutput run_thm11(int n_min, int n_max) {
  if (n_min < 6 || n_max < n_min) throw InvalidArgument("thm11 needs 6 <= n_min <= n_max");
  auto rows = thm11_check(n_min, n_max);
  json doc;
  doc["command"] = "thm11";
  doc["n_min"] = n_min;
  doc["n_max"] = n_max;
  json arr = json::array();
  TextTable table({"n", "1 + binom(n,2)", "upper", "result"});
  bool all = true;
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n}, {"value", integer_json(r.value)}, {"upper", integer_json(r.upper)}, {"exact", r.exact}});
    table.add({std::to_string(r.n), to_string(r.value), to_string(r.upper), r.exact ? "PASS" : "FAIL"});
    all = all && r.exact;
  }
  doc["rows"] = arr;
  doc["all_exact"] = all;
  return finish(doc, table.render(), all ? CommandStatus::Ok : CommandStatus::Gap);
}

}  // namespace fewdist
