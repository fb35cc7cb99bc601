#include "fewdist/reference_tables.hpp"

#include "parallel.hpp"

namespace fewdist {

namespace {

Rational pw(const Rational& n, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= n;
  return r;
}

Rational p7(const Rational& n) {
  return 105 * pw(n, 6) - 9380 * pw(n, 5) + 335496 * pw(n, 4) - 6191744 * pw(n, 3) + 62472912 * n * n -
         327751616 * n + 699935232;
}

Rational q7(const Rational& n) { return 8 * pw(n, 4) - 504 * pw(n, 3) + 10997 * n * n - 100866 * n + 332240; }

}  // namespace

const std::vector<ClosedFormEntry>& closed_form_entries() {
  static const std::vector<ClosedFormEntry> entries{
    {4, 2, {1, 2}, 9, [](const Rational& n) -> Rational { return (n-2)*(n-3)/2; }},
    {4, 2, {2, 3}, 11, [](const Rational& n) -> Rational { return (n-2)*(n-1)*(2*n*n-28*n+93)/(3*(3*n*n-41*n+142)); }},
    {4, 2, {2, 4}, 12, [](const Rational& n) -> Rational { return n*(n-2)/8; }},
    {4, 2, {3, 4}, 6, [](const Rational& n) -> Rational { return n*(n-1)/12; }},
    {5, 2, {1, 2}, 12, [](const Rational& n) -> Rational { return (n-4)*(n-3)/2; }},
    {5, 2, {2, 3}, 17, [](const Rational& n) -> Rational { return (n-3)*(n-2)*(5*n*n-95*n+408)/(6*(3*n*n-55*n+258)); }},
    {5, 2, {2, 4}, 14, [](const Rational& n) -> Rational { return (n-3)*(n-1)*(15*pw(n, 3)-420*n*n+3764*n-10832)/(8*(8*pw(n, 3)-236*n*n+2265*n-7062)); }},
    {5, 2, {3, 4}, 18, [](const Rational& n) -> Rational { return (n-2)*(n-1)*(5*n*n-105*n+486)/(12*(3*n*n-59*n+306)); }},
    {5, 2, {4, 5}, 7, [](const Rational& n) -> Rational { return (n-1)*n/20; }},
    {6, 2, {1, 2}, 15, [](const Rational& n) -> Rational { return (n-4)*(n-5)/2; }},
    {6, 2, {2, 3}, 23, [](const Rational& n) -> Rational { return (n-3)*(n-4)*(n*n-24*n+125)/(3*(n*n-23*n+136)); }},
    {6, 2, {2, 4}, 35, [](const Rational& n) -> Rational { return (n-2)*(n-4)*(3*pw(n, 3)-104*n*n+1145*n-4020)/(8*(n-12)*(n*n-27*n+167)); }},
    {6, 2, {3, 4}, 28, [](const Rational& n) -> Rational { return (n-2)*(n-3)*(5*pw(n, 4)-240*pw(n, 3)+4019*n*n-28528*n+73488)/(8*(3*pw(n, 4)-136*pw(n, 3)+2334*n*n-17831*n+50916)); }},
    {6, 2, {3, 6}, 27, [](const Rational& n) -> Rational { return n*(n-3)*(5*n*n-109*n+636)/(36*(n*n-32*n+237)); }},
    {6, 2, {4, 5}, 27, [](const Rational& n) -> Rational { return (n-1)*(n-2)*(n*n-30*n+181)/(10*(n*n-27*n+200)); }},
    {6, 2, {4, 6}, 28, [](const Rational& n) -> Rational { return n*(n-2)*(5*n-68)/(24*(3*n-56)); }},
    {6, 2, {5, 6}, 8, [](const Rational& n) -> Rational { return n*(n-1)/30; }},
    {4, 3, {1, 2, 3}, 8, [](const Rational& n) -> Rational { return (n-1)*(n-2)*(n-3)/6; }},
    {4, 3, {1, 3, 4}, 11, [](const Rational& n) -> Rational { return n*(n-1)*(n-3)*(n-8)/(24*(n-6)); }},
    {4, 3, {2, 3, 4}, 7, [](const Rational& n) -> Rational { return n*(n-1)*(n-2)/24; }},
    {5, 3, {1, 2, 3}, 12, [](const Rational& n) -> Rational { return (n-2)*(n-3)*(n-4)/6; }},
    {5, 3, {1, 3, 4}, 21, [](const Rational& n) -> Rational { return (n-1)*(n-2)*(n-4)*(2*n*n-43*n+219)/(12*(3*n*n-53*n+244)); }},
    {5, 3, {2, 3, 4}, 12, [](const Rational& n) -> Rational { return (n-1)*(n-2)*(n-3)*(5*pw(n, 3)-125*n*n+1050*n-2904)/(24*(4*pw(n, 3)-99*n*n+819*n-2274)); }},
    {5, 3, {2, 3, 5}, 20, [](const Rational& n) -> Rational { return n*(n-2)*(n-3)*(2*n*n-45*n+229)/(30*(3*n*n-55*n+254)); }},
    {5, 3, {3, 4, 5}, 8, [](const Rational& n) -> Rational { return n*(n-1)*(n-2)/60; }},
    {6, 3, {1, 2, 3}, 16, [](const Rational& n) -> Rational { return (n-3)*(n-4)*(n-5)/6; }},
    {6, 3, {1, 3, 4}, 31, [](const Rational& n) -> Rational { return (n-2)*(n-3)*(n-5)*(5*n*n-145*n+932)/(24*(3*n*n-70*n+433)); }},
    {6, 3, {2, 3, 4}, 19, [](const Rational& n) -> Rational { return (n-2)*(n-3)*(n-4)*(pw(n, 3)-32*n*n+347*n-1220)/(8*(n-12)*(2*n*n-39*n+199)); }},
    {6, 3, {2, 3, 5}, 22, [](const Rational& n) -> Rational { return (n-1)*(n-3)*(n-4)*(3*pw(n, 4)-149*pw(n, 3)+2660*n*n-20293*n+55840)/(15*(5*pw(n, 4)-230*pw(n, 3)+3909*n*n-29144*n+80432)); }},
    {6, 3, {2, 4, 6}, 26, [](const Rational& n) -> Rational { return n*(n-2)*(n-4)/48; }},
    {6, 3, {3, 4, 5}, 15, [](const Rational& n) -> Rational { return (n-1)*(n-2)*(n-3)*(pw(n, 3)-34*n*n+401*n-1524)/(40*(n-13)*(n*n-20*n+111)); }},
    {6, 3, {3, 4, 6}, 28, [](const Rational& n) -> Rational { return n*(n-2)*(n-3)*(5*n*n-165*n+1132)/(72*(6*n*n-155*n+1036)); }},
    {6, 3, {3, 5, 6}, 29, [](const Rational& n) -> Rational { return n*(n-1)*(n-3)/90; }},
    {6, 3, {4, 5, 6}, 9, [](const Rational& n) -> Rational { return n*(n-1)*(n-2)/120; }},
    {7, 3, {1, 2, 3}, 20, [](const Rational& n) -> Rational { return (n-4)*(n-5)*(n-6)/6; }},
    {7, 3, {1, 3, 4}, 41, [](const Rational& n) -> Rational { return (n-3)*(n-4)*(n-6)*(2*n*n-73*n+555)/(24*(n*n-29*n+225)); }},
    {7, 3, {2, 3, 4}, 25, [](const Rational& n) -> Rational { return (n-3)*(n-4)*(n-5)*(7*pw(n, 3)-273*n*n+3626*n-15360)/(24*(4*pw(n, 3)-153*n*n+1973*n-8640)); }},
    {7, 3, {2, 3, 5}, 23, [](const Rational& n) -> Rational { return (n-2)*(n-4)*(n-5)*(28*pw(n, 4)-1673*pw(n, 3)+36204*n*n-335277*n+1114398)/(30*(15*pw(n, 4)-880*pw(n, 3)+18907*n*n-177514*n+616824)); }},
    {7, 3, {2, 4, 6}, 29, [](const Rational& n) -> Rational { return (n-1)*(n-3)*(n-5)*p7(n)/(144*(2*n*n-57*n+398)*q7(n)); }},
    {7, 3, {3, 4, 5}, 27, [](const Rational& n) -> Rational { return (n-2)*(n-3)*(n-4)*(7*pw(n, 6)-539*pw(n, 5)+17507*pw(n, 4)-302361*pw(n, 3)+2903826*n*n-14643760*n+30251400)/(40*(5*pw(n, 6)-375*pw(n, 5)+11786*pw(n, 4)-198771*pw(n, 3)+1896155*n*n-9689568*n+20692440)); }},
    {7, 3, {3, 4, 6}, 34, [](const Rational& n) -> Rational { return (n-1)*(n-3)*(n-4)*(7*pw(n, 5)-560*pw(n, 4)+17017*pw(n, 3)-246980*n*n+1720516*n-4621280)/(72*(4*pw(n, 5)-291*pw(n, 4)+8382*pw(n, 3)-119717*n*n+848126*n-2384080)); }},
    {7, 3, {3, 4, 7}, 36, [](const Rational& n) -> Rational { return n*(n-3)*(n-4)*(3*pw(n, 4)-200*pw(n, 3)+4773*n*n-48316*n+176580)/(168*(pw(n, 4)-68*pw(n, 3)+1664*n*n-17557*n+67710)); }},
    {7, 3, {3, 5, 6}, 50, [](const Rational& n) -> Rational { return (n-1)*(n-2)*(n-4)*(28*pw(n, 4)-1827*pw(n, 3)+43176*n*n-432251*n+1535730)/(90*(15*pw(n, 4)-910*pw(n, 3)+20839*n*n-212584*n+809256)); }},
    {7, 3, {4, 5, 6}, 20, [](const Rational& n) -> Rational { return (n-1)*(n-2)*(n-3)*(7*pw(n, 3)-315*n*n+5096*n-25392)/(120*(4*pw(n, 3)-171*n*n+2543*n-13548)); }},
    {7, 3, {4, 6, 7}, 43, [](const Rational& n) -> Rational { return n*(n-1)*(n-3)*(5*n-94)/(168*(4*n-87)); }},
    {7, 3, {5, 6, 7}, 10, [](const Rational& n) -> Rational { return n*(n-1)*(n-2)/210; }},
    {5, 4, {1, 2, 3, 4}, 10, [](const Rational& n) -> Rational { return (n-1)*(n-2)*(n-3)*(n-4)/24; }},
    {5, 4, {2, 3, 4, 5}, 9, [](const Rational& n) -> Rational { return n*(n-1)*(n-2)*(n-3)/120; }},
    {6, 4, {1, 2, 3, 4}, 15, [](const Rational& n) -> Rational { return (n-2)*(n-3)*(n-4)*(n-5)/24; }},
    {6, 4, {1, 4, 5, 6}, 17, [](const Rational& n) -> Rational { return n*(n-1)*(n-2)*(n-5)*(n*n-23*n+136)/(240*(n*n-24*n+125)); }},
    {6, 4, {2, 3, 4, 5}, 15, [](const Rational& n) -> Rational { return (n-1)*(n-2)*(n-3)*(n-4)*(pw(n, 4)-39*pw(n, 3)+571*n*n-3729*n+9120)/(20*(5*pw(n, 4)-194*pw(n, 3)+2821*n*n-18244*n+44376)); }},
    {6, 4, {2, 3, 4, 6}, 30, [](const Rational& n) -> Rational { return n*(n-2)*(n-3)*(n-4)*(n*n-27*n+158)/(144*(2*n*n-39*n+194)); }},
    {6, 4, {2, 4, 5, 6}, 25, [](const Rational& n) -> Rational { return n*(n-1)*(n-2)*(n-4)*(3*n-44)/(240*(5*n-56)); }},
    {6, 4, {3, 4, 5, 6}, 10, [](const Rational& n) -> Rational { return n*(n-1)*(n-2)*(n-3)/360; }},
    {7, 4, {1, 2, 3, 4}, 20, [](const Rational& n) -> Rational { return (n-3)*(n-4)*(n-5)*(n-6)/24; }},
    {7, 4, {1, 4, 5, 6}, 23, [](const Rational& n) -> Rational { return (n-1)*(n-2)*(n-3)*(n-6)*(3*pw(n, 4)-176*pw(n, 3)+4029*n*n-41296*n+156816)/(120*(4*pw(n, 4)-231*pw(n, 3)+4976*n*n-47841*n+172692)); }},
    {7, 4, {2, 3, 4, 5}, 22, [](const Rational& n) -> Rational { return (n-2)*(n-3)*(n-4)*(n-5)*(7*pw(n, 4)-336*pw(n, 3)+6083*n*n-49434*n+150120)/(120*(5*pw(n, 4)-238*pw(n, 3)+4261*n*n-34076*n+103080)); }},
    {7, 4, {2, 3, 4, 6}, 31, [](const Rational& n) -> Rational { return (n-1)*(n-3)*(n-4)*(n-5)*(7*pw(n, 5)-511*pw(n, 4)+14364*pw(n, 3)-196196*n*n+1306400*n-3389952)/(144*(8*pw(n, 5)-522*pw(n, 4)+13459*pw(n, 3)-171769*n*n+1086792*n-2729600)); }},
    {7, 4, {2, 4, 5, 6}, 29, [](const Rational& n) -> Rational { return (n-1)*(n-2)*(n-3)*(n-5)*(7*pw(n, 5)-483*pw(n, 4)+13412*pw(n, 3)-185556*n*n+1267296*n-3387456)/(240*(8*pw(n, 5)-502*pw(n, 4)+12673*pw(n, 3)-161081*n*n+1030386*n-2646072)); }},
    {7, 4, {3, 4, 5, 6}, 21, [](const Rational& n) -> Rational { return (n-1)*(n-2)*(n-3)*(n-4)*(7*pw(n, 4)-350*pw(n, 3)+6671*n*n-58072*n+189960)/(360*(5*pw(n, 4)-246*pw(n, 3)+4585*n*n-38568*n+124776)); }},
    {7, 4, {3, 4, 6, 7}, 45, [](const Rational& n) -> Rational { return n*(n-1)*(n-3)*(n-4)*(n*n-45*n+410)/(504*(2*n*n-59*n+459)); }},
    {7, 4, {4, 5, 6, 7}, 11, [](const Rational& n) -> Rational { return n*(n-1)*(n-2)*(n-3)/840; }},
  };
  return entries;
}

std::vector<std::pair<int, int>> closed_form_blocks() {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : closed_form_entries())
    if (out.empty() || out.back() != std::make_pair(e.w, e.s)) out.emplace_back(e.w, e.s);
  return out;
}

AppendixReport appendix_check(int w, int s, int n_max) {
  AppendixReport rep;
  rep.w = w;
  rep.s = s;
  bool found = false;
  for (const auto& e : closed_form_entries()) {
    if (e.w != w || e.s != s) continue;
    found = true;
    for (int n = e.threshold; n <= n_max; ++n) {
      ClosedFormRow row;
      row.distances = e.distances;
      row.n = n;
      DetBoundCertificate c = det_bound_s(n, w, e.distances);
      row.conditions_met = c.conditions_met;
      row.computed = c.bound;
      row.expected = e.bound(Rational(n));
      row.ok = c.conditions_met && *c.bound == row.expected;
      rep.all_ok = rep.all_ok && row.ok;
      rep.rows.push_back(std::move(row));
    }
    // One step below the threshold, when the Hahn values are still finite there.
    try {
      ClosedFormBelow b{e.distances, e.threshold - 1, det_bound_s(e.threshold - 1, w, e.distances).conditions_met};
      rep.below.push_back(std::move(b));
    } catch (const InvalidArgument&) {
    }
  }
  if (!found) throw InvalidArgument("no closed forms tabulated for w=" + std::to_string(w) + ", s=" + std::to_string(s));
  return rep;
}

std::vector<Table1Column> table1_columns() {
  std::vector<Table1Column> cols{{4, 2, 9}, {5, 2, 12}, {6, 2, 35}, {5, 3, 12}, {6, 3, 16},
                                 {7, 3, 20}, {6, 4, 15}, {7, 4, 20}};
  for (int w = 3; w <= 7; ++w) cols.push_back({w, w - 1, 2 * w});
  return cols;
}

std::vector<Table1Row> table1_check(int n_max) {
  std::vector<Table1Row> rows;
  for (const auto& col : table1_columns())
    for (int n = col.min_n; n <= n_max; ++n) rows.push_back({col.w, col.s, n, binomial(n - col.w + col.s, col.s), 0, 0, false});
  for (auto& r : rows) {
    Verdict v = exact_value_pipeline(SpaceSpec::johnson(r.n, r.w), r.s);
    r.lower = v.lower;
    r.upper = v.upper;
    r.pass = v.exact && v.upper == r.expected;
  }
  return rows;
}

std::vector<Thm11Row> thm11_check(int n_min, int n_max) {
  if (n_min < 6 || n_max < n_min) throw InvalidArgument("thm11 range needs 6 <= n_min <= n_max");
  std::vector<Thm11Row> rows;
  for (int n = n_min; n <= n_max; ++n) {
    Verdict v = hamming_2dist_exact(n);
    Integer expected = 1 + binomial(n, 2);
    rows.push_back({n, expected, v.upper, v.exact && v.upper == expected});
  }
  return rows;
}

}  // namespace fewdist
