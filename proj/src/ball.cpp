#include "endogrowth/ball.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace endogrowth {

std::string to_string(Provenance p) { return p == Provenance::exact ? "exact" : "upper_bound"; }

GrowthSummary gr_estimate(const GrowthEstimate& table) {
  GrowthSummary s;
  if (table.rows.empty()) return s;
  double inf = std::numeric_limits<double>::infinity();
  s.certified = true;
  for (const auto& row : table.rows) {
    const double r = kth_root(row.L, row.k);
    s.roots.push_back(r);
    inf = std::min(inf, r);
    s.running_inf.push_back(inf);
    if (row.provenance != Provenance::exact) s.certified = false;
  }
  s.estimate = s.running_inf.back();

  const auto& last = table.rows.back();
  for (const auto& l : last.per_gen) s.per_gen_limit.push_back(kth_root(l, last.k));
  s.max_lim = s.per_gen_limit.empty() ? 0.0 : *std::max_element(s.per_gen_limit.begin(), s.per_gen_limit.end());

  bool strict = true, nonincr = true, constant = true;
  for (std::size_t i = 1; i < s.roots.size(); ++i) {
    if (!(s.roots[i] < s.roots[i - 1])) strict = false;
    if (s.roots[i] > s.roots[i - 1]) nonincr = false;
    if (s.roots[i] != s.roots[i - 1]) constant = false;
  }
  if (s.roots.size() < 2)
    s.trend = "constant";
  else if (constant)
    s.trend = "constant";
  else if (strict)
    s.trend = "strictly_decreasing";
  else if (nonincr)
    s.trend = "nonincreasing";
  else
    s.trend = "fluctuating";
  return s;
}

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string growth_csv(const GrowthEstimate& table, const GrowthSummary& summary) {
  std::ostringstream os;
  os << "k,L,provenance,root,running_inf";
  for (const auto& g : table.gen_names) os << ",L_" << csv_field(g);
  os << '\n';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    os << row.k << ',' << row.L.get_str() << ',' << to_string(row.provenance) << ','
       << fmt_double(summary.roots.at(i)) << ',' << fmt_double(summary.running_inf.at(i));
    for (const auto& l : row.per_gen) os << ',' << l.get_str();
    os << '\n';
  }
  return os.str();
}

std::string distortion_csv(const DistortionTable& table) {
  std::ostringstream os;
  os << "n,count,delta,witness\n";
  for (const auto& r : table.rows)
    os << r.n << ',' << r.count << ',' << r.delta.get_str() << ',' << csv_field(r.witness) << '\n';
  return os.str();
}

}  // namespace endogrowth
