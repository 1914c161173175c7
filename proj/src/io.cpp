#include "polycount/io.hpp"

#include <sstream>
#include <stdexcept>

namespace polycount {

using nlohmann::json;

namespace {

json big_to_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());  // beyond int64: decimal string
}

Int big_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<long>());
}

}  // namespace

json qpoly_to_json(const QPoly& p) {
  json num = json::array();
  for (const auto& c : p.scaled_int_coeffs()) num.push_back(big_to_json(c));
  return json{{"num", num}, {"den", big_to_json(p.common_den())}};
}

QPoly qpoly_from_json(const json& j) {
  const Int den = big_from_json(j.at("den"));
  if (den == 0) throw std::invalid_argument("qpoly_from_json: zero denominator");
  std::vector<Rat> coeffs;
  for (const auto& item : j.at("num")) coeffs.push_back(make_rat(big_from_json(item), den));
  return QPoly(std::move(coeffs));
}

json report_to_json(const CountReport& rep) {
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json r{{"n", row.n},
           {"P", qpoly_to_json(row.P)},
           {"I", qpoly_to_json(row.I)},
           {"R", qpoly_to_json(row.R)}};
    if (row.Q) r["Q"] = qpoly_to_json(*row.Q);
    if (row.A) r["A"] = qpoly_to_json(*row.A);
    if (row.E) r["E"] = qpoly_to_json(*row.E);
    rows.push_back(std::move(r));
  }
  json out{{"r", rep.r}, {"counts", rows}};
  out["s"] = rep.s ? json(*rep.s) : json(nullptr);
  return out;
}

namespace {

const QPoly* row_family(const CountReport::Row& row, char f) {
  switch (f) {
    case 'P': return &row.P;
    case 'I': return &row.I;
    case 'R': return &row.R;
    case 'Q': return row.Q ? &*row.Q : nullptr;
    case 'A': return row.A ? &*row.A : nullptr;
    case 'E': return row.E ? &*row.E : nullptr;
    default: return nullptr;
  }
}

}  // namespace

std::string report_to_text(const CountReport& rep, const std::string& families) {
  std::ostringstream os;
  for (char f : families) {
    os << "# family " << f << ", r=" << rep.r;
    if (f == 'Q' && rep.s) os << ", s=" << *rep.s;
    os << '\n';
    for (const auto& row : rep.rows) {
      if (row.n == 0 && f != 'P') continue;  // tables start at n=1
      const QPoly* p = row_family(row, f);
      if (!p) continue;
      os << row.n << '\t' << p->str() << '\n';
    }
  }
  return os.str();
}

std::string report_to_csv(const CountReport& rep, const std::string& families) {
  std::ostringstream os;
  os << "family,r,n,s,poly\n";
  for (char f : families) {
    for (const auto& row : rep.rows) {
      if (row.n == 0 && f != 'P') continue;
      const QPoly* p = row_family(row, f);
      if (!p) continue;
      os << f << ',' << rep.r << ',' << row.n << ',';
      if (f == 'Q' && rep.s) os << *rep.s;
      os << ',' << p->str() << '\n';
    }
  }
  return os.str();
}

json bound_check_to_json(const BoundCheck& c) {
  json out{{"family", family_name(c.family)},
           {"r", c.r},
           {"n", c.n},
           {"q", c.q},
           {"approx", rat_str_slash(c.approx)},
           {"exact", rat_str_slash(c.exact)},
           {"bound", rat_str_slash(c.bound)},
           {"margin", rat_str_slash(c.margin)},
           {"pass", c.pass}};
  out["s"] = c.s ? json(*c.s) : json(nullptr);
  return out;
}

json sweep_to_json(const std::vector<BoundCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back(bound_check_to_json(c));
  return out;
}

std::string sweep_to_csv(const std::vector<BoundCheck>& checks) {
  std::ostringstream os;
  os << "family,r,n,s,q,approx,exact,bound,margin,pass\n";
  for (const auto& c : checks) {
    os << family_name(c.family) << ',' << c.r << ',' << c.n << ',';
    if (c.s) os << *c.s;
    os << ',' << c.q << ',' << rat_str_slash(c.approx) << ',' << rat_str_slash(c.exact)
       << ',' << rat_str_slash(c.bound) << ',' << rat_str_slash(c.margin) << ','
       << (c.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace polycount
