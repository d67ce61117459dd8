#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ptri/constructions.hpp"
#include "ptri/enumerator.hpp"
#include "ptri/harness.hpp"

namespace {

using namespace ptri;

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(std::stoi(item));
  return out;
}

uint64_t parse_mask(const std::string& csv, int limit) {
  uint64_t mask = 0;
  for (int k : parse_int_list(csv)) {
    if (k < 1 || k > limit)
      throw std::invalid_argument("subset element " + std::to_string(k) +
                                  " outside 1.." + std::to_string(limit));
    mask |= uint64_t(1) << (k - 1);
  }
  return mask;
}

std::string joined(const std::vector<int>& v, char sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open output file " + path);
  f << body;
}

std::string table_json(const CountTable& tbl) { return tbl.to_json() + "\n"; }

std::string table_csv(const CountTable& tbl) {
  std::ostringstream out;
  out << "w,count\n";
  for (const auto& [sub, cnt] : tbl.counts) {
    std::vector<int> pts;
    for (size_t pos = 0; pos < tbl.interior.size(); ++pos)
      if (sub.contains(static_cast<int>(pos))) pts.push_back(tbl.interior[pos]);
    out << joined(pts, ';') << "," << cnt.get_str() << "\n";
  }
  out << "total," << tbl.total.get_str() << "\n";
  return out.str();
}

int cmd_gen(const std::string& family, int n, int v, int l, int m,
            const std::string& hosts_csv, const std::string& out) {
  PointSet ps;
  if (family == "convex") {
    ps = make_convex(n);
  } else if (family == "almost-convex") {
    ps = make_almost_convex(v, parse_int_list(hosts_csv));
  } else if (family == "single-chain") {
    ps = make_single_chain(l);
  } else if (family == "double-chain") {
    ps = make_double_chain(l, m);
  } else {
    throw std::invalid_argument("unknown family " + family);
  }
  write_output(out, write_point_set(ps));
  return 0;
}

int cmd_enumerate(const std::string& points_file, bool strat, bool by_tip,
                  const std::string& format, const std::string& out) {
  std::ifstream f(points_file);
  if (!f) throw std::invalid_argument("cannot open " + points_file);
  PointSet ps = read_point_set(f);
  std::string body;
  if (by_tip) {
    CountTable tbl = stratify_by_tip(ps);
    body = format == "csv" ? table_csv(tbl) : table_json(tbl);
  } else if (strat) {
    CountTable tbl = stratify(ps);
    body = format == "csv" ? table_csv(tbl) : table_json(tbl);
  } else {
    long long count = count_pt(ps);
    if (format == "csv")
      body = "count\n" + std::to_string(count) + "\n";
    else
      body = "{\"n\":" + std::to_string(ps.size()) + ",\"count\":\"" +
             std::to_string(count) + "\"}\n";
  }
  write_output(out, body);
  return 0;
}

int cmd_count(const std::string& family, const std::string& kind, int n, int v,
              int i, int l, int m, const std::string& w_csv,
              const std::string& vset_csv) {
  BigCount result;
  if (family == "convex") {
    if (kind != "t" && kind != "ppt" && kind != "pt")
      throw std::invalid_argument("convex supports kinds t|ppt|pt");
    result = catalan(n - 2);
  } else if (family == "almost-convex") {
    if (kind == "t") result = t_almost_convex(v, i);
    else if (kind == "ppt") result = ppt_almost_convex(v, i);
    else if (kind == "pt") result = pt_almost_convex(v, i);
    else throw std::invalid_argument("almost-convex supports kinds t|ppt|pt");
  } else if (family == "single-chain") {
    if (kind == "t") result = catalan(l);
    else if (kind == "ppt") result = ppt_single_chain(l);
    else if (kind == "pt") result = pt_single_chain(l);
    else if (kind == "ppt-w") result = ppt_W_single_chain(l, parse_mask(w_csv, l));
    else if (kind == "pt-w") result = pt_W_single_chain(l, parse_mask(w_csv, l));
    else throw std::invalid_argument("unknown kind " + kind);
  } else if (family == "double-chain") {
    if (kind == "t") result = triangulations_double_chain(l, m);
    else if (kind == "ppt") result = ppt_double_chain(l, m);
    else if (kind == "pt") result = pt_double_chain(l, m);
    else if (kind == "pt-w")
      result = pt_VW_double_chain(l, m, parse_mask(vset_csv, l),
                                  parse_mask(w_csv, m));
    else throw std::invalid_argument("double-chain supports t|ppt|pt|pt-w");
  } else {
    throw std::invalid_argument("unknown family " + family);
  }
  std::cout << result.get_str() << "\n";
  return 0;
}

VerificationReport conjecture_sweep(const std::string& which, int max_n,
                                    uint64_t seed) {
  VerificationReport r{"verify: " + which, {}, 0.0};
  auto absorb = [&](const PointSet& ps) {
    CountTable tbl = stratify(ps);
    VerificationReport sub = which == "monotonicity"
                                 ? check_monotonicity(tbl)
                                 : check_triple_inequality(tbl);
    r.checks.push_back({ps.label.empty() ? tbl.descriptor : ps.label,
                        sub.all_passed(),
                        sub.all_passed() ? "" : sub.checks.front().witness});
  };
  for (int l = 0; l + 3 <= max_n; ++l) absorb(canonical_single_chain(l));
  for (int vv = 3; vv <= max_n; ++vv)
    for (int ii = 0; ii <= vv && vv + ii <= max_n; ++ii) {
      std::vector<int> hosts(ii);
      for (int k = 0; k < ii; ++k) hosts[k] = k;
      absorb(make_almost_convex(vv, hosts));
    }
  for (int l = 0; l + 4 <= max_n; ++l)
    for (int m = 0; l + m + 4 <= max_n; ++m)
      absorb(canonical_double_chain(l, m));
  int cap = std::min(max_n, 8);
  if (cap >= 5)
    for (int k = 0; k < 50; ++k)
      absorb(random_general_position(5 + k % (cap - 4), seed + k));
  return r;
}

int cmd_verify(const std::string& suite, int max_n, uint64_t seed,
               const std::string& format) {
  VerificationReport r;
  if (suite == "monotonicity" || suite == "inequality")
    r = conjecture_sweep(suite, max_n, seed);
  else if (suite == "identities")
    r = cross_validate("identities", seed);
  else if (suite == "bijection")
    r = cross_validate("bijection", seed);
  else if (suite == "asymptotics")
    r = cross_validate("asymptotics", seed);
  else
    throw std::invalid_argument("unknown suite " + suite);
  std::cout << (format == "json" ? r.to_json() + "\n" : r.to_text());
  return r.all_passed() ? 0 : 1;
}

int cmd_table(const std::string& name, int rows, const std::string& out) {
  std::ostringstream body;
  if (name == "ali") {
    body << "l";
    for (int i = 0; i < rows; ++i) body << ",a" << i;
    body << ",rowsum\n";
    for (int l = 0; l < rows; ++l) {
      body << l;
      BigCount sum = 0;
      for (int i = 0; i < rows; ++i) {
        body << ",";
        if (i <= l) {
          BigCount a = a_single_chain(l, i);
          sum += a;
          body << a.get_str();
        }
      }
      body << "," << sum.get_str() << "\n";
    }
  } else if (name == "t-array") {
    body << "v";
    for (int i = 0; i < rows; ++i) body << ",i" << i;
    body << "\n";
    for (int v = 3; v < 3 + rows; ++v) {
      body << v;
      for (int i = 0; i < rows; ++i)
        body << "," << t_almost_convex(v, i).get_str();
      body << "\n";
    }
  } else if (name == "E" || name == "F") {
    body << "l";
    for (int m = 0; m < rows; ++m) body << ",m" << m;
    body << "\n";
    for (int l = 0; l < rows; ++l) {
      body << l;
      for (int m = 0; m < rows; ++m)
        body << ","
             << (name == "E" ? E_rook(l, m) : F_rook(l, m)).get_str();
      body << "\n";
    }
  } else if (name == "ratio") {
    std::string a = ratio_table_csv("double-circle", rows);
    std::string b = ratio_table_csv("single-chain", rows);
    std::string c = ratio_table_csv("double-chain", rows);
    body << a << b.substr(b.find('\n') + 1) << c.substr(c.find('\n') + 1);
  } else {
    throw std::invalid_argument("unknown table " + name);
  }
  write_output(out, body.str());
  return 0;
}

int cmd_seq(const std::string& name, int terms) {
  std::vector<BigCount> vals;
  if (name == "A059346") {
    // Catalan difference array t(v,i), read by antidiagonals.
    for (int s = 0; static_cast<int>(vals.size()) < terms; ++s)
      for (int i = 0; i <= s && static_cast<int>(vals.size()) < terms; ++i)
        vals.push_back(t_almost_convex(3 + s - i, i));
  } else if (name == "A062991") {
    for (int l = 0; static_cast<int>(vals.size()) < terms; ++l)
      for (int i = 0; i <= l && static_cast<int>(vals.size()) < terms; ++i)
        vals.push_back(a_single_chain(l, i));
  } else if (name == "A062992") {
    for (int l = 0; l < terms; ++l) vals.push_back(ppt_single_chain(l));
  } else if (name == "A035002") {
    for (int s = 0; static_cast<int>(vals.size()) < terms; ++s)
      for (int l = 0; l <= s && static_cast<int>(vals.size()) < terms; ++l)
        vals.push_back(E_rook(l, s - l));
  } else if (name == "A051708") {
    for (int m = 0; m < terms; ++m) vals.push_back(E_rook(m, m));
  } else {
    throw std::invalid_argument("unknown sequence " + name);
  }
  for (const BigCount& v : vals) std::cout << v.get_str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-triangulation counting and enumeration toolkit"};
  app.require_subcommand(1);

  std::string family, kind, hosts_csv, w_csv, vset_csv, points_file;
  std::string out, format = "json", suite, name;
  int n = 0, v = 0, i = 0, l = 0, m = 0, rows = 6, terms = 10, max_n = 8;
  uint64_t seed = 1;
  bool strat = false, by_tip = false;

  auto* gen = app.add_subcommand("gen", "generate a family point set");
  gen->add_option("--family", family)->required();
  gen->add_option("--n", n);
  gen->add_option("--v", v);
  gen->add_option("--l", l);
  gen->add_option("--m", m);
  gen->add_option("--hosts", hosts_csv);
  gen->add_option("--out", out);

  auto* enu = app.add_subcommand("enumerate", "brute-force oracle counts");
  enu->add_option("--points", points_file)->required();
  enu->add_flag("--stratify", strat);
  enu->add_flag("--by-tip", by_tip);
  enu->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  enu->add_option("--out", out);

  auto* cnt = app.add_subcommand("count", "closed-form and recursive counters");
  cnt->add_option("--family", family)->required();
  cnt->add_option("--kind", kind)->required();
  cnt->add_option("--n", n);
  cnt->add_option("--v", v);
  cnt->add_option("--i", i);
  cnt->add_option("--l", l);
  cnt->add_option("--m", m);
  cnt->add_option("--w", w_csv);
  cnt->add_option("--vset", vset_csv);

  auto* ver = app.add_subcommand("verify", "conjecture and identity checks");
  ver->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"monotonicity", "inequality", "identities",
                             "bijection", "asymptotics"}));
  ver->add_option("--max-n", max_n);
  ver->add_option("--seed", seed);
  ver->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* tab = app.add_subcommand("table", "reference count tables");
  tab->add_option("--name", name)
      ->required()
      ->check(CLI::IsMember({"ali", "t-array", "E", "F", "ratio"}));
  tab->add_option("--rows", rows);
  tab->add_option("--format", format)->check(CLI::IsMember({"csv"}));
  tab->add_option("--out", out);

  auto* seq = app.add_subcommand("seq", "integer sequence emission");
  seq->add_option("--name", name)
      ->required()
      ->check(CLI::IsMember({"A059346", "A062991", "A062992", "A035002",
                             "A051708"}));
  seq->add_option("--terms", terms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (gen->parsed())
      return cmd_gen(family, n, v, l, m, hosts_csv, out);
    if (enu->parsed())
      return cmd_enumerate(points_file, strat, by_tip,
                           format == "json" || format == "csv" ? format
                                                               : "json",
                           out);
    if (cnt->parsed())
      return cmd_count(family, kind, n, v, i, l, m, w_csv, vset_csv);
    if (ver->parsed())
      return cmd_verify(suite, max_n, seed, format);
    if (tab->parsed()) return cmd_table(name, rows, out);
    if (seq->parsed()) return cmd_seq(name, terms);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
