// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

// hurwitz-tau: Hurwitz and spin Hurwitz numbers, their generating series,
// and the verification suites.

#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "htau/cache.hpp"
#include "htau/fock.hpp"
#include "htau/genfun.hpp"
#include "htau/hurwitz.hpp"
#include "htau/suites.hpp"

namespace {

using htau::Partition;
using htau::Rational;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int qmax = 5;
  int bmax = 3;
  int emax = 6;
  std::string format = "pretty";
  std::string cache_dir;
  int jobs = 0;
  std::string out;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) line += (i ? "," : "") + csv_field(fields[i]);
  return line + "\n";
}

Partition parse_partition(const std::string& text, const char* what) {
  try {
    return Partition::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--") + what + ": " + e.what());
  }
}

htau::OddPartition parse_odd(const std::string& text, const char* what) {
  Partition p = parse_partition(text, what);
  if (!p.is_odd()) throw UsageError(std::string("--") + what + ": non-odd partition " + p.to_string());
  return htau::OddPartition(p);
}

void require_degree(int d, const Partition& p, const char* what) {
  if (p.size() != d)
    throw UsageError(std::string("--") + what + " " + p.to_string() + " has size " + std::to_string(p.size()) +
                     ", expected " + std::to_string(d));
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open --out " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

class CacheScope {
 public:
  CacheScope(const std::string& flag, int dmax) : dmax_(dmax) {
    std::optional<std::filesystem::path> explicit_dir;
    if (!flag.empty()) explicit_dir = flag;
    dir_ = htau::cache::resolve_cache_dir(explicit_dir);
    if (dir_) htau::cache::load_tables(*dir_, dmax_);
  }
  ~CacheScope() {
    if (!dir_) return;
    try {
      htau::cache::save_tables(*dir_, dmax_);
    } catch (const std::exception& e) {
      std::cerr << "warning: could not write cache: " << e.what() << "\n";
    }
  }

 private:
  int dmax_;
  std::optional<std::filesystem::path> dir_;
};

void emit_number(Output& out, const std::string& format, const json& fields, const std::vector<std::string>& order,
                 const Rational& value) {
  auto& os = out.stream();
  if (format == "json") {
    os << fields.dump(2) << "\n";
  } else if (format == "csv") {
    std::vector<std::string> header, row;
    for (const auto& k : order) {
      header.push_back(k);
      const auto& v = fields.at(k);
      row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    os << csv_row(header) << csv_row(row);
  } else {
    os << htau::to_string(value) << "\n";
  }
}

int cmd_hurwitz(const Options& o, int d, const std::string& mu_s, const std::string& nu_s, int r2, int r3) {
  const Partition mu = parse_partition(mu_s, "mu");
  const Partition nu = parse_partition(nu_s, "nu");
  require_degree(d, mu, "mu");
  require_degree(d, nu, "nu");
  if (r2 < 0 || r3 < 0) throw UsageError("--r2 and --r3 must be non-negative");
  CacheScope cache(o.cache_dir, d);
  const auto res = htau::hurwitz_number({mu, nu, r2, r3});
  Output out(o.out);
  json j{{"d", d},   {"mu", mu.to_csv_field()}, {"nu", nu.to_csv_field()}, {"r2", r2}, {"r3", r3},
         {"value", htau::to_string(res.value)}, {"euler_characteristic", res.euler_characteristic}};
  emit_number(out, o.format, j, {"d", "mu", "nu", "r2", "r3", "value", "euler_characteristic"}, res.value);
  return kExitOk;
}

int cmd_spin(const Options& o, int d, const std::string& rho_s, const std::string& sigma_s, int r) {
  const auto rho = parse_odd(rho_s, "rho");
  const auto sigma = parse_odd(sigma_s, "sigma");
  require_degree(d, rho, "rho");
  require_degree(d, sigma, "sigma");
  if (r < 0) throw UsageError("--r must be non-negative");
  CacheScope cache(o.cache_dir, d);
  const auto res = htau::spin_hurwitz_number({rho, sigma, r});
  Output out(o.out);
  json j{{"d", d},
         {"rho", rho.partition().to_csv_field()},
         {"sigma", sigma.partition().to_csv_field()},
         {"r", r},
         {"value", htau::to_string(res.value)},
         {"euler_characteristic", res.euler_characteristic}};
  emit_number(out, o.format, j, {"d", "rho", "sigma", "r", "value", "euler_characteristic"}, res.value);
  return kExitOk;
}

int cmd_verify(const Options& o, const std::string& suite) {
  htau::SuiteConfig config;
  config.qmax = o.qmax;
  config.bmax = o.bmax;
  config.emax = o.emax;
  CacheScope cache(o.cache_dir, std::max(o.qmax, 1));
  std::vector<htau::CheckReport> reports;
  try {
    reports = htau::run_suite(suite, config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();

  Output out(o.out);
  auto& os = out.stream();
  if (o.format == "json") {
    json j{{"suite", suite}, {"status", ok ? "pass" : "fail"}, {"checks", json::array()}};
    for (const auto& r : reports) j["checks"].push_back(r.to_json());
    os << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << csv_row({"check", "status", "checked", "first_discrepancy"});
    for (const auto& r : reports) {
      std::string status = htau::to_string(r.status);
      if (r.status == htau::Status::advisory) status += r.advisory_ok ? "-pass" : "-fail";
      os << csv_row({r.check, status, std::to_string(r.checked), r.first_discrepancy.value_or("")});
    }
  } else {
    for (const auto& r : reports) {
      std::string status = htau::to_string(r.status);
      if (r.status == htau::Status::advisory) status += r.advisory_ok ? " (pass)" : " (fail)";
      os << status << "  " << r.check << "  [" << r.checked << " checked]";
      if (r.first_discrepancy) os << "  first discrepancy: " << *r.first_discrepancy;
      os << "\n";
    }
    os << (ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  return ok ? kExitOk : kExitFail;
}

struct TableArgs {
  int dmin = 1;
  int dmax = 4;
  int r2max = 1;
  int r3max = 1;
  int rmax = 2;
  int hmax = 2;
  std::string ks = "0";
};

int cmd_table(const Options& o, const std::string& kind, const TableArgs& t) {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  if (t.dmax > 10) throw UsageError("--dmax above 10 is outside the supported range");
  CacheScope cache(o.cache_dir, std::max(t.dmax, 1));
  if (kind == "hurwitz") {
    header = {"d", "mu", "nu", "r2", "r3", "value"};
    for (int d = std::max(t.dmin, 1); d <= t.dmax; ++d)
      for (const auto& mu : htau::enumerate(d))
        for (const auto& nu : htau::enumerate(d))
          for (int r2 = 0; r2 <= t.r2max; ++r2)
            for (int r3 = 0; r3 <= t.r3max; ++r3)
              rows.push_back({std::to_string(d), mu.to_csv_field(), nu.to_csv_field(), std::to_string(r2),
                              std::to_string(r3), htau::to_string(htau::hurwitz_number({mu, nu, r2, r3}).value)});
  } else if (kind == "spin") {
    header = {"d", "rho", "sigma", "r", "value"};
    for (int d = std::max(t.dmin, 1); d <= t.dmax; ++d)
      for (const auto& rho : htau::odd_partitions(d))
        for (const auto& sigma : htau::odd_partitions(d))
          for (int r = 0; r <= t.rmax; ++r)
            rows.push_back({std::to_string(d), rho.partition().to_csv_field(), sigma.partition().to_csv_field(),
                            std::to_string(r), htau::to_string(htau::spin_hurwitz_number({rho, sigma, r}).value)});
  } else if (kind == "gwh-rhs") {
    header = {"d", "k", "h", "p", "value", "status"};
    std::vector<int> ks;
    if (!t.ks.empty()) {
      std::stringstream ss(t.ks);
      for (std::string item; std::getline(ss, item, ',');) {
        try {
          std::size_t used = 0;
          int k = std::stoi(item, &used);
          if (used != item.size() || k < 0) throw std::invalid_argument(item);
          ks.push_back(k);
        } catch (const std::exception&) {
          throw UsageError("--ks expects a comma-separated list of non-negative integers");
        }
      }
    }
    std::string ks_field;
    for (std::size_t i = 0; i < ks.size(); ++i) ks_field += (i ? "," : "") + std::to_string(ks[i]);
    for (int d = std::max(t.dmin, 1); d <= t.dmax; ++d)
      for (int h = 0; h <= t.hmax; ++h)
        for (int p = 0; p <= 1; ++p) {
          const auto res = htau::spin_gwh_rhs(d, ks, h, p);
          rows.push_back({std::to_string(d), ks_field, std::to_string(h), std::to_string(p),
                          htau::to_string(res.value), res.conjectural ? "conjectural" : "proved"});
        }
  } else {
    throw UsageError("unknown table kind: " + kind);
  }

  Output out(o.out);
  auto& os = out.stream();
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj;
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
      arr.push_back(obj);
    }
    os << arr.dump(2) << "\n";
  } else {
    os << csv_row(header);
    for (const auto& row : rows) os << csv_row(row);
  }
  return kExitOk;
}

int cmd_series(const Options& o, const std::string& which, const std::string& source) {
  CacheScope cache(o.cache_dir, std::max(o.qmax, 1));
  std::optional<htau::GenSeries> s;
  if (which == "phi") {
    if (source == "schur") s = htau::build_phi_schur(o.qmax, o.bmax);
    else if (source == "hurwitz") s = htau::build_phi_hurwitz(o.qmax, o.bmax);
    else if (source == "fock") s = htau::phi_vacuum_series(o.qmax, o.bmax, o.emax);
  } else if (which == "phiB") {
    if (source == "q") s = htau::build_phiB_q(o.qmax, o.bmax);
    else if (source == "spin") s = htau::build_phiB_spin(o.qmax, o.bmax);
    else if (source == "fock") s = htau::phiB_vacuum_series(o.qmax, o.bmax, o.emax);
    else if (source == "fock-hat") s = htau::phiB_vacuum_series(o.qmax, o.bmax, o.emax, true);
  } else if (which == "phiB-squared") {
    if (source == "q") s = htau::square(htau::build_phiB_q(o.qmax, o.bmax));
  } else {
    throw UsageError("unknown series: " + which);
  }
  if (!s) throw UsageError("source '" + source + "' is not available for series " + which);

  Output out(o.out);
  auto& os = out.stream();
  if (o.format == "csv") {
    os << csv_row({"d", "mu", "nu", "s", "coeff"});
    for (const auto& [k, c] : s->terms())
      os << csv_row({std::to_string(k.d), k.mu.to_csv_field(), k.nu.to_csv_field(), std::to_string(k.s),
                     htau::to_string(c)});
  } else {
    os << s->to_json().dump(o.format == "json" ? -1 : 2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz and spin Hurwitz numbers of P^1, their generating functions, and exact verification"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--cache-dir", o.cache_dir, "Character table cache directory (else $HURWITZ_TAU_CACHE)");
    sub->add_option("--jobs", o.jobs, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
  };
  auto add_orders = [&](CLI::App* sub) {
    sub->add_option("--qmax", o.qmax, "Truncation order in q")->check(CLI::Range(0, 6));
    sub->add_option("--bmax", o.bmax, "Truncation order in b")->check(CLI::Range(0, 8));
    sub->add_option("--emax", o.emax, "Fock space energy cutoff")->check(CLI::Range(0, 10));
  };

  int d = 0, r2 = 0, r3 = 0, r = 0;
  std::string mu, nu, rho, sigma;
  auto* hur = app.add_subcommand("hurwitz", "Hurwitz number H^0_d(mu, nu, eta2^r2, eta3^r3)");
  hur->add_option("-d,--degree", d, "Degree")->required()->check(CLI::Range(1, 10));
  hur->add_option("--mu", mu, "Ramification profile over 0, e.g. 2,1")->required();
  hur->add_option("--nu", nu, "Ramification profile over infinity")->required();
  hur->add_option("--r2", r2, "Number of simple branch points");
  hur->add_option("--r3", r3, "Number of (3,1^{d-3}) branch points");
  add_common(hur);

  auto* spin = app.add_subcommand("spin-hurwitz", "Spin Hurwitz number H^{0,+}_d(rho, sigma, eta3^r)");
  spin->add_option("-d,--degree", d, "Degree")->required()->check(CLI::Range(1, 10));
  spin->add_option("--rho", rho, "Odd profile over 0")->required();
  spin->add_option("--sigma", sigma, "Odd profile over infinity")->required();
  spin->add_option("--r", r, "Number of (3,1^{d-3}) branch points");
  add_common(spin);

  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", suite, "theorem|lemmas|genfun-consistency|fock|hirota|forms|all")
      ->check(CLI::IsMember(htau::suite_names()));
  add_orders(ver);
  add_common(ver);

  std::string kind;
  TableArgs targs;
  auto* tab = app.add_subcommand("table", "Batch tables as CSV or JSON");
  tab->add_option("kind", kind, "hurwitz|spin|gwh-rhs")->required()->check(CLI::IsMember({"hurwitz", "spin", "gwh-rhs"}));
  tab->add_option("--dmin", targs.dmin, "Smallest degree");
  tab->add_option("--dmax", targs.dmax, "Largest degree");
  tab->add_option("--r2max", targs.r2max, "Largest r2 (hurwitz)")->check(CLI::NonNegativeNumber);
  tab->add_option("--r3max", targs.r3max, "Largest r3 (hurwitz)")->check(CLI::NonNegativeNumber);
  tab->add_option("--rmax", targs.rmax, "Largest r (spin)")->check(CLI::NonNegativeNumber);
  tab->add_option("--hmax", targs.hmax, "Largest genus (gwh-rhs)")->check(CLI::NonNegativeNumber);
  tab->add_option("--ks", targs.ks, "Descendent indices k_1,...,k_n (gwh-rhs)");
  add_common(tab);
  o.format = "pretty";

  std::string which, source;
  auto* ser = app.add_subcommand("series", "Print a truncated generating series");
  ser->add_option("which", which, "phi|phiB|phiB-squared")->required()->check(CLI::IsMember({"phi", "phiB", "phiB-squared"}));
  ser->add_option("--source", source, "phi: schur|hurwitz|fock; phiB: q|spin|fock|fock-hat; phiB-squared: q");
  add_orders(ser);
  add_common(ser);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (o.jobs > 0) omp_set_num_threads(o.jobs);
  try {
    if (*hur) return cmd_hurwitz(o, d, mu, nu, r2, r3);
    if (*spin) return cmd_spin(o, d, rho, sigma, r);
    if (*ver) return cmd_verify(o, suite);
    if (*tab) return cmd_table(o, kind, targs);
    if (*ser) {
      if (source.empty()) source = which == "phi" ? "schur" : "q";
      return cmd_series(o, which, source);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
