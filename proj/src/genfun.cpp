// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include "htau/genfun.hpp"

#include <exception>
#include <stdexcept>
#include <vector>

#include "htau/charspin.hpp"
#include "htau/charsym.hpp"
#include "htau/hurwitz.hpp"

namespace htau {

std::string SeriesKey::to_string() const {
  return "d=" + std::to_string(d) + " mu=" + mu.to_string() + " nu=" + nu.to_string() + " s=" + std::to_string(s);
}

GenSeries::GenSeries(int qmax, int bmax) : qmax_(qmax), bmax_(bmax) {
  if (qmax < 0 || bmax < 0) throw std::invalid_argument("GenSeries: negative truncation order");
}

GenSeries GenSeries::one(int qmax, int bmax) {
  GenSeries s(qmax, bmax);
  s.add({0, {}, {}, 0}, 1);
  return s;
}

Rational GenSeries::coefficient(const SeriesKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GenSeries::add(const SeriesKey& key, const Rational& c) {
  if (key.mu.size() != key.d || key.nu.size() != key.d)
    throw std::invalid_argument("GenSeries: off-diagonal key " + key.to_string());
  if (key.d < 0 || key.d > qmax_ || key.s < 0 || key.s > bmax_)
    throw std::invalid_argument("GenSeries: key beyond truncation " + key.to_string());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void GenSeries::merge(const GenSeries& other) {
  if (other.qmax_ != qmax_ || other.bmax_ != bmax_)
    throw std::invalid_argument("GenSeries::merge: truncation orders differ");
  for (const auto& [k, c] : other.terms_) add(k, c);
}

nlohmann::json GenSeries::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : terms_)
    terms.push_back({{"d", k.d}, {"mu", k.mu.parts()}, {"nu", k.nu.parts()}, {"s", k.s}, {"coeff", htau::to_string(c)}});
  return {{"qmax", qmax_}, {"bmax", bmax_}, {"terms", terms}};
}

GenSeries GenSeries::from_json(const nlohmann::json& j) {
  GenSeries s(j.at("qmax").get<int>(), j.at("bmax").get<int>());
  for (const auto& t : j.at("terms")) {
    SeriesKey k{t.at("d").get<int>(), Partition(t.at("mu").get<std::vector<int>>()),
                Partition(t.at("nu").get<std::vector<int>>()), t.at("s").get<int>()};
    s.add(k, parse_rational(t.at("coeff").get<std::string>()));
  }
  return s;
}

namespace {

// Runs body(i) for i in [0, n), collecting one GenSeries per index, then
// merges them in index order so both paths produce identical maps.
template <typename Body>
GenSeries build_indexed(int qmax, int bmax, std::size_t n, Exec exec, Body body) {
  std::vector<GenSeries> parts(n, GenSeries(qmax, bmax));
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i, parts[i]);
  } else {
    std::exception_ptr error;
    const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i), parts[static_cast<std::size_t>(i)]);
      } catch (...) {
#pragma omp critical(htau_genfun_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }
  GenSeries out = GenSeries::one(qmax, bmax);
  for (const auto& p : parts) out.merge(p);
  return out;
}

std::vector<Rational> powers(const Rational& x, int n) {
  std::vector<Rational> out{Rational(1)};
  for (int i = 1; i <= n; ++i) out.push_back(out.back() * x);
  return out;
}

}  // namespace

GenSeries build_phi_schur(int qmax, int bmax, Exec exec) {
  std::vector<Partition> lambdas;
  for (int d = 1; d <= qmax; ++d)
    for (auto& l : enumerate(d)) lambdas.push_back(std::move(l));

  return build_indexed(qmax, bmax, lambdas.size(), exec, [&](std::size_t i, GenSeries& out) {
    const Partition& lambda = lambdas[i];
    const int d = lambda.size();
    auto [phi2, phi3] = phi2_phi3_eval(lambda);
    const auto e = powers(frac(d + d * d, 2) + phi2 + phi3, bmax);
    const auto mus = enumerate(d);
    std::vector<Rational> weight;
    for (const auto& mu : mus) weight.emplace_back(Rational(character(lambda, mu)) / Rational(z_of(mu)));
    for (std::size_t a = 0; a < mus.size(); ++a) {
      if (weight[a] == 0) continue;
      for (std::size_t b = 0; b < mus.size(); ++b) {
        const Rational w = weight[a] * weight[b];
        if (w == 0) continue;
        for (int s = 0; s <= bmax; ++s) out.add({d, mus[a], mus[b], s}, w * e[static_cast<std::size_t>(s)]);
      }
    }
  });
}

GenSeries build_phi_hurwitz(int qmax, int bmax) {
  GenSeries out = GenSeries::one(qmax, bmax);
  for (int d = 1; d <= qmax; ++d) {
    const auto base = powers(frac(d * d + d, 2), bmax);
    const auto mus = enumerate(d);
    for (const auto& mu : mus) {
      for (const auto& nu : mus) {
        for (int s = 0; s <= bmax; ++s) {
          Rational total = 0;
          for (int r2 = 0; r2 <= s; ++r2) {
            for (int r3 = 0; r2 + r3 <= s; ++r3) {
              const int r1 = s - r2 - r3;
              Rational multinom = Rational(factorial(s)) / Rational(factorial(r1) * factorial(r2) * factorial(r3));
              total += multinom * base[static_cast<std::size_t>(r1)] * hurwitz_number({mu, nu, r2, r3}).value;
            }
          }
          out.add({d, mu, nu, s}, total);
        }
      }
    }
  }
  return out;
}

GenSeries build_phiB_q(int qmax, int bmax, Exec exec) {
  std::vector<StrictPartition> lambdas;
  for (int d = 1; d <= qmax; ++d)
    for (auto& l : strict_partitions(d)) lambdas.push_back(std::move(l));
  // q_function hands out references into the table, so fill it up front.
  for (const auto& l : lambdas) default_spin_table().q_function(l);

  return build_indexed(qmax, bmax, lambdas.size(), exec, [&](std::size_t i, GenSeries& out) {
    const StrictPartition& lambda = lambdas[i];
    const int d = lambda.size();
    const auto e = powers(Rational(d * d) + f3_eval(lambda), bmax);
    const PowerPoly& q = default_spin_table().q_function(lambda).expansion;
    // [p_ρ] Q_λ(½p) = 2^{-ℓ(ρ)} [p_ρ] Q_λ.
    std::vector<std::pair<Partition, Rational>> coeffs;
    for (const auto& [rho, c] : q.terms()) coeffs.emplace_back(rho, c * pow2(-rho.length()));
    const Rational scale = pow2(-lambda.length());
    for (const auto& [rho, a] : coeffs)
      for (const auto& [sigma, b] : coeffs)
        for (int s = 0; s <= bmax; ++s) out.add({d, rho, sigma, s}, scale * a * b * e[static_cast<std::size_t>(s)]);
  });
}

GenSeries build_phiB_spin(int qmax, int bmax) {
  GenSeries out = GenSeries::one(qmax, bmax);
  for (int d = 1; d <= qmax; ++d) {
    const auto base = powers(Rational(d * d), bmax);
    const auto rhos = odd_partitions(d);
    for (const auto& rho : rhos) {
      for (const auto& sigma : rhos) {
        for (int s = 0; s <= bmax; ++s) {
          Rational total = 0;
          for (int r = 0; r <= s; ++r) {
            HurwitzResult h = spin_hurwitz_number({rho, sigma, r});
            total += Rational(binomial(s, r)) * base[static_cast<std::size_t>(s - r)] *
                     pow2(-h.euler_characteristic / 2) * h.value;
          }
          out.add({d, rho, sigma, s}, total);
        }
      }
    }
  }
  return out;
}

GenSeries restrict_odd(const GenSeries& s) {
  GenSeries out(s.qmax(), s.bmax());
  for (const auto& [k, c] : s.terms())
    if (k.mu.is_odd() && k.nu.is_odd()) out.add(k, c);
  return out;
}

GenSeries square(const GenSeries& s) {
  GenSeries out(s.qmax(), s.bmax());
  for (const auto& [k1, c1] : s.terms()) {
    for (const auto& [k2, c2] : s.terms()) {
      const int d = k1.d + k2.d;
      const int b = k1.s + k2.s;
      if (d > s.qmax() || b > s.bmax()) continue;
      out.add({d, k1.mu.merged(k2.mu), k1.nu.merged(k2.nu), b}, Rational(binomial(b, k1.s)) * c1 * c2);
    }
  }
  return out;
}

CheckReport compare_series(const std::string& check, const GenSeries& lhs, const GenSeries& rhs, bool list_details) {
  CheckReport report;
  report.check = check;
  report.params = {{"qmax", lhs.qmax()}, {"bmax", lhs.bmax()}};
  if (lhs.qmax() != rhs.qmax() || lhs.bmax() != rhs.bmax()) {
    report.record(false, "truncation orders differ");
    return report;
  }
  std::map<SeriesKey, std::pair<Rational, Rational>> both;
  for (const auto& [k, c] : lhs.terms()) both[k].first = c;
  for (const auto& [k, c] : rhs.terms()) both[k].second = c;
  for (const auto& [k, v] : both) {
    const bool ok = v.first == v.second;
    report.record(ok, k.to_string() + ": " + htau::to_string(v.first) + " != " + htau::to_string(v.second));
    if (list_details) report.details.push_back(k.to_string() + (ok ? " ok" : " mismatch"));
  }
  return report;
}

CheckReport verify_theorem(int qmax, int bmax, Exec exec) {
  GenSeries lhs = square(build_phiB_q(qmax, bmax, exec));
  GenSeries rhs = restrict_odd(build_phi_schur(qmax, bmax, exec));
  return compare_series("theorem", lhs, rhs, true);
}

}  // namespace htau
