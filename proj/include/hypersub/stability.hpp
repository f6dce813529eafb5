#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypersub/patterns.hpp"

namespace hypersub {

/// Tail decay of the ordered vertex appearance probabilities: p_(j) ~ j^-alpha
/// (polynomial) or alpha^-j (exponential).
enum class Decay { polynomial, exponential };

/// One term of the stability maximum. An empty value is an unbounded term
/// (a zero structural quantity in a denominator).
template <typename Scalar>
struct StabilityTerm {
  std::string label;
  std::optional<Scalar> value;
};

/// Deletion-stability exponent for a rainbow pattern. Filtering at any
/// d << m^(1 - beta) leaves the sqrt(m)-scale limit unchanged; beta is empty
/// when some term is unbounded.
template <typename Scalar>
struct StabilityReport {
  std::vector<StabilityTerm<Scalar>> terms;
  std::optional<Scalar> beta;

  std::optional<Scalar> safe_d_exponent() const {
    if (!beta) return std::nullopt;
    return Scalar(1) - *beta;
  }
};

/// Works for any field-like Scalar (double, boost::rational<long long>, ...).
/// Polynomial bound:
///   max{ (2/dmin)(1/2 + 1/a), (1/(N1-1))(1/2 + (v-1)/a), (1/e)(1/2 + v/a),
///        (1/N_k)(1/2 + (v-k)/a) for k = 2..v-2 }
/// Exponential bound:
///   max{ 1/dmin, 1/(2(N1-1)), 1/(2e), 1/(2 N_k) for k = 2..v-2 }
template <typename Scalar>
StabilityReport<Scalar> beta_exponent(const PatternStats& s, const Scalar& alpha, Decay decay) {
  if (decay == Decay::polynomial && !(alpha > Scalar(2)))
    throw std::invalid_argument("polynomial decay needs alpha > 2");
  if (decay == Decay::exponential && !(alpha > Scalar(1)))
    throw std::invalid_argument("exponential decay needs alpha > 1");
  if (s.v < 2 || s.nk.empty()) throw std::invalid_argument("stability needs a pattern with at least two vertices");

  const Scalar half = Scalar(1) / Scalar(2);
  const Scalar v(s.v);
  StabilityReport<Scalar> report;
  auto term = [&](std::string label, long long denominator, const Scalar& numerator) {
    StabilityTerm<Scalar> t{std::move(label), std::nullopt};
    if (denominator > 0) t.value = numerator / Scalar(denominator);
    report.terms.push_back(std::move(t));
  };

  const long long n1_minus_1 = static_cast<long long>(s.n(1)) - 1;
  if (decay == Decay::polynomial) {
    term("min_degree", s.min_degree, Scalar(2) * (half + Scalar(1) / alpha));
    term("N_1", n1_minus_1, half + (v - Scalar(1)) / alpha);
    term("edges", s.e, half + v / alpha);
    for (int k = 2; k <= s.v - 2; ++k) term("N_" + std::to_string(k), s.n(k), half + (v - Scalar(k)) / alpha);
  } else {
    term("min_degree", s.min_degree, Scalar(1));
    term("N_1", 2 * n1_minus_1, Scalar(1));
    term("edges", 2LL * s.e, Scalar(1));
    for (int k = 2; k <= s.v - 2; ++k) term("N_" + std::to_string(k), 2LL * s.n(k), Scalar(1));
  }

  bool bounded = std::all_of(report.terms.begin(), report.terms.end(), [](const auto& t) { return t.value.has_value(); });
  if (bounded) {
    Scalar best = *report.terms.front().value;
    for (const auto& t : report.terms) best = std::max(best, *t.value);
    report.beta = best;
  }
  return report;
}

/// Exponent gamma such that degree filtering at d << m^gamma keeps the limit of
/// a Type 2 or Type 3 triangle frequency. Type 1 depends on the unobservable
/// appearance probabilities and is rejected.
template <typename Scalar>
Scalar triangle_exponent(int type, const Scalar& alpha, Decay decay) {
  if (type == 1)
    throw std::invalid_argument(
        "Type 1 triangles have no degree threshold: stability requires the hyperedge to avoid the set of "
        "borderline vertex triples with probability o(1/m), which depends on unknown appearance probabilities");
  if (type != 2 && type != 3) throw std::invalid_argument("triangle type must be 1, 2 or 3");
  if (decay == Decay::exponential) return type == 2 ? Scalar(1) / Scalar(3) : Scalar(1) / Scalar(2);
  if (!(alpha > Scalar(2))) throw std::invalid_argument("polynomial decay needs alpha > 2");
  if (type == 3) return Scalar(1) / Scalar(2) - Scalar(1) / alpha;
  return std::min(Scalar(1) / Scalar(3) - Scalar(1) / alpha, Scalar(1) / Scalar(2) - Scalar(2) / alpha);
}

}  // namespace hypersub
