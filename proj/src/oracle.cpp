#include "ifss/oracle.hpp"

#include <stdexcept>

namespace ifss::oracle {

namespace {

void require_same_universe_(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b) {
  if (!same_universe(a, b)) throw std::invalid_argument("oracle: operands live on different universes");
}

template <typename SetT>
void require_same_frame_(const SetT& a, const SetT& b) {
  if (!(a.universe() == b.universe())) {
    throw std::invalid_argument("oracle: operands live on different universes");
  }
  if (!(a.parameters() == b.parameters())) {
    throw std::invalid_argument("oracle: operands use different parameter sets");
  }
}

template <typename SetT>
long long effective_m_(const SetT& a, const SetT& b, NormalizeOver normalize) {
  if (normalize == NormalizeOver::full) return static_cast<long long>(a.parameters().size());
  long long m = 0;
  for (std::size_t p = 0; p < a.parameters().size(); ++p) {
    if (a.in_support(p) || b.in_support(p)) ++m;
  }
  return m > 0 ? m : static_cast<long long>(a.parameters().size());
}

Rational finish_(DistanceKind kind, const Rational& abs_sum, const Rational& sq_sum,
                 long long scale, long long n) {
  switch (kind) {
    case DistanceKind::hamming: return abs_sum / Rational(scale);
    case DistanceKind::normalized_hamming: return abs_sum / Rational(scale * n);
    case DistanceKind::euclidean: return sq_sum / Rational(scale);
    case DistanceKind::normalized_euclidean: return sq_sum / Rational(scale * n);
  }
  return Rational(0);
}

}  // namespace

Rational if_distance(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b,
                     DistanceKind kind) {
  require_same_universe_(a, b);
  Rational abs_sum(0);
  Rational sq_sum(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational dmu = a.value(i).exact_mu() - b.value(i).exact_mu();
    Rational dnu = a.value(i).exact_nu() - b.value(i).exact_nu();
    abs_sum += dmu.abs() + dnu.abs();
    sq_sum += dmu * dmu + dnu * dnu;
  }
  return finish_(kind, abs_sum, sq_sum, 2, static_cast<long long>(a.size()));
}

Rational soft_distance(const SoftSet& a, const SoftSet& b, DistanceKind kind,
                       NormalizeOver normalize) {
  require_same_frame_(a, b);
  long long mismatches = 0;
  for (std::size_t p = 0; p < a.parameters().size(); ++p) {
    for (std::size_t e = 0; e < a.universe().size(); ++e) {
      if (a.contains(p, e) != b.contains(p, e)) ++mismatches;
    }
  }
  Rational sum(mismatches);
  return finish_(kind, sum, sum, effective_m_(a, b, normalize),
                 static_cast<long long>(a.universe().size()));
}

Rational ifss_distance(const IFSoftSet& a, const IFSoftSet& b, DistanceKind kind,
                       NormalizeOver normalize) {
  require_same_frame_(a, b);
  Rational abs_sum(0);
  Rational sq_sum(0);
  for (std::size_t p = 0; p < a.parameters().size(); ++p) {
    for (std::size_t e = 0; e < a.universe().size(); ++e) {
      Rational dmu = a.value(p, e).exact_mu() - b.value(p, e).exact_mu();
      Rational dnu = a.value(p, e).exact_nu() - b.value(p, e).exact_nu();
      abs_sum += dmu.abs() + dnu.abs();
      sq_sum += dmu * dmu + dnu * dnu;
    }
  }
  return finish_(kind, abs_sum, sq_sum, 2 * effective_m_(a, b, normalize),
                 static_cast<long long>(a.universe().size()));
}

Rational soft_similarity(const SoftSet& a, const SoftSet& b) {
  require_same_frame_(a, b);
  if (a.support().empty() && b.support().empty()) {
    throw std::invalid_argument("oracle: soft similarity undefined, both supports are empty");
  }
  long long num = 0;
  long long den = 0;
  bool supports_intersect = false;
  for (std::size_t p : a.support()) {
    if (b.in_support(p)) supports_intersect = true;
  }
  if (!supports_intersect) return Rational(0);
  for (std::size_t p = 0; p < a.parameters().size(); ++p) {
    long long dot = 0;
    long long norm_a = 0;
    long long norm_b = 0;
    for (std::size_t e = 0; e < a.universe().size(); ++e) {
      long long fa = a.contains(p, e) ? 1 : 0;
      long long gb = b.contains(p, e) ? 1 : 0;
      dot += fa * gb;
      norm_a += fa;
      norm_b += gb;
    }
    num += dot;
    den += norm_a > norm_b ? norm_a : norm_b;
  }
  if (den == 0) {
    throw std::invalid_argument("oracle: soft similarity undefined, every approximation is empty");
  }
  return Rational(num, den);
}

Rational ifss_similarity(const IFSoftSet& a, const IFSoftSet& b, SimilarityReading reading) {
  require_same_frame_(a, b);
  if (a.support() != b.support()) {
    throw std::invalid_argument("oracle: IFS similarity defined only for equal supports");
  }
  Rational num(0);
  Rational den(0);
  for (std::size_t p : a.support()) {
    Rational dot(0);
    Rational abs_dot(0);
    Rational norm_a(0);
    Rational norm_b(0);
    for (std::size_t e = 0; e < a.universe().size(); ++e) {
      Rational da = a.value(p, e).exact_mu() - a.value(p, e).exact_nu();
      Rational db = b.value(p, e).exact_mu() - b.value(p, e).exact_nu();
      dot += da * db;
      abs_dot += (da * db).abs();
      norm_a += da * da;
      norm_b += db * db;
    }
    num += reading == SimilarityReading::dot ? dot.abs() : abs_dot;
    den += max(norm_a, norm_b);
  }
  if (den == Rational(0)) return Rational(1);
  return num / den;
}

Rational ifss_similarity_prime(const IFSoftSet& a, const IFSoftSet& b, DistanceKind kind) {
  if (kind == DistanceKind::euclidean || kind == DistanceKind::normalized_euclidean) {
    throw std::invalid_argument("oracle: exact 1/(1+d) is only available for the hamming kinds");
  }
  return Rational(1) / (Rational(1) + ifss_distance(a, b, kind));
}

}  // namespace ifss::oracle
