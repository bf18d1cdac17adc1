#include "np/catalog.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "np/error.hpp"
#include "np/primes.hpp"

namespace np {

std::string_view to_string(FactKind k) noexcept {
  switch (k) {
    case FactKind::Denominator: return "denominator";
    case FactKind::Degree: return "degree";
    case FactKind::FacetCount: return "facet-count";
    case FactKind::AbsDeterminant: return "abs-determinant";
    case FactKind::LargestInvariantFactor: return "largest-invariant-factor";
    case FactKind::HodgeNumbers: return "hodge-numbers";
    case FactKind::OriginInterior: return "origin-interior";
    case FactKind::FaceInvariantFactors: return "face-invariant-factors";
    case FactKind::OrdinaryAt: return "ordinary-at";
    case FactKind::OrdinaryResidues: return "ordinary-residues";
    case FactKind::OrdinaryAllPrimesBelow: return "ordinary-all-primes-below";
    case FactKind::Dstar: return "dstar";
    case FactKind::CertifiedAt: return "certified-at";
  }
  return "unknown";
}

std::string_view to_string(Source s) noexcept {
  switch (s) {
    case Source::Published: return "published";
    case Source::Computed: return "computed";
    case Source::Immediate: return "immediate";
  }
  return "unknown";
}

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string list_string(const std::vector<Integer>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(x.get_str());
  return "[" + join(parts, ",") + "]";
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

Integer arg(std::span<const Integer> args, std::size_t i) {
  if (i >= args.size()) fail(ErrorKind::DegenerateInput, "fact is missing an argument");
  return args[i];
}

}  // namespace

std::string compute_fact(const Support& support, FactKind kind, std::span<const Integer> args) {
  switch (kind) {
    case FactKind::Denominator:
      return build(support).denominator.get_str();
    case FactKind::Degree:
      return build(support).normalized_volume.get_str();
    case FactKind::FacetCount:
      return std::to_string(build(support).facets_away_from_origin.size());
    case FactKind::AbsDeterminant:
      return DiagonalSimplex::from_support(support).group_order().get_str();
    case FactKind::LargestInvariantFactor:
      return DiagonalSimplex::from_support(support).largest_invariant_factor().get_str();
    case FactKind::HodgeNumbers: {
      const auto h = hodge_numbers(build(support));
      std::vector<std::string> parts;
      for (std::size_t k = 0; k < h.H.size(); ++k)
        if (h.H[k] != 0) parts.push_back(std::to_string(k) + ":" + std::to_string(h.H[k]));
      return join(parts, ",");
    }
    case FactKind::OriginInterior:
      return bool_string(build(support).cone_facets.empty());
    case FactKind::FaceInvariantFactors: {
      std::vector<std::string> parts;
      for (const auto& f : facial_decompose(support)) {
        if (!f.is_diagonal) {
          parts.push_back("non-diagonal");
          continue;
        }
        parts.push_back(list_string(DiagonalSimplex::from_support(f.restricted_support).smith().diag));
      }
      std::sort(parts.begin(), parts.end());
      return join(parts, ";");
    }
    case FactKind::OrdinaryAt:
      return std::string(to_string(ordinary_via_faces(support, arg(args, 0)).status));
    case FactKind::OrdinaryResidues: {
      const auto r = facial_ordinary_residues(support);
      std::vector<std::string> parts;
      for (const auto& c : r.classes) parts.push_back(c.get_str());
      return r.modulus.get_str() + ":{" + join(parts, ",") + "}";
    }
    case FactKind::OrdinaryAllPrimesBelow: {
      const Integer bound = arg(args, 0);
      for (auto p : primes_in_range(2, bound.get_ui())) {
        try {
          if (ordinary_via_faces(support, Integer(static_cast<unsigned long>(p))).status != FacialStatus::Ordinary)
            return "false";
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotCoprime) throw;
        }
      }
      return "true";
    }
    case FactKind::Dstar: {
      const auto idx = arg(args, 0).get_ui();
      if (idx > 2) fail(ErrorKind::DegenerateInput, "unknown strategy index");
      const auto strategy = static_cast<Strategy>(idx);
      Integer d = 1;
      for (const auto& f : facial_decompose(support))
        d = lcm(d, complete_collapse(f.restricted_support.points, strategy).dstar);
      return d.get_str();
    }
    case FactKind::CertifiedAt:
      return generic_ordinary_certificate(support, arg(args, 0)).certified ? "certified" : "no-certificate";
  }
  fail(ErrorKind::DegenerateInput, "unknown fact kind");
}

bool verify_fact(const NamedFamily& family, const Fact& fact) {
  return compute_fact(family.support, fact.kind, fact.args) == fact.expected;
}

std::string polynomial_string(const Support& support, std::span<const Integer> coefficients) {
  std::string out;
  for (std::size_t j = 0; j < support.points.size(); ++j) {
    const Integer c = j < coefficients.size() ? coefficients[j] : Integer(1);
    std::vector<std::string> factors;
    if (abs(c) != 1) factors.push_back(abs(c).get_str());
    const auto& v = support.points[j];
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      std::string f = "x" + std::to_string(i + 1);
      if (v[i] != 1) f += "^" + v[i].get_str();
      factors.push_back(std::move(f));
    }
    if (j == 0)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    out += join(factors, "*");
  }
  return out;
}

namespace {

class Params {
 public:
  Params(std::string_view family, const Parameters& p) : family_(family), p_(p) {}

  Integer scalar(const std::string& key, long min) {
    const auto& v = list(key, min);
    if (v.size() != 1) fail(ErrorKind::DegenerateInput, family_ + ": parameter '" + key + "' must be a single integer");
    return v.front();
  }

  const std::vector<Integer>& list(const std::string& key, long min) {
    const auto it = p_.find(key);
    if (it == p_.end()) fail(ErrorKind::DegenerateInput, family_ + ": missing parameter '" + key + "'");
    if (it->second.empty()) fail(ErrorKind::DegenerateInput, family_ + ": parameter '" + key + "' is empty");
    for (const auto& x : it->second)
      if (x < min)
        fail(ErrorKind::DegenerateInput,
             family_ + ": parameter '" + key + "' must be at least " + std::to_string(min));
    used_.insert(key);
    return it->second;
  }

  void finish() const {
    for (const auto& [key, unused] : p_)
      if (!used_.count(key)) fail(ErrorKind::DegenerateInput, family_ + ": unexpected parameter '" + key + "'");
  }

 private:
  std::string family_;
  const Parameters& p_;
  std::set<std::string> used_;
};

std::size_t small(const Integer& x, unsigned long limit, const std::string& what) {
  if (x > limit) fail(ErrorKind::DegenerateInput, what + " exceeds " + std::to_string(limit));
  return x.get_ui();
}

LatticePoint unit(std::size_t n, std::size_t i, long scale = 1) {
  LatticePoint e(n, Integer(0));
  e[i] = scale;
  return e;
}

LatticePoint negated(const std::vector<Integer>& v) {
  LatticePoint out;
  for (const auto& x : v) out.push_back(-x);
  return out;
}

Integer lcm_of(const std::vector<Integer>& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x);
  return l;
}

Integer sum_of(const std::vector<Integer>& v) {
  Integer s = 0;
  for (const auto& x : v) s += x;
  return s;
}

// Smallest prime p == 1 mod m.
Integer first_prime_one_mod(const Integer& m) {
  Integer p = m + 1;
  while (!is_prime(p)) p += m;
  return p;
}

Fact fact(FactKind kind, std::vector<Integer> args, std::string expected, Source source) {
  return Fact{kind, std::move(args), std::move(expected), source};
}

Fact fact(FactKind kind, std::string expected, Source source) { return fact(kind, {}, std::move(expected), source); }

using Builder = std::function<NamedFamily(Params&)>;

NamedFamily family(std::vector<LatticePoint> points, std::vector<Fact> facts) {
  NamedFamily f;
  const std::size_t n = points.front().size();
  f.support = Support::make(n, std::move(points));
  f.coefficients.assign(f.support.size(), Integer(1));
  f.facts = std::move(facts);
  return f;
}

NamedFamily monomial(Params& p) {
  const Integer d = p.scalar("d", 1);
  return family({{d}}, {fact(FactKind::Denominator, d.get_str(), Source::Published),
                        fact(FactKind::Degree, d.get_str(), Source::Immediate),
                        fact(FactKind::OrdinaryResidues, d.get_str() + ":{" + (d == 1 ? "0" : "1") + "}",
                             Source::Published)});
}

NamedFamily kloosterman(Params& p) {
  const std::size_t n = small(p.scalar("n", 1), 8, "n");
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(unit(n, i));
  pts.emplace_back(n, Integer(-1));
  return family(std::move(pts), {fact(FactKind::Degree, std::to_string(n + 1), Source::Published),
                                 fact(FactKind::Denominator, "1", Source::Published),
                                 fact(FactKind::OriginInterior, "true", Source::Published),
                                 fact(FactKind::OrdinaryAllPrimesBelow, {100}, "true", Source::Published)});
}

NamedFamily generalized_kloosterman(Params& p) {
  const auto& v = p.list("v", 1);
  const std::size_t n = v.size();
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(unit(n, i));
  pts.push_back(negated(v));
  std::vector<std::string> faces;
  std::vector<Integer> ones(n, Integer(1));
  faces.push_back(list_string(ones));
  for (const auto& vi : v) {
    auto f = ones;
    f.back() = vi;
    faces.push_back(list_string(f));
  }
  std::sort(faces.begin(), faces.end());
  return family(std::move(pts),
                {fact(FactKind::Degree, Integer(1 + sum_of(v)).get_str(), Source::Published),
                 fact(FactKind::FaceInvariantFactors, join(faces, ";"), Source::Published),
                 fact(FactKind::OrdinaryAt, {first_prime_one_mod(lcm_of(v))}, "ordinary", Source::Published)});
}

NamedFamily two_sided(Params& p) {
  const auto& u = p.list("u", 1);
  const auto& v = p.list("v", 1);
  if (u.size() != v.size()) fail(ErrorKind::DegenerateInput, "two_sided: u and v differ in length");
  const std::size_t n = u.size();
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(unit(n, i, u[i].get_si()));
  pts.push_back(negated(v));
  // Face i drops u_i e_i: determinant v_i * prod_{j != i} u_j; the last face prod u.
  Integer prod = 1;
  for (const auto& x : u) prod *= x;
  Integer degree = prod;
  for (std::size_t i = 0; i < n; ++i) degree += v[i] * (prod / u[i]);
  return family(std::move(pts), {fact(FactKind::Degree, degree.get_str(), Source::Computed)});
}

NamedFamily kloosterman_positive(Params& p) {
  const auto& v = p.list("v", 1);
  const std::size_t n = v.size();
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(unit(n, i));
  pts.push_back(v);
  return family(std::move(pts), {fact(FactKind::Degree, sum_of(v).get_str(), Source::Published)});
}

NamedFamily kloosterman_inverted(Params& p) {
  const auto& v = p.list("v", 1);
  const std::size_t n = v.size();
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(unit(n, i, -1));
  pts.push_back(negated(v));
  return family(std::move(pts), {fact(FactKind::Degree, sum_of(v).get_str(), Source::Published)});
}

NamedFamily bi_kloosterman(Params& p) {
  const auto& u = p.list("u", 1);
  const auto& v = p.list("v", 1);
  if (u.size() != v.size()) fail(ErrorKind::DegenerateInput, "bi_kloosterman: u and v differ in length");
  const std::size_t n = u.size();
  if (n < 2) fail(ErrorKind::DegenerateInput, "bi_kloosterman needs n >= 2");
  if (n > 8) fail(ErrorKind::DegenerateInput, "bi_kloosterman: n exceeds 8");
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(unit(n, i));
  pts.push_back(negated(u));
  for (std::size_t i = 0; i < n; ++i) pts.push_back(unit(n, i, -1));
  pts.push_back(v);
  auto all = u;
  all.insert(all.end(), v.begin(), v.end());
  std::vector<Fact> facts;
  if (std::all_of(all.begin(), all.end(), [](const Integer& x) { return x == 1; })) {
    const Integer faces = (Integer(1) << n) + 2 * n - 2;
    facts.push_back(fact(FactKind::FacetCount, faces.get_str(), Source::Published));
    facts.push_back(fact(FactKind::Degree, faces.get_str(), Source::Published));
    facts.push_back(fact(FactKind::OrdinaryAllPrimesBelow, {100}, "true", Source::Published));
  }
  return family(std::move(pts), std::move(facts));
}

NamedFamily fermat_deformation(Params& p) {
  const std::size_t n = small(p.scalar("n", 1), 4, "n");
  const std::size_t d = small(p.scalar("d", 1), 12, "d");
  std::vector<LatticePoint> pts;
  LatticePoint x(n, Integer(0));
  for (;;) {
    Integer total = 0;
    for (const auto& c : x) total += c;
    if (total > 0 && total < static_cast<unsigned long>(d)) pts.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == static_cast<unsigned long>(d - 1)) x[i++] = 0;
    if (i == n) break;
    ++x[i];
  }
  for (std::size_t i = 0; i < n; ++i) pts.push_back(unit(n, i, static_cast<long>(d)));
  Integer degree;
  mpz_ui_pow_ui(degree.get_mpz_t(), d, n);
  return family(std::move(pts),
                {fact(FactKind::Degree, degree.get_str(), Source::Published),
                 fact(FactKind::FacetCount, "1", Source::Published),
                 fact(FactKind::OrdinaryResidues, std::to_string(d) + ":{" + (d == 1 ? "0" : "1") + "}",
                      Source::Published)});
}

NamedFamily box(Params& p) {
  const auto& d = p.list("d", 1);
  const std::size_t n = d.size();
  std::vector<LatticePoint> pts;
  LatticePoint a(n, Integer(0));
  for (;;) {
    LatticePoint q = a;
    q.push_back(1);
    pts.push_back(std::move(q));
    std::size_t i = 0;
    while (i < n && a[i] == d[i]) a[i++] = 0;
    if (i == n) break;
    ++a[i];
  }
  std::vector<Fact> facts{fact(FactKind::Denominator, "1", Source::Published),
                          fact(FactKind::FacetCount, "1", Source::Immediate)};
  if (std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; }))
    facts.push_back(fact(FactKind::Dstar, {static_cast<long>(Strategy::ExhaustiveMinDstar)}, "1", Source::Published));
  return family(std::move(pts), std::move(facts));
}

NamedFamily dilated_simplex(Params& p) {
  const std::size_t n = small(p.scalar("n", 1), 4, "n");
  const std::size_t d = small(p.scalar("d", 1), 8, "d");
  const Integer D = p.scalar("D", 1);
  std::vector<LatticePoint> pts;
  LatticePoint a(n, Integer(0));
  for (;;) {
    Integer total = 0;
    for (const auto& c : a) total += c;
    if (total <= static_cast<unsigned long>(d)) {
      LatticePoint q = a;
      q.push_back(D);
      pts.push_back(std::move(q));
    }
    std::size_t i = 0;
    while (i < n && a[i] == static_cast<unsigned long>(d)) a[i++] = 0;
    if (i == n) break;
    ++a[i];
  }
  return family(std::move(pts),
                {fact(FactKind::Denominator, D.get_str(), Source::Immediate),
                 fact(FactKind::CertifiedAt, {first_prime_one_mod(D == 1 ? Integer(2) : D)}, "certified",
                      Source::Published)});
}

NamedFamily unit_simplex(Params& p) {
  const std::size_t n = small(p.scalar("n", 1), 8, "n");
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(unit(n, i));
  return family(std::move(pts), {fact(FactKind::AbsDeterminant, "1", Source::Immediate),
                                 fact(FactKind::HodgeNumbers, "0:1", Source::Immediate)});
}

NamedFamily from_counterexample(const CounterexampleSpec& spec, std::vector<Fact> facts) {
  const Support s = build_counterexample(spec);
  return family(s.points, std::move(facts));
}

NamedFamily five_dim(Params&) {
  return from_counterexample({CounterexampleKind::FiveDim},
                             {fact(FactKind::AbsDeterminant, "3", Source::Published),
                              fact(FactKind::Denominator, "1", Source::Published),
                              fact(FactKind::HodgeNumbers, "0:1,2:1,3:1", Source::Published),
                              fact(FactKind::OrdinaryAt, {5}, "non-ordinary", Source::Published),
                              fact(FactKind::OrdinaryAt, {7}, "ordinary", Source::Published)});
}

NamedFamily extend_dim(Params& p) {
  const std::size_t n = small(p.scalar("n", 5), 10, "n");
  return from_counterexample({CounterexampleKind::ExtendDim, n},
                             {fact(FactKind::Denominator, "1", Source::Published),
                              fact(FactKind::OrdinaryAt, {5}, "non-ordinary", Source::Published)});
}

NamedFamily four_dim(Params& p) {
  const Integer D = p.scalar("D", 2);
  const unsigned k = static_cast<unsigned>(small(p.scalar("k", 2), 16, "k"));
  Integer dk, dk1, det;
  mpz_pow_ui(dk.get_mpz_t(), D.get_mpz_t(), k);
  mpz_pow_ui(dk1.get_mpz_t(), D.get_mpz_t(), k - 1);
  det = dk * D;
  // Smallest prime p == 1 + D^(k-1) mod D^k.
  Integer bad = 1 + dk1;
  while (!is_prime(bad)) bad += dk;
  return from_counterexample({CounterexampleKind::FourDim, 4, D, k},
                             {fact(FactKind::Denominator, D.get_str(), Source::Published),
                              fact(FactKind::LargestInvariantFactor, dk.get_str(), Source::Published),
                              fact(FactKind::AbsDeterminant, det.get_str(), Source::Published),
                              fact(FactKind::OrdinaryAt, {bad}, "non-ordinary", Source::Published),
                              fact(FactKind::OrdinaryAt, {first_prime_one_mod(dk)}, "ordinary", Source::Published)});
}

const std::map<std::string_view, Builder>& registry() {
  static const std::map<std::string_view, Builder> r{
      {"monomial", monomial},
      {"kloosterman", kloosterman},
      {"generalized_kloosterman", generalized_kloosterman},
      {"two_sided", two_sided},
      {"kloosterman_positive", kloosterman_positive},
      {"kloosterman_inverted", kloosterman_inverted},
      {"bi_kloosterman", bi_kloosterman},
      {"fermat_deformation", fermat_deformation},
      {"box", box},
      {"dilated_simplex", dilated_simplex},
      {"unit_simplex", unit_simplex},
      {"five_dim", five_dim},
      {"extend_dim", extend_dim},
      {"four_dim", four_dim},
  };
  return r;
}

}  // namespace

std::vector<std::string_view> family_names() {
  std::vector<std::string_view> out;
  for (const auto& [name, unused] : registry()) out.push_back(name);
  return out;
}

NamedFamily make_family(std::string_view name, const Parameters& parameters) {
  const auto it = registry().find(name);
  if (it == registry().end()) fail(ErrorKind::DegenerateInput, "unknown family '" + std::string(name) + "'");
  Params p(name, parameters);
  NamedFamily f = it->second(p);
  p.finish();
  f.name = std::string(name);
  f.parameters = parameters;
  return f;
}

}  // namespace np
