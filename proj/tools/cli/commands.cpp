#include "cli/commands.hpp"

#include "np/primes.hpp"

namespace np::cli {

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateMatrix:
    case ErrorKind::DegenerateInput:
    case ErrorKind::NotFullDimensional:
    case ErrorKind::IncomparablePolygons:
      return kExitGeometry;
    case ErrorKind::NotDiagonal:
    case ErrorKind::NotIndecomposable:
      return kExitShape;
    case ErrorKind::NotCoprime:
    case ErrorKind::NotPrime:
      return kExitArithmetic;
    case ErrorKind::Parse:
      return kExitInput;
  }
  return kExitInput;
}

namespace {

Report points_json(const std::vector<LatticePoint>& pts) {
  Report out = Report::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

Report header(std::string_view command, const InputDocument& in) {
  Report input;
  input["n"] = in.n;
  if (in.family) {
    input["family"] = *in.family;
    Report params = Report::object();
    for (const auto& [key, values] : in.parameters) params[key] = to_json(values);
    input["parameters"] = params;
  }
  input["support"] = points_json(in.support.points);
  input["coefficients"] = to_json(in.coefficients);
  input["polynomial"] = polynomial_string(in.support, in.coefficients);
  Report r;
  r["command"] = command;
  r["input"] = std::move(input);
  r["summary"] = Report::object();
  r["table"] = Report::array();
  return r;
}

// Group and residue data for a support that is diagonal, or whose faces all are.
struct Classification {
  std::string method;
  ResidueClasses classes;
  std::optional<DiagonalSimplex> simplex;
};

Classification classify(const Support& support) {
  if (support.size() == support.dim) {
    auto ds = DiagonalSimplex::from_support(support);
    auto classes = ordinary_residues(ds);
    return {"diagonal", std::move(classes), std::move(ds)};
  }
  return {"facial", facial_ordinary_residues(support), std::nullopt};
}

}  // namespace

Report cmd_hodge(const InputDocument& in) {
  Report r = header("hodge", in);
  const auto delta = build(in.support);
  const auto h = hodge_numbers(delta);
  auto& s = r["summary"];
  s["denominator"] = to_json(delta.denominator);
  s["normalized_volume"] = to_json(delta.normalized_volume);
  s["facets_away_from_origin"] = delta.facets_away_from_origin.size();
  Report facets = Report::array();
  for (const auto& f : delta.facets_away_from_origin) facets.push_back(to_json(f.normal));
  s["facet_normals"] = std::move(facets);
  s["hodge_polygon"] = polygon_json(h.polygon);
  s["hodge_slopes"] = slopes_json(h.polygon);
  for (std::size_t k = 0; k < h.H.size(); ++k) {
    r["table"].push_back(Report{{"k", k},
                                {"weight", Rational(Integer(static_cast<unsigned long>(k)), h.denominator).to_string()},
                                {"W", h.W[k]},
                                {"H", h.H[k]}});
  }
  return r;
}

Report cmd_diagonal(const InputDocument& in, const Integer& p) {
  Report r = header("diagonal", in);
  const auto ds = DiagonalSimplex::from_support(in.support);
  const auto orbit_list = orbits(ds, p);
  const auto np = newton_polygon_diag(ds, p);
  const auto hp = hodge_polygon(ds.polyhedron());
  const auto verdict = is_ordinary(ds, p);
  const auto cmp = lies_above(np, hp);
  auto& s = r["summary"];
  s["p"] = to_json(p);
  s["determinant"] = to_json(ds.determinant());
  s["invariant_factors"] = to_json(ds.smith().diag);
  s["denominator"] = to_json(ds.polyhedron().denominator);
  s["ordinary"] = verdict.ordinary;
  s["witness"] = verdict.witness ? to_json(verdict.witness->r) : Report();
  s["witness_norm"] = verdict.witness ? to_json(verdict.witness->norm) : Report();
  s["newton_polygon"] = polygon_json(np);
  s["newton_slopes"] = slopes_json(np);
  s["hodge_polygon"] = polygon_json(hp);
  s["hodge_slopes"] = slopes_json(hp);
  s["relation"] = std::string(to_string(cmp.relation));
  s["endpoints_coincide"] = cmp.endpoints_coincide;
  s["first_difference_x"] = cmp.witness_x ? to_json(*cmp.witness_x) : Report();
  for (const auto& o : orbit_list) {
    Report members = Report::array();
    for (const auto& m : o.members) members.push_back(to_json(m.r));
    r["table"].push_back(Report{{"representative", to_json(o.representative.r)},
                                {"norm", to_json(o.representative.norm)},
                                {"degree", o.degree()},
                                {"slope", to_json(o.slope)},
                                {"members", std::move(members)}});
  }
  return r;
}

Report cmd_ordinary_classes(const InputDocument& in) {
  Report r = header("ordinary-classes", in);
  const auto c = classify(in.support);
  auto& s = r["summary"];
  s["method"] = c.method;
  s["modulus"] = to_json(c.classes.modulus);
  s["classes"] = to_json(c.classes.classes);
  s["mu"] = to_json(c.classes.mu);
  s["phi"] = to_json(euler_phi(c.classes.modulus));
  s["density"] = to_json(c.classes.density);
  const Integer& m = c.classes.modulus;
  for (Integer a = (m == 1 ? 0 : 1); a < (m == 1 ? 1 : m); ++a) {
    if (m != 1 && gcd(a, m) != 1) continue;
    const bool ordinary =
        std::find(c.classes.classes.begin(), c.classes.classes.end(), a) != c.classes.classes.end();
    r["table"].push_back(Report{{"residue", to_json(a)}, {"ordinary", ordinary}});
  }
  return r;
}

Report cmd_decompose(const InputDocument& in, Strategy strategy, const std::optional<Integer>& p) {
  Report r = header("decompose", in);
  const auto delta = build(in.support);
  const auto faces = facial_decompose(in.support);
  auto& s = r["summary"];
  s["strategy"] = std::string(to_string(strategy));
  s["denominator"] = to_json(delta.denominator);

  std::optional<Certificate> cert;
  if (p) cert = generic_ordinary_certificate(in.support, *p, strategy);

  Integer dstar = 1;
  Report face_list = Report::array();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& f = faces[i];
    const auto collapse = complete_collapse(f.restricted_support.points, strategy);
    dstar = lcm(dstar, collapse.dstar);
    Report face{{"face", i},
                {"normal", to_json(f.facet.normal)},
                {"local_denominator", to_json(f.facet.local_denominator)},
                {"points", points_json(f.restricted_support.points)},
                {"diagonal", f.is_diagonal}};
    face["invariant_factors"] =
        f.is_diagonal ? to_json(DiagonalSimplex::from_support(f.restricted_support).smith().diag) : Report();
    face["dstar"] = to_json(collapse.dstar);
    face["choice_log"] = points_json(collapse.choice_log);
    face_list.push_back(std::move(face));

    const FaceCertificate* fc = cert ? &cert->faces[i] : nullptr;
    const auto& pieces = fc ? fc->pieces : collapse.pieces;
    const auto& factors = fc ? fc->piece_invariant_factors : collapse.piece_invariant_factors;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      Report row{{"face", i},
                 {"route", fc ? fc->route : std::string("collapse")},
                 {"piece", j},
                 {"points", points_json(pieces[j])},
                 {"invariant_factor", to_json(factors[j])}};
      if (fc) row["ordinary"] = !(fc->failing_piece && *fc->failing_piece == j) ;
      r["table"].push_back(std::move(row));
    }
  }
  s["dstar"] = to_json(dstar);
  s["faces"] = std::move(face_list);
  if (p) {
    s["p"] = to_json(*p);
    const auto v = ordinary_via_faces(in.support, *p);
    s["facial_verdict"] = std::string(to_string(v.status));
    s["facial_witness_face"] = v.witness_face ? Report(*v.witness_face) : Report();
    s["certificate"] = cert->certified ? "certified" : "no-certificate";
    s["certificate_reason"] = cert->reason.empty() ? Report() : Report(cert->reason);
  }
  return r;
}

Report cmd_scan(const InputDocument& in, std::uint64_t bound) {
  Report r = header("scan", in);
  const auto c = classify(in.support);
  std::uint64_t tested = 0, ordinary = 0, excluded = 0;
  for (auto pv : primes_in_range(2, bound)) {
    const Integer p(static_cast<unsigned long>(pv));
    std::string verdict;
    try {
      const bool ok = c.simplex ? is_ordinary(*c.simplex, p).ordinary
                                : ordinary_via_faces(in.support, p).status == FacialStatus::Ordinary;
      verdict = ok ? "ordinary" : "non-ordinary";
      ++tested;
      if (ok) ++ordinary;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotCoprime) throw;
      verdict = "excluded";
      ++excluded;
    }
    const Integer residue = mod(p, c.classes.modulus);
    Report row{{"p", to_json(p)}, {"residue", to_json(residue)}, {"verdict", verdict}};
    if (verdict != "excluded")
      row["class_predicts_ordinary"] =
          std::find(c.classes.classes.begin(), c.classes.classes.end(), residue) != c.classes.classes.end();
    r["table"].push_back(std::move(row));
  }
  auto& s = r["summary"];
  s["method"] = c.method;
  s["bound"] = std::to_string(bound);
  s["modulus"] = to_json(c.classes.modulus);
  s["classes"] = to_json(c.classes.classes);
  s["primes_tested"] = tested;
  s["primes_excluded"] = excluded;
  s["primes_ordinary"] = ordinary;
  s["empirical_ratio"] = tested ? to_json(Rational(Integer(static_cast<unsigned long>(ordinary)),
                                                   Integer(static_cast<unsigned long>(tested))))
                                : Report();
  s["predicted_density"] = to_json(c.classes.density);
  return r;
}

}  // namespace np::cli
