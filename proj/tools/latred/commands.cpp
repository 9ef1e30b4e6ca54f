#include "latred/commands.hpp"

#include "latred/building.hpp"
#include "latred/covers.hpp"
#include "latred/json_io.hpp"
#include "latred/latff.hpp"
#include "latred/latz.hpp"
#include "latred/sarith.hpp"

namespace latred::cli {

using namespace json_io;

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::parse, what); }

const json& field(const json& in, const char* key) {
  if (!in.is_object() || !in.contains(key)) bad(std::string("missing field '") + key + "'");
  return in.at(key);
}

const json& sub_or_self(const json& in, const char* key) { return in.is_object() && in.contains(key) ? in.at(key) : in; }

bool ff_side(const json& in, const Options& o) {
  if (o.ring == "z") return false;
  if (o.ring == "ff") return true;
  if (o.ring != "auto") bad("--ring must be z, ff or auto");
  return in.is_object() && (in.contains("q") || in.contains("space") || in.contains("vertices"));
}

json ints(const std::vector<long>& v) {
  json a = json::array();
  for (long x : v) a.push_back(x);
  return a;
}

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json integers(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

long opt_or(const std::optional<long>& opt, const json& in, const char* key) {
  if (opt) return *opt;
  return long_from(field(in, key));
}

// ---- lattices ----

json canfilt(const json& in, const Options& o) {
  if (ff_side(in, o)) {
    latff::Invariants inv = latff::ff_invariants_and_filtration(volume_space_from(sub_or_self(in, "space")));
    json out = report_json(inv.report);
    out["ring"] = "F_q[t]";
    out["r"] = ints(inv.r);
    return out;
  }
  json out = report_json(latz::canonical_filtration(inner_product_from(sub_or_self(in, "form"))));
  out["ring"] = "Z";
  return out;
}

json volume_or_c(const json& in, const Options& o, bool want_c) {
  if (want_c && !in.contains("summand")) bad("cvalue needs a summand");
  if (ff_side(in, o)) {
    latff::VolumeSpace vs = volume_space_from(sub_or_self(in, "space"));
    const FiniteField& F = vs.field();
    latff::FFSummand w = in.contains("summand") ? latff::FFSummand(F, ff_rows_from(F, in.at("summand"), vs.n()))
                                                : latff::FFSummand::full(F, vs.n());
    json out{{"rank", w.rank()}, {"summand", summand_json(w.basis())}};
    if (want_c) out["c"] = std::to_string(latff::ff_c_value(vs, w));
    else out["logvol"] = std::to_string(latff::ff_logvol(vs, w));
    return out;
  }
  latz::InnerProduct s = inner_product_from(sub_or_self(in, "form"));
  latz::ZSummand w = in.contains("summand") ? latz::ZSummand(z_rows_from(in.at("summand"), s.n())) : latz::ZSummand::full(s.n());
  json out{{"rank", w.rank()}, {"summand", summand_json(w.basis())}};
  if (want_c) out["c"] = log_json(latz::c_value(s, w), "c_sq_ratio");
  else out["logvol"] = log_json(latz::logvol(s, w), "vol_sq");
  return out;
}

json ff_invariants(const json& in, const Options&) {
  latff::VolumeSpace vs = volume_space_from(sub_or_self(in, "space"));
  latff::DiagonalBasis db = latff::diagonal_basis(vs);
  long sum = 0;
  for (long x : db.r) sum += x;
  return {{"r", ints(db.r)}, {"logvol", std::to_string(sum)}};
}

json diagonal_basis(const json& in, const Options&) {
  latff::VolumeSpace vs = volume_space_from(sub_or_self(in, "space"));
  latff::DiagonalBasis db = latff::diagonal_basis(vs);
  return {{"r", ints(db.r)},
          {"w", matrix_json(db.w).at("entries")},
          {"S_basis", matrix_json(db.b.transpose()).at("entries")},
          {"q", vs.field().order()},
          {"n", vs.n()}};
}

// ---- localized ----

json intersect(const json& in, const Options& o) {
  const json& w = field(in, "summand");
  if (ff_side(in, o)) {
    const FiniteField& F = field_from(in);
    sarith::FStructure S = f_structure_from(F, field(in, "structure"));
    sarith::FLocSummand W = sarith::loc_summand(S.ring, rf_matrix(F, field(w, "basis")));
    Matrix<FqRational> I = sarith::intersect_integral(W, S);
    return {{"lattice_basis", matrix_json(sarith::lattice_basis(S)).at("entries")},
            {"summand", summand_json(W.basis)},
            {"intersection", {{"rank", I.rows()}, {"basis", matrix_json(I).at("entries")}}}};
  }
  sarith::ZStructure S = z_structure_from(field(in, "structure"));
  sarith::ZLocSummand W = sarith::loc_summand(S.ring, rational_matrix(field(w, "basis")));
  Matrix<Rational> I = sarith::intersect_integral(W, S);
  return {{"lattice_basis", matrix_json(sarith::lattice_basis(S)).at("entries")},
          {"summand", summand_json(W.basis)},
          {"intersection", {{"rank", I.rows()}, {"basis", matrix_json(I).at("entries")}}}};
}

json loc_volume(const json& in, const Options& o) {
  if (ff_side(in, o)) {
    latff::VolumeSpace vs = volume_space_from(field(in, "space"));
    const FiniteField& F = vs.field();
    sarith::FStructure S = f_structure_from(F, field(in, "structure"));
    sarith::FLocSummand W = in.contains("summand")
                                ? sarith::loc_summand(S.ring, rf_matrix(F, field(in.at("summand"), "basis")))
                                : sarith::FLocSummand{Matrix<FqPoly>::identity(static_cast<std::size_t>(vs.n()), FqPoly::zero(F), FqPoly::constant(F, 1))};
    json out{{"rank", W.rank()}, {"summand", summand_json(W.basis)}, {"logvol", std::to_string(sarith::loc_logvol(W, vs, S))}};
    if (W.rank() > 0 && W.rank() < vs.n()) out["c"] = std::to_string(sarith::loc_c(W, vs, S));
    return out;
  }
  latz::InnerProduct s = inner_product_from(field(in, "form"));
  sarith::ZStructure S = z_structure_from(field(in, "structure"));
  sarith::ZLocSummand W = in.contains("summand")
                              ? sarith::loc_summand(S.ring, rational_matrix(field(in.at("summand"), "basis")))
                              : sarith::ZLocSummand{Matrix<Integer>::identity(static_cast<std::size_t>(s.n()), 0, 1)};
  json out{{"rank", W.rank()}, {"summand", summand_json(W.basis)}, {"logvol", log_json(sarith::loc_logvol(W, s, S), "vol_sq")}};
  if (W.rank() > 0 && W.rank() < s.n()) out["c"] = log_json(sarith::loc_c(W, s, S), "c_sq_ratio");
  return out;
}

sarith::Mode mode_of(const json& in, const Options& o) {
  std::string m = !o.mode.empty() ? o.mode : (in.contains("mode") ? in.at("mode").get<std::string>() : "GL");
  if (m == "GL" || m == "gl") return sarith::Mode::GL;
  if (m == "SL" || m == "sl") return sarith::Mode::SL;
  bad("mode must be GL or SL");
}

template <class R>
json factor_report(const R& ring, const FMatrix<R>& A, const std::vector<typename R::Element>& T, sarith::Mode mode,
                   const std::optional<FMatrix<R>>& G) {
  const auto K = ring.field();
  sarith::Factorization<R> f = G ? sarith::factorize_conjugated(ring, A, T, mode, *G) : sarith::factorize(ring, A, T, mode);
  json out{{"B", matrix_json(f.B).at("entries")}, {"C", matrix_json(f.C).at("entries")}};
  json checks{{"product", multiply(f.B, f.C, K.zero()) == A}};
  if (!G) {
    checks["B_invertible_away_from_T"] = sarith::matrix_in_gl_away(ring, f.B, T);
    checks["C_invertible_at_T"] = sarith::matrix_in_gl_at(ring, f.C, T);
  }
  auto str = [](const auto& x) { return json_io::matrix_json(Matrix<std::decay_t<decltype(x)>>(1, 1, x)).at("entries")[0][0]; };
  checks["det_B"] = str(determinant(K, f.B));
  checks["det_C"] = str(determinant(K, f.C));
  out["checks"] = checks;
  out["mode"] = mode == sarith::Mode::SL ? "SL" : "GL";
  return out;
}

json factorize(const json& in, const Options& o) {
  const sarith::Mode mode = mode_of(in, o);
  if (ff_side(in, o)) {
    const FiniteField& F = field_from(in);
    std::optional<Matrix<FqRational>> G;
    if (in.contains("G")) G = rf_matrix(F, in.at("G"));
    return factor_report(latff::poly_ring(F), rf_matrix(F, field(in, "A")), f_primes_from(F, field(in, "T")), mode, G);
  }
  std::optional<Matrix<Rational>> G;
  if (in.contains("G")) G = rational_matrix(in.at("G"));
  return factor_report(IntegerRing{}, rational_matrix(field(in, "A")), z_primes_from(field(in, "T")), mode, G);
}

// ---- building ----

int n_of(const json& in, const Options& o) {
  if (o.n) return static_cast<int>(*o.n);
  if (in.contains("n")) return static_cast<int>(long_from(in.at("n")));
  if (in.contains("basis") && in.at("basis").is_array()) return static_cast<int>(in.at("basis").size());
  bad("dimension needed (--n or \"n\")");
}

local::PAdic padic_of(const json& in, const Options& o) {
  Integer p = o.p ? Integer(*o.p) : integer_from(field(in, "p"));
  if (!is_prime(p)) fail(ErrorKind::invalid_place, "p must be prime");
  return {p};
}

bool degree_side(const json& in, const Options& o) {
  if (o.p && o.q) bad("give --p or --q, not both");
  if (o.p) return false;
  if (o.q) return true;
  if (in.contains("p")) return false;
  if (in.contains("q")) return true;
  bad("building context needs --p (Z_(p)) or --q (F_q[t] at infinity)");
}

const FiniteField& fq_of(const json& in, const Options& o) {
  if (o.q) return field_from(json{{"q", *o.q}});
  return field_from(in);
}

template <class L, class Read>
json neighbors_of(const building::Context<L>& ctx, const json& in, Read&& read) {
  building::Vertex<L> v = in.contains("basis") || in.contains("r")
                              ? read(ctx, in)
                              : building::canonical_vertex(ctx, local::LMatrix<L>::identity(static_cast<std::size_t>(ctx.n), ctx.O.field().zero(), ctx.O.field().one()));
  json list = json::array();
  for (const auto& [w, k] : building::neighbors(ctx, v))
    list.push_back({{"vertex", vertex_json(ctx, w)}, {"label_difference", k}});
  return {{"vertex", vertex_json(ctx, v)}, {"count", list.size()}, {"neighbors", list}};
}

json building_neighbors(const json& in, const Options& o) {
  const int n = n_of(in, o);
  if (degree_side(in, o)) {
    building::Context<local::DegreeLocal> ctx{{&fq_of(in, o)}, n};
    return neighbors_of(ctx, in, [](const auto& c, const json& j) { return d_vertex_from(c, j); });
  }
  building::Context<local::PAdic> ctx{padic_of(in, o), n};
  return neighbors_of(ctx, in, [](const auto& c, const json& j) { return p_vertex_from(c, j); });
}

json label_diff(const json& in, const Options& o) {
  const json& a = field(in, "v1");
  const json& b = field(in, "v2");
  int n = o.n ? static_cast<int>(*o.n) : n_of(in.contains("n") ? in : a, o);
  if (degree_side(in, o)) {
    building::Context<local::DegreeLocal> ctx{{&fq_of(in, o)}, n};
    auto v1 = d_vertex_from(ctx, a), v2 = d_vertex_from(ctx, b);
    return {{"label_difference", building::label_difference(ctx, v1, v2)}, {"adjacent", building::adjacent(ctx, v1, v2)}};
  }
  building::Context<local::PAdic> ctx{padic_of(in, o), n};
  auto v1 = p_vertex_from(ctx, a), v2 = p_vertex_from(ctx, b);
  return {{"label_difference", building::label_difference(ctx, v1, v2)}, {"adjacent", building::adjacent(ctx, v1, v2)}};
}

json chamber_count(const json& in, const Options& o) {
  const long n = opt_or(o.n, in, "n"), r = opt_or(o.r, in, "r"), k = opt_or(o.k, in, "k");
  if (n < 2 || n > 64 || r < 2 || r > 1 << 16) fail(ErrorKind::range, "need 2 <= n <= 64 and 2 <= r <= 65536");
  building::ChamberCount c = building::count_chambers_on_edge(static_cast<int>(n), static_cast<std::uint32_t>(r), static_cast<int>(k));
  json out{{"n", n}, {"r", r}, {"k", k}, {"formula", to_string(c.formula)}};
  if (c.brute_force) {
    out["brute_force"] = to_string(*c.brute_force);
    out["agree"] = c.verified();
  }
  Rational l2 = building::edge_length_sq(static_cast<int>(k), static_cast<int>(n));
  out["edge_length_sq"] = to_string(l2);
  out["edge_length"] = decimal(building::edge_length(static_cast<int>(k), static_cast<int>(n)));
  return out;
}

json apartment(const json& in, const Options&) {
  std::vector<Integer> m;
  for (const auto& x : field(in, "m")) m.push_back(integer_from(x));
  return {{"m", integers(m)}, {"coords", rationals(building::apartment_coords(m))}};
}

json decomposition_json(const building::SimplexDecomposition& d) {
  json pts = json::array();
  for (const auto& p : d.points) pts.push_back(integers(p));
  return {{"points", pts}, {"mu", rationals(d.mu)}, {"valid", building::valid(d)}};
}

json triangulate(const json& in, const Options&) {
  std::vector<Rational> x;
  for (const auto& v : field(in, "x")) x.push_back(rational_from(v));
  building::SimplexDecomposition d = building::triangulate_point(x);
  json out = decomposition_json(d);
  out["reconstructs"] = building::reconstruct(d) == x;
  if (in.contains("lambda")) {
    Rational lambda = rational_from(in.at("lambda"));
    building::SimplexDecomposition s = building::diagonal_shift(d, lambda);
    std::vector<Rational> y = x;
    for (auto& v : y) v += lambda;
    json sj = decomposition_json(s);
    sj["matches_direct"] = building::triangulate_point(y).points == s.points && building::triangulate_point(y).mu == s.mu;
    out["shifted"] = sj;
  }
  return out;
}

// ---- covers ----

template <class Primes>
covers::Threshold theta_of(const json& in, const Options& o, int n, const Primes* T) {
  std::string choice = o.theta;
  if (choice.empty()) choice = in.contains("theta") ? (in.at("theta").is_string() ? in.at("theta").get<std::string>() : in.at("theta").dump()) : "adjacent";
  if (choice == "zero") return covers::zero_threshold();
  if (choice == "adjacent") return covers::adjacent_threshold(n);
  if (choice == "localized") {
    if (!T) bad("the localized threshold needs an integral structure");
    return covers::localized_threshold(n, *T);
  }
  Rational t = parse_rational(choice);
  if (t < 0) fail(ErrorKind::range, "threshold must be nonnegative");
  return {t, LogValue()};
}

json theta_json(const covers::Threshold& t) { return {{"exact", t.str()}, {"decimal", decimal(t.to_double())}}; }

int n_dim(const covers::ZPoint& x) { return x.s.n(); }
int n_dim(const covers::FFPoint& x) { return static_cast<int>(x.vertices.front().basis.rows()); }

template <class Point>
json membership_report(const Point& x, const covers::Threshold& theta, const Options& o) {
  json members = json::array();
  for (const auto& m : covers::cover_membership(x, theta)) members.push_back(member_json(m));
  json out{{"theta", theta_json(theta)}, {"count", members.size()}, {"members", members}};
  if (!o.beta.empty()) {
    Rational beta = parse_rational(o.beta);
    Rational C = o.lipschitz.empty() ? Rational(4 * n_dim(x)) : parse_rational(o.lipschitz);
    if (beta < 0 || C < 0) fail(ErrorKind::range, "beta and the Lipschitz constant must be nonnegative");
    out["thinned"] = {{"beta", to_string(beta)}, {"lipschitz", to_string(C)}, {"member", covers::thinned_membership(x, theta, beta, C)}};
  }
  return out;
}

covers::Threshold point_theta(const covers::ZPoint& x, const json& in, const Options& o) {
  return theta_of(in, o, x.s.n(), x.B ? &x.B->T : nullptr);
}
covers::Threshold point_theta(const covers::FFPoint& x, const json& in, const Options& o) {
  return theta_of(in, o, n_dim(x), x.B ? &x.B->T : nullptr);
}

json cover_membership(const json& in, const Options& o) {
  if (ff_side(in, o)) {
    covers::FFPoint x = ff_point_from(in);
    return membership_report(x, point_theta(x, in, o), o);
  }
  covers::ZPoint x = z_point_from(in);
  return membership_report(x, point_theta(x, in, o), o);
}

json core_test(const json& in, const Options& o) {
  const bool bare_r = in.is_object() && in.contains("r") && !in.contains("q");
  if (bare_r) {
    std::vector<long> r;
    for (const auto& x : in.at("r")) r.push_back(long_from(x));
    covers::Threshold theta = theta_of<std::vector<Integer>>(in, o, static_cast<int>(r.size()), nullptr);
    if (!theta.log_part.is_zero()) bad("the vertex form needs a rational threshold");
    return {{"theta", theta_json(theta)}, {"core", covers::core_test_r(r, theta.base)}, {"normalized_r", ints(covers::normalize_r(r))}};
  }
  if (ff_side(in, o)) {
    covers::FFPoint x = ff_point_from(in);
    covers::Threshold theta = point_theta(x, in, o);
    json out{{"theta", theta_json(theta)}, {"core", covers::core_test(x, theta)}};
    if (x.vertices.size() == 1 && !x.B) {
      std::vector<long> r = covers::vertex_invariants(*x.F, x.vertices.front());
      out["r"] = ints(r);
      out["normalized_r"] = ints(covers::normalize_r(r));
    }
    return out;
  }
  covers::ZPoint x = z_point_from(in);
  covers::Threshold theta = point_theta(x, in, o);
  return {{"theta", theta_json(theta)}, {"core", covers::core_test(x, theta)}};
}

json core_reps(const json& in, const Options& o) {
  const int n = static_cast<int>(opt_or(o.n, in, "n"));
  covers::Threshold theta = theta_of<std::vector<Integer>>(in, o, n, nullptr);
  if (!theta.log_part.is_zero()) bad("core representatives need a rational threshold");
  json reps = json::array();
  for (const auto& r : covers::core_orbit_reps(n, theta.base)) reps.push_back(ints(r));
  return {{"n", n}, {"theta", theta_json(theta)}, {"count", reps.size()}, {"reps", reps}};
}

}  // namespace

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table{
      {"canfilt", canfilt},
      {"volume", [](const json& in, const Options& o) { return volume_or_c(in, o, false); }},
      {"cvalue", [](const json& in, const Options& o) { return volume_or_c(in, o, true); }},
      {"ff-invariants", ff_invariants},
      {"diagonal-basis", diagonal_basis},
      {"intersect", intersect},
      {"loc-volume", loc_volume},
      {"factorize", factorize},
      {"building-neighbors", building_neighbors},
      {"label-diff", label_diff},
      {"chamber-count", chamber_count},
      {"apartment", apartment},
      {"triangulate", triangulate},
      {"cover-membership", cover_membership},
      {"core-test", core_test},
      {"core-reps", core_reps},
      {"selfcheck", [](const json&, const Options& o) { return selfcheck(o); }},
  };
  return table;
}

}  // namespace latred::cli
