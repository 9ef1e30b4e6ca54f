#include "latred/json_io.hpp"

#include <cstdio>
#include <numeric>

namespace latred::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::parse, what); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

const json& array_of(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

// nested arrays, or the object form with "entries"
const json& entries_of(const json& j) {
  if (j.is_object()) return array_of(need(j, "entries"), "entries");
  return array_of(j, "matrix");
}

template <class T, class F>
Matrix<T> read_matrix(const json& j, const T& zero, F&& entry) {
  const json& e = entries_of(j);
  if (e.empty()) {
    std::size_t cols = j.is_object() && j.contains("cols") ? static_cast<std::size_t>(long_from(j.at("cols"))) : 0;
    return Matrix<T>(0, cols, zero);
  }
  std::vector<std::vector<T>> rows;
  const std::size_t cols = array_of(e.front(), "matrix row").size();
  for (const auto& r : e) {
    array_of(r, "matrix row");
    if (r.size() != cols) bad("ragged matrix rows");
    std::vector<T> row;
    for (const auto& x : r) row.push_back(entry(x));
    rows.push_back(std::move(row));
  }
  Matrix<T> m = Matrix<T>::from_rows(rows, cols);
  if (j.is_object()) {
    if (j.contains("rows") && long_from(j.at("rows")) != static_cast<long>(m.rows())) bad("row count mismatch");
    if (j.contains("cols") && long_from(j.at("cols")) != static_cast<long>(m.cols())) bad("column count mismatch");
  }
  return m;
}

template <class T, class F>
json write_matrix(const Matrix<T>& m, const std::string& ring, F&& entry) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(entry(m(i, j)));
    rows.push_back(std::move(r));
  }
  return {{"ring", ring}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

json nested(const json& matrix_obj) { return matrix_obj.at("entries"); }

int dim_from(const json& j, std::size_t fallback) {
  if (j.is_object() && j.contains("n")) {
    long n = long_from(j.at("n"));
    if (n < 0) bad("n must be nonnegative");
    return static_cast<int>(n);
  }
  return static_cast<int>(fallback);
}

}  // namespace

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("expected a rational (string \"p/q\" or integer), got " + j.dump());
}

Integer integer_from(const json& j) {
  Rational x = rational_from(j);
  if (x.get_den() != 1) bad("expected an integer, got " + j.dump());
  return x.get_num();
}

long long_from(const json& j) {
  Integer z = integer_from(j);
  if (!z.fits_slong_p()) bad("integer out of range: " + j.dump());
  return z.get_si();
}

std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.12g", x);
  return buf;
}

std::optional<Rational> rational_power(const Rational& x, long a, long b) {
  long g = std::gcd(a, b);
  a /= g;
  b /= g;
  if (b < 0) {
    a = -a;
    b = -b;
  }
  if (x <= 0) return std::nullopt;
  Integer num, den;
  if (!mpz_root(num.get_mpz_t(), x.get_num().get_mpz_t(), static_cast<unsigned long>(b))) return std::nullopt;
  if (!mpz_root(den.get_mpz_t(), x.get_den().get_mpz_t(), static_cast<unsigned long>(b))) return std::nullopt;
  Rational root(num, den);
  root.canonicalize();
  return ipow(root, a);
}

std::string ratio_str(const Rational& x) { return x.get_num().get_str() + "/" + x.get_den().get_str(); }

json log_json(const LogValue& v, const std::string& sq_key) {
  json out{{"exact", v.str()}, {"decimal", decimal(v.to_double())}};
  if (auto r = rational_power(v.base(), 2, v.root())) out[sq_key] = ratio_str(*r);
  return out;
}

const FiniteField& field_from(const json& j) {
  long q = long_from(need(j, "q"));
  if (q < 2 || !FiniteField::supported(static_cast<std::uint64_t>(q))) fail(ErrorKind::unsupported_ring, "unsupported field size " + std::to_string(q));
  return FiniteField::get(static_cast<std::uint32_t>(q));
}

json poly_json(const FqPoly& p) {
  json a = json::array();
  for (auto c : p.coeffs()) a.push_back(c);
  return a;
}

FqPoly poly_from(const FiniteField& F, const json& j) {
  if (j.is_string()) {
    FqRational r = parse_rational_function(F, j.get<std::string>());
    if (!r.is_polynomial()) bad("expected a polynomial, got " + j.dump());
    return r.num() * FqPoly::constant(F, F.inv(r.den().leading()));
  }
  std::vector<FiniteField::Elem> c;
  for (const auto& x : array_of(j, "polynomial")) {
    long v = x.is_number_integer() ? x.get<long>() : -1;
    if (v < 0 || v >= static_cast<long>(F.order())) bad("polynomial coefficients must be integers 0..q-1");
    c.push_back(static_cast<FiniteField::Elem>(v));
  }
  return FqPoly(F, std::move(c));
}

FqRational rf_from(const FiniteField& F, const json& j) {
  if (j.is_string()) return parse_rational_function(F, j.get<std::string>());
  if (j.is_number_integer()) return parse_rational_function(F, std::to_string(j.get<long long>()));
  if (j.is_array()) return FqRational(poly_from(F, j));
  bad("expected a rational function string, got " + j.dump());
}

json matrix_json(const Matrix<Rational>& m) {
  return write_matrix(m, "Q", [](const Rational& x) { return to_string(x); });
}
json matrix_json(const Matrix<Integer>& m) {
  return write_matrix(m, "Z", [](const Integer& x) { return to_string(x); });
}
json matrix_json(const Matrix<FqRational>& m) {
  json out = write_matrix(m, "F_q(t)", [](const FqRational& x) { return x.str(); });
  if (!m.empty() && m.data().front().field()) out["q"] = m.data().front().field()->order();
  return out;
}
json matrix_json(const Matrix<FqPoly>& m) {
  json out = write_matrix(m, "F_q[t]", [](const FqPoly& x) { return poly_json(x); });
  if (!m.empty() && m.data().front().field()) out["q"] = m.data().front().field()->order();
  return out;
}

Matrix<Rational> rational_matrix(const json& j) {
  return read_matrix(j, Rational(0), [](const json& x) { return rational_from(x); });
}
Matrix<Integer> integer_matrix(const json& j) {
  return read_matrix(j, Integer(0), [](const json& x) { return integer_from(x); });
}
Matrix<FqRational> rf_matrix(const FiniteField& F, const json& j) {
  return read_matrix(j, FqRational::zero(F), [&](const json& x) { return rf_from(F, x); });
}
Matrix<FqPoly> poly_matrix(const FiniteField& F, const json& j) {
  return read_matrix(j, FqPoly::zero(F), [&](const json& x) { return poly_from(F, x); });
}

latz::InnerProduct inner_product_from(const json& j) {
  Matrix<Rational> g = rational_matrix(need(j, "gram"));
  if (dim_from(j, g.rows()) != static_cast<int>(g.rows())) bad("n does not match the Gram matrix");
  return latz::InnerProduct(std::move(g));
}

json to_json(const latz::InnerProduct& s) { return {{"n", s.n()}, {"gram", nested(matrix_json(s.gram()))}}; }

latff::VolumeSpace volume_space_from(const json& j) {
  const FiniteField& F = field_from(j);
  Matrix<FqRational> cols = rf_matrix(F, need(j, "S_basis"));
  if (dim_from(j, cols.rows()) != static_cast<int>(cols.rows())) bad("n does not match S_basis");
  return latff::VolumeSpace(F, cols.transpose());
}

json to_json(const latff::VolumeSpace& vs) {
  return {{"q", vs.field().order()}, {"n", vs.n()}, {"S_basis", nested(matrix_json(vs.basis().transpose()))}};
}

json summand_json(const Matrix<Integer>& rows) {
  return {{"rank", rows.rows()}, {"basis", nested(matrix_json(rows))}};
}
json summand_json(const Matrix<FqPoly>& rows) {
  return {{"rank", rows.rows()}, {"basis", nested(matrix_json(rows))}};
}

Matrix<Integer> z_rows_from(const json& j, int n) {
  Matrix<Integer> m = integer_matrix(need(j, "basis"));
  if (m.rows() == 0) m = Matrix<Integer>(0, static_cast<std::size_t>(n), Integer(0));
  if (static_cast<int>(m.cols()) != n) bad("summand vectors have the wrong length");
  if (j.contains("rank") && long_from(j.at("rank")) != static_cast<long>(m.rows())) bad("rank does not match basis");
  return m;
}

Matrix<FqPoly> ff_rows_from(const FiniteField& F, const json& j, int n) {
  Matrix<FqPoly> m = poly_matrix(F, need(j, "basis"));
  if (m.rows() == 0) m = Matrix<FqPoly>(0, static_cast<std::size_t>(n), FqPoly::zero(F));
  if (static_cast<int>(m.cols()) != n) bad("summand vectors have the wrong length");
  if (j.contains("rank") && long_from(j.at("rank")) != static_cast<long>(m.rows())) bad("rank does not match basis");
  return m;
}

std::vector<Integer> z_primes_from(const json& j) {
  std::vector<Integer> T;
  for (const auto& p : array_of(j, "T")) T.push_back(integer_from(p));
  return T;
}

std::vector<FqPoly> f_primes_from(const FiniteField& F, const json& j) {
  std::vector<FqPoly> T;
  for (const auto& p : array_of(j, "T")) T.push_back(poly_from(F, p));
  return T;
}

sarith::ZStructure z_structure_from(const json& j) {
  return {IntegerRing{}, z_primes_from(need(j, "T")), rational_matrix(need(j, "B"))};
}

sarith::FStructure f_structure_from(const FiniteField& F, const json& j) {
  return {latff::poly_ring(F), f_primes_from(F, need(j, "T")), rf_matrix(F, need(j, "B"))};
}

json to_json(const sarith::ZStructure& S) {
  json T = json::array();
  for (const auto& p : S.T) T.push_back(to_string(p));
  return {{"T", T}, {"B", nested(matrix_json(S.B))}};
}

json to_json(const sarith::FStructure& S) {
  json T = json::array();
  for (const auto& p : S.T) T.push_back(poly_json(p));
  return {{"T", T}, {"B", nested(matrix_json(S.B))}};
}

namespace {

template <class Rep, class Sum, class Val>
json report_common(const Rep& rep, Sum&& summand, Val&& value) {
  json minima = json::array(), path = json::array(), chain = json::array(), cv = json::object();
  for (const auto& p : rep.minima) minima.push_back({{"rank", p.rank}, {"logvol", value(p.logvol, false)}});
  for (const auto& p : rep.path) path.push_back(p.rank);
  for (const auto& h : rep.chain) chain.push_back(summand(h));
  for (std::size_t i = 0; i < rep.c_values.size(); ++i)
    cv[std::to_string(rep.path[i + 1].rank)] = value(rep.c_values[i], true);
  return {{"minima", minima}, {"path", path}, {"chain", chain}, {"c_values", cv}};
}

}  // namespace

json report_json(const latz::Report& rep) {
  return report_common(
      rep, [](const latz::ZSummand& w) { return summand_json(w.basis()); },
      [](const LogValue& v, bool is_c) { return log_json(v, is_c ? "c_sq_ratio" : "vol_sq"); });
}

json report_json(const latff::Report& rep) {
  return report_common(
      rep, [](const latff::FFSummand& w) { return summand_json(w.basis()); },
      [](const Rational& v, bool) { return json(to_string(v)); });
}

json vertex_json(const building::Context<local::PAdic>& ctx, const PVertex& v) {
  return {{"p", to_string(ctx.O.p)}, {"n", ctx.n}, {"basis", nested(matrix_json(v.basis))}};
}

json vertex_json(const building::Context<local::DegreeLocal>& ctx, const DVertex& v) {
  return {{"q", ctx.O.F->order()}, {"n", ctx.n}, {"basis", nested(matrix_json(v.basis))}};
}

PVertex p_vertex_from(const building::Context<local::PAdic>& ctx, const json& j) {
  Matrix<Rational> b = rational_matrix(need(j, "basis"));
  if (b.rows() != static_cast<std::size_t>(ctx.n)) bad("vertex basis has the wrong size");
  if (determinant(ctx.O.field(), b) == 0)
    fail(ErrorKind::rank_deficiency, "vertex basis is not of full rank");
  return building::canonical_vertex(ctx, b);
}

DVertex d_vertex_from(const building::Context<local::DegreeLocal>& ctx, const json& j) {
  const FiniteField& F = *ctx.O.F;
  if (j.is_object() && j.contains("r")) {
    std::vector<long> r;
    for (const auto& x : array_of(j.at("r"), "r")) r.push_back(long_from(x));
    if (static_cast<int>(r.size()) != ctx.n) bad("r has the wrong length");
    return covers::vertex_from_r(F, r);
  }
  Matrix<FqRational> b = rf_matrix(F, need(j, "basis"));
  if (b.rows() != static_cast<std::size_t>(ctx.n)) bad("vertex basis has the wrong size");
  if (determinant(ctx.O.field(), b).is_zero()) fail(ErrorKind::rank_deficiency, "vertex basis is not of full rank");
  return building::canonical_vertex(ctx, b);
}

covers::ZPoint z_point_from(const json& j) {
  const json& form = j.contains("form") ? j.at("form") : j;
  covers::ZPoint x{inner_product_from(form), std::nullopt};
  if (j.contains("structure")) {
    x.B = z_structure_from(j.at("structure"));
    if (x.B->n() != x.s.n()) fail(ErrorKind::dimension, "structure and form have different dimensions");
  }
  return x;
}

covers::FFPoint ff_point_from(const json& j) {
  const FiniteField& F = field_from(j);
  covers::FFPoint x;
  x.F = &F;
  std::vector<json> vs;
  if (j.contains("vertices")) {
    for (const auto& v : array_of(j.at("vertices"), "vertices")) vs.push_back(v);
  } else {
    vs.push_back(j);
  }
  if (vs.empty()) bad("point needs at least one vertex");
  int n = -1;
  if (j.contains("n")) n = static_cast<int>(long_from(j.at("n")));
  else if (vs.front().contains("r")) n = static_cast<int>(vs.front().at("r").size());
  else n = static_cast<int>(entries_of(need(vs.front(), "basis")).size());
  building::Context<local::DegreeLocal> ctx{{&F}, n};
  for (const auto& v : vs) x.vertices.push_back(d_vertex_from(ctx, v));
  if (j.contains("coeffs")) {
    for (const auto& c : array_of(j.at("coeffs"), "coeffs")) x.coeffs.push_back(rational_from(c));
  } else if (x.vertices.size() == 1) {
    x.coeffs = {Rational(1)};
  } else {
    bad("a combination of several vertices needs coeffs");
  }
  if (j.contains("structure")) {
    x.B = f_structure_from(F, j.at("structure"));
    if (x.B->n() != n) fail(ErrorKind::dimension, "structure and vertices have different dimensions");
  }
  covers::validate(x);
  return x;
}

json member_json(const covers::ZMember& m) {
  json out = summand_json(m.w);
  out["c"] = log_json(m.c, "c_sq_ratio");
  return out;
}

json member_json(const covers::FFMember& m) {
  json out = summand_json(m.w);
  out["c"] = to_string(m.c);
  return out;
}

}  // namespace latred::json_io
