#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "latred/building.hpp"
#include "latred/covers.hpp"
#include "latred/latff.hpp"
#include "latred/latz.hpp"
#include "latred/log_value.hpp"
#include "latred/sarith.hpp"

// JSON forms of the module types. Exact scalars are strings; parse failures
// raise MathError(parse).
namespace latred::json_io {

using nlohmann::json;

// scalars
Rational rational_from(const json& j);
Integer integer_from(const json& j);
long long_from(const json& j);
std::string decimal(double x);  // 12 significant digits
// x^(a/b) when it is rational
std::optional<Rational> rational_power(const Rational& x, long a, long b);
// {"exact": "ln(x)/k", "decimal": ..., key: e^(2v) when rational}
json log_json(const LogValue& v, const std::string& sq_key);
std::string ratio_str(const Rational& x);  // always "p/q"

const FiniteField& field_from(const json& j);  // {"q": ...}
json poly_json(const FqPoly& p);
FqPoly poly_from(const FiniteField& F, const json& j);
FqRational rf_from(const FiniteField& F, const json& j);

// matrices: {"ring", "rows", "cols", "entries"}; nested arrays are accepted on input
json matrix_json(const Matrix<Rational>& m);
json matrix_json(const Matrix<Integer>& m);
json matrix_json(const Matrix<FqRational>& m);
json matrix_json(const Matrix<FqPoly>& m);
Matrix<Rational> rational_matrix(const json& j);
Matrix<Integer> integer_matrix(const json& j);
Matrix<FqRational> rf_matrix(const FiniteField& F, const json& j);
Matrix<FqPoly> poly_matrix(const FiniteField& F, const json& j);

// module types
latz::InnerProduct inner_product_from(const json& j);  // {"n", "gram"}
json to_json(const latz::InnerProduct& s);
latff::VolumeSpace volume_space_from(const json& j);  // {"q", "n", "S_basis"}
json to_json(const latff::VolumeSpace& vs);

// summands {"rank", "basis"}
json summand_json(const Matrix<Integer>& rows);
json summand_json(const Matrix<FqPoly>& rows);
Matrix<Integer> z_rows_from(const json& j, int n);
Matrix<FqPoly> ff_rows_from(const FiniteField& F, const json& j, int n);

// integral structures {"T", "B"} with B's columns spanning
sarith::ZStructure z_structure_from(const json& j);
sarith::FStructure f_structure_from(const FiniteField& F, const json& j);
json to_json(const sarith::ZStructure& S);
json to_json(const sarith::FStructure& S);
std::vector<Integer> z_primes_from(const json& j);
std::vector<FqPoly> f_primes_from(const FiniteField& F, const json& j);

json report_json(const latz::Report& rep);
json report_json(const latff::Report& rep);

// vertices: canonical basis plus context
using PVertex = building::Vertex<local::PAdic>;
using DVertex = building::Vertex<local::DegreeLocal>;
json vertex_json(const building::Context<local::PAdic>& ctx, const PVertex& v);
json vertex_json(const building::Context<local::DegreeLocal>& ctx, const DVertex& v);
PVertex p_vertex_from(const building::Context<local::PAdic>& ctx, const json& j);
// {"basis": ...} or {"r": [...]}
DVertex d_vertex_from(const building::Context<local::DegreeLocal>& ctx, const json& j);

// cover points: {"form", "structure"?} or {"q", "vertices", "coeffs", "structure"?}
covers::ZPoint z_point_from(const json& j);
covers::FFPoint ff_point_from(const json& j);
json member_json(const covers::ZMember& m);
json member_json(const covers::FFMember& m);

}  // namespace latred::json_io
