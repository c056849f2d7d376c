#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "motbun/poly.hpp"
#include "motbun/ratfunc.hpp"
#include "motbun/rational.hpp"

namespace motbun {

enum class ModelKind {
  ProjectiveLine,     // P^1
  HyperellipticOdd,   // y^2 + h(x) y = f(x), deg f = 2g+1, one point at infinity
  HyperellipticEven,  // y^2 + h(x) y = f(x), deg f = 2g+2 (or deg h = g+1 in char 2)
};

std::string to_string(ModelKind kind);
ModelKind parse_model_kind(const std::string& text);

// Explicit affine model over the prime field F_q; coefficients are integers
// reduced mod q, lowest degree first.
struct ExplicitModel {
  ModelKind kind = ModelKind::ProjectiveLine;
  std::vector<std::int64_t> h;
  std::vector<std::int64_t> f;
};

struct CurveSpec {
  int genus = 0;
  std::uint64_t q = 2;
  // Either the Weil numerator P(T) or a model to brute-force.
  std::variant<Poly, ExplicitModel> source = ExplicitModel{};
};

// #C(F_{q^r}) by exhaustive enumeration, points at infinity included.
// Explicit models require prime q. Throws TooLarge when q^r > 10^6 and
// SingularModel when the model fails its smoothness check.
std::uint64_t count_points(const ExplicitModel& model, std::uint64_t q, unsigned r);

// Genus implied by the degrees of an explicit model.
int model_genus(const ExplicitModel& model, std::uint64_t q);

// Reconstructs P(T) from counts[r-1] = #C(F_{q^r}) for r = 1..R (R >= g):
// Newton's identities give the coefficients through T^g and the functional
// equation P(T) = q^g T^{2g} P(1/(qT)) supplies the rest. Throws
// InconsistentCounts when the completed polynomial disagrees with any
// supplied count or a count violates the Weil bound.
Poly weil_from_counts(const std::vector<Integer>& counts, int genus, std::uint64_t q);

// Power sums s_m = sum of the m-th powers of the reciprocal roots of P, for
// m = 1..count.
std::vector<Rat> weil_power_sums(const Poly& weil, std::size_t count);

// Checks P(0) = 1, deg P = 2g and the functional equation.
bool satisfies_functional_equation(const Poly& weil, int genus, std::uint64_t q);

// A curve with its zeta data resolved.
class Curve {
 public:
  static Curve from_spec(const CurveSpec& spec);
  // Throws InvalidCurve if the numerator fails its invariants.
  static Curve from_weil(int genus, std::uint64_t q, Poly weil);
  static Curve projective_line(std::uint64_t q);

  int genus() const noexcept { return genus_; }
  std::uint64_t q() const noexcept { return q_; }
  const Poly& weil() const noexcept { return weil_; }
  const std::optional<ExplicitModel>& model() const noexcept { return model_; }
  // Counts obtained by enumeration when the curve came from a model.
  const std::vector<Integer>& enumerated_counts() const noexcept { return enumerated_; }
  // C(F_q) nonempty; recorded, not enforced.
  bool has_rational_point() const { return points(1) > 0; }

  // #C(F_{q^r}) from the Weil numerator.
  Integer points(unsigned r) const;
  // Sum of r-th powers of the Frobenius reciprocal roots.
  Rat power_sum(unsigned r) const;
  // Weil numerator of the base change to F_{q^r}.
  Poly weil_over(unsigned r) const;
  Curve base_change(unsigned r) const;

 private:
  Curve(int genus, std::uint64_t q, Poly weil) : genus_(genus), q_(q), weil_(std::move(weil)) {}

  int genus_;
  std::uint64_t q_;
  Poly weil_;
  std::optional<ExplicitModel> model_;
  std::vector<Integer> enumerated_;
};

// P(T) / ((1 - T)(1 - qT)).
RatFunc zeta_ratfunc(const Curve& curve);
// #Sym^j C(F_q) for j = 0..J from the zeta expansion.
std::vector<Integer> sym_counts(const Curve& curve, std::size_t J);
// #Jac(F_q) = P(1).
Integer jac_count(const Curve& curve);
// zeta_C(i) = Z_C(q^{-i}) for i >= 2; PoleAtPoint for i in {0, 1}.
Rat zeta_special_value(const Curve& curve, long i);

}  // namespace motbun
