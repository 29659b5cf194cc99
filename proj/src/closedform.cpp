#include "unruhsim/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "unruhsim/engine.hpp"

namespace unruhsim {

namespace {

struct Vars {
  double a, q, c, s, P;  // alpha, sqrt(1 - alpha^2), cos(beta), sin(beta), P
};

const double kSqrt2 = std::sqrt(2.0);

// Each S formula is printed as max{f-branch, N-branch}; the N-branch bracket
// carries no absolute value.
SBranches s_abc_i(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  return {8 * kSqrt2 * std::sqrt(1 - P) * a * q * c,
          4 * (a * a * c * c + 2 * P * a * a * s * s - a * a * s * s +
               (2 * P - 1) * (1 - a * a))};
}

double e_abc_i(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  return 2 * std::max(0.0, std::sqrt(1 - P) * a * q * c -
                               std::sqrt((1 - P) * a * a * s * s * P * (1 - a * a)));
}

double c_abc_i(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  return 2 * std::sqrt(1 - P) * a * q * c;
}

SBranches s_abc_ii(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  return {8 * kSqrt2 * std::sqrt(1 - P) * a * q * s,
          4 * (a * a * c * c + 2 * P * a * a * s * s + (1 - a * a) - a * a * s * s)};
}

double ec_abc_ii(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  return 2 * std::sqrt(1 - P) * a * q * s;
}

SBranches s_ab1_c1(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  const double w = 1 - 2 * P + 2 * P * P;
  return {8 * kSqrt2 * std::sqrt(1 - P) * a * q * c,
          4 * (a * a * (c * c * c * c - 2 * s * s * c * c + w) - w * (1 - a * a))};
}

double e_ab1_c1(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  return 2 * std::max(0.0, (1 - P) * a * q * c * c -
                               a * s * std::sqrt((1 - P) * c * c - (1 - P) * P * s * s) -
                               (1 - P) * a * s * s * std::sqrt(P * (1 - a * a)));
}

double c_ab1_c1(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  return 2 * (1 - P) * a * q * c * c;
}

// Also serves AB_II_C_I by the B <-> C symmetry.
SBranches s_ab1_c2(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  const double cs2 = c * c - s * s;
  return {8 * kSqrt2 * (1 - P) * a * q * s * c,
          4 * (a * a * cs2 * cs2 + (1 - 2 * P) * (1 - a * a))};
}

double e_ab1_c2(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  return 2 * std::max(0.0, (1 - P) * a * q * s * c - (1 - P) * a * s * s * std::sqrt(P * (1 - a * a)));
}

double c_ab1_c2(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  return 2 * (1 - P) * a * q * s * c;
}

SBranches s_ab2_c2(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  const double cs2 = c * c - s * s;
  return {8 * kSqrt2 * (1 - P) * a * q * s * s, 4 * (a * a * cs2 * cs2 - (1 - a * a))};
}

double e_ab2_c2(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  return 2 * std::max(0.0, (1 - P) * a * q * s * s);
}

double c_ab2_c2(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  return 2 * (1 - P) * a * q * s * s;
}

// Also serves AC_I_C_II.
SBranches s_ab1_b2(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  return {8 * kSqrt2 * (1 - P) * a * a * s * c,
          4 * (a * a * (c * c + (2 * P + 2 * P * P - 1) * s * s) + (1 - P) * (1 - a * a))};
}

double e_ab1_b2(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  return 2 * std::max(0.0, (1 - P) * a * a * s * c);
}

double c_ab1_b2(const Vars& v) {
  const auto& [a, q, c, s, P] = v;
  return 2 * (1 - P) * a * a * s * c;
}

using Branches = SBranches (*)(const Vars&);

constexpr std::array<Branches, 8> kSBranches{
    s_abc_i, s_abc_ii, s_ab1_c1, s_ab1_c2, s_ab1_c2, s_ab2_c2, s_ab1_b2, s_ab1_b2,
};

template <std::size_t Row>
double s_max(const Vars& v) {
  const SBranches b = kSBranches[Row](v);
  return std::max(b.f_branch, b.n_branch);
}

using Formula = double (*)(const Vars&);

// Rows follow Regions; columns are S, E, C.
constexpr std::array<std::array<Formula, 3>, 8> kCatalog{{
    {s_max<0>, e_abc_i, c_abc_i},
    {s_max<1>, ec_abc_ii, ec_abc_ii},
    {s_max<2>, e_ab1_c1, c_ab1_c1},
    {s_max<3>, e_ab1_c2, c_ab1_c2},
    {s_max<4>, e_ab1_c2, c_ab1_c2},
    {s_max<5>, e_ab2_c2, c_ab2_c2},
    {s_max<6>, e_ab1_b2, c_ab1_b2},
    {s_max<7>, e_ab1_b2, c_ab1_b2},
}};

Formula lookup(const Scenario& scenario, Measure measure) {
  const auto row = static_cast<std::size_t>(scenario.regions());
  const auto col = static_cast<std::size_t>(measure);
  if (row >= kCatalog.size() || col >= 3 || kCatalog[row][col] == nullptr) return nullptr;
  return kCatalog[row][col];
}

Vars make_vars(double alpha, double beta, double p) {
  const GhzParams ghz(alpha);
  const UnruhParams unruh(beta);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("damping probability must lie in [0, 1], got " + std::to_string(p));
  }
  return {ghz.alpha(), std::sqrt(1 - alpha * alpha), std::cos(unruh.beta()),
          std::sin(unruh.beta()), p};
}

double coherence(Regions r, double alpha, double beta, double p) {
  return numeric_measures(Scenario(r), alpha, beta, p).c;
}

double catalog_coherence(Regions r, double alpha, double beta, double p) {
  return cf_eval(Scenario(r), Measure::C, alpha, beta, p);
}

}  // namespace

bool cf_covers(const Scenario& scenario, Measure measure) {
  return lookup(scenario, measure) != nullptr;
}

double cf_eval(const Scenario& scenario, Measure measure, double alpha, double beta, double p) {
  const Formula f = lookup(scenario, measure);
  if (f == nullptr) {
    throw CoverageError("no closed form for " + std::string(scenario.name()) + "/" +
                        std::string(measure_name(measure)));
  }
  return f(make_vars(alpha, beta, p));
}

SBranches cf_s_branches(const Scenario& scenario, double alpha, double beta, double p) {
  return kSBranches[static_cast<std::size_t>(scenario.regions())](make_vars(alpha, beta, p));
}

SumRuleReport cf_sum_rules(double alpha, double beta, double p) {
  using R = Regions;
  SumRuleReport rep;
  rep.alpha = alpha;
  rep.beta = beta;
  rep.p = p;

  auto both = [&](R r) {
    return std::pair{coherence(r, alpha, beta, p), catalog_coherence(r, alpha, beta, p)};
  };
  const auto [c1, k1] = both(R::ABC_I);
  const auto [c2, k2] = both(R::ABC_II);
  const auto [c11, k11] = both(R::AB_I_C_I);
  const auto [c22, k22] = both(R::AB_II_C_II);
  const auto [c12, k12] = both(R::AB_I_C_II);
  const auto [c21, k21] = both(R::AB_II_C_I);
  const auto [cbb, kbb] = both(R::AB_I_B_II);
  const auto [ccc, kcc] = both(R::AC_I_C_II);

  const double a2 = alpha * alpha;
  const double q2 = 1 - a2;
  const double q = std::sqrt(q2);

  auto fill = [](SumRuleResidual& r, std::string_view name, std::string_view relation, double lhs,
                 double catalog_lhs, double rhs, bool asserted) {
    r.name = name;
    r.relation = relation;
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = std::abs(lhs - rhs);
    r.catalog_lhs = catalog_lhs;
    r.catalog_residual = std::abs(catalog_lhs - rhs);
    r.asserted = asserted;
  };

  fill(rep.rules[0], "caseI_square_sum", "C^2(ABC_I) + C^2(ABC_II) = 4(1-P) a^2 (1-a^2)",
       c1 * c1 + c2 * c2, k1 * k1 + k2 * k2, 4 * (1 - p) * a2 * q2, true);
  fill(rep.rules[1], "caseII_linear_sum", "C(AB_I_C_I) + C(AB_II_C_II) = 2(1-P) a sqrt(1-a^2)",
       c11 + c22, k11 + k22, 2 * (1 - p) * alpha * q, true);
  fill(rep.rules[2], "caseII_square_sum",
       "C^2(AB_I_C_I) + C^2(AB_II_C_II) + C^2(AB_I_C_II) + C^2(AB_II_C_I) = 4(1-P)^2 a^2 (1-a^2)",
       c11 * c11 + c22 * c22 + c12 * c12 + c21 * c21,
       k11 * k11 + k22 * k22 + k12 * k12 + k21 * k21, 4 * (1 - p) * (1 - p) * a2 * q2, true);
  fill(rep.rules[3], "caseII_weighted_square_sum",
       "C^2(AB_I_C_I) + C^2(AB_II_C_II) + (1-a^2)[C^2(AB_I_B_II) + C^2(AC_I_C_II)] = "
       "4(1-P)^2 a^2 (1-a^2)",
       c11 * c11 + c22 * c22 + q2 * (cbb * cbb + ccc * ccc),
       k11 * k11 + k22 * k22 + q2 * (kbb * kbb + kcc * kcc), 4 * (1 - p) * (1 - p) * a2 * q2,
       false);
  return rep;
}

double weighted_rule_defect(double alpha, double beta, double p) {
  const double a2 = alpha * alpha;
  const double q2 = 1 - a2;
  const double sc = std::sin(beta) * std::cos(beta);
  return -8 * (1 - p) * (1 - p) * a2 * q2 * q2 * sc * sc;
}

}  // namespace unruhsim
