#include "udrfusion/cohomology.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

namespace udrfusion {

namespace {

void require_index(const DihedralParams& params, int i, const char* what) {
  if (!params.is_irr2_index(i)) {
    throw ParameterError(std::string(what) + " = " + std::to_string(i) + " outside [1, " +
                         std::to_string(params.n()) + "/2)");
  }
}

FpMatrix inverse_or_throw(const FpMatrix& m) {
  auto inv = inverse(m);
  if (!inv) throw std::logic_error("group element acts by a singular matrix");
  return *inv;
}

}  // namespace

GModule::GModule(int n, FpMatrix r, FpMatrix s) : n_(n), r_(std::move(r)), s_(std::move(s)) {
  if (!r_.is_square() || r_.rows() != s_.rows() || !s_.is_square()) {
    throw ParameterError("module generators must be square of equal size");
  }
  const bool ok = power(r_, n).is_identity() && (s_ * s_).is_identity() &&
                  (s_ * r_ * s_ * r_).is_identity();
  if (!ok) throw ParameterError("module generators violate the dihedral relations");
}

GModule GModule::from_rep(const Rep2& rep, int n) { return GModule(n, rep.mat_r, rep.mat_s); }

GModule GModule::trivial(const DihedralParams& params, std::size_t dim) {
  const auto id = FpMatrix::identity(dim, params.modulus());
  return GModule(params.n(), id, id);
}

GModule GModule::sign(const DihedralParams& params) {
  return GModule(params.n(), FpMatrix::from_rows(params.modulus(), {{1}}),
                 FpMatrix::from_rows(params.modulus(), {{-1}}));
}

FpMatrix GModule::image(GroupElement g) const {
  FpMatrix out = power(r_, g.rot);
  return g.flip ? s_ * out : out;
}

std::vector<FpMatrix> GModule::all_images() const {
  std::vector<FpMatrix> out;
  for (const auto& g : all_elements(n_)) out.push_back(image(g));
  return out;
}

GModule contragredient(const GModule& m) {
  return GModule(m.n(), inverse_or_throw(m.r()).transpose(), inverse_or_throw(m.s()).transpose());
}

GModule tensor(const GModule& a, const GModule& b) {
  if (a.n() != b.n()) throw ParameterError("tensor of modules over different groups");
  return GModule(a.n(), kronecker(a.r(), b.r()), kronecker(a.s(), b.s()));
}

GModule det_module(const GModule& m) {
  if (m.dim() != 2) throw ParameterError("det_module requires a two-dimensional module");
  const auto pm = m.modulus();
  FpMatrix r(1, 1, pm);
  FpMatrix s(1, 1, pm);
  r.set(0, 0, determinant(m.r()));
  s.set(0, 0, determinant(m.s()));
  return GModule(m.n(), r, s);
}

std::size_t fixed_point_dim(const GModule& m) {
  const auto images = m.all_images();
  return averaging_fixed_dim(images);
}

GModule adjoint_module(const DihedralParams& params, int j) {
  const GModule v = GModule::from_rep(irr2_rep(params, j), params.n());
  return tensor(contragredient(v), v);
}

bool adjoint_decomposition_check(const DihedralParams& params, int i) {
  require_index(params, i, "representation index");
  const int n = params.n();
  const auto pm = params.modulus();
  const Rep2 v = irr2_rep(params, i);
  const Rep2 third = induced_rep(params, 2 * i);
  if (!(third.label == t_map(params, i))) return false;

  const GModule adjoint = adjoint_module(params, i);
  const GModule sign = GModule::sign(params);
  const GModule third_module = GModule::from_rep(third, n);
  for (const auto& g : all_elements(n)) {
    const FpScalar expected = FpScalar(1, pm) + sign.character(g) + third_module.character(g);
    if (adjoint.character(g) != expected) return false;
  }

  // Explicit summands inside M_2(F_p) under X -> theta(g) X theta(g)^-1.
  const FpMatrix identity = FpMatrix::identity(2, pm);
  const FpMatrix diag = FpMatrix::from_rows(pm, {{1, 0}, {0, -1}});
  const FpMatrix f = FpMatrix::from_rows(pm, {{0, 1}, {0, 0}});
  const FpMatrix g_mat = FpMatrix::from_rows(pm, {{0, 0}, {1, 0}});
  for (const auto& g : all_elements(n)) {
    const FpMatrix a = rep_matrix(v, g);
    const FpMatrix a_inv = inverse_or_throw(a);
    const auto conj = [&](const FpMatrix& x) { return a * x * a_inv; };
    if (conj(identity) != identity) return false;
    if (conj(diag) != diag * sign.image(g).at(0, 0)) return false;
    // In the basis (f, g) the action must be Ind(chi_2i)(g).
    const FpMatrix expected = rep_matrix(third, g);
    const std::array<FpMatrix, 2> basis{f, g_mat};
    for (std::size_t col = 0; col < 2; ++col) {
      const FpMatrix img = conj(basis[col]);
      if (img.value(0, 0) != 0 || img.value(1, 1) != 0) return false;
      if (img.value(0, 1) != expected.value(0, col) || img.value(1, 0) != expected.value(1, col)) {
        return false;
      }
    }
  }
  return true;
}

CohomologyDims dims(const DihedralParams& params, int i0, int j) {
  require_index(params, i0, "action index i0");
  require_index(params, j, "module index j");
  const GModule phi_dual = contragredient(GModule::from_rep(irr2_rep(params, i0), params.n()));
  const GModule adjoint = adjoint_module(params, j);
  const auto d1 = static_cast<int>(fixed_point_dim(tensor(phi_dual, adjoint)));
  const auto wedge = static_cast<int>(fixed_point_dim(tensor(det_module(phi_dual), adjoint)));
  return {d1, d1 + wedge};
}

namespace {

enum class Gen { A, B, R, S };

struct Letter {
  Gen gen;
  bool inverse;
};

using Word = std::vector<Letter>;

void append_power(Word& w, Gen gen, std::int64_t exponent) {
  for (std::int64_t e = 0; e < std::abs(exponent); ++e) w.push_back({gen, exponent < 0});
}

// Action of X -> A X A^-1 on M_2(F_p), basis E00, E01, E10, E11.
FpMatrix conjugation_action(const FpMatrix& a) {
  const auto pm = a.modulus();
  const FpMatrix a_inv = inverse_or_throw(a);
  FpMatrix out(4, 4, pm);
  for (std::size_t col = 0; col < 4; ++col) {
    FpMatrix e(2, 2, pm);
    e.set(col / 2, col % 2, 1);
    const FpMatrix img = a * e * a_inv;
    for (std::size_t row = 0; row < 4; ++row) out.set(row, col, img.value(row / 2, row % 2));
  }
  return out;
}

// Relator g x g^-1 (image of x under g)^-1 with the image read off the
// columns of the acting matrix: column c gives a^{m0c} b^{m1c}.
Word action_relator(Gen g, Gen x, const FpMatrix& phi_g) {
  const std::size_t c = x == Gen::A ? 0 : 1;
  Word w{{g, false}, {x, false}, {g, true}};
  append_power(w, Gen::B, -phi_g.value(1, c));
  append_power(w, Gen::A, -phi_g.value(0, c));
  return w;
}

}  // namespace

int d1_oracle_cocycles(const DihedralParams& params, int i0, int j) {
  require_index(params, i0, "action index i0");
  require_index(params, j, "module index j");
  const std::int64_t p = params.p();
  const int n = params.n();
  if (2 * n * p * p > kCocycleOracleGuard) {
    throw ParameterError("H^1 oracle needs 2 n p^2 <= " + std::to_string(kCocycleOracleGuard));
  }
  const auto pm = params.modulus();
  const Rep2 phi = irr2_rep(params, i0);
  const Rep2 v = irr2_rep(params, j);

  // Gamma acts on M = Hom(V, V) through G; N acts trivially.
  const FpMatrix id4 = FpMatrix::identity(4, pm);
  const std::array<FpMatrix, 4> act{id4, id4, conjugation_action(v.mat_r),
                                    conjugation_action(v.mat_s)};
  const std::array<FpMatrix, 4> act_inv{id4, id4, inverse_or_throw(act[2]),
                                        inverse_or_throw(act[3])};

  std::vector<Word> relators;
  {
    Word w;
    append_power(w, Gen::A, p);
    relators.push_back(w);
    w.clear();
    append_power(w, Gen::B, p);
    relators.push_back(w);
    relators.push_back({{Gen::A, false}, {Gen::B, false}, {Gen::A, true}, {Gen::B, true}});
    w.clear();
    append_power(w, Gen::R, n);
    relators.push_back(w);
    relators.push_back({{Gen::S, false}, {Gen::S, false}});
    relators.push_back({{Gen::S, false}, {Gen::R, false}, {Gen::S, false}, {Gen::R, false}});
    for (Gen g : {Gen::R, Gen::S}) {
      const FpMatrix& phi_g = g == Gen::R ? phi.mat_r : phi.mat_s;
      relators.push_back(action_relator(g, Gen::A, phi_g));
      relators.push_back(action_relator(g, Gen::B, phi_g));
    }
  }

  // d(x1...xL) = sum_i (x1...x_{i-1}) . d(xi), with d(x^-1) = -x^-1 . d(x).
  std::vector<FpMatrix> rows;
  for (const Word& w : relators) {
    FpMatrix constraint(4, 16, pm);
    FpMatrix prefix = id4;
    for (const Letter& l : w) {
      const auto k = static_cast<std::size_t>(l.gen);
      const FpMatrix coeff =
          l.inverse ? prefix * act_inv[k] * FpScalar(-1, pm) : prefix;
      for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
          constraint.set(r, 4 * k + c, constraint.value(r, 4 * k + c) + coeff.value(r, c));
        }
      }
      prefix = prefix * (l.inverse ? act_inv[k] : act[k]);
    }
    rows.push_back(constraint);
  }
  const auto cocycles = static_cast<int>(nullity(vstack(rows)));

  // Invariants of M: kernel of [rho(r) - I; rho(s) - I].
  const std::array<FpMatrix, 2> fixed_rows{act[2] - id4, act[3] - id4};
  const auto invariants = static_cast<int>(nullity(vstack(fixed_rows)));
  const int coboundaries = 4 - invariants;
  return cocycles - coboundaries;
}

std::vector<int> cohomologically_maximal_set(const DihedralParams& params, int i0) {
  require_index(params, i0, "action index i0");
  std::vector<int> best;
  int best_d2 = -1;
  for (int j = 1; params.is_irr2_index(j); ++j) {
    const int d2 = dims(params, i0, j).d2;
    if (d2 > best_d2) {
      best_d2 = d2;
      best.clear();
    }
    if (d2 == best_d2) best.push_back(j);
  }
  return best;
}

}  // namespace udrfusion
