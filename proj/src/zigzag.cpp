#include "stringy/zigzag.hpp"

#include <array>
#include <bit>
#include <map>
#include <random>
#include <vector>

#include "stringy/errors.hpp"

namespace stringy::zigzag {

using qlinalg::Rational;
using qlinalg::transpose;

bool shape_valid(const ZigZagObject& z) {
  return z.alpha.rows() == z.K_dim && z.alpha.cols() == z.left_dim && z.beta.rows() == z.C_dim &&
         z.beta.cols() == z.K_dim && z.gamma.rows() == z.right_dim && z.gamma.cols() == z.C_dim;
}

bool check_zigzag_exact(const ZigZagObject& z) {
  if (!shape_valid(z)) throw InputError("zig-zag object has inconsistent shapes");
  return qlinalg::is_exact_at(z.alpha, z.beta) && qlinalg::is_exact_at(z.beta, z.gamma);
}

ZigZagObject make_theta0(const stratified::CohomologyPackage& pkg) {
  const std::size_t n = pkg.n;
  const Matrix& a_n = pkg.a.at(n);
  const Matrix& c_n = pkg.c.at(n);

  const qlinalg::Subspace k0 = qlinalg::image_basis(a_n);
  const qlinalg::Subspace c0 = qlinalg::image_basis(c_n);
  auto alpha = qlinalg::solve_columns(k0.basis, a_n);
  if (!alpha) throw InternalError("a_n does not factor through its image");

  ZigZagObject z;
  z.left_dim = pkg.dims_cone_c[n];
  z.right_dim = pkg.dims_cone_c[n + 1];
  z.K_dim = k0.dim();
  z.C_dim = c0.dim();
  z.alpha = std::move(*alpha);
  z.beta = Matrix::zero(z.C_dim, z.K_dim);
  z.gamma = c0.basis;
  if (!shape_valid(z) || !check_zigzag_exact(z)) throw InternalError("Theta0 is not an exact zig-zag object");
  return z;
}

ZigZagObject dualize(const ZigZagObject& z) {
  ZigZagObject d;
  d.left_dim = z.right_dim;
  d.K_dim = z.C_dim;
  d.C_dim = z.K_dim;
  d.right_dim = z.left_dim;
  d.alpha = transpose(z.gamma);
  d.beta = transpose(z.beta);
  d.gamma = transpose(z.alpha);
  d.local_system = z.local_system;
  return d;
}

bool commutes(const ZigZagObject& source, const ZigZagObject& target, const ZigZagMorphism& m) {
  auto shaped = [](const Matrix& x, std::size_t r, std::size_t c) { return x.rows() == r && x.cols() == c; };
  if (!shape_valid(source) || !shape_valid(target)) return false;
  if (!shaped(m.map_left, target.left_dim, source.left_dim) || !shaped(m.map_K, target.K_dim, source.K_dim) ||
      !shaped(m.map_C, target.C_dim, source.C_dim) || !shaped(m.map_right, target.right_dim, source.right_dim)) {
    return false;
  }
  return m.map_K * source.alpha == target.alpha * m.map_left && m.map_C * source.beta == target.beta * m.map_K &&
         m.map_right * source.gamma == target.gamma * m.map_C;
}

ZigZagMorphism identity_morphism(const ZigZagObject& z) {
  return {Matrix::identity(z.left_dim), Matrix::identity(z.K_dim), Matrix::identity(z.C_dim),
          Matrix::identity(z.right_dim)};
}

ZigZagMorphism compose(const ZigZagMorphism& g, const ZigZagMorphism& f) {
  auto chain = [](const Matrix& a, const Matrix& b, const char* name) {
    if (a.cols() != b.rows()) throw InputError(std::string("cannot compose morphisms: ") + name + " shapes differ");
    return a * b;
  };
  return {chain(g.map_left, f.map_left, "left"), chain(g.map_K, f.map_K, "K"), chain(g.map_C, f.map_C, "C"),
          chain(g.map_right, f.map_right, "right")};
}

std::optional<ZigZagMorphism> inverse(const ZigZagMorphism& m) {
  auto l = qlinalg::inverse(m.map_left);
  auto k = qlinalg::inverse(m.map_K);
  auto c = qlinalg::inverse(m.map_C);
  auto r = qlinalg::inverse(m.map_right);
  if (!l || !k || !c || !r) return std::nullopt;
  return ZigZagMorphism{*l, *k, *c, *r};
}

std::string to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::found:
      return "found";
    case WitnessStatus::dims_mismatch:
      return "dims_mismatch";
    case WitnessStatus::no_invertible_solution:
      return "no_invertible_solution";
    case WitnessStatus::undecided:
      return "undecided";
  }
  return "unknown";
}

bool verify_witness(const ZigZagObject& z, const DualityWitness& w) {
  const ZigZagMorphism m = w.as_morphism();
  return commutes(z, dualize(z), m) && inverse(m).has_value();
}

namespace {

// Unknown matrix inside the flat variable vector.
struct Block {
  std::size_t offset;
  std::size_t rows;
  std::size_t cols;
  std::size_t var(std::size_t i, std::size_t j) const { return offset + i * cols + j; }
  std::size_t size() const { return rows * cols; }
};

// Accumulates homogeneous linear equations, one per entry of a matrix
// identity of the form  Σ ± A·X  +  Σ ± X·B  = 0.
class EquationBlock {
 public:
  EquationBlock(std::size_t rows, std::size_t cols, std::size_t vars)
      : rows_(rows), cols_(cols), coeffs_(rows * cols, std::vector<Rational>(vars)) {}

  // + sign * (left · X)
  void add_left_product(const Matrix& left, const Block& x, int sign) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t k = 0; k < x.rows; ++k)
          if (sgn(left(i, k)) != 0) coeffs_[i * cols_ + j][x.var(k, j)] += sign * left(i, k);
  }

  // + sign * (X · right)
  void add_right_product(const Block& x, const Matrix& right, int sign) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t k = 0; k < x.cols; ++k)
          if (sgn(right(k, j)) != 0) coeffs_[i * cols_ + j][x.var(i, k)] += sign * right(k, j);
  }

  const std::vector<std::vector<Rational>>& rows() const { return coeffs_; }

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<Rational>> coeffs_;
};

// Sparse multivariate polynomial over Q.
using Monomial = std::vector<unsigned>;
using Polynomial = std::map<Monomial, Rational>;
using LinearForm = std::vector<Rational>;

void add_scaled_product(Polynomial& out, const Polynomial& p, const LinearForm& form, int sign) {
  for (const auto& [mono, coeff] : p) {
    for (std::size_t v = 0; v < form.size(); ++v) {
      if (sgn(form[v]) == 0) continue;
      Monomial m = mono;
      ++m[v];
      Rational& slot = out[m];
      slot += sign * coeff * form[v];
      if (sgn(slot) == 0) out.erase(m);
    }
  }
}

// Determinant of a square matrix of linear forms, by Laplace expansion
// along rows with memoization over column subsets.
Polynomial symbolic_det(const std::vector<std::vector<LinearForm>>& entries, std::size_t vars) {
  const std::size_t d = entries.size();
  std::vector<Polynomial> f(std::size_t{1} << d);
  f[0][Monomial(vars, 0)] = 1;
  for (std::size_t mask = 1; mask < f.size(); ++mask) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    Polynomial acc;
    std::size_t position = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const int sign = ((row + position) % 2 == 0) ? 1 : -1;
      add_scaled_product(acc, f[mask & ~(std::size_t{1} << j)], entries[row][j], sign);
      ++position;
    }
    f[mask] = std::move(acc);
  }
  return f.back();
}

Polynomial substitute(const Polynomial& p, std::size_t var, const Rational& value) {
  Polynomial out;
  for (const auto& [mono, coeff] : p) {
    Monomial m = mono;
    Rational c = coeff;
    for (unsigned e = 0; e < mono[var]; ++e) c *= value;
    m[var] = 0;
    Rational& slot = out[m];
    slot += c;
    if (sgn(slot) == 0) out.erase(m);
  }
  return out;
}

unsigned total_degree(const Polynomial& p) {
  unsigned deg = 0;
  for (const auto& [mono, coeff] : p) {
    unsigned s = 0;
    for (unsigned e : mono) s += e;
    deg = std::max(deg, s);
  }
  return deg;
}

constexpr std::size_t kSymbolicBlockLimit = 12;
constexpr std::size_t kLexBudget = 3125;

class WitnessSearch {
 public:
  explicit WitnessSearch(const ZigZagObject& z) : z_(z), dual_(dualize(z)) {
    std::size_t off = 0;
    auto make = [&](std::size_t r, std::size_t c) {
      Block b{off, r, c};
      off += b.size();
      return b;
    };
    blocks_[0] = make(z.right_dim, z.left_dim);  // kappa
    blocks_[1] = make(z.C_dim, z.K_dim);         // lambda
    blocks_[2] = make(z.K_dim, z.C_dim);         // nu
    blocks_[3] = make(z.left_dim, z.right_dim);  // xi
    vars_ = off;

    // lambda·alpha = gamma^T·kappa,  nu·beta = beta^T·lambda,  xi·gamma = alpha^T·nu
    EquationBlock sq1(z.C_dim, z.left_dim, vars_);
    sq1.add_right_product(blocks_[1], z.alpha, 1);
    sq1.add_left_product(dual_.alpha, blocks_[0], -1);
    EquationBlock sq2(z.K_dim, z.K_dim, vars_);
    sq2.add_right_product(blocks_[2], z.beta, 1);
    sq2.add_left_product(dual_.beta, blocks_[1], -1);
    EquationBlock sq3(z.left_dim, z.C_dim, vars_);
    sq3.add_right_product(blocks_[3], z.gamma, 1);
    sq3.add_left_product(dual_.gamma, blocks_[2], -1);

    std::vector<std::vector<Rational>> eqs;
    for (const auto* sq : {&sq1, &sq2, &sq3}) eqs.insert(eqs.end(), sq->rows().begin(), sq->rows().end());
    Matrix system(eqs.size(), vars_);
    for (std::size_t i = 0; i < eqs.size(); ++i)
      for (std::size_t j = 0; j < vars_; ++j) system(i, j) = eqs[i][j];
    solutions_ = qlinalg::kernel_basis(system).basis;
  }

  std::size_t params() const { return solutions_.cols(); }

  std::optional<DualityWitness> try_point(const std::vector<Rational>& t) const {
    const DualityWitness w = at(t);
    if (!verify_witness(z_, w)) return std::nullopt;
    return w;
  }

  WitnessResult run() const {
    WitnessResult res;
    res.solution_space_dim = params();
    const std::size_t s = params();
    auto done = [&](DualityWitness w, std::string how) {
      res.status = WitnessStatus::found;
      res.witness = std::move(w);
      res.detail = std::move(how);
      return res;
    };

    if (s == 0) {
      if (auto w = try_point({})) return done(*w, "unique solution");
      res.status = WitnessStatus::no_invertible_solution;
      res.detail = "only the zero map commutes";
      return res;
    }
    for (std::size_t i = 0; i < s; ++i) {
      std::vector<Rational> t(s);
      t[i] = 1;
      if (auto w = try_point(t)) return done(*w, "solution basis vector " + std::to_string(i));
    }
    {
      static constexpr int kCoeff[5] = {0, 1, -1, 2, -2};  // small coefficients first
      std::vector<int> digits(s, 0);
      for (std::size_t tried = 0; tried < kLexBudget; ++tried) {
        std::vector<Rational> t(s);
        bool nonzero = false;
        for (std::size_t i = 0; i < s; ++i) {
          t[i] = kCoeff[digits[i]];
          nonzero = nonzero || digits[i] != 0;
        }
        if (nonzero) {
          if (auto w = try_point(t)) return done(*w, "integer combination of the solution basis");
        }
        std::size_t pos = s;
        while (pos > 0 && digits[pos - 1] == 4) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
      }
    }
    return decide(res);
  }

 private:
  DualityWitness at(const std::vector<Rational>& t) const {
    std::vector<Rational> x(vars_);
    for (std::size_t v = 0; v < vars_; ++v)
      for (std::size_t p = 0; p < t.size(); ++p)
        if (sgn(solutions_(v, p)) != 0 && sgn(t[p]) != 0) x[v] += solutions_(v, p) * t[p];
    std::array<Matrix, 4> mats;
    for (std::size_t b = 0; b < 4; ++b) {
      const Block& blk = blocks_[b];
      mats[b] = Matrix(blk.rows, blk.cols);
      for (std::size_t i = 0; i < blk.rows; ++i)
        for (std::size_t j = 0; j < blk.cols; ++j) mats[b](i, j) = x[blk.var(i, j)];
    }
    return {mats[0], mats[1], mats[2], mats[3]};
  }

  // Block entries as linear forms in the solution-space coordinates.
  std::vector<std::vector<LinearForm>> pencil(const Block& blk) const {
    std::vector<std::vector<LinearForm>> e(blk.rows, std::vector<LinearForm>(blk.cols));
    for (std::size_t i = 0; i < blk.rows; ++i) {
      for (std::size_t j = 0; j < blk.cols; ++j) {
        e[i][j].resize(params());
        for (std::size_t p = 0; p < params(); ++p) e[i][j][p] = solutions_(blk.var(i, j), p);
      }
    }
    return e;
  }

  WitnessResult decide(WitnessResult res) const {
    const std::size_t s = params();
    bool small = true;
    for (const auto& blk : blocks_) small = small && blk.rows <= kSymbolicBlockLimit;

    if (small) {
      std::vector<Polynomial> dets;
      unsigned degree = 0;
      for (std::size_t b = 0; b < 4; ++b) {
        if (blocks_[b].rows == 0) continue;
        Polynomial det = symbolic_det(pencil(blocks_[b]), s);
        if (det.empty()) {
          static const char* names[4] = {"kappa", "lambda", "nu", "xi"};
          res.status = WitnessStatus::no_invertible_solution;
          res.detail = std::string("determinant of ") + names[b] + " vanishes on the whole solution space";
          return res;
        }
        degree += total_degree(det);
        dets.push_back(std::move(det));
      }
      // A nonzero factor of degree d loses nonzero-ness for at most d
      // values of one variable, so some value in 0..degree keeps them all.
      std::vector<Rational> t(s);
      for (std::size_t v = 0; v < s; ++v) {
        bool placed = false;
        for (unsigned value = 0; value <= degree && !placed; ++value) {
          std::vector<Polynomial> next;
          bool ok = true;
          for (const auto& p : dets) {
            next.push_back(substitute(p, v, value));
            if (next.back().empty()) {
              ok = false;
              break;
            }
          }
          if (ok) {
            dets = std::move(next);
            t[v] = value;
            placed = true;
          }
        }
        if (!placed) throw InternalError("witness substitution failed to keep determinants nonzero");
      }
      auto w = try_point(t);
      if (!w) throw InternalError("substituted witness failed re-verification");
      res.status = WitnessStatus::found;
      res.witness = std::move(*w);
      res.detail = "exact determinant decision";
      return res;
    }

    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<long> coeff(-1000, 1000);
    for (int probe = 0; probe < 64; ++probe) {
      std::vector<Rational> t(s);
      for (auto& x : t) x = coeff(rng);
      if (auto w = try_point(t)) {
        res.status = WitnessStatus::found;
        res.witness = std::move(*w);
        res.detail = "random rational probe";
        return res;
      }
    }
    res.status = WitnessStatus::undecided;
    res.detail = "blocks exceed the exact decision limit and probes found no invertible point";
    return res;
  }

  const ZigZagObject& z_;
  ZigZagObject dual_;
  std::array<Block, 4> blocks_{};
  std::size_t vars_ = 0;
  Matrix solutions_;
};

}  // namespace

WitnessResult find_duality_witness(const ZigZagObject& z) {
  if (!check_zigzag_exact(z)) throw InputError("zig-zag object is not exact");
  if (z.left_dim != z.right_dim || z.K_dim != z.C_dim) {
    WitnessResult res;
    res.status = WitnessStatus::dims_mismatch;
    res.detail = "dims (" + std::to_string(z.left_dim) + "," + std::to_string(z.K_dim) + "," +
                 std::to_string(z.C_dim) + "," + std::to_string(z.right_dim) + ") vs dual (" +
                 std::to_string(z.right_dim) + "," + std::to_string(z.C_dim) + "," + std::to_string(z.K_dim) + "," +
                 std::to_string(z.left_dim) + ")";
    if (z.left_dim != z.right_dim) res.detail += "; mismatch at left/right";
    if (z.K_dim != z.C_dim) res.detail += "; mismatch at K/C";
    return res;
  }
  return WitnessSearch(z).run();
}

}  // namespace stringy::zigzag
