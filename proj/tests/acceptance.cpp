#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "drury/errors.hpp"
#include "drury/fixtures.hpp"
#include "drury/fock.hpp"
#include "drury/ideals.hpp"
#include "drury/random.hpp"
#include "drury/subspaces.hpp"
#include "drury/sweeps.hpp"
#include "drury/tuples.hpp"
#include "drury/vectors.hpp"

using namespace drury;

namespace {

// Pinned tolerances and limits, one per criterion.
constexpr double kRowSumTol = 1e-12;
constexpr double kAnnDistanceTol = 1e-9;
constexpr double kMaxcountSeconds = 0.1;
constexpr int kRandomVectors = 1000;
constexpr double kWitnessResidual = 1e-10;
constexpr double kWitnessNorm = 0.1;
constexpr double kProjectionTol = 1e-12;
constexpr double kNormRelTol = 1e-14;
constexpr double kKernelTail = 1e-14;
constexpr double kKernelRelTol = 1e-12;
constexpr int kNormDegree = 60;
constexpr double kNormGap = 1e-3;
constexpr double kNormSeconds = 5.0;
constexpr int kWitnessInstances = 100;
constexpr Index kWitnessMaxDelta = 8;
constexpr double kIntertwiningResidual = 1e-8;
constexpr double kRankFloor = 1e-9;
constexpr double kGramSlack = 1e-8;
constexpr double kFockResidual = 1e-10;
constexpr int kRigidityInstances = 200;
constexpr double kRigiditySeconds = 60.0;
constexpr int kSplitInstances = 100;
constexpr double kSplitTol = 1e-8;
constexpr int kGreedyInstances = 200;
constexpr Index kGreedyMaxDelta = 12;
constexpr int kDecompInstances = 200;
constexpr Index kDecompMaxDim = 4;
constexpr double kIdempotentTol = 1e-9;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (problems.size() < 5) {
        problems.push_back(what);
      }
    }
  }
};

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Vector unit(Index n, Index i) {
  Vector v = Vector::Zero(n);
  v(i) = 1;
  return v;
}

// Orthonormal basis of the degree-2 monomials inside C[x1,x2] of degree <= 2.
Matrix degree_two_span(const AnnihilatorBasis& ann) {
  Matrix m = Matrix::Zero(ann.ambient_dimension(), 3);
  Index c = 0;
  for (std::size_t i = 0; i < ann.monomials.size(); ++i) {
    if (ann.monomials[i].degree() == 2) {
      m(static_cast<Index>(i), c++) = 1;
    }
  }
  return m;
}

// Columns T^alpha v for every alpha up to the nilpotency index, stacked over
// the vectors; rank equals delta exactly when the set separates.
Index joint_evaluation_rank(const RowTuple& t, const std::vector<Vector>& vs, int m) {
  const auto monos = monomials_up_to(t.size(), m);
  Matrix e(t.dim() * static_cast<Index>(vs.size()), static_cast<Index>(monos.size()));
  for (std::size_t j = 0; j < monos.size(); ++j) {
    const Matrix p = poly_eval(Polynomial::monomial(monos[j]), t);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      e.block(static_cast<Index>(i) * t.dim(), static_cast<Index>(j), t.dim(), 1) = p * vs[i];
    }
  }
  Eigen::FullPivLU<Matrix> lu(e);
  lu.setThreshold(1e-9);
  return lu.rank();
}

// Dimension of span{T^alpha} as matrices, by pivoted LU.
Index algebra_dimension(const RowTuple& t, int m) {
  const auto monos = monomials_up_to(t.size(), m);
  const Index n = t.dim();
  Matrix e(n * n, static_cast<Index>(monos.size()));
  for (std::size_t j = 0; j < monos.size(); ++j) {
    const Matrix p = poly_eval(Polynomial::monomial(monos[j]), t);
    e.col(static_cast<Index>(j)) = Eigen::Map<const Vector>(p.data(), n * n);
  }
  Eigen::FullPivLU<Matrix> lu(e);
  lu.setThreshold(1e-9);
  return lu.rank();
}

Outcome criterion1() {
  Outcome o;
  const auto start = Clock::now();
  const RowTuple t = maxcount();
  const TupleReport r = validate(t);
  Matrix expected = Matrix::Zero(3, 3);
  expected(1, 1) = 1;
  const double row_err = max_abs(r.row_sum - expected);
  const AnnihilatorBasis ann = annihilator(t);
  const double dist = subspace_distance(ann.frame, degree_two_span(ann));
  const Index delta = quotient_algebra(ann).dimension();
  const double secs = seconds_since(start);
  o.require(row_err <= kRowSumTol, "row sum error " + std::to_string(row_err));
  o.require(r.nilpotent == 2, "nilpotency index");
  o.require(ann.degree_bound == 2 && dist < kAnnDistanceTol, "annihilator distance " + std::to_string(dist));
  o.require(delta == 3, "delta " + std::to_string(delta));
  o.require(secs < kMaxcountSeconds, "runtime " + std::to_string(secs));
  std::ostringstream s;
  s << "row-sum err " << row_err << ", index " << r.nilpotent.value_or(-1) << ", ann distance " << dist
    << ", delta " << delta << ", " << secs << " s";
  o.detail = s.str();
  return o;
}

Outcome criterion2() {
  Outcome o;
  const RowTuple t = maxcount();
  const QuotientContext ctx(t);
  Rng rng(2024);
  std::vector<Vector> vs;
  for (int i = 0; i < kRandomVectors; ++i) {
    vs.push_back(random_vector(3, rng));
  }
  for (Index i = 0; i < 3; ++i) {
    vs.push_back(unit(3, i));
  }
  double worst_residual = 0;
  double least_norm = 1e300;
  for (const Vector& v : vs) {
    const bool sep = is_separating(ctx, v);
    const auto p = separating_witness(ctx, v);
    o.require(!sep && p.has_value(), "a vector was reported separating");
    if (!p) {
      continue;
    }
    const Matrix pt = poly_eval(*p, t);
    worst_residual = std::max(worst_residual, (pt * v).norm());
    least_norm = std::min(least_norm, operator_norm(pt));
  }
  o.require(worst_residual < kWitnessResidual, "witness residual");
  o.require(least_norm > kWitnessNorm, "witness norm");

  const GreedyResult g = separating_greedy(t, 7);
  o.require(g.vectors.size() == 2, "greedy size");
  o.require(joint_evaluation_rank(t, g.vectors, 2) == 3, "greedy set fails the joint kernel test");
  const GreedyResult s = separating_greedy(t, 0, Sampler::StandardBasis);
  o.require(s.vectors.size() == 2 && s.vectors[0] == unit(3, 0) && s.vectors[1] == unit(3, 2),
            "standard sampler did not give {e1, e3}");
  o.require(is_cyclic(t.adjoint(), unit(3, 1)), "adjoint not cyclic at e2");
  std::ostringstream d;
  d << vs.size() << " vectors non-separating, max |p(T)v| " << worst_residual << ", min |p(T)| " << least_norm
    << ", greedy size " << g.vectors.size();
  o.detail = d.str();
  return o;
}

Outcome criterion3() {
  Outcome o;
  o.require(omega_e(maxcount()) == std::vector<MultiIndex>{MultiIndex({1, 0}), MultiIndex({0, 1})},
            "maxcount omega_e");
  int checked = 0;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const auto om = omega_e(rectangle({a, b}));
      o.require(om == std::vector<MultiIndex>{MultiIndex({a - 1, b - 1})},
                "rectangle(" + std::to_string(a) + "," + std::to_string(b) + ")");
      ++checked;
    }
  }
  o.detail = "maxcount card 2, " + std::to_string(checked) + " rectangles card 1";
  return o;
}

Outcome criterion4() {
  Outcome o;
  double worst = 0;
  for (int n = 2; n <= 8; ++n) {
    const RowTuple t = fromgriff(n);
    const TupleReport r = validate(t);
    o.require(r.commuting && r.row_contraction, "fromgriff(" + std::to_string(n) + ") validate");
    for (int k = 0; k < 2; ++k) {
      const Matrix p = 2.0 * t[k] * t[k].adjoint();
      worst = std::max({worst, max_abs(p * p - p), max_abs(p - p.adjoint())});
    }
    const AnnihilatorBasis ann = annihilator(t);
    o.require(ann.degree_bound == 2 && ann.dimension() == 3 &&
                  subspace_distance(ann.frame, degree_two_span(ann)) < kAnnDistanceTol,
              "fromgriff(" + std::to_string(n) + ") annihilator");
  }
  o.require(worst <= kProjectionTol, "projection error");
  std::ostringstream s;
  s << "N = 2..8, projection error " << worst;
  o.detail = s.str();
  return o;
}

Outcome criterion5() {
  Outcome o;
  double worst_norm = 0;
  for (int d = 1; d <= 4; ++d) {
    for (const auto& a : monomials_up_to(d, 8)) {
      double num = 1;
      for (int e : a.exponents) {
        for (int i = 2; i <= e; ++i) {
          num *= i;
        }
      }
      double den = 1;
      for (int i = 2; i <= a.degree(); ++i) {
        den *= i;
      }
      const double expected = std::sqrt(num / den);
      worst_norm = std::max(worst_norm, std::abs(da_monomial_norm(a) - expected) / expected);
    }
  }
  o.require(worst_norm < kNormRelTol, "monomial norm error");

  Rng rng(5);
  std::normal_distribution<double> g;
  double worst_kernel = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + trial % 4;
    std::vector<Complex> z(d), w(d);
    for (int i = 0; i < d; ++i) {
      z[i] = Complex(g(rng), g(rng));
      w[i] = Complex(g(rng), g(rng));
    }
    auto scale_into_ball = [&](std::vector<Complex>& x) {
      double n = 0;
      for (auto c : x) {
        n += std::norm(c);
      }
      const double r = std::uniform_real_distribution<double>(0, 0.95)(rng);
      for (auto& c : x) {
        c *= r / std::sqrt(n);
      }
    };
    scale_into_ball(z);
    scale_into_ball(w);
    Complex inner = 0;
    for (int i = 0; i < d; ++i) {
      inner += z[i] * std::conj(w[i]);
    }
    Complex sum = 0;
    Complex term = 1;
    while (std::abs(term) >= kKernelTail) {
      sum += term;
      term *= inner;
    }
    worst_kernel = std::max(worst_kernel, std::abs(da_kernel(z, w) - sum) / std::abs(sum));
  }
  o.require(worst_kernel < kKernelRelTol, "kernel error");
  std::ostringstream s;
  s << "norm rel err " << worst_norm << ", kernel rel err " << worst_kernel;
  o.detail = s.str();
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto start = Clock::now();
  const Polynomial p = Polynomial::parse("x1 + x2", 2);
  double prev = 0;
  bool monotone = true;
  double last = 0;
  for (int n = 1; n <= kNormDegree; ++n) {
    last = truncated_multiplier_norm(p, n);
    monotone = monotone && last >= prev;
    prev = last;
  }
  const double secs = seconds_since(start);
  const double gap = std::abs(last - std::sqrt(2.0));
  o.require(monotone, "sequence decreased");
  o.require(gap < kNormGap, "gap " + std::to_string(gap));
  o.require(secs < kNormSeconds, "runtime " + std::to_string(secs));
  std::ostringstream s;
  s << "norm at N=60 " << last << ", gap " << gap << ", " << secs << " s";
  o.detail = s.str();
  return o;
}

struct WitnessCase {
  RowTuple t;
  QuasiAffineWitness w;
};

std::vector<WitnessCase> witness_cases(Outcome& o) {
  std::vector<WitnessCase> cases;
  Rng rng(700);
  std::uniform_int_distribution<int> dd(1, 3);
  for (int i = 0; i < kWitnessInstances; ++i) {
    const AnnihilatorBasis ideal = random_nilpotent_ideal(dd(rng), kWitnessMaxDelta, rng);
    const RowTuple t = random_similar_model(ideal, rng);
    try {
      cases.push_back({t, quasiaffine_witness(t, i)});
    } catch (const std::exception& e) {
      o.require(false, std::string("instance ") + std::to_string(i) + ": " + e.what());
    }
  }
  return cases;
}

Outcome criterion7(const std::vector<WitnessCase>& cases, Outcome o) {
  double worst_residual = 0;
  double least_ratio = 1e300;
  for (const auto& c : cases) {
    const Matrix& x = c.w.x;
    const double xn = operator_norm(x);
    double res = 0;
    for (int k = 0; k < c.t.size(); ++k) {
      res = std::max(res, operator_norm(x * c.w.model[k] - c.t[k] * x) / xn);
    }
    worst_residual = std::max(worst_residual, res);
    o.require(x.rows() == x.cols() && x.rows() == c.t.dim(), "witness shape");
    const Eigen::VectorXd sv = singular_values(x);
    least_ratio = std::min(least_ratio, sv.minCoeff() / sv.maxCoeff());
  }
  o.require(static_cast<int>(cases.size()) == kWitnessInstances, "not every instance produced a witness");
  o.require(worst_residual < kIntertwiningResidual, "residual");
  o.require(least_ratio > kRankFloor, "rank");
  std::ostringstream s;
  s << cases.size() << " witnesses, max residual " << worst_residual << ", min sigma ratio " << least_ratio;
  o.detail = s.str();
  return o;
}

Outcome criterion8(const std::vector<WitnessCase>& cases) {
  Outcome o;
  double worst_bound = 0;
  double worst_fock = 0;
  for (const auto& c : cases) {
    const Vector one = c.w.space.frame.row(0).adjoint();
    const Vector xi = c.w.x * one;
    const GramReport g = gram_operator(c.t, xi);
    worst_bound = std::max(worst_bound, g.bound);
    const int n = nilpotency_index(c.t).value_or(c.t.dim() + 1);
    worst_fock = std::max(worst_fock, fock_intertwining_residual(c.t, fock_intertwiner(c.t, xi, n), n));
  }
  o.require(!cases.empty(), "no instances");
  o.require(worst_bound <= 1 + kGramSlack, "gram bound");
  o.require(worst_fock < kFockResidual, "fock residual");
  std::ostringstream s;
  s << cases.size() << " instances, max gram bound " << worst_bound << ", max intertwining residual " << worst_fock;
  o.detail = s.str();
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto start = Clock::now();
  std::ostringstream s;
  for (const std::string name : {"rigidity-cyclic", "rigidity-coinvariant", "rigidity-adjoint"}) {
    const SuiteResult r = run_suite(name, 9, kRigidityInstances);
    o.require(r.instances == kRigidityInstances, name + " instance count");
    o.require(r.violations == 0, name + " violations " + std::to_string(r.violations));
    o.require(r.failed == 0, name + " failures" + (r.failures.empty() ? "" : ": " + r.failures[0]));
    o.require(r.inapplicable < r.instances, name + " never applicable");
    s << name << " " << r.passed << "/" << r.instances << " (" << r.inapplicable << " inapplicable), ";
  }
  const double secs = seconds_since(start);
  o.require(secs < kRigiditySeconds, "runtime " + std::to_string(secs));
  s << "0 violations, " << secs << " s";
  o.detail = s.str();
  return o;
}

Outcome criterion10() {
  Outcome o;
  Rng rng(1000);
  double least_sigma = 1e300;
  double worst_invariance = 0;
  for (int i = 0; i < kSplitInstances; ++i) {
    const SplittingInstance inst = random_splitting_instance(rng);
    const Index n = inst.t.dim();
    SplitResult r;
    try {
      r = splitting_construct(inst.t, inst.m, i);
    } catch (const std::exception& e) {
      o.require(false, std::string("instance ") + std::to_string(i) + ": " + e.what());
      continue;
    }
    const Matrix p = r.n.projector();
    for (int k = 0; k < inst.t.size(); ++k) {
      worst_invariance = std::max(worst_invariance, operator_norm(p * inst.t[k] * p - inst.t[k] * p));
    }
    Matrix both(n, inst.m.dimension() + r.n.dimension());
    both << inst.m.frame(), r.n.frame();
    const Eigen::VectorXd sv = singular_values(both);
    const double smin = sv.size() == 0 ? 0.0 : sv.minCoeff();
    least_sigma = std::min(least_sigma, smin);
    o.require(both.cols() == n && numerical_rank(both) == n, "spanning");
  }
  o.require(worst_invariance < kSplitTol, "invariance");
  o.require(least_sigma > kSplitTol, "intersection");
  std::ostringstream s;
  s << kSplitInstances << " instances, max invariance defect " << worst_invariance << ", min sigma " << least_sigma;
  o.detail = s.str();
  return o;
}

Outcome criterion11() {
  Outcome o;
  Rng rng(1100);
  int done = 0;
  int skipped = 0;
  Index largest_delta = 0;
  std::size_t largest_set = 0;
  while (done < kGreedyInstances) {
    const RowTuple t = random_nilpotent_tuple(rng, 10);
    const int m = *nilpotency_index(t);
    const Index delta = algebra_dimension(t, m);
    if (delta > kGreedyMaxDelta) {
      ++skipped;
      continue;
    }
    const GreedyResult g = separating_greedy(t, static_cast<std::uint64_t>(done));
    o.require(g.delta == delta, "delta mismatch");
    o.require(static_cast<Index>(g.vectors.size()) <= delta, "size bound");
    bool strict = g.kernel_dims.size() == g.vectors.size() + 1 && g.kernel_dims.front() == delta &&
                  g.kernel_dims.back() == 0;
    for (std::size_t i = 1; i < g.kernel_dims.size(); ++i) {
      strict = strict && g.kernel_dims[i] < g.kernel_dims[i - 1];
    }
    o.require(strict, "kernel dimension did not strictly decrease");
    o.require(joint_evaluation_rank(t, g.vectors, m) == delta, "output not separating");
    largest_delta = std::max(largest_delta, delta);
    largest_set = std::max(largest_set, g.vectors.size());
    ++done;
  }
  std::ostringstream s;
  s << done << " tuples (" << skipped << " with delta > 12 redrawn), max delta " << largest_delta
    << ", max set size " << largest_set;
  o.detail = s.str();
  return o;
}

// Independent oracle: search the commutant for a nontrivial idempotent.
// Every element of a local algebra has a single eigenvalue; otherwise a generic
// element has several, and its spectral projector is built and verified.
struct OracleResult {
  bool found = false;
  Matrix idempotent;
};

Matrix commutant_basis(const RowTuple& t) {
  const Index n = t.dim();
  Matrix sys(n * n * t.size(), n * n);
  const Matrix id = Matrix::Identity(n, n);
  for (int k = 0; k < t.size(); ++k) {
    // vec(X T - T X) = (T^T kron I - I kron T) vec X.
    Matrix block(n * n, n * n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        block.block(i * n, j * n, n, n) = t[k](j, i) * id - (i == j ? t[k] : Matrix::Zero(n, n));
      }
    }
    sys.block(k * n * n, 0, n * n, n * n) = block;
  }
  Eigen::FullPivLU<Matrix> lu(sys);
  lu.setThreshold(1e-9);
  return lu.kernel();
}

std::optional<Matrix> spectral_projector(const Matrix& a, const RowTuple& t) {
  const Index n = a.rows();
  const Complex mean = a.trace() / double(n);
  Matrix shifted = a - mean * Matrix::Identity(n, n);
  Matrix power = Matrix::Identity(n, n);
  for (Index i = 0; i < n; ++i) {
    power = power * shifted;
  }
  const double scale = std::pow(std::max(1.0, operator_norm(shifted)), double(n));
  if (max_abs(power) <= 1e-8 * scale) {
    return std::nullopt;  // single eigenvalue
  }
  Eigen::ComplexEigenSolver<Matrix> es(a);
  const Vector ev = es.eigenvalues();
  const double spread = std::max(1.0, ev.cwiseAbs().maxCoeff());
  // Cluster around the first eigenvalue.
  Complex lambda = 0;
  int members = 0;
  for (Index i = 0; i < n; ++i) {
    if (std::abs(ev(i) - ev(0)) < 1e-3 * spread) {
      lambda += ev(i);
      ++members;
    }
  }
  lambda /= double(members);
  if (members == n) {
    return std::nullopt;
  }
  Matrix b = a - lambda * Matrix::Identity(n, n);
  Matrix bn = Matrix::Identity(n, n);
  for (Index i = 0; i < n; ++i) {
    bn = bn * b;
  }
  Eigen::FullPivLU<Matrix> lu(bn);
  lu.setThreshold(1e-7);
  const Matrix ker = lu.kernel();
  const Matrix img = lu.image(bn);
  if (ker.cols() + img.cols() != n) {
    return std::nullopt;
  }
  Matrix basis(n, n);
  basis << ker, img;
  Matrix sel = Matrix::Zero(n, n);
  for (Index i = 0; i < ker.cols(); ++i) {
    sel(i, i) = 1;
  }
  Matrix e = basis * sel * basis.inverse();
  for (int i = 0; i < 3; ++i) {
    e = 3.0 * e * e - 2.0 * e * e * e;
  }
  const double tol = kIdempotentTol * std::max(1.0, operator_norm(e));
  bool ok = max_abs(e * e - e) < tol;
  for (int k = 0; k < t.size(); ++k) {
    ok = ok && max_abs(e * t[k] - t[k] * e) < tol * std::max(1.0, t.max_norm());
  }
  if (!ok) {
    return std::nullopt;
  }
  return e;
}

OracleResult idempotent_oracle(const RowTuple& t, Rng& rng) {
  const Index n = t.dim();
  const Matrix basis = commutant_basis(t);
  std::vector<Matrix> candidates;
  for (Index c = 0; c < basis.cols(); ++c) {
    candidates.push_back(Eigen::Map<const Matrix>(basis.col(c).data(), n, n));
  }
  std::vector<Matrix> elements = candidates;
  for (int trial = 0; trial < 24; ++trial) {
    Matrix x = Matrix::Zero(n, n);
    for (const Matrix& b : candidates) {
      x += random_vector(1, rng)(0) * b;
    }
    elements.push_back(x);
  }
  for (const Matrix& a : elements) {
    if (auto e = spectral_projector(a, t)) {
      return {true, *e};
    }
  }
  return {};
}

Outcome criterion12() {
  Outcome o;
  Rng rng(1200);
  Rng oracle_rng(1201);
  int positive = 0;
  int agree = 0;
  for (int i = 0; i < kDecompInstances; ++i) {
    const RowTuple t = random_nilpotent_tuple(rng, kDecompMaxDim);
    const DecompositionCertificate c = decomposition_exists(t, static_cast<std::uint64_t>(i));
    const OracleResult oracle = idempotent_oracle(t, oracle_rng);
    const bool same = c.exists == oracle.found;
    o.require(same, "instance " + std::to_string(i) + " dim " + std::to_string(t.dim()) + ": library " +
                        (c.exists ? "true" : "false") + ", oracle " + (oracle.found ? "true" : "false"));
    agree += same ? 1 : 0;
    positive += oracle.found ? 1 : 0;
    if (c.exists) {
      const bool has = c.idempotent.has_value();
      o.require(has, "missing certificate");
      if (has) {
        const Matrix& e = *c.idempotent;
        bool ok = max_abs(e * e - e) < kIdempotentTol;
        for (int k = 0; k < t.size(); ++k) {
          ok = ok && max_abs(e * t[k] - t[k] * e) < kIdempotentTol;
        }
        const Index r = numerical_rank(e);
        o.require(ok && r > 0 && r < t.dim(), "invalid certificate");
      }
    }
  }
  std::ostringstream s;
  s << agree << "/" << kDecompInstances << " agree, " << positive << " decomposable";
  o.detail = s.str();
  return o;
}

bool report(int n, const std::function<Outcome()>& f) {
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o.pass = false;
    o.problems.push_back(std::string("exception: ") + e.what());
  }
  std::printf("criterion %d: %s (%s)\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  for (const auto& p : o.problems) {
    std::printf("    %s\n", p.c_str());
  }
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main() {
  bool all = true;
  all = report(1, criterion1) && all;
  all = report(2, criterion2) && all;
  all = report(3, criterion3) && all;
  all = report(4, criterion4) && all;
  all = report(5, criterion5) && all;
  all = report(6, criterion6) && all;
  Outcome gathering;
  std::vector<WitnessCase> cases;
  try {
    cases = witness_cases(gathering);
  } catch (const std::exception& e) {
    gathering.require(false, e.what());
  }
  all = report(7, [&] { return criterion7(cases, gathering); }) && all;
  all = report(8, [&] { return criterion8(cases); }) && all;
  all = report(9, criterion9) && all;
  all = report(10, criterion10) && all;
  all = report(11, criterion11) && all;
  all = report(12, criterion12) && all;
  std::printf("%s\n", all ? "all criteria passed" : "some criteria failed");
  return all ? 0 : 1;
}
