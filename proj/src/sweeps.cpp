#include "drury/sweeps.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "drury/fock.hpp"
#include "drury/ideals.hpp"
#include "drury/random.hpp"
#include "drury/subspaces.hpp"
#include "drury/vectors.hpp"

namespace drury {

namespace {

// One instance: returns an empty string on success, else a diagnostic.
// Verdict counters are updated through the result.
using Instance = std::function<std::string(Rng&, std::uint64_t, SuiteResult&,
                                           const Tolerance&)>;

std::string rigidity_outcome(const RigidityVerdict& v, SuiteResult& r) {
  if (v.verdict == Verdict::TheoremViolation) {
    ++r.violations;
    return "THEOREM_VIOLATION under hypothesis " + v.hypothesis;
  }
  if (v.verdict == Verdict::Inapplicable) {
    ++r.inapplicable;
    return "inapplicable: " + v.hypothesis;
  }
  return "";
}

std::string rigidity_cyclic(Rng& rng, std::uint64_t, SuiteResult& r,
                            const Tolerance& tol) {
  const RowTuple t = random_cyclic_nilpotent(rng, 8);
  const Subspace m = random_proper_invariant(t, rng);
  return rigidity_outcome(
      rigidity_invariant_check(t, m, Subspace::full(t.dim()), tol), r);
}

std::string rigidity_coinvariant(Rng& rng, std::uint64_t, SuiteResult& r,
                                 const Tolerance& tol) {
  const RowTuple t = random_cyclic_nilpotent(rng, 8);
  const Subspace m = random_coinvariant(t, rng);
  const Subspace n = random_coinvariant(t, rng);
  return rigidity_outcome(rigidity_coinvariant_check(t, m, n, tol), r);
}

std::string rigidity_adjoint(Rng& rng, std::uint64_t, SuiteResult& r,
                             const Tolerance& tol) {
  const RowTuple t = random_adjoint_cyclic(rng, 8);
  const Subspace m = random_invariant(t, rng);
  const Subspace n = random_invariant(t, rng);
  return rigidity_outcome(rigidity_invariant_check(t, m, n, tol), r);
}

std::string splitting(Rng& rng, std::uint64_t seed, SuiteResult&,
                      const Tolerance& tol) {
  const SplittingInstance inst = random_splitting_instance(rng);
  const SplitResult s = splitting_construct(inst.t, inst.m, seed, tol);
  if (!is_invariant(inst.t, s.n, tol)) {
    return "N is not invariant";
  }
  Matrix stacked(inst.t.dim(), inst.m.dimension() + s.n.dimension());
  stacked << inst.m.frame(), s.n.frame();
  const Eigen::VectorXd sv = singular_values(stacked);
  if (stacked.cols() != inst.t.dim()) {
    return "dim M + dim N differs from dim H";
  }
  if (sv.size() == 0 || sv.minCoeff() <= 1e-8) {
    return "M and N are not independent";
  }
  return "";
}

std::string greedy(Rng& rng, std::uint64_t seed, SuiteResult&,
                   const Tolerance& tol) {
  RowTuple t = random_nilpotent_tuple(rng, 12);
  QuotientContext ctx(t, tol);
  while (ctx.delta() > 12) {
    t = random_nilpotent_tuple(rng, 8);
    ctx = QuotientContext(t, tol);
  }
  const GreedyResult g = separating_greedy(t, seed, Sampler::Gaussian, tol);
  if (static_cast<Index>(g.vectors.size()) > g.delta) {
    return "greedy set larger than delta";
  }
  for (std::size_t i = 1; i < g.kernel_dims.size(); ++i) {
    if (g.kernel_dims[i] >= g.kernel_dims[i - 1]) {
      return "kernel dimension did not decrease";
    }
  }
  Matrix v(t.dim(), static_cast<Index>(g.vectors.size()));
  for (Index j = 0; j < v.cols(); ++j) {
    v.col(j) = g.vectors[j];
  }
  if (!is_separating_set(ctx, v)) {
    return "greedy output is not separating";
  }
  return "";
}

std::string decomposition(Rng& rng, std::uint64_t seed, SuiteResult&,
                          const Tolerance& tol) {
  const RowTuple t = random_nilpotent_tuple(rng, 4);
  const DecompositionCertificate c = decomposition_exists(t, seed, tol);
  const auto found = decomposition_find(t, false, seed, tol);
  if (c.exists != found.has_value()) {
    return "existence and search disagree";
  }
  if (found) {
    if (!is_invariant(t, found->m, tol) || !is_invariant(t, found->n, tol)) {
      return "decomposition parts are not invariant";
    }
    if (found->m.dimension() + found->n.dimension() != t.dim()) {
      return "decomposition parts do not span";
    }
  }
  return "";
}

std::string witness(Rng& rng, std::uint64_t seed, SuiteResult&,
                    const Tolerance& tol) {
  const int d = std::uniform_int_distribution<int>(1, 3)(rng);
  const RowTuple t = random_similar_model(random_nilpotent_ideal(d, 8, rng), rng);
  const QuasiAffineWitness w = quasiaffine_witness(t, seed, tol);
  if (w.residual >= 1e-8) {
    return "intertwining residual too large";
  }
  if (w.rank != t.dim()) {
    return "witness is not invertible";
  }
  const Vector xi = w.x * w.space.frame.row(0).adjoint();
  const GramReport g = gram_operator(t, xi, tol);
  if (g.bound > 1 + 1e-8) {
    return "Gram bound exceeds 1";
  }
  const int n = *nilpotency_index(t, std::nullopt, tol);
  if (fock_intertwining_residual(t, fock_intertwiner(t, xi, n), n) >= 1e-10) {
    return "Fock intertwiner residual too large";
  }
  return "";
}

const std::map<std::string, std::pair<Instance, int>>& registry() {
  static const std::map<std::string, std::pair<Instance, int>> r = {
      {"rigidity-cyclic", {rigidity_cyclic, 200}},
      {"rigidity-coinvariant", {rigidity_coinvariant, 200}},
      {"rigidity-adjoint", {rigidity_adjoint, 200}},
      {"splitting", {splitting, 100}},
      {"greedy", {greedy, 200}},
      {"decomposition", {decomposition, 200}},
      {"witness", {witness, 100}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "rigidity-cyclic", "rigidity-coinvariant", "rigidity-adjoint",
      "splitting",       "greedy",               "decomposition",
      "witness"};
  return names;
}

int default_instances(const std::string& suite) {
  auto it = registry().find(suite);
  if (it == registry().end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return it->second.second;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count,
                      const Tolerance& tol) {
  auto it = registry().find(name);
  if (it == registry().end()) {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  SuiteResult r;
  r.name = name;
  r.instances = count < 0 ? it->second.second : count;
  const auto start = std::chrono::steady_clock::now();
  const auto& names = suite_names();
  const auto position = static_cast<std::uint64_t>(
      std::find(names.begin(), names.end(), name) - names.begin());
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(position)};
  Rng rng(seq);
  for (int i = 0; i < r.instances; ++i) {
    const std::uint64_t instance_seed = rng();
    Rng local(instance_seed);
    std::string problem;
    try {
      problem = it->second.first(local, instance_seed, r, tol);
    } catch (const std::exception& e) {
      problem = e.what();
    }
    if (problem.empty()) {
      ++r.passed;
    } else {
      ++r.failed;
      if (r.failures.size() < 5) {
        r.failures.push_back("instance " + std::to_string(i) + ": " + problem);
      }
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

std::vector<SuiteResult> run_sweep(const std::string& name, std::uint64_t seed,
                                   int count, const Tolerance& tol) {
  std::vector<SuiteResult> out;
  if (name == "all") {
    for (const auto& s : suite_names()) {
      out.push_back(run_suite(s, seed, count, tol));
    }
  } else {
    out.push_back(run_suite(name, seed, count, tol));
  }
  return out;
}

}  // namespace drury
