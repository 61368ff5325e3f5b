#include "drury/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>

#include <CLI11.hpp>

#include "drury/errors.hpp"
#include "drury/fixtures.hpp"
#include "drury/fock.hpp"
#include "drury/ideals.hpp"
#include "drury/io.hpp"
#include "drury/subspaces.hpp"
#include "drury/sweeps.hpp"
#include "drury/vectors.hpp"

namespace drury {

namespace {

struct Options {
  std::string input;
  std::string fixture;
  std::string vector_file;
  std::string m_file;
  std::string n_file;
  std::string poly;
  std::string mode;
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::optional<int> degree;
  int count = -1;
  int from = -1;
  bool json = false;
  bool adjoint = false;
  bool cyclic = false;
};

// Thrown to finish with a given exit code after the report is written.
struct Finish {
  int code;
};

class Session {
 public:
  Session(std::string command, const Options& o) : command_(std::move(command)), o_(o) {
    if (o_.tol) {
      tol_.rank_rel_tol = *o_.tol;
      tol_.psd_tol = *o_.tol;
    }
    tol_.check();
  }

  const Tolerance& tol() const { return tol_; }
  Json& results() { return results_; }
  void warn(const std::string& w) { warnings_.push_back(w); }

  RowTuple tuple() {
    RowTuple t;
    if (!o_.fixture.empty()) {
      digest_input_ += "fixture:" + o_.fixture + ";";
      t = build_fixture(o_.fixture);
    } else if (!o_.input.empty()) {
      const std::string text = read_text_file(o_.input);
      digest_input_ += text;
      t = tuple_from_json(parse_json(text, o_.input));
    } else {
      throw std::invalid_argument("give a tuple with --fixture or --input");
    }
    return o_.adjoint ? t.adjoint() : t;
  }

  /// --vector, or --input when the tuple came from --fixture.
  std::optional<Vector> vector() {
    std::string path = o_.vector_file;
    if (path.empty() && !o_.fixture.empty()) {
      path = o_.input;
    }
    if (path.empty()) {
      return std::nullopt;
    }
    const std::string text = read_text_file(path);
    digest_input_ += text;
    return vector_from_json(parse_json(text, path), path);
  }

  std::optional<Subspace> subspace(const std::string& path) {
    if (path.empty()) {
      return std::nullopt;
    }
    const std::string text = read_text_file(path);
    digest_input_ += text;
    return subspace_from_json(parse_json(text, path));
  }

  void digest_extra(const std::string& s) { digest_input_ += s; }

  void emit(std::ostream& out, double seconds) const {
    Json report{{"command", command_},
                {"input_digest", fnv1a_digest(digest_input_)},
                {"results", results_},
                {"warnings", warnings_},
                {"wall_time", seconds}};
    if (o_.json) {
      out << report.dump(2) << "\n";
      return;
    }
    out << command_ << "\n";
    for (const auto& [key, value] : results_.items()) {
      out << "  " << key << ": "
          << (value.is_string() ? value.get<std::string>() : value.dump())
          << "\n";
    }
    for (const auto& w : warnings_) {
      out << "  warning: " << w << "\n";
    }
  }

 private:
  std::string command_;
  const Options& o_;
  Tolerance tol_;
  Json results_ = Json::object();
  std::vector<std::string> warnings_;
  std::string digest_input_;
};

Json strings(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) {
    a.push_back(p.to_string());
  }
  return a;
}

Json indices(const std::vector<MultiIndex>& as) {
  Json a = Json::array();
  for (const auto& alpha : as) {
    a.push_back(alpha.exponents);
  }
  return a;
}

std::vector<Polynomial> parse_poly_list(const std::string& text) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto sep = text.find_first_of(",;", start);
    const std::string piece = text.substr(start, sep - start);
    if (piece.find_first_not_of(" \t") != std::string::npos) {
      out.push_back(Polynomial::parse(piece));
    }
    if (sep == std::string::npos) {
      break;
    }
    start = sep + 1;
  }
  return out;
}

void cmd_check(Session& s, const Options&) {
  const TupleReport r = validate(s.tuple(), s.tol());
  Json& j = s.results();
  j["commuting"] = r.commuting;
  j["commutator_norm"] = r.commutator_norm;
  j["row_contraction"] = r.row_contraction;
  j["pure"] = r.purity == Purity::Pure;
  j["purity"] = to_string(r.purity);
  j["nilpotent"] = r.nilpotent ? Json(*r.nilpotent) : Json(nullptr);
  j["defect"] = r.defect;
  j["row_sum"] = matrix_to_json(r.row_sum);
  j["defect_operator"] = matrix_to_json(r.defect_operator);
  if (!r.commuting) {
    s.warn("tuple is not commuting");
  }
}

void cmd_ann(Session& s, const Options& o) {
  const RowTuple t = s.tuple();
  const AnnihilatorBasis ann = annihilator(t, s.tol(), o.degree);
  const QuotientAlgebra q = quotient_algebra(ann, s.tol());
  Json& j = s.results();
  j["degree_bound"] = ann.degree_bound;
  j["basis"] = strings(ann.polynomials());
  j["generators"] = strings(minimal_generators(ann, s.tol()));
  j["delta"] = q.dimension();
  j["quotient_basis"] = indices(q.basis);
  const auto om = omega_e(t, s.tol());
  j["omega_e"] = indices(om);
  j["omega_e_count"] = om.size();
  s.warn("generators are a greedy, non-canonical choice");
}

void cmd_model(Session& s, const Options& o) {
  AnnihilatorBasis ann;
  if (!o.poly.empty()) {
    s.digest_extra("poly:" + o.poly);
    ann = ideal_from_generators(parse_poly_list(o.poly));
  } else {
    ann = annihilator(s.tuple(), s.tol(), o.degree);
  }
  const ModelSpace space = model_space(ann, std::nullopt, s.tol());
  const RowTuple m = model_tuple(space);
  Json& j = s.results();
  j["ideal"] = strings(ann.polynomials());
  j["dimension"] = space.dimension();
  j["tuple"] = tuple_to_json(m);
}

void cmd_cyclic(Session& s, const Options& o) {
  const RowTuple t = s.tuple();
  Json& j = s.results();
  if (auto v = s.vector()) {
    const Subspace k = krylov(t, *v, s.tol());
    j["cyclic"] = k.dimension() == t.dim();
    j["krylov_dimension"] = k.dimension();
  } else {
    j["multiplicity"] = multiplicity(t, s.tol());
    if (o.mode == "exhaustive") {
      j["multiplicity_exhaustive"] = multiplicity_exhaustive(t, o.seed, 64, s.tol());
    }
  }
}

void cmd_separating(Session& s, const Options& o) {
  const RowTuple t = s.tuple();
  const QuotientContext ctx(t, s.tol());
  Json& j = s.results();
  j["delta"] = ctx.delta();
  if (auto v = s.vector()) {
    const auto w = separating_witness(ctx, *v);
    j["separating"] = !w.has_value();
    if (w) {
      MonomialCache cache(t);
      const Matrix p = poly_eval(*w, cache);
      j["witness"] = w->to_string();
      j["witness_norm"] = operator_norm(p);
      j["witness_residual"] = (p * *v).norm();
    } else {
      j["witness"] = nullptr;
    }
    return;
  }
  const Sampler sampler = o.mode == "standard" ? Sampler::StandardBasis
                                               : Sampler::Gaussian;
  const GreedyResult g = separating_greedy(t, o.seed, sampler, s.tol());
  Json vs = Json::array();
  for (const auto& v : g.vectors) {
    vs.push_back(vector_to_json(v));
  }
  j["sampler"] = sampler == Sampler::StandardBasis ? "standard" : "gaussian";
  j["vectors"] = vs;
  j["size"] = g.vectors.size();
  j["kernel_dims"] = g.kernel_dims;
}

void cmd_gram(Session& s, const Options&) {
  const RowTuple t = s.tuple();
  const auto v = s.vector();
  if (!v) {
    throw std::invalid_argument("gram needs a vector (--vector FILE)");
  }
  const GramReport g = gram_operator(t, *v, s.tol());
  Json& j = s.results();
  j["gram"] = matrix_to_json(g.gram);
  j["bound"] = g.bound;
  j["cyclic"] = g.cyclic;
}

void cmd_transform(Session& s, const Options& o) {
  const RowTuple t = s.tuple();
  Json& j = s.results();
  try {
    const QuasiAffineWitness w = quasiaffine_witness(t, o.seed, s.tol());
    j["found"] = true;
    j["x"] = matrix_to_json(w.x);
    j["residual"] = w.residual;
    j["rank"] = w.rank;
    j["attempts"] = w.attempts;
    j["ideal"] = strings(w.ideal.polynomials());
    j["model"] = tuple_to_json(w.model);
  } catch (const HypothesisError& e) {
    j["found"] = false;
    j["reason"] = e.what();
    j["hypothesis"] = e.hypothesis();
    throw Finish{kExitInapplicable};
  } catch (const NumericalError& e) {
    j["found"] = false;
    j["reason"] = e.what();
    throw Finish{kExitUsage};
  }
}

void cmd_rigidity(Session& s, const Options& o) {
  const RowTuple t = s.tuple();
  const auto m = s.subspace(o.m_file);
  if (!m) {
    throw std::invalid_argument("rigidity needs --m FILE");
  }
  const Subspace n = s.subspace(o.n_file).value_or(Subspace::full(t.dim()));
  const bool co = o.mode == "coinvariant";
  if (!co && !o.mode.empty() && o.mode != "invariant") {
    throw std::invalid_argument("--mode must be invariant or coinvariant");
  }
  const RigidityVerdict v = co ? rigidity_coinvariant_check(t, *m, n, s.tol())
                               : rigidity_invariant_check(t, *m, n, s.tol());
  Json& j = s.results();
  j["mode"] = co ? "coinvariant" : "invariant";
  j["verdict"] = to_string(v.verdict);
  j["hypothesis"] = v.hypothesis;
  j["annihilators_equal"] = v.annihilators_equal;
  j["subspaces_equal"] = v.subspaces_equal;
  if (v.verdict == Verdict::Inapplicable) {
    throw Finish{kExitInapplicable};
  }
  if (v.verdict == Verdict::TheoremViolation) {
    throw Finish{kExitViolation};
  }
}

void cmd_decompose(Session& s, const Options& o) {
  const RowTuple t = s.tuple();
  const DecompositionCertificate c = decomposition_exists(t, o.seed, s.tol());
  Json& j = s.results();
  j["exists"] = c.exists;
  j["commutant_dimension"] = c.commutant_dim;
  j["radical_dimension"] = c.radical_dim;
  j["certificate"] = c.idempotent ? matrix_to_json(*c.idempotent) : Json(nullptr);
  const auto found = decomposition_find(t, o.cyclic, o.seed, s.tol());
  j["cyclic_requested"] = o.cyclic;
  if (found) {
    j["m"] = subspace_to_json(found->m);
    j["n"] = subspace_to_json(found->n);
  } else {
    j["m"] = nullptr;
    j["n"] = nullptr;
  }
}

void cmd_split(Session& s, const Options& o) {
  const RowTuple t = s.tuple();
  const auto m = s.subspace(o.m_file);
  if (!m) {
    throw std::invalid_argument("split needs --m FILE");
  }
  Json& j = s.results();
  try {
    const SplitResult r = splitting_construct(t, *m, o.seed, s.tol());
    j["n"] = subspace_to_json(r.n);
    j["degenerate"] = r.degenerate;
    if (r.degenerate) {
      s.warn("M is the whole space; N is the zero subspace");
    }
  } catch (const HypothesisError& e) {
    j["failed_hypothesis"] = e.hypothesis();
    j["reason"] = e.what();
    throw Finish{kExitInapplicable};
  }
}

void cmd_fock(Session& s, const Options& o) {
  if (o.poly.empty()) {
    throw std::invalid_argument("fock needs --poly");
  }
  s.digest_extra("poly:" + o.poly);
  const Polynomial p = Polynomial::parse(o.poly);
  const int last = o.degree.value_or(std::max(1, p.degree()) + 8);
  const int first = o.from >= 0 ? o.from : std::max(1, p.degree());
  const MultiplierNormSequence seq = multiplier_norm_sequence(p, first, last);
  Json& j = s.results();
  j["polynomial"] = p.to_string();
  j["degrees"] = seq.degrees;
  j["norms"] = seq.norms;
  bool monotone = true;
  for (std::size_t i = 1; i < seq.norms.size(); ++i) {
    monotone = monotone && seq.norms[i] >= seq.norms[i - 1] - 1e-12;
  }
  j["nondecreasing"] = monotone;
  j["stabilized_at"] = seq.stabilized_at ? Json(*seq.stabilized_at) : Json(nullptr);
  s.warn("truncated norms are lower bounds; stabilization is a heuristic");
}

void cmd_fixtures(Session& s, const Options& o) {
  Json& j = s.results();
  if (!o.fixture.empty()) {
    j["tuple"] = tuple_to_json(s.tuple());
    return;
  }
  Json list = Json::array();
  for (const auto& f : list_fixtures()) {
    list.push_back({{"name", f.name},
                    {"parameters", f.parameters},
                    {"description", f.description}});
  }
  j["fixtures"] = list;
}

void cmd_sweep(Session& s, const Options& o) {
  s.digest_extra("suite:" + o.suite + ";seed:" + std::to_string(o.seed));
  const auto results = run_sweep(o.suite, o.seed, o.count, s.tol());
  Json& j = s.results();
  Json suites = Json::array();
  int failed = 0;
  int violations = 0;
  for (const auto& r : results) {
    suites.push_back({{"suite", r.name},
                      {"instances", r.instances},
                      {"passed", r.passed},
                      {"failed", r.failed},
                      {"violations", r.violations},
                      {"inapplicable", r.inapplicable},
                      {"failures", r.failures}});
    failed += r.failed;
    violations += r.violations;
  }
  j["suites"] = suites;
  j["failed"] = failed;
  j["violations"] = violations;
  if (violations > 0) {
    throw Finish{kExitViolation};
  }
  if (failed > 0) {
    throw Finish{kExitUsage};
  }
}

using Handler = void (*)(Session&, const Options&);

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Row contraction toolkit", "drury"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::pair<std::string, Handler>>>
      commands = {
          {"check", {"validate a tuple", cmd_check}},
          {"ann", {"annihilator, quotient dimension and omega_e", cmd_ann}},
          {"model", {"model space and model tuple", cmd_model}},
          {"cyclic", {"cyclic vector test or multiplicity", cmd_cyclic}},
          {"separating", {"separating test with witness, or greedy set", cmd_separating}},
          {"gram", {"Gram operator of a vector", cmd_gram}},
          {"transform", {"quasi-affine transform witness", cmd_transform}},
          {"rigidity", {"annihilator rigidity check", cmd_rigidity}},
          {"decompose", {"invariant decomposition", cmd_decompose}},
          {"split", {"splitting construction", cmd_split}},
          {"fock", {"truncated multiplier norms", cmd_fock}},
          {"fixtures", {"list or print fixtures", cmd_fixtures}},
          {"sweep", {"randomized property suites", cmd_sweep}},
      };
  for (const auto& [name, info] : commands) {
    CLI::App* sub = app.add_subcommand(name, info.first);
    sub->add_option("--input", o.input, "tuple JSON file (vector file with --fixture)");
    sub->add_option("--fixture", o.fixture, "named fixture, e.g. fromgriff(3)");
    sub->add_option("--vector", o.vector_file, "vector JSON file");
    sub->add_option("--m", o.m_file, "subspace JSON file");
    sub->add_option("--n", o.n_file, "second subspace JSON file");
    sub->add_option("--poly", o.poly, "polynomial, or comma-separated generators");
    sub->add_option("--mode", o.mode, "command-specific mode");
    sub->add_option("--suite", o.suite, "sweep suite or all");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--tol", o.tol, "relative rank tolerance");
    sub->add_option("--degree", o.degree, "degree bound or truncation");
    sub->add_option("--from", o.from, "first truncation degree");
    sub->add_option("--count", o.count, "instances per suite");
    sub->add_flag("--json", o.json, "print a JSON report");
    sub->add_flag("--adjoint", o.adjoint, "use the adjoint tuple");
    sub->add_flag("--cyclic", o.cyclic, "require a cyclic summand");
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  const CLI::App* chosen = app.get_subcommands().front();
  Handler handler = nullptr;
  for (const auto& [name, info] : commands) {
    if (name == chosen->get_name()) {
      handler = info.second;
    }
  }
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  };
  int code = kExitOk;
  try {
    Session s(chosen->get_name(), o);
    try {
      handler(s, o);
    } catch (const Finish& f) {
      code = f.code;
    } catch (const HypothesisError& e) {
      s.results()["inapplicable"] = e.hypothesis();
      s.warn(e.what());
      code = kExitInapplicable;
    }
    s.emit(out, elapsed());
  } catch (const std::exception& e) {
    err << chosen->get_name() << ": " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}

}  // namespace drury
