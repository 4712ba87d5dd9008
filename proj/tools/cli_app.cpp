#include "cli_app.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qrea/braiding/braid.hpp"
#include "qrea/classical/poisson.hpp"
#include "qrea/classical/shape.hpp"
#include "qrea/cli/checks.hpp"
#include "qrea/errors.hpp"
#include "qrea/qmatrix/identities.hpp"
#include "qrea/rea/identities.hpp"
#include "qrea/rea/reflection.hpp"
#include "qrea/rea/semiclassical.hpp"
#include "qrea/rea/shapes.hpp"

namespace qrea {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Streams certificates and keeps the tally for the exit code and summary.
class Emitter {
 public:
  Emitter(std::ostream& out, std::string command, std::uint64_t seed) : out_(out), command_(std::move(command)), seed_(seed) {}

  void emit(const Certificate& c, const json& result = nullptr) {
    json j = c.to_json();
    j["command"] = command_;
    j["seed"] = seed_;
    if (!result.is_null()) j["result"] = result;
    out_ << j.dump() << '\n';
    ++counts_[static_cast<int>(c.status)];
  }
  void emit_all(const std::vector<Certificate>& certs) {
    for (const auto& c : certs) emit(c);
  }
  /// A plain record that is not a check, such as a table dump.
  void record(json j) {
    j["command"] = command_;
    out_ << j.dump() << '\n';
  }

  int exit_code() const { return counts_[1] + counts_[2] > 0 ? 1 : 0; }
  std::string summary() const {
    std::ostringstream s;
    s << command_ << ": " << counts_[0] << " pass, " << counts_[1] << " fail, " << counts_[2] << " inconclusive";
    return s.str();
  }

 private:
  std::ostream& out_;
  std::string command_;
  std::uint64_t seed_;
  int counts_[3] = {0, 0, 0};
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

// Inline JSON if it looks like JSON, otherwise a file path.
json json_argument(const std::string& arg, const std::string& what) {
  std::size_t p = arg.find_first_not_of(" \t\n");
  bool inline_json = p != std::string::npos && (arg[p] == '{' || arg[p] == '[');
  return parse_json_text(inline_json ? arg : slurp(arg), what);
}

std::vector<Rational> parse_weights(const std::string& text) {
  std::vector<Rational> out;
  std::string s = text;
  if (!s.empty() && s.front() == '[') {
    for (const auto& v : parse_json_text(s, "weights")) {
      if (v.is_number_integer()) {
        out.emplace_back(v.get<long>());
      } else if (v.is_string()) {
        out.push_back(parse_rational(v.get<std::string>()));
      } else {
        throw ParseError("weights must be integers or \"p/q\" strings");
      }
    }
    return out;
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::vector<std::string> expand_families(const std::string& name, bool rea) {
  if (rea) {
    if (name == "gencomm") return {"gencomm"};
    if (name == "laplace") return {"laplexp1", "laplexp2"};
    if (name == "muir") return {"muirbr", "muirbr2"};
    for (const auto& f : rea_identity_families())
      if (f == name) return {name};
  } else {
    if (name == "laplace") return {"laplace-row", "laplace-col"};
    if (name == "muir") return {"muir", "muir2"};
    if (name == "braidcomm") return {"braidcomm1", "braidcomm2"};
    for (const auto& f : matrix_identity_families())
      if (f == name) return {name};
  }
  throw UsageError("unknown identity family '" + name + "'");
}

struct Common {
  int N = 2;
  std::uint64_t seed = 1;
  bool serial = false;
  int samples = 0;

  CheckContext context() const { return {N, seed, serial ? Exec::Serial : Exec::Parallel, samples}; }
};

void add_common(CLI::App* app, Common& c, bool with_samples) {
  app->add_option("--N", c.N, "matrix size")->check(CLI::Range(1, 4));
  app->add_option("--seed", c.seed, "master seed (QREA_SEED overrides)");
  app->add_flag("--serial", c.serial, "run sweeps on one thread");
  if (with_samples) app->add_option("--samples", c.samples, "sample count")->check(CLI::PositiveNumber);
}

void require_N(int N, int lo, int hi) {
  if (N < lo || N > hi)
    throw UsageError("--N must lie in " + std::to_string(lo) + ".." + std::to_string(hi) + " for this command");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of quantum matrix and reflection equation identities", "qrea"};
  app.require_subcommand(1);

  Common common;
  std::string family, instance, shape_arg, weights_arg, file, leg = "Z23", flavor = "dominance", only;
  int k = 1, l = 1, max_k = 0, max_size = 2;
  bool sweep_flag = false, inverse = false, dump = false, as_json = false, rank0 = false, list = false,
       detail = false, all_shapes = false;

  auto* braid = app.add_subcommand("braid", "braid relation, Hecke identity, optional operator dump");
  add_common(braid, common, false);
  braid->add_flag("--dump", dump, "emit the nonzero operator entries");
  braid->add_flag("--inverse", inverse, "dump the inverse operator");

  auto* wedge = app.add_subcommand("wedge-table", "braiding coefficients between wedge powers");
  add_common(wedge, common, false);
  wedge->add_option("--k", k)->check(CLI::Range(0, 4));
  wedge->add_option("--l", l)->check(CLI::Range(0, 4));
  wedge->add_flag("--inverse", inverse, "dump the inverse table");

  auto* verify = app.add_subcommand("verify", "identities of the quantum matrix algebra");
  add_common(verify, common, false);
  verify->add_option("family", family, "laplace, muir, braidcomm, or a single family name")->required();
  verify->add_flag("--sweep", sweep_flag, "run the documented sweep (default)");
  verify->add_option("--instance", instance, "one instance as JSON (inline or file)");
  verify->add_option("--max-k", max_k, "largest minor size in the sweep")->check(CLI::PositiveNumber);

  auto* rea = app.add_subcommand("rea", "reflection equation algebra");
  rea->require_subcommand(1);
  auto* rea_verify = rea->add_subcommand("verify", "identities in the star model");
  add_common(rea_verify, common, false);
  rea_verify->add_option("family", family, "gencomm, laplace, muir, or a single family name")->required();
  rea_verify->add_flag("--sweep", sweep_flag, "run the documented sweep (default)");
  rea_verify->add_option("--instance", instance, "one instance as JSON (inline or file)");
  rea_verify->add_option("--max-k", max_k, "largest minor size in the sweep")->check(CLI::PositiveNumber);
  auto* rea_shapes = rea->add_subcommand("shapes", "shape families with their leading minors");
  add_common(rea_shapes, common, false);
  rea_shapes->add_flag("--json", as_json, "one JSON record per family");
  rea_shapes->add_flag("--rank0", rank0, "include the zero shape");
  auto* rea_qcomm = rea->add_subcommand("qcomm", "q-commutation certificates modulo the shape ideal");
  add_common(rea_qcomm, common, false);
  rea_qcomm->add_option("--shape", shape_arg, "shape as JSON (inline or file)");
  rea_qcomm->add_flag("--all", all_shapes, "every shape family at --N");
  rea_qcomm->add_option("--flavor", flavor, "dominance or lex");
  rea_qcomm->add_option("--max-size", max_size, "largest |I| = |J|")->check(CLI::Range(1, 4));
  auto* rea_semi = rea->add_subcommand("semiclassical", "first-order star commutators against the bracket");
  add_common(rea_semi, common, false);
  auto* rea_refl = rea->add_subcommand("reflection", "reflection equation for the star matrix");
  add_common(rea_refl, common, false);
  rea_refl->add_option("--leg", leg, "Z23 or Z13");

  auto* classical = app.add_subcommand("classical", "shapes and leaves of Hermitian matrices");
  classical->require_subcommand(1);
  auto* c_shape = classical->add_subcommand("shape", "shape of a matrix");
  c_shape->add_option("file", file, "matrix JSON file, or - for stdin")->required();
  auto* c_decomp = classical->add_subcommand("decompose", "z = t* S t");
  c_decomp->add_option("file", file, "matrix JSON file, or - for stdin")->required();
  auto* c_leaf = classical->add_subcommand("leaf", "leaf label (shape, weight)");
  c_leaf->add_option("file", file, "matrix JSON file, or - for stdin")->required();
  auto* c_build = classical->add_subcommand("build", "enhanced shape with given shape and weight");
  c_build->add_option("--shape", shape_arg, "shape as JSON (inline or file)")->required();
  c_build->add_option("--weights", weights_arg, "comma list or JSON array of rationals")->required();
  std::map<std::string, CLI::App*> sampled_cmds;
  for (const char* name : {"tangency", "jacobi", "invariance"}) {
    auto* sub = classical->add_subcommand(name, std::string("randomized ") + name + " sweep");
    add_common(sub, common, true);
    sampled_cmds[name] = sub;
  }

  auto* check_all = app.add_subcommand("check-all", "every registered invariant at --N");
  add_common(check_all, common, true);
  check_all->add_flag("--list", list, "list registered checks and exit");
  check_all->add_flag("--detail", detail, "emit every instance instead of one line per check");
  check_all->add_option("--only", only, "comma-separated check names");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  if (const char* env = std::getenv("QREA_SEED")) {
    try {
      common.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "QREA_SEED must be an unsigned integer\n";
      return 2;
    }
  }

  std::string command;
  for (CLI::App* a = &app; !a->get_subcommands().empty();) {
    a = a->get_subcommands().front();
    command += (command.empty() ? "" : " ") + a->get_name();
  }
  Emitter em(out, command, common.seed);
  auto start = std::chrono::steady_clock::now();

  try {
    CheckContext ctx = common.context();
    if (braid->parsed()) {
      const auto& R = braid_operator(common.N);
      if (dump) {
        json entries = json::array();
        for (int a = 1; a <= common.N; ++a)
          for (int b = 1; b <= common.N; ++b)
            for (const auto& e : inverse ? R.inverse_column(a, b) : R.column(a, b))
              entries.push_back({{"in", {a, b}}, {"out", {e.a, e.b}}, {"value", e.value.to_json()}});
        em.record({{"N", common.N}, {"inverse", inverse}, {"entries", entries}});
      }
      auto mk = [&](const char* name, bool ok) {
        Certificate c;
        c.check = name;
        c.N = common.N;
        c.status = ok ? Status::Pass : Status::Fail;
        em.emit(c);
      };
      mk("braid-relation", braid_relation_check(common.N));
      mk("braid-hecke", hecke_check(common.N));
      mk("braid-symmetry", braid_symmetry_check(common.N));
      mk("braid-inverse", braid_inverse_check(common.N));
    } else if (wedge->parsed()) {
      if (k > common.N || l > common.N) throw UsageError("--k and --l must not exceed --N");
      const auto& T = wedge_braiding(common.N, k, l);
      em.record(T.to_json(inverse));
      TableReport rep = check_wedge_table(T);
      Certificate c;
      c.check = "wedge-table";
      c.N = common.N;
      c.instance = {{"k", k}, {"l", l}};
      c.status = rep.ok() ? Status::Pass : Status::Fail;
      if (!rep.ok()) c.witness = {{"reason", rep.first_failure}};
      em.emit(c);
    } else if (verify->parsed() || rea_verify->parsed()) {
      bool is_rea = rea_verify->parsed();
      require_N(common.N, 1, 3);
      auto fams = expand_families(family, is_rea);
      auto check = [&](const IdentityInstance& i) { return is_rea ? verify_rea_identity(i) : verify_matrix_identity(i); };
      if (!instance.empty()) {
        if (sweep_flag) throw UsageError("--instance and --sweep are exclusive");
        if (fams.size() != 1) throw UsageError("--instance needs a single family name, not '" + family + "'");
        em.emit(check(IdentityInstance::from_json(fams[0], common.N, json_argument(instance, "instance"))));
      } else {
        for (const auto& f : fams) {
          int mk = max_k > 0 ? max_k : (is_rea && f == "gencomm" ? 2 : std::min(common.N, 3));
          auto insts = is_rea ? rea_identity_sweep(f, common.N, mk) : matrix_identity_sweep(f, common.N, mk);
          em.emit_all(verify_all(insts, check, ctx.exec));
        }
      }
    } else if (rea_shapes->parsed()) {
      for (const auto& s : enumerate_shapes(common.N, rank0)) {
        json labels = json::array();
        for (int kk = 1; kk <= s.rank(); ++kk) labels.push_back(minor_label_json(s.label(kk)));
        if (as_json) {
          em.record({{"N", s.N}, {"rank", s.rank()}, {"tau", s.tau}, {"u", s.u}, {"labels", labels}});
        } else {
          std::string line = "rank " + std::to_string(s.rank()) + "  tau=";
          for (int t : s.tau) line += std::to_string(t);
          line += "  u=(";
          for (std::size_t i = 0; i < s.u.size(); ++i) line += (i ? "," : "") + s.u[i];
          line += ")";
          for (const auto& lj : labels) line += "  " + lj["name"].get<std::string>();
          out << line << '\n';
        }
      }
    } else if (rea_qcomm->parsed()) {
      IdealFlavor fl = parse_flavor(flavor);
      std::vector<QuantumShape> shapes;
      if (all_shapes) {
        if (!shape_arg.empty()) throw UsageError("--shape and --all are exclusive");
        require_N(common.N, 1, 3);
        shapes = enumerate_shapes(common.N);
      } else if (!shape_arg.empty()) {
        shapes.push_back(QuantumShape::from_json(json_argument(shape_arg, "shape")));
        shapes.back().validate();
      } else {
        throw UsageError("rea qcomm needs --shape or --all");
      }
      auto per = sweep<std::vector<Certificate>>(
          shapes.size(), [&](std::size_t i) { return shape_qcomm_sweep(shapes[i], max_size, fl); }, ctx.exec);
      for (const auto& v : per) em.emit_all(v);
    } else if (rea_semi->parsed()) {
      require_N(common.N, 1, 3);
      em.emit_all(semiclassical_sweep(common.N));
    } else if (rea_refl->parsed()) {
      require_N(common.N, 1, 3);
      auto rep = reflection_check_star(common.N, parse_leg(leg));
      Certificate c;
      c.check = "rea-reflection";
      c.N = common.N;
      c.instance = {{"leg", leg_name(rep.leg)}};
      c.status = rep.holds() ? Status::Pass : Status::Fail;
      if (!rep.holds()) c.witness = {{"nonzero_entries", rep.nonzero_entries}, {"first", rep.first_nonzero}};
      em.emit(c);
    } else if (c_shape->parsed() || c_decomp->parsed() || c_leaf->parsed()) {
      auto z = HermitianMatrix::from_json(json_argument(file, "matrix"));
      Certificate c;
      c.N = z.N();
      c.instance = {{"matrix", z.to_json()}};
      json result;
      if (c_shape->parsed()) {
        if (!z.is_exact()) throw UsageError("classical shape needs an exact matrix");
        auto S = shape_of(z);
        S.validate();
        c.check = "classical-shape";
        result = S.to_json();
      } else if (c_decomp->parsed()) {
        auto d = decompose(z);
        c.check = "classical-decompose";
        json t = json::array();
        for (int i = 0; i < d.t.rows(); ++i) {
          json row = json::array();
          for (int j = 0; j < d.t.cols(); ++j) row.push_back({{"re", d.t(i, j).real()}, {"im", d.t(i, j).imag()}});
          t.push_back(row);
        }
        result = {{"t", t}, {"shape", d.shape.to_json()}, {"residual", d.residual}};
        if (d.residual > 1e-9) {
          c.status = Status::Fail;
          c.witness = {{"residual", d.residual}};
        }
      } else {
        c.check = "classical-leaf";
        result = leaf_label(z).to_json();
      }
      em.emit(c, result);
    } else if (c_build->parsed()) {
      auto S = ShapeMatrix::from_json(json_argument(shape_arg, "shape"));
      S.validate();
      auto lambda = parse_weights(weights_arg);
      if (static_cast<int>(lambda.size()) != S.N()) throw UsageError("need one weight per row of the shape");
      auto z = build_leaf_point(S, lambda);
      auto label = leaf_label(z);
      std::vector<double> want;
      json lam = json::array();
      for (const auto& x : lambda) {
        want.push_back(x.get_d());
        lam.push_back(to_string(x));
      }
      std::sort(want.begin(), want.end());
      bool ok = label.shape.same_as(S, 1e-9);
      for (std::size_t i = 0; ok && i < want.size(); ++i)
        ok = std::abs(label.weight[i] - want[i]) <= 1e-9 * std::max(1.0, std::abs(want[i]));
      Certificate c;
      c.check = "classical-build";
      c.N = S.N();
      c.instance = {{"shape", S.to_json()}, {"weights", lam}};
      c.status = ok ? Status::Pass : Status::Fail;
      if (!ok) c.witness = label.to_json();
      em.emit(c, {{"matrix", z.to_json()}, {"label", label.to_json()}});
    } else if (classical->parsed()) {
      for (const auto& [name, sub] : sampled_cmds) {
        if (!sub->parsed()) continue;
        const CheckSpec* spec = find_check("classical-" + name);
        if (!spec->applies_to(common.N))
          throw UsageError("--N must lie in " + std::to_string(spec->min_N) + ".." + std::to_string(spec->max_N));
        em.emit_all(spec->run(ctx));
      }
    } else if (check_all->parsed()) {
      std::vector<const CheckSpec*> chosen;
      if (!only.empty()) {
        std::stringstream ss(only);
        std::string name;
        while (std::getline(ss, name, ',')) {
          const CheckSpec* spec = find_check(name);
          if (!spec) throw UsageError("unknown check '" + name + "'");
          chosen.push_back(spec);
        }
      } else {
        for (const auto& spec : check_registry()) chosen.push_back(&spec);
      }
      if (list) {
        for (const CheckSpec* spec : chosen)
          em.record({{"check", spec->name}, {"module", spec->module}, {"description", spec->description},
                     {"applies", spec->applies_to(common.N)}});
        return 0;
      }
      for (const CheckSpec* spec : chosen) {
        if (!spec->applies_to(common.N)) continue;
        auto t0 = std::chrono::steady_clock::now();
        auto certs = spec->run(ctx);
        if (detail) {
          em.emit_all(certs);
        } else {
          em.emit(summarize(*spec, ctx, certs));
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        err << "  " << spec->name << ": " << certs.size() << " instances, " << secs << " s\n";
      }
    }
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << em.summary() << " (" << secs << " s)\n";
  return em.exit_code();
}

}  // namespace qrea
