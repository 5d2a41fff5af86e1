#include "monoidlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monoidlab/covering.hpp"
#include "monoidlab/green.hpp"
#include "monoidlab/io.hpp"
#include "monoidlab/schutz.hpp"

namespace monoidlab::cli {

namespace {

constexpr std::uint32_t kDefaultPrime = 10007;

struct Options {
  std::string monoid = "od";
  int n = 3;
  int k = 1;
  std::uint32_t prime = kDefaultPrime;
  std::string format = "text";
  std::string out_path;
  bool large = false;
  bool verbose = false;
};

MonoidKind parse_kind(const std::string& s) {
  if (s == "op") return MonoidKind::Op;
  if (s == "od") return MonoidKind::OD;
  if (s == "cod") return MonoidKind::COD;
  throw CLI::ValidationError("--monoid", "unknown monoid '" + s + "'");
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void emit(const Options& opt, std::ostream& out, const std::string& payload) {
  if (opt.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(opt.out_path, std::ios::binary);
  if (!f) throw CLI::ValidationError("--out", "cannot open " + opt.out_path);
  f << payload;
}

// quiver pipeline for one monoid kind; returns the quiver plus pipeline checks
struct QuiverRun {
  Quiver q;
  std::vector<NamedCheck> checks;
  bool ok = true;
};

std::size_t quiver_algebra_dim(MonoidKind kind, int n) {
  switch (kind) {
    case MonoidKind::OD: return n == 1 ? 1 : 4 * static_cast<std::size_t>(n) - 4;
    case MonoidKind::COD: return 4 * static_cast<std::size_t>(n) - 2;
    default: return 2 * static_cast<std::size_t>(n) - 1;  // skeletal k_0 D_n
  }
}

QuiverRun run_quiver(MonoidKind kind, int n, const PrimeField& field) {
  QuiverRun run;
  auto push = [&](const std::string& name, bool pass, const std::string& detail) {
    run.checks.push_back({name, pass, detail});
    run.ok = run.ok && pass;
  };
  if (kind == MonoidKind::Op) {
    const ContractedDn dn = build_skeletal_Dn(n, field);
    std::vector<Coord> idem, rad_cand;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dn.basis.size(); ++i) {
      Coord e(dn.algebra.dim(), 0);
      e[i] = 1;
      if (dn.basis[i].is_d) rad_cand.push_back(std::move(e));
      else {
        idem.push_back(std::move(e));
        labels.push_back("r_" + std::to_string(dn.basis[i].X.size()));
      }
    }
    const IdempotentReport ir = verify_primitive_orthogonal(dn.algebra, idem);
    push("primitive_orthogonal_idempotents", ir.ok,
         ir.failures.empty() ? "" : ir.failures.front());
    const RadicalData rad = radical(dn.algebra, RadicalCandidate{rad_cand, idem});
    push("radical_paths_agree", rad.candidate_verified &&
                                    (!rad.trace_path_run || rad.paths_agree),
         "");
    run.q = quiver(dn.algebra, idem, labels, rad);
  } else {
    const SkeletonKind sk = kind == MonoidKind::OD ? SkeletonKind::An : SkeletonKind::CAn;
    const SkeletonAlgebra alg = skeleton_algebra(sk, n, field);
    const auto idem = alg.eps_idempotents();
    const IdempotentReport ir = verify_primitive_orthogonal(alg.algebra, idem);
    push("primitive_orthogonal_idempotents", ir.ok,
         ir.failures.empty() ? "" : ir.failures.front());
    const RadicalData rad =
        radical(alg.algebra, RadicalCandidate{alg.delta_radical_candidate(), idem});
    push("radical_paths_agree",
         rad.candidate_verified && (!rad.trace_path_run || rad.paths_agree), "");
    push("rad_square_zero", rad.rad_square_zero, "");
    run.q = quiver(alg.algebra, idem, alg.eps_labels(), rad);
  }
  return run;
}

int cmd_sizes(const Options& opt, std::ostream& out) {
  const MonoidKind kind = parse_kind(opt.monoid);
  if (opt.n < 1 || opt.n > enumeration_cap())
    throw CLI::ValidationError("--n", "n out of range (enumeration cap " +
                                          std::to_string(enumeration_cap()) + ")");
  const std::size_t count = enumerate_elements(kind, opt.n).size();
  const std::size_t op_count = enumerate_elements(MonoidKind::Op, opt.n).size();
  const BruteForceCounts brute = brute_force_monotone_counts(opt.n);

  bool identity_holds = true;
  std::string identity;
  switch (kind) {
    case MonoidKind::OD:
      identity = "|OD_n| = 2|Op_n| - n";
      identity_holds = count == 2 * op_count - static_cast<std::size_t>(opt.n) &&
                       count == brute.od;
      break;
    case MonoidKind::COD:
      identity = "|COD_n| = 2|Op_n|";
      identity_holds = count == 2 * op_count && count == brute.od + opt.n;
      break;
    default:
      identity = "|Op_n| = brute-force count";
      identity_holds = count == brute.op;
      break;
  }
  identity_holds = identity_holds && op_count == brute.op;

  if (opt.format == "json") {
    nlohmann::json j;
    j["monoid"] = opt.monoid;
    j["n"] = opt.n;
    j["size"] = count;
    j["op_size"] = op_count;
    j["op_size_brute_force"] = brute.op;
    j["identity"] = identity;
    j["identity_holds"] = identity_holds;
    emit(opt, out, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "|" << opt.monoid << "_" << opt.n << "| = " << count << "\n";
    os << "|op_" << opt.n << "| = " << op_count << " (brute force: " << brute.op
       << ")\n";
    os << identity << ": " << (identity_holds ? "holds" : "VIOLATED") << "\n";
    emit(opt, out, os.str());
  }
  return identity_holds ? 0 : 1;
}

int cmd_eggbox(const Options& opt, std::ostream& out) {
  const MonoidKind kind = parse_kind(opt.monoid);
  const MonoidTable table = enumerate_monoid(kind, opt.n);
  const GreenData green = green_data(table);
  const EggboxView v = eggbox(table, green, opt.k);
  emit(opt, out, opt.format == "json" ? eggbox_json(v) : eggbox_text(v));
  return 0;
}

int cmd_sandwich(const Options& opt, std::ostream& out) {
  const MonoidKind kind = parse_kind(opt.monoid);
  const MonoidTable table = enumerate_monoid(kind, opt.n);
  const GreenData green = green_data(table);
  const SandwichMatrix p = sandwich_matrix(table, green, opt.k);
  const PrimeField field(opt.prime);
  const SandwichInvertibility inv = sandwich_right_invertible(p, field);
  emit(opt, out,
       opt.format == "json" ? sandwich_json(p, inv, opt.prime)
                            : sandwich_text(p, inv));
  return inv.right_invertible && inv.certificate_verified ? 0 : 1;
}

int cmd_homdims(const Options& opt, std::ostream& out) {
  const MonoidKind kind = parse_kind(opt.monoid);
  if (kind == MonoidKind::Op)
    throw CLI::ValidationError("--monoid", "homdims targets od or cod");
  const MonoidTable table = enumerate_monoid(kind, opt.n);
  const PrimeField field(opt.prime);
  const HomDimTable t = hom_dim_table(table, field);
  emit(opt, out, opt.format == "json" ? homdims_json(t) : homdims_text(t));
  return t.all_match ? 0 : 1;
}

int cmd_relations(const Options& opt, std::ostream& out) {
  const MonoidKind kind = parse_kind(opt.monoid);
  if (kind == MonoidKind::Op)
    throw CLI::ValidationError("--monoid", "relations targets od or cod");
  const PrimeField field(opt.prime);
  const RelationReport rep = verify_relations(
      kind == MonoidKind::OD ? SkeletonKind::An : SkeletonKind::CAn, opt.n, field);
  emit(opt, out, opt.format == "json" ? relations_json(rep) : relations_text(rep));
  return rep.ok ? 0 : 1;
}

int cmd_quiver(const Options& opt, std::ostream& out) {
  const MonoidKind kind = parse_kind(opt.monoid);
  const std::size_t dim = quiver_algebra_dim(kind, opt.n);
  if (opt.prime <= dim)
    throw CLI::ValidationError(
        "--prime", "radical work needs a prime exceeding the algebra dimension " +
                       std::to_string(dim));
  const PrimeField field(opt.prime);
  const QuiverRun run = run_quiver(kind, opt.n, field);
  std::string payload;
  if (opt.format == "dot") payload = quiver_dot(run.q);
  else if (opt.format == "json") payload = quiver_json(run.q);
  else payload = quiver_text(run.q);
  emit(opt, out, payload);
  return run.ok ? 0 : 1;
}

int cmd_cod_decompose(const Options& opt, std::ostream& out) {
  const PrimeField field(opt.prime);
  const DecompositionReport rep =
      verify_product_decomposition(opt.n, field, opt.large);
  emit(opt, out,
       opt.format == "json" ? decomposition_json(rep) : decomposition_text(rep));
  return rep.ok ? 0 : 1;
}

int cmd_verify_all(const Options& opt, std::ostream& out) {
  const MonoidKind kind = parse_kind(opt.monoid);
  const std::size_t dim = quiver_algebra_dim(kind, opt.n);
  if (opt.prime <= dim)
    throw CLI::ValidationError(
        "--prime", "radical work needs a prime exceeding the algebra dimension " +
                       std::to_string(dim));
  const PrimeField field(opt.prime);
  const int n = opt.n;
  std::vector<NamedCheck> checks;
  auto push = [&](const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, detail});
  };

  // element counts against the brute-force oracle
  {
    const std::size_t count = enumerate_elements(kind, n).size();
    const std::size_t op_count = enumerate_elements(MonoidKind::Op, n).size();
    const BruteForceCounts brute = brute_force_monotone_counts(n);
    bool pass = op_count == brute.op;
    if (kind == MonoidKind::OD)
      pass = pass && count == brute.od && count == 2 * op_count - static_cast<std::size_t>(n);
    if (kind == MonoidKind::COD) pass = pass && count == 2 * op_count;
    push("size_identity", pass);
  }

  const MonoidTable table = enumerate_monoid(kind, n);
  const GreenData green = green_data(table);

  if (kind != MonoidKind::Op) {
    const GreenCharReport rep = verify_green_characterization(table, green);
    push("green_characterization", rep.ok, rep.counterexample);
  }

  {
    bool counts_ok = true;
    for (int k = 1; k <= n; ++k) {
      const EggboxView v = eggbox(table, green, k);
      if (v.l_count() != static_cast<int>(binomial(n - 1, k - 1)) ||
          v.r_count() != static_cast<int>(binomial(n, k)) ||
          v.ofd_row_count != static_cast<int>(binomial(n - 1, k - 1)))
        counts_ok = false;
    }
    push("eggbox_counts", counts_ok);
  }

  {
    bool inv_ok = true, tri_ok = true;
    for (int k = 1; k <= n; ++k) {
      const SandwichMatrix p = sandwich_matrix(table, green, k);
      const SandwichInvertibility inv = sandwich_right_invertible(p, field);
      inv_ok = inv_ok && inv.right_invertible && inv.certificate_verified;
      // P_1 block upper unitriangular in the lex ordering
      for (std::size_t r = 0; r < p.rows(); ++r)
        for (std::size_t c = 0; c < p.rows(); ++c) {
          if (c < r && p.at(r, c) != 0) tri_ok = false;
          if (c == r && p.at(r, c) != 1) tri_ok = false;
        }
    }
    push("sandwich_right_invertible", inv_ok);
    push("sandwich_unitriangular_block", tri_ok);
  }

  if (kind != MonoidKind::Op) {
    if (n <= 5) {
      const HomDimTable t = hom_dim_table(table, field);
      push("hom_dimensions_match_h_tilde", t.all_match);
    }
    const RelationReport rel = verify_relations(
        kind == MonoidKind::OD ? SkeletonKind::An : SkeletonKind::CAn, n, field);
    push("relation_suite", rel.ok);
  }

  {
    const QuiverRun run = run_quiver(kind, n, field);
    for (const auto& c : run.checks) push("quiver_" + c.name, c.pass, c.detail);
    if (kind == MonoidKind::OD) {
      // arrow pattern of the main theorem: even k keeps the sign, odd k flips
      bool arrows_ok = run.q.vertices.size() == 2 * static_cast<std::size_t>(n) - 1;
      std::vector<std::pair<std::string, std::string>> expected;
      for (int k = 1; k + 1 <= n; ++k)
        for (int s : {1, -1}) {
          if (k == 1 && s == -1) continue;
          const int t = k % 2 == 0 ? s : -s;
          expected.push_back({"eps_" + std::to_string(k) + (s == 1 ? "_plus" : "_minus"),
                              "eps_" + std::to_string(k + 1) +
                                  (t == 1 ? "_plus" : "_minus")});
        }
      std::vector<std::pair<std::string, std::string>> actual;
      for (const auto& a : run.q.arrows) {
        if (a.mult != 1) arrows_ok = false;
        actual.push_back({run.q.vertices[a.src], run.q.vertices[a.dst]});
      }
      std::sort(expected.begin(), expected.end());
      std::sort(actual.begin(), actual.end());
      arrows_ok = arrows_ok && expected == actual;
      push("quiver_arrow_pattern", arrows_ok);
      if (n >= 2) {
        auto comps = quiver_components(run.q);
        std::vector<std::size_t> sizes;
        for (const auto& c : comps) sizes.push_back(c.size());
        std::sort(sizes.begin(), sizes.end());
        push("quiver_two_components",
             sizes == std::vector<std::size_t>{static_cast<std::size_t>(n - 1),
                                               static_cast<std::size_t>(n)});
      }
    }
  }

  if (kind == MonoidKind::COD) {
    const PhiReport phi = check_phi_isomorphism(n);
    push("phi_isomorphism", phi.ok(), phi.counterexample);
    const PsiReport psi = check_psi_quotient(n);
    push("psi_quotient", psi.ok(), psi.counterexample);
    if (n <= 5) {
      const DecompositionReport rep = verify_product_decomposition(n, field);
      push("product_decomposition", rep.ok);
    }
    const StraightlineReport sl = opn_quiver_check(n, field);
    push("straightline_quivers", sl.ok);
  }
  if (kind == MonoidKind::Op) {
    const StraightlineReport sl = opn_quiver_check(n, field);
    for (const auto& c : sl.checks)
      if (c.name.rfind("op_", 0) == 0) push(c.name, c.pass, c.detail);
  }

  const bool ok = std::all_of(checks.begin(), checks.end(),
                              [](const NamedCheck& c) { return c.pass; });
  emit(opt, out,
       opt.format == "json"
           ? checks_json("verify-all", kind, n, opt.prime, checks)
           : checks_text(checks));
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations with order-preserving/reversing transformation monoids"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_k, bool needs_prime) {
    cmd->add_option("--n", opt.n, "domain size n")->required();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    cmd->add_option("--out", opt.out_path, "write output to a file");
    cmd->add_flag("-v,--verbose", opt.verbose, "verbose progress");
    if (needs_k) cmd->add_option("--k", opt.k, "J-class rank k")->required();
    if (needs_prime) cmd->add_option("--prime", opt.prime, "odd prime modulus");
    return cmd;
  };
  auto add_monoid = [&](CLI::App* cmd) {
    cmd->add_option("--monoid", opt.monoid, "monoid family: op, od, cod")->required();
    return cmd;
  };

  CLI::App* sizes = add_common(add_monoid(app.add_subcommand(
                                   "sizes", "element counts and size identities")),
                               false, false);
  CLI::App* eggbox_cmd = add_common(
      add_monoid(app.add_subcommand("eggbox", "eggbox view of a J-class")), true,
      false);
  CLI::App* sandwich_cmd = add_common(
      add_monoid(app.add_subcommand(
          "sandwich", "sandwich matrix and right-invertibility certificate")),
      true, true);
  CLI::App* homdims_cmd = add_common(
      add_monoid(app.add_subcommand(
          "homdims", "Hom dimensions between Schutzenberger modules")),
      false, true);
  CLI::App* relations_cmd = add_common(
      add_monoid(app.add_subcommand("relations", "composition relation suite")),
      false, true);
  CLI::App* quiver_cmd = add_common(
      add_monoid(app.add_subcommand("quiver", "quiver of the monoid algebra")),
      false, true);
  CLI::App* decompose_cmd = add_common(
      app.add_subcommand("cod-decompose",
                         "product decomposition kCOD_n ~ kOp_n x kOp_n"),
      false, true);
  decompose_cmd->add_flag("--large", opt.large, "allow n = 6 (slow)");
  CLI::App* verify_cmd = add_common(
      add_monoid(app.add_subcommand("verify-all", "run every check for this n")),
      false, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    const int code = app.exit(e, os, os);
    (code == 0 ? out : err) << os.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (opt.format == "dot" && !quiver_cmd->parsed()) {
      err << "error: --format dot is only valid for quiver\n";
      return 2;
    }
    if (sizes->parsed()) return cmd_sizes(opt, out);
    if (eggbox_cmd->parsed()) return cmd_eggbox(opt, out);
    if (sandwich_cmd->parsed()) return cmd_sandwich(opt, out);
    if (homdims_cmd->parsed()) return cmd_homdims(opt, out);
    if (relations_cmd->parsed()) return cmd_relations(opt, out);
    if (quiver_cmd->parsed()) return cmd_quiver(opt, out);
    if (decompose_cmd->parsed()) return cmd_cod_decompose(opt, out);
    if (verify_cmd->parsed()) return cmd_verify_all(opt, out);
    err << "error: no command\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const char_two_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const trace_form_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "theorem violation or internal failure: " << e.what() << "\n";
    return 1;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace monoidlab::cli
