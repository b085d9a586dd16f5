#include "cli.hpp"

#include "pathcheck/checker.hpp"
#include "pathcheck/docm.hpp"
#include "pathcheck/errors.hpp"
#include "pathcheck/generators.hpp"
#include "pathcheck/transforms.hpp"
#include "pathcheck/word_io.hpp"

#include <CLI11.hpp>
#include <boost/algorithm/string/join.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

namespace pathcheck {

namespace {

struct RunConfig {
  std::string word_path;
  std::string machine_path;
  std::string formula_text;
  std::string formula_path;
  std::string engine = "auto";
  std::optional<std::size_t> horizon;
  std::size_t budget = kDefaultExpansionBudget;
  std::string format = "text";
  bool witness = false;
};

Formula load_formula(const RunConfig& cfg) {
  if (!cfg.formula_path.empty()) return parse_formula(read_file(cfg.formula_path));
  return parse_formula(cfg.formula_text);
}

SlpWord as_slp(const PeriodicWord& w) {
  SlpBuilder b;
  SlpWord out;
  if (!w.prefix().empty()) out.prefix = b.build(b.word(w.prefix()));
  out.period = b.build(b.word(w.period()));
  out.offset = w.offset();
  return out;
}

Slp as_slp(const DataWord& w) {
  SlpBuilder b;
  return b.build(b.word(w));
}

Verdict check_slp_word(const SlpWord& w, const Formula& f) {
  if (!w.infinite()) return check_slp(*w.prefix, f);
  return check_slp(w.prefix, *w.period, w.offset, f);
}

[[noreturn]] void unsupported(const std::string& engine, const std::string& kind) {
  throw PreconditionError("engine " + engine + " does not accept a " + kind + " word");
}

Verdict run_engine(const RunConfig& cfg, const AnyWord& word, const Formula& f) {
  const std::string& e = cfg.engine;
  if (const auto* w = std::get_if<DataWord>(&word)) {
    if (e == "auto" || e == "finite") return check_finite(*w, f);
    if (e == "naive") return check_naive(*w, f);
    if (e == "slp") return check_slp(as_slp(*w), f);
    unsupported(e, "finite");
  }
  if (const auto* w = std::get_if<PeriodicWord>(&word)) {
    std::optional<Int> h;
    if (cfg.horizon) h = Int(*cfg.horizon);
    if (e == "auto") {
      // The one-register and shrinking engines produce no witness.
      if (cfg.witness) return check_periodic(*w, f);
      Formula g = desugar(f);
      if (register_count(g) <= 1) return check_tptl1(*w, g);
      if (is_quasi_monotonic(*w) && shrink(*w, abs_constant_bound(g)).offset() < w->offset())
        return check_quasi_monotonic_fast(*w, g);
      return check_periodic(*w, f);
    }
    if (e == "periodic") return check_periodic(*w, f);
    if (e == "naive") return check_naive_unrolled(*w, f, h);
    if (e == "slp") return check_slp_word(as_slp(*w), f);
    if (e == "tptl1") return check_tptl1(*w, f);
    if (e == "quasimono") return check_quasi_monotonic_fast(*w, f);
    unsupported(e, "periodic");
  }
  const auto& w = std::get<SlpWord>(word);
  if (e == "auto" || e == "slp") return check_slp_word(w, f);
  if (!w.infinite() && (e == "naive" || e == "finite")) {
    DataWord x = slp_expand(*w.prefix, cfg.budget);
    return e == "naive" ? check_naive(x, f) : check_finite(x, f);
  }
  unsupported(e, "compressed");
}

void report(const RunConfig& cfg, const Verdict& v, double elapsed_ms, std::ostream& out) {
  const char* verdict = v.satisfied ? "SAT" : "UNSAT";
  if (cfg.format == "kv") {
    out << "verdict=" << verdict << " engine=" << v.engine << " memo_entries=" << v.memo_entries;
    if (v.horizon) out << " horizon=" << *v.horizon;
    out << " elapsed_ms=" << elapsed_ms;
    if (cfg.witness) {
      out << " witness=";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        const auto& s = v.witness[i];
        out << (i ? "," : "") << s.op << "@" << s.position;
        if (s.branch >= 0) out << ":" << s.branch;
      }
    }
    out << "\n";
    return;
  }
  out << "verdict=" << verdict << "\n";
  out << "engine: " << v.engine << "\n";
  if (v.horizon) out << "horizon: " << *v.horizon << "\n";
  if (cfg.witness) {
    for (const auto& s : v.witness) {
      out << "witness: " << s.op << " at " << s.position;
      if (s.branch >= 0) out << " branch " << s.branch;
      out << "\n";
    }
  }
}

int finish(const RunConfig& cfg, const std::function<Verdict()>& run, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v = run();
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  report(cfg, v, ms, out);
  return v.satisfied ? 0 : 1;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f) throw Error("cannot write " + path);
}

// Word, formula (sugared and desugared) and the oracle's verdict.
void emit(const std::string& out_prefix, const std::string& word, const Formula& f, bool expected,
          std::ostream& out) {
  std::string sugared = to_string(f) + "\n";
  std::string plain = to_string(desugar(f)) + "\n";
  std::string verdict = std::string("expected=") + (expected ? "true" : "false") + "\n";
  if (out_prefix.empty()) {
    out << word << "formula: " << sugared << "desugared: " << plain << verdict;
    return;
  }
  write_file(out_prefix + ".dw", word);
  write_file(out_prefix + ".tptl", sugared);
  write_file(out_prefix + ".desugared.tptl", plain);
  write_file(out_prefix + ".expected", verdict);
  out << "wrote " << out_prefix << ".dw " << out_prefix << ".tptl " << out_prefix << ".desugared.tptl "
      << out_prefix << ".expected\n"
      << verdict;
}

std::vector<Int> int_list(const std::string& s) {
  std::vector<Int> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) out.push_back(parse_int(item));
  return out;
}

void add_check_options(CLI::App* cmd, RunConfig& cfg) {
  auto* ft = cmd->add_option("--formula,-f", cfg.formula_text, "formula text");
  auto* fp = cmd->add_option("--formula-file", cfg.formula_path, "file holding the formula");
  ft->excludes(fp);
  fp->excludes(ft);
  cmd->add_option("--format", cfg.format, "text or kv")->check(CLI::IsMember({"text", "kv"}));
  cmd->add_flag("--witness", cfg.witness, "print the witness steps");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Path checking for temporal logics with registers over data words"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* check = app.add_subcommand("check", "check a formula against a word");
  check->add_option("--word,-w", cfg.word_path, "word file")->required();
  add_check_options(check, cfg);
  check
      ->add_option("--engine,-e", cfg.engine, "auto, naive, finite, periodic, slp, tptl1 or quasimono")
      ->check(CLI::IsMember({"auto", "naive", "finite", "periodic", "slp", "tptl1", "quasimono"}));
  check->add_option("--horizon", cfg.horizon, "unrolling horizon for the naive engine on periodic words");
  check->add_option("--budget", cfg.budget, "largest expansion of a compressed word");

  auto* docm = app.add_subcommand("docm", "check a formula against the run of a one-counter machine");
  docm->add_option("--machine,-m", cfg.machine_path, "machine file")->required();
  add_check_options(docm, cfg);

  auto* gen = app.add_subcommand("gen", "generate an instance with its expected verdict");
  gen->require_subcommand(1);
  std::string out_prefix;
  std::string instance_path;
  std::string variant;
  auto* gen_circuit = gen->add_subcommand("circuit", "circuit value instance");
  gen_circuit->add_option("--file", instance_path, "circuit file")->required();
  gen_circuit->add_option("--variant", variant, "mtl, infinite or smtl")
      ->check(CLI::IsMember({"mtl", "infinite", "smtl"}));
  auto* gen_qbf_cmd = gen->add_subcommand("qbf", "quantified boolean formula instance");
  std::string qbf_prefix;
  std::string qbf_matrix;
  auto* qf = gen_qbf_cmd->add_option("--file", instance_path, "QBF file");
  auto* qp = gen_qbf_cmd->add_option("--prefix", qbf_prefix, "quantifiers, e.g. AE");
  gen_qbf_cmd->add_option("--matrix", qbf_matrix, "boolean formula over x1..xn")->needs(qp);
  qf->excludes(qp);
  auto* gen_pqss_cmd = gen->add_subcommand("pqss", "quantified subset-sum instance");
  std::string pqss_a;
  std::string pqss_b;
  auto* pf = gen_pqss_cmd->add_option("--file", instance_path, "subset-sum file");
  auto* pa = gen_pqss_cmd->add_option("--a", pqss_a, "numbers a1,...,a2n");
  gen_pqss_cmd->add_option("--b", pqss_b, "target")->needs(pa);
  pf->excludes(pa);
  gen_pqss_cmd->add_option("--variant", variant, "tptl2 or freezeltl")
      ->check(CLI::IsMember({"tptl2", "freezeltl"}));
  for (auto* g : {gen_circuit, gen_qbf_cmd, gen_pqss_cmd})
    g->add_option("--out,-o", out_prefix, "write <out>.dw, <out>.tptl, <out>.desugared.tptl, <out>.expected");

  auto* slp = app.add_subcommand("slp", "inspect a compressed word");
  std::string slp_action;
  std::string slp_path;
  std::string slp_index;
  slp->add_option("action", slp_action, "expand, min, max, length or at")
      ->required()
      ->check(CLI::IsMember({"expand", "min", "max", "length", "at"}));
  slp->add_option("file", slp_path, "SLP word file")->required();
  slp->add_option("--index,-i", slp_index, "position for at");
  slp->add_option("--budget", cfg.budget, "largest expansion");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      if (cfg.formula_text.empty() && cfg.formula_path.empty()) throw Error("--formula or --formula-file is required");
      AnyWord word = parse_word(read_file(cfg.word_path));
      Formula f = load_formula(cfg);
      return finish(cfg, [&] { return run_engine(cfg, word, f); }, out);
    }
    if (docm->parsed()) {
      if (cfg.formula_text.empty() && cfg.formula_path.empty()) throw Error("--formula or --formula-file is required");
      Ocm m = parse_ocm(read_file(cfg.machine_path));
      Formula f = load_formula(cfg);
      return finish(cfg, [&] { return model_check(m, f); }, out);
    }
    if (gen_circuit->parsed()) {
      Sam2Circuit c = parse_circuit(read_file(instance_path));
      bool expected = eval_circuit(c);
      if (variant == "infinite") {
        auto inst = gen_circuit_mtl_infinite(c);
        emit(out_prefix, format_word(inst.word), inst.formula, expected, out);
      } else {
        auto inst = variant == "smtl" ? gen_circuit_smtl(c) : gen_circuit_mtl(c);
        emit(out_prefix, format_word(inst.word), inst.formula, expected, out);
      }
      return 0;
    }
    if (gen_qbf_cmd->parsed()) {
      QbfInstance q = !instance_path.empty() ? parse_qbf(read_file(instance_path))
                                              : parse_qbf("qbf " + qbf_prefix + "\n" + qbf_matrix);
      auto inst = gen_qbf(q);
      emit(out_prefix, format_word(inst.word), inst.formula, eval_qbf(q), out);
      return 0;
    }
    if (gen_pqss_cmd->parsed()) {
      PqssInstance p;
      if (!instance_path.empty()) {
        p = parse_pqss(read_file(instance_path));
      } else {
        if (pqss_b.empty()) throw Error("--a needs --b");
        p = PqssInstance{int_list(pqss_a), parse_int(pqss_b)};
        validate(p);
      }
      auto inst = variant == "freezeltl" ? gen_pqss_freezeltl(p) : gen_pqss_tptl2(p);
      emit(out_prefix, format_word(inst.word), inst.formula, eval_pqss(p), out);
      return 0;
    }
    if (slp->parsed()) {
      AnyWord word = parse_word(read_file(slp_path));
      const auto* w = std::get_if<SlpWord>(&word);
      if (!w) throw Error(slp_path + " is not an slp word");
      if (w->infinite()) throw Error("slp commands need a finite slp word");
      const Slp& g = *w->prefix;
      if (slp_action == "expand") {
        out << format_word(slp_expand(g, cfg.budget));
      } else if (slp_action == "min") {
        out << slp_min(g) << "\n";
      } else if (slp_action == "max") {
        out << slp_max(g) << "\n";
      } else if (slp_action == "length") {
        out << slp_length(g) << "\n";
      } else {
        if (slp_index.empty()) throw Error("at needs --index");
        DataPoint p = slp_at(g, parse_int(slp_index));
        out << "{" << boost::algorithm::join(p.props.names(), ",") << "} " << p.value << "\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace pathcheck
