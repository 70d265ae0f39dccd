// tqg: command-line front end for the verification pipelines.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tqg/io.hpp"

using namespace tqg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInternal = 2;
constexpr int kExitUsage = 64;

struct Options {
  int p = 2;
  int s = 0;
  int cutoff = 20;
  int fock_trunc = 8;
  std::uint64_t seed = 1;
  long samples = 10000;
  std::string format = "json";
  std::string out;
  std::string in;
  std::string sign = "-";
  bool timings = false;
  bool serial = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + o.out);
  f << text;
}

void require_p(const Options& o) {
  if (o.p < 2) throw ParameterError("--p must be at least 2");
}

void require_s(const Options& o, int lo, int hi) {
  if (o.s < lo || o.s > hi)
    throw ParameterError("--s must satisfy " + std::to_string(lo) + " <= s <= " + std::to_string(hi));
}

RunConfig config_of(const Options& o) {
  RunConfig c;
  c.p = o.p;
  if (o.s) c.s = o.s;
  c.cutoff = o.cutoff;
  c.fock_trunc = o.fock_trunc;
  c.seed = o.seed;
  c.assoc_samples = o.samples;
  c.parallel = !o.serial;
  return c;
}

int cmd_characters(const Options& o) {
  require_p(o);
  require_s(o, 1, o.p);
  if (o.cutoff < 1) throw ParameterError("--cutoff must be at least 1");
  CharacterTable t = character_table(o.p, o.s, o.cutoff);
  emit(o, render(t, parse_format(o.format)));
  for (const auto& i : t.identities)
    if (!i.holds) return kExitFail;
  return kExitPass;
}

int cmd_build_uq(const Options& o) {
  require_p(o);
  UqAlgebra U = build_uq(o.p);
  bool full = o.p == 2;
  bool assoc = full ? check_associativity(U.alg) : check_associativity(U.alg, o.samples, o.seed);
  UqStructure S = uq_block_report(U);
  ordered_json j;
  j["p"] = o.p;
  j["dim"] = U.alg.dim();
  j["associativity"] = {{"mode", full ? "full" : "sampled"}, {"samples", full ? 0 : o.samples}, {"holds", assoc}};
  j["ef_relation"] = ef_relation_holds(U);
  j["k_grading"] = k_grading_holds(U);
  j["truncation"] = truncation_relations_hold(U);
  j["radical_dim"] = S.dec.radical.dim();
  ordered_json simples = ordered_json::array();
  for (const auto& x : S.simples) simples.push_back({{"dim", x.dim}, {"sign", x.sign > 0 ? "+" : "-"}, {"block", x.block}});
  j["simples"] = simples;
  ordered_json blocks = ordered_json::array();
  for (const auto& b : S.blocks)
    blocks.push_back({{"simple_dims", b.simple_dims},
                      {"projective_dims", b.projective_dims},
                      {"cartan", b.cartan},
                      {"ext1", b.ext1},
                      {"semisimple", b.semisimple}});
  j["blocks"] = blocks;
  Format f = parse_format(o.format);
  if (f == Format::json) {
    emit(o, j.dump(2) + "\n");
  } else {
    std::vector<std::string> h{"block", "simple_dims", "projective_dims", "cartan", "ext1", "semisimple"};
    std::string out = f == Format::csv ? csv_line(h) : md_row(h) + md_rule(h.size());
    for (size_t b = 0; b < S.blocks.size(); ++b) {
      const auto& x = S.blocks[b];
      std::vector<std::string> r{std::to_string(b), detail::show(x.simple_dims), detail::show(x.projective_dims),
                                 detail::show(x.cartan), detail::show(x.ext1), x.semisimple ? "true" : "false"};
      out += f == Format::csv ? csv_line(r) : md_row(r);
    }
    emit(o, out);
  }
  return assoc && ef_relation_holds(U) ? kExitPass : kExitFail;
}

int cmd_kernel(const Options& o) {
  require_p(o);
  if (o.fock_trunc < 1) throw ParameterError("--fock-trunc must be at least 1");
  auto prof = wp_graded_profile(o.p, o.fock_trunc);
  auto ch = wp_simple_char(o.p, 1, Sign::plus, o.fock_trunc);
  bool ok = true;
  Format f = parse_format(o.format);
  ordered_json levels = ordered_json::array();
  std::vector<std::string> h{"level", "kernel_dim", "character_coeff", "status"};
  std::string table = f == Format::csv ? csv_line(h) : md_row(h) + md_rule(h.size());
  for (int d = 0; d <= o.fock_trunc; ++d) {
    bool eq = Rational(prof[d]) == ch.coeffs[d];
    ok = ok && eq;
    levels.push_back({{"level", d}, {"kernel_dim", prof[d]}, {"character_coeff", ch.coeffs[d].get_str()}, {"match", eq}});
    std::vector<std::string> r{std::to_string(d), std::to_string(prof[d]), ch.coeffs[d].get_str(), eq ? "pass" : "fail"};
    table += f == Format::csv ? csv_line(r) : md_row(r);
  }
  if (f == Format::json)
    emit(o, ordered_json{{"p", o.p}, {"fock_trunc", o.fock_trunc}, {"levels", levels}, {"pass", ok}}.dump(2) + "\n");
  else
    emit(o, table);
  return ok ? kExitPass : kExitFail;
}

int cmd_log_module(const Options& o) {
  require_p(o);
  require_s(o, 1, o.p - 1);
  if (o.fock_trunc < 1) throw ParameterError("--fock-trunc must be at least 1");
  if (o.sign != "+" && o.sign != "-") throw ParameterError("--sign must be + or -");
  Sign sign = o.sign == "+" ? Sign::plus : Sign::minus;
  int D = std::min(o.fock_trunc, 4);
  LogModuleModel m = build_log_module(o.p, o.s, sign, D);
  int jl = jordan_length(m, 0, D);
  bool vir = deformed_virasoro_relations(m, 2, std::min(D, 2));
  auto rels = log_relations(m);
  bool ok = jl == 1 && vir;
  ordered_json rj = ordered_json::array();
  for (const auto& r : rels) {
    ok = ok && r.holds;
    rj.push_back({{"relation", r.name}, {"holds", r.holds}, {"scalar", r.scalar ? r.scalar->get_str() : ""}});
  }
  Format f = parse_format(o.format);
  if (f == Format::json) {
    emit(o, ordered_json{{"p", o.p},
                         {"s", o.s},
                         {"sign", o.sign},
                         {"truncation", D},
                         {"jordan_length", jl},
                         {"deformed_virasoro", vir},
                         {"relations", rj},
                         {"pass", ok}}
                     .dump(2) +
                "\n");
  } else {
    std::vector<std::string> h{"check", "value"};
    std::string out = f == Format::csv ? csv_line(h) : md_row(h) + md_rule(2);
    auto row = [&](const std::string& a, const std::string& b) {
      out += f == Format::csv ? csv_line({a, b}) : md_row({a, b});
    };
    row("jordan_length", std::to_string(jl));
    row("deformed_virasoro", vir ? "true" : "false");
    for (const auto& r : rels) row(r.name, r.holds ? "holds" : "fails");
    emit(o, out);
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_verify(const Options& o) {
  require_p(o);
  RunConfig c = config_of(o);
  validate(c);
  VerificationReport r = run_verification(c);
  emit(o, render(r, parse_format(o.format), o.timings));
  if (r.has_error()) {
    for (const auto& row : r.rows)
      if (row.status == Status::error) std::cerr << "internal error in " << row.id << ": " << row.computed << "\n";
    return kExitInternal;
  }
  return r.global_pass() ? kExitPass : kExitFail;
}

/// Re-renders a saved JSON report.
int cmd_report(const Options& o) {
  std::ifstream f(o.in);
  if (!f) throw ParameterError("cannot read report " + o.in);
  ordered_json j = ordered_json::parse(f);
  if (j.value("schema_version", 0) != VerificationReport::schema_version)
    throw ParameterError("unsupported report schema version");
  VerificationReport r;
  r.config.p = j.at("p");
  r.config.cutoff = j.at("cutoff");
  r.config.fock_trunc = j.at("fock_trunc");
  r.config.seed = j.at("seed");
  r.fock_trunc_used = j.at("fock_trunc_used");
  bool timings = false;
  for (const auto& x : j.at("rows")) {
    CheckRow c;
    c.id = x.at("id");
    c.group = x.at("group");
    c.anchor = x.at("anchor");
    c.computed = x.at("computed");
    c.expected = x.at("expected");
    c.basis = x.at("basis");
    std::string st = x.at("status");
    for (Status s : {Status::pass, Status::fail, Status::skipped, Status::info, Status::error})
      if (st == status_name(s)) c.status = s;
    if (x.contains("runtime_ms")) {
      c.runtime_ms = x["runtime_ms"];
      timings = true;
    }
    r.rows.push_back(std::move(c));
  }
  emit(o, render(r, parse_format(o.format), timings));
  return r.global_pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic checks for the triplet algebra W(p) and the restricted quantum group"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    c->add_option("--out", o.out, "output file (stdout when omitted)");
  };
  auto add_p = [&](CLI::App* c) { c->add_option("--p", o.p, "the parameter p >= 2")->required(); };

  auto* ch = app.add_subcommand("characters", "q-series tables and character identities for one (p, s)");
  add_p(ch);
  ch->add_option("--s", o.s, "1 <= s <= p")->required();
  ch->add_option("--cutoff", o.cutoff, "number of levels N");
  add_common(ch);

  auto* uq = app.add_subcommand("build-uq", "build the restricted quantum group and report its blocks");
  add_p(uq);
  uq->add_option("--seed", o.seed, "sampling seed for the associativity check");
  uq->add_option("--samples", o.samples, "sampled basis triples when p > 2");
  add_common(uq);

  auto* ker = app.add_subcommand("kernel", "graded dimensions of ker Q_- against ch X_1^+");
  add_p(ker);
  ker->add_option("--fock-trunc", o.fock_trunc, "top level D");
  add_common(ker);

  auto* lm = app.add_subcommand("log-module", "build a logarithmic module and check its relations");
  add_p(lm);
  lm->add_option("--s", o.s, "1 <= s <= p-1")->required();
  lm->add_option("--sign", o.sign, "+ or -");
  lm->add_option("--fock-trunc", o.fock_trunc, "top level D (capped at 4)");
  add_common(lm);

  auto* ver = app.add_subcommand("verify", "run every check group and write the report");
  add_p(ver);
  ver->add_option("--s", o.s, "restrict the character group to one s");
  ver->add_option("--cutoff", o.cutoff, "character cutoff N");
  ver->add_option("--fock-trunc", o.fock_trunc, "Fock truncation D; 0 skips the Fock group");
  ver->add_option("--seed", o.seed, "sampling seed");
  ver->add_option("--samples", o.samples, "sampled basis triples for associativity when p > 2");
  ver->add_flag("--timings", o.timings, "record per-check runtimes");
  ver->add_flag("--serial", o.serial, "run the check groups one after another");
  add_common(ver);

  auto* rep = app.add_subcommand("report", "re-render a saved JSON report");
  rep->add_option("--in", o.in, "JSON report")->required();
  add_common(rep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*ch) return cmd_characters(o);
    if (*uq) return cmd_build_uq(o);
    if (*ker) return cmd_kernel(o);
    if (*lm) return cmd_log_module(o);
    if (*ver) return cmd_verify(o);
    if (*rep) return cmd_report(o);
  } catch (const ParameterError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OutOfScope& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
