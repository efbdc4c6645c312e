// Command-line front end: enumerate, rank, hasse, graph, classify, richardson, verify.
#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orbits/document.hpp"
#include "orbits/error.hpp"
#include "orbits/graph.hpp"
#include "orbits/order.hpp"
#include "orbits/poset.hpp"
#include "orbits/rank.hpp"
#include "orbits/richardson.hpp"
#include "orbits/singularity.hpp"
#include "orbits/verify.hpp"

namespace {

using namespace orbits;
using nlohmann::json;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIncomparable = 3, kInvalidParam = 4 };

struct Options {
  std::string family;
  std::optional<int> n, m, p, q;
  std::string param;
  std::string format = "text";
  std::vector<std::string> interval;
  int max_size = 6;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_family_flags(CLI::App* cmd, Options& o, bool sizes) {
  cmd->add_option("--family", o.family, "AI, AII, AIII, CI, CII, BDI or DIII")
      ->required()
      ->check(CLI::IsMember({"AI", "AII", "AIII", "CI", "CII", "BDI", "DIII"}));
  if (!sizes) return;
  cmd->add_option("--n", o.n, "matrix degree for AI/AII, rank for DIII");
  cmd->add_option("--m", o.m, "rank for CI");
  cmd->add_option("--p", o.p, "first signature entry for AIII/CII/BDI");
  cmd->add_option("--q", o.q, "second signature entry for AIII/CII/BDI");
}

void add_format(CLI::App* cmd, Options& o, const std::vector<std::string>& allowed) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
}

int need(const std::optional<int>& v, const char* flag, const std::string& fam) {
  if (!v) throw UsageError(fam + " needs " + flag);
  if (*v < 0) throw UsageError(std::string(flag) + " must be nonnegative");
  return *v;
}

// Fills missing sizes from the parameter text, e.g. AIII (p, q) from the clan signature.
Options infer_sizes(Options o, Tag t) {
  std::string text = o.param;
  if (text.empty() && !o.interval.empty()) text = o.interval[0];
  if (text.empty()) return o;
  if (t == Tag::AI || t == Tag::AII) {
    if (!o.n) o.n = static_cast<int>(parse_permutation(text).size());
    return o;
  }
  const Clan c = parse_clan(text);
  const int len = c.size();
  switch (t) {
    case Tag::AIII:
    case Tag::BDI:
      if (!o.p && !o.q) {
        o.p = c.p();
        o.q = c.q();
      }
      break;
    case Tag::CII:
      if (!o.p && !o.q) {
        o.p = c.p() / 2;
        o.q = c.q() / 2;
      }
      break;
    case Tag::CI:
      if (!o.m && !o.n) o.m = len / 2;
      break;
    case Tag::DIII:
      if (!o.n) o.n = len / 2;
      break;
    default: break;
  }
  return o;
}

Family make_family(const Options& given) {
  Tag t;
  parse_tag(given.family, t);
  const Options o = infer_sizes(given, t);
  try {
    switch (t) {
      case Tag::AI: return Family::ai(need(o.n, "--n", o.family));
      case Tag::AII: return Family::aii(need(o.n, "--n", o.family));
      case Tag::AIII: return Family::aiii(need(o.p, "--p", o.family), need(o.q, "--q", o.family));
      case Tag::CI: return Family::ci(need(o.m ? o.m : o.n, "--m", o.family));
      case Tag::CII: return Family::cii(need(o.p, "--p", o.family), need(o.q, "--q", o.family));
      case Tag::BDI: return Family::bdi(need(o.p, "--p", o.family), need(o.q, "--q", o.family));
      case Tag::DIII: return Family::diii(need(o.n, "--n", o.family));
    }
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family");
}

void emit_document(const PosetDocument& doc, const std::string& format) {
  if (format == "json") std::cout << to_json(doc).dump(2) << '\n';
  else if (format == "dot") std::cout << to_dot(doc);
  else std::cout << to_text(doc);
}

int cmd_enumerate(const Options& o) {
  const Family f = make_family(o);
  const auto all = enumerate(f);
  if (o.format == "json") {
    json j{{"family", family_json(f)}, {"count", all.size()}, {"parameters", json::array()}};
    for (const auto& x : all) j["parameters"].push_back(param_text(x));
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << f.name() << ": " << all.size() << '\n';
  for (const auto& x : all) std::cout << param_text(x) << '\n';
  return kOk;
}

json rank_json(const Param& x, const Family& f) {
  const RankInfo r = rank_info(x, f);
  return json{{"param", param_text(x)}, {"rank", r.rank}, {"dim", r.dim}, {"closed_dim", r.closed_dim}};
}

int cmd_rank(const Options& o) {
  const Family f = make_family(o);
  std::vector<Param> xs;
  if (!o.param.empty()) xs.push_back(parse_param(o.param, f));
  else xs = enumerate(f);
  if (o.format == "json") {
    json j{{"family", family_json(f)}, {"ranks", json::array()}};
    for (const auto& x : xs) j["ranks"].push_back(rank_json(x, f));
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  for (const auto& x : xs) {
    const RankInfo r = rank_info(x, f);
    std::cout << param_text(x) << " rank=" << r.rank << " dim=" << r.dim << '\n';
  }
  return kOk;
}

int cmd_poset(const Options& o, bool graph_edges) {
  const Family f = make_family(o);
  OrbitPoset P(f);
  BruhatGraph G(P);
  DocumentOptions opt;
  opt.graph_edges = graph_edges;
  if (!o.interval.empty()) {
    if (o.interval.size() != 2) throw UsageError("--interval takes two parameters");
    const auto c = P.index_of(parse_param(o.interval[0], f));
    const auto d = P.index_of(parse_param(o.interval[1], f));
    if (!c || !d) throw Error(ErrorKind::FamilyMismatch, "interval endpoint not in " + f.name());
    std::size_t lo = *c, hi = *d;
    if (!P.leq(lo, hi)) std::swap(lo, hi);
    if (!P.leq(lo, hi)) {
      std::cerr << "error: " << o.interval[0] << " and " << o.interval[1] << " are incomparable\n";
      return kIncomparable;
    }
    opt.subset = P.interval(lo, hi);
  }
  emit_document(make_document(P, G, opt), o.format);
  return kOk;
}

int cmd_classify(const Options& o) {
  const Family f = make_family(o);
  if (o.param.empty()) throw UsageError("classify needs --param");
  const Param x = parse_param(o.param, f);
  json j = verdict_json(classify(x, f));
  j["family"] = f.name();
  j["param"] = param_text(x);
  if (o.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << param_text(x) << " in " << f.name() << ": rationally_smooth=" << j["rationally_smooth"]
              << " smooth=" << j["smooth"] << " lci=" << j["lci"] << '\n';
    if (!j["witness"].is_null()) std::cout << "witness: " << j["witness"].dump() << '\n';
    if (!j["decomposition"].get<std::string>().empty()) std::cout << "shape: " << j["decomposition"].get<std::string>() << '\n';
  }
  return kOk;
}

int cmd_richardson(const Options& o) {
  if (o.param.empty()) throw UsageError("richardson needs --clan");
  const Clan c = parse_clan(o.param);
  if (clan_includes(c, parse_clan("1212"))) {
    // the listings are still defined; the pair is not
    std::cout << "u(c)=" << print_permutation(u_of_clan(c)) << " v(c)=" << print_permutation(v_of_clan(c)) << '\n';
  }
  const RichardsonPair r = richardson_pair_unchecked(c);
  if (o.format == "json") {
    std::cout << json{{"clan", print_clan(c)},
                      {"u_of_clan", print_permutation(u_of_clan(c))},
                      {"v_of_clan", print_permutation(v_of_clan(c))},
                      {"u", print_permutation(r.u)},
                      {"v", print_permutation(r.v)},
                      {"p", r.p},
                      {"grassmannian", r.grassmannian}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "u(c)=" << print_permutation(u_of_clan(c)) << " v(c)=" << print_permutation(v_of_clan(c)) << '\n'
              << "u=" << print_permutation(r.u) << " v=" << print_permutation(r.v) << " p=" << r.p
              << " grassmannian=" << (r.grassmannian ? "yes" : "no") << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  Tag t;
  parse_tag(o.family, t);
  if (o.max_size < 1) throw UsageError("--max-size must be positive");
  const auto results = verify(t, o.max_size);
  if (o.format == "json") {
    json j = json::array();
    for (const auto& r : results) j.push_back(suite_json(r));
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::cout << (r.informational ? "INFO" : (r.passed ? "PASS" : "FAIL")) << ' ' << r.suite << ' ' << r.family
                << ": " << r.detail;
      if (!r.counterexample.empty()) std::cout << " [first: " << r.counterexample << ']';
      std::cout << '\n';
    }
  }
  return all_passed(results) ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K-orbit closures on flag varieties: enumeration, order, graphs, singularities"};
  app.require_subcommand(1);
  Options o;

  auto* en = app.add_subcommand("enumerate", "list all orbit parameters");
  add_family_flags(en, o, true);
  add_format(en, o, {"text", "json"});

  auto* rk = app.add_subcommand("rank", "rank and dimension of one or all parameters");
  add_family_flags(rk, o, true);
  rk->add_option("--param", o.param, "parameter text");
  add_format(rk, o, {"text", "json"});

  auto* hs = app.add_subcommand("hasse", "Hasse diagram of the closure order");
  add_family_flags(hs, o, true);
  add_format(hs, o, {"text", "json", "dot"});
  hs->add_option("--interval", o.interval, "restrict to [c, d]");

  auto* gr = app.add_subcommand("graph", "Bruhat graph with Hasse covers marked");
  add_family_flags(gr, o, true);
  add_format(gr, o, {"text", "json", "dot"});
  gr->add_option("--interval", o.interval, "restrict to [c, d]");

  auto* cl = app.add_subcommand("classify", "smoothness verdict for one parameter");
  add_family_flags(cl, o, true);
  cl->add_option("--param", o.param, "parameter text")->required();
  add_format(cl, o, {"text", "json"});

  auto* ri = app.add_subcommand("richardson", "u, v and p for a clan avoiding 1212");
  ri->add_option("--clan,--param", o.param, "AIII clan")->required();
  add_format(ri, o, {"text", "json"});

  auto* ve = app.add_subcommand("verify", "run the cross-check suites");
  add_family_flags(ve, o, false);
  ve->add_option("--max-size,--max-n", o.max_size, "largest parameter length");
  add_format(ve, o, {"text", "json"});

  // Clans such as -+-+ look like short options; a single-value option accepts them, so
  // "--interval c d" is split into two occurrences before parsing.
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--interval" && i + 2 < argc) {
      args.insert(args.end(), {a, argv[i + 1], a, argv[i + 2]});
      i += 2;
    } else {
      args.push_back(a);
    }
  }
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*en) return cmd_enumerate(o);
    if (*rk) return cmd_rank(o);
    if (*hs) return cmd_poset(o, false);
    if (*gr) return cmd_poset(o, true);
    if (*cl) return cmd_classify(o);
    if (*ri) return cmd_richardson(o);
    if (*ve) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidParam;
  }
  return kUsage;
}
