#include "qtoledo/cli.hpp"

#include "qtoledo/report.hpp"
#include "qtoledo/sampling.hpp"
#include "qtoledo/selftest.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <ostream>

namespace qtoledo::cli {

namespace {

const std::vector<std::string> kEmbeddings{"rho", "totally-real", "phi", "sym-square"};

struct Options {
  std::string embedding;
  std::size_t n = 2;
  std::string domain;
  std::size_t samples = 5;
  std::uint64_t seed = 1;
  std::string vector;
  bool json = false;
};

void print_json(std::ostream &out, const Json &j) { out << j.dump(2) << "\n"; }

int cmd_pullback(const Options &o, std::ostream &out) {
  const auto report = pullback_constant(make_embedding(*parse_embedding(o.embedding), o.n));
  if (o.json)
    print_json(out, to_json(report));
  else
    out << render_text(report);
  return kExitOk;
}

std::string violations_text(const MaskVerdict &v) {
  if (v.violations.empty()) return "none";
  std::string s;
  for (const auto &x : v.violations) {
    if (!s.empty()) s += ", ";
    s += position_name(x.row, x.col) + "=" + x.value.str();
  }
  return s;
}

int cmd_lift_check(const Options &o, std::ostream &out) {
  Sampler gen(o.seed);
  const bool twistor = o.domain == "twistor";
  std::size_t as_expected = 0;
  Json results = Json::array();
  std::vector<std::string> lines;

  for (std::size_t s = 1; s <= o.samples; ++s) {
    std::string line = "sample " + std::to_string(s) + ": ";
    bool ok = false;
    if (twistor) {
      const auto v = twistor_nonlift_check(gen.nonzero_gaussian_vec(2));
      ok = !v.member;
      results.push_back(to_json("twistor_nonlift", v));
      line += "a=" + to_string(v.input) + " member=" + (v.member ? "true" : "false") +
              " violations: " + violations_text(v);
    } else {
      const auto hol = holomorphy_check_u3u1u2(gen.gaussian_vec(2));
      const Vec v0 = gen.negative_line();
      const Vec w = gen.orthogonal_to(v0);
      const auto hor = horizontality_check(v0, w);
      ok = hol.member && hor.horizontal;
      results.push_back(to_json("holomorphy_u3u1u2", hol));
      results.push_back(to_json(hor, v0, w));
      line += "a=" + to_string(hol.input) + " holomorphic=" + (hol.member ? "true" : "false") +
              " v0=" + to_string(v0) + " w=" + to_string(w) + " horizontal=" + (hor.horizontal ? "true" : "false");
    }
    as_expected += ok ? 1 : 0;
    lines.push_back(std::move(line));
  }

  const bool pass = as_expected == o.samples;
  const std::string summary = std::string(pass ? "PASS" : "FAIL") + " (" + std::to_string(as_expected) + "/" +
                              std::to_string(o.samples) + " samples as expected)";
  if (o.json) {
    print_json(out, Json{{"schema_version", kSchemaVersion},
                         {"domain", o.domain},
                         {"seed", o.seed},
                         {"samples", o.samples},
                         {"convention", kConventionNote},
                         {"results", std::move(results)},
                         {"summary", pass ? "PASS" : "FAIL"}});
  } else {
    out << "# domain: " << o.domain << "  seed: " << o.seed << "  samples: " << o.samples << "\n";
    for (const auto &l : lines) out << l << "\n";
    out << "summary: " << summary << "\n";
  }
  return pass ? kExitOk : kExitCheckFailed;
}

int cmd_classify(const Options &o, std::ostream &out) {
  const auto table = classify_linearity(make_embedding(*parse_embedding(o.embedding), o.n));
  if (o.json)
    print_json(out, to_json(table));
  else
    out << render_text(table);
  return kExitOk;
}

int cmd_period_triple(const Options &o, std::ostream &out) {
  const Vec v = parse_vector(o.vector);
  const auto triple = period_triple(v);
  if (o.json) {
    Json j = to_json(triple);
    j["vector"] = to_json(v);
    print_json(out, j);
  } else {
    out << "L = <" << to_string(v) << ">\n" << render_text(triple);
  }
  return kExitOk;
}

int cmd_selftest(const Options &o, std::ostream &out) {
  const auto results = run_selftest();
  std::size_t passed = 0;
  Json arr = Json::array();
  for (const auto &r : results) {
    passed += r.passed ? 1 : 0;
    if (o.json) {
      arr.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
      if (!r.detail.empty()) out << "  [" << r.detail << "]";
      out << "\n";
    }
  }
  const bool ok = passed == results.size();
  if (o.json)
    print_json(out, Json{{"schema_version", kSchemaVersion}, {"results", std::move(arr)}, {"passed", passed},
                         {"total", results.size()}});
  else
    out << "selftest: " << passed << "/" << results.size() << (ok ? " passed" : " passed, FAILURES present") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact quaternionic Toledo constants and period-domain lifting checks"};
  app.name("qtoledo");
  app.require_subcommand(1);

  Options o;
  auto *pullback = app.add_subcommand("pullback", "omega and Omega0^2 pulled back through an embedding");
  pullback->add_option("--embedding", o.embedding, "rho, totally-real, phi or sym-square")
      ->required()
      ->check(CLI::IsMember(kEmbeddings));
  pullback->add_option("--n", o.n, "complex dimension of the ball (sym-square needs 2)")->check(CLI::Range(2, 64));
  pullback->add_flag("--json", o.json, "emit JSON");

  auto *lift = app.add_subcommand("lift-check", "holomorphic/horizontal lifting checks on seeded samples");
  lift->add_option("--domain", o.domain, "twistor or u3u1u2")->required()->check(CLI::IsMember({"twistor", "u3u1u2"}));
  lift->add_option("--samples", o.samples, "number of random samples")->check(CLI::Range(1, 100000));
  lift->add_option("--seed", o.seed, "seed of the sample generator");
  lift->add_flag("--json", o.json, "emit JSON");

  auto *classify = app.add_subcommand("classify", "(conjugate-)linearity table of an embedding differential");
  classify->add_option("--embedding", o.embedding, "rho, totally-real, phi or sym-square")
      ->required()
      ->check(CLI::IsMember(kEmbeddings));
  classify->add_option("--n", o.n, "complex dimension of the ball")->check(CLI::Range(2, 64));
  classify->add_flag("--json", o.json, "emit JSON");

  auto *triple = app.add_subcommand("period-triple", "(S^2 L^perp, L^2, L.L^perp) for a negative vector");
  triple->add_option("--vector", o.vector, "exact vector, e.g. \"1/2, 0, 1\"")->required();
  triple->add_flag("--json", o.json, "emit JSON");

  auto *selftest = app.add_subcommand("selftest", "check the reference values");
  selftest->add_flag("--json", o.json, "emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*pullback) return cmd_pullback(o, out);
    if (*lift) return cmd_lift_check(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*triple) return cmd_period_triple(o, out);
    if (*selftest) return cmd_selftest(o, out);
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

} // namespace qtoledo::cli
