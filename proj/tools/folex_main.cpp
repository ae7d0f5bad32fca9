#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>

#include "folex/corpus.hpp"
#include "folex/ops.hpp"
#include "folex/parse.hpp"

using folex::ops::json;

namespace {

void print_human(const json& r, std::ostream& out) {
  for (auto it = r.begin(); it != r.end(); ++it) {
    out << it.key() << ": ";
    if (it.value().is_string())
      out << it.value().get<std::string>();
    else
      out << it.value().dump();
    out << "\n";
  }
}

struct Common {
  bool human = false;
  std::string expect;  // --assert: JSON that must be a subset of the report
};

// Runs the op, prints the report, and returns the process exit code.
int emit(const std::string& op, const json& params, const Common& c) {
  json r = folex::ops::run_op(op, params);
  if (c.human)
    print_human(r, std::cout);
  else
    std::cout << r.dump(2) << "\n";
  if (!c.expect.empty()) {
    json want = json::parse(c.expect);
    if (!folex::ops::json_subset(want, r)) {
      std::cerr << "assertion failed: expected " << want.dump() << "\n";
      return 1;
    }
  }
  return 0;
}

int run_corpus_cmd(const std::string& dir) {
  auto cases = folex::ops::load_corpus(dir);
  auto sum = folex::ops::run_corpus(cases);
  if (sum.empty_warning) {
    std::cerr << "warning: corpus directory '" << dir << "' has no cases\n";
    std::cout << "0 cases, 0 failed\n";
    return 0;
  }
  for (const auto& r : sum.results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  ("
              << r.millis << " ms)";
    if (!r.passed) std::cout << "  " << r.detail;
    std::cout << "\n";
  }
  std::cout << sum.passed << " passed, " << sum.failed << " failed\n";
  return sum.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for twisted projective differential forms"};
  app.require_subcommand(1);

  Common common;
  int n = -1, q = 0, k = 0, chart = 0, lambda_pivot = -1, twist = -1;
  std::string f, form, beta, alpha, g, point, dir = "corpus";

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--human", common.human, "render a readable report instead of JSON");
    sub->add_option("--assert", common.expect,
                    "JSON object that must match the report (exit 1 otherwise)");
  };

  std::string chosen_op;
  auto finish = [&](CLI::App* sub, const std::string& op) {
    add_common(sub);
    sub->callback([&chosen_op, op] { chosen_op = op; });
    return sub;
  };

  {
    auto* s = app.add_subcommand("dims", "twisted-form space dimension, two ways");
    s->add_option("--n", n)->required();
    s->add_option("--q", q)->required();
    s->add_option("--k", k)->required();
    finish(s, "dims");
  }
  {
    auto* s = app.add_subcommand("kernel", "kernel of the restriction map");
    s->add_option("--f", f)->required();
    s->add_option("--q", q)->required();
    s->add_option("--k", k)->required();
    s->add_option("--n", n);
    finish(s, "kernel");
  }
  {
    auto* s = app.add_subcommand("invariant", "hypersurface invariance of a section");
    s->add_option("--f", f)->required();
    s->add_option("--form", form)->required();
    s->add_option("--n", n);
    finish(s, "invariant");
  }
  {
    auto* s = app.add_subcommand("restrict-zero", "does the form restrict to zero");
    s->add_option("--f", f)->required();
    s->add_option("--form", form)->required();
    s->add_option("--twist", twist);
    s->add_option("--n", n);
    finish(s, "restrict-zero");
  }
  {
    auto* s = app.add_subcommand("saturate", "divide out the coefficient gcd");
    s->add_option("--n", n)->required();
    s->add_option("--form", form)->required();
    finish(s, "saturate");
  }
  {
    auto* s = app.add_subcommand("integrable", "Frobenius condition for q = 1");
    s->add_option("--n", n)->required();
    s->add_option("--form", form)->required();
    finish(s, "integrable");
  }
  {
    auto* s = app.add_subcommand("decomposable", "decomposability for q = 2");
    s->add_option("--n", n)->required();
    s->add_option("--form", form)->required();
    finish(s, "decomposable");
  }
  {
    auto* s = app.add_subcommand("extend", "extend a codimension-one form off X");
    s->add_option("--f", f)->required();
    s->add_option("--beta", beta)->required();
    s->add_option("--n", n);
    finish(s, "extend");
  }
  {
    auto* s = app.add_subcommand("extend-dist", "extend a codimension-two distribution");
    s->add_option("--f", f)->required();
    s->add_option("--beta", beta)->required();
    s->add_option("--n", n);
    finish(s, "extend-dist");
  }
  {
    auto* s = app.add_subcommand("certify-nonextension", "non-extension certificate");
    s->add_option("--f", f)->required();
    s->add_option("--beta", beta)->required();
    s->add_option("--n", n);
    finish(s, "certify-nonextension");
  }
  {
    auto* s = app.add_subcommand("trivial-extend", "cone extension by one variable");
    s->add_option("--n", n)->required();
    s->add_option("--form", form)->required();
    finish(s, "trivial-extend");
  }
  {
    auto* s = app.add_subcommand("roundtrip", "restrict then extend, compare");
    s->add_option("--f", f)->required();
    s->add_option("--alpha", alpha)->required();
    s->add_option("--n", n);
    finish(s, "roundtrip");
  }
  {
    auto* s = app.add_subcommand("poincare", "degree bound for invariant hypersurfaces");
    s->add_option("--f", f)->required();
    s->add_option("--form", form)->required();
    s->add_option("--n", n);
    finish(s, "poincare");
  }
  {
    auto* s = app.add_subcommand("gauss", "Gauss map value at a point");
    s->add_option("--f", f)->required();
    s->add_option("--point", point)->required();
    s->add_option("--n", n);
    finish(s, "gauss");
  }
  {
    auto* s = app.add_subcommand("sff-rank", "second fundamental form rank");
    s->add_option("--f", f)->required();
    s->add_option("--point", point)->required();
    s->add_option("--n", n);
    finish(s, "sff-rank");
  }
  {
    auto* s = app.add_subcommand("morse", "classify a restricted critical point");
    s->add_option("--f", f)->required();
    s->add_option("--g", g)->required();
    s->add_option("--chart", chart)->required();
    s->add_option("--point", point)->required();
    s->add_option("--lambda-family", lambda_pivot,
                  "pivot variable for the one-parameter family");
    s->add_option("--n", n);
    finish(s, "morse");
  }
  {
    auto* s = app.add_subcommand("corpus", "replay the bundled example corpus");
    s->add_option("--dir", dir, "corpus directory");
    s->callback([&chosen_op] { chosen_op = "corpus"; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (chosen_op == "corpus") return run_corpus_cmd(dir);

    json p;
    if (chosen_op == "dims") p = {{"n", n}, {"q", q}, {"k", k}};
    else if (chosen_op == "kernel") p = {{"f", f}, {"q", q}, {"k", k}, {"n", n}};
    else if (chosen_op == "invariant") p = {{"f", f}, {"form", form}, {"n", n}};
    else if (chosen_op == "restrict-zero") {
      p = {{"f", f}, {"form", form}, {"n", n}};
      if (twist >= 0) p["twist"] = twist;
    } else if (chosen_op == "saturate" || chosen_op == "integrable" ||
               chosen_op == "decomposable" || chosen_op == "trivial-extend")
      p = {{"n", n}, {"form", form}};
    else if (chosen_op == "extend" || chosen_op == "extend-dist" ||
             chosen_op == "certify-nonextension")
      p = {{"f", f}, {"beta", beta}, {"n", n}};
    else if (chosen_op == "roundtrip") p = {{"f", f}, {"alpha", alpha}, {"n", n}};
    else if (chosen_op == "poincare") p = {{"f", f}, {"form", form}, {"n", n}};
    else if (chosen_op == "gauss" || chosen_op == "sff-rank")
      p = {{"f", f}, {"point", point}, {"n", n}};
    else if (chosen_op == "morse") {
      p = {{"f", f}, {"g", g}, {"chart", chart}, {"point", point}, {"n", n}};
      if (lambda_pivot >= 0) p["lambda_pivot"] = lambda_pivot;
    }
    return emit(chosen_op, p, common);
  } catch (const folex::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
