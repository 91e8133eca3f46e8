#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "ugk/conditions.hpp"
#include "ugk/dsl.hpp"
#include "ugk/errors.hpp"
#include "ugk/expr.hpp"
#include "ugk/report.hpp"

namespace ugk::cli {

namespace {

struct Options {
  std::string file;
  std::string script;
  std::string conditions = "L,K,T,ND,INF,W";
  std::string kind = "f3";
  std::string set = "all";
  std::string point;
  std::string tau;
  std::size_t bound = 16;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  Natural truncate = 64;
  bool json = false;
};

/// Carries an exit code and message out of a subcommand.
struct Outcome {
  int code;
  std::string message;
};

bool use_color(const Options& o) {
  const char* c = std::getenv("UGK_COLOR");
  return !o.json && c && *c && std::strcmp(c, "0") != 0;
}

std::string paint(const std::string& text, Verdict v, bool color) {
  if (!color) return text;
  const char* code = v == Verdict::Holds ? "32" : v == Verdict::Fails ? "31" : "33";
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out), json_(report::envelope("", o.file)) {}

  int dispatch(const std::string& command) {
    json_["command"] = command;
    int code = kOk;
    try {
      Ultragraph g(load_presentation(o_.file));
      if (command == "rfum") {
        code = rfum(g);
      } else {
        auto diags = g.validate();
        if (!diags.empty()) {
          json_["diagnostics"] = report::diagnostics(g, diags);
          throw Outcome{kInputError, to_string(diags.front().kind) + ": " + diags.front().message};
        }
        if (command == "check") code = check(g);
        if (command == "mie") code = mie(g);
        if (command == "witness") code = witness(g);
        if (command == "eval") code = eval(g);
        if (command == "oracle-diff") code = diff(g);
      }
    } catch (const Outcome& o) {
      code = fail(o.code, o.message);
    } catch (const PreconditionViolated& e) {
      code = fail(kFails, e.what());
    } catch (const WitnessNotFound& e) {
      code = fail(kUnknown, e.what());
    } catch (const BudgetExceeded& e) {
      code = fail(kUnknown, e.what());
    } catch (const NormalizationOverflow& e) {
      code = fail(kUnknown, e.what());
    } catch (const std::exception& e) {
      code = fail(kInputError, e.what());
    }
    json_["exit"] = code;
    if (o_.json) out_ << json_.dump(2) << "\n";
    return code;
  }

  std::string error_text() const { return error_; }

 private:
  int fail(int code, const std::string& message) {
    error_ = message;
    json_["error"] = message;
    return code;
  }

  int rfum(const Ultragraph& g) {
    auto diags = g.validate();
    json_["diagnostics"] = report::diagnostics(g, diags);
    if (!o_.json) {
      if (diags.empty()) out_ << "RFUM ok\n";
      for (const auto& d : diags) out_ << to_string(d.kind) << ": " << d.message << "\n";
    }
    return diags.empty() ? kOk : kFails;
  }

  int check(const Ultragraph& g) {
    std::vector<ConditionReport> reports;
    for (const auto& name : split(o_.conditions)) {
      if (name != "L" && name != "K" && name != "T" && name != "ND" && name != "INF" && name != "W")
        throw Outcome{kInputError, "unknown condition " + name};
      reports.push_back(run_condition(g, name, o_.bound));
    }
    json_["conditions"] = report::conditions(reports);
    bool fails = false, unknown = false;
    for (const auto& r : reports) {
      fails |= r.verdict == Verdict::Fails;
      unknown |= r.verdict == Verdict::Unknown;
      if (!o_.json)
        out_ << pad(r.condition, 4) << paint(pad(to_string(r.verdict), 8), r.verdict, use_color(o_)) << r.certificate
             << "\n";
    }
    return fails ? kFails : unknown ? kUnknown : kOk;
  }

  int mie(const Ultragraph& g) {
    json_["emitters"] = report::emitters(g);
    if (!o_.json)
      for (std::size_t k = 0; k < g.mie_sets().size(); ++k)
        out_ << Ultragraph::mie_name(static_cast<int>(k)) << "  " << g.mie_sets()[k].to_string() << "\n";
    return kOk;
  }

  template <class T>
  T argument(Script& sc, const std::string& text, const char* what) {
    if (text.empty()) throw Outcome{kInputError, std::string("missing --") + what};
    Value v = sc.evaluate(text);
    if (auto p = std::get_if<T>(&v)) return *p;
    throw Outcome{kInputError, std::string("--") + what + " has the wrong type"};
  }

  int witness(const Ultragraph& g) {
    Script sc(g, o_.bound);
    ClopenSet a = argument<ClopenSet>(sc, o_.set, "set");
    Witness w;
    if (o_.kind == "f3")
      w = f3_witness(g, a, o_.bound);
    else if (o_.kind == "f1")
      w = f1_witness(g, argument<BoundaryPoint>(sc, o_.point, "point"), a, o_.bound);
    else if (o_.kind == "f2")
      w = f2_witness(g, argument<FullGroupElement>(sc, o_.tau, "tau"), a, o_.bound);
    else
      throw Outcome{kInputError, "unknown witness kind " + o_.kind};
    json_["witness"] = report::witness(g, w);
    if (!o_.json) {
      out_ << w.word;
      for (const auto& n : w.notes) out_ << "# " << n << "\n";
      out_ << "# verification " << w.verification.dump() << "\n";
    }
    return kOk;
  }

  int eval(const Ultragraph& g) {
    Script sc(g, o_.bound);
    auto lines = sc.run(read_file(o_.script));
    json_["output"] = lines;
    if (!o_.json)
      for (const auto& l : lines) out_ << l << "\n";
    return kOk;
  }

  int diff(const Ultragraph& g) {
    auto r = oracle::diff_test(g, o_.seed, o_.trials, o_.truncate);
    json_["oracle"] = report::diff(r);
    json_["seed"] = o_.seed;
    if (!o_.json) {
      out_ << "trials " << r.trials << ", checks " << r.checks << ", divergences " << r.divergences
           << ", unwitnessed " << r.unwitnessed << "\n";
      for (const auto& s : r.samples) out_ << "  " << s << "\n";
    }
    return r.divergences == 0 ? kOk : kFails;
  }

  const Options& o_;
  std::ostream& out_;
  nlohmann::json json_;
  std::string error_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Ultragraph groupoids and their topological full groups"};
  app.name("ugk");
  app.require_subcommand(1, 1);

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "ultragraph presentation")->required();
    sub->add_flag("--json", o.json, "emit a JSON report");
    return sub;
  };
  auto* check = add("check", "decide conditions within a search bound");
  check->add_option("--conditions", o.conditions, "comma-separated list of L, K, T, ND, INF, W");
  check->add_option("--bound", o.bound, "search bound")->capture_default_str();
  add("mie", "list minimal infinite emitters");
  add("rfum", "validate the presentation");
  auto* witness = add("witness", "build and verify an F1, F2 or F3 witness");
  witness->add_option("--kind", o.kind, "f1, f2 or f3")->capture_default_str();
  witness->add_option("--set", o.set, "clopen set expression")->capture_default_str();
  witness->add_option("--point", o.point, "boundary point (f1)");
  witness->add_option("--tau", o.tau, "involution expression (f2)");
  witness->add_option("--bound", o.bound, "search bound")->capture_default_str();
  auto* eval = add("eval", "run a group-word script");
  eval->add_option("script", o.script, "script file")->required();
  eval->add_option("--bound", o.bound, "search bound for witnesses")->capture_default_str();
  auto* diff = add("oracle-diff", "compare cylinder algebra with brute-force membership");
  diff->add_option("--seed", o.seed)->capture_default_str();
  diff->add_option("--trials", o.trials)->capture_default_str();
  diff->add_option("--truncate", o.truncate, "vertex truncation, at most 64")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  Runner runner(o, out);
  int code = runner.dispatch(app.get_subcommands().front()->get_name());
  if (!runner.error_text().empty() && !o.json) err << "ugk: " << runner.error_text() << "\n";
  return code;
}

}  // namespace ugk::cli
