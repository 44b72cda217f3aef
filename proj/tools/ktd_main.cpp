// ktd: command-line front end for the knotoid library.
//
// Subcommands: compute, closure, chord, regular, fuzz, expand, validate.
// Diagrams are read as KTD text from --input FILE or stdin; exit codes are
// 0 on success, 1 on a domain error, 2 on a parse error.

#include "knotoid/knotoid.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace knotoid;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct ComputeArgs {
  std::string invariant = "f";
  std::string input;
  bool skein = false;
  bool json = false;
  int n_max = 3;
  int k_max = 2;
  int cap = 24;
};

void print_poly(const Laurent1& p, const std::string& name, bool json) {
  if (json)
    std::cout << to_json(name, p).dump() << "\n";
  else
    std::cout << p.str() << "\n";
}

void print_poly(const Laurent2& p, const std::string& name, bool json) {
  if (json)
    std::cout << to_json(name, p).dump() << "\n";
  else
    std::cout << p.str() << "\n";
}

int run_compute(const ComputeArgs& a) {
  KnotoidDiagram d = parse_ktd(read_input(a.input));
  const std::string& inv = a.invariant;
  auto maybe_skein = [&](auto&& f) {
    if (a.skein) return skein_extend(f, d);
    return f(d);
  };
  if (inv == "bracket") {
    print_poly(maybe_skein([&](const KnotoidDiagram& k) { return kauffman_bracket(k, a.cap); }),
               "bracket", a.json);
  } else if (inv == "f") {
    print_poly(maybe_skein([&](const KnotoidDiagram& k) { return normalized_bracket(k, a.cap); }),
               "f", a.json);
  } else if (inv == "turaev") {
    print_poly(maybe_skein([&](const KnotoidDiagram& k) {
                 return turaev_extended_bracket(k, std::nullopt, a.cap);
               }),
               "turaev", a.json);
  } else if (inv == "affine") {
    print_poly(maybe_skein([](const KnotoidDiagram& k) { return affine_index_polynomial(k); }),
               "affine", a.json);
  } else if (inv == "vbar") {
    print_poly(maybe_skein([](const KnotoidDiagram& k) { return vbar(k); }), "vbar", a.json);
  } else if (inv == "vcoeff") {
    auto vs = vassiliev_coefficients(d, a.n_max, a.cap);
    if (a.json) {
      nlohmann::json out{{"invariant", "vcoeff"}, {"values", nlohmann::json::array()}};
      for (const auto& v : vs) out["values"].push_back(rational_str(v));
      std::cout << out.dump() << "\n";
    } else {
      for (size_t n = 0; n < vs.size(); ++n)
        std::cout << "v_" << n << " = " << rational_str(vs[n]) << "\n";
    }
  } else if (inv == "tcoeff") {
    auto ts = turaev_coefficients(d, a.k_max, a.cap);
    if (a.json) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [kl, v] : ts)
        terms.push_back({{kl.first, kl.second}, rational_str(v)});
      std::cout << nlohmann::json{{"invariant", "tcoeff"}, {"terms", terms}}.dump() << "\n";
    } else {
      for (const auto& [kl, v] : ts)
        std::cout << "t_" << kl.first << "," << kl.second << " = " << rational_str(v) << "\n";
    }
  } else {
    throw error("unknown invariant: " + inv);
  }
  return 0;
}

int run_fuzz(const std::string& input, int steps, std::uint64_t seed,
             const std::string& checks_csv, int max_crossings) {
  KnotoidDiagram d0 = parse_ktd(read_input(input));
  std::cout << "# fuzz steps=" << steps << " seed=" << seed << " checks=" << checks_csv << "\n";
  std::vector<std::string> checks;
  {
    std::istringstream in(checks_csv);
    std::string tok;
    while (std::getline(in, tok, ',')) checks.push_back(tok);
  }
  WalkOptions opts;
  opts.max_crossings = max_crossings;
  KnotoidDiagram d1 = random_walk(d0, steps, seed, opts);
  int failures = 0;
  auto report = [&failures](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };
  for (const std::string& c : checks) {
    if (c == "f")
      report("f", normalized_bracket(d1) == normalized_bracket(d0));
    else if (c == "affine")
      report("affine", affine_index_polynomial(d1) == affine_index_polynomial(d0));
    else if (c == "vbar")
      report("vbar", vbar(d1) == vbar(d0));
    else if (c == "turaev")
      report("turaev", turaev_extended_bracket(d1) == turaev_extended_bracket(d0));
    else
      throw error("unknown fuzz check: " + c);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotoid diagram invariants"};
  app.require_subcommand(1);

  ComputeArgs ca;
  CLI::App* compute = app.add_subcommand("compute", "compute an invariant of a diagram");
  compute->add_option("--inv", ca.invariant,
                      "bracket|f|turaev|affine|vbar|vcoeff|tcoeff")->required();
  compute->add_option("--input", ca.input, "KTD file (default: stdin)");
  compute->add_flag("--skein", ca.skein, "extend over singular crossings by the skein sum");
  compute->add_flag("--json", ca.json, "emit a JSON envelope");
  compute->add_option("--n", ca.n_max, "max order for vcoeff");
  compute->add_option("--k", ca.k_max, "max order for tcoeff");
  compute->add_option("--cap", ca.cap, "state-sum crossing cap (default 24)");

  std::string cl_input, cl_type = "u";
  CLI::App* closure = app.add_subcommand("closure", "close a knotoid diagram to a knot diagram");
  closure->add_option("--type", cl_type, "u|o|v|s")->required();
  closure->add_option("--input", cl_input, "KTD file (default: stdin)");

  std::string ch_input;
  CLI::App* chord = app.add_subcommand("chord", "chord diagram of a one-singularity knotoid");
  chord->add_option("--input", ch_input, "KTD file (default: stdin)");

  int reg_w = 0;
  CLI::App* regular = app.add_subcommand("regular", "emit the regular diagram R_w");
  regular->add_option("--w", reg_w, "winding number")->required();

  std::string fz_input, fz_checks = "f,affine,vbar,turaev";
  int fz_steps = 100;
  int fz_cap = 12;
  std::uint64_t fz_seed = 0;
  CLI::App* fuzz = app.add_subcommand("fuzz", "random-move invariance check");
  fuzz->add_option("--steps", fz_steps, "number of moves")->required();
  fuzz->add_option("--seed", fz_seed, "random seed")->required();
  fuzz->add_option("--check", fz_checks, "comma-separated invariants");
  fuzz->add_option("--input", fz_input, "KTD file (default: stdin)");
  fuzz->add_option("--max-crossings", fz_cap, "crossing cap for additions");

  std::string ex_input;
  int ex_n = 3, ex_k = -1;
  CLI::App* expand = app.add_subcommand("expand", "exponential coefficient tables");
  expand->add_option("--n", ex_n, "orders of the one-variable expansion");
  expand->add_option("--k", ex_k, "orders of the two-variable expansion (off by default)");
  expand->add_option("--input", ex_input, "KTD file (default: stdin)");

  std::string va_input;
  CLI::App* validate_cmd = app.add_subcommand("validate", "check a KTD document");
  validate_cmd->add_option("--input", va_input, "KTD file (default: stdin)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return run_compute(ca);
    if (closure->parsed()) {
      KnotoidDiagram d = parse_ktd(read_input(cl_input));
      ClosedDiagram out;
      if (cl_type == "u") out = underpass_closure(d);
      else if (cl_type == "o") out = overpass_closure(d);
      else if (cl_type == "v") out = virtual_closure(d);
      else if (cl_type == "s") out = singular_closure(d);
      else throw knotoid::error("unknown closure type: " + cl_type);
      std::cout << emit_ktd(out);
      return 0;
    }
    if (chord->parsed()) {
      KnotoidDiagram d = parse_ktd(read_input(ch_input));
      std::cout << chord_of_singular(d).winding << "\n";
      return 0;
    }
    if (regular->parsed()) {
      std::cout << emit_ktd(regular_diagram(reg_w));
      return 0;
    }
    if (fuzz->parsed()) return run_fuzz(fz_input, fz_steps, fz_seed, fz_checks, fz_cap);
    if (expand->parsed()) {
      KnotoidDiagram d = parse_ktd(read_input(ex_input));
      auto vs = vassiliev_coefficients(d, ex_n);
      for (size_t n = 0; n < vs.size(); ++n)
        std::cout << "v_" << n << " = " << rational_str(vs[n]) << "\n";
      if (ex_k >= 0) {
        for (const auto& [kl, v] : turaev_coefficients(d, ex_k))
          std::cout << "t_" << kl.first << "," << kl.second << " = " << rational_str(v) << "\n";
      }
      return 0;
    }
    if (validate_cmd->parsed()) {
      KnotoidDiagram d;
      try {
        d = parse_ktd(read_input(va_input));
      } catch (const invalid_diagram& e) {
        std::cout << "invalid: " << e.what() << "\n";
        return 1;
      }
      std::cout << "valid: " << d.crossings.size() << " crossings, " << d.edge_count()
                << " edges\n";
      return 0;
    }
  } catch (const parse_error& e) {
    std::cerr << "error: parse_error: " << e.what() << "\n";
    return 2;
  } catch (const invalid_diagram& e) {
    std::cerr << "error: invalid_diagram: " << e.what() << "\n";
    return 1;
  } catch (const wrong_kind& e) {
    std::cerr << "error: wrong_kind: " << e.what() << "\n";
    return 1;
  } catch (const wrong_surface& e) {
    std::cerr << "error: wrong_surface: " << e.what() << "\n";
    return 1;
  } catch (const height_not_one& e) {
    std::cerr << "error: height_not_one: " << e.what() << "\n";
    return 1;
  } catch (const wrong_singular_count& e) {
    std::cerr << "error: wrong_singular_count: " << e.what() << "\n";
    return 1;
  } catch (const state_sum_overflow& e) {
    std::cerr << "error: state_sum_overflow: " << e.what() << "\n";
    return 1;
  } catch (const knotoid::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
