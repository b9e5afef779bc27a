/*
   Copyright 2026 The charp-forms Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// charp-forms: command-line front end.
//
// Exit codes: 0 success, 2 verified modulo axioms or not found within the
// search bound, 1 rejected certificate or any error, 64 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "charp/error.hpp"
#include "charp/expr.hpp"
#include "charp/exterior.hpp"
#include "charp/json_io.hpp"

using namespace charp;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kPartial = 2;
constexpr int kUsage = 64;

struct Options {
  std::string out;
  unsigned jobs = 1;
};

Json read_json(const std::string& source) {
  if (!source.empty() && source.front() == '{') return Json::parse(source);
  std::ifstream in(source);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + source + "'");
  return Json::parse(in);
}

void emit(const Options& opt, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + opt.out + "'");
  out << text;
}

int status_code(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Verified: return kOk;
    case VerdictStatus::VerifiedModuloAxioms: return kPartial;
    case VerdictStatus::Rejected: return kFailure;
  }
  return kFailure;
}

int worst(int a, int b) {
  if (a == kFailure || b == kFailure) return kFailure;
  return std::max(a, b);
}

/// Forms and symbols may sit at the top level next to "field" or under `key`.
const Json& body(const Json& j, const char* key) { return j.contains(key) ? j.at(key) : j; }

std::size_t slot_index(long long one_based, const SymbolPresentation& s) {
  if (one_based < 1 || static_cast<std::size_t>(one_based) > s.n())
    throw Error(ErrorKind::BadRange, "slot " + std::to_string(one_based) + " is outside 1.." + std::to_string(s.n()));
  return static_cast<std::size_t>(one_based - 1);
}

Json rewrite_json(const RewriteResult& r, const Verdict& v) {
  return Json{{"trivial", r.trivial},
              {"result", r.result ? io::symbol_to_json(*r.result) : Json(nullptr)},
              {"certificate", io::certificate_to_json(r.certificate)},
              {"verdict", io::verdict_to_json(v)}};
}

int emit_rewrite(const Options& opt, const RewriteResult& r) {
  const Verdict v = verify(r.certificate);
  emit(opt, rewrite_json(r, v));
  return status_code(v.status);
}

Json form_output(const PolyFormSpec& f) {
  const auto cert = regularity_certificate(f);
  return Json{{"field", io::field_to_json(*f.ctx())},
              {"form", io::polyform_to_json(f)},
              {"dimension", f.dimension()},
              {"regularity", cert ? io::regularity_to_json(*cert) : Json(nullptr)}};
}

Json search_json(const IsotropyResult& r) {
  Json vec = Json::array();
  for (const auto& c : r.vector) vec.push_back(io::element_to_json(c));
  return Json{{"outcome", r.found ? "Found" : "NotFoundWithinBound"},
              {"vector", r.found ? vec : Json(nullptr)},
              {"examined", r.examined},
              {"cap_reached", r.cap_reached}};
}

std::vector<const Json*> certificate_nodes(const Json& j) {
  std::vector<const Json*> out;
  if (j.contains("certificates")) {
    for (const auto& c : j.at("certificates")) out.push_back(&c);
  } else if (j.contains("certificate")) {
    if (!j.at("certificate").is_null()) out.push_back(&j.at("certificate"));
  } else {
    out.push_back(&j);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with differential-form symbols in characteristic p"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--out", opt.out, "Write JSON output to this file instead of stdout");
  app.add_option("--jobs", opt.jobs, "Worker threads for searches (CHARP_FORMS_JOBS overrides)")->check(CLI::PositiveNumber);

  std::string file, file2, rule, elem, vector_file, mode = "degree:1", field_src, alpha_src, g_src;
  long long slot = 0, slot2 = 0, level = 1, tail = 0;
  unsigned max_degree = 1;
  std::uint64_t cap = 10'000'000;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a symbol to its differential form");
  eval_cmd->add_option("symbol-file", file)->required();
  auto* d_cmd = app.add_subcommand("d", "Exterior derivative of a form");
  d_cmd->add_option("form-file", file)->required();
  auto* wedge_cmd = app.add_subcommand("wedge", "Wedge product of two forms");
  wedge_cmd->add_option("form-file", file)->required();
  wedge_cmd->add_option("form-file-2", file2)->required();

  auto* rewrite_cmd = app.add_subcommand("rewrite", "Apply one rewrite rule to a symbol");
  rewrite_cmd->add_option("--rule", rule)->required()->check(CLI::IsMember({"a", "b", "c", "d", "e", "f"}));
  rewrite_cmd->add_option("--slot", slot, "Slot i (1-based)")->required();
  rewrite_cmd->add_option("--slot2", slot2, "Second slot j (1-based) for rules d, e, f");
  rewrite_cmd->add_option("--elem", elem, "Coefficients c0,c1,... of the element of L (rules b, f) or gamma (rule c)");
  rewrite_cmd->add_option("symbol-file", file)->required();

  auto* modify_cmd = app.add_subcommand("slot-modify", "Replace the last slot by phi(v)");
  modify_cmd->add_option("--vector", vector_file)->required();
  modify_cmd->add_option("--tail", tail, "Keep slots 1..l-1 fixed (1-based l)");
  modify_cmd->add_option("symbol-file", file)->required();

  auto* link_cmd = app.add_subcommand("link", "Separable linkage of a collection of symbols");
  link_cmd->add_option("--level", level)->required();
  link_cmd->add_option("symbols-file", file)->required();

  auto* triv_cmd = app.add_subcommand("trivialize", "Search for a certificate that a symbol is trivial");
  triv_cmd->add_option("--max-degree", max_degree)->required();
  triv_cmd->add_option("--cap", cap, "Maximum number of candidates examined");
  triv_cmd->add_option("symbol-file", file)->required();

  auto* preg_cmd = app.add_subcommand("pregular", "p-regularity by structural certificate and brute force");
  preg_cmd->add_option("form-file", file)->required();

  auto* iso_cmd = app.add_subcommand("isotropy", "Search for an isotropic vector");
  iso_cmd->add_option("--mode", mode, "exhaustive or degree:D");
  iso_cmd->add_option("--cap", cap, "Maximum number of candidates examined");
  iso_cmd->add_option("form-file", file)->required();

  auto* norm_cmd = app.add_subcommand("norm", "Norm of an element of F[T]/(T^p - T - alpha)");
  norm_cmd->add_option("--field", field_src, "Field header file or inline JSON")->required();
  norm_cmd->add_option("--alpha", alpha_src)->required();
  norm_cmd->add_option("--elem", elem)->required();

  auto* phi_cmd = app.add_subcommand("build-phi", "The slot-modification form of a symbol");
  phi_cmd->add_option("symbol-file", file)->required();
  auto* big_phi_cmd = app.add_subcommand("build-Phi", "The trivialization form of a symbol");
  big_phi_cmd->add_option("symbol-file", file)->required();
  auto* t36_cmd = app.add_subcommand("build-t36", "The common-slot form from alphas, betas, gammas, deltas");
  t36_cmd->add_option("input-file", file)->required();

  auto* split_cmd = app.add_subcommand("algebra-split-check", "Splitting witness in [alpha, N(g))");
  split_cmd->add_option("--field", field_src, "Field header file or inline JSON")->required();
  split_cmd->add_option("--alpha", alpha_src)->required();
  split_cmd->add_option("--g", g_src, "Coefficients of g(x)")->required();

  auto* verify_cmd = app.add_subcommand("verify-cert", "Verify one or more certificates");
  verify_cmd->add_option("certificate-file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (const char* env = std::getenv("CHARP_FORMS_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v < 1) throw std::invalid_argument("jobs");
      opt.jobs = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      std::cerr << "CHARP_FORMS_JOBS must be a positive integer\n";
      return kUsage;
    }
  }

  try {
    if (eval_cmd->parsed()) {
      const Json j = read_json(file);
      const CtxPtr ctx = io::field_from_json(j.at("field"));
      const SymbolPresentation s = io::symbol_from_json(ctx, body(j, "symbol"));
      emit(opt, Json{{"field", j.at("field")}, {"form", io::diffform_to_json(eval_symbol(s))}});
      return kOk;
    }
    if (d_cmd->parsed()) {
      const Json j = read_json(file);
      const CtxPtr ctx = io::field_from_json(j.at("field"));
      emit(opt, Json{{"field", j.at("field")}, {"form", io::diffform_to_json(d(io::diffform_from_json(ctx, body(j, "form"))))}});
      return kOk;
    }
    if (wedge_cmd->parsed()) {
      const Json a = read_json(file), b = read_json(file2);
      const CtxPtr ctx = io::field_from_json(a.at("field"));
      const DiffForm w = wedge(io::diffform_from_json(ctx, body(a, "form")), io::diffform_from_json(ctx, body(b, "form")));
      emit(opt, Json{{"field", a.at("field")}, {"form", io::diffform_to_json(w)}});
      return kOk;
    }
    if (rewrite_cmd->parsed()) {
      const Json j = read_json(file);
      const CtxPtr ctx = io::field_from_json(j.at("field"));
      const SymbolPresentation s = io::symbol_from_json(ctx, body(j, "symbol"));
      const std::size_t i = slot_index(slot, s);
      auto second = [&] {
        if (slot2 == 0) throw Error(ErrorKind::InvalidArgument, "rule " + rule + " needs --slot2");
        return slot_index(slot2, s);
      };
      auto element = [&] {
        if (elem.empty()) throw Error(ErrorKind::InvalidArgument, "rule " + rule + " needs --elem");
        return io::parse_coefficients(ctx, elem);
      };
      if (rule == "a") return emit_rewrite(opt, rule_a(s, i));
      if (rule == "b") return emit_rewrite(opt, rule_b(s, i, element()));
      if (rule == "c") {
        if (elem.empty()) throw Error(ErrorKind::InvalidArgument, "rule c needs --elem gamma");
        return emit_rewrite(opt, rule_c(s, i, parse_expr(ctx, elem)));
      }
      if (rule == "d") return emit_rewrite(opt, rule_d(s, i, second()));
      if (rule == "e") return emit_rewrite(opt, rule_e(s, i, second()));
      return emit_rewrite(opt, rule_f(s, i, second(), element()));
    }
    if (modify_cmd->parsed()) {
      const Json j = read_json(file);
      const CtxPtr ctx = io::field_from_json(j.at("field"));
      const SymbolPresentation s = io::symbol_from_json(ctx, body(j, "symbol"));
      const Json vj = read_json(vector_file);
      const TupleVector v = io::tuple_vector_from_json(ctx, body(vj, "vector"));
      if (tail != 0) {
        if (tail < 1) throw Error(ErrorKind::BadRange, "--tail is 1-based");
        return emit_rewrite(opt, slot_modify_tail(s, static_cast<std::size_t>(tail), v));
      }
      return emit_rewrite(opt, slot_modify(s, v));
    }
    if (link_cmd->parsed()) {
      const Json j = read_json(file);
      const CtxPtr ctx = io::field_from_json(j.at("field"));
      std::vector<SymbolPresentation> symbols;
      for (const auto& sj : j.at("symbols")) symbols.push_back(io::symbol_from_json(ctx, sj));
      if (level < 1) throw Error(ErrorKind::BadRange, "--level is 1-based");
      const LinkageOutcome o = separable_link(symbols, static_cast<std::size_t>(level));
      Json out{{"field", j.at("field")}, {"alpha_star", io::element_to_json(o.alpha_star)}};
      Json xs = Json::array(), gammas = Json::array(), deltas = Json::array(), syms = Json::array(), certs = Json::array();
      for (const auto& x : o.system.x) xs.push_back(io::element_to_json(x));
      for (const auto& g : o.system.gammas) gammas.push_back(io::element_to_json(g));
      for (const auto& dl : o.system.deltas) deltas.push_back(io::element_to_json(dl));
      int code = kOk;
      for (const auto& ls : o.symbols) {
        syms.push_back(Json{{"status", std::string(to_string(ls.status))},
                            {"presentation", io::symbol_to_json(ls.presentation)},
                            {"verdict", io::verdict_to_json(ls.verdict)}});
        certs.push_back(io::certificate_to_json(ls.certificate));
        code = worst(code, status_code(ls.verdict.status));
      }
      out["x"] = xs;
      out["gammas"] = gammas;
      out["deltas"] = deltas;
      out["symbols"] = syms;
      out["certificates"] = certs;
      emit(opt, out);
      return code;
    }
    if (triv_cmd->parsed()) {
      const Json j = read_json(file);
      const CtxPtr ctx = io::field_from_json(j.at("field"));
      const SymbolPresentation s = io::symbol_from_json(ctx, body(j, "symbol"));
      SearchBudget budget;
      budget.max_degree = max_degree;
      budget.cap = cap;
      budget.jobs = opt.jobs;
      const TrivializationOutcome t = trivialize(s, budget);
      Json out{{"outcome", t.trivial ? "Trivial" : "NotFoundWithinBound"}, {"search", search_json(t.search)}};
      if (!t.trivial) {
        emit(opt, out);
        return kPartial;
      }
      const Verdict v = verify(*t.certificate);
      out["branch"] = t.branch;
      out["certificate"] = io::certificate_to_json(*t.certificate);
      out["verdict"] = io::verdict_to_json(v);
      emit(opt, out);
      return status_code(v.status);
    }
    if (preg_cmd->parsed()) {
      const Json j = read_json(file);
      const CtxPtr ctx = io::field_from_json(j.at("field"));
      const PolyFormSpec f = io::polyform_from_json(ctx, body(j, "form"));
      Json out{{"dimension", f.dimension()}, {"certificate", nullptr}, {"bruteforce", nullptr}};
      bool decided = false, regular = false;
      try {
        if (const auto cert = regularity_certificate(f)) {
          out["certificate"] = io::regularity_to_json(*cert);
          decided = regular = true;
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ExplicitLeaf) throw;
      }
      try {
        const BruteForceResult bf = is_p_regular_bruteforce(f);
        Json witness = nullptr;
        if (bf.witness) {
          witness = Json::array();
          for (const auto& c : *bf.witness) witness.push_back(io::element_to_json(c));
        }
        out["bruteforce"] = Json{{"regular", bf.regular}, {"witness", witness}, {"points_checked", bf.points_checked}};
        decided = true;
        regular = bf.regular;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonConstantCoefficients && e.kind() != ErrorKind::TooLarge) throw;
      }
      out["regular"] = decided ? Json(regular) : Json(nullptr);
      emit(opt, out);
      return decided ? kOk : kPartial;
    }
    if (iso_cmd->parsed()) {
      const Json j = read_json(file);
      const CtxPtr ctx = io::field_from_json(j.at("field"));
      const PolyFormSpec f = io::polyform_from_json(ctx, body(j, "form"));
      SearchBudget budget;
      budget.cap = cap;
      budget.jobs = opt.jobs;
      if (mode == "exhaustive") {
        budget.mode = SearchBudget::Mode::ExhaustiveConstants;
      } else if (mode.rfind("degree:", 0) == 0) {
        try {
          budget.max_degree = static_cast<unsigned>(std::stoul(mode.substr(7)));
        } catch (const std::exception&) {
          std::cerr << "--mode must be exhaustive or degree:D\n";
          return kUsage;
        }
      } else {
        std::cerr << "--mode must be exhaustive or degree:D\n";
        return kUsage;
      }
      const IsotropyResult r = isotropy_search(f, budget);
      emit(opt, search_json(r));
      return r.found ? kOk : kPartial;
    }
    if (norm_cmd->parsed()) {
      const CtxPtr ctx = io::field_from_json(body(read_json(field_src), "field"));
      const FieldElement alpha = parse_expr(ctx, alpha_src);
      emit(opt, Json{{"norm", io::element_to_json(norm(alpha, io::parse_coefficients(ctx, elem)))}});
      return kOk;
    }
    if (phi_cmd->parsed() || big_phi_cmd->parsed()) {
      const Json j = read_json(file);
      const CtxPtr ctx = io::field_from_json(j.at("field"));
      const SymbolPresentation s = io::symbol_from_json(ctx, body(j, "symbol"));
      emit(opt, form_output(phi_cmd->parsed() ? build_phi(s) : build_Phi(s)));
      return kOk;
    }
    if (t36_cmd->parsed()) {
      const Json j = read_json(file);
      const CtxPtr ctx = io::field_from_json(j.at("field"));
      auto list = [&](const char* key) {
        std::vector<FieldElement> v;
        if (j.contains(key))
          for (const auto& e : j.at(key)) v.push_back(io::element_from_json(ctx, e));
        return v;
      };
      emit(opt, form_output(build_common_slot_form(list("alphas"), list("betas"), list("gammas"), list("deltas"))));
      return kOk;
    }
    if (split_cmd->parsed()) {
      const CtxPtr ctx = io::field_from_json(body(read_json(field_src), "field"));
      const SplitWitness w = split_witness(parse_expr(ctx, alpha_src), io::parse_coefficients(ctx, g_src));
      emit(opt, Json{{"alpha", io::element_to_json(w.algebra.alpha())},
                     {"beta", io::element_to_json(w.algebra.beta())},
                     {"t", io::algebra_element_to_json(w.t)},
                     {"t_power_is_one", w.t_power_is_one},
                     {"nilpotent", w.nilpotent}});
      return w.t_power_is_one && w.nilpotent ? kOk : kFailure;
    }
    if (verify_cmd->parsed()) {
      const Json j = read_json(file);
      Json verdicts = Json::array();
      int code = kOk;
      for (const Json* node : certificate_nodes(j)) {
        const Verdict v = verify(io::certificate_from_json(*node));
        verdicts.push_back(io::verdict_to_json(v));
        code = worst(code, status_code(v.status));
      }
      if (verdicts.empty()) throw Error(ErrorKind::InvalidArgument, "no certificate found");
      emit(opt, verdicts.size() == 1 ? verdicts[0] : Json{{"verdicts", verdicts}});
      return code;
    }
  } catch (const SyntaxError& e) {
    std::cerr << Json{{"error", std::string(to_string(e.kind()))}, {"offset", e.offset()}, {"message", e.what()}}.dump() << "\n";
    return kFailure;
  } catch (const Error& e) {
    std::cerr << Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << "\n";
    return kFailure;
  } catch (const Json::exception& e) {
    std::cerr << Json{{"error", "InvalidJson"}, {"message", e.what()}}.dump() << "\n";
    return kFailure;
  }
  return kUsage;
}
