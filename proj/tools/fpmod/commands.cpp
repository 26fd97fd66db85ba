#include "commands.hpp"

#include <json.hpp>
#include <ostream>

#include "fpm/predicates.hpp"

namespace fpm::cli {

using json = nlohmann::ordered_json;

namespace {

const PredicateKind kSingleLocal[] = {
    PredicateKind::IPrime,    PredicateKind::IReduced,
    PredicateKind::ICoprime,  PredicateKind::ICoreduced,
    PredicateKind::ITorsion,  PredicateKind::IComplete,
};
const PredicateKind kPairLocal[] = {PredicateKind::IJPrime,
                                    PredicateKind::IJCoprime};
const PredicateKind kGlobal[] = {
    PredicateKind::Prime,   PredicateKind::WeaklyPrime,
    PredicateKind::Reduced, PredicateKind::Coprime,
    PredicateKind::WeaklyCoprime, PredicateKind::Coreduced,
};

std::string witness_text(const Verdict& v, const BaseRing& ring) {
  if (!v.witness) return "";
  std::string s;
  for (const Vec& e : v.witness->elements)
    s += (s.empty() ? "" : "; ") + std::string("m = ") + vec_to_string(ring, e);
  for (const Ideal& I : v.witness->ideals)
    s += (s.empty() ? "" : "; ") + std::string("ideal ") + I.to_string();
  if (!v.witness->note.empty()) s += (s.empty() ? "" : "; ") + v.witness->note;
  return s;
}

json verdict_json(const Verdict& v, const BaseRing& ring) {
  json j;
  j["holds"] = v.holds;
  j["evidence"] = v.evidence;
  j["witness"] = witness_text(v, ring);
  return j;
}

json report_json(const Report& rep) {
  json j;
  j["law"] = rep.law;
  j["seed"] = rep.seed;
  j["cases_run"] = rep.cases_run;
  json viols = json::array();
  for (const auto& v : rep.violations) {
    json jv;
    jv["case_index"] = v.case_index;
    jv["case"] = v.case_desc;
    jv["expected"] = v.expected;
    jv["got"] = v.got;
    jv["witness"] = v.witness;
    viols.push_back(jv);
  }
  j["violations"] = viols;
  j["oracle_cross_checks"] = rep.oracle_cross_checks;
  j["runtime_seconds"] = rep.runtime_seconds;
  return j;
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  ParsedInput in;
  try {
    in = load_module_description(opt.file);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (opt.emit_input) {
    out << emit_module_description(in);
    return kExitPass;
  }
  const BaseRing& R = in.ctx.base;
  const PresentedModule& M = in.module;

  if (opt.format == "structured") {
    json j;
    j["context"] = in.ctx.to_string();
    json jm;
    jm["generators"] = M.generators();
    json factors = json::array();
    for (const Element& d : M.invariants().torsion)
      factors.push_back(R.to_string(d));
    jm["invariant_factors"] = factors;
    jm["free_rank"] = M.invariants().free_rank;
    jm["cardinality"] =
        M.cardinality() ? json(M.cardinality()->str()) : json(nullptr);
    jm["annihilator"] = annihilator_ideal(M).to_string();
    j["module"] = jm;
    json jideals;
    for (const auto& [name, ideal] : in.ideals) jideals[name] = ideal.to_string();
    j["ideals"] = jideals;
    json local = json::array();
    for (const auto& [name, ideal] : in.ideals)
      for (PredicateKind k : kSingleLocal) {
        json e = verdict_json(local_predicate(M, k, ideal), R);
        e["ideal"] = name;
        e["kind"] = predicate_name(k);
        local.push_back(e);
      }
    j["local"] = local;
    json pairs = json::array();
    for (const auto& [niName, iIdeal] : in.ideals)
      for (const auto& [njName, jIdeal] : in.ideals)
        for (PredicateKind k : kPairLocal) {
          json e = verdict_json(local_predicate(M, k, iIdeal, jIdeal), R);
          e["ideals"] = json::array({niName, njName});
          e["kind"] = predicate_name(k);
          pairs.push_back(e);
        }
    j["pairs"] = pairs;
    json global = json::array();
    for (PredicateKind k : kGlobal) {
      json e = verdict_json(global_predicate(M, k), R);
      e["kind"] = predicate_name(k);
      global.push_back(e);
    }
    j["global"] = global;
    out << j.dump(2) << "\n";
    return kExitPass;
  }

  out << "context: " << in.ctx.to_string() << "\n";
  out << "module: " << M.generators() << " generators, invariant factors "
      << M.invariants().to_string(R);
  if (auto c = M.cardinality()) out << ", |M| = " << c->str();
  out << "\n";
  out << "annihilator: " << annihilator_ideal(M).to_string() << "\n";
  for (const auto& [name, ideal] : in.ideals) {
    out << "ideal " << name << " = " << ideal.to_string() << ":\n";
    for (PredicateKind k : kSingleLocal) {
      Verdict v = local_predicate(M, k, ideal);
      out << "  " << predicate_name(k) << ": " << (v.holds ? "holds" : "FAILS");
      if (!v.holds && v.witness) out << "  [" << witness_text(v, R) << "]";
      else out << "  (" << v.evidence << ")";
      out << "\n";
    }
  }
  for (const auto& [niName, iIdeal] : in.ideals)
    for (const auto& [njName, jIdeal] : in.ideals) {
      out << "pair (" << niName << ", " << njName << "):\n";
      for (PredicateKind k : kPairLocal) {
        Verdict v = local_predicate(M, k, iIdeal, jIdeal);
        out << "  " << predicate_name(k) << ": " << (v.holds ? "holds" : "FAILS");
        if (!v.holds && v.witness) out << "  [" << witness_text(v, R) << "]";
        out << "\n";
      }
    }
  out << "global:\n";
  for (PredicateKind k : kGlobal) {
    Verdict v = global_predicate(M, k);
    out << "  " << predicate_name(k) << ": " << (v.holds ? "holds" : "FAILS");
    if (!v.holds && v.witness) out << "  [" << witness_text(v, R) << "]";
    out << "\n";
  }
  return kExitPass;
}

int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
  ParsedInput in;
  try {
    in = load_module_description(opt.file);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const BaseRing& R = in.ctx.base;

  auto find_ideal = [&](const std::string& name) -> std::optional<Ideal> {
    for (const auto& [n, ideal] : in.ideals)
      if (n == name) return ideal;
    return std::nullopt;
  };

  json j;
  j["functor"] = opt.functor;
  try {
    if (opt.functor == "gamma" || opt.functor == "lambda") {
      if (!opt.ideal) {
        err << "error: --ideal NAME is required for " << opt.functor << "\n";
        return kExitInputError;
      }
      auto ideal = find_ideal(*opt.ideal);
      if (!ideal) {
        err << "error: no ideal named '" << *opt.ideal << "' in " << opt.file << "\n";
        return kExitInputError;
      }
      if (opt.functor == "gamma") {
        Submodule G = gamma(in.module, *ideal);
        json gens = json::array();
        for (const Vec& v : G.gens()) gens.push_back(vec_to_string(R, v));
        j["submodule_generators"] = gens;
        if (opt.format == "structured") out << j.dump(2) << "\n";
        else {
          out << "Gamma_" << ideal->to_string() << ": submodule generated by ";
          if (G.gens().empty()) out << "(nothing: the zero submodule)";
          for (const Vec& v : G.gens()) out << vec_to_string(R, v) << " ";
          out << "\n";
        }
        return kExitPass;
      }
      LambdaResult L = lambda(in.module, *ideal);
      if (std::holds_alternative<NotRepresentable>(L)) {
        const auto& nr = std::get<NotRepresentable>(L);
        j["not_representable"] = nr.reason;
        if (opt.format == "structured") out << j.dump(2) << "\n";
        else out << "Lambda_" << ideal->to_string() << ": NotRepresentable ("
                 << nr.reason << ")\n";
        return kExitPass;  // a valid mathematical answer, not an error
      }
      const PresentedModule& LM = std::get<PresentedModule>(L);
      j["invariant_factors"] = LM.invariants().to_string(R);
      if (opt.format == "structured") out << j.dump(2) << "\n";
      else out << "Lambda_" << ideal->to_string() << ": invariant factors "
               << LM.invariants().to_string(R) << "\n";
      return kExitPass;
    }
    if (opt.functor == "hom" || opt.functor == "tensor") {
      if (!opt.with) {
        err << "error: --with FILE is required for " << opt.functor << "\n";
        return kExitInputError;
      }
      ParsedInput rhs = load_module_description(*opt.with);
      if (!(rhs.ctx == in.ctx)) {
        err << "error: --with module lives in " << rhs.ctx.to_string()
            << ", expected " << in.ctx.to_string() << "\n";
        return kExitInputError;
      }
      PresentedModule res = opt.functor == "hom"
                                ? hom_module(in.module, rhs.module)
                                : tensor_module(in.module, rhs.module);
      j["invariant_factors"] = res.invariants().to_string(R);
      if (opt.format == "structured") out << j.dump(2) << "\n";
      else out << opt.functor << ": invariant factors "
               << res.invariants().to_string(R) << "\n";
      return kExitPass;
    }
    if (opt.functor == "localize") {
      if (!opt.prime) {
        err << "error: --prime ELEMENT is required for localize\n";
        return kExitInputError;
      }
      Element p = parse_element_token(R, *opt.prime);
      LocalizedModule L = localize(in.module, p);
      j["prime"] = R.to_string(L.prime);
      j["free_rank"] = L.free_rank;
      j["exponents"] = L.exponents;
      if (opt.format == "structured") out << j.dump(2) << "\n";
      else {
        out << "localization at (" << R.to_string(L.prime)
            << "): free rank " << L.free_rank << ", exponents [";
        for (size_t i = 0; i < L.exponents.size(); ++i)
          out << (i ? ", " : "") << L.exponents[i];
        out << "]\n";
      }
      return kExitPass;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "error: unknown functor '" << opt.functor
      << "' (expected gamma, lambda, hom, tensor, localize)\n";
  return kExitInputError;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  if (!is_known_law(opt.law)) {
    err << "error: unknown law '" << opt.law << "'; known laws:";
    for (const auto& l : law_names()) err << " " << l;
    err << "\n";
    return kExitInputError;
  }
  CampaignConfig cfg;
  cfg.law = opt.law;
  cfg.seed = opt.seed;
  cfg.case_count = opt.count;
  cfg.oracle_bound = Int(opt.max_size);
  if (opt.profile == "small") {
    cfg.profile.max_generators = 3;
    cfg.profile.max_entry = 12;
    cfg.profile.max_degree = 2;
  } else if (opt.profile == "large") {
    cfg.profile.max_generators = 5;
    cfg.profile.max_entry = 40;
    cfg.profile.max_degree = 4;
  } else if (opt.profile != "default") {
    err << "error: unknown profile '" << opt.profile << "'\n";
    return kExitInputError;
  }
  try {
    for (const std::string& token : opt.contexts)
      cfg.contexts.push_back(parse_context_token(token));
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  Report rep = run_campaign(cfg);
  if (opt.format == "structured") {
    out << report_json(rep).dump(2) << "\n";
  } else {
    out << "law " << rep.law << ": " << rep.cases_run << " cases, "
        << rep.violations.size() << " violations, "
        << rep.oracle_cross_checks << " oracle cross-checks, "
        << rep.runtime_seconds << " s\n";
    for (const auto& v : rep.violations) {
      out << "  VIOLATION [case " << v.case_index << "] " << v.case_desc << "\n"
          << "    expected: " << v.expected << "\n"
          << "    got:      " << v.got << "\n";
      if (!v.witness.empty()) out << "    witness:  " << v.witness << "\n";
    }
  }
  return rep.pass() ? kExitPass : kExitViolations;
}

}  // namespace fpm::cli
