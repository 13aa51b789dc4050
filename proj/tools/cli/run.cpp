#include <CLI11.hpp>
#include <chrono>
#include <json.hpp>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "flatlab/catalog.hpp"
#include "flatlab/equiv.hpp"
#include "flatlab/errors.hpp"
#include "flatlab/gf2n.hpp"
#include "flatlab/walsh.hpp"

#ifndef FLATLAB_VERSION
#define FLATLAB_VERSION "unknown"
#endif

namespace flatlab::cli {

namespace {

using json = nlohmann::json;

struct Flags {
  std::string fn;
  std::string family;
  std::vector<std::string> params;
  int n = -1;
  int m = -1;
  int k = -1;
  std::string mode = "auto";
  std::string modulus;
  unsigned threads = 1;
  bool csv = false;
  bool timing = false;
  bool list = false;
  bool spectrum = false;
  bool force = false;
  int trials = 10;
  std::uint64_t seed = 1;
  std::string battery;
  std::string action;
};

std::string big(const BigInt& v) { return to_decimal(v); }

json subspace_json(const SubspaceRref& u) {
  json basis = json::array();
  for (Word r : u.rows()) basis.push_back(BitVector(u.n(), r).to_string());
  return basis;
}

json flat_json(const Flat& a) { return {{"basis", subspace_json(a.subspace)}, {"rep", a.rep.to_string()}}; }

std::string anf_text(const VectorialFn& f) {
  std::string out;
  for (int j = 0; j < f.m(); ++j) {
    if (j > 0) out += "; ";
    out += to_string(f.coord(j));
  }
  return out;
}

CountMethod parse_mode(const std::string& s) {
  if (s == "brute") return CountMethod::brute;
  if (s == "rank") return CountMethod::rank;
  if (s == "closed-form") return CountMethod::closed_form;
  if (s == "walsh") return CountMethod::walsh;
  throw UsageError("unknown mode '" + s + "' (auto, brute, rank, closed-form, walsh)");
}

std::uint64_t parse_budget(const std::string& text) {
  std::uint64_t v = 0;
  std::size_t used = 0;
  try {
    v = std::stoull(text, &used, 10);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v == 0) throw UsageError("FLATLAB_BUDGET must be a positive integer");
  return v;
}

std::optional<std::uint32_t> parse_modulus(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used, 16);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) throw UsageError("--modulus must be a hex bit mask, e.g. 0x25");
  return static_cast<std::uint32_t>(v);
}

class Runner {
 public:
  Runner(const Flags& flags, std::optional<std::string> budget_env) : flags_(flags) {
    opts_.threads = std::max(1U, flags.threads);
    if (budget_env) opts_.budget = parse_budget(*budget_env);
  }

  ParsedFunction function() const {
    std::string spec = flags_.fn;
    if (!flags_.family.empty()) {
      if (!spec.empty()) throw UsageError("give either --fn or --family, not both");
      spec = "family:" + flags_.family + "(";
      for (std::size_t i = 0; i < flags_.params.size(); ++i) spec += (i > 0 ? "," : "") + flags_.params[i];
      spec += ")";
    }
    if (spec.empty()) throw UsageError("no function given (--fn or --family)");
    const auto n = flags_.n >= 0 ? std::optional<int>(flags_.n) : std::nullopt;
    const auto m = flags_.m >= 0 ? std::optional<int>(flags_.m) : std::nullopt;
    return parse_function(spec, n, m, parse_modulus(flags_.modulus));
  }

  int require_k() const {
    if (flags_.k < 0) throw UsageError("--k is required");
    return flags_.k;
  }

  json function_inputs(const ParsedFunction& p) const {
    json in{{"n", p.fn.n()}, {"m", p.fn.m()}, {"kind", p.kind}};
    in["fn"] = flags_.family.empty() ? flags_.fn : "family:" + flags_.family;
    if (!flags_.params.empty()) in["params"] = flags_.params;
    if (p.kind == "anf") in["anf"] = anf_text(p.fn);
    if (!flags_.modulus.empty()) in["modulus"] = flags_.modulus;
    return in;
  }

  json count(json& inputs, std::string& csv) const {
    const ParsedFunction p = function();
    const int k = require_k();
    inputs = function_inputs(p);
    inputs["k"] = k;
    inputs["mode"] = flags_.mode;
    CountMethod method = CountMethod::brute;
    if (flags_.mode == "auto") {
      method = applicable_modes(p.fn, k).front();
    } else {
      method = parse_mode(flags_.mode);
    }
    EngineOptions opts = opts_;
    opts.collect_listing = flags_.list;
    const CountOutcome c = count_with(p.fn, k, method, opts);
    const NonvanishingReport& r = c.report;
    json res{{"method", to_string(r.method)},
             {"flat_count", big(r.flat_count)},
             {"total_flats", big(flat_total(r.n, r.k))},
             {"is_sum_free", r.is_sum_free},
             {"lower_terms_stripped", c.stripped_lower_terms}};
    res["subspace_count"] = c.subspace_count_known ? json(big(r.subspace_count)) : json(nullptr);
    if (!p.warnings.empty()) res["warnings"] = p.warnings;
    if (flags_.list) {
      if (r.subspace_listing) {
        json l = json::array();
        for (const auto& u : *r.subspace_listing) l.push_back(subspace_json(u));
        res["subspace_listing"] = l;
      } else if (r.flat_listing) {
        json l = json::array();
        for (const auto& a : *r.flat_listing) l.push_back(flat_json(a));
        res["flat_listing"] = l;
      } else {
        res["listing"] = nullptr;
      }
    }
    if (flags_.csv) {
      std::ostringstream os;
      os << "n,m,k,method,subspace_count,flat_count,total_flats,is_sum_free\n"
         << r.n << ',' << p.fn.m() << ',' << r.k << ',' << to_string(r.method) << ','
         << (c.subspace_count_known ? big(r.subspace_count) : "") << ',' << big(r.flat_count) << ','
         << big(flat_total(r.n, r.k)) << ',' << (r.is_sum_free ? "true" : "false") << '\n';
      csv = os.str();
    }
    return res;
  }

  json sumfree(json& inputs) const {
    const ParsedFunction p = function();
    const int k = require_k();
    inputs = function_inputs(p);
    inputs["k"] = k;
    const SumFreeResult s = check_sum_free(p.fn, k, opts_);
    json res{{"is_sum_free", s.sum_free}, {"path", s.path}};
    res["vanishing_flat"] = s.witness ? flat_json(*s.witness) : json(nullptr);
    if (!p.warnings.empty()) res["warnings"] = p.warnings;
    return res;
  }

  json walsh(json& inputs) const {
    const ParsedFunction p = function();
    inputs = function_inputs(p);
    const VectorialSpectrum vs = vectorial_spectrum(p.fn);
    json res{{"nonlinearity", nonlinearity(p.fn)},
             {"max_abs_walsh", vs.max_abs()},
             {"fourth_power_sum", big(vs.fourth_power_sum())},
             {"nonvanishing_2flats", big(count_nonvanishing_2flats_walsh(p.fn.n(), p.fn.m(), vs.fourth_power_sum()))}};
    res["class"] = p.fn.m() == 1 ? json(to_string(classify(vs.components[0]))) : json(nullptr);
    if (flags_.spectrum) {
      json comps = json::array();
      for (const auto& c : vs.components) comps.push_back(c.values);
      res["spectrum"] = comps;
    }
    return res;
  }

  json complement(json& inputs) const {
    const ParsedFunction p = function();
    inputs = function_inputs(p);
    const VectorialFn c = vect_complement(p.fn);
    std::vector<std::string> coords;
    for (const auto& poly : c.coords()) coords.push_back(to_string(poly));
    return {{"complement", anf_text(c)},
            {"coordinates", coords},
            {"degree", algebraic_degree(p.fn)},
            {"complement_degree", algebraic_degree(c)}};
  }

  json dual_check(json& inputs) const {
    const ParsedFunction p = function();
    if (p.fn.m() != 1) throw UsageError("dual-check takes a single-output function");
    const AnfPoly& f = p.fn.coord(0);
    const int k = flags_.k >= 0 ? flags_.k : algebraic_degree(f);
    inputs = function_inputs(p);
    inputs["k"] = k;
    inputs["force"] = flags_.force;
    json res{{"subspaces_checked", big(gaussian_binomial(f.n(), k))}, {"homogeneous", is_homogeneous(f, k)}};
    if (flags_.force) {
      const auto v = find_duality_violation(f, k, opts_);
      res["holds"] = !v.has_value();
      res["violation"] = v ? subspace_json(*v) : json(nullptr);
    } else {
      res["holds"] = duality_check(f, k, opts_);
    }
    return res;
  }

  json catalog(json& inputs) const {
    if (flags_.action != "list") throw UsageError("catalog supports: list");
    inputs = json::object();
    json entries = json::array();
    for (const auto& e : catalog_entries()) {
      entries.push_back({{"name", e.name}, {"params", e.params}, {"description", e.description}});
    }
    return {{"entries", entries}};
  }

  json verify(json& inputs, bool& passed) const;

 private:
  int n_or(int fallback) const { return flags_.n >= 0 ? flags_.n : fallback; }
  int k_or(int fallback) const { return flags_.k >= 0 ? flags_.k : fallback; }
  int m_or(int fallback) const { return flags_.m >= 0 ? flags_.m : fallback; }

  const Flags& flags_;
  EngineOptions opts_;
};

VectorialFn random_values(std::mt19937_64& rng, int n, int m) {
  std::vector<std::uint32_t> values(std::size_t{1} << n);
  for (auto& v : values) v = static_cast<std::uint32_t>(rng() & low_mask(m));
  return VectorialFn::from_values(n, m, std::move(values));
}

AnfPoly random_homogeneous(std::mt19937_64& rng, int n, int k) {
  std::vector<Word> masks;
  for (Word mask = 0; mask < (Word{1} << n); ++mask) {
    if (std::popcount(mask) == k && (rng() & 1U)) masks.push_back(mask);
  }
  return AnfPoly(n, std::move(masks));
}

json Runner::verify(json& inputs, bool& passed) const {
  const std::string& b = flags_.battery;
  json items = json::array();
  auto item = [&](std::string name, bool ok, json detail) {
    items.push_back({{"name", std::move(name)}, {"pass", ok}, {"detail", std::move(detail)}});
  };
  inputs = {{"battery", b}, {"seed", flags_.seed}, {"trials", flags_.trials}};
  if (flags_.trials < 0) throw UsageError("--trials must be non-negative");
  const auto trials = static_cast<std::uint64_t>(flags_.trials);

  if (b == "eq1-counts") {
    const int n_max = n_or(8);
    if (n_max < 1 || n_max > 10) throw UsageError("eq1-counts takes --n in 1..10");
    inputs["n"] = n_max;
    for (int n = 1; n <= n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        std::uint64_t subspaces = 0;
        BigInt flats = 0;
        for_each_subspace(
            n, k, [&](const SubspaceRref&) { ++subspaces; }, opts_.budget);
        flats = BigInt(subspaces) << static_cast<unsigned>(n - k);
        std::uint64_t cosets = 0;
        if (n <= 8) {
          for_each_flat(n, k, [&](const SubspaceRref&, Word) { ++cosets; });
          flats = cosets;
        }
        const bool ok = gaussian_binomial(n, k) == subspaces && flat_total(n, k) == flats;
        item("n=" + std::to_string(n) + ",k=" + std::to_string(k), ok,
             {{"enumerated_subspaces", std::to_string(subspaces)},
              {"gaussian_binomial", big(gaussian_binomial(n, k))},
              {"enumerated_flats", big(flats)},
              {"flat_total", big(flat_total(n, k))}});
      }
    }
  } else if (b == "thm1-vs-brute") {
    const int n = n_or(5);
    const int m = m_or(1);
    inputs["n"] = n;
    inputs["m"] = m;
    for (std::uint64_t t = 0; t < trials; ++t) {
      std::mt19937_64 rng(flags_.seed + t);
      const VectorialFn f = random_values(rng, n, m);
      const BigInt spectral = count_nonvanishing_2flats_walsh(f);
      const BigInt brute = count_nonvanishing_flats_brute(f, 2, opts_).flat_count;
      item("trial " + std::to_string(t), spectral == brute, {{"walsh", big(spectral)}, {"brute", big(brute)}});
    }
  } else if (b == "eq5-vs-brute") {
    const int n_max = n_or(6);
    const int k_max = k_or(3);
    inputs["n"] = n_max;
    inputs["k"] = k_max;
    for (int n = 2; n <= n_max; ++n) {
      for (int k = 1; k <= k_max; ++k) {
        for (int d = 0; d < k; ++d) {
          for (int t = 1; t <= 3; ++t) {
            if (!d_intersecting_feasible(n, k, d, t)) continue;
            const AnfPoly w = d_intersecting_witness(n, k, d, t);
            const BigInt formula = d_intersecting_count(n, k, d, t);
            const BigInt brute = count_nonvanishing_flats_brute(VectorialFn::boolean(w), k, opts_).subspace_count;
            item("n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",d=" + std::to_string(d) +
                     ",t=" + std::to_string(t),
                 formula == brute, {{"witness", to_string(w)}, {"formula", big(formula)}, {"brute", big(brute)}});
          }
        }
      }
    }
  } else if (b == "duality") {
    const int n = n_or(6);
    const int k = k_or(2);
    inputs["n"] = n;
    inputs["k"] = k;
    for (std::uint64_t t = 0; t < trials; ++t) {
      std::mt19937_64 rng(flags_.seed + t);
      const AnfPoly f = random_homogeneous(rng, n, k);
      item("trial " + std::to_string(t), duality_check(f, k, opts_), {{"f", to_string(f)}});
    }
  } else if (b == "cor5-invariance") {
    const int n = n_or(5);
    const int k = k_or(2);
    const int m = m_or(3);
    inputs["n"] = n;
    inputs["k"] = k;
    inputs["m"] = m;
    if (k < 1) throw UsageError("cor5-invariance needs k >= 1");
    for (std::uint64_t t = 0; t < trials; ++t) {
      std::mt19937_64 rng(flags_.seed + t);
      const VectorialFn f = random_values(rng, n, m);
      const VectorialFn g = apply_equivalence(f, random_degree_r_equivalence(n, m, k - 1, flags_.seed + t));
      const BigInt before = count_nonvanishing_flats_brute(f, k, opts_).flat_count;
      const BigInt after = count_nonvanishing_flats_brute(g, k, opts_).flat_count;
      item("trial " + std::to_string(t), before == after, {{"before", big(before)}, {"after", big(after)}});
    }
  } else if (b == "thm5-transfer") {
    const int n = n_or(5);
    inputs["n"] = n;
    if (n < 3) throw UsageError("thm5-transfer needs n >= 3");
    const VectorialFn quad = homogeneous_part(power_map(FieldSpec(n), 3), 2);
    const VectorialFn comp = sum_free_complement(quad, 2);
    const NonvanishingReport apn = count_nonvanishing_flats_brute(quad, 2, opts_);
    const NonvanishingReport high = count_nonvanishing_flats_brute(comp, n - 2, opts_);
    item("gold quadratic part is APN", apn.is_sum_free, {{"flat_count", big(apn.flat_count)}});
    item("complement is " + std::to_string(n - 2) + "th-order sum-free", high.is_sum_free,
         {{"flat_count", big(high.flat_count)}, {"complement", anf_text(comp)}});
    for (std::uint64_t t = 0; t < trials; ++t) {
      std::mt19937_64 rng(flags_.seed + t);
      std::vector<AnfPoly> coords;
      for (int j = 0; j < n; ++j) coords.push_back(random_homogeneous(rng, n, 2));
      const VectorialFn f(std::move(coords));
      const bool lhs = count_nonvanishing_flats_brute(f, 2, opts_).is_sum_free;
      const bool rhs = count_nonvanishing_flats_brute(vect_complement(f), n - 2, opts_).is_sum_free;
      item("random trial " + std::to_string(t), lhs == rhs, {{"sum_free", lhs}, {"complement_sum_free", rhs}});
    }
  } else {
    throw UsageError("unknown battery '" + b +
                     "' (eq1-counts, thm1-vs-brute, eq5-vs-brute, duality, cor5-invariance, thm5-transfer)");
  }

  std::size_t failures = 0;
  for (const auto& it : items) failures += it["pass"].get<bool>() ? 0 : 1;
  passed = failures == 0;
  return {{"battery", b}, {"items", items}, {"failures", failures}, {"passed", passed}};
}

void add_function_options(CLI::App* cmd, Flags& f) {
  cmd->add_option("--fn", f.fn, "ANF (';' between coordinates), pow(n=..,e=..), inv(n=..) or family:NAME(k=v,...)");
  cmd->add_option("--family", f.family, "catalog entry name");
  cmd->add_option("--param", f.params, "catalog parameters key=value")->delimiter(',');
  cmd->add_option("--n", f.n, "number of input variables");
  cmd->add_option("--m", f.m, "number of output coordinates");
  cmd->add_option("--modulus", f.modulus, "field modulus as a hex bit mask");
}

void add_engine_options(CLI::App* cmd, Flags& f) {
  cmd->add_option("--threads", f.threads, "worker threads (results do not depend on this)");
  cmd->add_flag("--timing", f.timing, "include wall-clock time in the report");
}

}  // namespace

Outcome run(const std::vector<std::string>& args, std::optional<std::string> budget_env) {
  Flags flags;
  CLI::App app{"flatlab: nonvanishing flats of Boolean and vectorial functions"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "count nonvanishing k-subspaces and k-flats");
  add_function_options(count, flags);
  add_engine_options(count, flags);
  count->add_option("--k", flags.k, "flat dimension");
  count->add_option("--mode", flags.mode, "auto, brute, rank, closed-form or walsh");
  count->add_flag("--csv", flags.csv, "emit a CSV row instead of JSON");
  count->add_flag("--list", flags.list, "include the nonvanishing subspaces or flats");

  auto* sumfree = app.add_subcommand("sumfree", "decide kth-order sum-freeness");
  add_function_options(sumfree, flags);
  add_engine_options(sumfree, flags);
  sumfree->add_option("--k", flags.k, "flat dimension");

  auto* walsh = app.add_subcommand("walsh", "Walsh spectrum summary");
  add_function_options(walsh, flags);
  add_engine_options(walsh, flags);
  walsh->add_flag("--spectrum", flags.spectrum, "include every component spectrum");

  auto* comp = app.add_subcommand("complement", "complement every monomial of every coordinate");
  add_function_options(comp, flags);
  add_engine_options(comp, flags);

  auto* dual = app.add_subcommand("dual-check", "check U in N_k(f) <=> U^perp in N_{n-k}(complement of f)");
  add_function_options(dual, flags);
  add_engine_options(dual, flags);
  dual->add_option("--k", flags.k, "subspace dimension (default: degree of f)");
  dual->add_flag("--force", flags.force, "run on non-homogeneous input and report the first violation");

  auto* verify = app.add_subcommand("verify", "run a named verification battery");
  add_engine_options(verify, flags);
  verify->add_option("battery", flags.battery, "eq1-counts, thm1-vs-brute, eq5-vs-brute, duality, cor5-invariance, thm5-transfer")
      ->required();
  verify->add_option("--n", flags.n, "dimension");
  verify->add_option("--k", flags.k, "flat dimension");
  verify->add_option("--m", flags.m, "output coordinates");
  verify->add_option("--trials", flags.trials, "random trials");
  verify->add_option("--seed", flags.seed, "base seed");

  auto* cat = app.add_subcommand("catalog", "named reference functions");
  cat->add_option("action", flags.action, "list")->required();

  Outcome out;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out.out = app.help();
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_code = kExitUsage;
    out.err = std::string("flatlab: error: ") + e.what() + "\n";
    return out;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  try {
    const auto start = std::chrono::steady_clock::now();
    Runner runner(flags, budget_env);
    json inputs;
    json results;
    std::string csv;
    bool passed = true;
    if (command == "count") {
      results = runner.count(inputs, csv);
    } else if (command == "sumfree") {
      results = runner.sumfree(inputs);
    } else if (command == "walsh") {
      results = runner.walsh(inputs);
    } else if (command == "complement") {
      results = runner.complement(inputs);
    } else if (command == "dual-check") {
      results = runner.dual_check(inputs);
    } else if (command == "verify") {
      results = runner.verify(inputs, passed);
    } else {
      results = runner.catalog(inputs);
    }
    if (!csv.empty()) {
      out.out = csv;
      return out;
    }
    json report{{"command", command}, {"inputs", inputs}, {"results", results}, {"version", FLATLAB_VERSION}};
    if (flags.timing) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      report["timing"] = {{"seconds", elapsed.count()}};
    }
    out.out = report.dump(2) + "\n";
    out.exit_code = passed ? kExitOk : kExitVerifyFailed;
  } catch (const CapacityError& e) {
    out.exit_code = kExitCapacity;
    out.err = std::string("flatlab: capacity: ") + e.what() + "\n";
  } catch (const UsageError& e) {
    out.exit_code = kExitUsage;
    out.err = std::string("flatlab: error: ") + e.what() + "\n";
  } catch (const DomainError& e) {
    out.exit_code = kExitUsage;
    out.err = std::string("flatlab: error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    out.exit_code = kExitInternal;
    out.err = std::string("flatlab: internal error: ") + e.what() + "\n";
  }
  return out;
}

}  // namespace flatlab::cli
