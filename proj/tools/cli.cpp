#include "cli.hpp"

#include <cstdio>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dioph/asymptotics.hpp"
#include "dioph/characters.hpp"
#include "dioph/parallel.hpp"
#include "dioph/shparlinski.hpp"
#include "dioph/tuple_count.hpp"

namespace dioph::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "dioph 1.0.0";

json json_count(Int128 v) {
  if (fits_int64(v)) return json(std::int64_t(v));
  return json(to_string(v));  // decimal string once past 64 bits
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct CommonOpts {
  std::string field_literal;
  std::vector<std::uint64_t> f_coeffs;
  unsigned d = 2;
  unsigned m = 2;
  bool strict_nonzero = false;
  std::uint64_t cost_cap = kDefaultCostCap;
  unsigned threads = hardware_threads();
};

ProblemSpec make_problem(const CommonOpts& o) {
  FieldSpec F = parse_field_literal(o.field_literal);
  Polynomial f = poly_from_encodings(F, o.f_coeffs);
  return ProblemSpec::make(std::move(F), std::move(f), o.d, o.m, !o.strict_nonzero, o.cost_cap);
}

EpsilonVector parse_eps(const ProblemSpec& ps, const std::string& bits) {
  return EpsilonVector::parse(bits, ps.family_size());
}

void add_common(CLI::App* sub, CommonOpts& o, bool with_dm = true) {
  sub->add_option("--field", o.field_literal, "field literal: p | p^k | p^k:c0,...,ck")
      ->required();
  sub->add_option("--f", o.f_coeffs, "polynomial, ascending coefficient encodings (e.g. 1,1)")
      ->required()
      ->delimiter(',');
  if (with_dm) {
    sub->add_option("--d", o.d, "product arity d")->required();
    sub->add_option("--m", o.m, "tuple size m")->required();
  }
  sub->add_flag("--strict-nonzero", o.strict_nonzero,
                "count only nonzero quadratic residues as squares");
  sub->add_option("--cost-cap", o.cost_cap, "enumeration cost cap on q^m");
  sub->add_option("--threads", o.threads, "worker threads (default: hardware)");
}

int finish(std::ostream& out, const json& j, bool property_ok, std::ostream& err,
           const std::string& violation) {
  out << j.dump() << "\n";
  if (!property_ok) {
    err << "E:PropertyViolated: " << violation << "\n";
    return int(error_class::property);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact counting of generalized Diophantine tuples over finite fields"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOpts o;

  auto* c_count = app.add_subcommand("count", "brute-force tuple count N with main term");
  add_common(c_count, o);

  auto* c_cardd = app.add_subcommand("cardD", "Card(D), Card(D*) and the epsilon-sum identity");
  add_common(c_cardd, o);

  std::string eps_bits;
  auto* c_reps = app.add_subcommand("repsilon", "character sum R(epsilon)");
  add_common(c_reps, o);
  c_reps->add_option("--epsilon", eps_bits, "0/1 bitstring over the lexicographic d-subsets")
      ->required();

  auto* c_avg = app.add_subcommand("repsilon-avg", "R(epsilon) via the b-averaged identity");
  add_common(c_avg, o);
  c_avg->add_option("--epsilon", eps_bits, "0/1 bitstring over the lexicographic d-subsets")
      ->required();

  unsigned weil_order = 2;
  auto* c_weil = app.add_subcommand("weil", "complete character sum and Weil bound check");
  add_common(c_weil, o, false);
  c_weil->add_option("--order", weil_order, "character order e | q-1 (default 2)");

  int fuzz_trials = 200;
  std::uint64_t fuzz_seed = 1;
  unsigned fuzz_threads = hardware_threads();
  auto* c_fuzz = app.add_subcommand("weil-fuzz", "randomized Weil bound verification");
  c_fuzz->add_option("--trials", fuzz_trials, "number of random polynomials (default 200)");
  c_fuzz->add_option("--seed", fuzz_seed, "RNG seed (default 1)");
  c_fuzz->add_option("--threads", fuzz_threads, "worker threads");

  auto* c_degen = app.add_subcommand("degeneracy", "degenerate parameter sets for F and G");
  add_common(c_degen, o);
  c_degen->add_option("--epsilon", eps_bits, "0/1 bitstring, weight >= 2")->required();

  std::string fields_csv, mode_str = "cardD", out_format = "csv";
  auto* c_scaling = app.add_subcommand("scaling", "error-term scan across field sizes");
  c_scaling->add_option("--fields", fields_csv, "comma-separated field literals (p or p^k)")
      ->required();
  c_scaling->add_option("--f", o.f_coeffs, "polynomial coefficient encodings")
      ->required()
      ->delimiter(',');
  c_scaling->add_option("--d", o.d, "product arity d")->required();
  c_scaling->add_option("--m", o.m, "tuple size m")->required();
  c_scaling->add_option("--mode", mode_str, "N | cardD (default cardD)");
  c_scaling->add_option("--out", out_format, "csv | json (default csv)");
  c_scaling->add_flag("--strict-nonzero", o.strict_nonzero, "strict square convention for N");
  c_scaling->add_option("--cost-cap", o.cost_cap, "enumeration cost cap on q^m");
  c_scaling->add_option("--threads", o.threads, "worker threads");

  std::string nx_field;
  unsigned nx_d = 2;
  std::uint64_t nx_cap = kDefaultCostCap;
  unsigned nx_threads = hardware_threads();
  auto* c_nx = app.add_subcommand("nx", "product-count N(x): closed form vs enumeration");
  c_nx->add_option("--field", nx_field, "field literal")->required();
  c_nx->add_option("--d", nx_d, "product arity d")->required();
  c_nx->add_option("--cost-cap", nx_cap, "cap on q^d for the direct check");
  c_nx->add_option("--threads", nx_threads, "worker threads");

  std::string info_field;
  auto* c_info = app.add_subcommand("field-info", "field parameters and generator");
  c_info->add_option("--field", info_field, "field literal")->required();

  std::vector<const char*> argv;
  argv.push_back("dioph");
  for (auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help() << "\n";
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All) << "\n";
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "E:Usage: " << e.what() << "\n";
    return int(error_class::validation);
  }

  try {
    if (c_count->parsed()) {
      auto ps = make_problem(o);
      Int128 n = count_tuples_bruteforce(ps, o.threads);
      Rational main = main_term(ps.q(), ps.m, ps.d);
      json j;
      j["N"] = json_count(n);
      j["main_term"] = to_string(main);
      j["error"] = to_string(Rational(n) - main);
      out << j.dump() << "\n";
      return 0;
    }
    if (c_cardd->parsed()) {
      auto ps = make_problem(o);
      Int128 d_count = card_D(ps, o.threads);
      Int128 d_star = card_D_star(ps, o.threads);
      Int128 qm = ipow128(ps.q(), ps.m);
      bool identity_ok = (d_count == qm + r_epsilon_total(ps, o.threads));
      json j;
      j["card_D"] = json_count(d_count);
      j["card_D_star"] = json_count(d_star);
      j["identity_ok"] = identity_ok;
      return finish(out, j, identity_ok, err, "card_D != q^m + sum R(epsilon)");
    }
    if (c_reps->parsed()) {
      auto ps = make_problem(o);
      auto eps = parse_eps(ps, eps_bits);
      json j;
      j["weight"] = eps.weight();
      if (eps.weight() == 1) {
        auto rep = weight1_bound_check(ps, eps, o.threads);
        j["R"] = json_count(rep.r);
        j["bound"] = rep.bound;
        j["satisfied"] = rep.satisfied;
        return finish(out, j, rep.satisfied, err, "|R| exceeded the weight-1 bound");
      }
      j["R"] = json_count(r_epsilon(ps, eps, o.threads));
      out << j.dump() << "\n";
      return 0;
    }
    if (c_avg->parsed()) {
      auto ps = make_problem(o);
      auto eps = parse_eps(ps, eps_bits);
      Int128 direct = r_epsilon(ps, eps, o.threads);
      auto avg = r_epsilon_averaged(ps, eps, o.threads);
      json j;
      j["R"] = json_count(direct);
      j["R_avg"] = json_count(avg.value);
      j["difference"] = json_count(direct - avg.value);
      j["weight"] = eps.weight();
      return finish(out, j, direct == avg.value, err,
                    "averaged identity mismatch (implementation bug)");
    }
    if (c_weil->parsed()) {
      FieldSpec F = parse_field_literal(o.field_literal);
      Polynomial f = poly_from_encodings(F, o.f_coeffs);
      Character chi = Character::of_order(F, weil_order);
      auto rep = weil_check(F, f, chi, o.threads);
      json j;
      j["q"] = F.q();
      j["deg"] = f.degree();
      j["sum_counts"] = rep.sum.counts;
      j["zeros"] = rep.sum.zeros;
      j["magnitude"] = rep.magnitude;
      j["bound"] = rep.bound;
      j["satisfied"] = rep.satisfied;
      return finish(out, j, rep.satisfied, err, "Weil bound violated (implementation bug)");
    }
    if (c_fuzz->parsed()) {
      auto rep = weil_fuzz(fuzz_seed, fuzz_trials, fuzz_threads);
      json j;
      j["trials"] = rep.trials;
      j["violations"] = rep.violations;
      j["worst_ratio"] = rep.worst_ratio;
      j["seed"] = rep.seed;
      return finish(out, j, rep.violations == 0, err, "Weil bound violations in fuzz run");
    }
    if (c_degen->parsed()) {
      auto ps = make_problem(o);
      auto eps = parse_eps(ps, eps_bits);
      auto rep = scan_degenerate(ps, eps, o.threads);
      auto family = enumerate_family(ps.m, ps.d);
      auto subsets_of = [&](const std::vector<std::size_t>& idxs) {
        json arr = json::array();
        for (auto jdx : idxs) {
          json s = json::array();
          for (auto i : family[jdx]) s.push_back(i + 1);  // 1-based like the docs
          arr.push_back(s);
        }
        return arr;
      };
      json j;
      j["card_D_set"] = json_count(rep.card_D_set);
      j["card_E_set"] = json_count(rep.card_E_set);
      j["ratio_D"] = rep.ratio_D;
      j["ratio_E"] = rep.ratio_E;
      j["witness_F_excluded"] = rep.witness_F_excluded;
      j["witness_G_excluded"] = rep.witness_G_excluded;
      j["pivot"] = rep.split.pivot + 1;
      j["B"] = subsets_of(rep.split.b_subsets);
      j["C"] = subsets_of(rep.split.c_subsets);
      out << j.dump() << "\n";
      return 0;
    }
    if (c_scaling->parsed()) {
      std::vector<FieldSpec> fields;
      for (auto& tok : [&] {
             std::vector<std::string> toks;
             std::string cur;
             for (char ch : fields_csv + ",") {
               if (ch == ',') {
                 if (!cur.empty()) toks.push_back(cur);
                 cur.clear();
               } else {
                 cur.push_back(ch);
               }
             }
             return toks;
           }()) {
        fields.push_back(parse_field_literal(tok));
      }
      ScalingMode mode;
      if (mode_str == "N")
        mode = ScalingMode::N;
      else if (mode_str == "cardD")
        mode = ScalingMode::CardD;
      else
        raise(errc::invalid_argument, "mode must be N or cardD");
      auto rep = scaling_study(fields, o.f_coeffs, o.d, o.m, mode, !o.strict_nonzero,
                               o.cost_cap, o.threads);
      const char* branch = rep.deg1_branch ? "deg1" : "degGE2";
      if (out_format == "json") {
        json rows = json::array();
        for (auto& r : rep.rows) {
          json row;
          row["q"] = r.q;
          row["measured"] = json_count(r.measured);
          row["main_term"] = to_string(r.main);
          row["error"] = to_string(r.error);
          row["abs_error"] = r.abs_error;
          rows.push_back(row);
        }
        json j;
        j["rows"] = rows;
        j["fitted_exponent"] = rep.fitted_exponent;
        j["fit_residual"] = rep.fit_residual;
        j["branch"] = branch;
        j["theoretical_exponent"] = rep.theoretical_exponent;
        j["dropped_zero_rows"] = rep.dropped_zero_rows;
        out << j.dump() << "\n";
      } else if (out_format == "csv") {
        out << "q,measured,main_term_num,main_term_den,error,abs_error\n";
        for (auto& r : rep.rows) {
          out << r.q << "," << to_string(r.measured) << "," << to_string(r.main.num) << ","
              << to_string(r.main.den) << "," << to_string(r.error) << ","
              << fmt_double(r.abs_error) << "\n";
        }
        out << "fitted_exponent," << fmt_double(rep.fitted_exponent) << "\n";
        out << "branch," << branch << "\n";
        out << "theoretical_exponent," << fmt_double(rep.theoretical_exponent) << "\n";
      } else {
        raise(errc::invalid_argument, "out format must be csv or json");
      }
      return 0;
    }
    if (c_nx->parsed()) {
      FieldSpec F = parse_field_literal(nx_field);
      auto rep = n_x_counts(F, nx_d, nx_cap, nx_threads);
      json j;
      j["q"] = rep.q;
      j["d"] = rep.d;
      j["n_zero"] = json_count(rep.n_zero);
      j["n_nonzero"] = json_count(rep.n_nonzero);
      j["direct_checked"] = rep.direct_checked;
      out << j.dump() << "\n";
      return 0;
    }
    if (c_info->parsed()) {
      FieldSpec F = parse_field_literal(info_field);
      json j;
      j["p"] = F.p();
      j["k"] = F.k();
      j["q"] = F.q();
      j["modulus"] = F.modulus();
      if (F.q() <= kDefaultGeneratorCap)
        j["generator"] = find_generator(F);
      else
        j["generator"] = nullptr;
      out << j.dump() << "\n";
      return 0;
    }
  } catch (const Error& e) {
    err << "E:" << e.code_name() << ": " << e.what() << "\n";
    return int(e.cls());
  } catch (const std::exception& e) {
    err << "E:Internal: " << e.what() << "\n";
    return 1;
  }
  err << "E:Usage: no subcommand given\n";
  return int(error_class::validation);
}

}  // namespace dioph::cli
