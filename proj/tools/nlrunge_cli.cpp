#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nlrunge/bounds.hpp"
#include "nlrunge/certify.hpp"
#include "nlrunge/descent.hpp"
#include "nlrunge/series.hpp"

using namespace nlrunge;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitExceptions = 2;
constexpr int kExitInconsistent = 3;

std::string join_args(int argc, char** argv) {
  std::ostringstream ss;
  for (int i = 0; i < argc; ++i) ss << (i ? " " : "") << argv[i];
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(out_path);
    f << text << "\n";
  }
}

json params_json(const RungeParams& p) {
  json j;
  j["variant"] = variant_name(p.variant);
  j["q"] = p.q;
  switch (p.variant) {
    case Variant::Thm2: j["r"] = p.r; j["s"] = p.s; break;
    case Variant::Thm3: j["p"] = p.p; break;
    case Variant::Sec5: j["p_prev"] = p.p_prev; j["p_last"] = p.p_last; break;
  }
  j["a"] = p.a;
  if (p.b) j["b"] = *p.b;
  j["N"] = p.N;
  j["m"] = p.m;
  return j;
}

json witness_json(const BoundValue& bv) {
  return json{{"additive_num", bv.additive().get_num().get_str()},
              {"additive_den", bv.additive().get_den().get_str()},
              {"coeff_num", bv.coeff().get_num().get_str()},
              {"coeff_den", bv.coeff().get_den().get_str()},
              {"base", bv.base()},
              {"exp_num", bv.exp_num()},
              {"exp_den", bv.exp_den()}};
}

int run_bound(const RungeParams& params, const std::string& format,
              const std::string& out) {
  json j = params_json(params);
  const BoundPair* bp = nullptr;
  BoundPair pair = params.variant == Variant::Thm2   ? bound_thm2(params)
                   : params.variant == Variant::Thm3 ? bound_thm3(params.p, params.q)
                                                     : BoundPair{params,
                                                                 BoundValue(0, 1, params.q, 0, 1),
                                                                 BoundValue(0, 1, params.q, 0, 1)};
  if (params.variant != Variant::Sec5) {
    bp = &pair;
    j["internal_bound_decimal"] = bp->internal_bound.decimal();
    j["theorem_bound_decimal"] = bp->theorem_bound.decimal();
    j["exact_witness"] = json{{"internal", witness_json(bp->internal_bound)},
                              {"theorem", witness_json(bp->theorem_bound)}};
  }
  if (format == "table") {
    std::ostringstream t;
    t << "variant        " << variant_name(params.variant) << "\n"
      << "q              " << params.q << "\n"
      << "a              " << params.a << "\n";
    if (params.b) t << "b              " << *params.b << "\n";
    t << "N              " << params.N << "\n"
      << "m              " << params.m << "\n";
    if (bp) {
      t << "internal bound " << bp->internal_bound.decimal() << "\n"
        << "theorem bound  " << bp->theorem_bound.decimal() << "\n"
        << "(exact test used internally)";
    }
    emit(t.str(), out);
  } else {
    emit(j.dump(2), out);
  }
  return kExitOk;
}

int run_series(const RungeParams& params, unsigned long M, const std::string& out) {
  auto setup = setup_from_params(params);
  auto coeffs = expand_coefficients(setup, M);
  std::ostringstream t;
  for (const auto& c : coeffs) {
    t << c.index << " " << c.value.get_num() << " " << c.value.get_den() << " ";
    if (c.q_valuation.is_infinite()) t << "inf";
    else t << c.q_valuation.value();
    t << " " << c.scaled_integer << "\n";
  }
  auto law = verify_valuation_law(setup, M);
  switch (law.status) {
    case LawStatus::Pass:
      t << "# valuation law: PASS (" << law.checked << " coefficients)";
      break;
    case LawStatus::NotApplicable:
      t << "# valuation law: NOT-APPLICABLE (q divides the (x-1)-factor exponent)";
      break;
    case LawStatus::Fail:
      t << "# valuation law: FAIL at n=" << law.first_failure;
      break;
  }
  emit(t.str(), out);
  return law.status == LawStatus::Fail ? kExitInconsistent : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for repunit perfect powers: Runge bounds, "
               "Laurent coefficients, descent towers and nonexistence certificates"};
  app.require_subcommand(1);
  std::string format = "json", out_path;
  app.add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  app.add_option("-o,--output", out_path, "write the report to a file");

  // bound
  auto* bound = app.add_subcommand("bound", "derive parameters and explicit bounds");
  bound->require_subcommand(1);
  unsigned long b_q = 5;
  long b_r = 3, b_s = 4, b_p = 3, b_pp = 5, b_pl = 7;
  auto* b2 = bound->add_subcommand("thm2");
  b2->add_option("--q", b_q)->required();
  b2->add_option("--r", b_r)->required();
  b2->add_option("--s", b_s)->required();
  auto* b3 = bound->add_subcommand("thm3");
  b3->add_option("--p", b_p)->required();
  b3->add_option("--q", b_q)->required();
  auto* b5 = bound->add_subcommand("sec5");
  b5->add_option("--p-prev", b_pp)->required();
  b5->add_option("--p-last", b_pl)->required();

  // certify
  auto* certify = app.add_subcommand("certify", "exhaustive Theorem-2 certification");
  unsigned long c_q = 5;
  long c_r = 3, c_s = 4;
  std::string c_bound = "theorem";
  unsigned c_workers = 1;
  long c_budget = 1000000000L;
  certify->add_option("--q", c_q)->required();
  certify->add_option("--r", c_r)->required();
  certify->add_option("--s", c_s)->required();
  certify->add_option("--bound", c_bound)->check(CLI::IsMember({"internal", "theorem"}));
  certify->add_option("--workers", c_workers);
  certify->add_option("--budget", c_budget, "largest admissible search bound");

  // series
  auto* series = app.add_subcommand("series", "coefficient dump and valuation-law report");
  series->require_subcommand(1);
  unsigned long M = 20;
  auto* s2 = series->add_subcommand("thm2");
  s2->add_option("--q", b_q)->required();
  s2->add_option("--r", b_r)->required();
  s2->add_option("--s", b_s)->required();
  s2->add_option("-M,--terms", M);
  auto* s3 = series->add_subcommand("thm3");
  s3->add_option("--p", b_p)->required();
  s3->add_option("--q", b_q)->required();
  s3->add_option("-M,--terms", M);
  auto* s5 = series->add_subcommand("sec5");
  s5->add_option("--p-prev", b_pp)->required();
  s5->add_option("--p-last", b_pl)->required();
  s5->add_option("-M,--terms", M);

  // search
  auto* search = app.add_subcommand("search", "solution search on a box");
  long xmax = 20;
  unsigned long nmax = 6, qmax = 5;
  search->add_option("--xmax", xmax)->required();
  search->add_option("--nmax", nmax)->required();
  search->add_option("--qmax", qmax)->required();

  // descend
  auto* descend = app.add_subcommand("descend", "build the descent tower for a candidate");
  long d_x = 4;
  unsigned long d_n = 9, d_q = 3;
  descend->add_option("--x", d_x)->required();
  descend->add_option("--n", d_n)->required();
  descend->add_option("--q", d_q)->required();

  // checks
  auto* checks = app.add_subcommand("checks", "ratio suprema and contradiction grids");
  checks->require_subcommand(1);
  auto* ratios = checks->add_subcommand("ratios");
  std::string r_variant = "thm2";
  RatioGrid grid;
  ratios->add_option("--variant", r_variant)->check(CLI::IsMember({"thm2", "thm3", "sec5"}));
  ratios->add_option("--nmax", grid.n_max);
  ratios->add_option("--param-min", grid.param_min);
  ratios->add_option("--param-max", grid.param_max);
  auto* case1 = checks->add_subcommand("case1");
  long k_pmax = 97, k_qmax = 97;
  case1->add_option("--pmax", k_pmax);
  case1->add_option("--qmax", k_qmax);
  auto* final_ = checks->add_subcommand("final");
  long f_pmax = 31;
  final_->add_option("--pmax", f_pmax);
  auto* t3d = checks->add_subcommand("thm3desc");
  long t_p = 5, t_qmax = 13, t_amax = 26;
  t3d->add_option("--p", t_p);
  t3d->add_option("--qmax", t_qmax);
  t3d->add_option("--alphamax", t_amax);

  auto* selftest = app.add_subcommand("selftest", "known solutions and the valuation-law suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (b2->parsed()) return run_bound(derive_params_thm2(b_q, b_r, b_s), format, out_path);
    if (b3->parsed()) return run_bound(derive_params_thm3(b_p, b_q), format, out_path);
    if (b5->parsed()) return run_bound(derive_params_sec5(b_pp, b_pl), format, out_path);

    if (certify->parsed()) {
      CertifyOptions opts;
      opts.bound_kind = c_bound == "internal" ? BoundKind::Internal : BoundKind::Theorem;
      opts.workers = c_workers;
      opts.budget = c_budget;
      opts.command = join_args(argc, argv);
      auto cert = certify_thm2(c_q, c_r, c_s, opts);
      emit(certificate_to_json(cert), out_path);
      return cert.exceptions.empty() ? kExitOk : kExitExceptions;
    }

    if (s2->parsed()) return run_series(derive_params_thm2(b_q, b_r, b_s), M, out_path);
    if (s3->parsed()) return run_series(derive_params_thm3(b_p, b_q), M, out_path);
    if (s5->parsed()) return run_series(derive_params_sec5(b_pp, b_pl), M, out_path);

    if (search->parsed()) {
      auto sols = search_nl(xmax, nmax, qmax);
      if (format == "table") {
        std::ostringstream t;
        for (const auto& s : sols)
          t << "x=" << s.x << " n=" << s.n << " q=" << s.q << " y=" << s.y
            << (s.matches_known ? "  [known]" : "") << "\n";
        t << sols.size() << " solution(s)";
        emit(t.str(), out_path);
      } else {
        emit(solutions_to_json(sols), out_path);
      }
      return kExitOk;
    }

    if (descend->parsed()) {
      auto tower = build_tower(NLCandidate{BigInt(d_x), d_n, d_q, std::nullopt});
      json j;
      j["candidate"] = {{"x", d_x}, {"n", d_n}, {"q", d_q}};
      j["entries"] = json::array();
      for (const auto& e : tower.entries) {
        json je{{"s", e.s},      {"t", e.t},
                {"prime", e.prime}, {"M", e.M.get_str()},
                {"delta", e.delta}, {"root_found", e.root.has_value()}};
        if (e.root) je["root"] = e.root->get_str();
        j["entries"].push_back(std::move(je));
      }
      j["product_identity_ok"] = tower.product_identity_ok;
      j["delta_t_independent"] = tower.delta_t_independent;
      emit(j.dump(2), out_path);
      return kExitOk;
    }

    if (ratios->parsed()) {
      Variant v = r_variant == "thm2" ? Variant::Thm2
                  : r_variant == "thm3" ? Variant::Thm3 : Variant::Sec5;
      if (ratios->count("--param-max") == 0 && v == Variant::Thm3) grid.param_max = 13;
      auto w = ratio_supremum(v, grid);
      json j{{"variant", r_variant},
             {"max_ratio", w.ratio.get_num().get_str() + "/" + w.ratio.get_den().get_str()},
             {"n", w.n},
             {"param1", w.param1},
             {"param2", w.param2}};
      emit(j.dump(2), out_path);
      return kExitOk;
    }

    if (case1->parsed()) {
      for (long p = 5; p <= k_pmax; ++p) {
        if (!is_prime_ul(p)) continue;
        for (long q = 3; q <= k_qmax; ++q) {
          if (!is_prime_ul(q)) continue;
          if (!contradiction_check_case1(p, q)) {
            std::cout << "case1 inequality SURVIVES at p=" << p << " q=" << q << "\n";
            return kExitInconsistent;
          }
        }
      }
      std::cout << "case1 contradiction stands on the whole grid\n";
      return kExitOk;
    }

    if (final_->parsed()) {
      for (long p = 2; p <= f_pmax; ++p) {
        if (!is_prime_ul(p)) continue;
        if (!contradiction_check_final(p)) {
          std::cout << "final inequality SURVIVES at p=" << p << "\n";
          return kExitInconsistent;
        }
      }
      std::cout << "final contradiction stands on the whole grid\n";
      return kExitOk;
    }

    if (t3d->parsed()) {
      for (long q = 3; q <= t_qmax; ++q) {
        if (!is_prime_ul(q)) continue;
        for (long a = q; a <= t_amax; a += q) {
          bool res = contradiction_check_thm3_descent(t_p, q, a);
          bool surviving = (q == 3 && a == 3) || (q == 5 && a == 5);
          std::cout << "q=" << q << " alpha=" << a << " -> "
                    << (res ? "contradiction" : "surviving case") << "\n";
          if (res == surviving) return kExitInconsistent;
        }
      }
      return kExitOk;
    }

    if (selftest->parsed()) {
      verify_known_solutions();
      struct { unsigned long q; long r, s; } suite[] = {
          {5, 3, 4}, {5, 3, 7}, {7, 3, 5}, {7, 5, 6}, {11, 5, 7}};
      for (const auto& c : suite) {
        auto rep = verify_valuation_law(
            setup_from_params(derive_params_thm2(c.q, c.r, c.s)), 100);
        if (rep.status != LawStatus::Pass) {
          std::cerr << "valuation law failed on (" << c.q << "," << c.r << "," << c.s
                    << ")\n";
          return kExitInconsistent;
        }
      }
      std::cout << "selftest: all checks passed\n";
      return kExitOk;
    }
  } catch (const internal_inconsistency_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const budget_exceeded_error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const not_applicable_error& e) {
    std::cerr << "NOT-APPLICABLE: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
