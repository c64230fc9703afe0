#pragma once

/**
 * @file cli.hpp
 * @brief The `hecke` command line, callable in-process for testing.
 *
 * Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors
 * (bad arguments, unknown format, level outside the Belyi table).
 */

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hecke.hpp"

namespace hecke::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// "(a,b,c)" from a list of strings.
inline std::string tuple(const std::vector<std::string>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
  return out + ")";
}

inline std::string cusp_row(const Cusp& c) {
  std::vector<std::string> pts, labs;
  for (const ProjPoint& p : c.members) {
    pts.push_back(p.str());
    labs.push_back(to_lattice_label(p).str());
  }
  return tuple(pts) + " = " + tuple(labs);
}

inline void print_cusp_table(std::ostream& out, std::int64_t n) {
  const Dessin d = build(n);
  const auto cs = enumerate_cusps(d);
  out << "Gamma_0(" << n << "): index " << d.size() << ", " << cs.size() << " cusps\n";
  out << "cusp | representative | lattice | width\n";
  for (const Cusp& c : cs)
    out << cusp_row(c) << " | " << c.members.front() << " | " << to_lattice_label(c.members.front()) << " | "
        << c.width << "\n";
}

inline void print_tabulation(std::ostream& out) {
  std::int64_t sum = 0, sum_sq = 0;
  for (std::int64_t n : genus_zero_levels) {
    const Dessin d = build(n);
    const auto cs = enumerate_cusps(d);
    out << "Gamma_0(" << n << ") index " << d.size() << " cusps " << cs.size() << " genus " << genus_euler(d)
        << " nu2 " << torsion2_count(n) << " nu3 " << torsion3_count(n) << "\n";
    for (const Cusp& c : cs) out << "  " << cusp_row(c) << " width " << c.width << "\n";
    const auto k = static_cast<std::int64_t>(cs.size());
    sum += k;
    sum_sq += k * k;
  }
  out << sum << " " << sum_sq << "\n";
}

inline std::string join(const std::vector<BigInt>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + xs[i].str();
  return out;
}

/// Runs one invocation; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial models of the Hecke congruence subgroups Gamma_0(N)", "hecke"};
  app.require_subcommand(1, 1);
  std::string output_path;
  app.add_option("-o,--output", output_path, "Write output to this file instead of stdout");

  std::int64_t level = 0, divisor = 0, prime = 0, prime_bound = 0;
  int order = 0, s_value = 0;
  std::string format = "json";
  bool verify = false, genus0 = false;

  auto* c_index = app.add_subcommand("index", "Index of Gamma_0(N) in PSL2(Z)");
  c_index->add_option("N", level)->required()->check(CLI::PositiveNumber);
  auto* c_points = app.add_subcommand("points", "Points of P^1(Z/NZ) with lattice labels");
  c_points->add_option("N", level)->required()->check(CLI::PositiveNumber);
  auto* c_dessin = app.add_subcommand("dessin", "Export the dessin B_{0,N}");
  c_dessin->add_option("N", level)->required()->check(CLI::PositiveNumber);
  c_dessin->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  auto* c_cusps = app.add_subcommand("cusps", "Cusp table");
  c_cusps->add_option("N", level)->required()->check(CLI::PositiveNumber);
  auto* c_torsion = app.add_subcommand("torsion", "Torsion point counts, closed form and brute force");
  c_torsion->add_option("N", level)->required()->check(CLI::PositiveNumber);
  auto* c_genus = app.add_subcommand("genus", "Genus by Riemann-Hurwitz and by Euler characteristic");
  c_genus->add_option("N", level)->required()->check(CLI::PositiveNumber);
  auto* c_morphism = app.add_subcommand("morphism", "Fibers of the canonical morphism B_{0,N} -> B_{0,d}");
  c_morphism->add_option("N", level)->required()->check(CLI::PositiveNumber);
  c_morphism->add_option("d", divisor)->required()->check(CLI::PositiveNumber);
  auto* c_lseries = app.add_subcommand("lseries", "Euler factor coefficients of the cusp-count L-series");
  c_lseries->add_option("--prime", prime)->required();
  c_lseries->add_option("--order", order)->required()->check(CLI::NonNegativeNumber);
  auto* c_zeta = app.add_subcommand("zeta-check", "Euler product vs zeta expression residual");
  c_zeta->add_option("--s", s_value)->required()->check(CLI::Range(2, 64));
  c_zeta->add_option("--prime-bound", prime_bound)->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{100'000'000}));
  auto* c_belyi = app.add_subcommand("belyi", "Tabulated Belyi map of a genus-zero level");
  c_belyi->add_option("N", level)->required()->check(CLI::PositiveNumber);
  c_belyi->add_flag("--verify", verify, "Check the map against the dessin and print the report");
  auto* c_tabulate = app.add_subcommand("tabulate", "Reproduce the genus-zero tables");
  c_tabulate->add_flag("--genus0", genus0, "All fifteen genus-zero levels")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "hecke: " << e.what() << "\n" << "Run with --help for usage.\n";
    return exit_usage;
  }

  std::ostringstream buf;
  int code = exit_ok;
  try {
    if (c_index->parsed()) {
      buf << index(level) << "\n";
    } else if (c_points->parsed()) {
      const auto pts = enumerate(level);
      for (std::size_t i = 0; i < pts.size(); ++i) buf << i << " " << pts[i] << " " << to_lattice_label(pts[i]) << "\n";
    } else if (c_dessin->parsed()) {
      buf << export_dessin(build(level), format);
    } else if (c_cusps->parsed()) {
      print_cusp_table(buf, level);
    } else if (c_torsion->parsed()) {
      const Dessin d = build(level);
      buf << "nu2 closed " << torsion2_count(level) << " brute " << fixed_points(d.x) << "\n";
      buf << "nu3 closed " << torsion3_count(level) << " brute " << fixed_points(d.y) << "\n";
      if (torsion2_count(level) != static_cast<std::int64_t>(fixed_points(d.x)) ||
          torsion3_count(level) != static_cast<std::int64_t>(fixed_points(d.y)))
        code = exit_failed;
    } else if (c_genus->parsed()) {
      const std::int64_t rh = genus_rh(level), eu = genus_euler(build(level));
      buf << "riemann-hurwitz " << rh << "\n" << "euler " << eu << "\n";
      if (rh != eu) code = exit_failed;
    } else if (c_morphism->parsed()) {
      const Dessin src = build(level), dst = build(divisor);
      const auto f = quotient_morphism(src, dst);
      for (std::size_t j = 0; j < dst.size(); ++j) {
        buf << dst.edges[j] << " <-";
        for (std::size_t i = 0; i < src.size(); ++i)
          if (f[i] == j) buf << " " << src.edges[i];
        buf << "\n";
      }
    } else if (c_lseries->parsed()) {
      const auto a = euler_factor_coeffs(prime, order), b = euler_factor_closed_form_series(prime, order);
      buf << "coefficients " << join(a) << "\n" << "series " << join(b) << "\n";
      if (a != b) code = exit_failed;
    } else if (c_zeta->parsed()) {
      buf << "residual " << std::scientific << std::setprecision(12) << zeta_identity_residual(s_value, prime_bound)
          << "\n";
    } else if (c_belyi->parsed()) {
      if (verify) {
        const VerificationReport rep = verify_belyi(level);
        buf << report_to_json(rep).dump(2) << "\n";
        if (!rep.passed()) code = exit_failed;
      } else {
        buf << belyi_table(level).str() << "\n";
      }
    } else if (c_tabulate->parsed()) {
      print_tabulation(buf);
    }
  } catch (const std::invalid_argument& e) {
    err << "hecke: " << e.what() << "\n";
    return exit_usage;
  } catch (const NotGenusZero& e) {
    err << "hecke: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "hecke: " << e.what() << "\n";
    return exit_failed;
  }

  if (output_path.empty()) {
    out << buf.str();
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
      err << "hecke: cannot open " << output_path << "\n";
      return exit_usage;
    }
    file << buf.str();
  }
  return code;
}

} // namespace hecke::cli
