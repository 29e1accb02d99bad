// Command-line surface for the subshift, Schreier-graph and spectrum
// experiments. Every subcommand is deterministic given its flags; output
// files are written atomically.

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grig/language.hpp"
#include "grig/parallel.hpp"
#include "grig/report.hpp"
#include "grig/spectra.hpp"
#include "grig/subshift_action.hpp"
#include "grig/substitution.hpp"
#include "grig/tree_action.hpp"

namespace {

using grig::fmt17;

void deliver(const std::string& out_path, const std::string& contents) {
  if (out_path.empty()) {
    std::cout << contents;
    return;
  }
  grig::write_file_atomic(out_path, contents);
}

grig::PointedWord window_from_flags(std::int64_t eta_len, std::int64_t origin,
                                    const std::string& special, std::int64_t radius) {
  if (!special.empty()) {
    if (special.size() != 1) throw CLI::ValidationError("--special expects one of x, y, z");
    return grig::special_sequence_window(grig::letter_from_char(special[0]), radius);
  }
  return grig::PointedWord{grig::eta_prefix(eta_len), origin};
}

struct ParamFlags {
  double t = 1, u = 1, v = 1, w = 1;
  grig::spectra::Params params() const { return {t, u, v, w}; }
  void add_to(CLI::App* cmd, const char* suffix = "") {
    cmd->add_option(std::string("--t") + suffix, t, "weight of generator a");
    cmd->add_option(std::string("--u") + suffix, u, "weight of generator b");
    cmd->add_option(std::string("--v") + suffix, v, "weight of generator c");
    cmd->add_option(std::string("--w") + suffix, w, "weight of generator d");
  }
};

int run(int argc, char** argv) {
  CLI::App app{"substitution subshift, Schreier graphs and their spectra"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --out appear after the subcommand name
  std::string out_path;
  app.add_option("--out", out_path, "write output to this file (atomically)")->capture_default_str();

  // ---- eta ----------------------------------------------------------
  auto* cmd_eta = app.add_subcommand("eta", "prefix of the substitution fixed point");
  std::int64_t eta_length = 32;
  cmd_eta->add_option("--length", eta_length, "number of letters")->capture_default_str();

  // ---- complexity ---------------------------------------------------
  auto* cmd_cx = app.add_subcommand("complexity", "enumerated vs closed-form word complexity");
  std::int64_t cx_max = 64, cx_window = 0;
  std::string cx_format = "csv";
  cmd_cx->add_option("--max", cx_max, "largest word length")->capture_default_str();
  cmd_cx->add_option("--window", cx_window, "eta-prefix scan window (0 = auto)")->capture_default_str();
  cmd_cx->add_option("--format", cx_format, "csv or json")->capture_default_str();

  // ---- powers -------------------------------------------------------
  auto* cmd_pw = app.add_subcommand("powers", "fractional power / index scan");
  std::int64_t pw_max_len = 256, pw_window = 1 << 20;
  std::string pw_format = "json";
  cmd_pw->add_option("--max-len", pw_max_len, "largest root length")->capture_default_str();
  cmd_pw->add_option("--window", pw_window, "eta-prefix scan window")->capture_default_str();
  cmd_pw->add_option("--format", pw_format, "json or text")->capture_default_str();

  // ---- partition ----------------------------------------------------
  auto* cmd_pt = app.add_subcommand("partition", "n-partition residue of a window");
  int pt_n = 3;
  std::int64_t pt_eta = 1 << 10, pt_origin = 1, pt_radius = 512;
  std::string pt_special;
  cmd_pt->add_option("--n", pt_n, "partition level")->capture_default_str();
  cmd_pt->add_option("--eta-prefix", pt_eta, "window = eta prefix of this length")->capture_default_str();
  cmd_pt->add_option("--origin", pt_origin, "index of omega_1 in the window")->capture_default_str();
  cmd_pt->add_option("--special", pt_special, "use the two-sided window of omega^(s), s in {x,y,z}");
  cmd_pt->add_option("--radius", pt_radius, "radius for --special")->capture_default_str();

  // ---- graph --------------------------------------------------------
  auto* cmd_gr = app.add_subcommand("graph", "edge-list export or diff of labeled graphs");
  int gr_level = 0;
  std::int64_t gr_eta = 0, gr_origin = 1, gr_radius = 0;
  std::string gr_special;
  std::vector<std::string> gr_diff;
  cmd_gr->add_option("--level", gr_level, "Schreier graph of this tree level");
  cmd_gr->add_option("--eta-prefix", gr_eta, "window graph of the eta prefix of this length");
  cmd_gr->add_option("--origin", gr_origin, "origin for --eta-prefix")->capture_default_str();
  cmd_gr->add_option("--special", gr_special, "window graph of omega^(s)");
  cmd_gr->add_option("--radius", gr_radius, "radius for --special");
  cmd_gr->add_option("--diff", gr_diff, "two edge-list files to align and diff")->expected(2);

  // ---- spectrum -----------------------------------------------------
  auto* cmd_sp = app.add_subcommand("spectrum", "eigenvalue list of M_n or of a window operator");
  int sp_level = 0;
  std::int64_t sp_sites = 0;
  std::string sp_source = "eta", sp_format = "csv";
  double sp_tol = 1e-12;
  ParamFlags sp_params;
  cmd_sp->add_option("--level", sp_level, "Schreier Laplacian M_n of this level");
  cmd_sp->add_option("--sites", sp_sites, "window operator H^m on this many sites");
  cmd_sp->add_option("--source", sp_source, "window source: eta or x|y|z")->capture_default_str();
  cmd_sp->add_option("--tol", sp_tol, "bisection bracket width")->capture_default_str();
  cmd_sp->add_option("--format", sp_format, "csv or json")->capture_default_str();
  sp_params.add_to(cmd_sp);

  // ---- ids ----------------------------------------------------------
  auto* cmd_ids = app.add_subcommand("ids", "IDS sup-distance between M_n and the window operator");
  int ids_level = 8;
  double ids_tol = 1e-10;
  std::string ids_curve;
  ParamFlags ids_params;
  cmd_ids->add_option("--level", ids_level, "tree level n")->capture_default_str();
  cmd_ids->add_option("--tol", ids_tol, "eigenvalue bracket width")->capture_default_str();
  cmd_ids->add_option("--curve", ids_curve, "also write the two step curves as CSV here");
  ids_params.add_to(cmd_ids);

  // ---- dichotomy ----------------------------------------------------
  auto* cmd_di = app.add_subcommand("dichotomy", "epsilon-cover lengths across levels, two parameter sets");
  int di_min = 8, di_max = 13;
  double di_tol = 1e-10;
  std::string di_format = "csv";
  ParamFlags di_a, di_b;
  di_b.v = 2;
  di_b.w = 3;
  cmd_di->add_option("--min-level", di_min)->capture_default_str();
  cmd_di->add_option("--max-level", di_max)->capture_default_str();
  cmd_di->add_option("--tol", di_tol, "eigenvalue bracket width")->capture_default_str();
  cmd_di->add_option("--format", di_format, "csv or json")->capture_default_str();
  di_a.add_to(cmd_di, "1");
  di_b.add_to(cmd_di, "2");

  // ---- relators -----------------------------------------------------
  auto* cmd_rel = app.add_subcommand("relators", "presentation relators acting on a tree level");
  int rel_level = 10, rel_kmax = 3;
  std::string rel_format = "csv";
  cmd_rel->add_option("--level", rel_level)->capture_default_str();
  cmd_rel->add_option("--kmax", rel_kmax)->capture_default_str();
  cmd_rel->add_option("--format", rel_format, "csv or json")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  std::ostringstream body;

  if (app.got_subcommand(cmd_eta)) {
    body << grig::eta_prefix(eta_length).str() << '\n';
  }

  if (app.got_subcommand(cmd_cx)) {
    if (cx_window == 0) {
      cx_window = std::max<std::int64_t>(std::int64_t{1} << 14, 32 * cx_max);
      while ((cx_window & (cx_window - 1)) != 0) cx_window += cx_window & -cx_window;
    }
    grig::ComplexityProfile prof = grig::enumerate_complexity(cx_max, cx_window);
    if (!prof.all_stabilized())
      throw std::runtime_error("complexity: subword sets did not stabilize; enlarge --window");
    if (cx_format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      for (std::int64_t L = 1; L <= cx_max; ++L)
        rows.push_back({{"length", L},
                        {"enumerated", prof.counts[static_cast<std::size_t>(L - 1)]},
                        {"closed_form", grig::complexity_closed_form(L)},
                        {"match", prof.counts[static_cast<std::size_t>(L - 1)] ==
                                      grig::complexity_closed_form(L)}});
      body << rows.dump(2) << '\n';
    } else {
      body << "length,enumerated,closed_form,match\n";
      for (std::int64_t L = 1; L <= cx_max; ++L) {
        auto enumerated = prof.counts[static_cast<std::size_t>(L - 1)];
        auto closed = grig::complexity_closed_form(L);
        body << L << ',' << enumerated << ',' << closed << ',' << (enumerated == closed ? "true" : "false")
             << '\n';
      }
    }
  }

  if (app.got_subcommand(cmd_pw)) {
    grig::PowerScanReport rep = grig::max_power_scan(pw_max_len, pw_window);
    if (pw_format == "json") {
      nlohmann::json j;
      j["max_len"] = rep.max_len;
      j["window"] = rep.window;
      j["max_index"] = {{"num", rep.max_index.num}, {"den", rep.max_index.den},
                        {"value", rep.max_index.value()}};
      j["max_index_root_length"] = rep.max_index_root_length;
      j["cube_root_lengths"] = rep.cube_root_lengths;
      j["fourth_power_found"] = rep.fourth_power_found;
      body << j.dump(2) << '\n';
    } else {
      body << "max index " << rep.max_index.num << '/' << rep.max_index.den << " = "
           << fmt17(rep.max_index.value()) << " at root length " << rep.max_index_root_length << '\n';
      body << "cube root lengths:";
      for (auto l : rep.cube_root_lengths) body << ' ' << l;
      body << '\n';
      body << "fourth power found: " << (rep.fourth_power_found ? "yes" : "no") << '\n';
    }
  }

  if (app.got_subcommand(cmd_pt)) {
    grig::PointedWord w = window_from_flags(pt_eta, pt_origin, pt_special, pt_radius);
    grig::PartitionResult pr = grig::n_partition(w, pt_n);
    nlohmann::json j;
    j["n"] = pr.n;
    j["modulus"] = pr.modulus;
    j["residue"] = pr.residue;
    j["witness_positions"] = pr.witness_positions;
    body << j.dump(2) << '\n';
  }

  if (app.got_subcommand(cmd_gr)) {
    if (!gr_diff.empty()) {
      std::ifstream f1(gr_diff[0]), f2(gr_diff[1]);
      if (!f1 || !f2) throw std::runtime_error("graph --diff: cannot open input files");
      grig::group::GraphDiff d =
          grig::group::compare_graphs(grig::group::read_edge_list(f1), grig::group::read_edge_list(f2));
      body << "path length " << d.path_length << ", discrepancies " << d.entries.size() << '\n';
      for (const auto& e : d.entries)
        body << (e.side == 0 ? "only first: " : "only second: ") << (e.loop ? "loop" : "edge")
             << " at path position " << e.position << " label " << grig::group::to_char(e.label) << '\n';
    } else {
      grig::group::LabeledGraph g;
      if (gr_level > 0) g = grig::group::schreier_graph(gr_level);
      else if (gr_eta > 0) g = grig::group::graph_from_window(grig::PointedWord{grig::eta_prefix(gr_eta), gr_origin});
      else if (!gr_special.empty()) g = grig::group::graph_from_window(window_from_flags(0, 1, gr_special, gr_radius));
      else throw CLI::ValidationError("graph: give --level, --eta-prefix or --special");
      std::ostringstream os;
      grig::group::write_edge_list(os, g);
      body << os.str();
    }
  }

  if (app.got_subcommand(cmd_sp)) {
    grig::spectra::TridiagonalOperator op;
    std::string provenance;
    if (sp_level > 0) {
      op = grig::spectra::laplacian_from_graph(grig::group::schreier_graph(sp_level), sp_params.params());
      provenance = "graph level " + std::to_string(sp_level);
    } else if (sp_sites > 0) {
      grig::PointedWord w = sp_source == "eta"
                                ? grig::PointedWord{grig::eta_prefix(sp_sites + 1), 1}
                                : window_from_flags(0, 1, sp_source, sp_sites + 1);
      op = grig::spectra::jacobi_from_window(w, sp_params.params(), sp_sites);
      provenance = "subshift window (" + sp_source + "), " + std::to_string(sp_sites) + " sites";
    } else {
      throw CLI::ValidationError("spectrum: give --level or --sites");
    }
    grig::spectra::SpectralData sd = grig::spectra::eigenvalues(op, sp_tol);
    sd.params = sp_params.params();
    sd.provenance = provenance;
    if (sp_format == "json") {
      grig::ExperimentSummary s = grig::summarize(sd, sp_level, sp_tol);
      body << grig::to_json(s) << '\n';
    } else {
      std::ostringstream os;
      grig::spectra::write_csv(os, sd);
      body << os.str();
    }
  }

  if (app.got_subcommand(cmd_ids)) {
    grig::spectra::Params p = ids_params.params();
    auto graph_op = grig::spectra::laplacian_from_graph(grig::group::schreier_graph(ids_level), p);
    grig::PointedWord window{grig::eta_prefix((std::int64_t{1} << ids_level) - 1), 1};
    auto window_op = grig::spectra::laplacian_from_graph(grig::group::graph_from_window(window), p);
    grig::spectra::SpectralData sg = grig::spectra::eigenvalues(graph_op, ids_tol);
    grig::spectra::SpectralData sw = grig::spectra::eigenvalues(window_op, ids_tol);
    sg.params = p;
    double sup = grig::spectra::ids_sup_diff(sg, sw, 4 * ids_tol);
    grig::ExperimentSummary s = grig::summarize(sg, ids_level, std::ldexp(1.0, -ids_level), sup);
    body << grig::to_json(s) << '\n';
    if (!ids_curve.empty()) {
      std::ostringstream os;
      os << "E,N_graph,N_window\n";
      for (Eigen::Index i = 0; i < sg.size(); ++i) {
        double E = sg.eigenvalues[i];
        os << fmt17(E) << ',' << fmt17(grig::spectra::ids_distribution(sg, E)) << ','
           << fmt17(grig::spectra::ids_distribution(sw, E)) << '\n';
      }
      grig::write_file_atomic(ids_curve, os.str());
    }
  }

  if (app.got_subcommand(cmd_di)) {
    const std::array<grig::spectra::Params, 2> sets{di_a.params(), di_b.params()};
    if (di_min < 1 || di_max < di_min) throw CLI::ValidationError("dichotomy: bad level range");
    const std::size_t levels = static_cast<std::size_t>(di_max - di_min + 1);
    std::vector<std::array<grig::spectra::MeasureEstimate, 2>> rows(levels);
    grig::parallel_for_index(levels * 2, [&](std::size_t job) {
      std::size_t li = job / 2, pi = job % 2;
      int level = di_min + static_cast<int>(li);
      auto op = grig::spectra::laplacian_from_graph(grig::group::schreier_graph(level), sets[pi]);
      auto sd = grig::spectra::eigenvalues(op, di_tol);
      rows[li][pi] = grig::spectra::measure_estimate(sd, std::ldexp(1.0, -level));
    });
    if (di_format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t li = 0; li < levels; ++li)
        arr.push_back({{"level", di_min + static_cast<int>(li)},
                       {"epsilon", rows[li][0].epsilon},
                       {"cover_length_1", rows[li][0].cover_length},
                       {"cover_length_2", rows[li][1].cover_length}});
      body << arr.dump(2) << '\n';
    } else {
      body << "level,epsilon,cover_length_1,cover_length_2\n";
      for (std::size_t li = 0; li < levels; ++li)
        body << (di_min + static_cast<int>(li)) << ',' << fmt17(rows[li][0].epsilon) << ','
             << fmt17(rows[li][0].cover_length) << ',' << fmt17(rows[li][1].cover_length) << '\n';
    }
  }

  if (app.got_subcommand(cmd_rel)) {
    auto relators = grig::group::presentation_relators(rel_kmax);
    if (rel_format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : relators) {
        bool pass = true;
        for (std::uint32_t v = 0; v < (1u << rel_level) && pass; ++v)
          pass = grig::group::act_word_bits(r, v, rel_level) == v;
        arr.push_back({{"relator", r}, {"level", rel_level}, {"pass", pass}});
      }
      body << arr.dump(2) << '\n';
    } else {
      body << "relator,level,pass\n";
      for (const auto& r : relators) {
        bool pass = true;
        for (std::uint32_t v = 0; v < (1u << rel_level) && pass; ++v)
          pass = grig::group::act_word_bits(r, v, rel_level) == v;
        body << r << ',' << rel_level << ',' << (pass ? "true" : "false") << '\n';
      }
    }
  }

  deliver(out_path, body.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
