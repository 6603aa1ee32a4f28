#include "facticity/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "facticity/bitcodec.hpp"
#include "facticity/collapse.hpp"
#include "facticity/entropy.hpp"
#include "facticity/enumeration.hpp"
#include "facticity/estimator.hpp"
#include "facticity/microvm.hpp"
#include "facticity/processes.hpp"

namespace facticity {

namespace {

using nlohmann::json;

// All CSV and SVG numerics go through here: fixed 6 decimals, so identical
// invocations produce identical bytes.
std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BitString bits_from_file(const std::string& path, bool raw) {
  const std::string blob = read_file(path);
  if (raw) {
    return BitString::from_bytes(
        {reinterpret_cast<const std::uint8_t*>(blob.data()), blob.size()});
  }
  std::string filtered;
  filtered.reserve(blob.size());
  for (char ch : blob) {
    if (ch == ' ' || ch == '\n' || ch == '\r' || ch == '\t') continue;
    filtered.push_back(ch);
  }
  return BitString::from_text(filtered);
}

std::vector<BitString> bit_lines_from_file(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<BitString> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(BitString::from_text(line));
  }
  return out;
}

void write_output(const std::string& path, const std::string& data,
                  std::ostream& out) {
  if (path.empty()) {
    out << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open output file: " + path);
  f << data;
  f.flush();
  if (!f) throw Error("failed writing output file: " + path);
}

Budget make_budget(std::uint64_t max_steps, std::uint64_t max_output) {
  if (max_steps == 0) return default_budget(max_output);
  return Budget{max_steps, max_output};
}

json entry_json(const BitString& x, const CodeEntry& e) {
  const FacticityReport r = entry_report(e, x.size());
  json witnesses = json::array();
  for (const auto& [ilen, plen] : e.witnesses) {
    witnesses.push_back(json::array({ilen, plen}));
  }
  json j{{"x", x.to_text()},
         {"n", x.size()},
         {"k2", e.k2},
         {"phi", e.phi},
         {"delta", r.delta},
         {"rho", r.rho},
         {"certified", e.certified},
         {"label", std::string(to_string(r.label))},
         {"witnesses", witnesses}};
  if (e.k1.has_value()) {
    j["k1"] = *e.k1;
  } else {
    j["k1"] = nullptr;
  }
  return j;
}

std::string entry_csv_row(const BitString& x, const CodeEntry& e) {
  const FacticityReport r = entry_report(e, x.size());
  std::string row = x.to_text();
  row += ",";
  row += std::to_string(x.size());
  row += ",";
  row += std::to_string(e.k2);
  row += ",";
  row += std::to_string(e.phi);
  row += ",";
  row += e.k1 ? std::to_string(*e.k1) : std::string();
  row += ",";
  row += std::to_string(r.delta);
  row += ",";
  row += std::to_string(r.rho);
  row += ",";
  row += e.certified ? "1" : "0";
  row += ",";
  row += to_string(r.label);
  row += "\n";
  return row;
}

constexpr const char* kExactCsvHeader = "x,n,k2,phi,k1,delta,rho,certified,label\n";

std::string render_sweep_svg(const std::vector<SweepRow>& rows,
                             std::uint64_t grid_points, std::uint64_t reps) {
  // Mean model share and analytic threshold per grid point, shared y axis.
  std::vector<double> ss(grid_points), mean_phi(grid_points), threshold(grid_points);
  for (std::uint64_t g = 0; g < grid_points; ++g) {
    double acc = 0.0;
    for (std::uint64_t r = 0; r < reps; ++r) {
      acc += static_cast<double>(rows[g * reps + r].phi_hat);
    }
    ss[g] = rows[g * reps].s;
    mean_phi[g] = acc / static_cast<double>(reps);
    threshold[g] = rows[g * reps].threshold_bits;
  }
  double ymax = 1.0;
  for (std::uint64_t g = 0; g < grid_points; ++g) {
    ymax = std::max({ymax, mean_phi[g], threshold[g]});
  }
  ymax *= 1.05;

  const double width = 640, height = 400;
  const double ml = 60, mr = 20, mt = 20, mb = 45;
  const auto sx = [&](double s) { return ml + s * (width - ml - mr); };
  const auto sy = [&](double v) { return height - mb - v / ymax * (height - mt - mb); };
  const auto polyline = [&](const std::vector<double>& ys, const char* color) {
    std::string pts;
    for (std::uint64_t g = 0; g < grid_points; ++g) {
      pts += fmt6(sx(ss[g])) + "," + fmt6(sy(ys[g])) + " ";
    }
    return "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
         "viewBox=\"0 0 640 400\">\n";
  svg += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  svg += "<line x1=\"" + fmt6(ml) + "\" y1=\"" + fmt6(height - mb) + "\" x2=\"" +
         fmt6(width - mr) + "\" y2=\"" + fmt6(height - mb) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt6(ml) + "\" y1=\"" + fmt6(mt) + "\" x2=\"" + fmt6(ml) +
         "\" y2=\"" + fmt6(height - mb) + "\" stroke=\"black\"/>\n";
  svg += polyline(mean_phi, "#1f77b4");
  svg += polyline(threshold, "#d62728");
  svg += "<text x=\"" + fmt6(ml) + "\" y=\"" + fmt6(height - mb + 18) +
         "\" font-size=\"12\">0</text>\n";
  svg += "<text x=\"" + fmt6(width - mr - 10) + "\" y=\"" + fmt6(height - mb + 18) +
         "\" font-size=\"12\">1</text>\n";
  svg += "<text x=\"" + fmt6(width / 2 - 60) + "\" y=\"" + fmt6(height - 8) +
         "\" font-size=\"12\">entropy rate s</text>\n";
  svg += "<text x=\"8\" y=\"" + fmt6(mt + 8) + "\" font-size=\"12\">" + fmt6(ymax) +
         " bits</text>\n";
  svg += "<text x=\"" + fmt6(width - 260) + "\" y=\"" + fmt6(mt + 12) +
         "\" font-size=\"12\" fill=\"#1f77b4\">mean model bits</text>\n";
  svg += "<text x=\"" + fmt6(width - 260) + "\" y=\"" + fmt6(mt + 28) +
         "\" font-size=\"12\" fill=\"#d62728\">threshold bits</text>\n";
  svg += "</svg>\n";
  return svg;
}

std::vector<std::uint64_t> parse_k_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw DomainError("curves: bad k value: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("curves: --k-list is empty");
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"two-part code analysis: exact enumeration, estimation, analytic curves"};
  app.name("facticity");
  app.require_subcommand(1);

  // codec
  auto* codec = app.add_subcommand("codec", "frame or unframe a bit string");
  std::string codec_encode, codec_decode;
  auto* codec_enc_opt = codec->add_option("--encode", codec_encode,
                                          "payload bits to frame (may be empty)");
  auto* codec_dec_opt =
      codec->add_option("--decode", codec_decode, "stream bits to split");
  codec_enc_opt->excludes(codec_dec_opt);

  // run
  auto* runc = app.add_subcommand("run", "execute one two-part code");
  std::string run_input;
  std::uint64_t run_steps = 0, run_max_output = kDefaultMaxOutput;
  runc->add_option("--input", run_input, "input bits (frame + program input)")
      ->required();
  runc->add_option("--max-steps", run_steps,
                   "step budget (default 4*max_output^2)");
  runc->add_option("--max-output", run_max_output, "output budget in bits");

  // exact
  auto* exact = app.add_subcommand("exact", "enumerate all codes up to a length");
  std::uint64_t exact_len = 0, exact_steps = 0,
                exact_max_output = kDefaultMaxOutput;
  std::string exact_string, exact_out;
  bool exact_all = false, exact_json = false, exact_csv = false;
  exact->add_option("--max-code-len", exact_len, "enumerate inputs up to this length")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{30}));
  exact->add_option("--step-budget", exact_steps,
                    "step budget (default 4*max_output^2)");
  exact->add_option("--max-output", exact_max_output, "output budget in bits");
  auto* exact_all_flag = exact->add_flag("--all", exact_all, "dump the whole table");
  auto* exact_str_opt =
      exact->add_option("--string", exact_string, "report one string (bits)");
  exact_all_flag->excludes(exact_str_opt);
  auto* exact_json_flag = exact->add_flag("--json", exact_json, "emit JSON");
  auto* exact_csv_flag = exact->add_flag("--csv", exact_csv, "emit CSV");
  exact_json_flag->excludes(exact_csv_flag);
  exact->add_option("--out", exact_out, "write to this file instead of stdout");

  // estimate
  auto* est = app.add_subcommand("estimate", "two-part estimate for one string");
  std::string est_input;
  bool est_raw = false;
  est->add_option("--input", est_input, "input file ('0'/'1' text)")->required();
  est->add_flag("--raw", est_raw, "treat the input file as raw bytes");

  // sweep
  auto* swp = app.add_subcommand("sweep", "estimate stochastic strings on an entropy grid");
  SweepConfig sweep_cfg;
  std::string sweep_out, sweep_svg;
  swp->add_option("--k", sweep_cfg.k, "block size; string length is k*2^k")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{12}));
  swp->add_option("--grid", sweep_cfg.grid_points, "grid points on [0,1]")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{100000}));
  swp->add_option("--reps", sweep_cfg.reps, "strings per grid point")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000}));
  swp->add_option("--seed", sweep_cfg.seed, "base seed");
  swp->add_option("--out", sweep_out, "CSV output file (default stdout)");
  swp->add_option("--svg", sweep_svg, "also render an SVG line plot here");

  // classify
  auto* cls = app.add_subcommand("classify", "label a process from a series of strings");
  std::string cls_input;
  double cls_eta = 0.0;
  cls->add_option("--input", cls_input, "file with one '0'/'1' string per line")
      ->required();
  auto* cls_eta_opt =
      cls->add_option("--eta", cls_eta, "slope dead-band (default derived)");

  // curves
  auto* crv = app.add_subcommand("curves", "analytic collapse and threshold curves");
  std::string crv_list = "8";
  std::uint64_t crv_grid = 101;
  std::string crv_out;
  crv->add_option("--k-list", crv_list, "comma-separated block sizes");
  crv->add_option("--grid", crv_grid, "grid points on [0,1]")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{100000}));
  crv->add_option("--out", crv_out, "CSV output file (default stdout)");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("facticity");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const std::string& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (codec->parsed()) {
      if (codec_enc_opt->count() == 0 && codec_dec_opt->count() == 0) {
        err << "error: codec requires --encode or --decode\n";
        return 1;
      }
      if (codec_enc_opt->count() > 0) {
        out << encode_sd(BitString::from_text(codec_encode)).to_text() << "\n";
      } else {
        const auto [payload, rest] = decode_sd(BitString::from_text(codec_decode));
        const json j{{"payload", payload.to_text()}, {"rest", rest.to_text()}};
        out << j.dump(2) << "\n";
      }
      return 0;
    }

    if (runc->parsed()) {
      const RunOutcome res = run(BitString::from_text(run_input),
                                 make_budget(run_steps, run_max_output));
      const json j{{"output", res.output.to_text()},
                   {"consumed_all", res.consumed_all},
                   {"steps", res.steps},
                   {"status", std::string(to_string(res.status))}};
      out << j.dump(2) << "\n";
      return 0;
    }

    if (exact->parsed()) {
      if (!exact_all && exact_str_opt->count() == 0) {
        err << "error: exact requires --all or --string\n";
        return 1;
      }
      const CodeTable table =
          enumerate(exact_len, make_budget(exact_steps, exact_max_output));
      if (exact_all) {
        // CSV unless JSON was asked for.
        if (exact_json) {
          json arr = json::array();
          for (const auto& [x, e] : table.sorted_entries()) {
            arr.push_back(entry_json(x, e));
          }
          write_output(exact_out, arr.dump(2) + "\n", out);
        } else {
          std::string csv = kExactCsvHeader;
          for (const auto& [x, e] : table.sorted_entries()) {
            csv += entry_csv_row(x, e);
          }
          write_output(exact_out, csv, out);
        }
      } else {
        const BitString x = BitString::from_text(exact_string);
        const CodeEntry e = table.lookup(x);
        // JSON unless CSV was asked for.
        if (exact_csv) {
          write_output(exact_out, kExactCsvHeader + entry_csv_row(x, e), out);
        } else {
          write_output(exact_out, entry_json(x, e).dump(2) + "\n", out);
        }
      }
      return 0;
    }

    if (est->parsed()) {
      const BitString x = bits_from_file(est_input, est_raw);
      const FacticityReport r = estimate(x);
      const json j{{"n", x.size()},
                   {"k2", r.k2},
                   {"phi", r.phi},
                   {"delta", r.delta},
                   {"rho", r.rho},
                   {"label", std::string(to_string(r.label))},
                   {"estimated", !r.certified},
                   {"model", r.model}};
      out << j.dump(2) << "\n";
      return 0;
    }

    if (swp->parsed()) {
      const std::vector<SweepRow> rows = sweep(sweep_cfg);
      std::string csv =
          "s,p,rep,n,k2_hat,phi_hat,rho_hat,delta_hat,label,phi_collapse,threshold_bits\n";
      for (const SweepRow& r : rows) {
        csv += fmt6(r.s) + "," + fmt6(r.p) + "," + std::to_string(r.rep) + "," +
               std::to_string(r.n) + "," + std::to_string(r.k2_hat) + "," +
               std::to_string(r.phi_hat) + "," + std::to_string(r.rho_hat) + "," +
               std::to_string(r.delta_hat) + "," +
               std::string(to_string(r.label)) + "," + fmt6(r.phi_collapse) + "," +
               fmt6(r.threshold_bits) + "\n";
      }
      write_output(sweep_out, csv, out);
      if (!sweep_svg.empty()) {
        write_output(sweep_svg,
                     render_sweep_svg(rows, sweep_cfg.grid_points, sweep_cfg.reps),
                     out);
      }
      return 0;
    }

    if (cls->parsed()) {
      const std::vector<BitString> xs = bit_lines_from_file(cls_input);
      std::optional<double> eta;
      if (cls_eta_opt->count() > 0) eta = cls_eta;
      const ProcessReport r = series_report(xs, eta);
      json series = json::array();
      for (const ProcessPoint& pt : r.series) {
        series.push_back(json{{"t", pt.t}, {"k2", pt.k2_hat}, {"phi", pt.phi_hat}});
      }
      const json j{{"series", series},
                   {"slope_k2", r.slope_k2},
                   {"slope_phi", r.slope_phi},
                   {"eta", r.eta},
                   {"class", std::string(to_string(r.label))}};
      out << j.dump(2) << "\n";
      return 0;
    }

    if (crv->parsed()) {
      const std::vector<std::uint64_t> ks = parse_k_list(crv_list);
      std::string csv = "k,s,phi_collapse,threshold_bits,max_bound\n";
      for (const std::uint64_t k : ks) {
        for (std::uint64_t g = 0; g < crv_grid; ++g) {
          const double s =
              static_cast<double>(g) / static_cast<double>(crv_grid - 1);
          csv += std::to_string(k) + "," + fmt6(s) + "," +
                 fmt6(collapse_prob(k, s)) + "," +
                 fmt6(facticity_threshold(k, s, 0)) + "," +
                 fmt6(max_facticity_bound(k, 0)) + "\n";
        }
      }
      write_output(crv_out, csv, out);
      return 0;
    }

    err << "error: no subcommand\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace facticity
