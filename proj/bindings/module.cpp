#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facticity/bitcodec.hpp"
#include "facticity/collapse.hpp"
#include "facticity/entropy.hpp"
#include "facticity/enumeration.hpp"
#include "facticity/estimator.hpp"
#include "facticity/microvm.hpp"
#include "facticity/processes.hpp"

namespace py = pybind11;
using namespace facticity;

namespace {

// Python talks '0'/'1' strings; BitString stays an implementation detail.
BitString bits(const std::string& text) { return BitString::from_text(text); }

py::dict report_dict(const FacticityReport& r, std::uint64_t n) {
  py::dict d;
  d["n"] = n;
  d["k2"] = r.k2;
  d["phi"] = r.phi;
  d["delta"] = r.delta;
  d["rho"] = r.rho;
  d["label"] = std::string(to_string(r.label));
  d["certified"] = r.certified;
  if (!r.model.empty()) d["model"] = r.model;
  return d;
}

py::dict entry_dict(const CodeTable& t, const BitString& x) {
  const CodeEntry e = t.lookup(x);
  py::dict d = report_dict(entry_report(e, x.size()), x.size());
  if (e.k1) {
    d["k1"] = *e.k1;
  } else {
    d["k1"] = py::none();
  }
  py::list witnesses;
  for (const auto& [ilen, plen] : e.witnesses) {
    witnesses.append(py::make_tuple(ilen, plen));
  }
  d["witnesses"] = witnesses;
  return d;
}

py::dict outcome_dict(const RunOutcome& res) {
  py::dict d;
  d["output"] = res.output.to_text();
  d["consumed_all"] = res.consumed_all;
  d["steps"] = res.steps;
  d["status"] = std::string(to_string(res.status));
  return d;
}

}  // namespace

PYBIND11_MODULE(facticity, m) {
  m.doc() = "two-part code analysis: exact enumeration, estimation, analytic curves";

  // self-delimiting codec
  m.def(
      "encode", [](const std::string& x) { return encode_sd(bits(x)).to_text(); },
      py::arg("x"), "Frame a bit string with the self-delimiting code.");
  m.def(
      "decode",
      [](const std::string& stream) {
        const auto [payload, rest] = decode_sd(bits(stream));
        return py::make_tuple(payload.to_text(), rest.to_text());
      },
      py::arg("stream"), "Split one frame off a stream: (payload, rest).");
  m.def("sd_len", &sd_len, py::arg("payload_len"),
        "Frame length for a payload of the given length.");

  // entropy kit
  m.def("binary_entropy", &binary_entropy, py::arg("p"));
  m.def("lambert_w0", &lambert_w0, py::arg("x"));
  m.def("inverse_entropy", &inverse_entropy_bisect, py::arg("s"),
        "p in [0, 1/2] with H(p) = s.");
  m.def(
      "inverse_entropy_diagnostic",
      [](double s) {
        const auto r = inverse_entropy_productlog(s);
        return py::make_tuple(r.value, r.in_range);
      },
      py::arg("s"), "Product-log diagnostic form: (value, in_range).");

  // analytic curves
  m.def("collapse_prob", &collapse_prob, py::arg("k"), py::arg("s"));
  m.def("epsilon_no_model", &epsilon_no_model, py::arg("n"), py::arg("k"),
        py::arg("s"));
  m.def("log2_binomial", &log2_binomial, py::arg("n"), py::arg("m"));
  m.def("facticity_threshold", &facticity_threshold, py::arg("k"), py::arg("s"),
        py::arg("c") = 0);
  m.def("max_facticity_bound", &max_facticity_bound, py::arg("k"),
        py::arg("c") = 0);
  m.def("saturation_bound", &saturation_bound, py::arg("u_len"));

  // the machine
  m.def(
      "run_machine",
      [](const std::string& w, std::uint64_t max_steps, std::uint64_t max_output) {
        const Budget b =
            max_steps == 0 ? default_budget(max_output) : Budget{max_steps, max_output};
        return outcome_dict(run(bits(w), b));
      },
      py::arg("w"), py::arg("max_steps") = 0,
      py::arg("max_output") = kDefaultMaxOutput,
      "Run one two-part code; max_steps 0 means 4*max_output^2.");

  // exact enumeration
  py::class_<CodeTable>(m, "CodeTable")
      .def_property_readonly("max_code_len", &CodeTable::max_code_len)
      .def("__len__", &CodeTable::size)
      .def(
          "lookup",
          [](const CodeTable& t, const std::string& x) {
            return entry_dict(t, bits(x));
          },
          py::arg("x"))
      .def(
          "soph",
          [](const CodeTable& t, const std::string& x, std::uint64_t slack) {
            return soph(t, bits(x), slack);
          },
          py::arg("x"), py::arg("slack") = 0)
      .def(
          "csoph",
          [](const CodeTable& t, const std::string& x) { return csoph(t, bits(x)); },
          py::arg("x"))
      .def(
          "sample",
          [](const CodeTable& t, std::size_t n_samples, std::uint64_t seed) {
            py::list out;
            for (const Sample& s : universal_sample(t, n_samples, seed)) {
              out.append(py::make_tuple(s.x.to_text(), s.k2));
            }
            return out;
          },
          py::arg("n_samples"), py::arg("seed"));
  m.def(
      "enumerate_codes",
      [](std::uint64_t max_code_len, std::uint64_t max_steps,
         std::uint64_t max_output, unsigned threads) {
        const Budget b =
            max_steps == 0 ? default_budget(max_output) : Budget{max_steps, max_output};
        return enumerate(max_code_len, b, threads);
      },
      py::arg("max_code_len"), py::arg("max_steps") = 0,
      py::arg("max_output") = 32, py::arg("threads") = 0,
      py::call_guard<py::gil_scoped_release>(),
      "Tabulate every input up to max_code_len; returns a CodeTable.");

  // estimation
  m.def(
      "estimate",
      [](const std::string& x) {
        const BitString b = bits(x);
        return report_dict(estimate(b), b.size());
      },
      py::arg("x"));
  m.def(
      "model_costs",
      [](const std::string& x) {
        py::list out;
        for (const ModelCandidate& c : model_costs(bits(x))) {
          py::dict d;
          d["name"] = c.name();
          d["model_bits"] = c.model_bits;
          d["data_bits"] = c.data_bits;
          d["total_bits"] = c.total_bits();
          out.append(d);
        }
        return out;
      },
      py::arg("x"));
  m.def(
      "gen_stochastic",
      [](std::uint64_t n, double entropy, std::uint64_t seed) {
        return gen_stochastic({n, entropy, seed}).to_text();
      },
      py::arg("n"), py::arg("entropy"), py::arg("seed"));
  m.def("normalized_facticity", &normalized_facticity, py::arg("c_hat"),
        py::arg("n"));
  m.def(
      "sweep",
      [](std::uint64_t k, std::uint64_t grid, std::uint64_t reps,
         std::uint64_t seed, unsigned threads) {
        const std::vector<SweepRow> rows = sweep({k, grid, reps, seed, threads});
        py::list out;
        for (const SweepRow& r : rows) {
          py::dict d;
          d["s"] = r.s;
          d["p"] = r.p;
          d["rep"] = r.rep;
          d["n"] = r.n;
          d["k2_hat"] = r.k2_hat;
          d["phi_hat"] = r.phi_hat;
          d["rho_hat"] = r.rho_hat;
          d["delta_hat"] = r.delta_hat;
          d["label"] = std::string(to_string(r.label));
          d["phi_collapse"] = r.phi_collapse;
          d["threshold_bits"] = r.threshold_bits;
          out.append(d);
        }
        return out;
      },
      py::arg("k") = 8, py::arg("grid") = 41, py::arg("reps") = 5,
      py::arg("seed") = 0, py::arg("threads") = 0);

  // processes
  m.def(
      "classify_series",
      [](const std::vector<std::string>& lines, std::optional<double> eta) {
        std::vector<BitString> xs;
        xs.reserve(lines.size());
        for (const std::string& line : lines) xs.push_back(bits(line));
        const ProcessReport r = series_report(xs, eta);
        py::dict d;
        py::list series;
        for (const ProcessPoint& pt : r.series) {
          series.append(py::make_tuple(pt.t, pt.k2_hat, pt.phi_hat));
        }
        d["series"] = series;
        d["slope_k2"] = r.slope_k2;
        d["slope_phi"] = r.slope_phi;
        d["eta"] = r.eta;
        d["class"] = std::string(to_string(r.label));
        return d;
      },
      py::arg("series"), py::arg("eta") = py::none());
}
