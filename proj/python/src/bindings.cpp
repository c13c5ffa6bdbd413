// Copyright 2026 The alphaeta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alphaeta/cipherfile.hpp"
#include "alphaeta/cli.hpp"
#include "alphaeta/keyrate.hpp"
#include "alphaeta/montecarlo.hpp"
#include "alphaeta/receivers.hpp"
#include "alphaeta/report_json.hpp"

namespace py = pybind11;
using namespace alphaeta;

namespace {

py::dict ber_dict(const BerLaw &law) {
    py::dict d;
    d["exact"] = law.exact;
    d["asymptotic"] = law.asymptotic;
    d["exponent_coefficient"] = law.exponent_coefficient;
    return d;
}

DeferredStrategy parse_deferred(const std::string &text) {
    const EveStrategy eve = parse_eve_strategy(text);
    if (eve == EveStrategy::PhaseDeferred) {
        return DeferredStrategy::CanonicalPhase;
    }
    if (eve == EveStrategy::HeterodyneDeferred) {
        return DeferredStrategy::Heterodyne;
    }
    throw std::invalid_argument("expected phase-deferred or heterodyne-deferred, got '" + text + "'");
}

py::bytes as_bytes(const std::vector<uint8_t> &v) {
    return py::bytes(reinterpret_cast<const char *>(v.data()), v.size());
}

std::vector<uint8_t> from_bytes(const py::bytes &b) {
    const std::string s = b;
    return {s.begin(), s.end()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum-noise stream cipher simulator core.";

    py::register_exception<TruncationError>(m, "TruncationError", PyExc_ValueError);

    m.def("default_truncation", &default_truncation, py::arg("S"));
    m.def(
        "coherent_amplitudes",
        [](double s, double phase, std::optional<size_t> n) {
            return (n ? coherent_amplitudes(s, phase, *n) : coherent_amplitudes(s, phase)).coeffs;
        },
        py::arg("S"), py::arg("phase") = 0.0, py::arg("n_trunc") = py::none());
    m.def(
        "overlap",
        [](double s1, double phi1, double s2, double phi2) {
            const size_t n = std::max(default_truncation(s1), default_truncation(s2));
            return overlap(coherent_amplitudes(s1, phi1, n), coherent_amplitudes(s2, phi2, n));
        },
        py::arg("S1"), py::arg("phi1"), py::arg("S2"), py::arg("phi2"));
    m.def(
        "phase_distribution",
        [](double s, double phase, size_t resolution) {
            const PhaseDistribution d = phase_distribution(coherent_amplitudes(s, phase), resolution);
            return py::make_tuple(d.grid, d.density);
        },
        py::arg("S"), py::arg("phase") = 0.0, py::arg("resolution") = kDefaultPhaseResolution);

    m.def("helstrom_pure_antipodal", [](double s) { return ber_dict(helstrom_pure_antipodal(s)); }, py::arg("S"));
    m.def("heterodyne_antipodal", [](double s) { return ber_dict(heterodyne_antipodal(s)); }, py::arg("S"));
    m.def("homodyne_antipodal", [](double s) { return ber_dict(homodyne_antipodal(s)); }, py::arg("S"));
    m.def(
        "canonical_phase_antipodal",
        [](double s, size_t resolution) { return ber_dict(canonical_phase_antipodal(s, resolution)); },
        py::arg("S"), py::arg("resolution") = kDefaultPhaseResolution);
    m.def(
        "receiver_ber",
        [](const std::string &receiver, double s) {
            return ber_dict(receiver_ber(ReceiverModel{parse_receiver(receiver)}, s));
        },
        py::arg("receiver"), py::arg("S"));
    m.def(
        "eve_deferred_key_ber",
        [](double s, const std::string &strategy) { return ber_dict(eve_deferred_key_ber(s, parse_deferred(strategy))); },
        py::arg("S"), py::arg("strategy"));
    m.def(
        "eve_nokey_helstrom",
        [](double s, size_t m_bases, const std::string &mapping) {
            return eve_nokey_helstrom(s, Constellation(m_bases, parse_mapping(mapping)));
        },
        py::arg("S"), py::arg("M"), py::arg("mapping") = "alternating");
    m.def(
        "exponent_fit",
        [](const std::vector<std::pair<double, double>> &points) { return exponent_fit(points); }, py::arg("points"));

    m.def("binary_entropy", &binary_entropy, py::arg("p"));
    m.def(
        "key_rate",
        [](double p_bob, double p_eve, double line_rate) { return dump_json(to_json(key_rate(p_bob, p_eve, line_rate))); },
        py::arg("p_bob"), py::arg("p_eve"), py::arg("line_rate") = 1e9);
    m.def(
        "key_rate_at",
        [](double s, const std::string &eve, double line_rate, const std::string &column) {
            return dump_json(to_json(key_rate_at(s, parse_deferred(eve), line_rate, parse_ber_column(column))));
        },
        py::arg("S"), py::arg("eve"), py::arg("line_rate") = 1e9, py::arg("ber_column") = "exact");

    py::class_<Constellation>(m, "Constellation")
        .def(py::init([](size_t m_bases, const std::string &mapping) {
                 return Constellation(m_bases, parse_mapping(mapping));
             }),
             py::arg("M"), py::arg("mapping") = "alternating")
        .def_property_readonly("M", &Constellation::m_bases)
        .def_property_readonly("size", &Constellation::size)
        .def_property_readonly("mapping", [](const Constellation &c) { return std::string(to_string(c.mapping())); })
        .def("phase", &Constellation::phase, py::arg("j"))
        .def("bit_of", &Constellation::bit_of, py::arg("j"))
        .def("encode", [](const Constellation &c, int bit, size_t basis) { return encode(bit, basis, c); },
             py::arg("bit"), py::arg("basis"))
        .def("decode", [](const Constellation &c, size_t j, size_t basis) { return decode(j, basis, c); },
             py::arg("j"), py::arg("basis"))
        .def("decide", [](const Constellation &c, double phase, size_t basis) { return decide_in_basis(phase, basis, c); },
             py::arg("phase"), py::arg("basis"));

    py::class_<KeystreamGen>(m, "KeystreamGen")
        .def(py::init([](const std::string &hex) { return KeystreamGen::from_hex(hex); }), py::arg("seed_key"))
        .def(py::init<unsigned, std::vector<unsigned>, uint64_t>(), py::arg("degree"), py::arg("taps"), py::arg("seed"))
        .def("next_bit", &KeystreamGen::next_bit)
        .def("bits", &KeystreamGen::bits, py::arg("n"))
        .def("next_basis", &KeystreamGen::next_basis, py::arg("M"))
        .def_property_readonly("state", &KeystreamGen::state);

    m.def(
        "encrypt",
        [](const py::bytes &plaintext, const std::string &seed_key, size_t m_bases, const std::string &mapping,
           size_t dsr_d, uint64_t dsr_seed) {
            EncryptOptions options{m_bases, parse_mapping(mapping), dsr_d, dsr_seed};
            return as_bytes(encrypt_file(from_bytes(plaintext), seed_key, options));
        },
        py::arg("plaintext"), py::arg("seed_key"), py::arg("M") = 64, py::arg("mapping") = "alternating",
        py::arg("dsr_d") = 0, py::arg("dsr_seed") = 0);
    m.def(
        "decrypt",
        [](const py::bytes &ciphertext, const std::string &seed_key) {
            return as_bytes(decrypt_file(from_bytes(ciphertext), seed_key));
        },
        py::arg("ciphertext"), py::arg("seed_key"));

    m.def(
        "simulate_json",
        [](double s, size_t m_bases, const std::string &mapping, const std::string &seed_key, const std::string &bob,
           size_t resolution, const std::string &eve, uint64_t trials, uint64_t master_seed, size_t dsr_d,
           unsigned threads) {
            SimConfig config;
            config.mean_photons = s;
            config.m_bases = m_bases;
            config.mapping = parse_mapping(mapping);
            config.seed_key = seed_key;
            config.bob = ReceiverModel{parse_receiver(bob), resolution};
            config.eve = parse_eve_strategy(eve);
            config.trials = trials;
            config.master_seed = master_seed;
            config.dsr_d = dsr_d;
            config.threads = threads;
            TrialReport report;
            {
                py::gil_scoped_release release;
                report = run_simulation(config);
            }
            return dump_json(to_json(report));
        },
        py::arg("S") = 7.0, py::arg("M") = 32, py::arg("mapping") = "alternating", py::arg("seed_key") = "9E3779B9",
        py::arg("bob") = "optimal", py::arg("resolution") = kDefaultPhaseResolution, py::arg("eve") = "none",
        py::arg("trials") = 1000000, py::arg("master_seed") = 1, py::arg("dsr_d") = 0, py::arg("threads") = 0);

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "alphaeta");
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
