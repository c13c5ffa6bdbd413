# Copyright 2026 The alphaeta Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Simulator for the alpha-eta (Y-00) quantum-noise stream cipher."""

import json as _json

from alphaeta._core import (
    Constellation,
    KeystreamGen,
    TruncationError,
    binary_entropy,
    canonical_phase_antipodal,
    coherent_amplitudes,
    decrypt,
    default_truncation,
    encrypt,
    eve_deferred_key_ber,
    eve_nokey_helstrom,
    exponent_fit,
    helstrom_pure_antipodal,
    heterodyne_antipodal,
    homodyne_antipodal,
    overlap,
    phase_distribution,
    receiver_ber,
    run_cli,
)
from alphaeta import _core


def simulate(**kwargs):
    """Runs the Monte Carlo engine and returns the trial report as a dict."""
    return _json.loads(_core.simulate_json(**kwargs))


def key_rate(p_bob, p_eve, line_rate=1e9):
    return _json.loads(_core.key_rate(p_bob, p_eve, line_rate))


def key_rate_at(S, eve, line_rate=1e9, ber_column="exact"):
    return _json.loads(_core.key_rate_at(S, eve, line_rate, ber_column))


__all__ = [
    "Constellation",
    "KeystreamGen",
    "TruncationError",
    "binary_entropy",
    "canonical_phase_antipodal",
    "coherent_amplitudes",
    "decrypt",
    "default_truncation",
    "encrypt",
    "eve_deferred_key_ber",
    "eve_nokey_helstrom",
    "exponent_fit",
    "helstrom_pure_antipodal",
    "heterodyne_antipodal",
    "homodyne_antipodal",
    "key_rate",
    "key_rate_at",
    "overlap",
    "phase_distribution",
    "receiver_ber",
    "run_cli",
    "simulate",
]
