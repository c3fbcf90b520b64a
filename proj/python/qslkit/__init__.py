# Copyright 2026 The qslkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Quantum speed limits for the damped Jaynes-Cummings model."""

from ._qslkit import (
    AccuracyError,
    InconsistentInput,
    InvalidInput,
    PoleError,
    PreconditionError,
    QslError,
    amplitude,
    bures_angle,
    decay_rate,
    decay_rate_poles,
    fidelity,
    markovian_plateau,
    qsl_time,
    regime,
    run_cli,
    schatten_norm,
    sin2_bures,
    singular_values,
    state,
    state_derivative,
    sweep,
)

__all__ = [
    "AccuracyError",
    "InconsistentInput",
    "InvalidInput",
    "PoleError",
    "PreconditionError",
    "QslError",
    "amplitude",
    "bures_angle",
    "decay_rate",
    "decay_rate_poles",
    "fidelity",
    "markovian_plateau",
    "qsl_time",
    "regime",
    "run_cli",
    "schatten_norm",
    "sin2_bures",
    "singular_values",
    "state",
    "state_derivative",
    "sweep",
]
