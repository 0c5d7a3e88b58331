# Copyright 2026 The ivsim Authors
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

"""Guaranteed interval simulation of recursive polynomial models.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._core import (
    CaseDescriptor,
    CaseReport,
    CaseRow,
    ConfigurationError,
    EvaluationError,
    Interval,
    IntervalDomainError,
    Model,
    ModelParseError,
    OrbitPoint,
    ReferenceRow,
    __version__,
    divergence_index,
    from_decimal,
    list_cases,
    models_equal,
    orbit_csv,
    parse_model,
    reference_checksum,
    report_csv,
    run_all_cases,
    run_case,
    run_case_all,
    run_interval,
    run_point,
)

__all__ = [
    "CaseDescriptor",
    "CaseReport",
    "CaseRow",
    "ConfigurationError",
    "EvaluationError",
    "Interval",
    "IntervalDomainError",
    "Model",
    "ModelParseError",
    "OrbitPoint",
    "ReferenceRow",
    "__version__",
    "divergence_index",
    "from_decimal",
    "list_cases",
    "models_equal",
    "orbit_csv",
    "parse_model",
    "reference_checksum",
    "report_csv",
    "run_all_cases",
    "run_case",
    "run_case_all",
    "run_interval",
    "run_point",
]
