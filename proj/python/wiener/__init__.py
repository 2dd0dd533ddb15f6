# Copyright 2026 The Wiener Bound Authors
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

"""Exact Wiener index and its diameter lower bound."""

from ._wiener import (
    BoundReport,
    DiametralPartition,
    DisconnectedGraphError,
    Graph,
    GraphError,
    MonotonicityReport,
    MooreResult,
    NotApplicableError,
    ParseError,
    SharpnessInstance,
    SweepSummary,
    __version__,
    cartesian_product,
    complete,
    cycle,
    diameter,
    diameter_two_wiener,
    diametral_partition,
    diametral_path,
    distance_distribution,
    eccentricities,
    evaluate,
    exhaustive_sweep,
    monotonicity_scan,
    moore_bound,
    moore_diameter_lower_bound,
    off_path_excess,
    parse_graph6,
    path,
    path_excess,
    petersen,
    prism,
    random_connected,
    random_sweep,
    random_tree,
    sharpness_scan,
    star,
    stream_sweep,
    triangle_property_check,
    wiener_index,
    wiener_lower_bound,
    wiener_lower_bound_from_degree,
    write_graph6,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
