# Copyright 2026 The netsamp Authors.
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

"""Prediction intervals for subgraph counts under Bernoulli node sampling.

Thin Python surface over the compiled core. Motifs are given either as
``Pattern`` objects or as text specs ("edge", "wedge", "triangle",
"complete:R", "star:R", "line:R", "circle:R", "file:PATH"). Schemes are
"induced" or "ego"; scenarios "c1".."c4".
"""

from ._core import (
    Graph,
    Mask,
    NetsampError,
    Pattern,
    analyze,
    arb_bias,
    bernoulli_select,
    clustering_asymptotics,
    clustering_estimated,
    clustering_interval,
    clustering_population,
    count_estimated,
    count_interval,
    count_population,
    density_interval,
    ego_functionals,
    generate,
    load_graph,
    mask_from_indicators,
    normal_quantile,
    run_coverage,
    run_sparse_clt,
    simulation_pi,
    sigma2,
    sparse_profile,
    sparse_simulation_c,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
