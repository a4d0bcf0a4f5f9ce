# SPDX-License-Identifier: Apache-2.0
"""Digital-twin assisted learned beam prediction.

Thin Python layer over the C++ core. Scenes and ray-traced paths are
exchanged as JSON; helpers here accept and return plain dicts.
"""

import json as _json

from . import _core
from ._core import (  # noqa: F401
    ConfigError,
    DataError,
    NumericalError,
    PredictorModel,
    ValidationError,
    array_response,
    baseline,
    beam_pattern,
    dft_codebook,
    exhaustive_search,
    generate,
    grid_dictionary,
    init_model,
    label_beam,
    load_checkpoint,
    omp,
    pattern,
    project_constant_modulus,
    refine,
    sensing_operator,
    spectral_efficiency,
    sweep,
)

__version__ = _core.__version__


def validate_scene(scene):
    """Validation errors for a scene dict (empty list when valid)."""
    return _core.validate_scene(_json.dumps(scene))


def perturb_scene(scene, building_error_m, drop_foliage=False, seed=0):
    return _json.loads(_core.perturb_scene(_json.dumps(scene), building_error_m, drop_foliage, seed))


def user_grid(scene):
    return _core.user_grid(_json.dumps(scene))


def trace_paths(scene, user, max_order=4):
    """Propagation paths from the base station to `user` = (x, y, z)."""
    x, y, z = user
    return _json.loads(_core.trace_paths(_json.dumps(scene), x, y, z, max_order))["paths"]
