"""uil: sharp successive-coefficient bounds for inverses of analytic maps.

The package is organized as a small verification laboratory:

* :mod:`uil.series` -- truncated complex power series with arithmetic,
  composition, elementary functions, calculus and reversion;
* :mod:`uil.caratheodory` -- positive-real-part generators (atomic
  Herglotz measures, named rational generators) and the chart of their
  first two coefficients;
* :mod:`uil.classes` -- three families of normalized analytic maps driven
  by such generators, their coefficient maps and extremal witnesses;
* :mod:`uil.bounds` -- closed-form sharp bounds for |A2|-|A1| and
  |A3|-|A2|, where A_n are the inverse-function coefficients;
* :mod:`uil.search` -- independent brute-force verification of every
  bound over the coefficient body;
* :mod:`uil.cli` -- the ``uil`` command-line front end.

If the environment variable ``UIL_THREADS`` is set when the package is
first imported, it caps the BLAS thread pools used by the grid scans
(the corresponding vendor variables are only set if absent).
"""

import os as _os

_cap = _os.environ.get("UIL_THREADS")
if _cap:
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        _os.environ.setdefault(_var, _cap)
del _os, _cap

from .series import (
    DEFAULT_ORDER,
    Series,
    compose,
    derive,
    exp_series,
    integrate,
    log_series,
    pow_series,
    revert,
)
from .caratheodory import (
    BodyPoint,
    DegenerateRealizationError,
    HerglotzSpec,
    RationalGenerator,
    body_to_coeffs,
    generator_eval,
    generator_series,
    herglotz_eval,
    herglotz_series,
    named_eval,
    named_series,
    p1,
    p2,
    p3,
    p4,
    pq,
    pt,
    realize_body_point,
    sample_spec,
)
from .classes import (
    Cgamma,
    ClassParams,
    CoeffPair,
    F0,
    Gnu,
    InverseCoeffs,
    build_function,
    class_label,
    class_margin,
    coefficient_functional,
    coeffs_from_c,
    coupling,
    inverse_coeffs,
    witness,
    witness_generator,
    witness_ids,
)
from .bounds import (
    BoundReport,
    LemmaInput,
    WitnessTarget,
    lemma_input,
    psi_minus_bound,
    psi_plus,
    psi_plus_bound,
    scale32,
    successive_diff,
    theorem_bounds,
    upper21,
    witness_targets,
)
from .search import (
    GridSpec,
    SearchResult,
    VerificationReport,
    VerificationRow,
    brute_force_extremum,
    full_verify,
    lemma_oracle,
    witness_check,
)

__version__ = "0.1.0"
