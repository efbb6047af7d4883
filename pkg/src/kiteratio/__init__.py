"""Principal ratio of graphs: Perron vectors, kite graphs, extremal search."""

from .closedform import (
    SigmaValue,
    cheb_u,
    kite_gamma,
    kite_lambda,
    kite_lambda_bounds,
    pendant_path_gamma,
    sigma_of_lambda,
    sigma_series,
)
from .formats import graph6_decode, graph6_encode
from .graph import (
    Graph,
    KiteParams,
    canonical_code,
    is_connected,
    make_complete,
    make_cycle,
    make_kite,
    make_path,
    make_pineapple,
    make_star,
)
from .irregularity import IrregularityReport, report_all
from .spectral import SpectralData, principal_eigenpair, principal_ratio, rayleigh_quotient

__version__ = "0.1.0"
