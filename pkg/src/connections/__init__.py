"""
The cone of operator connections: construction, evaluation, norm and the
isomorphisms onto representing functions and measures.
"""

from src.connections.connection import (
    ARITHMETIC,
    CATALOG_CONNECTIONS,
    CLOSED_FORMS,
    GEOMETRIC,
    HARMONIC,
    LEFT,
    LOGARITHMIC,
    PARALLEL_SUM,
    RIGHT,
    TRIVIAL_FORMS,
    ZERO_CONNECTION,
    Connection,
    Route,
    closed_form,
    combination,
    conn_add,
    conn_scale,
    from_function,
    from_measure,
    get_closed_form,
)
from src.connections.evaluation import (
    as_psd,
    epsilon_ladder,
    eval_integral,
    eval_primal,
    evaluate,
    harmonic,
    parallel_sum,
)
from src.connections.norms import (
    ConnectionNorm,
    NormForms,
    conn_leq,
    connection_distance,
    connection_norm,
    induced_scalar,
    is_mean,
    loewner_residual,
    norm_forms,
    normalize,
)
from src.connections.representation import (
    function_from_measure,
    representing_function,
    representing_measure,
)
from src.connections.textio import (
    CatalogEntry,
    catalog,
    format_connection_spec,
    parse_connection_spec,
)

__all__ = [
    "ARITHMETIC",
    "CATALOG_CONNECTIONS",
    "CLOSED_FORMS",
    "GEOMETRIC",
    "HARMONIC",
    "LEFT",
    "LOGARITHMIC",
    "PARALLEL_SUM",
    "RIGHT",
    "TRIVIAL_FORMS",
    "ZERO_CONNECTION",
    "CatalogEntry",
    "Connection",
    "ConnectionNorm",
    "NormForms",
    "Route",
    "as_psd",
    "catalog",
    "closed_form",
    "combination",
    "conn_add",
    "conn_leq",
    "conn_scale",
    "connection_distance",
    "connection_norm",
    "epsilon_ladder",
    "eval_integral",
    "eval_primal",
    "evaluate",
    "format_connection_spec",
    "from_function",
    "from_measure",
    "function_from_measure",
    "get_closed_form",
    "harmonic",
    "induced_scalar",
    "is_mean",
    "loewner_residual",
    "norm_forms",
    "normalize",
    "parallel_sum",
    "parse_connection_spec",
    "representing_function",
    "representing_measure",
]
