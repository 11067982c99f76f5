"""Exact truncated q-series arithmetic and a verifier for congruences of
biregular overpartitions."""

from qcong.errors import (
    DivergentSpec,
    InvalidBase,
    InvalidModulus,
    InvalidOrder,
    NoProductForm,
    NotCoprime,
    NotInvertible,
    ParseError,
    QSeriesError,
    TruncationTooSmall,
    UnknownIdentity,
)
from qcong.series import (
    DissectionParts,
    TruncatedSeries,
    add,
    dissect,
    from_coeffs,
    invert,
    mul,
    power,
    reassemble,
    reduce_mod,
    series_congruent,
)
from qcong.products import (
    ProductSpec,
    ThetaSpec,
    eta_power,
    eta_quotient,
    theta_expand,
    theta_product_form,
)
from qcong.expr import expand, parse, parse_product, parse_theta
from qcong.oracle import (
    BiregularConstraint,
    count_biregular,
    count_overpartitions,
    oracle_series,
)
from qcong.congruence import (
    CongruenceClaim,
    claim_catalog,
    gen_function,
    verify_claim,
)

__version__ = "0.1.0"
