"""Exact calculator for the tensor category of finitely-generated weight
modules over affine sl2 at admissible levels, and for modules over its
free-field extension."""

from .arithmetic import (
    OMEGA,
    AdmissibleLevel,
    KacData,
    NotAdmissible,
    OutOfKacTable,
    Weight,
    admissible_level,
    conf_wt_gap,
    kac_data,
    ks_dual_level,
    pi_conf_weight,
    wt,
)

__all__ = [
    "OMEGA",
    "AdmissibleLevel",
    "KacData",
    "NotAdmissible",
    "OutOfKacTable",
    "Weight",
    "admissible_level",
    "conf_wt_gap",
    "kac_data",
    "ks_dual_level",
    "pi_conf_weight",
    "wt",
]
