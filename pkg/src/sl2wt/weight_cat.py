"""Simple labels and catalogued indecomposables of the affine weight category.

Every simple object is written canonically as a spectral flow of either a
highest-weight module D+(r,s) (atypical) or a fully relaxed module
E(lam; r,s) (typical, lam taken mod 2Z with (r,s) ~ (u-r,v-s) identified).
Non-canonical presentations -- lowest-weight modules D-(r,s), the modules
L(r,0), typicals with the mirrored Kac label -- are rewritten on
construction, so label equality is isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple, Union

from .arithmetic import (
    AdmissibleLevel,
    OutOfKacTable,
    Weight,
    as_weight,
    lam_rs,
)


class NotSimple(ValueError):
    """A typical label whose lam collides with +-lambda_{r,s} mod 2Z."""


@dataclass(frozen=True)
class SimpleCLabel:
    """Canonical simple label sigma^flow(D+_{r,s}) or sigma^flow(E_{lam,Delta_{r,s}})."""

    flow: int
    r: int
    s: int
    lam: Optional[Weight] = None  # None <=> atypical

    @property
    def is_typical(self) -> bool:
        return self.lam is not None

    def sort_key(self):
        lam_key = self.lam.sort_key() if self.lam is not None else None
        return (self.lam is not None, self.r, self.s, self.flow, lam_key or (0, 0))

    def __str__(self) -> str:
        if self.lam is None:
            return f"D+({self.r},{self.s})@{self.flow}"
        return f"E({self.lam};{self.r},{self.s})@{self.flow}"


def _check_rs(level: AdmissibleLevel, r: int, s: int) -> None:
    if not (1 <= r <= level.u - 1 and 1 <= s <= level.v - 1):
        raise OutOfKacTable(f"(r, s) = ({r}, {s}) outside the Kac table of {level}")


def atypical(level: AdmissibleLevel, r: int, s: int, flow: int = 0) -> SimpleCLabel:
    """sigma^flow(D+_{r,s}), already canonical."""
    _check_rs(level, r, s)
    return SimpleCLabel(flow, r, s, None)


def typical(level: AdmissibleLevel, r: int, s: int, lam, flow: int = 0) -> SimpleCLabel:
    """Canonical sigma^flow(E_{lam, Delta_{r,s}}).

    lam is reduced mod 2Z and (r, s) is replaced by the lexicographically
    smaller of (r, s) and (u-r, v-s).  Raises NotSimple on the reducible
    cosets lam = +-lambda_{r,s} mod 2Z.
    """
    _check_rs(level, r, s)
    w = as_weight(lam).reduce(2)
    for sign in (1, -1):
        if not (w - sign * lam_rs(level, r, s)).reduce(2):
            raise NotSimple(
                f"E({w};{r},{s}) is reducible: lam = {'+' if sign > 0 else '-'}lambda_{{r,s}} mod 2Z"
            )
    r, s = min((r, s), (level.u - r, level.v - s))
    return SimpleCLabel(flow, r, s, w)


def lr0(level: AdmissibleLevel, r: int, flow: int = 0) -> SimpleCLabel:
    """sigma^flow(L_{r,0}) rewritten as sigma^(flow-1)(D+_{u-r,v-1})."""
    if not 1 <= r <= level.u - 1:
        raise OutOfKacTable(f"r = {r} outside [1, {level.u - 1}]")
    return SimpleCLabel(flow - 1, level.u - r, level.v - 1, None)


def dplus(level: AdmissibleLevel, r: int, s: int, flow: int = 0) -> SimpleCLabel:
    """sigma^flow(D+_{r,s}) for 0 <= s <= v-1; s = 0 is the L_{r,0} alias."""
    if s == 0:
        return lr0(level, r, flow)
    return atypical(level, r, s, flow)


def dminus(level: AdmissibleLevel, r: int, s: int, flow: int = 0) -> SimpleCLabel:
    """Canonical form of sigma^flow(D-_{r,s}).

    D-_{r,s} = sigma^(-1)(D+_{u-r,v-s-1}) for s <= v-2 and
    D-_{r,v-1} = sigma^(-2)(D+_{r,v-1}); s = 0 is again L_{r,0}.
    """
    if s == 0:
        return lr0(level, r, flow)
    _check_rs(level, r, s)
    if s <= level.v - 2:
        return SimpleCLabel(flow - 1, level.u - r, level.v - s - 1, None)
    return SimpleCLabel(flow - 2, r, level.v - 1, None)


def contragredient(level: AdmissibleLevel, x: SimpleCLabel) -> SimpleCLabel:
    """The contragredient dual, canonicalized.

    Typicals: sigma^l(E_{lam,D})' = sigma^(-l)(E_{-lam,D}).
    Atypicals: sigma^l(D+_{r,s})' = sigma^(-l)(D-_{r,s}).
    """
    if x.is_typical:
        return typical(level, x.r, x.s, -x.lam, -x.flow)
    return dminus(level, x.r, x.s, -x.flow)


def contragredient_obj(level: AdmissibleLevel, x: "CObject") -> "CObject":
    """Contragredient of a catalogued object; E-strings dualize to the
    Kac-mirrored string of the same kind, sigma^l(E+-_{r,s})' = sigma^(-l)(E+-_{u-r,v-s})."""
    if isinstance(x, Simple):
        return Simple(contragredient(level, x.label))
    if isinstance(x, (Eminus, Eplus)):
        return type(x)(level.u - x.r, level.v - x.s, -x.flow)
    if isinstance(x, DirectSum):
        return DirectSum(tuple(contragredient_obj(level, p) for p in x.parts))
    raise TypeError(f"no catalogued contragredient for {x!r}")


# ---------------------------------------------------------------------------
# Catalogued objects


@dataclass(frozen=True)
class Simple:
    label: SimpleCLabel

    def __str__(self) -> str:
        return str(self.label)


@dataclass(frozen=True)
class Eminus:
    """sigma^flow(E-_{r,s}): socle D-_{r,s}, top D+_{u-r,v-s} (flows implied)."""

    r: int
    s: int
    flow: int

    def __str__(self) -> str:
        return f"E-({self.r},{self.s})@{self.flow}"


@dataclass(frozen=True)
class Eplus:
    """sigma^flow(E+_{r,s}): socle D+_{r,s}, top D-_{u-r,v-s}."""

    r: int
    s: int
    flow: int

    def __str__(self) -> str:
        return f"E+({self.r},{self.s})@{self.flow}"


@dataclass(frozen=True)
class Projective:
    """sigma^flow(P_{r,s}), the projective cover of sigma^flow(D+_{r,s})."""

    r: int
    s: int
    flow: int

    def __str__(self) -> str:
        return f"P({self.r},{self.s})@{self.flow}"


@dataclass(frozen=True)
class DirectSum:
    parts: Tuple["CObject", ...]

    def __str__(self) -> str:
        return " (+) ".join(str(p) for p in self.parts)


CObject = Union[Simple, Eminus, Eplus, Projective, DirectSum]


def direct_sum(parts: Iterable[CObject]) -> CObject:
    parts = tuple(parts)
    if len(parts) == 1:
        return parts[0]
    return DirectSum(parts)


def vacuum_extension(level: AdmissibleLevel) -> CObject:
    """The free-field algebra restricted to the weight category: sigma(E-_{u-1,v-1})."""
    return Eminus(level.u - 1, level.v - 1, 1)


def spectral_flow(x, m: int):
    """sigma^m, adding m to every flow index (labels and catalog tags alike)."""
    if isinstance(x, SimpleCLabel):
        return SimpleCLabel(x.flow + m, x.r, x.s, x.lam)
    if isinstance(x, Simple):
        return Simple(spectral_flow(x.label, m))
    if isinstance(x, (Eminus, Eplus, Projective)):
        return type(x)(x.r, x.s, x.flow + m)
    if isinstance(x, DirectSum):
        return DirectSum(tuple(spectral_flow(p, m) for p in x.parts))
    raise TypeError(f"cannot spectral-flow {x!r}")


# ---------------------------------------------------------------------------
# Grothendieck group of the weight category


class GrothC:
    """Finitely supported Z-combination of canonical SimpleCLabel."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Dict[SimpleCLabel, int]] = None):
        self.coeffs = {x: n for x, n in (coeffs or {}).items() if n != 0}

    @classmethod
    def of(cls, *labels: SimpleCLabel) -> "GrothC":
        out: Dict[SimpleCLabel, int] = {}
        for x in labels:
            out[x] = out.get(x, 0) + 1
        return cls(out)

    def multiplicity(self, label: SimpleCLabel) -> int:
        return self.coeffs.get(label, 0)

    def support(self):
        return set(self.coeffs)

    def items(self):
        return self.coeffs.items()

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_effective(self) -> bool:
        return all(n > 0 for n in self.coeffs.values())

    def __add__(self, other: "GrothC") -> "GrothC":
        out = dict(self.coeffs)
        for x, n in other.coeffs.items():
            out[x] = out.get(x, 0) + n
        return GrothC(out)

    def __sub__(self, other: "GrothC") -> "GrothC":
        out = dict(self.coeffs)
        for x, n in other.coeffs.items():
            out[x] = out.get(x, 0) - n
        return GrothC(out)

    def __neg__(self) -> "GrothC":
        return GrothC({x: -n for x, n in self.coeffs.items()})

    def __rmul__(self, n: int) -> "GrothC":
        return GrothC({x: n * c for x, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, GrothC) and self.coeffs == other.coeffs

    def map_labels(self, fn) -> "GrothC":
        out: Dict[SimpleCLabel, int] = {}
        for x, n in self.coeffs.items():
            y = fn(x)
            out[y] = out.get(y, 0) + n
        return GrothC(out)

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(
            (f"{n}*{x}" if n != 1 else str(x)) for x, n in self.sorted_items()
        )

    __repr__ = __str__


# -- JSON label schema --
# {"cat": "C", "flow": l, "base": {"type": "D+", "r": r, "s": s}}
# {"cat": "C", "flow": l, "base": {"type": "E", "r": r, "s": s, "lam": Weight}}
# inputs may also use base types "D-" and "L"; they canonicalize on parse.


def label_to_json(x: SimpleCLabel) -> dict:
    if x.is_typical:
        base = {"type": "E", "r": x.r, "s": x.s, "lam": x.lam.to_json()}
    else:
        base = {"type": "D+", "r": x.r, "s": x.s}
    return {"cat": "C", "flow": x.flow, "base": base}


def label_from_json(level: AdmissibleLevel, data: dict) -> SimpleCLabel:
    if data.get("cat") != "C":
        raise ValueError(f"not a C-label: {data!r}")
    flow = int(data.get("flow", 0))
    base = data["base"]
    kind = base["type"]
    if kind == "D+":
        return dplus(level, base["r"], base.get("s", 0), flow)
    if kind == "D-":
        return dminus(level, base["r"], base.get("s", 0), flow)
    if kind == "L":
        return lr0(level, base["r"], flow)
    if kind == "E":
        return typical(level, base["r"], base["s"], Weight.from_json(base["lam"]), flow)
    raise ValueError(f"unknown C-label base type {kind!r}")


def cobject_to_json(x: CObject) -> dict:
    if isinstance(x, Simple):
        return label_to_json(x.label)
    if isinstance(x, (Eminus, Eplus, Projective)):
        tag = {Eminus: "E-", Eplus: "E+", Projective: "P"}[type(x)]
        return {"cat": "C", "tag": tag, "r": x.r, "s": x.s, "flow": x.flow}
    if isinstance(x, DirectSum):
        return {"cat": "C", "tag": "sum", "parts": [cobject_to_json(p) for p in x.parts]}
    raise TypeError(f"not a catalogued object: {x!r}")


def groth_flow(x: GrothC, m: int) -> GrothC:
    return x.map_labels(lambda lbl: spectral_flow(lbl, m))


def groth_contragredient(level: AdmissibleLevel, x: GrothC) -> GrothC:
    return x.map_labels(lambda lbl: contragredient(level, lbl))


def comp_factors(level: AdmissibleLevel, x: CObject) -> GrothC:
    """Composition-factor class of a catalogued object, all labels canonical."""
    if isinstance(x, Simple):
        return GrothC.of(x.label)
    if isinstance(x, Eminus):
        _check_rs(level, x.r, x.s)
        return GrothC.of(
            dminus(level, x.r, x.s, x.flow),
            atypical(level, level.u - x.r, level.v - x.s, x.flow),
        )
    if isinstance(x, Eplus):
        _check_rs(level, x.r, x.s)
        return GrothC.of(
            atypical(level, x.r, x.s, x.flow),
            dminus(level, level.u - x.r, level.v - x.s, x.flow),
        )
    if isinstance(x, Projective):
        _check_rs(level, x.r, x.s)
        u, v = level.u, level.v
        if x.s <= v - 2:
            sub = Eminus(u - x.r, v - x.s - 1, x.flow + 1)
            quo = Eminus(u - x.r, v - x.s, x.flow)
        else:
            sub = Eminus(x.r, v - 1, x.flow + 2)
            quo = Eminus(u - x.r, 1, x.flow)
        return comp_factors(level, sub) + comp_factors(level, quo)
    if isinstance(x, DirectSum):
        total = GrothC()
        for p in x.parts:
            total = total + comp_factors(level, p)
        return total
    raise TypeError(f"not a catalogued object: {x!r}")
