"""The extended category side: simple local modules M(r,s) x Pi_l(lam),
their fusion ring, duals and twist/monodromy exponents, and the catalogued
indecomposables R (projective covers) and M (two-step images).

Pi-labels lam are taken mod Z; the Virasoro Kac label obeys
M(r,s) = M(u-r,v-s) and is stored lexicographically minimal.  Twist and
monodromy scalars are exp(2*pi*i * e) and are exposed through their exact
exponents e in Q + Q*w, so all comparisons are exact mod 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .arithmetic import (
    AdmissibleLevel,
    OutOfKacTable,
    Weight,
    as_weight,
    h_rs,
    nu_rs,
    pi_conf_weight,
)


@dataclass(frozen=True)
class SimpleALabel:
    """Canonical label M(r,s) x Pi_flow(lam), lam mod Z, (r,s) ~ (u-r,v-s)."""

    r: int
    s: int
    flow: int
    lam: Weight

    def sort_key(self):
        return (self.r, self.s, self.flow, self.lam.sort_key())

    def __str__(self) -> str:
        return f"M({self.r},{self.s})xPi({self.flow};{self.lam})"


def _check_rs(level: AdmissibleLevel, r: int, s: int) -> None:
    if not (1 <= r <= level.u - 1 and 1 <= s <= level.v - 1):
        raise OutOfKacTable(f"(r, s) = ({r}, {s}) outside the Kac table of {level}")


def simple_a(level: AdmissibleLevel, r: int, s: int, flow: int, lam) -> SimpleALabel:
    _check_rs(level, r, s)
    r, s = min((r, s), (level.u - r, level.v - s))
    return SimpleALabel(r, s, flow, as_weight(lam).reduce(1))


def unit_a(level: AdmissibleLevel) -> SimpleALabel:
    """The extension algebra itself: M(1,1) x Pi_0(0)."""
    return simple_a(level, 1, 1, 0, 0)


# ---------------------------------------------------------------------------
# Fusion


def vir_fuse(level: AdmissibleLevel, r: int, s: int, rp: int, sp: int) -> List[Tuple[int, int]]:
    """Virasoro minimal-model fusion: the multiset of (r'', s'') channels.

    r'' runs from |r-r'|+1 to min(r+r'-1, 2u-r-r'-1) in steps of 2, and s''
    analogously with v.  Multiplicity-free.
    """
    _check_rs(level, r, s)
    _check_rs(level, rp, sp)
    rr = range(abs(r - rp) + 1, min(r + rp - 1, 2 * level.u - r - rp - 1) + 1, 2)
    ss = range(abs(s - sp) + 1, min(s + sp - 1, 2 * level.v - s - sp - 1) + 1, 2)
    return [(a, b) for a in rr for b in ss]


def pi_fuse(flow: int, lam, flowp: int, lamp) -> Tuple[int, Weight]:
    """Pi_l(lam) x Pi_l'(lam') = Pi_{l+l'}(lam+lam'), lam mod Z."""
    return flow + flowp, (as_weight(lam) + as_weight(lamp)).reduce(1)


def a_fuse(level: AdmissibleLevel, x: SimpleALabel, y: SimpleALabel) -> "GrothA":
    """Fusion of simples: Virasoro channels tensored with the Pi product."""
    flow, lam = pi_fuse(x.flow, x.lam, y.flow, y.lam)
    out: Dict[SimpleALabel, int] = {}
    for rr, ss in vir_fuse(level, x.r, x.s, y.r, y.s):
        z = simple_a(level, rr, ss, flow, lam)
        out[z] = out.get(z, 0) + 1
    return GrothA(level, out)


# ---------------------------------------------------------------------------
# Grothendieck ring


class GrothA:
    """Finitely supported Z-combination of SimpleALabel with fusion product."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: AdmissibleLevel, coeffs: Optional[Dict[SimpleALabel, int]] = None):
        self.level = level
        self.coeffs = {x: n for x, n in (coeffs or {}).items() if n != 0}

    @classmethod
    def of(cls, level: AdmissibleLevel, *labels: SimpleALabel) -> "GrothA":
        out: Dict[SimpleALabel, int] = {}
        for x in labels:
            out[x] = out.get(x, 0) + 1
        return cls(level, out)

    def multiplicity(self, label: SimpleALabel) -> int:
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

    def __add__(self, other: "GrothA") -> "GrothA":
        out = dict(self.coeffs)
        for x, n in other.coeffs.items():
            out[x] = out.get(x, 0) + n
        return GrothA(self.level, out)

    def __sub__(self, other: "GrothA") -> "GrothA":
        out = dict(self.coeffs)
        for x, n in other.coeffs.items():
            out[x] = out.get(x, 0) - n
        return GrothA(self.level, out)

    def __neg__(self) -> "GrothA":
        return GrothA(self.level, {x: -n for x, n in self.coeffs.items()})

    def __rmul__(self, n: int) -> "GrothA":
        if not isinstance(n, int):
            return NotImplemented
        return GrothA(self.level, {x: n * c for x, c in self.coeffs.items()})

    def __mul__(self, other: "GrothA") -> "GrothA":
        if isinstance(other, int):
            return self.__rmul__(other)
        total = GrothA(self.level)
        for x, n in self.coeffs.items():
            for y, m in other.coeffs.items():
                total = total + (n * m) * a_fuse(self.level, x, y)
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, GrothA) and self.coeffs == other.coeffs

    def map_labels(self, fn) -> "GrothA":
        out: Dict[SimpleALabel, int] = {}
        for x, n in self.coeffs.items():
            y = fn(x)
            out[y] = out.get(y, 0) + n
        return GrothA(self.level, out)

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(
            (f"{n}*{x}" if n != 1 else str(x)) for x, n in self.sorted_items()
        )

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Duality, twist, monodromy


def rigid_dual_label(level: AdmissibleLevel, x: SimpleALabel) -> SimpleALabel:
    """Left dual of a simple: (l, lam) -> (-l, -lam)."""
    return simple_a(level, x.r, x.s, -x.flow, -x.lam)


def gv_dual(level: AdmissibleLevel, x: SimpleALabel) -> SimpleALabel:
    """Grothendieck-Verdier dual: (r, s, l, lam) -> (r, s, -l-2, t-lam)."""
    return simple_a(level, x.r, x.s, -x.flow - 2, level.t - x.lam)


def twist_exponent(level: AdmissibleLevel, x: SimpleALabel) -> Weight:
    """Exponent of the ribbon twist e^{2 pi i L_0}: h_{r,s} + (k/4)l^2 + lam(l+1).

    Well defined mod 1 (the label's lam is itself only a coset mod Z).
    """
    return pi_conf_weight(level, x.flow, x.lam) + h_rs(level, x.r, x.s)


def monodromy_exponent(level: AdmissibleLevel, flow: int, lam, flowp: int, lamp) -> Weight:
    """Pi-sector double-braiding exponent k*l*l'/2 + lam*l' + lam'*l."""
    return (
        Weight(level.k * flow * flowp / 2)
        + as_weight(lam) * flowp
        + as_weight(lamp) * flow
    )


def is_local_flow(flow) -> bool:
    """A Pi-sector flow parameter induces a local module iff it is an integer."""
    return as_weight(flow).is_integral


# ---------------------------------------------------------------------------
# Catalogued indecomposables


@dataclass(frozen=True)
class ASimple:
    label: SimpleALabel

    @property
    def layers(self) -> Tuple[Tuple[SimpleALabel, ...], ...]:
        return ((self.label,),)

    def __str__(self) -> str:
        return str(self.label)


@dataclass(frozen=True)
class RObject:
    """Projective cover R(r,s;lam)@flow with the diamond Loewy diagram
    top (r,s,l,lam) / middle (r,s-+1,l+1,lam-t/2) / bottom (r,s,l+2,lam-t),
    middle entries with Kac s-component 0 or v dropped."""

    r: int
    s: int
    lam: Weight
    flow: int
    layers: Tuple[Tuple[SimpleALabel, ...], ...]

    def __str__(self) -> str:
        return f"R({self.r},{self.s};{self.lam})@{self.flow}"


@dataclass(frozen=True)
class MObject:
    """Length-2 module M[r,s]@flow: top (r,s,l,nu_{r,s}) over (r,s-1,l+1,nu_{r,s+1})."""

    r: int
    s: int
    flow: int
    layers: Tuple[Tuple[SimpleALabel, ...], ...]

    def __str__(self) -> str:
        return f"M[{self.r},{self.s}]@{self.flow}"


@dataclass(frozen=True)
class ADirectSum:
    parts: Tuple["AObject", ...]

    @property
    def layers(self):
        raise TypeError("direct sums carry no single Loewy filtration")

    def __str__(self) -> str:
        return " (+) ".join(str(p) for p in self.parts)


AObject = Union[ASimple, RObject, MObject, ADirectSum]


def build_R(level: AdmissibleLevel, r: int, s: int, lam, flow: int) -> RObject:
    _check_rs(level, r, s)
    w = as_weight(lam).reduce(1)
    half_t = Fraction(level.t, 2)
    top = (simple_a(level, r, s, flow, w),)
    mid = tuple(
        sorted(
            (
                simple_a(level, r, s2, flow + 1, w - half_t)
                for s2 in (s - 1, s + 1)
                if 1 <= s2 <= level.v - 1
            ),
            key=lambda x: x.sort_key(),
        )
    )
    bot = (simple_a(level, r, s, flow + 2, w - level.t),)
    layers = tuple(layer for layer in (top, mid, bot) if layer)
    r, s = min((r, s), (level.u - r, level.v - s))
    return RObject(r, s, w, flow, layers)


def build_M(level: AdmissibleLevel, r: int, s: int, flow: int) -> Union[MObject, ASimple]:
    """The image module M[r,s]@flow for 1 <= s <= v.

    Constituents with Virasoro s-component 0 or v are dropped, so the
    boundary cases are simple: M[r,1] = M(r,1) x Pi_flow(nu_{r,1}) and
    M[r,v] = M(r,v-1) x Pi_{flow+1}(nu_{r,v+1}) = M(u-r,1) x Pi_{flow+1}(nu_{u-r,1}).
    """
    if not (1 <= r <= level.u - 1 and 1 <= s <= level.v):
        raise OutOfKacTable(f"(r, s) = ({r}, {s}) outside [1,{level.u - 1}] x [1,{level.v}]")
    if s == 1:
        return ASimple(simple_a(level, r, 1, flow, nu_rs(level, r, 1)))
    if s == level.v:
        return ASimple(simple_a(level, r, level.v - 1, flow + 1, nu_rs(level, r, level.v + 1)))
    top = (simple_a(level, r, s, flow, nu_rs(level, r, s)),)
    bot = (simple_a(level, r, s - 1, flow + 1, nu_rs(level, r, s + 1)),)
    return MObject(r, s, flow, (top, bot))


def rigid_dual(level: AdmissibleLevel, x: Union[AObject, SimpleALabel]) -> Union[AObject, SimpleALabel]:
    """Left dual of a catalogued object.

    R(r,s;lam)@l -> R(r,s;t-lam)@(-l-2); M-objects dualize by reversing the
    Loewy diagram, which lands back in the catalog as M[u-r,v-s+1]@(-l-1).
    """
    if isinstance(x, SimpleALabel):
        return rigid_dual_label(level, x)
    if isinstance(x, ASimple):
        return ASimple(rigid_dual_label(level, x.label))
    if isinstance(x, RObject):
        return build_R(level, x.r, x.s, level.t - x.lam, -x.flow - 2)
    if isinstance(x, MObject):
        return build_M(level, level.u - x.r, level.v - x.s + 1, -x.flow - 1)
    if isinstance(x, ADirectSum):
        return ADirectSum(tuple(rigid_dual(level, p) for p in x.parts))
    raise TypeError(f"cannot dualize {x!r}")


def comp_factors_a(level: AdmissibleLevel, x: AObject) -> GrothA:
    if isinstance(x, (ASimple, RObject, MObject)):
        out: Dict[SimpleALabel, int] = {}
        for layer in x.layers:
            for lbl in layer:
                out[lbl] = out.get(lbl, 0) + 1
        return GrothA(level, out)
    if isinstance(x, ADirectSum):
        total = GrothA(level)
        for p in x.parts:
            total = total + comp_factors_a(level, p)
        return total
    raise TypeError(f"not a catalogued object: {x!r}")


# -- JSON label schema --
# {"cat": "A", "r": r, "s": s, "flow": l, "lam": Weight} for simples, and
# {"cat": "A", "tag": "R" | "M" | "sum", ...} for catalogued objects.


def label_to_json(x: SimpleALabel) -> dict:
    return {"cat": "A", "r": x.r, "s": x.s, "flow": x.flow, "lam": x.lam.to_json()}


def label_from_json(level: AdmissibleLevel, data: dict) -> SimpleALabel:
    if data.get("cat") != "A" or "tag" in data:
        raise ValueError(f"not a simple A-label: {data!r}")
    return simple_a(level, data["r"], data["s"], int(data.get("flow", 0)), Weight.from_json(data["lam"]))


def aobject_to_json(x: AObject) -> dict:
    if isinstance(x, ASimple):
        return label_to_json(x.label)
    if isinstance(x, RObject):
        return {"cat": "A", "tag": "R", "r": x.r, "s": x.s, "flow": x.flow, "lam": x.lam.to_json()}
    if isinstance(x, MObject):
        return {"cat": "A", "tag": "M", "r": x.r, "s": x.s, "flow": x.flow}
    if isinstance(x, ADirectSum):
        return {"cat": "A", "tag": "sum", "parts": [aobject_to_json(p) for p in x.parts]}
    raise TypeError(f"not a catalogued object: {x!r}")


def aobject_from_json(level: AdmissibleLevel, data: dict) -> AObject:
    if data.get("cat") != "A":
        raise ValueError(f"not an A-object: {data!r}")
    tag = data.get("tag")
    if tag is None:
        return ASimple(label_from_json(level, data))
    if tag == "R":
        return build_R(level, data["r"], data["s"], Weight.from_json(data["lam"]), int(data.get("flow", 0)))
    if tag == "M":
        return build_M(level, data["r"], data["s"], int(data.get("flow", 0)))
    if tag == "sum":
        return ADirectSum(tuple(aobject_from_json(level, p) for p in data["parts"]))
    raise ValueError(f"unknown A-object tag {tag!r}")


def loewy_lines(x: AObject) -> List[str]:
    """ASCII Loewy diagram, one line per layer, top first."""
    if isinstance(x, ADirectSum):
        out: List[str] = []
        for i, p in enumerate(x.parts):
            if i:
                out.append("(+)")
            out.extend(loewy_lines(p))
        return out
    header = str(x) if isinstance(x, (RObject, MObject)) else None
    body = ["   ".join(str(lbl) for lbl in layer) for layer in x.layers]
    if len(body) > 1:
        body = [body[0]] + [line for b in body[1:] for line in ("  |", b)]
    return ([header + ":"] if header else []) + ["  " + b for b in body]
