"""Brute-force finite-window models of relaxed sl2 weight modules and of
depth-1 affine vectors.

These realizations are deliberately independent of the label bookkeeping in
the rest of the package: they build explicit matrices / bracket tables and
check relations coefficient by coefficient, so they serve as the oracle for
reducibility points, exact-sequence witnesses, and the depth-1 singular
vector that drives the explicit fusion computation.

Matrix entries live in Q[w] (polynomials in the formal irrational w with
Fraction coefficients), since a generic weight lam = a + b*w gets squared in
the string coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .arithmetic import AdmissibleLevel, Weight, as_weight, lam_rs

Poly = Tuple[Fraction, ...]  # coefficients of 1, w, w^2, ...

_ZERO: Poly = ()
_ONE: Poly = (Fraction(1),)


def _trim(cs: List[Fraction]) -> Poly:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _poly(x) -> Poly:
    w = as_weight(x)
    return _trim([w.a, w.b])


def _padd(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return _trim([
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    ])


def _psub(p: Poly, q: Poly) -> Poly:
    return _padd(p, tuple(-c for c in q))


def _pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return _ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def _pscale(p: Poly, c) -> Poly:
    c = Fraction(c) if not isinstance(c, Fraction) else c
    return _trim([a * c for a in p])


Vec = Dict[int, Poly]  # window vector: index i -> coefficient of v_{lam+2i}


def _vadd(x: Vec, y: Vec) -> Vec:
    out = dict(x)
    for i, p in y.items():
        out[i] = _padd(out.get(i, _ZERO), p)
    return {i: p for i, p in out.items() if p}


def _vsub(x: Vec, y: Vec) -> Vec:
    return _vadd(x, {i: tuple(-c for c in p) for i, p in y.items()})


@dataclass(frozen=True)
class RelaxedWindow:
    """The string module E^{sign}_{lam, C} restricted to indices [-N, N].

    h acts diagonally with eigenvalue lam + 2i.  In the minus model e shifts
    up with coefficient 1 and f shifts down with the string coefficient
    (C - (lam+2i-2)^2/2 - (lam+2i-2)) / 2; the plus model is the mirror with
    f shifting down by 1 and e carrying (C - (lam+2i+2)^2/2 + (lam+2i+2)) / 2.
    Shift images falling outside the window are truncated, so only interior
    indices support exact relations.
    """

    lam: Weight
    casimir: Weight
    sign: str
    window: int

    def _x(self, i: int, offset: int) -> Poly:
        return _poly(self.lam + 2 * i + offset)

    def up_coeff(self, i: int) -> Poly:
        """Coefficient of e: v_i -> v_{i+1}."""
        if self.sign == "minus":
            return _ONE
        x = self._x(i, 2)
        val = _psub(_poly(self.casimir), _pscale(_pmul(x, x), Fraction(1, 2)))
        return _pscale(_padd(val, x), Fraction(1, 2))

    def down_coeff(self, i: int) -> Poly:
        """Coefficient of f: v_i -> v_{i-1}."""
        if self.sign == "plus":
            return _ONE
        x = self._x(i, -2)
        val = _psub(_poly(self.casimir), _pscale(_pmul(x, x), Fraction(1, 2)))
        return _pscale(_psub(val, x), Fraction(1, 2))

    def act(self, gen: str, vec: Vec) -> Vec:
        out: Vec = {}
        n = self.window
        for i, p in vec.items():
            if gen == "h":
                image = [(i, _pmul(p, self._x(i, 0)))]
            elif gen == "e":
                image = [(i + 1, _pmul(p, self.up_coeff(i)))] if i + 1 <= n else []
            elif gen == "f":
                image = [(i - 1, _pmul(p, self.down_coeff(i)))] if i - 1 >= -n else []
            else:
                raise ValueError(f"unknown generator {gen!r}")
            for j, q in image:
                if q:
                    out[j] = _padd(out.get(j, _ZERO), q)
        return {i: p for i, p in out.items() if p}

    def interior(self) -> range:
        return range(-self.window + 1, self.window)

    def check_brackets(self) -> bool:
        """[e,f] = h, [h,e] = 2e, [h,f] = -2f on every interior index."""
        for i in self.interior():
            basis: Vec = {i: _ONE}
            ef = self.act("e", self.act("f", basis))
            fe = self.act("f", self.act("e", basis))
            if _vsub(ef, fe) != self.act("h", basis):
                return False
            he = self.act("h", self.act("e", basis))
            eh = self.act("e", self.act("h", basis))
            if _vsub(he, eh) != {j: _pscale(p, 2) for j, p in self.act("e", basis).items()}:
                return False
            hf = self.act("h", self.act("f", basis))
            fh = self.act("f", self.act("h", basis))
            fv = self.act("f", basis)
            if _vsub(hf, fh) != {j: _pscale(p, -2) for j, p in fv.items()}:
                return False
        return True

    def check_casimir(self) -> bool:
        """2ef + h(h-2)/2 acts as the Casimir scalar on interior indices."""
        c = _poly(self.casimir)
        for i in self.interior():
            basis: Vec = {i: _ONE}
            ef = self.act("e", self.act("f", basis))
            h = self._x(i, 0)
            diag = _pscale(_pmul(h, _psub(h, (Fraction(2),))), Fraction(1, 2))
            total = _vadd({j: _pscale(p, 2) for j, p in ef.items()}, {i: diag} if diag else {})
            if total != ({i: c} if c else {}):
                return False
        return True

    def submodule_indices(self, mu: Weight) -> List[int]:
        """Indices i with lam + 2i >= mu + 2, for mu = lam + 2*i0 in the window."""
        diff = (mu - self.lam) * Fraction(1, 2)
        if not diff.is_integral:
            raise ValueError(f"mu = {mu} is not in lam + 2Z")
        i0 = int(diff.a)
        return [i for i in range(-self.window, self.window + 1) if i >= i0 + 1]

    def is_submodule_stable(self, mu: Weight) -> bool:
        """The D- window span {lam+2i >= mu+2} is e- and f-stable (minus model)."""
        if self.sign != "minus":
            raise ValueError("the exact-sequence witness applies to the minus model")
        inside = set(self.submodule_indices(mu))
        for i in inside:
            for gen in ("e", "f"):
                image = self.act(gen, {i: _ONE})
                if any(j not in inside for j in image):
                    return False
        return True


def build_relaxed(lam, casimir, sign: str, window: int) -> RelaxedWindow:
    if sign not in ("minus", "plus"):
        raise ValueError(f"sign must be 'minus' or 'plus', got {sign!r}")
    if window < 1:
        raise ValueError("window must be >= 1")
    return RelaxedWindow(as_weight(lam), as_weight(casimir), sign, window)


def reducibility_points(lam, casimir, sign: str, window: int) -> List[Weight]:
    """All mu in lam + 2Z inside the window with C = C_mu (minus) or C_{-mu} (plus).

    C_mu = mu^2/2 + mu.  An empty list certifies irreducibility over the window.
    """
    lam = as_weight(lam)
    target = _poly(casimir)
    out: List[Weight] = []
    for i in range(-window, window + 1):
        mu = lam + 2 * i
        mp = _poly(mu)
        c_mu = _pscale(_pmul(mp, mp), Fraction(1, 2))
        c_mu = _padd(c_mu, mp) if sign == "minus" else _psub(c_mu, mp)
        if c_mu == target:
            out.append(mu)
    return sorted(out, key=lambda w: w.sort_key())


# ---------------------------------------------------------------------------
# Depth-1 affine model over the top of D+(1,1)

# basis keys: ("T", m) is f^m applied to the highest-weight vector;
# (a, m) for a in {e, h, f} is a_{-1} applied to ("T", m).

_BRACKET = {
    ("e", "e"): (), ("f", "f"): (), ("h", "h"): (),
    ("e", "f"): (("h", Fraction(1)),), ("f", "e"): (("h", Fraction(-1)),),
    ("h", "e"): (("e", Fraction(2)),), ("e", "h"): (("e", Fraction(-2)),),
    ("h", "f"): (("f", Fraction(-2)),), ("f", "h"): (("f", Fraction(2)),),
}

_PAIRING = {("e", "f"): Fraction(1), ("f", "e"): Fraction(1), ("h", "h"): Fraction(2)}

AVec = Dict[Tuple[str, int], Fraction]


class AffineDepth1:
    """(sl2 tensor t^-1) applied to the top of the Verma module over D+(1,1).

    Mode actions are derived from [a_m, b_n] = [a,b]_{m+n} + m<a,b>delta k,
    which closes on this space for the modes e_0/e_1/f_1/h_1 needed to test
    singular vectors at depth 1.
    """

    def __init__(self, level: AdmissibleLevel):
        self.level = level
        self.hw = lam_rs(level, 1, 1)  # = -t

    def _top(self, gen: str, m: int) -> List[Tuple[Tuple[str, int], Fraction]]:
        lam = self.hw
        if gen == "e":
            return [(("T", m - 1), m * (lam - m + 1))] if m >= 1 else []
        if gen == "f":
            return [(("T", m + 1), Fraction(1))]
        return [(("T", m), lam - 2 * m)]

    def act_zero(self, gen: str, vec: AVec) -> AVec:
        out: AVec = {}

        def add(key, coef):
            if coef:
                out[key] = out.get(key, Fraction(0)) + coef

        for (kind, m), c in vec.items():
            if kind == "T":
                for key, coef in self._top(gen, m):
                    add(key, c * coef)
            else:
                for b, coef in _BRACKET[(gen, kind)]:
                    add((b, m), c * coef)
                for (_, tm), coef in self._top(gen, m):
                    add((kind, tm), c * coef)
        return {k: c for k, c in out.items() if c}

    def act_one(self, gen: str, vec: AVec) -> AVec:
        out: AVec = {}

        def add(key, coef):
            if coef:
                out[key] = out.get(key, Fraction(0)) + coef

        for (kind, m), c in vec.items():
            if kind == "T":
                continue  # positive modes kill the top space
            for b, coef in _BRACKET[(gen, kind)]:
                for key, tc in self._top(b, m):
                    add(key, c * coef * tc)
            pairing = _PAIRING.get((gen, kind), Fraction(0))
            add(("T", m), c * pairing * self.level.k)
        return {k: c for k, c in out.items() if c}

    def singular_vector(self, perturbation: Fraction = Fraction(0)) -> AVec:
        """e_{-1} f^2 v - (t+1) h_{-1} f v - (t(t+1) + perturbation) f_{-1} v."""
        t = self.level.t
        return {
            ("e", 2): Fraction(1),
            ("h", 1): -(t + 1),
            ("f", 0): -(t * (t + 1) + perturbation),
        }


def verify_affine_singular(level: AdmissibleLevel, perturbation: Fraction = Fraction(0)) -> bool:
    """True iff e_0, e_1, f_1, h_1 all annihilate the depth-1 singular vector."""
    model = AffineDepth1(level)
    s = model.singular_vector(perturbation)
    if model.act_zero("e", s):
        return False
    return all(not model.act_one(gen, s) for gen in ("e", "f", "h"))
