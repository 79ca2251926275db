"""The walled Brauer algebra: linear combinations of diagrams over Q(d).

An element is a sparse map diagram -> coefficient with no zero coefficients
stored.  Multiplication extends diagram composition bilinearly, weighting each
composition by d^loops.  The diagram basis is the normal form; equality is
term-by-term.  Also provides the Jucys-Murphy elements, the flip
anti-automorphism, and the JSON wire format.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd

from .diagrams import (
    Shape,
    WalledDiagram,
    compose,
    d_pair,
    identity,
    make_diagram,
    s_gen,
    s_pair,
    vertical_flip,
)
from .errors import IndexOutOfRange, ParseError, ShapeMismatch
from .scalars import (
    DELTA,
    ONE,
    ZERO,
    DeltaScalar,
    _den_lcm,
    _F1,
    padd,
    parse_scalar,
    pmul,
    pscale,
    rescaled_numerator,
    scalar_linear_combination,
    scalar_str,
)

_DELTA_POWERS = [ONE, DELTA]


def _delta_power(k: int) -> DeltaScalar:
    while len(_DELTA_POWERS) <= k:
        _DELTA_POWERS.append(_DELTA_POWERS[-1] * DELTA)
    return _DELTA_POWERS[k]


class AlgebraElement:
    __slots__ = ("shape", "terms", "_cleared")

    def __init__(self, shape: Shape, terms: dict):
        self.shape = shape
        self.terms = {d: c for d, c in terms.items() if c}
        self._cleared = None

    def _cleared_form(self):
        """Common denominator and per-diagram integer numerators; cached.

        Scaling out the coefficient denominators keeps the dense product loop
        on plain integers, which is several times faster than Fractions.
        """
        if self._cleared is None:
            den = (_F1,)
            for c in self.terms.values():
                den = _den_lcm(den, c.den)
            nums = {d: rescaled_numerator(c, den) for d, c in self.terms.items()}
            scale = 1
            for num in nums.values():
                for coef in num:
                    scale = scale * coef.denominator // gcd(scale, coef.denominator)
            nums = {
                d: tuple(int(coef * scale) for coef in num) for d, num in nums.items()
            }
            self._cleared = (pscale(den, Fraction(scale)), nums)
        return self._cleared

    @classmethod
    def zero(cls, shape: Shape) -> "AlgebraElement":
        return cls(shape, {})

    @classmethod
    def one(cls, shape: Shape) -> "AlgebraElement":
        return cls(shape, {identity(shape): ONE})

    @classmethod
    def from_diagram(cls, d: WalledDiagram, coeff=ONE) -> "AlgebraElement":
        return cls(d.shape, {d: _scalar(coeff)})

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.shape == other.shape and self.terms == other.terms

    def coeff(self, d: WalledDiagram) -> DeltaScalar:
        return self.terms.get(d, ZERO)

    def support(self):
        return self.terms.keys()

    def _check_shape(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_shape(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            prev = out.get(d)
            out[d] = c if prev is None else prev + c
        return AlgebraElement(self.shape, out)

    def __neg__(self):
        return AlgebraElement(self.shape, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_shape(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            prev = out.get(d)
            out[d] = -c if prev is None else prev - c
        return AlgebraElement(self.shape, out)

    def scale(self, c) -> "AlgebraElement":
        c = _scalar(c)
        if not c:
            return AlgebraElement.zero(self.shape)
        return AlgebraElement(self.shape, {d: a * c for d, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check_shape(other)
            return _mul_elements(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        # scalars are central, so left and right scaling agree
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(_scalar(other).inverse())

    def __repr__(self):
        if not self.terms:
            return "AlgebraElement(0)"
        bits = [f"({scalar_str(c)})*{list(d.img)}" for d, c in sorted_terms(self)]
        return "AlgebraElement(" + " + ".join(bits) + ")"


def _scalar(c) -> DeltaScalar:
    if isinstance(c, DeltaScalar):
        return c
    return DeltaScalar.from_fraction(c)


_DENSE_PAIR_THRESHOLD = 1024


def _mul_elements(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear product, tuned for the certification sweeps.

    Terms are grouped by coefficient so each distinct scalar pair multiplies
    once, and per-diagram sums count repeated values before touching the
    canonicalizing scalar addition.  Large products on tabulated shapes take
    a vectorized path that aggregates the whole term-pair grid at once.
    """
    from .diagrams import _shape_entry

    shape = a.shape
    space = _shape_entry(shape)
    if (
        len(a.terms) * len(b.terms) >= _DENSE_PAIR_THRESHOLD
        and shape.n <= 6
    ):
        return _mul_elements_dense(a, b, space)

    by_idx, cache = space.by_idx, space.cache
    groups_a: dict = {}
    for d, c in a.terms.items():
        groups_a.setdefault(c, []).append(d)
    groups_b: dict = {}
    for d, c in b.terms.items():
        groups_b.setdefault(c, []).append(d)

    buckets: dict = {}
    for ca, das in groups_a.items():
        for cb, dbs in groups_b.items():
            c0 = ca * cb
            weighted = {0: c0}
            for da in das:
                base = da.idx << 24
                for db in dbs:
                    key = base | db.idx
                    hit = cache.get(key)
                    if hit is None:
                        compose(da, db)
                        hit = cache[key]
                    loops = hit & 0xFF
                    c = weighted.get(loops)
                    if c is None:
                        c = c0 * _delta_power(loops)
                        weighted[loops] = c
                    bucket = buckets.get(hit >> 8)
                    if bucket is None:
                        buckets[hit >> 8] = {c: 1}
                    else:
                        bucket[c] = bucket.get(c, 0) + 1
    out: dict = {}
    for idx, bucket in buckets.items():
        acc = scalar_linear_combination(bucket.items())
        if acc:
            out[by_idx[idx]] = acc
    return AlgebraElement(shape, out)


def _mul_elements_dense(a: AlgebraElement, b: AlgebraElement, space) -> AlgebraElement:
    """Vectorized product over the shape's composition table.

    Works in cleared form: each factor becomes a common denominator and
    polynomial numerators per distinct coefficient, so the aggregation loop is
    pure polynomial addition and a single canonicalization closes each output
    diagram.
    """
    import numpy as np

    from .diagrams import composition_table

    table = composition_table(a.shape)
    if table is None:
        raise AssertionError("dense path requested for an untabulated shape")
    table_idx, table_loops = table

    def split(element):
        den, cleared = element._cleared_form()
        values: dict = {}
        nums: list = []
        idx = np.empty(len(element.terms), dtype=np.intp)
        label = np.empty(len(element.terms), dtype=np.int64)
        for pos, d in enumerate(element.terms):
            num = cleared[d]
            lab = values.get(num)
            if lab is None:
                lab = values[num] = len(nums)
                nums.append(num)
            idx[pos] = d.idx
            label[pos] = lab
        return idx, label, nums, den

    ia, la, nums_a, den_a = split(a)
    ib, lb, nums_b, den_b = split(b)
    kb = len(nums_b)
    grid = np.ix_(ia, ib)
    # pack (numerator pair, result diagram, loops) into one integer per cell
    cell = (la[:, None] * kb + lb[None, :]) * (len(space.by_idx) << 3)
    cell = cell + (table_idx[grid].astype(np.int64) << 3) + table_loops[grid]
    uniq, counts = np.unique(cell.ravel(), return_counts=True)

    span = len(space.by_idx) << 3
    products: dict = {}
    acc: dict = {}
    for key, count in zip(uniq.tolist(), counts.tolist()):
        group, rem = divmod(key, span)
        dd, loops = rem >> 3, rem & 7
        pk = (group, loops)
        num = products.get(pk)
        if num is None:
            ga, gb = divmod(group, kb)
            num = pmul(nums_a[ga], nums_b[gb])
            if loops:
                num = (0,) * loops + num  # multiply by d^loops
            products[pk] = num
        if count != 1:
            num = tuple(c * count for c in num)
        prev = acc.get(dd)
        acc[dd] = num if prev is None else padd(prev, num)
    den = pmul(den_a, den_b)
    out: dict = {}
    for idx, num in acc.items():
        if num:
            out[space.by_idx[idx]] = DeltaScalar.make(num, den)
    return AlgebraElement(a.shape, out)


def sorted_terms(a: AlgebraElement):
    return sorted(a.terms.items(), key=lambda item: item[0].img)


def iota(a: AlgebraElement) -> AlgebraElement:
    """The flip anti-automorphism: reverse products, fix every generator."""
    return AlgebraElement(a.shape, {vertical_flip(d): c for d, c in a.terms.items()})


def embed(a: AlgebraElement, shape: Shape) -> AlgebraElement:
    """View an element of (r, s') inside (r, s), s >= s', via vertical strands."""
    if shape.r != a.shape.r or shape.s < a.shape.s:
        raise ShapeMismatch(f"cannot embed {a.shape} into {shape}")
    extra = range(a.shape.n + 1, shape.n + 1)
    terms = {make_diagram(shape, d.img + tuple(extra)): c for d, c in a.terms.items()}
    return AlgebraElement(shape, terms)


def jm_element(shape: Shape, k: int) -> AlgebraElement:
    """The k-th Jucys-Murphy element x_k."""
    r, n = shape.r, shape.n
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"x_{k} outside 1..{n}")
    acc = AlgebraElement.zero(shape)
    if k <= r:
        for i in range(1, k):
            acc = acc + AlgebraElement.from_diagram(s_pair(shape, i, k))
    else:
        for i in range(1, r + 1):
            acc = acc - AlgebraElement.from_diagram(d_pair(shape, i, k))
        for i in range(r + 1, k):
            acc = acc + AlgebraElement.from_diagram(s_pair(shape, i, k))
        acc = acc + AlgebraElement.one(shape).scale(DELTA)
    return acc


def subalgebra_generators(shape: Shape, k: int) -> list:
    """Generators of the subalgebra of diagrams trivial beyond the first k sites."""
    r, n = shape.r, shape.n
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"subalgebra level {k} outside 0..{n}")
    gens = []
    for i in range(1, k):
        if i != r:
            gens.append(AlgebraElement.from_diagram(s_gen(shape, i)))
    if k >= r + 1 and r >= 1 and shape.s >= 1:
        gens.append(AlgebraElement.from_diagram(d_pair(shape, r, r + 1)))
    return gens


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b - b * a


def element_to_json(a: AlgebraElement) -> dict:
    return {
        "r": a.shape.r,
        "s": a.shape.s,
        "terms": [
            {"diagram": list(d.img), "coeff": scalar_str(c)} for d, c in sorted_terms(a)
        ],
    }


def element_from_json(obj) -> AlgebraElement:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
    try:
        shape = Shape(int(obj["r"]), int(obj["s"]))
        terms = {}
        for i, term in enumerate(obj["terms"]):
            d = make_diagram(shape, term["diagram"])
            c = parse_scalar(term["coeff"])
            if d in terms:
                raise ParseError(f"duplicate diagram in term {i}")
            terms[d] = c
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed element object: {exc}") from exc
    return AlgebraElement(shape, terms)


def element_to_text(a: AlgebraElement) -> str:
    """Display form, one term per line; not parseable."""
    if not a.terms:
        return "0"
    lines = []
    for d, c in sorted_terms(a):
        lines.append(f"{scalar_str(c)} * {list(d.img)}")
    return "\n".join(lines)


def defining_relations_hold(shape: Shape) -> dict:
    """Check the defining relations of the algebra in the given shape.

    Returns a dict mapping relation name to bool; requires r, s >= 1 and is
    intended for shapes where both sides of the wall have at least two columns
    (the braid and mixed relations need them).
    """
    r, n = shape.r, shape.n
    one = AlgebraElement.one(shape)

    def elem(d):
        return AlgebraElement.from_diagram(d)

    s = {
        i: elem(s_gen(shape, i))
        for i in range(1, n)
        if i != r
    }
    d = elem(d_pair(shape, r, r + 1))
    results = {}
    results["s_squared"] = all(s[i] * s[i] == one for i in s)
    results["d_squared"] = (d * d) == d.scale(DELTA)
    results["braid"] = all(
        s[i] * s[i + 1] * s[i] == s[i + 1] * s[i] * s[i + 1]
        for i in s
        if i + 1 in s
    )
    results["distant_s_commute"] = all(
        s[i] * s[j] == s[j] * s[i] for i in s for j in s if j > i + 1
    )
    results["d_s_adjacent"] = all(
        d * s[i] * d == d for i in (r - 1, r + 1) if i in s
    )
    results["d_s_commute"] = all(
        d * s[i] == s[i] * d for i in s if i not in (r - 1, r + 1)
    )
    if r - 1 in s and r + 1 in s:
        results["mixed_braid_1"] = (
            d * s[r + 1] * s[r - 1] * d * s[r - 1]
            == d * s[r + 1] * s[r - 1] * d * s[r + 1]
        )
        results["mixed_braid_2"] = (
            s[r - 1] * d * s[r + 1] * s[r - 1] * d
            == s[r + 1] * d * s[r + 1] * s[r - 1] * d
        )
    return results
