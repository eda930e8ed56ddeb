"""
Finite linear combinations with exact rational coefficients over any hashable basis.

Every basis type used here exposes a `size` (its grading) and a canonical `str`.
Terms always iterate in canonical order: by size, then by canonical string,
and tensors leg by leg.
"""
from fractions import Fraction
from numbers import Rational
from typing import Callable, Dict, Iterable, Iterator, Tuple, Union


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"Coefficients must be exact rationals, got {c!r}")
    return c


def basis_key(b) -> tuple:
    """(size, canonical string); tensors compare leg by leg"""
    if isinstance(b, Tensor):
        return tuple(basis_key(leg) for leg in b.legs)
    return (b.size, str(b))


class Tensor:
    """An ordered tuple of basis elements, the basis of tensor-valued LinCombs"""
    __slots__ = ("legs", "_hash")

    def __init__(self, *legs):
        self.legs = tuple(legs)
        self._hash = hash(self.legs)

    @property
    def size(self) -> int:
        return sum(leg.size for leg in self.legs)

    def __len__(self):
        return len(self.legs)

    def __iter__(self):
        return iter(self.legs)

    def __getitem__(self, i):
        return self.legs[i]

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.legs == other.legs

    def __hash__(self):
        return self._hash

    def __str__(self):
        return " (x) ".join(str(leg) for leg in self.legs)

    def __repr__(self):
        return f"Tensor({', '.join(repr(leg) for leg in self.legs)})"


class LinComb:
    """
    Immutable element of the free Q-module on a basis.

    Construct from a mapping or an iterable of (basis, coefficient) pairs;
    repeated basis elements accumulate and zero coefficients are dropped.
    """
    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Dict, Iterable, None] = None):
        acc: Dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for b, c in items:
                acc[b] = acc.get(b, 0) + c
        self._terms = {b: _normalize(c) for b, c in acc.items() if c != 0}

    @classmethod
    def _owned(cls, terms: Dict) -> "LinComb":
        obj = cls.__new__(cls)
        obj._terms = {b: _normalize(c) for b, c in terms.items() if c != 0}
        return obj

    @classmethod
    def basis(cls, b, coeff=1) -> "LinComb":
        return cls._owned({b: coeff})

    @classmethod
    def zero(cls) -> "LinComb":
        return cls._owned({})

    def coefficient(self, b):
        return self._terms.get(b, 0)

    def items(self) -> Iterator[Tuple[object, Rational]]:
        for b in self:
            yield b, self._terms[b]

    def support(self):
        return list(self)

    def is_zero(self) -> bool:
        return not self._terms

    def __iter__(self):
        return iter(sorted(self._terms, key=basis_key))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __contains__(self, b):
        return b in self._terms

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self._terms)
        for b, c in other._terms.items():
            acc[b] = acc.get(b, 0) + c
        return LinComb._owned(acc)

    __radd__ = __add__

    def __neg__(self):
        return LinComb._owned({b: -c for b, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, LinComb) or not isinstance(scalar, Rational):
            return NotImplemented
        return LinComb._owned({b: c * scalar for b, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"LinComb({render(self)})"


def as_lincomb(value) -> LinComb:
    if isinstance(value, LinComb):
        return value
    return LinComb.basis(value)


def _basis_text(b) -> str:
    text = str(b)
    if "|" in text or " (x) " in text:
        return f"({text})"
    return text


def render_scalar(c) -> str:
    c = _normalize(c)
    return str(c)


def render(x: LinComb) -> str:
    """Canonical text: `c*basis` terms joined by ` + `, negatives as `- c*basis`"""
    if x.is_zero():
        return "0"
    pieces = []
    for b, c in x.items():
        text = f"{render_scalar(abs(c))}*{_basis_text(b)}"
        if not pieces:
            pieces.append(text if c > 0 else f"- {text}")
        else:
            pieces.append(f"+ {text}" if c > 0 else f"- {text}")
    return " ".join(pieces)


def pairing(f: LinComb, x: LinComb):
    """<f, x>: sum over common basis elements of coefficient products"""
    f, x = as_lincomb(f), as_lincomb(x)
    if len(f) > len(x):
        f, x = x, f
    total = 0
    for b, c in f._terms.items():
        d = x._terms.get(b)
        if d is not None:
            total += c * d
    return _normalize(total)


def linear_extend(op: Callable) -> Callable[[LinComb], LinComb]:
    """Extend an operation defined on basis elements to LinCombs"""

    def extended(x):
        acc: Dict = {}
        for b, c in as_lincomb(x)._terms.items():
            for rb, rc in as_lincomb(op(b))._terms.items():
                acc[rb] = acc.get(rb, 0) + c * rc
        return LinComb._owned(acc)

    extended.__name__ = getattr(op, "__name__", "extended")
    extended.__doc__ = op.__doc__
    return extended


def bilinear_extend(op: Callable) -> Callable[[LinComb, LinComb], LinComb]:
    """Extend a binary operation on basis pairs to pairs of LinCombs"""

    def extended(x, y):
        acc: Dict = {}
        y_terms = as_lincomb(y)._terms
        for a, ca in as_lincomb(x)._terms.items():
            for b, cb in y_terms.items():
                for rb, rc in as_lincomb(op(a, b))._terms.items():
                    acc[rb] = acc.get(rb, 0) + ca * cb * rc
        return LinComb._owned(acc)

    extended.__name__ = getattr(op, "__name__", "extended")
    extended.__doc__ = op.__doc__
    return extended


# ---------------------------------------------------------------------------
# Tensor helpers
# ---------------------------------------------------------------------------

def tensor(*factors) -> LinComb:
    """x (x) y (x) ... as a LinComb over Tensor"""
    acc = {(): 1}
    for factor in factors:
        nxt: Dict = {}
        for legs, c in acc.items():
            for b, d in as_lincomb(factor)._terms.items():
                key = legs + (b,)
                nxt[key] = nxt.get(key, 0) + c * d
        acc = nxt
    return LinComb._owned({Tensor(*legs): c for legs, c in acc.items()})


def tensor_map(x: LinComb, *ops) -> LinComb:
    """Apply one linear map per leg (None keeps the leg)"""
    acc: Dict = {}
    for t, c in as_lincomb(x)._terms.items():
        if len(t) != len(ops):
            raise ValueError(f"Tensor arity {len(t)} does not match {len(ops)} maps")
        mapped = [as_lincomb(leg) if op is None else as_lincomb(op(leg)) for leg, op in zip(t.legs, ops)]
        for rt, rc in tensor(*mapped)._terms.items():
            acc[rt] = acc.get(rt, 0) + c * rc
    return LinComb._owned(acc)


def tensor_multiply(x: LinComb, y: LinComb, product: Callable) -> LinComb:
    """Componentwise product of two tensor-valued LinCombs: (a (x) b)(c (x) d) = ac (x) bd"""
    acc: Dict = {}
    y_terms = as_lincomb(y)._terms
    for s, cs in as_lincomb(x)._terms.items():
        for t, ct in y_terms.items():
            if len(s) != len(t):
                raise ValueError("Tensor arities differ")
            legs = [as_lincomb(product(a, b)) for a, b in zip(s.legs, t.legs)]
            for rt, rc in tensor(*legs)._terms.items():
                acc[rt] = acc.get(rt, 0) + cs * ct * rc
    return LinComb._owned(acc)


def multiply_legs(x: LinComb, product: Callable) -> LinComb:
    """Collapse every tensor term by multiplying its legs left to right"""
    acc: Dict = {}
    ext = bilinear_extend(product)
    for t, c in as_lincomb(x)._terms.items():
        value = as_lincomb(t.legs[0])
        for leg in t.legs[1:]:
            value = ext(value, leg)
        for b, d in value._terms.items():
            acc[b] = acc.get(b, 0) + c * d
    return LinComb._owned(acc)


def swap(x: LinComb) -> LinComb:
    return LinComb._owned({Tensor(*reversed(t.legs)): c for t, c in as_lincomb(x)._terms.items()})


def coproduct_left(x: LinComb, coproduct: Callable) -> LinComb:
    """(Delta (x) id) applied to a LinComb of 2-tensors, giving 3-tensors"""
    acc: Dict = {}
    for t, c in as_lincomb(x)._terms.items():
        a, b = t.legs
        for u, d in as_lincomb(coproduct(a))._terms.items():
            key = Tensor(u.legs[0], u.legs[1], b)
            acc[key] = acc.get(key, 0) + c * d
    return LinComb._owned(acc)


def coproduct_right(x: LinComb, coproduct: Callable) -> LinComb:
    """(id (x) Delta) applied to a LinComb of 2-tensors, giving 3-tensors"""
    acc: Dict = {}
    for t, c in as_lincomb(x)._terms.items():
        a, b = t.legs
        for u, d in as_lincomb(coproduct(b))._terms.items():
            key = Tensor(a, u.legs[0], u.legs[1])
            acc[key] = acc.get(key, 0) + c * d
    return LinComb._owned(acc)
