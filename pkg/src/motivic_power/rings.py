"""Sparse multivariate Laurent polynomials with integer coefficients.

Every coefficient ring used by this package (the plain integers,
Z[L, L^-1], Z[u, v], ...) is one representation: a finite map from
exponent vectors to nonzero arbitrary-precision integers, tagged with a
:class:`RingDescriptor`.  Zero variables encodes the plain integers, so a
single code path serves all target rings.

Values are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple

Exponents = Tuple[int, ...]


class RingMismatchError(ValueError):
    """Raised when operands live in different rings."""


class RingDescriptor:
    """An ordered list of variable names plus a Laurent flag.

    ``laurent=True`` admits negative exponents.  No variables at all
    (``RingDescriptor()``) models the ring of integers.
    """

    __slots__ = ("variables", "laurent")

    def __init__(self, variables: Iterable[str] = (), laurent: bool = False):
        variables = tuple(variables)
        seen = set()
        for name in variables:
            if not isinstance(name, str) or not name:
                raise ValueError("variable names must be nonempty strings")
            if name in seen:
                raise ValueError("duplicate variable name %r" % name)
            seen.add(name)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "laurent", bool(laurent))

    def __setattr__(self, name, value):
        raise AttributeError("RingDescriptor is immutable")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __eq__(self, other):
        if not isinstance(other, RingDescriptor):
            return NotImplemented
        return self.variables == other.variables and self.laurent == other.laurent

    def __hash__(self):
        return hash((self.variables, self.laurent))

    def __repr__(self):
        if not self.variables:
            return "RingDescriptor()"
        return "RingDescriptor(%r, laurent=%r)" % (list(self.variables), self.laurent)

    def __str__(self):
        if not self.variables:
            return "Z"
        body = ", ".join(
            "%s^{+-}" % v if self.laurent else v for v in self.variables
        )
        return "Z[%s]" % body

    def to_json(self) -> dict:
        return {"vars": list(self.variables), "laurent": self.laurent}

    @classmethod
    def from_json(cls, obj: Mapping) -> "RingDescriptor":
        return cls(tuple(obj["vars"]), bool(obj["laurent"]))


INTEGERS = RingDescriptor()


def _check_ring(a: "Polynomial", b: "Polynomial"):
    if a.ring != b.ring:
        raise RingMismatchError(
            "ring mismatch: %s vs %s" % (a.ring, b.ring)
        )


def _accumulate_product(acc: Dict[Exponents, int], pterms, qterms, nvars: int):
    """Add the expanded product of two term maps into ``acc``.

    Hot path: series multiplication funnels every coefficient
    convolution through here, so the exponent addition is unrolled for
    the small arities that actually occur (r <= 2 covers Z, Z[L] and
    Z[u,v]).
    """
    if len(pterms) > len(qterms):
        pterms, qterms = qterms, pterms
    get = acc.get
    if nvars == 0:
        c = pterms.get((), 0) * qterms.get((), 0)
        if c:
            acc[()] = get((), 0) + c
    elif nvars == 1:
        for (x1,), c1 in pterms.items():
            for (y1,), c2 in qterms.items():
                e = (x1 + y1,)
                acc[e] = get(e, 0) + c1 * c2
    elif nvars == 2:
        for (x1, x2), c1 in pterms.items():
            for (y1, y2), c2 in qterms.items():
                e = (x1 + y1, x2 + y2)
                acc[e] = get(e, 0) + c1 * c2
    else:
        for e1, c1 in pterms.items():
            for e2, c2 in qterms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                acc[e] = get(e, 0) + c1 * c2


def _grlex_key(item):
    exps = item[0]
    return (sum(exps), exps)


class Polynomial:
    """Immutable sparse polynomial over a :class:`RingDescriptor`.

    Terms are stored as ``{exponent_vector: coefficient}`` with zero
    coefficients pruned, so equality is plain dict equality.  The
    canonical text form lists terms in descending graded-lexicographic
    order with explicit ``*`` and ``^``::

        >>> R = RingDescriptor(("u", "v"))
        >>> str(Polynomial(R, {(1, 1): 1, (0, 0): 1}))
        'u*v + 1'
    """

    __slots__ = ("ring", "_terms", "_hashcache")

    def __init__(self, ring: RingDescriptor, terms: Mapping[Exponents, int]):
        nvars = ring.nvars
        clean: Dict[Exponents, int] = {}
        for exps, coef in terms.items():
            if not isinstance(coef, int):
                raise TypeError("coefficients must be int, got %r" % type(coef))
            if coef == 0:
                continue
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(
                    "exponent vector %r has length %d, ring has %d variables"
                    % (exps, len(exps), nvars)
                )
            for e in exps:
                if not isinstance(e, int):
                    raise TypeError("exponents must be int")
                if e < 0 and not ring.laurent:
                    raise ValueError(
                        "negative exponent %d in non-Laurent ring %s" % (e, ring)
                    )
            clean[exps] = coef
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hashcache", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, ring: RingDescriptor, terms: Dict[Exponents, int]) -> "Polynomial":
        # Trusted constructor: callers guarantee the invariants hold.
        self = object.__new__(cls)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_terms", terms)
        object.__setattr__(self, "_hashcache", None)
        return self

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring: RingDescriptor) -> "Polynomial":
        return cls._raw(ring, {})

    @classmethod
    def one(cls, ring: RingDescriptor) -> "Polynomial":
        return cls.constant(ring, 1)

    @classmethod
    def constant(cls, ring: RingDescriptor, value: int) -> "Polynomial":
        if not isinstance(value, int):
            raise TypeError("constant must be int")
        if value == 0:
            return cls._raw(ring, {})
        return cls._raw(ring, {(0,) * ring.nvars: value})

    @classmethod
    def variable(cls, ring: RingDescriptor, name: str) -> "Polynomial":
        try:
            i = ring.variables.index(name)
        except ValueError:
            raise ValueError("unknown variable %r in %s" % (name, ring)) from None
        exps = tuple(1 if j == i else 0 for j in range(ring.nvars))
        return cls._raw(ring, {exps: 1})

    @classmethod
    def monomial(cls, ring: RingDescriptor, exps: Iterable[int], coef: int = 1) -> "Polynomial":
        return cls(ring, {tuple(exps): coef})

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> Dict[Exponents, int]:
        """The underlying term map.  Treat as read-only."""
        return self._terms

    def sorted_terms(self):
        """Terms in descending graded-lex order (the printing order)."""
        return sorted(self._terms.items(), key=_grlex_key, reverse=True)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_effective(self) -> bool:
        """True when every coefficient is nonnegative."""
        return all(c >= 0 for c in self._terms.values())

    def is_unit_monomial(self) -> bool:
        """True for a single term with coefficient exactly +1."""
        return len(self._terms) == 1 and next(iter(self._terms.values())) == 1

    def constant_value(self) -> int:
        """Coefficient of the empty monomial."""
        return self._terms.get((0,) * self.ring.nvars, 0)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            _check_ring(self, other)
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.ring, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        get = terms.get
        for e, c in other._terms.items():
            s = get(e, 0) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc: Dict[Exponents, int] = {}
        _accumulate_product(acc, self._terms, other._terms, self.ring.nvars)
        return Polynomial._raw(self.ring, {e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be int")
        if n < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Polynomial.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        h = self._hashcache
        if h is None:
            h = hash((self.ring, frozenset(self._terms.items())))
            object.__setattr__(self, "_hashcache", h)
        return h

    # -- ring maps ----------------------------------------------------

    def evaluate_at_ones(self) -> int:
        """Substitute 1 for every variable, i.e. sum the coefficients."""
        return sum(self._terms.values())

    # -- canonical forms ----------------------------------------------

    def _monomial_str(self, exps) -> str:
        parts = []
        for name, e in zip(self.ring.variables, exps):
            if e == 0:
                continue
            if e == 1:
                parts.append(name)
            else:
                parts.append("%s^%d" % (name, e))
        return "*".join(parts)

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exps, coef in self.sorted_terms():
            mono = self._monomial_str(exps)
            mag = abs(coef)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = "%d*%s" % (mag, mono)
            if not pieces:
                pieces.append("-" + body if coef < 0 else body)
            else:
                pieces.append((" - " if coef < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return "<Polynomial %s over %s>" % (self, self.ring)

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "terms": [
                {"exp": list(exps), "coef": str(coef)}
                for exps, coef in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "Polynomial":
        ring = RingDescriptor.from_json(obj["ring"])
        terms = {}
        for entry in obj["terms"]:
            exps = tuple(int(e) for e in entry["exp"])
            coef = int(entry["coef"])
            if exps in terms:
                raise ValueError("duplicate exponent vector %r" % (exps,))
            terms[exps] = coef
        return cls(ring, terms)


class MonomialMap:
    """A ring map sending every variable to a single monomial.

    These are exactly the substitutions compatible with the monomial
    power-structure kernel; evaluating all variables at 1 (the Euler
    characteristic of a class) is the special case where every image is
    the empty monomial.  General polynomial images are rejected because
    they do not commute with the kernel.
    """

    __slots__ = ("source", "target", "_image_exps")

    def __init__(self, source: RingDescriptor, target: RingDescriptor,
                 images: Mapping[str, Polynomial]):
        image_exps = []
        for name in source.variables:
            if name not in images:
                raise ValueError("no image given for variable %r" % name)
            img = images[name]
            if img.ring != target:
                raise RingMismatchError(
                    "image of %r lives in %s, expected %s" % (name, img.ring, target)
                )
            if not img.is_unit_monomial():
                raise ValueError(
                    "image of %r must be a single monomial with coefficient 1, got %s"
                    % (name, img)
                )
            image_exps.append(next(iter(img.terms)))
        extra = set(images) - set(source.variables)
        if extra:
            raise ValueError("images given for unknown variables %s" % sorted(extra))
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "_image_exps", tuple(image_exps))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialMap is immutable")

    @classmethod
    def evaluate_at_ones(cls, source: RingDescriptor) -> "MonomialMap":
        one = Polynomial.one(INTEGERS)
        return cls(source, INTEGERS, {name: one for name in source.variables})

    @classmethod
    def identity(cls, ring: RingDescriptor) -> "MonomialMap":
        return cls(ring, ring, {name: Polynomial.variable(ring, name) for name in ring.variables})

    def __call__(self, p: Polynomial) -> Polynomial:
        if p.ring != self.source:
            raise RingMismatchError(
                "polynomial over %s, map expects %s" % (p.ring, self.source)
            )
        tvars = self.target.nvars
        images = self._image_exps
        out: Dict[Exponents, int] = {}
        for exps, coef in p.terms.items():
            acc = [0] * tvars
            for e, img in zip(exps, images):
                if e:
                    for i, ei in enumerate(img):
                        acc[i] += e * ei
            key = tuple(acc)
            s = out.get(key, 0) + coef
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        if not self.target.laurent:
            for key in out:
                if any(e < 0 for e in key):
                    raise ValueError(
                        "substitution produced negative exponent %r in non-Laurent ring %s"
                        % (key, self.target)
                    )
        return Polynomial._raw(self.target, out)
