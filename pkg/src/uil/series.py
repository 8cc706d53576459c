"""Truncated complex power series.

A series sum_{k=0}^{N} c[k] z^k is stored as its coefficient vector; N is
the truncation order and every operation is exact modulo z^(N+1).  Binary
operations insist on equal truncation orders because silently mixing
orders degrades accuracy in ways the caller cannot see; truncate
explicitly when combining series of different lengths.

Coefficients are kept in complex double precision throughout.  Instances
are immutable after construction, so they can be shared freely between
threads.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "DEFAULT_ORDER",
    "Series",
    "compose",
    "derive",
    "exp_series",
    "integrate",
    "log_series",
    "pow_series",
    "revert",
]

DEFAULT_ORDER = 8


class Series:
    """Coefficient vector of a power series truncated at a fixed order.

    ``Series(c)`` represents ``c[0] + c[1] z + ... + c[N] z^N`` with
    ``N = len(c) - 1``.  Passing ``order`` pads with zeros or truncates to
    force a specific order.  Scalars combine with series on either side of
    ``+ - * /``; two series must have equal orders.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs, order: int | None = None):
        c = np.atleast_1d(np.asarray(coeffs, dtype=np.complex128))
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must form a non-empty 1-d sequence")
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            padded = np.zeros(order + 1, dtype=np.complex128)
            keep = min(c.size, order + 1)
            padded[:keep] = c[:keep]
            c = padded
        else:
            c = c.copy()
        c.setflags(write=False)
        self._c = c

    # ------------------------------------------------------------------
    # construction helpers
    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "Series":
        return cls(np.zeros(order + 1))

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "Series":
        c = np.zeros(order + 1)
        c[0] = 1.0
        return cls(c)

    @classmethod
    def z(cls, order: int = DEFAULT_ORDER) -> "Series":
        """The identity series z (requires order >= 1)."""
        if order < 1:
            raise ValueError("identity series needs order >= 1")
        c = np.zeros(order + 1)
        c[1] = 1.0
        return cls(c)

    # ------------------------------------------------------------------
    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient vector of length order + 1."""
        return self._c

    @property
    def order(self) -> int:
        return self._c.size - 1

    def __getitem__(self, k: int) -> complex:
        return complex(self._c[k])

    def truncate(self, order: int) -> "Series":
        """Drop coefficients above ``order`` (must not exceed self.order)."""
        if order > self.order:
            raise ValueError("cannot raise the truncation order of a series")
        return Series(self._c[: order + 1])

    def __call__(self, z):
        """Evaluate the truncated polynomial at ``z`` (scalar or array)."""
        z = np.asarray(z, dtype=np.complex128)
        out = np.full(z.shape, self._c[-1], dtype=np.complex128)
        for ck in self._c[-2::-1]:
            out = out * z + ck
        return out if out.shape else complex(out[()])

    def __repr__(self) -> str:
        return f"Series({np.array2string(self._c, separator=', ')})"

    # ------------------------------------------------------------------
    # arithmetic
    def _match(self, other) -> np.ndarray | None:
        """Return the other operand as a coefficient vector, or None."""
        if isinstance(other, Series):
            if other.order != self.order:
                raise ValueError(
                    f"order mismatch: {self.order} vs {other.order}"
                )
            return other._c
        if isinstance(other, (int, float, complex, np.number)):
            arr = np.zeros_like(self._c)
            arr[0] = other
            return arr
        return None

    def __add__(self, other):
        oc = self._match(other)
        if oc is None:
            return NotImplemented
        return Series(self._c + oc)

    __radd__ = __add__

    def __sub__(self, other):
        oc = self._match(other)
        if oc is None:
            return NotImplemented
        return Series(self._c - oc)

    def __rsub__(self, other):
        oc = self._match(other)
        if oc is None:
            return NotImplemented
        return Series(oc - self._c)

    def __neg__(self):
        return Series(-self._c)

    def __mul__(self, other):
        if isinstance(other, Series):
            if other.order != self.order:
                raise ValueError(
                    f"order mismatch: {self.order} vs {other.order}"
                )
            return Series(np.convolve(self._c, other._c)[: self.order + 1])
        if isinstance(other, (int, float, complex, np.number)):
            return Series(self._c * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            if other.order != self.order:
                raise ValueError(
                    f"order mismatch: {self.order} vs {other.order}"
                )
            b = other._c
            if b[0] == 0:
                raise ValueError("non-invertible series: constant term is zero")
            q = np.zeros_like(self._c)
            for k in range(self.order + 1):
                acc = self._c[k]
                if k:
                    acc = acc - np.dot(q[:k], b[k:0:-1])
                q[k] = acc / b[0]
            return Series(q)
        if isinstance(other, (int, float, complex, np.number)):
            return Series(self._c / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            num = np.zeros_like(self._c)
            num[0] = other
            return Series(num) / self
        return NotImplemented


# ----------------------------------------------------------------------
# composition and elementary functions


def compose(outer: Series, inner: Series) -> Series:
    """outer(inner(z)) truncated at the common order.

    ``inner`` must annihilate the origin, otherwise the truncated result
    would depend on coefficients of ``outer`` beyond its order.
    """
    if outer.order != inner.order:
        raise ValueError(f"order mismatch: {outer.order} vs {inner.order}")
    if inner[0] != 0:
        raise ValueError("composition requires inner(0) = 0")
    acc = Series([outer[outer.order]], order=outer.order)
    for k in range(outer.order - 1, -1, -1):
        acc = acc * inner + outer[k]
    return acc


def exp_series(a: Series) -> Series:
    """exp(a) for a series with zero constant term."""
    if a[0] != 0:
        raise ValueError("exp_series requires zero constant term")
    n = a.order
    ka = np.arange(n + 1) * a.coeffs
    e = np.zeros(n + 1, dtype=np.complex128)
    e[0] = 1.0
    for m in range(1, n + 1):
        e[m] = np.dot(ka[1 : m + 1], e[m - 1 :: -1]) / m
    return Series(e)


def log_series(a: Series) -> Series:
    """log(a) for a series with constant term 1."""
    if a[0] != 1:
        raise ValueError("log_series requires constant term 1")
    n = a.order
    c = a.coeffs
    out = np.zeros(n + 1, dtype=np.complex128)
    for m in range(1, n + 1):
        acc = c[m]
        if m > 1:
            kl = np.arange(1, m) * out[1:m]
            acc = acc - np.dot(kl, c[m - 1 : 0 : -1]) / m
        out[m] = acc
    return Series(out)


def pow_series(a: Series, exponent: complex) -> Series:
    """a**exponent = exp(exponent * log a) for a with constant term 1."""
    if a[0] != 1:
        raise ValueError("pow_series requires constant term 1")
    return exp_series(log_series(a) * exponent)


# ----------------------------------------------------------------------
# calculus


def derive(a: Series) -> Series:
    """Termwise derivative; the output order drops by one.

    The z^N coefficient of the derivative would need the (unknown)
    z^(N+1) coefficient of ``a``, so it is not fabricated.
    """
    if a.order == 0:
        return Series([0.0])
    return Series(a.coeffs[1:] * np.arange(1, a.order + 1))


def integrate(a: Series) -> Series:
    """Termwise antiderivative with zero constant term.

    The output keeps the input order, so the top input coefficient does
    not appear in the result (it would land at z^(N+1)).
    """
    n = a.order
    out = np.zeros(n + 1, dtype=np.complex128)
    if n:
        out[1:] = a.coeffs[:-1] / np.arange(1, n + 1)
    return Series(out)


# ----------------------------------------------------------------------
# reversion


def revert(f: Series) -> Series:
    """Compositional inverse of ``f`` modulo the truncation order.

    Requires f(0) = 0 and f'(0) != 0.  The coefficients are obtained
    order by order from the triangular system compose(f, F) = id: the
    order-n defect of the partial inverse is linear in the unknown F[n],
    so each step is a single division.  In particular the quadratic and
    cubic output coefficients satisfy F[2] = -f[2] and
    F[3] = 2 f[2]^2 - f[3] when f'(0) = 1.
    """
    if f[0] != 0:
        raise ValueError("reversion requires zero constant term")
    if f.order < 1 or f[1] == 0:
        raise ValueError("reversion requires a nonzero linear coefficient")
    n = f.order
    g = np.zeros(n + 1, dtype=np.complex128)
    g[1] = 1.0 / f[1]
    for m in range(2, n + 1):
        defect = compose(f, Series(g))[m]
        g[m] = -defect / f[1]
    return Series(g)
