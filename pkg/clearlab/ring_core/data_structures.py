import itertools
from dataclasses import dataclass
from math import gcd
from typing import Any, Iterator

from .errors import DescriptorError, InfiniteRingError, RingMismatchError, UnsupportedRingError


class RingHandle:
    """
    A concrete ring model. Arithmetic methods take and return canonical raw values
    (int, pair, or row-major tuple of tuples); Element wraps a raw value with its ring.
    """
    kind = "abstract"

    def zero(self) -> Any:
        raise NotImplementedError

    def one(self) -> Any:
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def from_int(self, k: int):
        raise NotImplementedError

    def canonical(self, raw):
        raise NotImplementedError

    def inverse(self, x):
        """Two-sided inverse of x, or None when x is not a unit."""
        raise NotImplementedError

    def is_finite(self) -> bool:
        raise NotImplementedError

    def is_commutative(self) -> bool:
        raise NotImplementedError

    def cardinality(self) -> int | None:
        raise NotImplementedError

    def iter_values(self) -> Iterator[Any]:
        raise InfiniteRingError(self.descriptor())

    def descriptor(self) -> str:
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def encode(self, x):
        raise NotImplementedError

    def decode(self, data):
        raise NotImplementedError

    def element(self, raw) -> "Element":
        return Element(self, self.canonical(raw))

    def __str__(self):
        return self.descriptor()


def _as_int(raw) -> int:
    if isinstance(raw, bool):
        raise DescriptorError(f"expected an integer, got {raw!r}")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, str):
        try:
            return int(raw.strip())
        except ValueError:
            raise DescriptorError(f"expected a decimal integer, got {raw!r}")
    raise DescriptorError(f"expected an integer, got {raw!r}")


@dataclass(frozen=True, repr=False)
class Integers(RingHandle):
    kind = "integers"

    def zero(self): return 0
    def one(self): return 1
    def add(self, x, y): return x + y
    def neg(self, x): return -x
    def mul(self, x, y): return x * y
    def sub(self, x, y): return x - y
    def from_int(self, k): return k
    def canonical(self, raw): return _as_int(raw)

    def inverse(self, x):
        return x if x in (1, -1) else None

    def is_finite(self): return False
    def is_commutative(self): return True
    def cardinality(self): return None
    def descriptor(self): return "Z"
    def format(self, x): return str(x)
    def encode(self, x): return str(x)
    def decode(self, data): return _as_int(data)

    def __repr__(self):
        return "Integers()"


@dataclass(frozen=True, repr=False)
class Modular(RingHandle):
    n: int
    kind = "modular"

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 2:
            raise DescriptorError(f"modulus must be an integer >= 2, got {self.n!r}")

    def zero(self): return 0
    def one(self): return 1
    def add(self, x, y): return (x + y) % self.n
    def neg(self, x): return (-x) % self.n
    def mul(self, x, y): return (x * y) % self.n
    def sub(self, x, y): return (x - y) % self.n
    def from_int(self, k): return k % self.n
    def canonical(self, raw): return _as_int(raw) % self.n

    def inverse(self, x):
        if gcd(x, self.n) != 1:
            return None
        return pow(x, -1, self.n)

    def is_finite(self): return True
    def is_commutative(self): return True
    def cardinality(self): return self.n
    def iter_values(self): return iter(range(self.n))
    def descriptor(self): return f"Z/{self.n}"
    def format(self, x): return str(x)
    def encode(self, x): return str(x)
    def decode(self, data): return _as_int(data) % self.n

    def __repr__(self):
        return f"Modular({self.n})"


@dataclass(frozen=True, repr=False)
class Product(RingHandle):
    left: RingHandle
    right: RingHandle
    kind = "product"

    def zero(self): return (self.left.zero(), self.right.zero())
    def one(self): return (self.left.one(), self.right.one())
    def add(self, x, y): return (self.left.add(x[0], y[0]), self.right.add(x[1], y[1]))
    def neg(self, x): return (self.left.neg(x[0]), self.right.neg(x[1]))
    def mul(self, x, y): return (self.left.mul(x[0], y[0]), self.right.mul(x[1], y[1]))
    def from_int(self, k): return (self.left.from_int(k), self.right.from_int(k))

    def canonical(self, raw):
        if not isinstance(raw, (tuple, list)) or len(raw) != 2:
            raise DescriptorError(f"{self.descriptor()} expects a pair, got {raw!r}")
        return (self.left.canonical(raw[0]), self.right.canonical(raw[1]))

    def inverse(self, x):
        li = self.left.inverse(x[0])
        if li is None:
            return None
        ri = self.right.inverse(x[1])
        if ri is None:
            return None
        return (li, ri)

    def is_finite(self): return self.left.is_finite() and self.right.is_finite()
    def is_commutative(self): return self.left.is_commutative() and self.right.is_commutative()

    def cardinality(self):
        if not self.is_finite():
            return None
        return self.left.cardinality() * self.right.cardinality()

    def iter_values(self):
        if not self.is_finite():
            raise InfiniteRingError(self.descriptor())
        return itertools.product(list(self.left.iter_values()), list(self.right.iter_values()))

    def descriptor(self):
        right = self.right.descriptor()
        if isinstance(self.right, Product):
            right = f"({right})"
        return f"{self.left.descriptor()} x {right}"

    def format(self, x):
        return f"({self.left.format(x[0])},{self.right.format(x[1])})"

    def encode(self, x):
        return [self.left.encode(x[0]), self.right.encode(x[1])]

    def decode(self, data):
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            raise DescriptorError(f"{self.descriptor()} expects a pair, got {data!r}")
        return (self.left.decode(data[0]), self.right.decode(data[1]))

    def __repr__(self):
        return f"Product({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class MatrixRing(RingHandle):
    base: RingHandle
    size: int
    kind = "matrix"

    def __post_init__(self):
        if isinstance(self.size, bool) or not isinstance(self.size, int) or self.size < 1:
            raise DescriptorError(f"matrix size must be an integer >= 1, got {self.size!r}")

    def _int_modulus(self):
        # (True, n) when entries are plain ints reduced mod n; (True, None) over Z
        if isinstance(self.base, Modular):
            return True, self.base.n
        if isinstance(self.base, Integers):
            return True, None
        return False, None

    def zero(self):
        z = self.base.zero()
        return tuple(tuple(z for _ in range(self.size)) for _ in range(self.size))

    def one(self):
        return self.scalar(self.base.one())

    def scalar(self, c):
        z = self.base.zero()
        return tuple(tuple(c if i == j else z for j in range(self.size)) for i in range(self.size))

    def add(self, x, y):
        b = self.base
        return tuple(tuple(b.add(p, q) for p, q in zip(rx, ry)) for rx, ry in zip(x, y))

    def neg(self, x):
        b = self.base
        return tuple(tuple(b.neg(p) for p in row) for row in x)

    def sub(self, x, y):
        b = self.base
        return tuple(tuple(b.sub(p, q) for p, q in zip(rx, ry)) for rx, ry in zip(x, y))

    def mul(self, x, y):
        fast, m = self._int_modulus()
        cols = list(zip(*y))
        if fast:
            if m is None:
                return tuple(tuple(sum(p * q for p, q in zip(row, col)) for col in cols) for row in x)
            return tuple(tuple(sum(p * q for p, q in zip(row, col)) % m for col in cols) for row in x)
        b = self.base
        out = []
        for row in x:
            new_row = []
            for col in cols:
                acc = b.zero()
                for p, q in zip(row, col):
                    acc = b.add(acc, b.mul(p, q))
                new_row.append(acc)
            out.append(tuple(new_row))
        return tuple(out)

    def from_int(self, k):
        return self.scalar(self.base.from_int(k))

    def canonical(self, raw):
        if not isinstance(raw, (tuple, list)) or len(raw) != self.size:
            raise DescriptorError(f"{self.descriptor()} expects {self.size} rows, got {raw!r}")
        rows = []
        for row in raw:
            if not isinstance(row, (tuple, list)) or len(row) != self.size:
                raise DescriptorError(f"{self.descriptor()} expects rows of length {self.size}, got {row!r}")
            rows.append(tuple(self.base.canonical(v) for v in row))
        return tuple(rows)

    def determinant(self, x):
        """Laplace expansion along the first row; needs a commutative base."""
        b = self.base
        if len(x) == 1:
            return x[0][0]
        acc = b.zero()
        for j, entry in enumerate(x[0]):
            minor = tuple(row[:j] + row[j + 1:] for row in x[1:])
            term = b.mul(entry, self.determinant(minor))
            acc = b.add(acc, term) if j % 2 == 0 else b.sub(acc, term)
        return acc

    def adjugate(self, x):
        b = self.base
        n = len(x)
        if n == 1:
            return ((b.one(),),)
        cof = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = tuple(r[:j] + r[j + 1:] for k, r in enumerate(x) if k != i)
                c = self.determinant(minor)
                row.append(c if (i + j) % 2 == 0 else b.neg(c))
            cof.append(row)
        return tuple(tuple(cof[j][i] for j in range(n)) for i in range(n))

    def inverse(self, x):
        b = self.base
        if b.is_commutative():
            det_inv = b.inverse(self.determinant(x))
            if det_inv is None:
                return None
            return tuple(tuple(b.mul(det_inv, v) for v in row) for row in self.adjugate(x))
        if not self.is_finite():
            raise UnsupportedRingError(f"units of {self.descriptor()} are not decidable here")
        one = self.one()
        for y in self.iter_values():
            if self.mul(x, y) == one and self.mul(y, x) == one:
                return y
        return None

    def is_finite(self): return self.base.is_finite()
    def is_commutative(self): return self.size == 1 and self.base.is_commutative()

    def cardinality(self):
        if not self.is_finite():
            return None
        return self.base.cardinality() ** (self.size * self.size)

    def iter_values(self):
        if not self.is_finite():
            raise InfiniteRingError(self.descriptor())
        base_values = list(self.base.iter_values())
        s = self.size
        for flat in itertools.product(base_values, repeat=s * s):
            yield tuple(tuple(flat[i * s:(i + 1) * s]) for i in range(s))

    def descriptor(self):
        return f"M{self.size}({self.base.descriptor()})"

    def format(self, x):
        return "[" + ",".join("[" + ",".join(self.base.format(v) for v in row) + "]" for row in x) + "]"

    def encode(self, x):
        return [[self.base.encode(v) for v in row] for row in x]

    def decode(self, data):
        if not isinstance(data, (list, tuple)):
            raise DescriptorError(f"{self.descriptor()} expects a list of rows, got {data!r}")
        return self.canonical([[self.base.decode(v) for v in row] for row in data])

    def __repr__(self):
        return f"MatrixRing({self.base!r}, {self.size})"


def contains_integers(ring: RingHandle) -> bool:
    if isinstance(ring, Integers):
        return True
    if isinstance(ring, Product):
        return contains_integers(ring.left) or contains_integers(ring.right)
    if isinstance(ring, MatrixRing):
        return contains_integers(ring.base)
    return False


@dataclass(frozen=True, repr=False)
class Element:
    ring: RingHandle
    value: Any

    def _operand(self, other):
        if isinstance(other, Element):
            if other.ring != self.ring:
                raise RingMismatchError(f"cannot combine elements of {self.ring} and {other.ring}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.from_int(other)
        raise TypeError(f"unsupported operand {other!r}")

    def __add__(self, other):
        return Element(self.ring, self.ring.add(self.value, self._operand(other)))

    def __radd__(self, other):
        return Element(self.ring, self.ring.add(self._operand(other), self.value))

    def __sub__(self, other):
        return Element(self.ring, self.ring.sub(self.value, self._operand(other)))

    def __rsub__(self, other):
        return Element(self.ring, self.ring.sub(self._operand(other), self.value))

    def __neg__(self):
        return Element(self.ring, self.ring.neg(self.value))

    def __mul__(self, other):
        return Element(self.ring, self.ring.mul(self.value, self._operand(other)))

    def __rmul__(self, other):
        return Element(self.ring, self.ring.mul(self._operand(other), self.value))

    def is_zero(self) -> bool:
        return self.value == self.ring.zero()

    def is_one(self) -> bool:
        return self.value == self.ring.one()

    def inverse(self) -> "Element | None":
        inv = self.ring.inverse(self.value)
        return None if inv is None else Element(self.ring, inv)

    def is_unit(self) -> bool:
        return self.ring.inverse(self.value) is not None

    def entry(self, i: int, j: int) -> "Element":
        if not isinstance(self.ring, MatrixRing):
            raise UnsupportedRingError(f"{self.ring} is not a matrix ring")
        return Element(self.ring.base, self.value[i][j])

    def components(self) -> tuple["Element", "Element"]:
        if not isinstance(self.ring, Product):
            raise UnsupportedRingError(f"{self.ring} is not a product ring")
        return Element(self.ring.left, self.value[0]), Element(self.ring.right, self.value[1])

    def encode(self):
        return self.ring.encode(self.value)

    def to_dict(self):
        return {"ring": self.ring.descriptor(), "value": self.encode()}

    def __str__(self):
        return self.ring.format(self.value)

    def __repr__(self):
        return f"Element({self.ring.descriptor()}, {self.ring.format(self.value)})"


@dataclass(frozen=True)
class RadicalReport:
    ring: RingHandle
    radical_elements: frozenset
    is_semisimple: bool
    sides_agree: bool = True

    def __post_init__(self):
        zero = Element(self.ring, self.ring.zero())
        if self.is_semisimple != (self.radical_elements == frozenset({zero})):
            raise ValueError("is_semisimple must hold exactly when the radical is {0}")

    def to_dict(self):
        ordered = sorted(self.radical_elements, key=lambda e: e.value)
        return {
            "ring": self.ring.descriptor(),
            "radical_elements": [e.encode() for e in ordered],
            "is_semisimple": self.is_semisimple,
            "sides_agree": self.sides_agree,
        }


def ring_size(ring: RingHandle) -> int:
    size = ring.cardinality()
    if size is None:
        raise InfiniteRingError(ring.descriptor())
    return size


__all__ = [
    "RingHandle", "Integers", "Modular", "Product", "MatrixRing", "Element",
    "RadicalReport", "contains_integers", "ring_size",
]
