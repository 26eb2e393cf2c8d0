"""Element arithmetic for the supported element kinds.

Every kind stores elements as plain hashable tuples whose natural ordering is
the canonical element order used for sorting subgroups.

* permutations: image tuples on 0..d-1, composed left to right, so
  ``x^(gh) = (x^g)^h`` as in GAP
* matrices over F_q: row-major tuples of field indices, acting on column vectors
* projective matrices: the scalar class representative whose first nonzero
  row-major entry is 1
* direct products: tuples of component elements
"""

from __future__ import annotations

import re
from itertools import permutations, product

from ..errors import GroupError
from ..ffield import Field

_CYCLE = re.compile(r"\(([^()]*)\)")


class PermArith:
    kind = "perm"

    def __init__(self, degree: int):
        if degree < 1:
            raise GroupError("permutation degree must be positive")
        self.degree = degree

    def __eq__(self, other):
        return isinstance(other, PermArith) and other.degree == self.degree

    def __hash__(self):
        return hash(("perm", self.degree))

    def identity(self):
        return tuple(range(self.degree))

    def mul(self, a, b):
        return tuple([b[i] for i in a])

    def inv(self, a):
        r = [0] * len(a)
        for i, x in enumerate(a):
            r[x] = i
        return tuple(r)

    def contains(self, a) -> bool:
        return isinstance(a, tuple) and len(a) == self.degree and sorted(a) == list(range(self.degree))

    def full(self):
        return list(permutations(range(self.degree)))

    def full_order(self) -> int:
        from math import factorial

        return factorial(self.degree)

    def act(self, g, x):
        return g[x]

    def sign(self, a) -> int:
        seen, s = [False] * len(a), 1
        for i in range(len(a)):
            if not seen[i]:
                j, ln = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = a[j]
                    ln += 1
                if ln % 2 == 0:
                    s = -s
        return s

    def fmt(self, a) -> str:
        seen, out = [False] * len(a), []
        for i in range(len(a)):
            if seen[i] or a[i] == i:
                seen[i] = True
                continue
            cyc, j = [], i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = a[j]
            out.append("(" + ",".join(map(str, cyc)) + ")")
        return "".join(out) or "()"

    def parse(self, s: str):
        s = s.strip()
        img = list(range(self.degree))
        if not s or s == "()":
            return tuple(img)
        if _CYCLE.sub("", s).strip():
            raise GroupError(f"bad cycle notation {s!r}")
        # cycles are composed left to right
        for body in _CYCLE.findall(s):
            if not body.strip():
                continue
            pts = [int(x) - 1 for x in body.split(",")]
            if any(not 0 <= x < self.degree for x in pts) or len(set(pts)) != len(pts):
                raise GroupError(f"bad cycle ({body}) for degree {self.degree}")
            cyc = list(range(self.degree))
            for i, x in enumerate(pts):
                cyc[x] = pts[(i + 1) % len(pts)]
            img = [cyc[x] for x in img]
        return tuple(img)


class MatrixArith:
    kind = "matrix"

    def __init__(self, field: Field, n: int):
        if n < 1:
            raise GroupError("matrix dimension must be positive")
        self.field = field
        self.n = n
        self._add = field.add_table
        self._mul = field.mul_table

    def __eq__(self, other):
        return type(other) is type(self) and other.field == self.field and other.n == self.n

    def __hash__(self):
        return hash((self.kind, self.field.q, self.n))

    def identity(self):
        n = self.n
        return tuple(1 if i == j else 0 for i in range(n) for j in range(n))

    def scalar(self, c: int):
        n = self.n
        return tuple(c if i == j else 0 for i in range(n) for j in range(n))

    def _matmul(self, a, b):
        n, add, mul = self.n, self._add, self._mul
        if n == 2:
            a0, a1, a2, a3 = a
            b0, b1, b2, b3 = b
            return (
                add[mul[a0][b0]][mul[a1][b2]],
                add[mul[a0][b1]][mul[a1][b3]],
                add[mul[a2][b0]][mul[a3][b2]],
                add[mul[a2][b1]][mul[a3][b3]],
            )
        out = []
        for i in range(n):
            row = a[i * n : (i + 1) * n]
            for j in range(n):
                s = 0
                for k in range(n):
                    s = add[s][mul[row[k]][b[k * n + j]]]
                out.append(s)
        return tuple(out)

    def mul(self, a, b):
        return self._matmul(a, b)

    def _rows(self, a):
        n = self.n
        return [list(a[i * n : (i + 1) * n]) for i in range(n)]

    def det(self, a) -> int:
        f, n = self.field, self.n
        m = self._rows(a)
        d = 1
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                return 0
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                d = f.neg(d)
            d = f.mul(d, m[c][c])
            inv = f.inv(m[c][c])
            for r in range(c + 1, n):
                if m[r][c]:
                    k = f.mul(m[r][c], inv)
                    m[r] = [f.sub(x, f.mul(k, y)) for x, y in zip(m[r], m[c])]
        return d

    def _inverse(self, a):
        f, n = self.field, self.n
        m = [row + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(self._rows(a))]
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                raise GroupError("singular matrix")
            m[c], m[piv] = m[piv], m[c]
            inv = f.inv(m[c][c])
            m[c] = [f.mul(inv, x) for x in m[c]]
            for r in range(n):
                if r != c and m[r][c]:
                    k = m[r][c]
                    m[r] = [f.sub(x, f.mul(k, y)) for x, y in zip(m[r], m[c])]
        return tuple(x for row in m for x in row[n:])

    def inv(self, a):
        return self._inverse(a)

    def contains(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == self.n * self.n
            and all(isinstance(x, int) and 0 <= x < self.field.q for x in a)
            and self.det(a) != 0
        )

    def _independent_rows(self, first_rows):
        """All invertible matrices whose first row is drawn from ``first_rows``."""
        f, n, q = self.field, self.n, self.field.q
        vectors = list(product(range(q), repeat=n))

        def span(rows):
            out = {tuple([0] * n)}
            for r in rows:
                out = {
                    tuple(f.add(x, f.mul(c, y)) for x, y in zip(v, r)) for v in out for c in range(q)
                }
            return out

        results = []

        def extend(rows):
            if len(rows) == n:
                results.append(tuple(x for r in rows for x in r))
                return
            sp = span(rows)
            for v in vectors:
                if v not in sp:
                    extend(rows + [v])

        for r in first_rows:
            extend([r])
        return results

    def full(self):
        n, q = self.n, self.field.q
        nonzero = [v for v in product(range(q), repeat=n) if any(v)]
        return sorted(self._independent_rows(nonzero))

    def full_order(self) -> int:
        q, n, o = self.field.q, self.n, 1
        for i in range(n):
            o *= q**n - q**i
        return o

    def act(self, g, x):
        return apply_to_vector(self, g, x)

    def fmt(self, a) -> str:
        n, f = self.n, self.field
        rows = ["[" + ",".join(f.fmt(x) for x in a[i * n : (i + 1) * n]) + "]" for i in range(n)]
        return "[" + ",".join(rows) + "]"

    def parse(self, s: str):
        s = s.replace(" ", "")
        if not (s.startswith("[[") and s.endswith("]]")):
            raise GroupError(f"bad matrix {s!r}")
        rows = s[2:-2].split("],[")
        entries = [self.field.parse(x) for r in rows for x in r.split(",")]
        if len(rows) != self.n or len(entries) != self.n * self.n:
            raise GroupError(f"matrix {s!r} is not {self.n}x{self.n}")
        return self.normalize(tuple(entries))

    def normalize(self, a):
        return a


class ProjArith(MatrixArith):
    """PGL(n, q): matrices modulo nonzero scalars, kept in canonical form."""

    kind = "projective"

    def normalize(self, a):
        f = self.field
        for x in a:
            if x:
                if x == 1:
                    return tuple(a)
                inv = f.inv(x)
                m = f.mul_table[inv]
                return tuple(m[y] for y in a)
        raise GroupError("zero matrix has no projective class")

    def mul(self, a, b):
        return self.normalize(self._matmul(a, b))

    def inv(self, a):
        return self.normalize(self._inverse(a))

    def contains(self, a) -> bool:
        return MatrixArith.contains(self, a) and self.normalize(a) == a

    def full(self):
        n, q = self.n, self.field.q
        firsts = [v for v in product(range(q), repeat=n) if any(v) and next(x for x in v if x) == 1]
        return sorted(self._independent_rows(firsts))

    def full_order(self) -> int:
        return MatrixArith.full_order(self) // (self.field.q - 1)


class ProductArith:
    kind = "product"

    def __init__(self, factors):
        self.factors = tuple(factors)

    def __eq__(self, other):
        return isinstance(other, ProductArith) and other.factors == self.factors

    def __hash__(self):
        return hash(("product", self.factors))

    def identity(self):
        return tuple(f.identity() for f in self.factors)

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def inv(self, a):
        return tuple(f.inv(x) for f, x in zip(self.factors, a))

    def contains(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == len(self.factors)
            and all(f.contains(x) for f, x in zip(self.factors, a))
        )

    def act(self, g, x):
        i, y = x
        return (i, self.factors[i].act(g[i], y))

    def fmt(self, a) -> str:
        return "{" + "|".join(f.fmt(x) for f, x in zip(self.factors, a)) + "}"

    def parse(self, s: str):
        s = s.strip()
        if not (s.startswith("{") and s.endswith("}")):
            raise GroupError(f"bad product element {s!r}")
        parts = s[1:-1].split("|")
        if len(parts) != len(self.factors):
            raise GroupError(f"product element {s!r} has wrong arity")
        return tuple(f.parse(x) for f, x in zip(self.factors, parts))


class QuotientArith:
    """Arithmetic on cosets gN, each stored as its smallest element."""

    kind = "quotient"

    def __init__(self, base, normal_elements):
        self.base = base
        self.normal = tuple(sorted(normal_elements))

    def rep(self, g):
        mul = self.base.mul
        return min(mul(g, n) for n in self.normal)

    def identity(self):
        return self.rep(self.base.identity())

    def mul(self, a, b):
        return self.rep(self.base.mul(a, b))

    def inv(self, a):
        return self.rep(self.base.inv(a))

    def contains(self, a) -> bool:
        return self.base.contains(a) and self.rep(a) == a

    def fmt(self, a) -> str:
        return self.base.fmt(a) + "N"


def apply_to_vector(arith: MatrixArith, g, v):
    """Column-vector action v -> g v."""
    n, add, mul = arith.n, arith._add, arith._mul
    out = []
    for i in range(n):
        s = 0
        for k in range(n):
            s = add[s][mul[g[i * n + k]][v[k]]]
        out.append(s)
    return tuple(out)
