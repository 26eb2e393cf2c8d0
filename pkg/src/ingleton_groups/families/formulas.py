"""Closed-form subgroup orders for the explicit families."""

from __future__ import annotations

from fractions import Fraction
from math import prod

from ..errors import FamilyError
from ..ffield import prime_power
from ..ingleton import OrderProfile, alpha_key

# instance -> the lower-numbered instance it coincides with in characteristic 2
COLLAPSE_P2 = {3: 2, 4: 2, 5: 1, 8: 6, 9: 7, 10: 6, 11: 7, 13: 12, 15: 14}
REJECT_P3 = frozenset({12, 13, 14, 15})
ODD_HALF_BRANCH = frozenset({8, 9, 13, 15})


def q_n(q: int, n: int) -> int:
    return q ** (n * (n - 1) // 2)


def M(q: int, k: int) -> int:
    return prod(q**i - 1 for i in range(1, k + 1))


def gl_order(n: int, q: int) -> int:
    return q_n(q, n) * M(q, n)


def pgl_order(n: int, q: int) -> int:
    return gl_order(n, q) // (q - 1)


def half_is_odd(q: int) -> bool:
    """(q-1)/2 odd, for odd q."""
    return q % 2 == 1 and ((q - 1) // 2) % 2 == 1


def check_instance(q: int, instance: int, strict: bool = True) -> None:
    p, _ = prime_power(q)
    if not 1 <= instance <= 15:
        raise FamilyError("invalid", f"instance {instance} is not in 1..15")
    if q < 5:
        raise FamilyError("invalid", f"GL(2,{q}) instances need q >= 5")
    if p == 2 and instance in COLLAPSE_P2:
        raise FamilyError(
            "collapsed",
            f"instance {instance} coincides with instance {COLLAPSE_P2[instance]} when p = 2",
        )
    if strict and p == 3 and instance in REJECT_P3:
        raise FamilyError("rejected", f"instance {instance} does not violate Ingleton when p = 3")


def table_row(instance: int, q: int) -> str:
    """Name of the order-table row that applies to (instance, q)."""
    if instance == 0:
        return "0"
    if instance in (8, 9) and half_is_odd(q):
        return "8'"
    if instance in (13, 15) and half_is_odd(q):
        return "13'"
    for names, row in (
        ((1,), "1"),
        ((2, 4), "2"),
        ((3,), "3"),
        ((5,), "5"),
        ((6, 7, 8, 9), "6"),
        ((10, 11), "10"),
        ((12, 13, 14, 15), "12"),
    ):
        if instance in names:
            return row
    raise FamilyError("invalid", f"no table row for instance {instance}")


def _row_values(row: str, q: int) -> tuple:
    """(|G1|, |G2|, |G3|, |G34|, |G123|, |G12|, |G13|, |G23|) and lhs - rhs."""
    u = q - 1
    rows = {
        "0": ((6, q * u, 2 * u, 1, 1, 2, 2, u), 2 * u * (4 - q)),
        "1": ((6 * u, q * u * u, 2 * u * u, u, u, 2 * u, 2 * u, u * u), 2 * u**6 * (4 - q)),
        "2": ((6, q * u * u, 2 * u * u, u, 1, 2, 2, u * u), 2 * u**3 * (4 - q)),
        "3": ((12, q * u * u, 2 * u * u, u, 2, 4, 4, u * u), 16 * u**3 * (4 - q)),
        "5": ((3 * u, q * u * u, 2 * u * u, u, Fraction(u, 2), u, u, u * u), Fraction(u**6 * (4 - q), 4)),
        "6": ((6 * u, q * u, 2 * u * u, u, 1, 2, 2 * u, u), 2 * u**3 * (4 - q)),
        "10": ((6 * u, 2 * q * u, 2 * u * u, u, 2, 4, 2 * u, 2 * u), 16 * u**3 * (4 - q)),
        "12": ((6, q * u, q * u, 1, 1, 2, 2, u), 2 * u * (4 - q)),
        "8'": ((6 * u, q * u, 2 * u * u, u, 2, 2, 2 * u, u), 8 * u**3 * (2 * q + 1)),
        "13'": ((6, q * u, q * u, 2, 1, 1, 1, u), 2 * u * (2 * q + 1)),
    }
    return rows[row]


def expected_profile(instance: int, q: int) -> OrderProfile:
    """Tabulated orders for the PGL(2,q) tuple (instance 0) or a GL(2,q)
    instance. Only the index sets entering the Ingleton inequality are
    listed; the symmetric entries 4, 14, 24, 124 mirror 3, 13, 23, 123."""
    if instance == 0:
        prime_power(q)
        if q < 3:
            raise FamilyError("invalid", "PGL(2,q) tuple needs q >= 3")
        group_order = pgl_order(2, q)
    else:
        check_instance(q, instance)
        group_order = gl_order(2, q)
    (g1, g2, g3, g34, g123, g12, g13, g23), _ = _row_values(table_row(instance, q), q)
    vals = {
        "1": g1, "2": g2, "3": g3, "4": g3, "12": g12, "13": g13, "14": g13,
        "23": g23, "24": g23, "34": g34, "123": g123, "124": g123,
    }
    for k, v in vals.items():
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise FamilyError("invalid", f"row {table_row(instance, q)} is not integral at q = {q}")
            vals[k] = int(v)
    return OrderProfile(group_order, {alpha_key(k): int(v) for k, v in vals.items()})


def expected_difference(instance: int, q: int):
    """The lhs - rhs column of the order table, as printed."""
    return _row_values(table_row(instance, q), q)[1]


def pgl2_ratio(q: int) -> Fraction:
    return Fraction(4 * (q - 1), 3 * q)


# -- projective constructions in PGL(n, q) --------------------------------


def pgln_expected_orders(n: int, q: int, kind: str) -> dict[str, int]:
    """Closed-form stabilizer orders for the point and subspace tuples."""
    qn = q_n(q, n)
    if kind == "indep":
        vals = {
            "2": Fraction(qn * M(q, n - 1)),
            "1": Fraction(6 * qn * M(q, n - 3) * (q - 1) ** 2, q**3),
            "3": Fraction(2 * qn * M(q, n - 2) * (q - 1), q),
            "34": Fraction(qn * M(q, n - 3) * (q - 1) ** 2, q**3),
        }
    elif kind == "dep":
        vals = {
            "2": Fraction(qn * M(q, n - 1)),
            "1": Fraction(6 * qn * M(q, n - 2), q),
            "3": Fraction(2 * qn * M(q, n - 2) * (q - 1), q),
            "34": Fraction(qn * M(q, n - 2), q),
        }
    elif kind == "subspace":
        vals = {
            "2": Fraction(qn * M(q, n - 1)),
            "3": Fraction(qn * M(q, 2) * M(q, n - 2), q - 1),
            "1": Fraction(qn * M(q, 3) * M(q, n - 3), q - 1),
            "34": Fraction(qn * M(q, n - 3) * (q - 1) ** 2, q),
        }
    else:
        raise FamilyError("invalid", f"unknown construction {kind!r}")
    vals["4"] = vals["3"]
    out = {}
    for k, v in vals.items():
        if v.denominator != 1:
            raise FamilyError("invalid", f"order formula not integral for n={n}, q={q}")
        out[k] = int(v)
    return out


def pgln_index_g1_g12(q: int, kind: str) -> int:
    return q * q + q + 1 if kind == "subspace" else 3


def pgln_predicted(n: int, q: int, kind: str) -> tuple[bool, Fraction]:
    """Violation flag and ratio from the closed-form conditions.

    The ratio compares |G1:G12| |G2| with |G3|^2 / |G34|.
    """
    if kind == "indep":
        flag = q ** (n - 1) - 4 * q + 3 > 0
    elif kind == "dep":
        flag = 3 * q * sum(q**i for i in range(n - 1)) - 4 * q + 4 < 0
    else:
        flag = q**n - q**3 - q**2 + 1 > 0
    o = pgln_expected_orders(n, q, kind)
    ratio = Fraction(o["3"] ** 2, o["34"] * pgln_index_g1_g12(q, kind) * o["2"])
    return flag, ratio


def pgln_ratio_formula(n: int, q: int, kind: str) -> Fraction:
    if kind == "indep":
        return Fraction(4 * q * (q ** (n - 2) - 1), 3 * (q ** (n - 1) - 1))
    if kind == "subspace":
        return Fraction(q * (q + 1) ** 2 * (q ** (n - 2) - 1), (q * q + q + 1) * (q ** (n - 1) - 1))
    raise FamilyError("invalid", "no closed ratio for this construction")


def twotrans_ratio(l: int, c: int) -> Fraction:
    return Fraction(4 * c, 3 * (l - 1))


def twotrans_expected(group_order: int, l: int, k: int, d: int) -> OrderProfile:
    vals = {
        "1": 6 * d, "2": group_order // l, "3": 2 * k, "4": 2 * k,
        "12": 2 * d, "13": 2 * d, "14": 2 * d, "23": k, "24": k,
        "34": d, "123": d, "124": d,
    }
    return OrderProfile(group_order, {alpha_key(a): v for a, v in vals.items()})
