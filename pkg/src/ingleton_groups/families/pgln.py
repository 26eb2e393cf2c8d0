"""Point and subspace stabilizer tuples in PGL(n,q)."""

from __future__ import annotations

from ..errors import FamilyError
from ..ffield import field_of_order
from ..groups import (
    ProjectivePoint,
    Subspace,
    point_stabilizer,
    projective_linear_group,
    setwise_stabilizer,
    subspace_stabilizer,
)

_GROUPS: dict = {}


def _pgl(n: int, q: int):
    key = (n, q)
    if key not in _GROUPS:
        _GROUPS[key] = projective_linear_group(n, field_of_order(q))
    return _GROUPS[key]


def _unit(n: int, *idx: int) -> tuple:
    return tuple(1 if i in idx else 0 for i in range(n))


def pgln_points_tuple(n: int, q: int, dependent: bool = False, cap: int | None = None) -> tuple:
    """(N(D), N(P2), N({P2,P3}), N({P2,P4})) for D = {P2,P3,P4}.

    P2, P3 span e1, e2. P4 spans e3, or e1 + e2 in the dependent case.
    """
    if n < 2 or (not dependent and n < 3):
        raise FamilyError("invalid", "independent points need n >= 3, dependent points n >= 2")
    G = _pgl(n, q)
    f = G.arith.field
    P2 = ProjectivePoint.of(f, _unit(n, 0))
    P3 = ProjectivePoint.of(f, _unit(n, 1))
    P4 = ProjectivePoint.of(f, _unit(n, 0, 1) if dependent else _unit(n, 2))
    G1 = setwise_stabilizer(G, [P2, P3, P4], cap)
    G2 = point_stabilizer(G, P2, cap)
    G3 = setwise_stabilizer(G, [P2, P3], cap)
    G4 = setwise_stabilizer(G, [P2, P4], cap)
    return (G1, G2, G3, G4)


def pgln_subspace_tuple(n: int, q: int, cap: int | None = None) -> tuple:
    """Stabilizers of U1 = <e1,e2,e3>, U2 = <e1>, U3 = <e1,e2>, U4 = <e1,e3>."""
    if n < 3:
        raise FamilyError("invalid", "the subspace tuple needs n >= 3")
    G = _pgl(n, q)
    f = G.arith.field
    U1 = Subspace.span(f, [_unit(n, 0), _unit(n, 1), _unit(n, 2)])
    U2 = Subspace.span(f, [_unit(n, 0)])
    U3 = Subspace.span(f, [_unit(n, 0), _unit(n, 1)])
    U4 = Subspace.span(f, [_unit(n, 0), _unit(n, 2)])
    return tuple(subspace_stabilizer(G, U, cap) for U in (U1, U2, U3, U4))
