"""Tuples from a 2-transitive action and a triple of points."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import FamilyError
from ..groups import Group, act, domain, orbit, point_stabilizer, pointwise_stabilizer, setwise_stabilizer
from .formulas import twotrans_ratio


@dataclass
class TwoTransitiveSetup:
    group: Group
    omega: list
    alpha: object
    beta: object
    gamma: object
    l: int = 0
    k: int = 0
    d: int = 0
    c: int = 0

    @property
    def delta(self) -> frozenset:
        return frozenset([self.alpha, self.beta, self.gamma])


def two_transitive_setup(G: Group, alpha, beta, gamma, omega=None) -> TwoTransitiveSetup:
    """Check the preconditions and compute l, k, d and c = k / d."""
    omega = list(domain(G) if omega is None else omega)
    if len({alpha, beta, gamma}) != 3 or not {alpha, beta, gamma} <= set(omega):
        raise FamilyError("invalid", "need three distinct points of the domain")
    if set(orbit(G, alpha)) != set(omega):
        raise FamilyError("invalid", "the action is not transitive")
    Ga = point_stabilizer(G, alpha)
    if set(orbit(Ga, beta)) != set(omega) - {alpha}:
        raise FamilyError("invalid", "the action is not 2-transitive")
    Gab = pointwise_stabilizer(G, [alpha, beta])
    Gd = pointwise_stabilizer(G, [alpha, beta, gamma])
    setup = TwoTransitiveSetup(G, omega, alpha, beta, gamma, l=len(omega), k=Gab.order, d=Gd.order)
    if setup.k % setup.d:
        raise FamilyError("invalid", "k is not a multiple of d")  # pragma: no cover
    setup.c = setup.k // setup.d
    if setup.c != len(orbit(Gab, gamma)):
        raise FamilyError("invalid", "orbit of gamma disagrees with k / d")  # pragma: no cover
    return setup


def two_transitive_tuple(setup: TwoTransitiveSetup) -> tuple[tuple, bool]:
    """(G(D), G_alpha, G({alpha,beta}), G({alpha,gamma})) and the predicted
    violation flag 3(l - 1) < 4c."""
    G = setup.group
    a, b, g = setup.alpha, setup.beta, setup.gamma
    G1 = setwise_stabilizer(G, [a, b, g])
    induced = {tuple(act(G, x, y) for y in (a, b, g)) for x in G1.elements}
    if len(induced) != 6:
        raise FamilyError("invalid", "the stabilizer of the triple does not induce S3 on it")
    G2 = point_stabilizer(G, a)
    G3 = setwise_stabilizer(G, [a, b])
    G4 = setwise_stabilizer(G, [a, g])
    predicted = 3 * (setup.l - 1) < 4 * setup.c
    return (G1, G2, G3, G4), predicted


def predicted_ratio(setup: TwoTransitiveSetup):
    return twotrans_ratio(setup.l, setup.c)
