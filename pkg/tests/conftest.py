import os
import sys

import pytest
from hypothesis import HealthCheck, settings

from alexmod.abelian import AbelianGroup
from alexmod.coverings import gamma_presentation
from alexmod.finite_groups import d4_presentation, q8_presentation, s3_presentation
from alexmod.presentations import AbelianHom, GroupPresentation
from alexmod.textio import parse_presentation

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pres(text: str) -> GroupPresentation:
    return parse_presentation(text)


TREFOIL = "gens: x, y\nrels: x*y*x*y^-1*x^-1*y^-1\n"
# w x w^-1 y^-1 with w = x^-1 y x y^-1
FIGURE_EIGHT = "gens: x, y\nrels: x^-1*y*x*y^-1*x*y*x^-1*y^-1*x*y^-1\n"


def laurent_hom(P: GroupPresentation, degrees) -> AbelianHom:
    Z = AbelianGroup(1, ())
    return AbelianHom(P, Z, [Z.element([d]) for d in degrees])


def cyclic_hom(P: GroupPresentation, n: int, images) -> AbelianHom:
    Zn = AbelianGroup.cyclic(n)
    return AbelianHom(P, Zn, [Zn.element(torsion=[a % n]) for a in images])


# (presentation, hand-computed abelianization as (free_rank, torsion))
CORPUS = [
    ("trefoil", pres(TREFOIL), (1, ())),
    ("figure-eight", pres(FIGURE_EIGHT), (1, ())),
    ("cyclic5", pres("gens: x\nrels: x^5"), (0, (5,))),
    ("free3", pres("gens: a, b, c\nrels:"), (3, ())),
    ("z2", pres("gens: x, y\nrels: x*y*x^-1*y^-1"), (2, ())),
    ("bs12", pres("gens: a, b\nrels: b*a*b^-1*a^-2"), (1, ())),
    ("torus25", pres("gens: x, y\nrels: x^2*y^-5"), (1, ())),
    ("gamma2222", gamma_presentation((2, 2, 2, 2)), (0, (2, 2, 2))),
    ("gamma333", gamma_presentation((3, 3, 3)), (0, (3, 3))),
    ("gamma442", gamma_presentation((4, 4, 2)), (0, (2, 4))),
    ("gamma222", gamma_presentation((2, 2, 2)), (0, (2, 2))),
    ("s3", s3_presentation(), (0, (2,))),
    ("d4", d4_presentation(), (0, (2, 2))),
    ("q8", q8_presentation(), (0, (2, 2))),
]


@pytest.fixture
def trefoil():
    return pres(TREFOIL)


@pytest.fixture
def figure_eight():
    return pres(FIGURE_EIGHT)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS):
            terminalreporter.write_line(line)
