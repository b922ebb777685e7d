"""Alexander polynomials of a few knot and torus-knot groups."""

from alexmod.abelian import AbelianGroup
from alexmod.fox import alexander_polynomial
from alexmod.group_algebra import format_element
from alexmod.presentations import AbelianHom
from alexmod.textio import parse_presentation

KNOTS = {
    "trefoil": ("gens: x, y\nrels: x*y*x*y^-1*x^-1*y^-1\n", [1, 1]),
    "figure-eight": ("gens: x, y\nrels: x^-1*y*x*y^-1*x*y*x^-1*y^-1*x*y^-1\n", [1, 1]),
}
# the (p, q) torus knot group <a, b | a^p = b^q> maps a to q and b to p
for p, q in [(2, 3), (2, 5), (3, 4), (3, 5)]:
    KNOTS[f"torus({p},{q})"] = (f"gens: a, b\nrels: a^{p}*b^-{q}\n", [q, p])

Z = AbelianGroup(1)
for name, (text, degrees) in KNOTS.items():
    P = parse_presentation(text)
    psi = AbelianHom(P, Z, [Z.element([d]) for d in degrees])
    print(f"{name:>14}: {format_element(alexander_polynomial(P, psi))}")
