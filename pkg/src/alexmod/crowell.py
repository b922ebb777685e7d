"""The Crowell exact sequence and maps between Alexander modules.

For ``1 -> R -> G -> H -> 1`` with ``H`` abelian the sequence

    0 -> R^ab -> A_psi -> Z[H] -> Z -> 0

has middle map ``theta2(dx_j) = psi(x_j) - 1`` and augmentation on the right.
Everything here is computed over ``Z`` by expanding ``Z[H]`` in its regular
representation, so ``H`` must be finite unless stated otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .abelian import (AbelianElement, AbelianGroup, AbelianGroupHom, IntMatrix, Lattice,
                      _Solver, coker_invariants, lattice_kernel, sublattice_equal, Subquotient)
from .errors import (ChainNotExact, DimensionMismatch, GroupMismatch, InfiniteGroupError,
                     InvalidHomomorphism, NonSurjective)
from .finite_groups import FiniteGroupTable, normal_subgroups
from .fox import AlexanderPresentation, alexander_matrix, fox_row
from .group_algebra import (AlgebraMatrix, GroupAlgebraElement, augmentation, expand_relations,
                            expand_vector, format_element, ga_apply_hom, regular_expand)
from .presentations import (AbelianHom, GroupPresentation, abelianization, factor_through,
                            subgroup_abelianization)
from .reports import Report
from .words import Word


@dataclass(frozen=True)
class CrowellSequence:
    alexander: AlexanderPresentation
    theta2: AlgebraMatrix
    hom: AbelianHom

    @property
    def group(self) -> AbelianGroup:
        return self.hom.target

    @property
    def presentation(self) -> GroupPresentation:
        return self.alexander.source_presentation


def crowell_sequence(P: GroupPresentation, psi: AbelianHom) -> CrowellSequence:
    ap = alexander_matrix(P, psi)
    H = psi.target
    one = GroupAlgebraElement.one(H)
    theta = [[GroupAlgebraElement.monomial(H, g) - one] for g in ap.hom.images]
    return CrowellSequence(ap, AlgebraMatrix(H, theta, P.num_generators, 1), ap.hom)


def corrupt_theta2(cs: CrowellSequence, j: int) -> CrowellSequence:
    """Negative control: the same data with ``theta2(dx_j)`` replaced by 0 (``j`` is 1-based)."""
    H = cs.group
    entries = [[cs.theta2.entries[i][0]] for i in range(cs.theta2.rows)]
    if not 1 <= j <= len(entries):
        raise DimensionMismatch(f"no generator {j}")
    entries[j - 1] = [GroupAlgebraElement.zero(H)]
    return CrowellSequence(cs.alexander, AlgebraMatrix(H, entries, len(entries), 1), cs.hom)


def _require_finite(H: AbelianGroup, what: str):
    if not H.is_finite:
        raise InfiniteGroupError(f"{what} needs a finite H, got {H}")


def theta2_expanded(cs: CrowellSequence) -> IntMatrix:
    """``theta2`` as a ``|H| x |H| r`` integer matrix; column ``j|H| + k`` is ``h_k (psi(x_j) - 1)``."""
    _require_finite(cs.group, "expanding theta2")
    return regular_expand(cs.theta2.transpose())


def relation_lattice(cs: CrowellSequence) -> IntMatrix:
    return expand_relations(cs.alexander.matrix)


def crowell_kernel(cs: CrowellSequence) -> Subquotient:
    """``ker(theta2) / Im(Q_psi)`` inside ``Z^{|H| r}``, which is ``R^ab``."""
    T = theta2_expanded(cs)
    Rel = relation_lattice(cs)
    return Subquotient(lattice_kernel(T).hstack(Rel), Rel)


def rab_via_crowell(cs: CrowellSequence) -> AbelianGroup:
    return crowell_kernel(cs).group


def _augmentation_kernel(H: AbelianGroup) -> IntMatrix:
    n = H.order
    cols = []
    for k in range(1, n):
        v = [0] * n
        v[k], v[0] = 1, -1
        cols.append(v)
    return IntMatrix.from_columns(cols, n)


def check_crowell_exactness(cs: CrowellSequence, oracle: bool = True) -> Report:
    """Verify the sequence site by site; failing sites carry a witness.

    The well-definedness and augmentation sites are checked symbolically in
    ``Z[H]`` for any ``H``.  The lattice sites need a finite ``H`` and are
    skipped (and recorded as skipped) otherwise.
    """
    H = cs.group
    r = cs.presentation.num_generators
    rep = Report("crowell exactness")
    rep.data.update({"H": str(H), "generators": r, "relators": len(cs.presentation.relators)})
    names = cs.presentation.generator_names

    # theta2 vanishes on the relations of the module
    QT = cs.alexander.matrix @ cs.theta2
    bad = next((i for i in range(QT.rows) if QT.entries[i][0]), None)
    if bad is None:
        rep.add("theta2_well_defined", True, "theta2 kills every relator row")
    else:
        rep.add("theta2_well_defined", False, f"relator {bad + 1} survives",
                {"relator": bad + 1, "image": format_element(QT.entries[bad][0])})

    eps_bad = [j for j in range(r) if augmentation(cs.theta2.entries[j][0]) != 0]
    rep.add("augmentation_kills_image", not eps_bad, "",
            {"generator": names[eps_bad[0]]} if eps_bad else None)

    if not H.is_finite:
        rep.data["lattice_checks"] = "skipped: H is infinite"
        return rep

    n = H.order
    els = H.elements()
    T = theta2_expanded(cs)

    # Im theta2 == ker(augmentation) as sublattices of Z^|H|
    A = _augmentation_kernel(H)
    LA, LT = Lattice(A), Lattice(T)
    w1 = next((c for c in range(T.cols) if T.column(c) not in LA), None)
    w2 = next((h for h in range(A.cols) if A.column(h) not in LT), None)
    if w1 is None and w2 is None:
        rep.add("image_equals_augmentation_kernel", True, f"both have rank {n - 1}")
    elif w2 is not None:
        rep.add("image_equals_augmentation_kernel", False,
                "an element of the augmentation ideal is missing from the image",
                {"element": f"{els[w2 + 1]} - 1"})
    else:
        j, k = divmod(w1, n)
        rep.add("image_equals_augmentation_kernel", False, "image leaves the augmentation ideal",
                {"generator": names[j], "h": str(els[k])})

    # Z[H] -> Z is onto since it sends 1 to 1
    eps = IntMatrix([[1] * n])
    rep.add("augmentation_surjective", coker_invariants(eps).is_trivial)

    if oracle:
        if bad is not None:
            rep.add("kernel_matches_subgroup_homology", False,
                    "theta2 is not defined on the module, so its kernel is meaningless")
        elif not cs.hom.is_surjective():
            rep.add("kernel_matches_subgroup_homology", False,
                    "psi is not onto H, so R does not have index |H|")
        else:
            ours = rab_via_crowell(cs)
            theirs = subgroup_abelianization(cs.presentation, cs.hom)
            rep.data["R_ab"] = str(ours)
            rep.add("kernel_matches_subgroup_homology", ours == theirs,
                    f"ker theta2 / Im Q = {ours}, Reidemeister-Schreier gives {theirs}",
                    None if ours == theirs else {"crowell": str(ours), "rewrite": str(theirs)})
    return rep


# -- the augmentation-ideal oracle -------------------------------------------

def _bimodule_relations(T: FiniteGroupTable, psi: Sequence[AbelianElement], H: AbelianGroup,
                        elements: Sequence[int], hset=None) -> tuple[IntMatrix, dict]:
    """Relations ``d(g1 g2) - d(g1) - psi(g1) d(g2)`` over the listed group elements and ``hset``."""
    hset = list(range(H.order)) if hset is None else list(hset)
    hpos = {h: k for k, h in enumerate(hset)}
    gpos = {g: k for k, g in enumerate(elements)}
    m = len(hset)
    table = H.addition_table
    cols = []
    for g1 in elements:
        shift = H.index(psi[g1])
        for g2 in elements:
            g12 = T.mul(g1, g2)
            for h in hset:
                v = [0] * (len(elements) * m)
                v[gpos[g12] * m + hpos[h]] += 1
                v[gpos[g1] * m + hpos[h]] -= 1
                v[gpos[g2] * m + hpos[table[h][shift]]] -= 1
                cols.append(v)
    return IntMatrix.from_columns(cols, len(elements) * m), gpos


def bimodule_oracle(T: FiniteGroupTable, psi: Sequence[AbelianElement],
                    H: AbelianGroup) -> AbelianGroup:
    """Invariants of ``Z[H] (x)_{Z[G]} I_G`` from one generator per element of ``G``."""
    _require_finite(H, "the bimodule oracle")
    if len(psi) != T.order:
        raise InvalidHomomorphism("one image per table element is required")
    for a in range(T.order):
        for b in range(T.order):
            if psi[T.mul(a, b)] != H.add(psi[a], psi[b]):
                raise InvalidHomomorphism(f"not a homomorphism on the pair {(a, b)}")
    M, _ = _bimodule_relations(T, psi, H, list(range(T.order)))
    return coker_invariants(M)


def c1_middle_exactness_search(cases) -> Report:
    """Look for failures of exactness at the middle of ``A_N -> A_G -> A_{G/N}``.

    ``cases`` yields ``(label, table, psi_images, H)``.  For every normal
    subgroup ``N`` found by :func:`normal_subgroups` the sequence
    ``N -> G -> G/N`` with coefficient groups ``psi(N) -> H -> H/psi(N)`` is
    tested.  Failures are reported, never raised.
    """
    rep = Report("C1 middle exactness search")
    tested = failures = 0
    for label, T, psi, H in cases:
        n_h = H.order
        table = H.addition_table
        for N in normal_subgroups(T):
            tested += 1
            Nl = sorted(N)
            SA = sorted({H.index(psi[g]) for g in Nl})
            # cosets of N in G and of psi(N) in H
            gcos = {g: min(T.mul(g, x) for x in Nl) for g in range(T.order)}
            hcos = {h: min(table[h][s] for s in SA) for h in range(n_h)}
            Gc = sorted(set(gcos.values()))
            Hc = sorted(set(hcos.values()))
            # A-level, B-level, C-level relation lattices
            RA, posA = _bimodule_relations(T, psi, H, Nl, hset=SA)
            RB, posB = _bimodule_relations(T, psi, H, list(range(T.order)))
            cols = []
            gp = {g: k for k, g in enumerate(Gc)}
            hp = {h: k for k, h in enumerate(Hc)}
            mC = len(Hc)
            for c1 in Gc:
                sh = H.index(psi[c1])
                for c2 in Gc:
                    c12 = gcos[T.mul(c1, c2)]
                    for h in Hc:
                        v = [0] * (len(Gc) * mC)
                        v[gp[c12] * mC + hp[h]] += 1
                        v[gp[c1] * mC + hp[h]] -= 1
                        v[gp[c2] * mC + hp[hcos[table[h][sh]]]] -= 1
                        cols.append(v)
            RC = IntMatrix.from_columns(cols, len(Gc) * mC)
            nB = T.order * n_h
            inc_cols = []
            for g in Nl:
                for s in SA:
                    v = [0] * nB
                    v[posB[g] * n_h + s] = 1
                    inc_cols.append(v)
            Pi = IntMatrix.zeros(len(Gc) * mC, nB)
            for g in range(T.order):
                for h in range(n_h):
                    Pi.data[gp[gcos[g]] * mC + hp[hcos[h]]][g * n_h + h] = 1
            # image of A in A_B uses the A relations only through their images, which lie in RB
            imA = IntMatrix.from_columns(inc_cols, nB).hstack(RB)
            K = lattice_kernel(Pi.hstack(RC))
            kerBC = IntMatrix.from_columns([c[:nB] for c in K.columns()], nB)
            ok = sublattice_equal(kerBC, imA)
            if not ok:
                failures += 1
                rep.add(f"{label} / N of order {len(Nl)}", False,
                        "kernel of A_B -> A_C differs from the image of A_N",
                        {"N": Nl, "ker": str(Subquotient(kerBC.hstack(RB), RB).group),
                         "image": str(Subquotient(imA, RB).group)})
    rep.data.update({"instances": tested, "failures": failures})
    return rep


# -- C1 functoriality --------------------------------------------------------

def c1_induced_map(csA: CrowellSequence, csB: CrowellSequence, f_G: Sequence[Word],
                   f_H: AbelianGroupHom) -> AlgebraMatrix:
    """Matrix of ``A(f)``: row ``j`` is the image of ``dx_j`` in ``Z[H_B]^{r_B}``.

    Only the abelianized compatibility ``f_H o psi_A == psi_B o f_G`` is checked;
    that relators of A land in the normal closure of relators of B is up to the caller.
    """
    PA, PB = csA.presentation, csB.presentation
    if len(f_G) != PA.num_generators:
        raise DimensionMismatch(f"{len(f_G)} generator images for {PA.num_generators} generators")
    if f_H.source != csA.group or f_H.target != csB.group:
        raise GroupMismatch("f_H must map H_A to H_B")
    for j, w in enumerate(f_G):
        if w.max_generator() > PB.num_generators:
            raise DimensionMismatch(f"image of generator {j + 1} uses an unknown generator")
        lhs = f_H(csA.hom.images[j])
        rhs = csB.hom.of_word(w)
        if lhs != rhs:
            raise InvalidHomomorphism(
                f"f_H(psi_A(x_{j + 1})) = {lhs} but psi_B(f_G(x_{j + 1})) = {rhs}")
    rows = [fox_row(w, csB.hom) for w in f_G]
    return AlgebraMatrix(csB.group, rows, PA.num_generators, PB.num_generators)


def _image_subgroup(f: AbelianGroupHom) -> list[AbelianElement]:
    H = f.target
    seen = {H.identity}
    frontier = [H.identity]
    gens = [f(g) for g in f.source.generators()]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                for b in (H.add(a, g), H.sub(a, g)):
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
        frontier = nxt
    return sorted(seen)


def _row_image(row_coeffs: Sequence[GroupAlgebraElement], M: AlgebraMatrix,
               f_H: AbelianGroupHom) -> list[GroupAlgebraElement]:
    out = [GroupAlgebraElement.zero(M.group) for _ in range(M.cols)]
    for j, a in enumerate(row_coeffs):
        if not a:
            continue
        fa = ga_apply_hom(a, f_H)
        for k in range(M.cols):
            out[k] = out[k] + fa * M.entries[j][k]
    return out


def c1_map_report(csA: CrowellSequence, csB: CrowellSequence, f_G: Sequence[Word],
                  f_H: AbelianGroupHom) -> tuple[AlgebraMatrix, Report]:
    """Build the induced map and check it is defined on the modules and onto."""
    HB = csB.group
    _require_finite(HB, "the C1 check")
    M = c1_induced_map(csA, csB, f_G, f_H)
    rep = Report("C1 induced map")
    rep.add("abelianized_compatibility", True)
    RelB = relation_lattice(csB)
    LB = Lattice(RelB)
    # relations of A are generated over Z[H_A] by the rows of Q_A, and Rel_B is a Z[H_B]-module
    QA = csA.alexander.matrix
    bad = None
    for i in range(QA.rows):
        img = expand_vector(_row_image(QA.entries[i], M, f_H), HB)
        if img not in LB:
            bad = i
            break
    rep.add("relations_preserved", bad is None, "",
            None if bad is None else {"relator": bad + 1})
    K = _image_subgroup(f_H)
    cols = []
    for k in K:
        for j in range(M.rows):
            cols.append(expand_vector([e.shift(k) for e in M.entries[j]], HB))
    span = IntMatrix.from_columns(cols, RelB.rows).hstack(RelB)
    coker = coker_invariants(span)
    rep.add("surjective", coker.is_trivial, f"cokernel {coker}",
            None if coker.is_trivial else {"cokernel": str(coker)})
    rep.data.update({"H_A": str(csA.group), "H_B": str(HB), "image_of_H_A": len(K)})
    return M, rep


# -- C2 right exactness ------------------------------------------------------

def validate_chain(inclusion: AbelianGroupHom, projection: AbelianGroupHom):
    """Raise :class:`ChainNotExact` unless ``0 -> A -> B -> C -> 0`` is exact."""
    if inclusion.target != projection.source:
        raise ChainNotExact("the inclusion does not land in the source of the projection")
    B = inclusion.target
    if not inclusion.is_injective():
        raise ChainNotExact(f"not injective: {inclusion.kernel_generators()[0]} maps to 0")
    if not projection.is_surjective():
        raise ChainNotExact("the projection is not surjective")
    comp = projection.compose(inclusion)
    for g, img in zip(inclusion.source.generators(), comp.images):
        if not projection.target.is_identity(img):
            raise ChainNotExact(f"projection of the image of {g} is {img}, not 0")
    image = Lattice(inclusion.matrix().hstack(B.relation_matrix()))
    for k in projection.kernel_generators():
        if B.to_vector(k) not in image:
            raise ChainNotExact(f"{k} is in the kernel but not in the image")


def c2_exactness_check(P: GroupPresentation, psi_B: AbelianHom, inclusion: AbelianGroupHom,
                       projection: AbelianGroupHom) -> Report:
    """Right exactness of ``A_A -> A_B -> A_C -> 0`` for a chain ``0 -> H_A -> H_B -> H_C -> 0``.

    ``psi_B`` is the middle map and ``psi_C = projection o psi_B``.  The first
    term is the image of ``I(H_A) * A_B``, i.e. the span of ``(a - 1) h dx_j``.
    Both maps use the same Fox matrix pushed to the respective coefficient ring.
    """
    validate_chain(inclusion, projection)
    HB, HC = psi_B.target, projection.target
    if inclusion.target != HB:
        raise GroupMismatch("psi_B must land in the middle group of the chain")
    _require_finite(HB, "the C2 check")
    psi_C = psi_B.then(projection)
    r = P.num_generators
    nB, nC = HB.order, HC.order
    RelB = expand_relations(alexander_matrix(P, psi_B).matrix)
    RelC = expand_relations(alexander_matrix(P, psi_C).matrix)
    els = HB.elements()
    tab = HB.addition_table
    Pi = IntMatrix.zeros(r * nC, r * nB)
    for j in range(r):
        for k, h in enumerate(els):
            Pi.data[j * nC + HC.index(projection(h))][j * nB + k] = 1
    a_cols = []
    for a in inclusion.source.generators():
        s = HB.index(inclusion(a))
        for j in range(r):
            for k in range(nB):
                v = [0] * (r * nB)
                v[j * nB + tab[k][s]] += 1
                v[j * nB + k] -= 1
                a_cols.append(v)
    Aterm = IntMatrix.from_columns(a_cols, r * nB)
    rep = Report("C2 right exactness")
    LC = Lattice(RelC)
    pushed = Pi @ RelB
    bad = next((c for c in range(pushed.cols) if pushed.column(c) not in LC), None)
    rep.add("projection_defined", bad is None, "relations of A_B map into relations of A_C",
            None if bad is None else {"relation": bad})
    K = lattice_kernel(Pi.hstack(RelC))
    kerBC = IntMatrix.from_columns([c[:r * nB] for c in K.columns()], r * nB)
    image = Aterm.hstack(RelB)
    LI, LK = Lattice(image), Lattice(kerBC)
    w1 = next((c for c in kerBC.columns() if c not in LI), None)
    w2 = next((c for c in image.columns() if c not in LK), None)
    rep.add("composite_zero", w2 is None, "the image of A_A dies in A_C",
            None if w2 is None else {"vector": w2})
    rep.add("exact_at_B", w1 is None, "kernel of A_B -> A_C is the image of A_A",
            None if w1 is None else {"vector": w1})
    onto = coker_invariants(Pi.hstack(RelC))
    rep.add("exact_at_C", onto.is_trivial, f"cokernel {onto}")
    rep.data.update({
        "H_A": str(inclusion.source), "H_B": str(HB), "H_C": str(HC),
        "A_B": str(coker_invariants(RelB)), "A_C": str(coker_invariants(RelC)),
        "image_of_A_A": str(Subquotient(image, RelB).group)})
    return rep


# -- kernel formulas ---------------------------------------------------------

def _random_combo(rng: random.Random, cols: list[list[int]], length: int, picks: int = 3):
    v = [0] * length
    if not cols:
        return v
    for _ in range(picks):
        c = cols[rng.randrange(len(cols))]
        k = rng.randint(-3, 3)
        if k:
            for i, x in enumerate(c):
                if x:
                    v[i] += k * x
    return v


def theta2_between(cs_fine: CrowellSequence, cs_coarse: CrowellSequence, samples: int = 50,
                   seed: int = 0, shrink_target: bool = False) -> tuple[AlgebraMatrix, Report]:
    """The map ``A_fine -> A_coarse`` with ``dx_j -> dx_j`` and a check of its kernel formula.

    The kernel is compared with the preimage of the coarse relations: lifts of
    ``Im Q`` plus the kernel of the coefficient map, generated by ``(g - 1) h e_j``
    for ``g`` in the kernel of ``H_fine -> H_coarse``.  Both inclusions are
    tested exactly on lattice bases of the free module ``Z[H_fine]^r`` and
    again on random samples.  With
    ``shrink_target`` the coarse relations are replaced by twice themselves,
    which must break the inclusion of the kernel.
    """
    P = cs_fine.presentation
    if cs_coarse.presentation.num_generators != P.num_generators:
        raise DimensionMismatch("both sequences must come from the same generators")
    Hf, Hc = cs_fine.group, cs_coarse.group
    _require_finite(Hf, "theta2_between")
    try:
        q = factor_through(cs_fine.hom, cs_coarse.hom)
    except (NonSurjective, InvalidHomomorphism) as exc:
        raise NonSurjective(f"coarse data is not a quotient of the fine data: {exc}") from None
    if not q.is_surjective():
        raise NonSurjective("H_fine -> H_coarse is not onto")
    r, nf, nc = P.num_generators, Hf.order, Hc.order
    one = GroupAlgebraElement.one(Hc)
    mat = AlgebraMatrix(Hc, [[one if i == j else GroupAlgebraElement.zero(Hc) for j in range(r)]
                             for i in range(r)], r, r)
    fe = Hf.elements()
    qidx = [Hc.index(q(h)) for h in fe]
    section = {}
    for k, c in enumerate(qidx):
        section.setdefault(c, k)
    Phi = IntMatrix.zeros(r * nc, r * nf)
    for j in range(r):
        for k in range(nf):
            Phi.data[j * nc + qidx[k]][j * nf + k] = 1

    def lift(v):
        out = [0] * (r * nf)
        for j in range(r):
            for c in range(nc):
                x = v[j * nc + c]
                if x:
                    out[j * nf + section[c]] += x
        return out

    Rel_f = relation_lattice(cs_fine)
    Rel_c = relation_lattice(cs_coarse)
    target = Rel_c if not shrink_target else IntMatrix(
        [[2 * x for x in row] for row in Rel_c.data], Rel_c.rows, Rel_c.cols)
    tab = Hf.addition_table
    ker_cols = []
    for g in q.kernel_generators():
        s = Hf.index(g)
        for j in range(r):
            for k in range(nf):
                v = [0] * (r * nf)
                v[j * nf + tab[k][s]] += 1
                v[j * nf + k] -= 1
                ker_cols.append(v)
    # the preimage is compared in the free module, before projecting by Rel_f;
    # equality there implies equality in A_fine
    lifted = [lift(c) for c in target.columns()]
    pre = IntMatrix.from_columns(lifted + ker_cols, r * nf)
    Lpre, LRc = Lattice(pre), Lattice(Rel_c)
    Kfull = lattice_kernel(Phi.hstack(_neg(Rel_c)))
    kernel_basis = [c[:r * nf] for c in Kfull.columns()]

    rep = Report("theta2 between Alexander modules")
    rep.data.update({"H_fine": str(Hf), "H_coarse": str(Hc), "samples": samples, "seed": seed,
                     "shrink_target": shrink_target})
    wd = next((c for c in Rel_f.columns() if Phi.apply(c) not in LRc), None)
    rep.add("well_defined", wd is None, "fine relations map into coarse relations",
            None if wd is None else {"vector": wd})
    w = next((c for c in pre.columns() if Phi.apply(c) not in LRc), None)
    rep.add("contains_exact", w is None, "preimage generators lie in the kernel",
            None if w is None else {"vector": w})
    w = next((c for c in kernel_basis if c not in Lpre), None)
    rep.add("contained_exact", w is None, "kernel basis lies in the preimage",
            None if w is None else {"vector": w})
    rng = random.Random(seed)
    rel_cols, rf_cols = target.columns(), Rel_f.columns()
    bad = None
    for _ in range(samples):
        y = _random_combo(rng, rel_cols, r * nc)
        v = lift(y)
        for part in (_random_combo(rng, ker_cols, r * nf), _random_combo(rng, rf_cols, r * nf)):
            v = [a + b for a, b in zip(v, part)]
        if Phi.apply(v) not in LRc:
            bad = v
            break
    rep.add("contains_sampled", bad is None, f"{samples} samples",
            None if bad is None else {"vector": bad})
    bad = None
    for _ in range(samples):
        v = _random_combo(rng, kernel_basis, r * nf)
        if v not in Lpre:
            bad = v
            break
    rep.add("contained_sampled", bad is None, f"{samples} samples",
            None if bad is None else {"vector": bad})
    return mat, rep


def _neg(A: IntMatrix) -> IntMatrix:
    return IntMatrix([[-x for x in row] for row in A.data], A.rows, A.cols)


def product_relator(s: int) -> Word:
    return Word([(i, 1) for i in range(1, s + 1)])


def phi3_kernel_check(P_gamma: GroupPresentation, psi: AbelianHom, samples: int = 50,
                      seed: int = 0, shrink_target: bool = False) -> Report:
    """Sampled check of ``ker(phi3) = psi1(phi2^{-1}(Im Q2))`` and of ``phi3`` being onto.

    The top row is the free group on the generators of ``P_gamma`` modulo the
    product relator, with Laurent coefficients in ``Z[Z^{s-1}]``; the bottom row
    is ``P_gamma`` with the finite ``psi``.  ``psi1`` removes the last coordinate
    using the row ``(1, x_1, x_1 x_2, ...)`` of ``Q1``.
    """
    s = P_gamma.num_generators
    if psi.presentation.num_generators != s:
        raise DimensionMismatch("psi must be defined on the generators of P_gamma")
    if s < 2:
        raise DimensionMismatch("need at least two generators")
    prod = product_relator(s)
    if prod not in P_gamma.relators:
        raise DimensionMismatch("P_gamma must contain the product relator x_1 ... x_s")
    Hf = psi.target
    _require_finite(Hf, "phi3_kernel_check")
    top = GroupPresentation(s, (prod,), P_gamma.generator_names)
    Ht, psi_top = abelianization(top)
    f_H = factor_through(psi_top, psi)
    if not f_H.is_surjective():
        raise NonSurjective("psi is not onto its target")
    row = fox_row(prod, psi_top)
    inv_last = GroupAlgebraElement.monomial(Ht, Ht.neg(psi_top.of_word(Word([(i, 1) for i in range(1, s)]))))
    n = Hf.order
    Rel = expand_relations(alexander_matrix(P_gamma, psi).matrix)
    target = Rel if not shrink_target else IntMatrix(
        [[2 * x for x in rw] for rw in Rel.data], Rel.rows, Rel.cols)
    L_rel, L_target = Lattice(Rel), Lattice(target)
    zero_t = GroupAlgebraElement.zero(Ht)

    def phi2(b):
        return expand_vector([ga_apply_hom(x, f_H) for x in b], Hf)

    def psi1(b):
        c = b[-1] * inv_last
        return [b[j] - c * row[j] for j in range(s - 1)]

    solver = _Solver(f_H.matrix().hstack(Hf.relation_matrix()))
    fe = Hf.elements()
    sect = []
    for h in fe:
        x = solver.solve(Hf.to_vector(h))
        sect.append(Ht.from_vector(x[:Ht.ngens]))

    def lift(coords, length):
        out = []
        for j in range(length):
            out.append(GroupAlgebraElement(Ht, {sect[k]: coords[j * n + k] for k in range(n)
                                                if coords[j * n + k]}))
        return out

    rng = random.Random(seed)

    def rand_mono():
        return Ht.from_vector([rng.randint(-2, 2) for _ in range(Ht.ngens)])

    kgens = f_H.kernel_generators()

    def rand_ker(length):
        out = [zero_t] * length
        if not kgens:
            return out
        for _ in range(2):
            g = kgens[rng.randrange(len(kgens))]
            m = rand_mono()
            j = rng.randrange(length)
            c = rng.randint(-3, 3)
            out[j] = out[j] + (GroupAlgebraElement.monomial(Ht, Ht.add(g, m), c)
                               - GroupAlgebraElement.monomial(Ht, m, c))
        return out

    def rand_beta():
        return GroupAlgebraElement.monomial(Ht, rand_mono(), rng.randint(-3, 3))

    rep = Report("phi3 kernel formula")
    rep.data.update({"H_top": str(Ht), "H": str(Hf), "samples": samples, "seed": seed,
                     "shrink_target": shrink_target})
    # psi1 kills Im Q1 and is the identity on the first s-1 coordinates
    beta = GroupAlgebraElement.monomial(Ht, Ht.identity)
    rep.add("psi1_kills_Q1", all(not x for x in psi1([beta * e for e in row])))

    bad = None
    rel_cols = target.columns()
    for _ in range(samples):
        y = _random_combo(rng, rel_cols, s * n)
        b = lift(y, s)
        b = [x + k for x, k in zip(b, rand_ker(s))]
        be = rand_beta()
        b = [x + be * e for x, e in zip(b, row)]
        a = psi1(b)
        if phi2(a + [zero_t]) not in L_rel:
            bad = [str(x) for x in a]
            break
    rep.add("contains_sampled", bad is None, f"{samples} samples",
            None if bad is None else {"element": bad})

    # kernel of phi3: w in Z^{|H|(s-1)} with (w, 0) a relation
    E = IntMatrix.zeros(s * n, (s - 1) * n)
    for i in range((s - 1) * n):
        E.data[i][i] = 1
    K0 = [c[:(s - 1) * n] for c in lattice_kernel(E.hstack(_neg(Rel))).columns()]
    bad = None
    checks = [(c, False) for c in K0] + [(None, True)] * samples
    for w, randomize in checks:
        if randomize:
            w = _random_combo(rng, K0, (s - 1) * n)
        a = lift(w, s - 1)
        if randomize:
            a = [x + k for x, k in zip(a, rand_ker(s - 1))]
        be = rand_beta() if randomize else zero_t
        b = [x + be * e for x, e in zip(a + [zero_t], row)]
        if psi1(b) != a or phi2(b) not in L_target:
            bad = [str(x) for x in a]
            break
    rep.add("contained", bad is None, f"{len(K0)} basis vectors and {samples} samples",
            None if bad is None else {"element": bad})

    cols = []
    for j in range(s - 1):
        for h in sect:
            v = [zero_t] * s
            v[j] = GroupAlgebraElement.monomial(Ht, h)
            cols.append(phi2(v))
    coker = coker_invariants(IntMatrix.from_columns(cols, s * n).hstack(Rel))
    rep.add("phi3_surjective", coker.is_trivial, f"cokernel {coker}")
    return rep
