"""Mechanical checkers for the paper's results, with structured reports.

Check ids: thm1.1, cor1.2, prop1.3, prop1.4, lem2suite, lem3.1, lem3.3,
halftrans.  Reports carry {group, check, status, lhs, rhs, witnesses,
seed, millis}; the millis field is always 0 so that JSON output is
byte-identical across runs with equal seeds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .chartab import (DEFAULT_SEED, character_table, classes_of, constituents,
                      induce, inner_product, restrict)
from .constructions import (AFFINE_SPECS, LINEAR_SPECS, MatrixGroupSpec,
                            affine, catalog, matrix_to_perm)
from .group import (PermGroup, derived_length, is_solvable, p_part, subgroup,
                    sylow, _prime_divisors, coset_action, derived_series)
from .invariants import (NotSolvableError, codegree, codegree_set,
                         fitting_height, fitting_subgroup, kernel,
                         normal_subgroups, solvable_radical,
                         vanishing_off_subgroup)
from .perm import parse_cycles

CHECK_IDS = ("thm1.1", "cor1.2", "prop1.3", "prop1.4", "lem2suite",
             "lem3.1", "lem3.3", "halftrans")

# checks that apply to every group (lem3.1 is reported as skipped for
# groups that are not affine constructions); halftrans and lem3.3 need a
# matrix spec and are only emitted for the catalog's linear groups
GROUP_CHECKS = ("thm1.1", "cor1.2", "prop1.3", "prop1.4", "lem2suite",
                "lem3.1")
SPEC_CHECKS = ("halftrans", "lem3.3")


class UnknownCheckError(ValueError):
    pass


@dataclass
class VerificationReport:
    group: str
    check: str
    status: str            # "pass" | "fail" | "skipped"
    lhs: object
    rhs: object
    witnesses: list
    seed: int
    millis: int = 0

    def __post_init__(self):
        if self.status == "fail" and not self.witnesses:
            raise AssertionError("fail report without a witness")
        if self.status == "skipped":
            if not (self.witnesses and "reason" in self.witnesses[0]):
                raise AssertionError("skip report without a reason")

    def to_dict(self) -> dict:
        return {"group": self.group, "check": self.check,
                "status": self.status, "lhs": self.lhs, "rhs": self.rhs,
                "witnesses": self.witnesses, "seed": self.seed,
                "millis": self.millis}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _skip(name: str, check: str, reason: str, seed: int) -> VerificationReport:
    return VerificationReport(name, check, "skipped", None, None,
                              [{"reason": reason}], seed)


# ---------------------------------------------------------------------------
# Theorem 1.1


def check_theorem_1_1(name: str, G: PermGroup,
                      seed: int = DEFAULT_SEED) -> VerificationReport:
    """For chi with K = ker(chi) satisfying K not<= F(G), or
    K = F(G) < Sol(G): some xi has ker(xi) < K and cod(xi) > cod(chi)."""
    cs = codegree_set(G, seed=seed)
    F = fitting_subgroup(G, seed=seed)
    Sol = solvable_radical(G, seed=seed)
    witnesses = []
    failures = []
    triggered = 0
    for i, ker_i, cod_i in cs.per_char:
        hyp1 = not (ker_i.class_indices <= F.class_indices)
        hyp2 = (ker_i.class_indices == F.class_indices
                and F.order < Sol.order)
        if not (hyp1 or hyp2):
            continue
        triggered += 1
        found = None
        for j, ker_j, cod_j in cs.per_char:
            strictly_smaller = (ker_j.class_indices < ker_i.class_indices)
            if strictly_smaller and cod_j > cod_i:
                found = (j, ker_j.order, cod_j)
                break
        if found is None:
            failures.append({"chi": i, "kernel_order": ker_i.order,
                             "cod": cod_i, "hypothesis": 1 if hyp1 else 2})
        else:
            witnesses.append({"chi": i, "kernel_order": ker_i.order,
                              "cod": cod_i, "hypothesis": 1 if hyp1 else 2,
                              "xi": found[0], "xi_kernel_order": found[1],
                              "xi_cod": found[2]})
    if failures:
        return VerificationReport(name, "thm1.1", "fail", triggered,
                                  triggered - len(failures), failures, seed)
    if triggered == 0:
        witnesses = [{"note": "vacuous: no character meets the hypotheses"}]
    return VerificationReport(name, "thm1.1", "pass", triggered, triggered,
                              witnesses, seed)


# ---------------------------------------------------------------------------
# bounds: Cor 1.2, Prop 1.3, Prop 1.4


def check_cor_1_2(name: str, G: PermGroup,
                  seed: int = DEFAULT_SEED) -> VerificationReport:
    """l_F(G) <= |cod(G)| - 1."""
    try:
        h = fitting_height(G, seed=seed).height
    except NotSolvableError:
        return _skip(name, "cor1.2", "group is not solvable", seed)
    c = len(codegree_set(G, seed=seed).values)
    status = "pass" if h <= c - 1 else "fail"
    w = [{"fitting_height": h, "cod_count": c, "equality": h == c - 1,
          "slack": (c - 1) - h}]
    return VerificationReport(name, "cor1.2", status, h, c - 1, w, seed)


def check_prop_1_3(name: str, G: PermGroup,
                   seed: int = DEFAULT_SEED) -> VerificationReport:
    """l_F(G) <= (|cod(G)| + 2) / 2, compared as 2*l_F <= |cod| + 2."""
    try:
        h = fitting_height(G, seed=seed).height
    except NotSolvableError:
        return _skip(name, "prop1.3", "group is not solvable", seed)
    c = len(codegree_set(G, seed=seed).values)
    status = "pass" if 2 * h <= c + 2 else "fail"
    w = [{"fitting_height": h, "cod_count": c, "equality": 2 * h == c + 2,
          "slack_doubled": (c + 2) - 2 * h}]
    return VerificationReport(name, "prop1.3", status, 2 * h, c + 2, w, seed)


def check_prop_1_4(name: str, G: PermGroup,
                   seed: int = DEFAULT_SEED) -> VerificationReport:
    """l_F(G) <= 8*log2(|cod(G)|) + 80, decided by exact integer
    comparison (2^(l_F - 80) <= |cod|^8); never by floating point.

    Where computable, the underlying derived-length form
    dl(G/F2(G)) <= 8*log2(|cod(G)|) + 78 is checked the same way."""
    try:
        fd = fitting_height(G, seed=seed)
    except NotSolvableError:
        return _skip(name, "prop1.4", "group is not solvable", seed)
    h = fd.height
    c = len(codegree_set(G, seed=seed).values)
    ok = True if h <= 80 else 2 ** (h - 80) <= c ** 8
    w = [{"fitting_height": h, "cod_count": c,
          "bound_form": "8*log2(|cod|)+80"}]
    # derived-length form: dl(G/F2(G)) <= 8 log2|cod| + 78
    if h >= 2:
        f2 = fd.series[1]
        quotient = coset_action(G, f2.handle).group
        dl = derived_length(quotient)
        dl_ok = True if dl <= 78 else 2 ** (dl - 78) <= c ** 8
        ok = ok and dl_ok
        w.append({"dl_of_G_over_F2": dl, "bound_form": "8*log2(|cod|)+78"})
    elif h >= 0:
        w.append({"dl_of_G_over_F2": 0, "bound_form": "8*log2(|cod|)+78"})
    status = "pass" if ok else "fail"
    return VerificationReport(name, "prop1.4", status, h,
                              f"8*log2({c})+80", w, seed)


# ---------------------------------------------------------------------------
# Lemma 3.1 partition (affine constructions)


def check_lemma_3_1(name: str, spec: MatrixGroupSpec,
                    seed: int = DEFAULT_SEED) -> VerificationReport:
    """cod(G) is the disjoint union of cod(G/V) and cod(G|V) when
    V = O_p(G) is the unique minimal normal subgroup; also the consumed
    Wolf bound |V| > |G/V|_p."""
    aff = affine(spec)
    G = aff.group
    p, d = spec.p, spec.d
    n = p ** d
    lattice = normal_subgroups(G, seed=seed)
    minimal = [N for N in lattice if N.order > 1 and not any(
        M.order > 1 and M.order < N.order and N.contains(M) for M in lattice)]
    if len(minimal) != 1:
        return _skip(name, "lem3.1",
                     f"{len(minimal)} minimal normal subgroups", seed)
    V = minimal[0]
    if V.order != n:
        return _skip(name, "lem3.1",
                     "unique minimal normal subgroup is not V", seed)
    from .invariants import cod_partition
    over, off = cod_partition(G, V, seed=seed)
    cs = set(codegree_set(G, seed=seed).values)
    disjoint = not (over & off)
    union_ok = (over | off) == cs
    index_p_part = p_part(G.order // n, p)
    wolf = n > index_p_part
    status = "pass" if disjoint and union_ok and wolf else "fail"
    w = [{"cod_over": sorted(over), "cod_off": sorted(off),
          "disjoint": disjoint, "union_is_cod": union_ok,
          "V_order": n, "index_p_part": index_p_part, "wolf_bound": wolf}]
    return VerificationReport(name, "lem3.1", status,
                              sorted(over), sorted(off), w, seed)


# ---------------------------------------------------------------------------
# half-transitivity and Lemma 3.3 (linear groups)


def orbit_sizes_nonzero(spec: MatrixGroupSpec) -> list[int]:
    """Sizes of the orbits of the matrix group on nonzero vectors."""
    G = matrix_to_perm(spec)
    seen = set()
    sizes = []
    for a in range(1, G.degree):
        if a in seen:
            continue
        orbit = {a}
        frontier = [a]
        while frontier:
            x = frontier.pop()
            for g in G.generators:
                y = g.images[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        seen |= orbit
        sizes.append(len(orbit))
    return sorted(sizes)


def check_half_transitive(spec: MatrixGroupSpec) -> tuple[bool, list[int], int]:
    """(is_half_transitive, sorted orbit sizes, m = #distinct sizes)."""
    sizes = orbit_sizes_nonzero(spec)
    distinct = sorted(set(sizes))
    return (len(distinct) <= 1, sizes, max(len(distinct), 1))


def report_half_transitive(name: str, spec: MatrixGroupSpec,
                           seed: int = DEFAULT_SEED) -> VerificationReport:
    half, sizes, m = check_half_transitive(spec)
    w = [{"half_transitive": half, "orbit_sizes": sizes, "m": m}]
    return VerificationReport(name, "halftrans", "pass", half, m, w, seed)


def check_lemma_3_3(name: str, spec: MatrixGroupSpec,
                    seed: int = DEFAULT_SEED) -> VerificationReport:
    """For solvable G acting half-transitively on nonzero vectors:
    exactly one of l_F <= 2, (l_F = 3 and |cod| >= 6), or
    (l_F = 4 and |cod| >= 8)."""
    half, sizes, m = check_half_transitive(spec)
    if not half:
        return _skip(name, "lem3.3",
                     f"not half-transitive (orbit sizes {sizes})", seed)
    G = matrix_to_perm(spec)
    if not is_solvable(G):
        return _skip(name, "lem3.3", "group is not solvable", seed)
    h = fitting_height(G, seed=seed).height
    c = len(codegree_set(G, seed=seed).values)
    branches = [h <= 2, h == 3 and c >= 6, h == 4 and c >= 8]
    status = "pass" if sum(branches) == 1 else "fail"
    w = [{"fitting_height": h, "cod_count": c,
          "branch": branches.index(True) + 1 if any(branches) else 0}]
    return VerificationReport(name, "lem3.3", status, h, c, w, seed)


# ---------------------------------------------------------------------------
# the Lemma-2 suite


# hand-registered maximal subgroups, by catalog name, as cycle strings on
# the catalog group's natural points
MAXIMAL_SUBGROUPS: dict[str, list[list[str]]] = {
    "S4": [["(1,2)", "(1,2,3)"],           # S3
           ["(1,2,3,4)", "(1,3)"],         # D4
           ["(1,2,3)", "(2,3,4)"]],        # A4
    "A4": [["(1,2,3)"],                    # C3
           ["(1,2)(3,4)", "(1,3)(2,4)"]],  # V4
    "S3": [["(1,2,3)"], ["(1,2)"]],
}


def _subgroup_family(name: str, G: PermGroup, seed: int):
    """Deterministic list of proper nontrivial subgroups to exercise the
    Lemma-2 hypotheses: Sylows, the normal lattice, the derived series,
    and registered maximal subgroups."""
    family = []
    seen = set()

    def add(H):
        if H.order in (1, G.order):
            return
        key = (H.order, tuple(sorted(g.images for g in H.generators)))
        if key in seen:
            return
        # dedupe by element set for modest orders
        if H.order <= 5000:
            ekey = frozenset(g.images for g in H.elements())
            if ekey in seen:
                return
            seen.add(ekey)
        seen.add(key)
        family.append(H)

    for p in _prime_divisors(G.order):
        add(sylow(G, p))
    for N in normal_subgroups(G, seed=seed):
        add(N.handle)
    for H in derived_series(G):
        add(H)
    for gens in MAXIMAL_SUBGROUPS.get(name, []):
        add(subgroup(G, [parse_cycles(s, G.degree) for s in gens]))
    family.sort(key=lambda H: (H.order,
                               tuple(sorted(g.images for g in H.generators))))
    return family


def _intersection_order(A: PermGroup, B: PermGroup) -> int:
    small, big = (A, B) if A.order <= B.order else (B, A)
    return sum(1 for x in small.elements() if x in big)


def _subgroups_equal(A: PermGroup, B: PermGroup) -> bool:
    return A.order == B.order and all(g in B for g in A.generators)


def check_lemma_2_suite(name: str, G: PermGroup,
                        seed: int = DEFAULT_SEED) -> VerificationReport:
    """Lemmas 2.1(1), 2.1(2), 2.2, 2.3/Prop 2.4, and 2.6 on a family of
    subgroups of G; reports per-lemma instance counts."""
    T = character_table(G, seed=seed)
    cc = T.classes
    lattice = normal_subgroups(G, seed=seed)
    family = _subgroup_family(name, G, seed)
    counts = {k: 0 for k in
              ("L2.1.1", "L2.1.2", "L2.2", "L2.3/P2.4", "L2.6")}
    failures = []

    # --- Lemma 2.1(1): inflation preserves codegrees -----------------------
    for N in lattice:
        if N.order in (1, G.order):
            continue
        counts["L2.1.1"] += 1
        action = coset_action(G, N.handle)
        Q = action.group
        quotient_cods = set(codegree_set(Q, seed=seed).values)
        over = {cod for _i, ker_i, cod in codegree_set(G, seed=seed).per_char
                if N.class_indices <= ker_i.class_indices}
        if over != quotient_cods:
            failures.append({"lemma": "L2.1.1", "N_order": N.order,
                             "in_G": sorted(over),
                             "in_quotient": sorted(quotient_cods)})

    # --- Lemma 2.1(2): subnormal codegree divisibility ---------------------
    subnormals = [N.handle for N in lattice if 1 < N.order < G.order]
    for N in lattice:
        if not (1 < N.order < G.order) or N.order > 200:
            continue
        for M in normal_subgroups(N.handle, seed=seed):
            if 1 < M.order < N.order:
                subnormals.append(M.handle)
    for M in subnormals:
        ccM = classes_of(M)
        TM = character_table(M, seed=seed)
        for chi in T.chars:
            cod_chi = codegree(chi)
            for j, _mult in constituents(restrict(chi, ccM), TM):
                counts["L2.1.2"] += 1
                cod_psi = codegree(TM.chars[j])
                if cod_chi % cod_psi:
                    failures.append({"lemma": "L2.1.2", "M_order": M.order,
                                     "cod_chi": cod_chi, "cod_psi": cod_psi})

    # --- Lemma 2.2: G = H ker(chi) forces chi_H irreducible ----------------
    for H in family:
        ccH = classes_of(H)
        for i, chi in enumerate(T.chars):
            K = kernel(chi)
            prod = H.order * K.order // _intersection_order(H, K.handle)
            if prod != G.order:
                continue
            counts["L2.2"] += 1
            res = restrict(chi, ccH)
            norm = inner_product(res, res)
            if norm != 1:
                failures.append({"lemma": "L2.2", "H_order": H.order,
                                 "chi": i, "norm": norm.e_string()})

    # --- Lemma 2.3 / Prop 2.4: induction codegree monotonicity -------------
    # monotonicity holds for every H (Prop 2.4); the equality iff
    # characterization is Lemma 2.3 and needs H maximal, so it is only
    # tested on the registered maximal subgroups
    maximals = [subgroup(G, [parse_cycles(s, G.degree) for s in gens])
                for gens in MAXIMAL_SUBGROUPS.get(name, [])]
    for H in family:
        is_maximal = any(_subgroups_equal(H, M) for M in maximals)
        ccH = classes_of(H)
        TH = character_table(H, seed=seed)
        for t_idx, theta in enumerate(TH.chars):
            cod_theta = codegree(theta)
            ker_theta = kernel(theta)
            up = induce(theta, cc)
            for i, _mult in constituents(up, T):
                counts["L2.3/P2.4"] += 1
                chi = T.chars[i]
                cod_chi = codegree(chi)
                if cod_chi < cod_theta:
                    failures.append({"lemma": "L2.3/P2.4", "H_order": H.order,
                                     "theta": t_idx, "chi": i,
                                     "cod_theta": cod_theta,
                                     "cod_chi": cod_chi})
                    continue
                if not is_maximal:
                    continue
                ker_chi = kernel(chi)
                cond_a = (chi.values == up.values and _subgroups_equal(
                    ker_theta.handle, ker_chi.handle))
                prod = (H.order * ker_chi.order
                        // _intersection_order(H, ker_chi.handle))
                cond_b = (restrict(chi, ccH) == theta and prod == G.order)
                if (cod_chi == cod_theta) != (cond_a or cond_b):
                    failures.append({"lemma": "L2.3/P2.4", "H_order": H.order,
                                     "theta": t_idx, "chi": i,
                                     "equality": cod_chi == cod_theta,
                                     "cond_a": cond_a, "cond_b": cond_b})

    # --- Lemma 2.6: ker(chi) < N implies ker(chi) < N /\ V(chi) ------------
    for i, chi in enumerate(T.chars):
        K = kernel(chi)
        V = vanishing_off_subgroup(chi)
        for N in lattice:
            if not (K.class_indices < N.class_indices):
                continue
            counts["L2.6"] += 1
            meet = N.class_indices & V.class_indices
            if not (K.class_indices < meet):
                failures.append({"lemma": "L2.6", "chi": i,
                                 "N_order": N.order,
                                 "ker_order": K.order,
                                 "meet_classes": sorted(meet)})

    per_lemma = [{"lemma": k, "instances": v,
                  "status": "pass" if v else "skipped"}
                 for k, v in sorted(counts.items())]
    witnesses = per_lemma + failures
    status = "fail" if failures else "pass"
    return VerificationReport(name, "lem2suite", status,
                              sum(counts.values()), len(failures),
                              witnesses, seed)


# ---------------------------------------------------------------------------
# the runner


def _checks_for(name: str) -> list[str]:
    out = list(GROUP_CHECKS)
    if name in LINEAR_SPECS:
        out.extend(SPEC_CHECKS)
    return out


def run_checks(name: str, G: PermGroup, check_ids,
               seed: int = DEFAULT_SEED) -> list[VerificationReport]:
    reports = []
    for check in check_ids:
        if check not in CHECK_IDS:
            raise UnknownCheckError(f"unknown check id {check!r}")
        if check == "thm1.1":
            reports.append(check_theorem_1_1(name, G, seed))
        elif check == "cor1.2":
            reports.append(check_cor_1_2(name, G, seed))
        elif check == "prop1.3":
            reports.append(check_prop_1_3(name, G, seed))
        elif check == "prop1.4":
            reports.append(check_prop_1_4(name, G, seed))
        elif check == "lem2suite":
            reports.append(check_lemma_2_suite(name, G, seed))
        elif check == "lem3.1":
            if name in AFFINE_SPECS:
                reports.append(
                    check_lemma_3_1(name, AFFINE_SPECS[name](), seed))
            else:
                reports.append(_skip(name, "lem3.1",
                                     "not an affine construction", seed))
        elif check == "halftrans":
            if name in LINEAR_SPECS:
                reports.append(
                    report_half_transitive(name, LINEAR_SPECS[name](), seed))
            else:
                reports.append(_skip(name, "halftrans",
                                     "no matrix form registered", seed))
        elif check == "lem3.3":
            if name in LINEAR_SPECS:
                reports.append(
                    check_lemma_3_3(name, LINEAR_SPECS[name](), seed))
            else:
                reports.append(_skip(name, "lem3.3",
                                     "no matrix form registered", seed))
    return reports


def run_catalog(check_ids=None, group_filter=None,
                seed: int = DEFAULT_SEED) -> list[VerificationReport]:
    """Run checks over the catalog; deterministic report order."""
    if check_ids is not None:
        for check in check_ids:
            if check not in CHECK_IDS:
                raise UnknownCheckError(f"unknown check id {check!r}")
    from .constructions import build
    reports = []
    for name, _builder in catalog():
        if group_filter is not None and name != group_filter:
            continue
        ids = list(check_ids) if check_ids is not None else _checks_for(name)
        reports.extend(run_checks(name, build(name), ids, seed))
    return reports


def any_failures(reports) -> bool:
    return any(r.status == "fail" for r in reports)
