"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line with the observed values.
All comparisons are exact; time limits are asserted as stated.
Set ``KANTORLAB_EXHAUSTIVE=1`` to also run the exhaustive s5 check (minutes).
"""
import os
import random
import time

from kantorlab import suite
from kantorlab.analysis import (alt_seed_system, check_automorphism, conjugation, derivation_space,
                                fingerprint, g_triples, is_ideal, jacobi_space, power_series,
                                probe_alternative_seed, skewfield_isomorphism)
from kantorlab.constructions import (cayley_dickson, direct_sum, dorofeev, euler_bracket_algebra,
                                     generalized_quaternion, leibniz2, lie_cross, matrix_algebra, poisson_small,
                                     truncated_polynomial)
from kantorlab.identities import check_identity, check_variety, parse_identity, standard_polynomial
from kantorlab.kantor import generic_seed, kantor_product_algebra, kantor_square_algebra
from kantorlab.linalg import Subspace
from kantorlab.mining import cross_check, default_seeds, kantor_samples, mine
from kantorlab.poly import var


def verdict(n, title, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'} criterion {n}: {title}" + (f" [{detail}]" if detail else ""))
    assert ok, detail


def generic_square(A, p=None, q=None):
    p = p or A.default_product
    return kantor_product_algebra(A, p, q or p, generic_seed(A), allow_generic=True)


def run_cases(ids):
    rep = suite.run_suite(ids)
    failed = []
    for r in rep.results:
        if not r.passed:
            bad = [c.label for c in r.checks if not c.ok]
            failed.append(f"{r.id}: {r.error or '; '.join(bad)}")
    return rep, failed


def test_criterion_01_kantor_engine_on_m2():
    t = time.perf_counter()
    M = matrix_algebra(2)
    u = generic_seed(M)
    K = generic_square(M)
    ok = all(
        K.multiply("m", x, y) == tuple(-c for c in M.multiply("m", M.multiply("m", x, u), y))
        for x in M.basis_vectors() for y in M.basis_vectors())
    dt = time.perf_counter() - t
    verdict(1, "generic square of M2 is -xuy", ok and dt < 1, f"{dt:.3f}s")


def test_criterion_02_zero_squares():
    t = time.perf_counter()
    zero = {A.name: generic_square(A).table("m").is_zero() for A in (lie_cross(), leibniz2())}
    dt = time.perf_counter() - t
    verdict(2, "Lie and Leibniz generic squares vanish", all(zero.values()) and dt < 1, f"{zero}, {dt:.3f}s")


def test_criterion_03_conclusion_table():
    ids = ["T-ass", "T-com", "T-perm", "T-lcom", "T-bicom", "T-zinb", "T-nov", "T-qass", "T-qalt",
           "T-dialg", "T-dup", "T-ddup", "T-as2", "T-tri"]
    t = time.perf_counter()
    rep, failed = run_cases(ids)
    dt = time.perf_counter() - t
    verdict(3, "hypothesis and conclusion varieties for 14 classes", not failed and dt < 120,
            f"{len(rep.results) - len(failed)}/{len(ids)} cases, {dt:.1f}s; " + " | ".join(failed))


def test_criterion_04_octonions():
    t = time.perf_counter()
    O = cayley_dickson(-1, -1, -1)
    obs = {}
    obs["flexible_generic"] = check_variety(generic_square(O), "flexible").holds
    scalar = (var("u0"),) + (0,) * 7
    obs["alternative_at_u0*1"] = check_variety(
        kantor_product_algebra(O, "m", "m", scalar, allow_generic=True), "alternative").holds
    r = check_variety(kantor_square_algebra(O, u=O.basis(1)), "alternative")
    obs["fails_at_e1_with_witness"] = (not r.holds) and any(v.witness is not None for v in r.failures())
    gts = g_triples(O)
    factors = {g.factor for g in gts}
    obs["g_triple_value_2"] = factors == {2}
    _, _, sol = alt_seed_system(O)
    pattern = (1, 0, 0, 0, 0, 1, 1)     # u1^2 = u6^2 = u7^2, the rest zero
    obs["system_gives_pattern"] = sol.dim == 1 and sol.contains(pattern)
    e = O.basis
    add = lambda a, b: tuple(x + y for x, y in zip(a, b))
    probes = probe_alternative_seed(O, add(add(e(1), e(6)), e(7)),
                                    [(add(e(1), e(2)), e(1)), (add(e(2), e(6)), e(6))])
    obs["probes_force_u7_zero"] = any(any(v) for v in probes)
    dt = time.perf_counter() - t
    detail = ", ".join(f"{k}={v}" for k, v in obs.items())
    detail += f"; g-triple factors {sorted(factors)} on {len(gts)} triples, solution dim {sol.dim}, {dt:.1f}s"
    verdict(4, "octonion Kantor squares", all(obs.values()) and dt < 30, detail)


def test_criterion_05_poisson_stack():
    t = time.perf_counter()
    rep, failed = run_cases(["T-poisson", "T-gp", "T-np-left", "T-np-right"])
    P = poisson_small()
    extra = {
        "poisson6_dim": P.dim == 6,
        "[b,m]=0": generic_square(P, "b", "m").table("m").is_zero(),
        "[m,b]_lie": check_variety(generic_square(P, "m", "b"), "lie").holds,
        "euler_[b,m]_ass_comm": check_variety(generic_square(euler_bracket_algebra(), "b", "m"),
                                              "associative_commutative").holds,
    }
    dt = time.perf_counter() - t
    ok = not failed and all(extra.values()) and dt < 60
    verdict(5, "Poisson, generalized Poisson and Novikov-Poisson", ok, f"{extra}, {dt:.1f}s " + " | ".join(failed))


def test_criterion_06_standard_identities():
    M = matrix_algebra(2)
    t = time.perf_counter()
    s4 = check_identity(M, standard_polynomial(4), "basis").holds
    t_s4 = time.perf_counter() - t
    rng = random.Random(2024)
    while True:
        u = tuple(rng.randint(-5, 5) for _ in range(4))
        if M.invert_element("m", u) is not None:
            break
    s5 = standard_polynomial(5)
    results = {}
    for name, seed in (("identity", (1, 0, 0, 1)), (f"u={u}", u)):
        K = kantor_square_algebra(M, u=seed)
        v = check_identity(K, s5, "random", seed=6, trials=200)
        results[name] = v.status
        if os.environ.get("KANTORLAB_EXHAUSTIVE"):
            results[name + " exhaustive"] = check_identity(K, s5, "basis").status
    ok = s4 and t_s4 < 30 and all(s in ("not_falsified", "holds") for s in results.values())
    verdict(6, "s4 on M2, s5 on its squares", ok, f"s4 {s4} in {t_s4:.2f}s, s5 {results}")


def test_criterion_07_nilpotency():
    t = time.perf_counter()
    T = truncated_polynomial(8)
    n = power_series(T).index
    k = power_series(generic_square(T)).index
    dt = time.perf_counter() - t
    ok = n == 9 and k is not None and k <= 9 // 2 + 1 and dt < 5
    verdict(7, "nilpotency index of t*Q[t]/(t^9) and its square", ok, f"A: {n}, square: {k}, {dt:.2f}s")


def test_criterion_08_dorofeev():
    t = time.perf_counter()
    D = dorofeev()
    Ka = kantor_square_algebra(D, u=D.basis(0))
    right = power_series(D, kind="right")
    kr = power_series(Ka, kind="right")
    kd = power_series(Ka, kind="derived")
    obs = {
        "right_alternative": check_variety(D, "right_alternative").holds,
        "A_right_nilpotent": right.index is not None,
        "A_not_nilpotent": not power_series(D).terminates,
        "square_not_right_nilpotent": kr.index is None and kr.stabilized and kr.dims[-1] > 0,
        "square_derived_index_2": kd.index == 2,
    }
    dt = time.perf_counter() - t
    verdict(8, "right nilpotent algebra with solvable square", all(obs.values()) and dt < 5,
            f"{obs}, right index {right.index}, square right dims {kr.dims}, {dt:.2f}s")


def test_criterion_09_ideals():
    t = time.perf_counter()
    M = matrix_algebra(2)
    MM = direct_sum(M, M)
    b = MM.basis_vectors()
    ideals = [Subspace(8, [], MM.field), Subspace(8, b[:4]), Subspace(8, b[4:]), Subspace(8, b)]
    squares = [generic_square(MM)] + [kantor_square_algebra(MM, u=v) for v in b]
    all_kept = all(is_ideal(MM, "m", I)[0] and all(is_ideal(K, "m", I)[0] for K in squares) for I in ideals)
    e1, e2 = (1, 0, 0, 1, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0, 0, 1)
    S = Subspace(8, b[:4] + [e2])
    converse = (not is_ideal(MM, "m", S)[0]) and is_ideal(kantor_square_algebra(MM, u=e1), "m", S)[0]
    dt = time.perf_counter() - t
    verdict(9, "ideals of M2+M2 and the converse counterexample", all_kept and converse and dt < 5,
            f"ideals kept {all_kept}, counterexample {converse}, {dt:.2f}s")


def test_criterion_10_derivations_automorphisms():
    t = time.perf_counter()
    M = matrix_algebra(2)
    joint = derivation_space([M.table("m"), generic_square(M).table("m")], 4, M.field).dim
    unital = [M, matrix_algebra(3), generalized_quaternion(-1, -1), cayley_dickson(), truncated_polynomial(4, unital=True),
              direct_sum(M, M), poisson_small().single("m"), euler_bracket_algebra().single("m")]
    jac = {A.name or str(A.dim): jacobi_space(A).dim for A in unital}
    phi = conjugation(2, [[1, 1], [0, 1]], M.field)
    fixed = check_automorphism(kantor_square_algebra(M, u=(1, 1, 0, 1)), "m", phi)[0]
    ident = [tuple(int(i == j) for j in range(4)) for i in range(4)]
    K = generic_square(M)
    forced = True
    for g in ([[1, 1], [0, 1]], [[2, 0], [0, 1]], [[0, 1], [1, 0]], [[1, 2], [3, 4]], [[5, 0], [0, 5]]):
        p = conjugation(2, g, M.field)
        forced &= check_automorphism(M, "m", p)[0] and (check_automorphism(K, "m", p)[0] == (p == ident))
    dt = time.perf_counter() - t
    ok = joint == 0 and all(d == 0 for d in jac.values()) and fixed and forced and dt < 10
    verdict(10, "common derivations and automorphisms", ok,
            f"joint derivations {joint}, Jacobi {jac}, fixed-u survives {fixed}, generic forces id {forced}, {dt:.2f}s")


def test_criterion_11_isomorphism():
    t = time.perf_counter()
    H = generalized_quaternion(-1, -1)
    isos = {u: skewfield_isomorphism(H, u) is not None for u in ((1, 0, 0, 0), (0, 1, 0, 0), (1, 0, 1, 0))}
    M = matrix_algebra(2)
    fa = fingerprint(M)
    fk = fingerprint(kantor_square_algebra(M, u=M.basis(0)))
    certified = fk["left_annihilator"] == 2 and fa["left_annihilator"] == 0 and fa != fk
    dt = time.perf_counter() - t
    verdict(11, "skew-field isomorphisms and a non-isomorphic square", all(isos.values()) and certified and dt < 5,
            f"{isos}, annihilators {fk['left_annihilator']} vs {fa['left_annihilator']}, {dt:.2f}s")


def test_criterion_12_mining():
    t = time.perf_counter()
    assoc = parse_identity("m(m(x1,x2),x3) - m(x1,m(x2,x3))")

    def run():
        samples, nseeds = [], 0
        for A in (matrix_algebra(2), matrix_algebra(3), generalized_quaternion(-1, -1)):
            seeds = default_seeds(A, 2, seed=12)
            nseeds += len(seeds)
            samples += kantor_samples(A, seeds)
        return mine(samples, 3), nseeds

    M, nseeds = run()
    again, _ = run()
    fresh = kantor_samples(matrix_algebra(2), [(3, -1, 2, 5)])
    kept = cross_check([assoc], fresh).survivors == [assoc]
    dt = time.perf_counter() - t
    ok = nseeds >= 6 and M.contains(assoc) and kept and M.dim == again.dim and M.space == again.space and dt < 60
    verdict(12, "mined degree-3 identities of associative squares", ok,
            f"{nseeds} seeds, mined dim {M.dim} of {len(M.monomials)}, cross-check kept {kept}, {dt:.1f}s")
