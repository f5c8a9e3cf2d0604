"""
Named grids of identity checks.

Each suite expands its bounds into cases; a case is a (suite, params) pair
and evaluates to a list of (lhs, rhs) polynomial pairs.  It passes when
every pair is equal.  Cases are plain data so they can be shipped to worker
processes.
"""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from . import boxes, ffield, macschur, permstat, qtnum
from .exprcore import we_limit_q1, we_limit_t1
from .tpoly import TPoly


def digest(polys):
    """sha256 of the canonical JSON of a list of polynomials."""
    payload = json.dumps([p.to_json() for p in polys], sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def partitions_inside(box):
    """Partitions (with trailing zeros) fitting inside the given partition."""
    ranges = [range(b + 1) for b in box]
    for parts in product(*ranges):
        if all(a >= b for a, b in zip(parts, parts[1:])):
            yield parts


def _const(n):
    return TPoly({0: n}) if n else TPoly.zero()


# -- case bodies --

def _pascal(p):
    if "alpha" in p:
        alpha = tuple(p["alpha"])
        return [(qtnum.multinomial_pascal_sum(alpha, p["q"]),
                 qtnum.qt_multinomial(sum(alpha), alpha, p["q"]))]
    lhs, first, second = qtnum.pascal_sides(p["n"], p["k"], p["q"])
    return [(lhs, first), (lhs, second)]


def _box(p):
    return [(boxes.box_sum(p["n"], p["k"], p["q"]), qtnum.qt_binomial(p["n"], p["k"], p["q"]))]


def _compat(p):
    n, k, q = p["n"], p["k"], p["q"]
    pairs = [(boxes.compatible_sum(n, k, q), qtnum.qt_binomial(n, k, q))]
    counts = sum(1 for lam in boxes.partitions_in_box(k, n - k)
                 for _ in boxes.compatible_multiplicities(lam, k, q))
    pairs.append((_const(counts), _const(qtnum.gaussian_binomial(n, k).evaluate(q))))
    return pairs


def _subspace(p):
    return [(ffield.subspace_sum(p["n"], p["k"], p["q"]), qtnum.qt_binomial(p["n"], p["k"], p["q"]))]


def _schur3way(p):
    lam, k, q = tuple(p["shape"]), p["k"], p["q"]
    direct = macschur.bialternant_spec(lam, k, q)
    return [(direct, macschur.jacobi_trudi_spec(lam, k, q)),
            (direct, macschur.tableau_sum(lam, k, q))]


def _dualjt(p):
    shape = macschur.SkewShape(tuple(p["outer"]), tuple(p["inner"]))
    return [(macschur.jacobi_trudi_spec(shape, p["k"], p["q"]),
             macschur.dual_jacobi_trudi_spec(shape, p["k"], p["q"]))]


def _permsum(p):
    alpha = tuple(p["alpha"])
    n = sum(alpha)
    return [(permstat.multinomial_perm_sum(n, alpha, p["q"]), qtnum.qt_multinomial(n, alpha, p["q"]))]


def _ribbon3way(p):
    q = p["q"]
    if "total" in p:
        n = p["total"]
        acc = TPoly.zero()
        for alpha in qtnum.compositions(n):
            acc = acc + permstat.ribbon_qt(alpha, q)
        return [(acc, qtnum.qt_multinomial(n, (1,) * n, q))]
    alpha = tuple(p["alpha"])
    first = permstat.ribbon_qt(alpha, q, "descent_sum")
    return [(first, permstat.ribbon_qt(alpha, q, "inclusion_exclusion")),
            (first, permstat.ribbon_qt(alpha, q, "determinant"))]


def _hook(p):
    return macschur.hook_sides(p["m"], p["k"], p["n"], p["q"])


def _dickson(p):
    n, prime = p["n"], p["q"]
    prod = ffield.dickson_product(n, prime)
    pairs = [(prod.y_coefficient(prime**s), ffield.dickson_coefficient_formula(n, s, prime))
             for s in range(n + 1)]
    stray = [d for d in prod.y_degrees() if d not in {prime**s for s in range(n + 1)}]
    pairs.append((_const(len(stray)), TPoly.zero()))
    return pairs


def _convolution(p):
    return [qtnum.convolution_sides(p["k"], p["l"], p["q"])]


def _hilbert(p):
    alpha = tuple(p["alpha"])
    return [(qtnum.hilbert_quotient(alpha, p["q"]), qtnum.qt_multinomial(sum(alpha), alpha, p["q"]))]


def limit_pairs(kind, p):
    """Term-wise t -> 1 and q -> 1 limits against classical oracles."""
    q = p["q"]
    t1, q1 = 0, TPoly.zero()
    if kind == "box":
        n, k = p["n"], p["k"]
        for lam in boxes.partitions_in_box(k, n - k):
            w = boxes.partition_weight(boxes.BoxedPartition(lam, k))
            t1 += we_limit_t1(w, q)
            q1 = q1 + TPoly.monomial(we_limit_q1(w))
        gauss = qtnum.gaussian_binomial(n, k)
        return [(_const(t1), _const(gauss.evaluate(q))), (q1, gauss)]
    if kind == "tableau":
        shape, k = macschur.SkewShape(tuple(p["outer"]), tuple(p["inner"])), p["k"]
        for T in macschur.enumerate_tableaux(shape, k):
            w = macschur.tableau_weight(T, k)
            t1 += we_limit_t1(w, q)
            q1 = q1 + TPoly.monomial(we_limit_q1(w))
        classical = macschur.classical_jacobi_trudi(shape, k)
        return [(_const(t1), _const(classical.evaluate(q))), (q1, classical),
                (q1, macschur.classical_schur_spec(shape, k))]
    if kind == "perm":
        alpha = tuple(p["alpha"])
        for w in permstat.coset_reps(sum(alpha), alpha):
            wt = permstat.perm_weight(w)
            t1 += we_limit_t1(wt, q)
            q1 = q1 + TPoly.monomial(we_limit_q1(wt))
        gauss = qtnum.gaussian_multinomial(alpha)
        return [(_const(t1), _const(gauss.evaluate(q))), (q1, gauss)]
    if kind == "ribbon":
        alpha = tuple(p["alpha"])
        for w in permstat.descent_class(alpha):
            q1 = q1 + TPoly.monomial(we_limit_q1(permstat.perm_weight(w)))
        return [(q1, permstat.ribbon_classical(alpha, "length")),
                (q1, permstat.ribbon_classical(alpha, "maj"))]
    raise ValueError(f"unknown limit kind {kind!r}")


def _limits(p):
    return limit_pairs(p["kind"], p)


BODIES = {
    "pascal": _pascal, "box": _box, "compat": _compat, "subspace": _subspace,
    "schur3way": _schur3way, "dualjt": _dualjt, "permsum": _permsum,
    "ribbon3way": _ribbon3way, "hook": _hook, "dickson": _dickson,
    "convolution": _convolution, "hilbert": _hilbert, "limits": _limits,
}

SUITES = tuple(BODIES)

# default bounds per suite; "n" is the largest size and "qs" the q values
DEFAULTS = {
    "pascal": {"n": 6, "qs": (2, 3)},
    "box": {"n": 6, "qs": (2, 3)},
    "compat": {"n": 6, "qs": (2, 3)},
    "subspace": {"n": 5, "qs": (2, 3)},
    "schur3way": {"box": (3, 3, 3), "k": 3, "qs": (2, 3)},
    "dualjt": {"box": (3, 3, 3), "k": 3, "qs": (2,)},
    "permsum": {"n": 6, "qs": (2,)},
    "ribbon3way": {"n": 6, "qs": (2,)},
    "hook": {"m": 3, "k": 3, "n": 4, "qs": (2, 3)},
    "dickson": {"pairs": ((1, 2), (2, 2), (3, 2), (1, 3), (2, 3))},
    "convolution": {"n": 5, "qs": (2, 3)},
    "hilbert": {"n": 5, "qs": (2, 3)},
    "limits": {"n": 5, "box": (3, 3, 3), "k": 3, "qs": (2, 3)},
}


def suite_cases(suite, bounds=None):
    """Expand a suite and its bounds into a sorted list of parameter dicts."""
    if suite not in BODIES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    b = dict(DEFAULTS[suite])
    b.update({key: v for key, v in (bounds or {}).items() if v is not None})
    qs = tuple(b.get("qs", ()))
    cases = []
    if suite == "pascal":
        for q in qs:
            cases += [{"n": n, "k": k, "q": q} for n in range(1, b["n"] + 1) for k in range(n + 1)]
            cases += [{"alpha": list(a), "q": q} for n in range(1, min(b["n"], 5) + 1)
                      for a in qtnum.compositions(n)]
    elif suite in ("box", "compat", "subspace"):
        for q in qs:
            if suite == "subspace" and not ffield.is_prime(q):
                raise ValueError(f"subspace suite needs prime q, got {q}")
            cases += [{"n": n, "k": k, "q": q} for n in range(b["n"] + 1) for k in range(n + 1)]
    elif suite == "schur3way":
        for q in qs:
            cases += [{"shape": list(lam), "k": k, "q": q}
                      for k in range(b["k"] + 1) for lam in partitions_inside(b["box"])]
    elif suite == "dualjt":
        for q in qs:
            for k in range(b["k"] + 1):
                for lam in partitions_inside(b["box"]):
                    for mu in partitions_inside(lam):
                        cases.append({"outer": list(lam), "inner": list(mu), "k": k, "q": q})
    elif suite in ("permsum", "hilbert"):
        lo = 1 if suite == "permsum" else 0
        for q in qs:
            cases += [{"alpha": list(a), "q": q} for n in range(lo, b["n"] + 1)
                      for a in qtnum.compositions(n)]
    elif suite == "ribbon3way":
        for q in qs:
            cases += [{"alpha": list(a), "q": q} for n in range(1, b["n"] + 1)
                      for a in qtnum.compositions(n)]
            cases += [{"total": n, "q": q} for n in range(1, b["n"] + 1)]
    elif suite == "hook":
        for q in qs:
            cases += [{"m": m, "k": k, "n": n, "q": q} for m in range(1, b["m"] + 1)
                      for k in range(b["k"] + 1) for n in range(k, b["n"] + 1)]
    elif suite == "dickson":
        cases = [{"n": n, "q": p} for n, p in b["pairs"]]
    elif suite == "convolution":
        for q in qs:
            cases += [{"k": k, "l": l, "q": q} for k in range(b["n"] + 1) for l in range(b["n"] + 1)]
    elif suite == "limits":
        for q in qs:
            cases += [{"kind": "box", "n": n, "k": k, "q": q}
                      for n in range(b["n"] + 1) for k in range(n + 1)]
            cases += [{"kind": "perm", "alpha": list(a), "q": q}
                      for n in range(1, b["n"] + 1) for a in qtnum.compositions(n)]
            cases += [{"kind": "ribbon", "alpha": list(a), "q": q}
                      for n in range(1, b["n"] + 1) for a in qtnum.compositions(n)]
            for k in range(b["k"] + 1):
                for lam in partitions_inside(b["box"]):
                    for mu in partitions_inside(lam):
                        if sum(lam) - sum(mu) <= b["n"]:
                            cases.append({"kind": "tableau", "outer": list(lam),
                                          "inner": list(mu), "k": k, "q": q})
    return sorted(cases, key=lambda c: json.dumps(c, sort_keys=True))


def run_case(suite, params, timing=True):
    start = time.perf_counter()
    pairs = BODIES[suite](params)
    elapsed = time.perf_counter() - start
    lhs = [a for a, _ in pairs]
    rhs = [b for _, b in pairs]
    ok = all(a == b for a, b in pairs)
    case = {
        "parameters": params,
        "status": "pass" if ok else "fail",
        "lhs_digest": digest(lhs),
        "rhs_digest": digest(rhs),
        "wall_time": round(elapsed, 6),
    }
    if not timing:
        del case["wall_time"]
    if not ok:
        case["mismatches"] = [{"lhs": a.to_json(), "rhs": b.to_json()} for a, b in pairs if a != b]
    return case


def _run_packed(args):
    return run_case(*args)


def run_suite(suite, bounds=None, jobs=1, timing=True):
    """Run every case of a suite; returns the report dict.

    With ``timing=False`` wall times are left out, so identical runs give identical reports.
    """
    cases = suite_cases(suite, bounds)
    start = time.perf_counter()
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_packed, [(suite, c, timing) for c in cases]))
    else:
        results = [run_case(suite, c, timing) for c in cases]
    passed = all(r["status"] == "pass" for r in results)
    report = {
        "suite": suite,
        "status": "pass" if passed else "fail",
        "case_count": len(results),
        "failures": sum(r["status"] == "fail" for r in results),
        "wall_time": round(time.perf_counter() - start, 6),
        "cases": results,
    }
    if not timing:
        del report["wall_time"]
    return report
