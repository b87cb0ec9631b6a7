#!/usr/bin/env python3
"""Writes the bundled category specs into data/.

All files list every F/R/U entry explicitly (unit legs included), so the
loader never has to invent defaults.
"""
import cmath
import itertools
import json
import math
import os
import re
import sys


def cyclic(n):
    return {"elements": ["e"] + ["g%d" % i for i in range(1, n)],
            "mul": [[(i + j) % n for j in range(n)] for i in range(n)]}


def build(name, group, labels, N, Ffun, Rfun, perm=None, Ufun=None, unitary=True):
    n = len(labels)
    ng = len(group["elements"])
    if perm is None:
        perm = [list(range(n)) for _ in range(ng)]
    Nl = [[a, b, c, 1] for a in range(n) for b in range(n) for c in range(n) if N(a, b, c)]
    F = []
    for a, b, c, d in itertools.product(range(n), repeat=4):
        for e in range(n):
            if not (N(a, b, e) and N(e, c, d)):
                continue
            for f in range(n):
                if not (N(b, c, f) and N(a, f, d)):
                    continue
                v = complex(Ffun(a, b, c, d, e, f))
                if abs(v) > 0:
                    F.append([a, b, c, d, e, f, 0, 0, 0, 0, v.real, v.imag])
    R = []
    for a, b, c in itertools.product(range(n), repeat=3):
        if N(a, b, c):
            v = complex(Rfun(a, b, c))
            R.append([a, b, c, 0, 0, v.real, v.imag])
    U = []
    for g in range(ng):
        for a, b, c in itertools.product(range(n), repeat=3):
            if N(a, b, c):
                v = complex(Ufun(g, a, b, c) if Ufun else 1.0)
                U.append([g, a, b, c, 0, 0, v.real, v.imag])
    return {
        "name": name,
        "group": group,
        "labels": labels,
        "fusion": {"N": Nl, "F": F, "R": R},
        "action": {"perm": perm, "U": U},
        "flags": {"unitary": unitary},
    }


def lab(name, dual, grade, qdim, piv=1.0):
    p = complex(piv)
    return {"name": name, "dual": dual, "grade": grade, "qdim": qdim, "pivotal": [p.real, p.imag]}


def pointed(n, name, omega_fs, rfun, piv):
    labels = [lab(str(a), (-a) % n, 0, 1.0, piv(a)) for a in range(n)]
    return build(name, cyclic(1), labels, lambda a, b, c: (a + b) % n == c,
                 lambda a, b, c, d, e, f: omega_fs(a, b, c), rfun)


def ising(name, graded):
    one, psi, sig = 0, 1, 2
    sg = 1 if graded else 0
    labels = [lab("1", 0, 0, 1.0), lab("psi", 1, 0, 1.0), lab("sigma", 2, sg, math.sqrt(2.0))]
    rules = {(0, 0): {0}, (0, 1): {1}, (1, 0): {1}, (1, 1): {0}, (0, 2): {2}, (2, 0): {2},
             (1, 2): {2}, (2, 1): {2}, (2, 2): {0, 1}}

    def N(a, b, c):
        return c in rules[(a, b)]

    def F(a, b, c, d, e, f):
        if (a, b, c, d) == (sig, sig, sig, sig):
            s = 1.0 / math.sqrt(2.0)
            return -s if (e == psi and f == psi) else s
        if (a, b, c, d) == (sig, psi, sig, psi):
            return -1.0
        if (a, b, c, d) == (psi, sig, psi, sig):
            return -1.0
        return 1.0

    def R(a, b, c):
        if (a, b) == (sig, sig):
            return cmath.exp(-1j * math.pi / 8) if c == one else cmath.exp(3j * math.pi / 8)
        if (a, b) == (psi, psi):
            return -1.0
        if (a, b) in ((sig, psi), (psi, sig)):
            return -1j
        return 1.0

    group = cyclic(2) if graded else cyclic(1)
    return build(name, group, labels, N, F, R)


def compact_dump(obj):
    """Indented JSON with every innermost list kept on one line."""
    text = json.dumps(obj, indent=1)
    return re.sub(r"\[\s*([^\[\]{}]*?)\s*\]",
                  lambda m: "[" + re.sub(r"\s*\n\s*", " ", m.group(1)) + "]", text) + "\n"


def main(out):
    os.makedirs(out, exist_ok=True)
    specs = {
        "trivial.json": build("trivial", cyclic(1), [lab("1", 0, 0, 1.0)], lambda a, b, c: True,
                              lambda *k: 1.0, lambda *k: 1.0),
        # semion: F^{sss}_s = -1 forces pivotal coefficient -1 for d_s = +1
        "vec_z2_semion.json": pointed(2, "Vec_Z2 semion", lambda a, b, c: -1.0 if a == b == c == 1 else 1.0,
                                      lambda a, b, c: 1j if a == b == 1 else 1.0,
                                      lambda a: -1.0 if a == 1 else 1.0),
        "vec_z2_symmetric.json": pointed(2, "Vec_Z2 symmetric", lambda a, b, c: 1.0, lambda a, b, c: 1.0,
                                         lambda a: 1.0),
        "vec_z4.json": pointed(4, "Vec_Z4 quadratic form i^(a^2)", lambda a, b, c: 1.0,
                               lambda a, b, c: 1j ** (a * b), lambda a: 1.0),
        "ising_trivialG.json": ising("Ising", False),
        "ising_z2crossed.json": ising("Ising Z2-crossed", True),
    }
    for fn, spec in specs.items():
        with open(os.path.join(out, fn), "w") as fh:
            fh.write(compact_dump(spec))
    algebras = {
        "algebra_unit.json": {"kind": "unit"},
        "algebra_1psi.json": {"kind": "group_algebra", "labels": ["1", "psi"]},
        "algebra_z4_boson.json": {"kind": "group_algebra", "labels": ["0", "2"]},
        "algebra_ind_unit.json": {"kind": "induced", "subgroup": ["e"], "base": {"kind": "unit"}},
    }
    for fn, alg in algebras.items():
        with open(os.path.join(out, fn), "w") as fh:
            json.dump(alg, fh, indent=1)
            fh.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "data"))
