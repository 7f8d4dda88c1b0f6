#!/usr/bin/env python3
"""Regenerates the JSON group corpus in ../corpus.

Matrix groups act on the nonzero row vectors of F_q^n by v -> vM; points
are numbered 1.. in lexicographic order of the vectors.
"""

import itertools
import json
import pathlib
import sys

OUT = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def vectors(n, q):
    return [v for v in itertools.product(range(q), repeat=n) if any(v)]


def matmul(a, b, q):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) % q for j in range(n))
                 for i in range(n))


def det2(m, q):
    return (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % q


def cycles(images):
    seen, out = set(), []
    for i in range(len(images)):
        if i in seen or images[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = images[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def mat_perm(m, n, q):
    vs = vectors(n, q)
    index = {v: i for i, v in enumerate(vs)}
    img = []
    for v in vs:
        w = tuple(sum(v[k] * m[k][j] for k in range(n)) % q for j in range(n))
        img.append(index[w])
    return cycles(img)


def diag(*d):
    n = len(d)
    return tuple(tuple(d[i] if i == j else 0 for j in range(n)) for i in range(n))


def elem(n, i, j, c=1):
    return tuple(tuple((1 if r == s else 0) + (c if (r, s) == (i, j) else 0) for s in range(n))
                 for r in range(n))


def perm_matrix(sigma):
    n = len(sigma)
    return tuple(tuple(1 if sigma[r] == s else 0 for s in range(n)) for r in range(n))


def primitive_root(q):
    for g in range(2, q):
        if len({pow(g, k, q) for k in range(1, q)}) == q - 1:
            return g
    return 1


def write(name, data):
    path = OUT / f"{name}.json"
    path.write_text(json.dumps(data, indent=2) + "\n")


def gl2(q):
    z = primitive_root(q)
    P = lambda m: mat_perm(m, 2, q)
    w = perm_matrix((1, 0))
    gens = [P(diag(z, 1)), P(elem(2, 0, 1)), P(w)]
    sl2 = [P(elem(2, 0, 1)), P(elem(2, 1, 0))]
    torus = [P(diag(z, 1)), P(diag(1, z))]
    return {
        "name": f"GL2({q})",
        "degree": q * q - 1,
        "generators": gens,
        "subgroups": {
            "SL2": sl2,
            "B": torus + [P(elem(2, 0, 1))],
            "T": torus,
            "U": [P(elem(2, 0, 1))],
            "Z": [P(diag(z, z))],
        },
        "parabolics": [
            {"name": "B", "P": torus + [P(elem(2, 0, 1))], "L": torus, "U": [P(elem(2, 0, 1))],
             "normalizer": torus + [P(w)]},
            {"name": "G", "P": gens, "L": gens, "U": []},
        ],
    }


def gl32():
    P = lambda m: mat_perm(m, 3, 2)
    s1 = perm_matrix((1, 0, 2))
    s2 = perm_matrix((0, 2, 1))
    gens = [P(s1), P(s2), P(elem(3, 0, 1))]
    borel = [P(elem(3, 0, 1)), P(elem(3, 1, 2))]
    l21 = [P(s1), P(elem(3, 0, 1))]
    u21 = [P(elem(3, 0, 2)), P(elem(3, 1, 2))]
    l12 = [P(s2), P(elem(3, 1, 2))]
    u12 = [P(elem(3, 0, 1)), P(elem(3, 0, 2))]
    return {
        "name": "GL3(2)",
        "degree": 7,
        "generators": gens,
        "subgroups": {"B": borel, "L21": l21, "L12": l12},
        "parabolics": [
            {"name": "B", "P": borel, "L": [], "U": borel, "normalizer": [P(s1), P(s2)]},
            {"name": "P21", "P": l21 + u21, "L": l21, "U": u21},
            {"name": "P12", "P": l12 + u12, "L": l12, "U": u12},
            {"name": "G", "P": gens, "L": gens, "U": []},
        ],
    }


def sl23_c2():
    q = 3
    P = lambda m: mat_perm(m, 2, q)
    d = diag(1, 2)
    sl2 = [elem(2, 0, 1), elem(2, 1, 0)]

    def pair(m):
        if det2(m, q) == 1:
            return [P(m), "()"]
        return [P(matmul(m, d, q)), "(1 2)"]

    t = [diag(2, 1), diag(1, 2)]
    u = [elem(2, 0, 1)]
    w = perm_matrix((1, 0))
    return {
        "name": "SL2(3):C2",
        "semidirect": {
            "normal": {"degree": 8, "generators": [P(m) for m in sl2]},
            "acting": {"degree": 2, "generators": ["(1 2)"]},
            "action": [[P(matmul(matmul(d, m, q), d, q)) for m in sl2]],
        },
        "subgroups": {
            "G0": [pair(m) for m in sl2],
            "T": [pair(m) for m in t],
            "T0": [pair(diag(2, 2))],
        },
        "identity_component": [pair(m) for m in sl2],
        "parabolics": [
            {"name": "B", "P": [pair(m) for m in t + u], "L": [pair(m) for m in t],
             "U": [pair(m) for m in u], "normalizer": [pair(m) for m in t + [w]]},
            {"name": "B0", "P": [pair(m) for m in [diag(2, 2)] + u], "L": [pair(diag(2, 2))],
             "U": [pair(m) for m in u], "normalizer": [pair(m) for m in t + [w]]},
        ],
    }


def main():
    OUT.mkdir(exist_ok=True)
    write("s3", {"name": "S3", "degree": 3, "generators": ["(1 2)", "(1 2 3)"],
                 "subgroups": {"C3": ["(1 2 3)"], "C2": ["(1 2)"]}})
    write("s4", {"name": "S4", "degree": 4, "generators": ["(1 2)", "(1 2 3 4)"],
                 "subgroups": {"V4": ["(1 2)(3 4)", "(1 3)(2 4)"],
                               "A4": ["(1 2 3)", "(2 3 4)"],
                               "D8": ["(1 2 3 4)", "(1 3)"]}})
    write("s5", {"name": "S5", "degree": 5, "generators": ["(1 2)", "(1 2 3 4 5)"],
                 "subgroups": {"A5": ["(1 2 3)", "(1 2 3 4 5)"]}})
    write("a4", {"name": "A4", "degree": 4, "generators": ["(1 2 3)", "(1 2)(3 4)"],
                 "subgroups": {"V4": ["(1 2)(3 4)", "(1 3)(2 4)"]}})
    write("d8", {"name": "D8", "degree": 4, "generators": ["(1 2 3 4)", "(1 3)"],
                 "subgroups": {"Z": ["(1 3)(2 4)"], "C4": ["(1 2 3 4)"]}})
    write("q8", {"name": "Q8", "degree": 8,
                 "generators": ["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"],
                 "subgroups": {"Z": ["(1 3)(2 4)(5 7)(6 8)"]}})
    write("c6", {"name": "C6", "degree": 6, "generators": ["(1 2 3 4 5 6)"],
                 "subgroups": {"C3": ["(1 3 5)(2 4 6)"], "C2": ["(1 4)(2 5)(3 6)"]}})
    write("s3_wr_c2", {"name": "S3wrC2", "degree": 6,
                       "generators": ["(1 2)", "(1 2 3)", "(1 4)(2 5)(3 6)"],
                       "subgroups": {"base": ["(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)"]}})
    write("s3xs3_c2", {"name": "(S3xS3):C2", "semidirect": {
        "normal": {"degree": 6, "generators": ["(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)"]},
        "acting": {"degree": 2, "generators": ["(1 2)"]},
        "action": [["(4 5)", "(4 5 6)", "(1 2)", "(1 2 3)"]]},
        "subgroups": {"base": [["(1 2)", "()"], ["(1 2 3)", "()"], ["(4 5)", "()"], ["(4 5 6)", "()"]]}})
    write("c4_c2c2", {"name": "C4:(C2xC2)", "degree": 6,
                      "generators": ["(1 2 3 4)", "(1 3)", "(5 6)"],
                      "subgroups": {"N": ["(1 2 3 4)"], "Gamma": ["(1 2 3 4)", "(1 3)"],
                                    "Phi": ["(1 2 3 4)", "(5 6)"]}})
    write("gl2_3", gl2(3))
    write("gl2_5", gl2(5))
    write("gl3_2", gl32())
    write("sl2_3_c2", sl23_c2())
    return 0


if __name__ == "__main__":
    sys.exit(main())
