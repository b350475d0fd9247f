#!/usr/bin/env python3
"""Regenerates the bundled error-basis files under data/bases.

Each file lists one matrix per index-group coset: identity first, then the
generators, then the remaining cosets in breadth-first discovery order.
"""
import argparse
import pathlib

import numpy as np

W8 = np.exp(2j * np.pi * np.arange(8) / 8)


def monomial(perm, phases):
    """M[perm[j], j] = exp(2πi·phases[j]/8)."""
    d = len(perm)
    m = np.zeros((d, d), complex)
    for j in range(d):
        m[perm[j], j] = W8[phases[j] % 8]
    return m


def from_entries(d, entries):
    m = np.zeros((d, d), complex)
    for r, c, v in entries:
        m[r, c] = v
    return m


def key(m):
    return tuple(np.round(np.concatenate([m.real.ravel(), m.imag.ravel()]), 6) + 0.0)


def close(gens):
    ident = np.eye(gens[0].shape[0], dtype=complex)
    elems, seen, frontier = [ident], {key(ident)}, [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a @ g
                k = key(b)
                if k not in seen:
                    seen.add(k)
                    elems.append(b)
                    nxt.append(b)
        frontier = nxt
    return elems


def coset_reps(gens):
    elems = close(gens)
    center = [z for z in elems if all(np.allclose(z @ x, x @ z) for x in elems)]
    reps, covered = [], set()

    def take(m):
        if key(m) in covered:
            return
        reps.append(m)
        covered.update(key(m @ z) for z in center)

    for m in [elems[0], *gens, *elems]:
        take(m)
    return elems, center, reps


def fmt(z):
    re = 0.0 if abs(z.real) < 5e-16 else z.real
    im = 0.0 if abs(z.imag) < 5e-16 else z.imag
    return f"{re:.15g}{'-' if im < 0 else '+'}{abs(im):.15g}j"


def write(path, gens, names, note):
    elems, center, reps = coset_reps(gens)
    d = gens[0].shape[0]
    assert len(reps) == d * d, (len(reps), d)
    with open(path, "w") as f:
        f.write(f"# {note}\n")
        f.write(f"# |E| = {len(elems)}, |Z(E)| = {len(center)}\n")
        for i, n in enumerate(names, start=1):
            f.write(f"# block {i} = {n}\n")
        f.write(f"d {d}\nm 8\n")
        for k, m in enumerate(reps):
            f.write(f"# block {k}\n")
            for row in m:
                f.write(" ".join(fmt(z) for z in row) + "\n")
    print(f"{path}: |E|={len(elems)} |Z|={len(center)} blocks={len(reps)}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "bases"))
    out = pathlib.Path(ap.parse_args().out)
    out.mkdir(parents=True, exist_ok=True)

    # d = 4, index group C2 x D8: monomial generators over 8th roots of unity.
    r = monomial((2, 3, 0, 1), (1, 7, 5, 3))
    s = monomial((1, 0, 3, 2), (0, 0, 4, 4))
    t = monomial((0, 1, 2, 3), (0, 0, 4, 4))
    write(out / "d4_c2xd8.basis", [r, s, t], ["r", "s", "t"],
          "one-qudit error basis, d = 4, index group C2 x D8")

    # d = 8 direct-sum example: generators e1, e2, e3.
    i = 1j
    e1 = np.diag([-1, -1, 1, 1, -1, -1, 1, 1]).astype(complex)
    e2 = from_entries(8, [(0, 2, -1), (1, 3, -1), (2, 1, -i), (3, 0, -1),
                          (4, 7, -1), (5, 6, -i), (6, 4, i), (7, 5, i)])
    e3 = from_entries(8, [(0, 4, -1), (1, 5, -i), (2, 7, -1), (3, 6, -1),
                          (4, 0, -1), (5, 1, i), (6, 3, -1), (7, 2, -1)])
    write(out / "d8_translates.basis", [e1, e2, e3], ["e1", "e2", "e3"],
          "one-qudit error basis, d = 8, closure of e1, e2, e3")


if __name__ == "__main__":
    main()
