#!/usr/bin/env python3
"""Brute-force reference values for the Garside tables used by the test suite.

Everything here is computed from first principles (monoid presentations and
set/permutation arithmetic) and shares no code with the C++ library.  The
numbers it prints are frozen into tests/test_garside.cpp and the acceptance
binary.

    python3 tests/oracles/garside_oracle.py
"""
from collections import deque
from itertools import permutations, product


def artin_classes(gens, relations, max_len):
    """Equivalence classes of positive words of length <= max_len."""
    cls = {}
    for n in range(max_len + 1):
        for w in product(gens, repeat=n):
            w = tuple(w)
            if w in cls:
                continue
            seen = {w}
            todo = deque([w])
            while todo:
                x = todo.popleft()
                for lhs, rhs in relations:
                    for a, b in ((lhs, rhs), (rhs, lhs)):
                        k = len(a)
                        for i in range(len(x) - k + 1):
                            if x[i:i + k] == a:
                                y = x[:i] + b + x[i + k:]
                                if y not in seen:
                                    seen.add(y)
                                    todo.append(y)
            key = min(seen)
            for x in seen:
                cls[x] = key
    return cls


def atilde2_table():
    rel = []
    for i, j in ((1, 2), (2, 3), (3, 1)):
        rel.append(((i, j, i), (j, i, j)))
    cls = artin_classes((1, 2, 3), rel, 5)
    # the simple elements: right divisors of the three elements s_i s_j s_i
    # and of s3 s1 s2 s1 and its rotations
    tops = [(1, 2, 1), (2, 3, 2), (3, 1, 3), (3, 1, 2, 1), (1, 2, 3, 2), (2, 3, 1, 3)]
    elems = {()}
    for t in tops:
        for k in range(len(t) + 1):
            for w, c in cls.items():
                if len(w) == k and any(cls[r + w] == cls[t] for r in product((1, 2, 3), repeat=len(t) - k)):
                    elems.add(c)
    elems = sorted(elems, key=lambda c: (len(c), c))

    def mul(u, v):
        w = cls.get(u + v)
        return w if w in elems else None

    return elems, mul


def free_abelian_table(n):
    elems = sorted((frozenset(s) for k in range(n + 1)
                    for s in __import__("itertools").combinations(range(n), k)),
                   key=lambda s: (len(s), sorted(s)))

    def mul(u, v):
        return u | v if not (u & v) else None

    return elems, mul


def braid_table(n):
    elems = sorted(permutations(range(n)), key=lambda p: (inv(p), p))

    def mul(u, v):
        w = tuple(u[v[i]] for i in range(n))
        return w if inv(w) == inv(u) + inv(v) else None

    return elems, mul


def inv(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def counts(elems, mul):
    unit = elems[0]
    S = [e for e in elems if e != unit]

    def m(u, v):
        if u == unit:
            return v
        if v == unit:
            return u
        return mul(u, v)

    def ldiv(a, b):
        return a == b or any(m(a, x) == b for x in S)

    alpha = [(u, v) for u in S for v in S if m(u, v) is not None]
    beta = [(u, v, w) for u in S for v in S for w in S
            if m(u, v) is not None and m(v, w) is not None and m(m(u, v), w) is None]
    fam = {k: 0 for k in ["A", "B", "C", "D", "E", "E'", "F", "F'", "G", "G'", "H", "I"]}
    for u, v, w in product(S, S, S):
        if m(u, v) is not None and m(v, w) is not None:
            fam["A" if m(m(u, v), w) is not None else "B"] += 1
    for u, v, w, x in product(S, S, S, S):
        uv, vw, wx = m(u, v), m(v, w), m(w, x)
        if uv is not None and vw is not None and wx is not None and m(vw, x) is None:
            fam["C" if m(uv, w) is not None else "D"] += 1
        # E/E': beta(u,v,w) then alpha(vw,x)
        if uv is not None and vw is not None and m(uv, w) is None and m(vw, x) is not None:
            fam["E'" if m(uv, m(w, x)) is not None else "E"] += 1 if wx is not None else 0
    for u, v, w, x, y in product(S, S, S, S, S):
        uv, vw, xy = m(u, v), m(v, w), m(x, y)
        if None in (uv, vw, xy) or m(uv, w) is not None:
            continue
        vwx = m(vw, x)
        if vwx is None or m(vwx, y) is not None:
            continue
        wxy = m(w, xy)
        uvwx = m(u, vwx)
        key = ("F" if wxy is not None else "G") + ("'" if uvwx is not None else "")
        fam[key] += 1
    # equal-source pairs of beta rules
    srcs = {}
    for u, v, w in beta:
        srcs.setdefault((u, m(v, w)), []).append(v)
    for (u, top), vs in srcs.items():
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                a, b = vs[i], vs[j]
                fam["H" if ldiv(a, b) or ldiv(b, a) else "I"] += 1
    return len(S), len(alpha), len(beta), fam


def main():
    cases = [("atilde2", atilde2_table())]
    for n in (1, 2, 3, 4):
        cases.append((f"free_abelian({n})", free_abelian_table(n)))
    for n in (2, 3):
        cases.append((f"braid({n})", braid_table(n)))
    for name, (elems, mul) in cases:
        ns, na, nb, fam = counts(elems, mul)
        total = sum(fam.values())
        print(f"{name}: |S\\1|={ns} alpha={na} beta={nb} "
              f"families={ {k: v for k, v in fam.items() if v} } total={total}")
    elems, mul = atilde2_table()
    print("atilde2 elements:", ["".join(f"s{i}" for i in e) or "1" for e in elems])
    prods = [(u, v, mul(u, v)) for u in elems[1:] for v in elems[1:] if mul(u, v) is not None]
    for u, v, w in prods:
        f = lambda e: "".join(f"s{i}" for i in e)
        print(f"  {f(u)} * {f(v)} = {f(w)}")


if __name__ == "__main__":
    main()
