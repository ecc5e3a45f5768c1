"""Expected canonical output of the worked examples, built term by term from the textbook
expansions with the values of configs/worked.json substituted. Independent of the C++ code:
it only knows the closed formulas and the canonical print order.

Usage: python3 worked_examples.py  -> prints  expression<TAB>expected  lines.
"""
from fractions import Fraction as F
from itertools import combinations

P = {(1, 2): F(1, 2), (1, 3): F(1, 3), (1, 4): F(1, 5), (2, 3): F(1, 7), (2, 4): F(1, 11), (3, 4): F(1, 13)}
ZETA = {(1, 2): F(2), (1, 3): F(3), (1, 4): F(5), (2, 3): F(7), (2, 4): F(11), (3, 4): F(13),
        (1, 2, 3): F(17), (1, 2, 3, 4): F(19)}


def p(i, j):
    return P[tuple(sorted((i, j)))]


def z(*idx):
    return ZETA.get(tuple(sorted(idx)), F(0))


def fmt_scalar(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fmt(terms):
    """terms: dict sorted-index-tuple -> Fraction. Descending grading, then ascending indices."""
    items = sorted(((k, c) for k, c in terms.items() if c != 0), key=lambda kc: (-len(kc[0]), kc[0]))
    if not items:
        return "0"
    out = []
    for n, (k, c) in enumerate(items):
        word = " v ".join(f"e{i}" for i in k)
        neg = c < 0
        mag = -c if neg else c
        if not k:
            body = fmt_scalar(mag)
        elif mag == 1:
            body = word
        else:
            body = f"{fmt_scalar(mag)} * {word}"
        if n == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def add(terms, key, c):
    key = tuple(sorted(key))
    terms[key] = terms.get(key, F(0)) + c


def examples():
    a, b, c, d = 1, 2, 3, 4
    rows = []

    t = {}
    add(t, (a, b), F(1)); add(t, (), p(a, b))
    rows.append(("e1 o e2", fmt(t)))

    t = {}
    add(t, (a, b, c), F(1)); add(t, (b,), p(a, c)); add(t, (a,), p(b, c))
    rows.append(("(e1 v e2) o e3", fmt(t)))

    t = {}
    add(t, (a, b, c), F(1)); add(t, (b,), p(a, c)); add(t, (c,), p(a, b))
    rows.append(("e1 o (e2 v e3)", fmt(t)))

    t = {}
    add(t, (a, b, c), F(1)); add(t, (c,), p(a, b)); add(t, (b,), p(a, c)); add(t, (a,), p(b, c))
    rows.append(("e1 o e2 o e3", fmt(t)))

    t = {}
    add(t, (a, b, c, d), F(1))
    for (x, y) in combinations((a, b, c, d), 2):
        rest = tuple(sorted(set((a, b, c, d)) - {x, y}))
        add(t, rest, p(x, y))
    add(t, (), p(a, b) * p(c, d) + p(a, c) * p(b, d) + p(b, c) * p(a, d))
    rows.append(("e1 o e2 o e3 o e4", fmt(t)))

    t = {}
    add(t, (a, b, c, d), F(1))
    add(t, (b, d), p(a, c)); add(t, (a, d), p(b, c)); add(t, (b, c), p(a, d)); add(t, (a, c), p(b, d))
    add(t, (), p(a, c) * p(b, d) + p(b, c) * p(a, d))
    rows.append(("(e1 v e2) o (e3 v e4)", fmt(t)))

    rows.append(("tbar(e1 v e2)", fmt({(): p(a, b) + z(a, b)})))
    rows.append(("tbar(e1 v e2 v e3)", fmt({(): z(a, b, c)})))
    val = (z(a, b, c, d)
           + z(a, b) * p(c, d) + z(a, c) * p(b, d) + z(a, d) * p(b, c)
           + z(b, c) * p(a, d) + z(b, d) * p(a, c) + z(c, d) * p(a, b)
           + p(a, b) * p(c, d) + p(a, c) * p(b, d) + p(a, d) * p(b, c))
    rows.append(("tbar(e1 v e2 v e3 v e4)", fmt({(): val})))
    return rows


if __name__ == "__main__":
    for expr, expected in examples():
        print(f"{expr}\t{expected}")
