#!/usr/bin/env python3
"""Regenerate the newform fixtures in data/fixtures with PARI/GP (via cypari).

    pip install cypari
    python3 tools/fixtures/generate_fixtures.py [--out data/fixtures]

Newforms come from mfinit/mfeigenbasis; coefficients are rewritten in the
power basis of alpha = a_2 so that they match the printed expansions.
Elliptic curve fixtures use ellan. The hand-typed fixtures holding only the
printed coefficients (n <= 5) are checked against the same data.
"""
import argparse
import json
import os
import re
from fractions import Fraction

import cypari

pari = cypari.pari


def frac(x):
    x = pari(x)
    return Fraction(int(pari.numerator(x)), int(pari.denominator(x)))


def fstr(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def trim(v):
    while v and v[-1] == 0:
        v.pop()
    return v


def newform(weight, level, a2_minpoly, terms):
    mf = pari(f"mfinit([{level},{weight}],0)")
    target = pari(a2_minpoly)
    for F in pari.mfeigenbasis(mf):
        c = pari.mfcoefs(F, terms)
        a2 = c[2]
        if pari.minpoly(a2) != target:
            continue
        # old generator y written as a polynomial in alpha = a2 (PARI reuses the name y)
        back = pari.lift(pari.modreverse(a2))
        target_y = pari.subst(target, "x", "y")
        out = {}
        for n in range(1, terms + 1):
            lifted = pari.lift(c[n])
            if str(pari.type(lifted)) == "t_POL":
                poly = pari.lift(pari.Mod(pari.subst(lifted, "y", back), target_y))
                coeffs = [frac(pari.polcoef(poly, i, "y")) for i in range(int(pari.poldegree(target)))]
            else:
                coeffs = [frac(lifted)]
            out[n] = trim(coeffs)
        return out
    raise SystemExit(f"no newform of weight {weight}, level {level} with a_2 root of {a2_minpoly}")


def poly_coeffs(poly):
    p = pari(poly)
    return [int(pari.polcoef(p, i)) for i in range(int(pari.poldegree(p)) + 1)]


def write(path, label, weight, level, field_poly, an, signs=None, source=""):
    doc = {
        "label": label,
        "weight": str(weight),
        "level": str(level),
        "field_poly": [str(c) for c in field_poly],
        "non_cm": True,
        "an": {str(n): [fstr(q) for q in v] for n, v in sorted(an.items())},
        "source": source,
    }
    if signs:
        doc["steinberg_signs"] = {str(p): s for p, s in sorted(signs.items())}
    text = json.dumps(doc, indent=1)
    # one coefficient per line keeps diffs readable
    text = re.sub(r"\[\s*([^\[\]]*?)\s*\]", lambda m: "[" + " ".join(m.group(1).split()) + "]", text)
    with open(path, "w") as fh:
        fh.write(text + "\n")


def check_printed(path, full):
    with open(path) as fh:
        doc = json.load(fh)
    for key, coords in doc["an"].items():
        got = trim([Fraction(c) for c in coords])
        if got != full[int(key)]:
            raise SystemExit(f"{path}: a_{key} disagrees with PARI")


def elliptic(ainvs, terms):
    E = pari.ellinit(ainvs)
    N = int(pari.ellglobalred(E)[0])
    an = {n: trim([Fraction(int(a))]) for n, a in enumerate(pari.ellan(E, terms), start=1)}
    signs = {int(p): int(pari.ellap(E, p)) for p in pari.factor(N)[0]}
    return N, an, signs


def main():
    ap = argparse.ArgumentParser()
    here = os.path.dirname(os.path.abspath(__file__))
    ap.add_argument("--out", default=os.path.join(here, "..", "..", "data", "fixtures"))
    ap.add_argument("--terms", type=int, default=120)
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    src = f"PARI/GP {'.'.join(str(x) for x in pari('version()')[:3])} mfeigenbasis"

    f81 = "x^4 + 3*x^3 - 84*x^2 - 72*x + 792"
    an = newform(6, 81, f81, args.terms)
    write(os.path.join(args.out, "81-6c.json"), "81.6c", 6, 81, poly_coeffs(f81), an, source=src)
    check_printed(os.path.join(args.out, "81-6c-printed.json"), an)

    f11 = "x^2 - 2*x - 2"
    an = newform(4, 11, f11, args.terms)
    a11 = an[11]
    sign = 1 if a11 == [Fraction(11)] else -1
    write(os.path.join(args.out, "11-4a-full.json"), "11.4a", 4, 11, poly_coeffs(f11), an, {11: sign}, source=src)
    check_printed(os.path.join(args.out, "11-4a.json"), an)

    for label, ainvs in (("11a1", [0, -1, 1, -10, -20]), ("37a1", [0, 0, 1, -1, 0])):
        N, an, signs = elliptic(ainvs, args.terms)
        write(os.path.join(args.out, f"{label}.json"), label, 2, N, [0, 1], an, signs,
              source=f"PARI/GP {'.'.join(str(x) for x in pari('version()')[:3])} ellan")


if __name__ == "__main__":
    main()
