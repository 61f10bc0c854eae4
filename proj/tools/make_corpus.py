"""Regenerates data/corpus/*.json.

Coefficients are exact in binary64 (integers or dyadic rationals). Known roots
come from mpmath at 60 digits. "near" points sit at 1% of the nearest-root
separation from each root and are expected to be certified; "far" points are
equally spaced on a large circle and are typically not certified.
"""

import json
import math
import pathlib
from fractions import Fraction

import mpmath

mpmath.mp.dps = 60
OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "corpus"


def poly_from_roots(roots):
    """Low-to-high coefficients of prod (x - r), leading 1 dropped."""
    c = [(Fraction(1), Fraction(0))]
    for re, im in roots:
        nxt = [(Fraction(0), Fraction(0))] * (len(c) + 1)
        for k, (a, b) in enumerate(c):
            # x * c_k
            na, nb = nxt[k + 1]
            nxt[k + 1] = (na + a, nb + b)
            # -r * c_k
            na, nb = nxt[k]
            nxt[k] = (na - (re * a - im * b), nb - (re * b + im * a))
        c = nxt
    assert c[-1] == (1, 0)
    return c[:-1]


def exact_double(x):
    f = float(x)
    assert Fraction(f) == x, f"{x} is not a double"
    return f


def fmt(x):
    return repr(float(x))


def cpx(z):
    return [fmt(z.real), fmt(z.imag)]


def mp_roots(coeffs):
    hi_to_lo = [mpmath.mpc(1)] + [mpmath.mpc(float(a), float(b)) for a, b in reversed(coeffs)]
    return mpmath.polyroots(hi_to_lo, maxsteps=500, extraprec=400)


def near_point(roots, frac=0.01, phase=0.7):
    pts = []
    for i, r in enumerate(roots):
        d = min(abs(r - s) for j, s in enumerate(roots) if j != i)
        ang = phase + 2.399963 * i
        pts.append(complex(r) + frac * float(d) * complex(math.cos(ang), math.sin(ang)))
    return pts


def circle_point(n, radius, offset=0.4):
    return [radius * complex(math.cos(2 * math.pi * k / n + offset), math.sin(2 * math.pi * k / n + offset))
            for k in range(n)]


def instance(name, description, tags, coeffs, points, known_roots=True):
    coeffs = [(exact_double(a), exact_double(b)) for a, b in coeffs]
    n = len(coeffs)
    entry = {
        "name": name,
        "description": description,
        "tags": tags,
        "polynomial": {"degree": n, "coeffs": [[fmt(a), fmt(b)] for a, b in coeffs]},
    }
    entry["roots"] = [cpx(complex(r)) for r in mp_roots(coeffs)] if known_roots else None
    entry["initial_points"] = {k: [cpx(z) for z in v] for k, v in points.items()}
    return entry


def F(*x):
    return Fraction(*x)


def real_roots(*xs):
    return [(F(x), F(0)) for x in xs]


def build():
    out = []

    def simple(name, desc, tags, roots, extra=None, far_radius=None):
        coeffs = poly_from_roots(roots)
        rts = sorted(mp_roots(coeffs), key=lambda z: (float(z.real), float(z.imag)))
        pts = {"near": near_point(rts)}
        if far_radius is None:
            far_radius = 1 + max(math.hypot(float(a), float(b)) for a, b in coeffs)
        pts["far"] = circle_point(len(coeffs), far_radius)
        if extra:
            pts.update(extra)
        out.append(instance(name, desc, tags, coeffs, pts))

    simple("quadratic_unit", "x^2 - 1", ["certified", "real"], real_roots(1, -1),
           extra={"worked": [1.2, -0.8], "close": [1.05, -0.95], "uncertified": [2.0, 0.0]})

    c3 = [(F(-1), F(0)), (F(0), F(0)), (F(0), F(0))]
    rts = mp_roots(c3)
    out.append(instance("cubic_unity", "x^3 - 1", ["certified", "unity"], c3,
                        {"near": near_point(rts), "far": circle_point(3, 2.0)}))

    simple("cubic_123", "(x-1)(x-2)(x-3)", ["certified", "real"], real_roots(1, 2, 3))
    simple("wilkinson4", "(x-1)(x-2)(x-3)(x-4)", ["certified", "real", "wilkinson"],
           real_roots(1, 2, 3, 4))
    simple("gaussian5", "roots 1, -1, i, 2+i, -1-2i", ["certified", "complex"],
           [(F(1), F(0)), (F(-1), F(0)), (F(0), F(1)), (F(2), F(1)), (F(-1), F(-2))])

    cheb = [(F(-1, 32), F(0)), (F(0), F(0)), (F(9, 16), F(0)), (F(0), F(0)), (F(-3, 2), F(0)),
            (F(0), F(0))]
    rts = sorted(mp_roots(cheb), key=lambda z: float(z.real))
    out.append(instance("chebyshev6", "monic Chebyshev T6, 2^-5 T6(x)", ["certified", "real"], cheb,
                        {"near": near_point(rts), "far": circle_point(6, 2.0)}))

    simple("wilkinson8", "prod (x-k), k = 1..8", ["certified", "real", "wilkinson"],
           real_roots(*range(1, 9)), far_radius=12.0)

    u10 = [(F(-1), F(0))] + [(F(0), F(0))] * 9
    rts = mp_roots(u10)
    out.append(instance("unity10", "x^10 - 1", ["certified", "unity"], u10,
                        {"near": near_point(rts), "far": circle_point(10, 2.0)}))

    mixed = [(F(1), F(0)), (F(-1), F(0)), (F(2), F(0)), (F(-2), F(0)), (F(0), F(1)), (F(0), F(-1)),
             (F(0), F(2)), (F(0), F(-2)), (F(1), F(1)), (F(1), F(-1)), (F(-1), F(1)),
             (F(-1), F(-1))]
    simple("mixed12", "roots +-1, +-2, +-i, +-2i, +-1+-i", ["certified", "complex"], mixed,
           far_radius=4.0)

    eps = Fraction(1, 1024)
    cl3 = [(F(1), F(0)), (1 + eps, F(0)), (F(-1), F(0))]
    c = poly_from_roots(cl3)
    rts = sorted(mp_roots(c), key=lambda z: float(z.real))
    out.append(instance("cluster3", "roots 1, 1 + 2^-10, -1", ["clustered", "real"], c,
                        {"near": near_point(rts), "far": circle_point(3, 3.0),
                         "coarse": [0.99, 1.01, -1.0]}))

    cl5 = [(F(1, 2), F(0)), (F(1, 2) + eps, F(0)), (F(1, 2), eps), (F(-1), F(0)), (F(0), F(2))]
    c = poly_from_roots(cl5)
    rts = sorted(mp_roots(c), key=lambda z: (float(z.real), float(z.imag)))
    out.append(instance("cluster5", "three roots within 2^-10 of 1/2, plus -1 and 2i",
                        ["clustered", "complex"], c,
                        {"near": near_point(rts),
                         "coarse": [0.5 + 0.01j, 0.5 - 0.01j, 0.52, -1.0, 2j],
                         "far": circle_point(5, 4.0)}))

    d2 = poly_from_roots([(F(1), F(0)), (F(1), F(0))])
    out.append(instance("double_root2", "(x-1)^2", ["double-root"], d2,
                        {"near": [0.9, 1.1], "split": [1 + 0.1j, 1 - 0.1j], "far": circle_point(2, 3.0)},
                        known_roots=False))
    d3 = poly_from_roots([(F(1), F(0)), (F(1), F(0)), (F(-2), F(0))])
    out.append(instance("double_root3", "(x-1)^2 (x+2)", ["double-root"], d3,
                        {"near": [0.95, 1.05, -2.0], "far": circle_point(3, 5.0)},
                        known_roots=False))
    return out


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    for k, inst in enumerate(build()):
        path = OUT / f"{k:02d}_{inst['name']}.json"
        path.write_text(json.dumps(inst, indent=2) + "\n")
        print(path.name, inst["polynomial"]["degree"], sorted(inst["initial_points"]))


if __name__ == "__main__":
    main()
