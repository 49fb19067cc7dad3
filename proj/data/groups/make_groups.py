"""Regenerates the bundled group definitions (python3 make_groups.py)."""
import json
import math
import os

import numpy as np

HERE = os.path.dirname(os.path.abspath(__file__))


def fmt(x):
    x = float(x)
    if x == 0:
        return "0"
    if x == round(x) and abs(x) < 1e15:
        return str(int(round(x)))
    return "%.17g" % x


def boost(n, axis, length):
    M = np.eye(n + 1)
    c, s = math.cosh(length), math.sinh(length)
    M[axis, axis] = M[n, n] = c
    M[axis, n] = M[n, axis] = s
    return M


def sl2_to_so21(A):
    A = np.array(A, float)
    basis = [np.array([[1.0, 0], [0, -1]]), np.array([[0, 1.0], [1, 0]]), np.eye(2)]
    M = np.zeros((3, 3))
    for i, B in enumerate(basis):
        X = A @ B @ A.T
        M[:, i] = [(X[0, 0] - X[1, 1]) / 2, X[0, 1], (X[0, 0] + X[1, 1]) / 2]
    return M


def write(name, model, n, gens, labels, description):
    doc = {
        "name": name,
        "description": description,
        "model": model,
        "n": n,
        "free": True,
        "generators": [
            {"label": l, "matrix": [[fmt(v) for v in row] for row in np.asarray(g)]} for g, l in zip(gens, labels)
        ],
    }
    with open(os.path.join(HERE, name + ".json"), "w") as f:
        json.dump(doc, f, indent=2)
        f.write("\n")


write("cyclic", "real_hyperboloid", 2, [boost(2, 0, 2.0)], ["a"],
      "Cyclic group generated by a hyperbolic translation of length 2 in H^2; delta = 0.")
write("cyclic_h3", "real_hyperboloid", 3, [boost(3, 0, 1.0)], ["a"],
      "Cyclic group generated by a translation of length 1 in H^3.")
write("punctured_torus", "real_hyperboloid", 2,
      [sl2_to_so21([[1, 1], [1, 2]]), sl2_to_so21([[1, -1], [-1, 2]])], ["a", "b"],
      "Free lattice of finite covolume (once-punctured torus group) in SL(2,R), mapped to SO(2,1); delta = 1.")
for D in (2, 4, 6):
    T = lambda a: boost(2, 1, a)
    g1 = T(D / 2) @ boost(2, 0, 2.0) @ T(-D / 2)
    g2 = T(-D / 2) @ boost(2, 0, 2.0) @ T(D / 2)
    write("schottky_d%d" % D, "real_hyperboloid", 2, [g1, g2], ["a", "b"],
          "Two translations of length 2 along parallel axes at distance %d from each other." % D)
write("complex_cyclic", "complex_projective", 2, [boost(2, 0, 1.5)], ["a"],
      "Cyclic group generated by a translation of length 1.5 in complex hyperbolic 2-space.")
