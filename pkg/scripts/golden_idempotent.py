#!/usr/bin/env python3
"""Reproduce the benchmark (2,2) idempotent four independent ways and print it.

The path with contents (0, -1, 1, 0) fuses to

    1/(2d(d-1)) * (1 - s1) . d s1 s3 d . (1 - s1)

by the first procedure, by both variants of the free-parameter procedure and
by Jucys-Murphy interpolation.
"""

import json

from wba.algebra import element_to_json
from wba.diagrams import Shape
from wba.fusion import fusion_idempotent, second_fusion_idempotent
from wba.tableaux import parse_tableau
from wba.verify import interp_idempotent


def main():
    shape = Shape(2, 2)
    t = parse_tableau("L+1,1;L+2,1;L-2,1;L-1,1", shape)
    routes = {
        "first": fusion_idempotent(t),
        "second_fwd": second_fusion_idempotent(t),
        "second_mirror": second_fusion_idempotent(t, mirror=True),
        "interpolation": interp_idempotent(t),
    }
    reference = routes["first"]
    for name, element in routes.items():
        marker = "==" if element == reference else "!="
        print(f"{name:14s} {marker} first")
    print(json.dumps(element_to_json(reference), indent=2))


if __name__ == "__main__":
    main()
