"""Embedding classical preference models into the interval framework.

A fuzzy (additive) relation maps through y -> y - 1/2 and a ratio
relation through a -> log9(a); in both cases classical consistency of
the source coincides with interval consistency of the image with respect
to the crisp neutral [0, 0], and value scales can be computed in the
interval world and mapped back.
"""

from __future__ import annotations

from ivalue import NeutralElement, derive_scale
from ivalue.bridges import (
    FuzzyRelation,
    SaatyRelation,
    consistency_transfer_check,
    from_fuzzy,
    from_saaty,
    to_saaty,
)


def main() -> None:
    fuzzy = FuzzyRelation.from_crisp(
        [[0.5, 0.6, 0.7], [0.4, 0.5, 0.6], [0.3, 0.4, 0.5]]
    )
    print("fuzzy relation consistent:", consistency_transfer_check(fuzzy))
    Z = from_fuzzy(fuzzy)
    scale = derive_scale(Z, NeutralElement(0.0))
    print("value scale from the fuzzy relation:", [(v.lower, v.upper) for v in scale.values])

    good = SaatyRelation.from_crisp([[1, 3, 9], [1 / 3, 1, 3], [1 / 9, 1 / 3, 1]])
    bad = SaatyRelation.from_crisp([[1, 3, 8], [1 / 3, 1, 3], [1 / 8, 1 / 3, 1]])
    print("ratio relation 3*3=9 consistent:", consistency_transfer_check(good))
    print("ratio relation 3*3=8 consistent:", consistency_transfer_check(bad))

    image = from_saaty(good)
    print("log9 image of the consistent ratio relation:")
    for row in image.rows():
        print("  " + "  ".join(f"{v.lower:5.2f}" for v in row))
    back = to_saaty(image)
    print("round trip returns the original:", back.entries.allclose(good.entries, 1e-12))


if __name__ == "__main__":
    main()
