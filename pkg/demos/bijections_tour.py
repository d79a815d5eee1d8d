"""Tour of the three path-to-permutation bijections.

Run:  python3 demos/bijections_tour.py
"""

from crossnest import (
    head_tail_pairs,
    involution_shape_path,
    one_line,
    path_from_head_tail,
    path_statistics,
    perm_statistics,
    phi1,
    phi2,
    phi3,
    phi3_inverse,
    strip_decomposition,
)


def main() -> None:
    path = "uuhuudddudduuhdd"
    s = path_statistics(path)
    print("path:", path)
    print(f"hor={s.hor} up={s.up} sh_u={s.sh_u} sh_h={s.sh_h} area={s.area}")
    print()

    # phi1 matches each up step with the first later step at the same
    # height; its image avoids 4321 and doubles sh_u into crossings.
    w1 = phi1(path)
    r1 = perm_statistics(w1)
    print("phi1:", one_line(w1))
    print(f"  (fp, exc, crs, nes) = ({r1.fp}, {r1.exc}, {r1.crs}, {r1.nes})"
          f"  expected ({s.hor}, {s.up}, {2 * s.sh_u}, {s.sh_h})")

    # phi2 matches along tunnels instead; crossings vanish and everything
    # piles into nestings.
    w2 = phi2(path)
    r2 = perm_statistics(w2)
    print("phi2:", one_line(w2))
    print(f"  (fp, exc, crs, nes) = ({r2.fp}, {r2.exc}, {r2.crs}, {r2.nes})"
          f"  expected ({s.hor}, {s.up}, 0, {2 * s.sh_u + s.sh_h})")

    # Both are involutions and share one inverse: read the shape back off
    # the arc diagram.
    print("inverse recovers the path:",
          involution_shape_path(w1) == path == involution_shape_path(w2))
    print()

    # phi3 goes through head/tail pairs: peel strips off the path, then
    # rebuild a permutation from runs of adjacent transpositions.
    pairs = strip_decomposition(path)
    print("strip pairs:", pairs)
    w3 = phi3(path)
    r3 = perm_statistics(w3)
    print("phi3:", one_line(w3))
    print(f"  (exc, crs, nes) = ({r3.exc}, {r3.crs}, {r3.nes})"
          f"  expected ({s.up}, {s.sh_u + s.sh_h}, 0)")
    print(f"  inv = {r3.inv}  expected area - sh_u = {s.area - s.sh_u}")

    # The same pairs fall out of the permutation's own decomposition, and
    # both roundtrips close.
    print("head/tail pairs of phi3 image match:", head_tail_pairs(w3) == pairs)
    print("path_from_head_tail closes the loop:",
          path_from_head_tail(pairs, len(path)) == path)
    print("phi3_inverse closes the loop:", phi3_inverse(w3) == path)


if __name__ == "__main__":
    main()
