"""Tour of the statistics on permutations and Motzkin paths.

Run:  python3 demos/statistics_tour.py
"""

from crossnest import (
    PermClass,
    avoids_barred_3142,
    contains_321,
    cycle_string,
    enumerate_class,
    enumerate_paths,
    motzkin_number,
    one_line,
    path_statistics,
    perm_statistics,
    step_height,
)


def main() -> None:
    # A ten-letter permutation with a rich mix of statistics.
    sigma = (4, 6, 2, 9, 8, 1, 7, 3, 10, 5)
    r = perm_statistics(sigma)
    print("permutation:", one_line(sigma))
    print("cycles:     ", cycle_string(sigma))
    print(f"exc={r.exc} fp={r.fp} crs={r.crs} nes={r.nes} inv={r.inv}")
    print("identity check: inv == exc + crs + 2*nes:",
          r.inv == r.exc + r.crs + 2 * r.nes)
    print()

    # The same bookkeeping on a Motzkin path: heights and height sums.
    path = "uuhuudddudduuhdd"
    s = path_statistics(path)
    print("path:", path)
    print(f"hor={s.hor} up={s.up} down={s.down}")
    print(f"sh_u={s.sh_u} sh_h={s.sh_h} sh_d={s.sh_d} area={s.area}")
    print("step 7 starts at height", step_height(path, 7))
    print("step 14 starts at height", step_height(path, 14))
    print("area == 2*sh_d + sh_h - down:",
          s.area == 2 * s.sh_d + s.sh_h - s.down)
    print("area == 2*sh_u + sh_h + up:  ",
          s.area == 2 * s.sh_u + s.sh_h + s.up)
    print()

    # Pattern tests: classical 321 and the barred variant.
    print("contains 321:", contains_321(sigma))
    print("(3,1,2) avoids barred 3142:", avoids_barred_3142((3, 1, 2)))
    print()

    # Three restricted permutation families share the Motzkin counts.
    print("n  paths  I(4321)  I(3412)  S(321,barred-3142)  M_n")
    for n in range(8):
        counts = [
            sum(1 for _ in enumerate_paths(n)),
            sum(1 for _ in enumerate_class(n, PermClass.I4321)),
            sum(1 for _ in enumerate_class(n, PermClass.I3412)),
            sum(1 for _ in enumerate_class(n, PermClass.S321_B3142)),
        ]
        print(f"{n}  {counts[0]:5}  {counts[1]:7}  {counts[2]:7}"
              f"  {counts[3]:18}  {motzkin_number(n)}")


if __name__ == "__main__":
    main()
