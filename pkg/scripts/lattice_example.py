"""X_(6,2) against the integer span of the star-orbit of X_(4,4), n = 4.

    python3 scripts/lattice_example.py

Prints the orbit size, the membership answers, and the Smith invariants
of the orbit lattice with and without the target appended.
"""

from brauerlab.diagrams import enumerate_all
from brauerlab.exactla import smith_form
from brauerlab.xbasis import remark213_check, star_orbit, x_lambda_combination


def main():
    res = remark213_check()
    order = {d: i for i, d in enumerate(enumerate_all(4))}
    lattice = [v.coordinates(order) for v in star_orbit(x_lambda_combination((4, 4)))]
    target = x_lambda_combination((6, 2)).coordinates(order)
    before, after = smith_form(lattice), smith_form(lattice + [target])
    d = res["detail"]
    print(f"orbit size          {d['orbit_size']}")
    print(f"target terms        {d['target_terms']}")
    print(f"integer member      {d['integer_member']}")
    print(f"rational member     {d['rational_member']}")
    print(f"orbit invariants    {[v for v in before if v != 1]} (plus {before.count(1)} ones), rank {len(before)}")
    print(f"with target         {[v for v in after if v != 1]} (plus {after.count(1)} ones), rank {len(after)}")


if __name__ == "__main__":
    main()
