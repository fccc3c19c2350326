"""Smoke tests for the _wrep extension module."""

import json
import math
import sys

import _wrep as w


def check(cond, what):
    if not cond:
        print("FAIL:", what)
        sys.exit(1)
    print("ok:", what)


def main():
    check(w.relator_count(6) == 39, "relator count at n = 6")

    rep = w.gen("tilde-beta", 5, {"t": "2"})
    data = json.loads(rep)
    check(data["n"] == 5 and data["dim"] == 4, "gen produces a 4-dim representation")

    report = json.loads(w.verify(rep))
    check(report["relations"] == 25 and not report["failures"], "relations verified")

    check(w.irreducible(rep, "sigma"), "braid restriction irreducible at z = 2")

    other = w.gen("hat-beta", 5, {"t": "2"})
    check(w.equivalent(rep, other) == "no", "the two corank-1 families differ")
    check(w.equivalent(rep, rep) == "yes", "self equivalence")

    word = w.witness(rep)
    check(len(word.split()) > 0, "witness word produced")
    check(w.words_equal("s1 s2 s1", "s2 s1 s2", 4), "braid relation holds in the group")
    check(not w.words_equal("s1", "s2", 4), "distinct generators differ")
    check(w.normalize_word("a1 a1 s2", 4) == "s2", "word normalization")

    sym = w.gen("tilde-tau", 4, {"t": "sym", "q": "sym"})
    spec = w.specialize(sym, {"t": 2 + 0j, "q": 3 + 0j})
    check(json.loads(spec)["ring"] == "complex", "specialization lands in the numeric ring")

    cls = json.loads(w.identify(spec))
    check(cls["family"] == "tilde-tau", "identification recovers the family")
    check(abs(cls["z"][0] - 2) < 1e-8 and abs(cls["lambda"][0] - 3) < 1e-8,
          "identification recovers the parameters")

    psi = w.gen("psi3", 3, {"z": "0.7+0.2i", "lambda": "2.3"}, x_root=0)
    check(json.loads(w.verify(psi))["failures"] == [], "exceptional family verifies")

    found = json.loads(w.search(3, "tau", 2 + 0j, starts=25, seed=1))
    check(found["converged"] > 0, "search converges from random starts")
    for cluster in found["clusters"]:
        fam = cluster["family"]
        check(fam is not None and fam["family"] in ("tilde-tau", "psi3"),
              "every cluster is identified")

    try:
        w.identify(w.gen("hat-beta", 4, {"t": "3"}))
        check(False, "out-of-range input must raise")
    except w.OutOfClassifiedRange:
        check(True, "out-of-range input raises OutOfClassifiedRange")

    print("smoke tests passed")


if __name__ == "__main__":
    main()
