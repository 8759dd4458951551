"""Automaton-described cones: verification, interpolation, and refutation.

A regular language whose evaluation is a positive cone forces the cone to
be (2|S|+1)-connected, interpolating every accepted word through shortest
accepting completions. The lattice and Klein-bottle cones are regular and
verify cleanly; on a free group no candidate survives, which this script
demonstrates statistically with random machines.
"""

import random

import conescope as cs


def main():
    z2 = cs.FreeAbelian(2)
    klein = cs.KleinBottle()
    zdfa = cs.z2_lex_cone_dfa()
    kdfa = cs.klein_cone_dfa()

    for name, dfa, model in (("Z^2 lex", zdfa, z2), ("Klein", kdfa, klein)):
        report = cs.verify_cone_dfa(dfa, model, 4, 16)
        qg = cs.quasigeodesic_check(dfa, model, 1, 0, 8)
        print(f"{name} automaton ({dfa.size()} states, "
              f"connectivity radius {cs.connectivity_radius(dfa)}): "
              f"cone check {report.verdict}, geodesic words {qg.verdict}")

    print("\ninterpolating an accepted word through the language:")
    word = z2.element("abbb").word
    path = cs.regular_interpolation(zdfa, z2, word)
    print("  x y^3 interpolates as " + " -> ".join(path.words())
          + f" (gaps {path.gaps()})")

    print("\nrandom 4-state machines over the free group alphabet:")
    rng = random.Random(20260808)
    outcomes = {"FAIL": 0, "UNKNOWN": 0, "PASS": 0}
    for _ in range(60):
        dfa = cs.random_dfa(rng)
        verdict = "UNKNOWN"
        for radius in (1, 2, 3, 4):
            verdict = cs.verify_cone_dfa(dfa, cs.FreeGroup(2), radius,
                                         4 * radius).verdict
            if verdict == "FAIL":
                break
        outcomes[verdict] += 1
    print(f"  {outcomes['FAIL']} refuted outright, {outcomes['UNKNOWN']} "
          f"never classify a full ball, {outcomes['PASS']} verified (expect 0)")


if __name__ == "__main__":
    main()
