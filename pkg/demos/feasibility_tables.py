"""Enumerate the numerically feasible parameter tuples for small lambda.

A tuple (lambda, v, k, r, b, c, d, ell, x) is numerically feasible when it
passes every counting identity, inequality and divisibility condition that
a flag-transitive point-imprimitive 2-design with an invariant partition
into d parts of size c would impose.  Feasibility is necessary, not
sufficient: some feasible tuples admit no design at all.
"""

from ftdesigns.feasibility import (
    bound_report,
    enumerate_lx,
    feasible_tuples,
    g_hyperbola_max,
    g_value,
)

for lam in (2, 3, 4, 5):
    print(f"lambda = {lam}")
    print("  admissible (ell, x) pairs:", enumerate_lx(lam))
    tuples = feasible_tuples(lam)
    print(f"  {len(tuples)} feasible tuples:")
    for t in tuples:
        print(
            "    v=%-5d k=%-3d r=%-4d b=%-5d c=%-3d d=%-3d ell=%d x=%d"
            % (t.v, t.k, t.r, t.b, t.c, t.d, t.ell, t.x)
        )
    br = bound_report(lam)
    print(
        "  bounds: k <= %d (first), k <= %d (main), v <= %d; observed max k = %d"
        % (br.k_first, br.k_main, br.v_main, max(t.k for t in tuples))
    )
    print()

print("The first bound comes from maximizing g(x,y) = (x+1)(y+1)(x+y+1)")
print("on the hyperbola xy = lambda-1.  For lambda = 5 (z = 4):")
value, argmax = g_hyperbola_max(4)
print("  max g = %d at %s; compare g(2,2) = %d off the corner" % (value, argmax, g_value(2, 2)))
