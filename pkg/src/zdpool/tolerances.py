"""Numeric tolerances shared by the library and its test suite.

Grouped by what is being compared, not by module. Exact algebra checked
against floating-point arithmetic gets the tight bounds; anything that
crosses a Monte Carlo estimate gets the loose ones.
"""

# Structural facts that hold by construction: probability rows summing
# to one, simplex membership, clamps landing inside their interval.
STRUCTURAL_TOL = 1e-12

# Cross-formulation identities, e.g. the determinant route to a payoff
# agreeing with the stationary-vector route. Dominated by the linear
# solve's conditioning rather than by the formulas.
ANALYTIC_TOL = 1e-8

# Payoff-control equalities: a synthesized equalizer must pin its
# opponent's payoff to the target at this precision for every opponent.
CONTROL_TOL = 1e-10

# Seeded simulation averages against analytic expectations.
MONTE_CARLO_TOL = 0.01

# Guard below which an expected payoff counts as degenerate for ratio
# updates (division by it would amplify noise, not information).
DEGENERATE_PAYOFF_EPS = 1e-12
